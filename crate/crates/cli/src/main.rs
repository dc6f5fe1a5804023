use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pathhom::hochschild::{hochschild_cohomology_with, hochschild_homology_with, verify_hochschild_comparison_with};
use pathhom::io::{
    emit_cell_complex, emit_digraph, emit_path_complex, parse_digraph, parse_path_complex, parse_simplicial, to_json,
};
use pathhom::model::path_complex_of_digraph_capped;
use pathhom::product::{cartesian_product_with_separator, join, verify_kunneth_with, KunnethMode, DEFAULT_SEPARATOR};
use pathhom::realization::verify_realization_isomorphism_with;
use pathhom::suite::{kunneth_suite, realization_suite, SuiteConfig, SuiteResult};
use pathhom::{
    build_a_s, build_omega, build_realization, cubical_digraph, path_homology, ComparisonReport, Error, Execution, Integers,
    PathComplex, RingSpec,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "pathhom", version, about = "Path homology of digraphs and path complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coefficient ring: Z, Q or Zp:<prime>.
    #[arg(long, global = true, default_value = "Z")]
    ring: RingSpec,
    /// Highest path dimension considered.
    #[arg(long, global = true, default_value_t = 3)]
    top_dim: usize,
    /// Hochschild truncation degree.
    #[arg(long, global = true, default_value_t = 3)]
    max_deg: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    /// Cap on enumerated paths and on Hochschild (co)chain dimensions.
    #[arg(long, global = true, env = "PATHHOM_BUDGET", default_value_t = 300_000)]
    budget: u64,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run sequentially.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Realization,
    KunnethProduct,
    KunnethJoin,
    Hochschild,
}

#[derive(Subcommand)]
enum Command {
    /// Path homology of a digraph or path-complex file.
    Homology {
        input: PathBuf,
        /// Also print cohomology.
        #[arg(long)]
        cohomology: bool,
    },
    /// Path cohomology of a digraph or path-complex file.
    Cohomology { input: PathBuf },
    /// Geometric realization as a cell complex.
    Realize {
        input: PathBuf,
        /// Include corner coordinates for cells of dimension ≤ 3.
        #[arg(long)]
        coords: bool,
    },
    /// Cartesian product of two inputs.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, default_value = DEFAULT_SEPARATOR)]
        separator: String,
    },
    /// Join of two inputs with disjoint vertex labels.
    Join { left: PathBuf, right: PathBuf },
    /// Cubical digraph of a simplicial complex.
    Cubical { input: PathBuf },
    /// Hochschild homology and cohomology of the algebra of a simplicial complex.
    Hochschild { input: PathBuf },
    /// Run a verifier; exit status 1 on any mismatch.
    Check {
        #[arg(value_enum)]
        which: Check,
        inputs: Vec<PathBuf>,
        /// Random instances when no inputs are given.
        #[arg(long)]
        count: Option<usize>,
    },
}

impl Cli {
    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }

    fn emit(&self, text: &str) -> Result<(), Error> {
        match &self.out {
            Some(p) => fs::write(p, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

/// JSON input is a path complex; anything else is a digraph expanded to
/// `max_dim`.
fn load_complex(path: &Path, max_dim: usize, budget: u64) -> Result<PathComplex, Error> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        parse_path_complex(&text)
    } else {
        let g = parse_digraph(&text)?;
        path_complex_of_digraph_capped(&g, max_dim, usize::try_from(budget).unwrap_or(usize::MAX))
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::ComplexNotExact(_) | Error::InternalInconsistency(_) => 1,
        Error::Linalg(pathhom::linalg::LinalgError::NotPrime(_) | pathhom::linalg::LinalgError::BadRingSyntax(_)) => 2,
        Error::Linalg(_) => 1,
        _ => 2,
    }
}

fn report_out(cli: &Cli, reports: &[ComparisonReport]) -> Result<u8, Error> {
    let passed = reports.iter().all(ComparisonReport::passed);
    let text = match cli.format {
        Format::Json => to_json(&json!({ "passed": passed, "reports": reports })),
        Format::Text => reports.iter().map(ToString::to_string).collect(),
    };
    cli.emit(&text)?;
    Ok(if passed { 0 } else { 1 })
}

fn suite_out(cli: &Cli, suite: &SuiteResult) -> Result<u8, Error> {
    let passed = suite.passed();
    let text = match cli.format {
        Format::Json => to_json(suite),
        Format::Text => {
            let mut s = format!(
                "{} instances, {} failed, {} with closure notes (seed {})\n",
                suite.outcomes.len(),
                suite.failures().len(),
                suite.with_notes(),
                suite.config.seed
            );
            for f in suite.failures() {
                s.push_str(&format!("instance {} (seed {}):\n{}", f.instance, f.seed, f.report));
            }
            s
        }
    };
    cli.emit(&text)?;
    Ok(if passed { 0 } else { 1 })
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let exec = cli.exec();
    match &cli.command {
        Command::Homology { input, cohomology } => homology(cli, input, true, *cohomology),
        Command::Cohomology { input } => homology(cli, input, false, true),
        Command::Realize { input, coords } => {
            let pc = load_complex(input, cli.top_dim, cli.budget)?;
            pc.ensure_regular_valid()?;
            let top = cli.top_dim.min(pc.max_dim());
            let oc = build_omega(&Integers, &pc, top)?;
            let cc = build_realization(&pc, &oc);
            let counts: Vec<String> = cc.counts().iter().map(ToString::to_string).collect();
            match cli.format {
                Format::Json => cli.emit(&emit_cell_complex(&cc, *coords))?,
                Format::Text => {
                    println!("cells: {}", counts.join(", "));
                    for d in &cc.diagnostics {
                        println!("closure: {} (dim {}) required by {}", d.path, d.dim, d.required_by);
                    }
                    if let Some(p) = &cli.out {
                        fs::write(p, emit_cell_complex(&cc, *coords))?;
                    }
                }
            }
            Ok(0)
        }
        Command::Product { left, right, separator } => {
            let px = load_complex(left, cli.top_dim, cli.budget)?;
            let py = load_complex(right, cli.top_dim, cli.budget)?;
            cli.emit(&emit_path_complex(&cartesian_product_with_separator(&px, &py, Some(cli.top_dim), separator)?))?;
            Ok(0)
        }
        Command::Join { left, right } => {
            let px = load_complex(left, cli.top_dim, cli.budget)?;
            let py = load_complex(right, cli.top_dim, cli.budget)?;
            cli.emit(&emit_path_complex(&join(&px, &py, Some(cli.top_dim))?))?;
            Ok(0)
        }
        Command::Cubical { input } => {
            let s = parse_simplicial(&read(input)?)?;
            cli.emit(&emit_digraph(&cubical_digraph(&s)))?;
            Ok(0)
        }
        Command::Hochschild { input } => {
            let s = parse_simplicial(&read(input)?)?;
            let a = build_a_s(&s);
            let budget = u128::from(cli.budget);
            let hh = hochschild_homology_with(&a, cli.max_deg, cli.ring, budget, exec)?;
            let hc = hochschild_cohomology_with(&a, cli.max_deg, cli.ring, budget, exec)?;
            let text = match cli.format {
                Format::Json => to_json(&json!({ "algebra_dim": a.dim(), "homology": hh, "cohomology": hc })),
                Format::Text => {
                    let hh = hh.to_string().replace("H_", "HH_");
                    let hc = hc.to_string().replace("H^", "HH^");
                    format!("dim A = {}\n{hh}\n{hc}\n", a.dim())
                }
            };
            cli.emit(&text)?;
            Ok(0)
        }
        Command::Check { which, inputs, count } => check(cli, *which, inputs, *count),
    }
}

fn homology(cli: &Cli, input: &Path, with_h: bool, with_c: bool) -> Result<u8, Error> {
    let pc = load_complex(input, cli.top_dim + 1, cli.budget)?;
    pc.ensure_regular_valid()?;
    let (h, c) = path_homology(&pc, cli.ring, cli.top_dim, cli.exec())?;
    let text = match cli.format {
        Format::Json => {
            let mut v = serde_json::Map::new();
            if with_h {
                v.insert("homology".into(), serde_json::to_value(&h)?);
            }
            if with_c {
                v.insert("cohomology".into(), serde_json::to_value(&c)?);
            }
            to_json(&v)
        }
        Format::Text => {
            let mut s = String::new();
            if with_h {
                s.push_str(&format!("{h}\n"));
            }
            if with_c {
                s.push_str(&format!("{c}\n"));
            }
            s
        }
    };
    cli.emit(&text)?;
    Ok(0)
}

fn check(cli: &Cli, which: Check, inputs: &[PathBuf], count: Option<usize>) -> Result<u8, Error> {
    let exec = cli.exec();
    let rings = [cli.ring];
    match which {
        Check::Realization if inputs.is_empty() => {
            let cfg = SuiteConfig { seed: cli.seed, count: count.unwrap_or(200), top_dim: cli.top_dim, ..SuiteConfig::default() };
            suite_out(cli, &realization_suite(&cfg, &rings, exec)?)
        }
        Check::Realization => {
            let mut reports = Vec::new();
            for p in inputs {
                let pc = load_complex(p, cli.top_dim, cli.budget)?;
                reports.push(verify_realization_isomorphism_with(&pc, cli.ring, cli.top_dim, exec)?);
            }
            report_out(cli, &reports)
        }
        Check::KunnethProduct | Check::KunnethJoin => {
            let mode = if which == Check::KunnethProduct { KunnethMode::Product } else { KunnethMode::Join };
            match inputs {
                [] => {
                    let cfg = SuiteConfig {
                        seed: cli.seed,
                        count: count.unwrap_or(5),
                        max_vertices: 4,
                        top_dim: cli.top_dim,
                        ..SuiteConfig::default()
                    };
                    suite_out(cli, &kunneth_suite(&cfg, mode, &rings, exec)?)
                }
                [a, b] => {
                    let px = load_complex(a, cli.top_dim, cli.budget)?;
                    let py = load_complex(b, cli.top_dim, cli.budget)?;
                    report_out(cli, &[verify_kunneth_with(&px, &py, cli.ring, cli.top_dim, mode, exec)?])
                }
                _ => Err(Error::Invalid("Künneth checks take two inputs (or none for a random suite)".into())),
            }
        }
        Check::Hochschild => {
            let [input] = inputs else {
                return Err(Error::Invalid("the hochschild check takes one simplicial-complex file".into()));
            };
            let text = read(input)?;
            if !text.trim_start().starts_with(['[', '{']) || text.contains("\"paths\"") {
                return Err(Error::Unsupported(
                    "the Hochschild comparison needs a simplicial complex; general path complexes have no triangulation here"
                        .into(),
                ));
            }
            let s = parse_simplicial(&text)?;
            let r = verify_hochschild_comparison_with(&s, cli.ring, cli.max_deg, u128::from(cli.budget), exec)?;
            report_out(cli, &[r])
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
