//! Coefficient rings: the integers, the rationals and prime fields.
//!
//! Every ring is a small value type implementing [`Ring`] (arithmetic on its
//! element type) and [`Euclidean`] (the division data the reduction
//! algorithms need). Algorithms are generic over these traits; the runtime
//! selector [`RingSpec`] is turned into a concrete ring with
//! [`with_ring!`](crate::with_ring).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Runtime description of a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField(u64),
}

/// Largest modulus accepted for `Zp:<p>`; keeps products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

impl RingSpec {
    /// Validating constructor for `Z_p`.
    pub fn prime_field(p: u64) -> Result<Self, LinalgError> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(RingSpec::PrimeField(p))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, RingSpec::Integers)
    }

    /// Characteristic of the ring (0 for Z and Q).
    pub fn characteristic(self) -> u64 {
        match self {
            RingSpec::PrimeField(p) => p,
            _ => 0,
        }
    }

    /// Symbol used when printing groups and vector spaces over this ring.
    pub fn symbol(self) -> String {
        match self {
            RingSpec::Integers => "Z".to_string(),
            RingSpec::Rationals => "Q".to_string(),
            RingSpec::PrimeField(p) => format!("Z_{p}"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => f.write_str("Z"),
            RingSpec::Rationals => f.write_str("Q"),
            RingSpec::PrimeField(p) => write!(f, "Zp:{p}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            other => {
                let p = other
                    .strip_prefix("Zp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| LinalgError::BadRingSyntax(other.to_string()))?;
                RingSpec::prime_field(p)
            }
        }
    }
}

impl TryFrom<String> for RingSpec {
    type Error = LinalgError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        value.parse()
    }
}

impl From<RingSpec> for String {
    fn from(value: RingSpec) -> Self {
        value.to_string()
    }
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Commutative ring arithmetic over an element type.
pub trait Ring: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static;

    fn spec(&self) -> RingSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(v))
    }

    /// `a + c * b`, the workhorse of every elimination step.
    fn add_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(c, b))
    }
}

/// Division structure of a Euclidean domain. Fields are the degenerate case
/// where every nonzero element is a unit of size 1.
pub trait Euclidean: Ring {
    /// Compares Euclidean sizes of two nonzero elements.
    fn cmp_size(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    /// A quotient `q` with `size(a - q b) < size(b)` (`b` nonzero).
    fn quotient(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Quotient leaving the canonical remainder (non-negative for Z, zero for fields).
    fn canonical_quotient(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// A unit `u` such that `u * a` is the canonical associate of `a`.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;

    /// `a / b` when `b` divides `a`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// The element as an integer, for rings that are Z; `None` for fields.
    fn integer_value(&self, a: &Self::Elem) -> Option<BigInt>;
}

/// The ring Z with arbitrary-precision elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

/// The field Q with arbitrary-precision rational elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

/// The prime field Z_p; elements are canonical representatives `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        RingSpec::prime_field(p).map(|_| PrimeField { p })
    }

    /// Skips the primality check; only for values already validated by [`RingSpec`].
    pub fn new_unchecked(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn inv(&self, a: u64) -> u64 {
        let mut result = 1u64;
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        result
    }
}

impl Ring for Integers {
    type Elem = BigInt;

    fn spec(&self) -> RingSpec {
        RingSpec::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
}

impl Euclidean for Integers {
    fn cmp_size(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude().cmp(b.magnitude())
    }

    fn quotient(&self, a: &BigInt, b: &BigInt) -> BigInt {
        // Round to nearest so remainders stay at most |b|/2. The floor
        // remainder has the sign of b, so a - (q+1)b is the other candidate.
        let (q, r) = a.div_mod_floor(b);
        let twice: BigInt = &r * 2;
        if twice.magnitude() > b.magnitude() {
            q + 1
        } else {
            q
        }
    }

    fn canonical_quotient(&self, a: &BigInt, b: &BigInt) -> BigInt {
        // Euclidean division with 0 <= r < |b|.
        let (q, r) = a.div_rem(b);
        if r.is_negative() {
            if b.is_positive() {
                q - 1
            } else {
                q + 1
            }
        } else {
            q
        }
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }

    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }

    fn integer_value(&self, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> RingSpec {
        RingSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
}

impl Euclidean for Rationals {
    fn cmp_size(&self, _a: &BigRational, _b: &BigRational) -> Ordering {
        Ordering::Equal
    }
    fn quotient(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
    fn canonical_quotient(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn normalizing_unit(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn div_exact(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a / b)
    }
    fn integer_value(&self, _a: &BigRational) -> Option<BigInt> {
        None
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn spec(&self) -> RingSpec {
        RingSpec::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits in u64")
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

impl Euclidean for PrimeField {
    fn cmp_size(&self, _a: &u64, _b: &u64) -> Ordering {
        Ordering::Equal
    }
    fn quotient(&self, a: &u64, b: &u64) -> u64 {
        self.mul(a, &self.inv(*b))
    }
    fn canonical_quotient(&self, a: &u64, b: &u64) -> u64 {
        self.quotient(a, b)
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn normalizing_unit(&self, a: &u64) -> u64 {
        self.inv(*a)
    }
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(self.quotient(a, b))
    }
    fn integer_value(&self, _a: &u64) -> Option<BigInt> {
        None
    }
}

/// Runs `$body` with `$r` bound to the concrete ring selected by a [`RingSpec`].
///
/// ```
/// use pathhom::{with_ring, RingSpec, Ring};
/// let spec = RingSpec::PrimeField(5);
/// let three = with_ring!(spec, |r| r.from_i64(8).to_string());
/// assert_eq!(three, "3");
/// ```
#[macro_export]
macro_rules! with_ring {
    ($spec:expr, |$r:ident| $body:expr) => {
        match $spec {
            $crate::RingSpec::Integers => {
                let $r = $crate::linalg::Integers;
                $body
            }
            $crate::RingSpec::Rationals => {
                let $r = $crate::linalg::Rationals;
                $body
            }
            $crate::RingSpec::PrimeField(p) => {
                let $r = $crate::linalg::PrimeField::new_unchecked(p);
                $body
            }
        }
    };
}
