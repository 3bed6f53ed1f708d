//! Exact arithmetic on the max-plus semiring `R ∪ {-inf}` and on the
//! projective line `R ∪ {-inf, +inf}`.
//!
//! Every finite value is an arbitrary-precision rational in lowest terms, so
//! equality and order are decided exactly. The infinities are explicit enum
//! variants and never encoded as sentinel numbers.
//!
//! Text encoding (shared by the CLI and fixtures): an integer literal such as
//! `-3`, a fraction `p/q`, `-inf` for the semiring bottom and, for projective
//! points only, `+inf`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, TropError};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An element of the max-plus semiring. `NegInf` is the additive identity
/// and is absorbing for multiplication; `Finite(0)` is the multiplicative
/// identity. The derived order puts `NegInf` below every finite value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropScalar {
    NegInf,
    Finite(Rational),
}

impl TropScalar {
    pub fn int(n: i64) -> Self {
        TropScalar::Finite(rat(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        TropScalar::Finite(ratio(n, d))
    }

    /// Tropical one.
    pub fn one() -> Self {
        TropScalar::Finite(Rational::zero())
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_neg_inf()
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropScalar::Finite(q) => Some(q),
            TropScalar::NegInf => None,
        }
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn oplus(&self, other: &TropScalar) -> TropScalar {
        std::cmp::max(self, other).clone()
    }

    /// `a ⊗ b = a + b`, with `-inf` absorbing.
    pub fn otimes(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::NegInf,
        }
    }

    /// Extended subtraction `self - other`. Undefined only for `(-inf, -inf)`.
    pub fn ext_sub(&self, other: &TropScalar) -> Result<ProjPoint> {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => Ok(ProjPoint::Finite(a - b)),
            (TropScalar::Finite(_), TropScalar::NegInf) => Ok(ProjPoint::PosInf),
            (TropScalar::NegInf, TropScalar::Finite(_)) => Ok(ProjPoint::NegInf),
            (TropScalar::NegInf, TropScalar::NegInf) => Err(TropError::UndefinedDifference),
        }
    }

    /// Additive inverse on the projective line (`-(-inf) = +inf`).
    pub fn negated(&self) -> ProjPoint {
        match self {
            TropScalar::NegInf => ProjPoint::PosInf,
            TropScalar::Finite(q) => ProjPoint::Finite(-q),
        }
    }
}

pub fn t_add(a: &TropScalar, b: &TropScalar) -> TropScalar {
    a.oplus(b)
}

pub fn t_mul(a: &TropScalar, b: &TropScalar) -> TropScalar {
    a.otimes(b)
}

pub fn ext_sub(a: &TropScalar, b: &TropScalar) -> Result<ProjPoint> {
    a.ext_sub(b)
}

impl From<Rational> for TropScalar {
    fn from(q: Rational) -> Self {
        TropScalar::Finite(q)
    }
}

/// A point of the projective tropical line. Also used as the completed
/// carrier `R ∪ {-inf, +inf}` for residuals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ProjPoint {
    pub fn int(n: i64) -> Self {
        ProjPoint::Finite(rat(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ProjPoint::Finite(ratio(n, d))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ProjPoint::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ProjPoint::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn negated(&self) -> ProjPoint {
        match self {
            ProjPoint::NegInf => ProjPoint::PosInf,
            ProjPoint::Finite(q) => ProjPoint::Finite(-q),
            ProjPoint::PosInf => ProjPoint::NegInf,
        }
    }

    /// The same value as a semiring element; `None` for `+inf`.
    pub fn to_scalar(&self) -> Option<TropScalar> {
        match self {
            ProjPoint::NegInf => Some(TropScalar::NegInf),
            ProjPoint::Finite(q) => Some(TropScalar::Finite(q.clone())),
            ProjPoint::PosInf => None,
        }
    }
}

impl From<&TropScalar> for ProjPoint {
    fn from(s: &TropScalar) -> Self {
        match s {
            TropScalar::NegInf => ProjPoint::NegInf,
            TropScalar::Finite(q) => ProjPoint::Finite(q.clone()),
        }
    }
}

impl From<TropScalar> for ProjPoint {
    fn from(s: TropScalar) -> Self {
        ProjPoint::from(&s)
    }
}

/// Value of the distance `δ`: a nonnegative rational or `Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtDistance {
    Finite(Rational),
    Infinite,
}

impl ExtDistance {
    pub fn zero() -> Self {
        ExtDistance::Finite(Rational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtDistance::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtDistance::Finite(d) => Some(d),
            ExtDistance::Infinite => None,
        }
    }
}

impl std::ops::Add for &ExtDistance {
    type Output = ExtDistance;

    fn add(self, rhs: &ExtDistance) -> ExtDistance {
        match (self, rhs) {
            (ExtDistance::Finite(a), ExtDistance::Finite(b)) => ExtDistance::Finite(a + b),
            _ => ExtDistance::Infinite,
        }
    }
}

/// `|y - x|` on reals, `0` between equal infinities, `Infinite` otherwise.
pub fn delta(x: &ProjPoint, y: &ProjPoint) -> ExtDistance {
    match (x, y) {
        (ProjPoint::Finite(a), ProjPoint::Finite(b)) => ExtDistance::Finite((b - a).abs()),
        (ProjPoint::NegInf, ProjPoint::NegInf) | (ProjPoint::PosInf, ProjPoint::PosInf) => {
            ExtDistance::zero()
        }
        _ => ExtDistance::Infinite,
    }
}

// ---------------------------------------------------------------------------
// Text encoding

fn fmt_rational(q: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => f.write_str("-inf"),
            TropScalar::Finite(q) => fmt_rational(q, f),
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::NegInf => f.write_str("-inf"),
            ProjPoint::Finite(q) => fmt_rational(q, f),
            ProjPoint::PosInf => f.write_str("+inf"),
        }
    }
}

impl fmt::Display for ExtDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDistance::Finite(q) => fmt_rational(q, f),
            ExtDistance::Infinite => f.write_str("inf"),
        }
    }
}

/// Parses `[-]digits` or `[-]digits/digits` with a nonzero denominator.
/// Positions in errors are byte offsets into `token`.
pub fn parse_rational(token: &str) -> Result<Rational> {
    const EXPECTED: &str = "integer or fraction p/q";
    let bytes = token.as_bytes();
    let mut i = 0;
    if bytes.first() == Some(&b'-') {
        i = 1;
    }
    let num_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == num_start {
        return Err(TropError::parse(i, EXPECTED, token));
    }
    let numer: BigInt = token[..i]
        .parse()
        .map_err(|_| TropError::parse(0, EXPECTED, token))?;
    if i == bytes.len() {
        return Ok(Rational::from_integer(numer));
    }
    if bytes[i] != b'/' {
        return Err(TropError::parse(i, "digit or '/'", token));
    }
    i += 1;
    let den_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == den_start || i != bytes.len() {
        return Err(TropError::parse(i, "denominator digits", token));
    }
    let denom: BigInt = token[den_start..]
        .parse()
        .map_err(|_| TropError::parse(den_start, "denominator digits", token))?;
    if denom.is_zero() {
        return Err(TropError::parse(den_start, "nonzero denominator", token));
    }
    Ok(Rational::new(numer, denom))
}

impl FromStr for TropScalar {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "-inf" {
            return Ok(TropScalar::NegInf);
        }
        if t == "+inf" || t == "inf" {
            return Err(TropError::parse(
                0,
                "rational or -inf (+inf is not a semiring element)",
                t,
            ));
        }
        parse_rational(t).map(TropScalar::Finite)
    }
}

impl FromStr for ProjPoint {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(ProjPoint::NegInf),
            "+inf" => Ok(ProjPoint::PosInf),
            t => parse_rational(t).map(ProjPoint::Finite),
        }
    }
}

impl Serialize for TropScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TropScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Compares a semiring element with a point of the completed line.
pub(crate) fn cmp_scalar_point(a: &TropScalar, p: &ProjPoint) -> Ordering {
    ProjPoint::from(a).cmp(p)
}
