//! Two-sided ideals of the 2x2 tropical matrix monoid.
//!
//! An ideal is the set of matrices whose projective column space embeds
//! isometrically into a fixed convex subset of the projective line. That set
//! is a closed convex set, an open interval of finite diameter, or the open
//! full line, and only its isometry type matters.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Result, TropError};
use crate::geometry::{proj_column_space, IsoType};
use crate::green::witness_z;
use crate::matrix::TropMatrix;
use crate::semiring::{parse_rational, ExtDistance, Rational, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealDescriptor {
    Closed(IsoType),
    /// Open interval of diameter `w > 0`.
    OpenFinite(Rational),
    /// The open interval `(-inf, +inf)`.
    OpenLine,
}

impl IdealDescriptor {
    pub fn open_finite(w: Rational) -> Result<Self> {
        if w.is_positive() {
            Ok(IdealDescriptor::OpenFinite(w))
        } else {
            Err(TropError::InvalidParameters(format!(
                "open interval diameter must be positive, got {w}"
            )))
        }
    }

    pub fn is_principal(&self) -> bool {
        matches!(self, IdealDescriptor::Closed(_))
    }

    /// Sort key: a band index, plus a `(width, closedness)` pair inside the
    /// band of finite-width descriptors.
    fn key(&self) -> (u8, Option<(&Rational, u8)>) {
        match self {
            IdealDescriptor::Closed(IsoType::Empty) => (0, None),
            IdealDescriptor::Closed(IsoType::Singleton) => (1, None),
            IdealDescriptor::OpenFinite(w) => (2, Some((w, 0))),
            IdealDescriptor::Closed(IsoType::FiniteInterval(d)) => (2, Some((d, 1))),
            IdealDescriptor::OpenLine => (3, None),
            IdealDescriptor::Closed(IsoType::HalfInfinite) => (4, None),
            IdealDescriptor::Closed(IsoType::FullLine) => (5, None),
        }
    }

    /// The least closed descriptor containing this one, and the J-class
    /// removed from it to get back here (if any).
    pub fn decompose(&self) -> (IdealDescriptor, Option<IsoType>) {
        match self {
            IdealDescriptor::Closed(_) => (self.clone(), None),
            IdealDescriptor::OpenFinite(w) => {
                let t = IsoType::FiniteInterval(w.clone());
                (IdealDescriptor::Closed(t.clone()), Some(t))
            }
            IdealDescriptor::OpenLine => (
                IdealDescriptor::Closed(IsoType::HalfInfinite),
                Some(IsoType::HalfInfinite),
            ),
        }
    }

    /// Whether matrices whose column space has type `t` lie in the ideal.
    pub fn admits(&self, t: &IsoType) -> bool {
        match self {
            IdealDescriptor::Closed(s) => t.embeds_in(s),
            IdealDescriptor::OpenFinite(w) => match t.diameter() {
                ExtDistance::Finite(d) => {
                    matches!(t, IsoType::Empty | IsoType::Singleton) || d < *w
                }
                ExtDistance::Infinite => false,
            },
            IdealDescriptor::OpenLine => t.diameter().is_finite(),
        }
    }
}

impl Ord for IdealDescriptor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for IdealDescriptor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IdealDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealDescriptor::Closed(t) => write!(f, "closed:{t}"),
            IdealDescriptor::OpenFinite(w) => write!(f, "open:{}", TropScalar::Finite(w.clone())),
            IdealDescriptor::OpenLine => f.write_str("openline"),
        }
    }
}

impl FromStr for IdealDescriptor {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let shift = |e: TropError, by: usize| match e {
            TropError::Parse {
                position,
                expected,
                found,
            } => TropError::Parse {
                position: position + by,
                expected,
                found,
            },
            other => other,
        };
        if t == "openline" {
            Ok(IdealDescriptor::OpenLine)
        } else if let Some(rest) = t.strip_prefix("closed:") {
            rest.parse::<IsoType>()
                .map(IdealDescriptor::Closed)
                .map_err(|e| shift(e, "closed:".len()))
        } else if let Some(rest) = t.strip_prefix("open:") {
            let w = parse_rational(rest).map_err(|e| shift(e, "open:".len()))?;
            IdealDescriptor::open_finite(w)
        } else {
            Err(TropError::parse(
                0,
                "closed:<type> | open:<w> | openline",
                t,
            ))
        }
    }
}

pub fn ideal_compare(d1: &IdealDescriptor, d2: &IdealDescriptor) -> Ordering {
    d1.cmp(d2)
}

pub fn ideal_contains(d: &IdealDescriptor, a: &TropMatrix) -> Result<bool> {
    Ok(d.admits(&proj_column_space(a)?.iso_type()))
}

pub fn principal_ideal_of(b: &TropMatrix) -> Result<IdealDescriptor> {
    Ok(IdealDescriptor::Closed(proj_column_space(b)?.iso_type()))
}

/// The ideal generated by `gs`: principal, generated by a generator of
/// largest column-space type.
pub fn ideal_from_generators(gs: &[TropMatrix]) -> Result<IdealDescriptor> {
    let mut best: Option<IsoType> = None;
    for g in gs {
        let t = proj_column_space(g)?.iso_type();
        best = match best {
            Some(b) if t.embeds_in(&b) => Some(b),
            _ => Some(t),
        };
    }
    best.map(IdealDescriptor::Closed)
        .ok_or(TropError::EmptyGenerators)
}

pub fn is_principal(d: &IdealDescriptor) -> bool {
    d.is_principal()
}

pub fn decompose(d: &IdealDescriptor) -> (IdealDescriptor, Option<IsoType>) {
    d.decompose()
}

/// For `smaller < larger`, a column-space type admitted by `larger` only.
pub fn separating_iso_type(smaller: &IdealDescriptor, larger: &IdealDescriptor) -> Option<IsoType> {
    if smaller >= larger {
        return None;
    }
    // widest finite diameter `smaller` might admit, if any
    let floor = match smaller {
        IdealDescriptor::Closed(IsoType::FiniteInterval(d)) | IdealDescriptor::OpenFinite(d) => {
            d.clone()
        }
        _ => Rational::zero(),
    };
    let t = match larger {
        IdealDescriptor::Closed(t) => t.clone(),
        IdealDescriptor::OpenFinite(w) => {
            IsoType::FiniteInterval((floor + w) / Rational::from_integer(2.into()))
        }
        IdealDescriptor::OpenLine => IsoType::FiniteInterval(floor + Rational::one()),
    };
    debug_assert!(larger.admits(&t) && !smaller.admits(&t));
    Some(t)
}

/// A 2x2 matrix whose projective column space has type `t`.
pub fn matrix_of_type(t: &IsoType) -> TropMatrix {
    let m = t.representative();
    witness_z(&m, &m).expect("a set is isometric to itself")
}
