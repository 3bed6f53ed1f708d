//! Idempotents, regularity and maximal subgroups.
//!
//! The 2x2 idempotents are exactly
//!
//! ```text
//! [[0, x], [y, x+y]]   [[0, x], [y, 0]]   [[x+y, x], [y, 0]]   zero
//! ```
//!
//! with `x, y ∈ R ∪ {-inf}` and `x + y <= 0`. The H-class `R_M ∩ L_N`
//! contains an idempotent iff `M = {x}`, `N = {y}` with `{x, y} != {-inf, +inf}`,
//! or `M = -N` and `N` is not a point. Its group is then trivial, `R`,
//! `R x S2` or `R wr S2` depending on the shape of `M`.

use std::fmt;

use crate::error::{Result, TropError};
use crate::geometry::{in_column_space, proj_column_space, proj_row_space, ClosedConvexSet};
use crate::matrix::{left_residual, right_residual_completed, TropMatrix, TropVector};
use crate::semiring::{ProjPoint, Rational, TropScalar};

/// Which of the four idempotent families a matrix belongs to, with its
/// parameters. All parameters satisfy `x + y <= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdempotentForm {
    /// `[[0, x], [y, x+y]]`
    Upper {
        x: TropScalar,
        y: TropScalar,
    },
    /// `[[0, x], [y, 0]]`
    Diagonal {
        x: TropScalar,
        y: TropScalar,
    },
    /// `[[x+y, x], [y, 0]]`
    Lower {
        x: TropScalar,
        y: TropScalar,
    },
    Zero,
}

impl IdempotentForm {
    pub fn matrix(&self) -> TropMatrix {
        let one = TropScalar::one;
        match self {
            IdempotentForm::Upper { x, y } => {
                TropMatrix::two(one(), x.clone(), y.clone(), x.otimes(y))
            }
            IdempotentForm::Diagonal { x, y } => {
                TropMatrix::two(one(), x.clone(), y.clone(), one())
            }
            IdempotentForm::Lower { x, y } => {
                TropMatrix::two(x.otimes(y), x.clone(), y.clone(), one())
            }
            IdempotentForm::Zero => TropMatrix::zero(2),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            IdempotentForm::Upper { .. } => "upper",
            IdempotentForm::Diagonal { .. } => "diagonal",
            IdempotentForm::Lower { .. } => "lower",
            IdempotentForm::Zero => "zero",
        }
    }

    pub fn params(&self) -> Option<(&TropScalar, &TropScalar)> {
        match self {
            IdempotentForm::Upper { x, y }
            | IdempotentForm::Diagonal { x, y }
            | IdempotentForm::Lower { x, y } => Some((x, y)),
            IdempotentForm::Zero => None,
        }
    }
}

pub fn is_idempotent(a: &TropMatrix) -> bool {
    a.mul(a).is_ok_and(|sq| sq == *a)
}

/// Classifies a 2x2 idempotent. Overlapping families resolve in the order
/// zero, diagonal, upper, lower.
pub fn idempotent_form(e: &TropMatrix) -> Result<IdempotentForm> {
    e.require_two_by_two()?;
    if !is_idempotent(e) {
        return Err(TropError::NotIdempotent);
    }
    if e.is_zero() {
        return Ok(IdempotentForm::Zero);
    }
    let one = TropScalar::one();
    let (a, b, c, d) = (e.get(0, 0), e.get(0, 1), e.get(1, 0), e.get(1, 1));
    let (x, y) = (b.clone(), c.clone());
    let bc = b.otimes(c);
    if *a == one && *d == one {
        Ok(IdempotentForm::Diagonal { x, y })
    } else if *a == one && *d == bc {
        Ok(IdempotentForm::Upper { x, y })
    } else if *d == one && *a == bc {
        Ok(IdempotentForm::Lower { x, y })
    } else {
        Err(TropError::VerificationFailed(format!(
            "idempotent {e} matches no family"
        )))
    }
}

/// An idempotent in `R_M ∩ L_N`, if the H-class has one.
pub fn idempotent_in_h(m: &ClosedConvexSet, n: &ClosedConvexSet) -> Option<TropMatrix> {
    let one = TropScalar::one;
    let e = match (m, n) {
        (ClosedConvexSet::Singleton(x), ClosedConvexSet::Singleton(y)) => {
            let excluded = (*x == ProjPoint::NegInf && *y == ProjPoint::PosInf)
                || (*x == ProjPoint::PosInf && *y == ProjPoint::NegInf);
            if excluded {
                return None;
            }
            let upper = match (x.to_scalar(), y.to_scalar()) {
                (Some(xs), Some(ys)) if xs.otimes(&ys) <= one() => Some(TropMatrix::two(
                    one(),
                    ys.clone(),
                    xs.clone(),
                    xs.otimes(&ys),
                )),
                _ => None,
            };
            upper.unwrap_or_else(|| {
                // x + y >= 0, so neither is -inf
                let nx = x.negated().to_scalar().expect("x is not -inf");
                let ny = y.negated().to_scalar().expect("y is not -inf");
                TropMatrix::two(nx.otimes(&ny), nx, ny, one())
            })
        }
        (ClosedConvexSet::Singleton(_), _) | (_, ClosedConvexSet::Singleton(_)) => return None,
        _ if *m != n.negated() => return None,
        (ClosedConvexSet::Empty, _) => TropMatrix::zero(2),
        (ClosedConvexSet::Interval { lo, hi }, _) => {
            // [[0, -hi], [lo, 0]]; lo < hi keeps -hi and lo off +inf
            let neg_hi = hi
                .negated()
                .to_scalar()
                .expect("upper endpoint is not -inf");
            let lo = lo.to_scalar().expect("lower endpoint is not +inf");
            TropMatrix::two(one(), neg_hi, lo, one())
        }
    };
    debug_assert!(is_idempotent(&e));
    debug_assert_eq!(proj_column_space(&e).ok().as_ref(), Some(m));
    debug_assert_eq!(proj_row_space(&e).ok().as_ref(), Some(n));
    Some(e)
}

/// `Y` with `A ⊗ Y ⊗ A = A`.
///
/// The candidate is the greatest `Y` with `A Y A <= A`, i.e. `(A \ A) / A`,
/// with unconstrained (`+inf`) entries set to `0`. It is checked exactly
/// before being returned.
pub fn regular_witness(a: &TropMatrix) -> Result<TropMatrix> {
    a.require_two_by_two()?;
    let inner = left_residual(a, a)?;
    let y = right_residual_completed(&inner, a)?.materialize();
    if a.mul(&y)?.mul(a)? != *a {
        return Err(TropError::VerificationFailed(format!(
            "A Y A != A for A = {a}, Y = {y}"
        )));
    }
    Ok(y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupType {
    Trivial,
    Reals,
    RealsTimesS2,
    RealsWreathS2,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::Trivial => "trivial",
            GroupType::Reals => "reals",
            GroupType::RealsTimesS2 => "reals-times-s2",
            GroupType::RealsWreathS2 => "reals-wreath-s2",
        })
    }
}

/// Isomorphism type of the maximal subgroup `R_M ∩ L_N`.
pub fn group_type_of_h(m: &ClosedConvexSet, n: &ClosedConvexSet) -> Result<GroupType> {
    if idempotent_in_h(m, n).is_none() {
        return Err(TropError::NoIdempotent(m.to_string(), n.to_string()));
    }
    Ok(match m {
        ClosedConvexSet::Empty => GroupType::Trivial,
        ClosedConvexSet::Singleton(_) => GroupType::Reals,
        ClosedConvexSet::Interval { lo, hi } => match (lo.is_finite(), hi.is_finite()) {
            (true, true) => GroupType::RealsTimesS2,
            (false, false) => GroupType::RealsWreathS2,
            _ => GroupType::Reals,
        },
    })
}

/// One-parameter families of group elements for the representative H-classes
/// `{-inf}`, `[x, y]` (paired with `[-y, -x]`) and `[x, +inf]` (paired with
/// `[-inf, -x]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupFamily {
    /// `W_a = [[a, -inf], [-inf, -inf]]`
    W,
    /// `X_a = [[a, a-y], [a+x, a]]`
    X { x: Rational, y: Rational },
    /// `Y_a = [[a, a-x], [a+y, a]]`
    Y { x: Rational, y: Rational },
    /// `Z_a = [[a, -inf], [a+x, a]]`
    Z { x: Rational },
}

impl SubgroupFamily {
    pub fn name(&self) -> &'static str {
        match self {
            SubgroupFamily::W => "W",
            SubgroupFamily::X { .. } => "X",
            SubgroupFamily::Y { .. } => "Y",
            SubgroupFamily::Z { .. } => "Z",
        }
    }

    /// The families spanning `R_M ∩ L_N` when `(M, N)` is one of the
    /// representative pairs above.
    pub fn for_h_class(m: &ClosedConvexSet, n: &ClosedConvexSet) -> Option<Vec<SubgroupFamily>> {
        if *m == ClosedConvexSet::Singleton(ProjPoint::NegInf) && m == n {
            return Some(vec![SubgroupFamily::W]);
        }
        if *n != m.negated() {
            return None;
        }
        match m {
            ClosedConvexSet::Interval {
                lo: ProjPoint::Finite(x),
                hi: ProjPoint::Finite(y),
            } => Some(vec![
                SubgroupFamily::X {
                    x: x.clone(),
                    y: y.clone(),
                },
                SubgroupFamily::Y {
                    x: x.clone(),
                    y: y.clone(),
                },
            ]),
            ClosedConvexSet::Interval {
                lo: ProjPoint::Finite(x),
                hi: ProjPoint::PosInf,
            } => Some(vec![SubgroupFamily::Z { x: x.clone() }]),
            _ => None,
        }
    }
}

pub fn subgroup_element(family: &SubgroupFamily, a: &Rational) -> Result<TropMatrix> {
    let f = |q: Rational| TropScalar::Finite(q);
    let ni = TropScalar::NegInf;
    Ok(match family {
        SubgroupFamily::W => TropMatrix::two(f(a.clone()), ni.clone(), ni.clone(), ni),
        SubgroupFamily::X { x, y } | SubgroupFamily::Y { x, y } if x >= y => {
            return Err(TropError::InvalidParameters(format!(
                "interval endpoints must satisfy x < y, got [{}, {}]",
                f(x.clone()),
                f(y.clone())
            )))
        }
        SubgroupFamily::X { x, y } => {
            TropMatrix::two(f(a.clone()), f(a - y), f(a + x), f(a.clone()))
        }
        SubgroupFamily::Y { x, y } => {
            TropMatrix::two(f(a.clone()), f(a - x), f(a + y), f(a.clone()))
        }
        SubgroupFamily::Z { x } => TropMatrix::two(f(a.clone()), ni, f(a + x), f(a.clone())),
    })
}

/// Whether the idempotent `E` fixes `v`, a vector of its column space.
pub fn fixes_image(e: &TropMatrix, v: &TropVector) -> Result<bool> {
    if !is_idempotent(e) {
        return Err(TropError::NotIdempotent);
    }
    if !in_column_space(v, e)? {
        return Err(TropError::NotInImage);
    }
    Ok(e.apply(v)? == *v)
}

/// `(x - y) / 2`, the parameter of the order-two element `Y_z`.
pub fn involution_parameter(x: &Rational, y: &Rational) -> Rational {
    (x - y) / Rational::from_integer(2.into())
}
