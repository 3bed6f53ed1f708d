//! Green's preorders and equivalences on 2x2 max-plus matrices.
//!
//! * `A <=_R B` iff `PC(A) ⊆ PC(B)`, and dually `A <=_L B` iff `PR(A) ⊆ PR(B)`.
//! * `A <=_J B` iff `PC(A)` embeds isometrically in `PC(B)`.
//! * `D = J`, and both hold iff `PC(A)` and `PC(B)` are isometric.
//!
//! Decisions are exact; the constructive side (witness matrices and
//! factorizations) is verified before it is returned.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, TropError};
use crate::geometry::{
    embedding_image, embeds_isometrically, isometric, proj_column_space, proj_row_space,
    ClosedConvexSet,
};
use crate::matrix::{solve_left, solve_right, TropMatrix};
use crate::semiring::{ProjPoint, Rational, TropScalar};

/// The eight shapes an R-class can take, one per 2-generated convex cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RClassForm {
    ZeroClass,
    SingletonNegInf,
    SingletonFinite(Rational),
    SingletonPosInf,
    /// `[-inf, y]`
    HalfLow(Rational),
    /// `[x, y]` with `x < y`
    FiniteInterval(Rational, Rational),
    /// `[y, +inf]`
    HalfHigh(Rational),
    FullLine,
}

impl RClassForm {
    /// The projective column space shared by the class.
    pub fn to_set(&self) -> ClosedConvexSet {
        use ClosedConvexSet as C;
        let f = |q: &Rational| ProjPoint::Finite(q.clone());
        match self {
            RClassForm::ZeroClass => C::Empty,
            RClassForm::SingletonNegInf => C::Singleton(ProjPoint::NegInf),
            RClassForm::SingletonFinite(y) => C::Singleton(f(y)),
            RClassForm::SingletonPosInf => C::Singleton(ProjPoint::PosInf),
            RClassForm::HalfLow(y) => C::closed(ProjPoint::NegInf, f(y)),
            RClassForm::FiniteInterval(x, y) => C::closed(f(x), f(y)),
            RClassForm::HalfHigh(y) => C::closed(f(y), ProjPoint::PosInf),
            RClassForm::FullLine => C::full_line(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RClassForm::ZeroClass => "zero",
            RClassForm::SingletonNegInf => "point-neginf",
            RClassForm::SingletonFinite(_) => "point",
            RClassForm::SingletonPosInf => "point-posinf",
            RClassForm::HalfLow(_) => "half-low",
            RClassForm::FiniteInterval(..) => "interval",
            RClassForm::HalfHigh(_) => "half-high",
            RClassForm::FullLine => "full-line",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    H,
    D,
    J,
    LeqR,
    LeqL,
    LeqJ,
}

impl GreenRelation {
    pub const ALL: [GreenRelation; 8] = [
        GreenRelation::R,
        GreenRelation::L,
        GreenRelation::H,
        GreenRelation::D,
        GreenRelation::J,
        GreenRelation::LeqR,
        GreenRelation::LeqL,
        GreenRelation::LeqJ,
    ];
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GreenRelation::R => "R",
            GreenRelation::L => "L",
            GreenRelation::H => "H",
            GreenRelation::D => "D",
            GreenRelation::J => "J",
            GreenRelation::LeqR => "leqR",
            GreenRelation::LeqL => "leqL",
            GreenRelation::LeqJ => "leqJ",
        })
    }
}

impl FromStr for GreenRelation {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        GreenRelation::ALL
            .into_iter()
            .find(|r| r.to_string() == s)
            .ok_or_else(|| TropError::parse(0, "one of R, L, H, D, J, leqR, leqL, leqJ", s))
    }
}

pub fn leq_r(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    Ok(proj_column_space(a)?.is_subset_of(&proj_column_space(b)?))
}

pub fn leq_l(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    Ok(proj_row_space(a)?.is_subset_of(&proj_row_space(b)?))
}

pub fn leq_j(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    Ok(embeds_isometrically(
        &proj_column_space(a)?,
        &proj_column_space(b)?,
    ))
}

pub fn related(rel: GreenRelation, a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    Ok(match rel {
        GreenRelation::R => proj_column_space(a)? == proj_column_space(b)?,
        GreenRelation::L => proj_row_space(a)? == proj_row_space(b)?,
        GreenRelation::H => related(GreenRelation::R, a, b)? && related(GreenRelation::L, a, b)?,
        GreenRelation::D | GreenRelation::J => {
            isometric(&proj_column_space(a)?, &proj_column_space(b)?)
        }
        GreenRelation::LeqR => leq_r(a, b)?,
        GreenRelation::LeqL => leq_l(a, b)?,
        GreenRelation::LeqJ => leq_j(a, b)?,
    })
}

/// Identifies the R-class of `A` by matching its entries against the eight
/// explicit matrix shapes, without going through projective column spaces.
pub fn r_class_of(a: &TropMatrix) -> Result<RClassForm> {
    a.require_two_by_two()?;
    let (ea, eb, ec, ed) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let ninf = [ea, eb, ec, ed].map(TropScalar::is_neg_inf);
    let diff = |top: &TropScalar, bottom: &TropScalar| -> Rational {
        bottom.finite().expect("finite entry") - top.finite().expect("finite entry")
    };
    Ok(match ninf {
        [true, true, true, true] => RClassForm::ZeroClass,
        // second row zero / first row zero
        [_, _, true, true] => RClassForm::SingletonNegInf,
        [true, true, _, _] => RClassForm::SingletonPosInf,
        // one zero column, the other column finite
        [true, false, true, false] => RClassForm::SingletonFinite(diff(eb, ed)),
        [false, true, false, true] => RClassForm::SingletonFinite(diff(ea, ec)),
        // monomial
        [false, true, true, false] | [true, false, false, true] => RClassForm::FullLine,
        // [[a,b],[-inf,b+y]] and [[b,a],[b+y,-inf]]
        [false, false, true, false] => RClassForm::HalfLow(diff(eb, ed)),
        [false, false, false, true] => RClassForm::HalfLow(diff(ea, ec)),
        // [[-inf,a],[b,a+y]] and [[a,-inf],[a+y,b]]
        [true, false, false, false] => RClassForm::HalfHigh(diff(eb, ed)),
        [false, true, false, false] => RClassForm::HalfHigh(diff(ea, ec)),
        [false, false, false, false] => {
            let (x, y) = (diff(ea, ec), diff(eb, ed));
            match x.cmp(&y) {
                std::cmp::Ordering::Equal => RClassForm::SingletonFinite(x),
                std::cmp::Ordering::Less => RClassForm::FiniteInterval(x, y),
                std::cmp::Ordering::Greater => RClassForm::FiniteInterval(y, x),
            }
        }
    })
}

fn scalar(p: &ProjPoint) -> TropScalar {
    p.to_scalar().expect("point is not +inf")
}

fn zero() -> TropScalar {
    TropScalar::one()
}

/// `Z` with `PC(Z) = {x}` and `PR(Z) = {y}`.
fn singleton_witness(x: &ProjPoint, y: &ProjPoint) -> TropMatrix {
    let ni = TropScalar::NegInf;
    let below_top = *x != ProjPoint::PosInf && *y != ProjPoint::PosInf;
    let above_bottom = *x != ProjPoint::NegInf && *y != ProjPoint::NegInf;
    if below_top {
        let (xs, ys) = (scalar(x), scalar(y));
        let sum = xs.otimes(&ys);
        if sum <= zero() || !above_bottom {
            // [[0, y], [x, x + y]]
            return TropMatrix::two(zero(), ys, xs, sum);
        }
    }
    if above_bottom {
        // [[-(x + y), -x], [-y, 0]]
        let (nx, ny) = (scalar(&x.negated()), scalar(&y.negated()));
        return TropMatrix::two(nx.otimes(&ny), nx, ny, zero());
    }
    if *x == ProjPoint::PosInf {
        TropMatrix::two(ni.clone(), ni.clone(), zero(), ni)
    } else {
        TropMatrix::two(ni.clone(), zero(), ni.clone(), ni)
    }
}

/// A matrix with `PC(Z) = M` and `PR(Z) = N`, for isometric `M` and `N`.
///
/// Cases are tried in the order empty, full line, points, finite intervals,
/// half-infinite intervals. For two points `{x}`, `{y}` the form
/// `[[0, y], [x, x + y]]` is used whenever it applies and `x + y <= 0`, so the
/// witness is idempotent when possible.
pub fn witness_z(m: &ClosedConvexSet, n: &ClosedConvexSet) -> Result<TropMatrix> {
    use ClosedConvexSet as C;
    use ProjPoint::{Finite, NegInf, PosInf};
    if !isometric(m, n) {
        return Err(TropError::NotIsometric(m.to_string(), n.to_string()));
    }
    let ni = TropScalar::NegInf;
    let f = |q: &Rational| TropScalar::Finite(q.clone());
    let z = match (m, n) {
        (C::Empty, _) => TropMatrix::zero(2),
        (C::Singleton(x), C::Singleton(y)) => singleton_witness(x, y),
        (
            C::Interval {
                lo: NegInf,
                hi: PosInf,
            },
            _,
        ) => TropMatrix::identity(2),
        (
            C::Interval {
                lo: Finite(x),
                hi: Finite(y),
            },
            C::Interval { lo: Finite(w), .. },
        ) => TropMatrix::two(zero(), f(w), f(x), f(&(w + y))),
        (
            C::Interval {
                lo: NegInf,
                hi: Finite(y),
            },
            C::Interval {
                lo: NegInf,
                hi: Finite(z),
            },
        ) => TropMatrix::two(zero(), f(z), f(y), ni),
        (
            C::Interval {
                lo: NegInf,
                hi: Finite(y),
            },
            C::Interval {
                lo: Finite(x),
                hi: PosInf,
            },
        ) => TropMatrix::two(zero(), f(x), ni, f(&(x + y))),
        (
            C::Interval {
                lo: Finite(y),
                hi: PosInf,
            },
            C::Interval {
                lo: NegInf,
                hi: Finite(z),
            },
        ) => TropMatrix::two(zero(), ni, f(y), f(&(y + z))),
        (
            C::Interval {
                lo: Finite(y),
                hi: PosInf,
            },
            C::Interval {
                lo: Finite(w),
                hi: PosInf,
            },
        ) => TropMatrix::two(ni, zero(), f(&(y - w)), f(y)),
        _ => unreachable!("isometric closed convex sets fall into one of the cases above"),
    };
    if proj_column_space(&z)? != *m || proj_row_space(&z)? != *n {
        return Err(TropError::VerificationFailed(format!(
            "witness {z} for ({m}, {n})"
        )));
    }
    Ok(z)
}

/// `Z` with `B R Z` and `Z L A`, certifying `A D B`.
pub fn d_class_witness(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    if !related(GreenRelation::D, a, b)? {
        return Err(TropError::NotDRelated);
    }
    witness_z(&proj_column_space(b)?, &proj_row_space(a)?)
}

/// `(X, Y)` with `X ⊗ B ⊗ Y = A` whenever `A <=_J B`; `None` otherwise.
///
/// Picks a copy `M ⊆ PC(B)` of `PC(A)`, takes `Z` with `PC(Z) = M`,
/// `PR(Z) = PR(A)`, and solves `Z = B Y` and `A = X Z` by residuation.
pub fn j_factorization(a: &TropMatrix, b: &TropMatrix) -> Result<Option<(TropMatrix, TropMatrix)>> {
    let (pca, pcb) = (proj_column_space(a)?, proj_column_space(b)?);
    let Some(image) = embedding_image(&pca, &pcb) else {
        return Ok(None);
    };
    let z = witness_z(&image, &proj_row_space(a)?)?;
    let fail = |what: &str| {
        TropError::VerificationFailed(format!("J-factorization of {a} through {b}: {what}"))
    };
    let y = solve_right(b, &z)?.ok_or_else(|| fail("Z = B Y unsolvable"))?;
    let x = solve_left(&z, a)?.ok_or_else(|| fail("A = X Z unsolvable"))?;
    if x.mul(b)?.mul(&y)? != *a {
        return Err(fail("X B Y != A"));
    }
    Ok(Some((x, y)))
}
