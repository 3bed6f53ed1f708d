//! Projective column and row spaces of 2x2 matrices.
//!
//! A vector `(a, b)` of the tropical plane projects to `b - a` on the
//! projective line (extended subtraction, so `(-inf, b)` goes to `+inf` and
//! `(a, -inf)` to `-inf`). The column space of a 2x2 matrix projects to a
//! closed convex set: empty, a point, or a closed interval whose endpoints are
//! the images of the two columns.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Result, TropError};
use crate::matrix::{vector_residual, TropMatrix, TropVector};
use crate::semiring::{delta, parse_rational, ExtDistance, ProjPoint, Rational, TropScalar};

/// Empty set, a point, or a closed interval of the projective line.
///
/// `Interval` always has `lo < hi`; use [`ClosedConvexSet::closed`] to build
/// one from arbitrary endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClosedConvexSet {
    Empty,
    Singleton(ProjPoint),
    Interval { lo: ProjPoint, hi: ProjPoint },
}

impl ClosedConvexSet {
    /// The closed set spanned by two endpoints in either order.
    pub fn closed(p: ProjPoint, q: ProjPoint) -> Self {
        match p.cmp(&q) {
            std::cmp::Ordering::Equal => ClosedConvexSet::Singleton(p),
            std::cmp::Ordering::Less => ClosedConvexSet::Interval { lo: p, hi: q },
            std::cmp::Ordering::Greater => ClosedConvexSet::Interval { lo: q, hi: p },
        }
    }

    pub fn full_line() -> Self {
        ClosedConvexSet::Interval {
            lo: ProjPoint::NegInf,
            hi: ProjPoint::PosInf,
        }
    }

    pub fn point(p: ProjPoint) -> Self {
        ClosedConvexSet::Singleton(p)
    }

    pub fn endpoints(&self) -> Option<(&ProjPoint, &ProjPoint)> {
        match self {
            ClosedConvexSet::Empty => None,
            ClosedConvexSet::Singleton(p) => Some((p, p)),
            ClosedConvexSet::Interval { lo, hi } => Some((lo, hi)),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ClosedConvexSet::Empty)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.endpoints().is_some_and(|(lo, hi)| lo <= p && p <= hi)
    }

    pub fn is_subset_of(&self, other: &ClosedConvexSet) -> bool {
        match (self.endpoints(), other.endpoints()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((a, b)), Some((c, d))) => c <= a && b <= d,
        }
    }

    /// Pointwise negation `{-x : x in self}`.
    pub fn negated(&self) -> ClosedConvexSet {
        match self.endpoints() {
            None => ClosedConvexSet::Empty,
            Some((lo, hi)) => ClosedConvexSet::closed(hi.negated(), lo.negated()),
        }
    }

    pub fn diameter(&self) -> ExtDistance {
        match self.endpoints() {
            None => ExtDistance::zero(),
            Some((lo, hi)) => delta(lo, hi),
        }
    }

    pub fn iso_type(&self) -> IsoType {
        match self {
            ClosedConvexSet::Empty => IsoType::Empty,
            ClosedConvexSet::Singleton(_) => IsoType::Singleton,
            ClosedConvexSet::Interval { lo, hi } => match (lo, hi) {
                (ProjPoint::Finite(a), ProjPoint::Finite(b)) => IsoType::FiniteInterval(b - a),
                (ProjPoint::NegInf, ProjPoint::PosInf) => IsoType::FullLine,
                _ => IsoType::HalfInfinite,
            },
        }
    }
}

impl fmt::Display for ClosedConvexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedConvexSet::Empty => f.write_str("empty"),
            ClosedConvexSet::Singleton(p) => write!(f, "{{{p}}}"),
            ClosedConvexSet::Interval { lo, hi } => write!(f, "[{lo},{hi}]"),
        }
    }
}

fn parse_point_at(token: &str, offset: usize) -> Result<ProjPoint> {
    token.parse::<ProjPoint>().map_err(|e| match e {
        TropError::Parse {
            position,
            expected,
            found,
        } => TropError::Parse {
            position: offset + position + (token.len() - token.trim_start().len()),
            expected,
            found,
        },
        other => other,
    })
}

impl FromStr for ClosedConvexSet {
    type Err = TropError;

    /// Accepts `empty`, `{p}` and `[lo,hi]`; `[p,p]` is read as `{p}`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lead = s.len() - s.trim_start().len();
        if t == "empty" {
            return Ok(ClosedConvexSet::Empty);
        }
        if let Some(inner) = t.strip_prefix('{') {
            let inner = inner
                .strip_suffix('}')
                .ok_or_else(|| TropError::parse(lead + t.len(), "'}'", t))?;
            return Ok(ClosedConvexSet::Singleton(parse_point_at(inner, lead + 1)?));
        }
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| TropError::parse(lead + t.len(), "']'", t))?;
            let comma = inner.find(',').ok_or_else(|| {
                TropError::parse(lead + 1 + inner.len(), "',' between endpoints", t)
            })?;
            let lo = parse_point_at(&inner[..comma], lead + 1)?;
            let hi = parse_point_at(&inner[comma + 1..], lead + 2 + comma)?;
            if lo > hi {
                return Err(TropError::parse(
                    lead + 2 + comma,
                    "upper endpoint >= lower endpoint",
                    t,
                ));
            }
            return Ok(ClosedConvexSet::closed(lo, hi));
        }
        Err(TropError::parse(lead, "'empty', '{p}' or '[lo,hi]'", t))
    }
}

/// Isometry class of a closed convex set (orientation reversal allowed).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IsoType {
    Empty,
    Singleton,
    /// Closed interval with two real endpoints; carries its positive diameter.
    FiniteInterval(Rational),
    /// One real endpoint and one infinite endpoint.
    HalfInfinite,
    FullLine,
}

impl IsoType {
    /// Builds `FiniteInterval(d)`, rejecting `d <= 0`.
    pub fn finite_interval(d: Rational) -> Result<Self> {
        if d.is_positive() {
            Ok(IsoType::FiniteInterval(d))
        } else {
            Err(TropError::InvalidParameters(format!(
                "interval diameter must be positive, got {d}"
            )))
        }
    }

    /// Isometric embedding order.
    pub fn embeds_in(&self, other: &IsoType) -> bool {
        use IsoType::*;
        match (self, other) {
            (Empty, _) => true,
            (_, Empty) => false,
            (Singleton, _) => true,
            (_, Singleton) => false,
            (FiniteInterval(d), FiniteInterval(e)) => d <= e,
            (FiniteInterval(_), _) => true,
            (HalfInfinite, FiniteInterval(_)) => false,
            (HalfInfinite, _) => true,
            (FullLine, FullLine) => true,
            (FullLine, _) => false,
        }
    }

    pub fn diameter(&self) -> ExtDistance {
        match self {
            IsoType::Empty | IsoType::Singleton => ExtDistance::zero(),
            IsoType::FiniteInterval(d) => ExtDistance::Finite(d.clone()),
            IsoType::HalfInfinite | IsoType::FullLine => ExtDistance::Infinite,
        }
    }

    /// A canonical set of this type: `empty`, `{0}`, `[0,d]`, `[0,+inf]`, `[-inf,+inf]`.
    pub fn representative(&self) -> ClosedConvexSet {
        let zero = ProjPoint::Finite(Rational::zero());
        match self {
            IsoType::Empty => ClosedConvexSet::Empty,
            IsoType::Singleton => ClosedConvexSet::Singleton(zero),
            IsoType::FiniteInterval(d) => {
                ClosedConvexSet::closed(zero, ProjPoint::Finite(d.clone()))
            }
            IsoType::HalfInfinite => ClosedConvexSet::closed(zero, ProjPoint::PosInf),
            IsoType::FullLine => ClosedConvexSet::full_line(),
        }
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoType::Empty => f.write_str("empty"),
            IsoType::Singleton => f.write_str("point"),
            IsoType::FiniteInterval(d) => write!(f, "interval:{}", TropScalar::Finite(d.clone())),
            IsoType::HalfInfinite => f.write_str("halfinf"),
            IsoType::FullLine => f.write_str("fullline"),
        }
    }
}

impl FromStr for IsoType {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "empty" => Ok(IsoType::Empty),
            "point" => Ok(IsoType::Singleton),
            "halfinf" => Ok(IsoType::HalfInfinite),
            "fullline" => Ok(IsoType::FullLine),
            t => match t.strip_prefix("interval:") {
                Some(d) => {
                    let d = parse_rational(d).map_err(|e| match e {
                        TropError::Parse {
                            position,
                            expected,
                            found,
                        } => TropError::Parse {
                            position: position + "interval:".len(),
                            expected,
                            found,
                        },
                        other => other,
                    })?;
                    IsoType::finite_interval(d)
                }
                None => Err(TropError::parse(
                    0,
                    "empty | point | interval:<d> | halfinf | fullline",
                    t,
                )),
            },
        }
    }
}

/// Projective image of a vector of the tropical plane; `None` for the zero vector.
pub fn project(v: &TropVector) -> Option<ProjPoint> {
    assert_eq!(v.len(), 2, "projection is defined on the tropical plane");
    v.get(1).ext_sub(v.get(0)).ok()
}

pub fn proj_column_space(a: &TropMatrix) -> Result<ClosedConvexSet> {
    a.require_two_by_two()?;
    let p = project(&a.column(0));
    let q = project(&a.column(1));
    Ok(match (p, q) {
        (None, None) => ClosedConvexSet::Empty,
        (Some(p), None) | (None, Some(p)) => ClosedConvexSet::Singleton(p),
        (Some(p), Some(q)) => ClosedConvexSet::closed(p, q),
    })
}

pub fn proj_row_space(a: &TropMatrix) -> Result<ClosedConvexSet> {
    proj_column_space(&a.transpose())
}

pub fn diameter(s: &ClosedConvexSet) -> ExtDistance {
    s.diameter()
}

pub fn iso_type(s: &ClosedConvexSet) -> IsoType {
    s.iso_type()
}

pub fn isometric(s: &ClosedConvexSet, t: &ClosedConvexSet) -> bool {
    s.iso_type() == t.iso_type()
}

pub fn embeds_isometrically(s: &ClosedConvexSet, t: &ClosedConvexSet) -> bool {
    s.iso_type().embeds_in(&t.iso_type())
}

pub fn subset(s: &ClosedConvexSet, t: &ClosedConvexSet) -> bool {
    s.is_subset_of(t)
}

/// A subset of `t` isometric to `s`, when `s` embeds isometrically in `t`.
pub fn embedding_image(s: &ClosedConvexSet, t: &ClosedConvexSet) -> Option<ClosedConvexSet> {
    let (source, target) = (s.iso_type(), t.iso_type());
    if !source.embeds_in(&target) {
        return None;
    }
    let (lo, hi) = match t.endpoints() {
        None => return Some(ClosedConvexSet::Empty),
        Some(ends) => ends,
    };
    Some(match source {
        IsoType::Empty => ClosedConvexSet::Empty,
        IsoType::Singleton => ClosedConvexSet::Singleton(lo.clone()),
        IsoType::FiniteInterval(d) => match (lo, hi) {
            (ProjPoint::Finite(l), _) => {
                ClosedConvexSet::closed(ProjPoint::Finite(l.clone()), ProjPoint::Finite(l + &d))
            }
            (ProjPoint::NegInf, ProjPoint::Finite(h)) => {
                ClosedConvexSet::closed(ProjPoint::Finite(h - &d), ProjPoint::Finite(h.clone()))
            }
            _ => IsoType::FiniteInterval(d).representative(),
        },
        IsoType::HalfInfinite if target == IsoType::FullLine => {
            IsoType::HalfInfinite.representative()
        }
        IsoType::HalfInfinite | IsoType::FullLine => t.clone(),
    })
}

/// Membership in the affine column space, decided by residuation:
/// `v ∈ C(A)` iff `A ⊗ (A \ v) = v`.
pub fn in_column_space(v: &TropVector, a: &TropMatrix) -> Result<bool> {
    a.require_two_by_two()?;
    let x: Vec<TropScalar> = vector_residual(a, v)?
        .into_iter()
        .map(|t| t.to_scalar().unwrap_or_else(TropScalar::one))
        .collect();
    Ok(a.apply(&TropVector::new(x))? == *v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{rat, TropScalar as S};
    use proptest::prelude::*;

    const NI: S = S::NegInf;

    fn p(n: i64) -> ProjPoint {
        ProjPoint::int(n)
    }

    fn iv(lo: ProjPoint, hi: ProjPoint) -> ClosedConvexSet {
        ClosedConvexSet::closed(lo, hi)
    }

    fn m(a: S, b: S, c: S, d: S) -> TropMatrix {
        TropMatrix::two(a, b, c, d)
    }

    #[test]
    fn column_spaces() {
        let a = m(S::int(0), S::int(0), S::int(1), S::int(2));
        assert_eq!(proj_column_space(&a).unwrap(), iv(p(1), p(2)));
        let b = m(NI, S::int(3), NI, S::int(5));
        assert_eq!(
            proj_column_space(&b).unwrap(),
            ClosedConvexSet::Singleton(p(2))
        );
        let u = m(S::int(3), NI, NI, S::int(4));
        assert_eq!(proj_column_space(&u).unwrap(), ClosedConvexSet::full_line());
        assert_eq!(
            proj_column_space(&TropMatrix::zero(2)).unwrap(),
            ClosedConvexSet::Empty
        );
        assert_eq!(
            proj_column_space(&TropMatrix::identity(3)),
            Err(TropError::RequiresTwoByTwo(3))
        );
    }

    #[test]
    fn row_spaces() {
        assert_eq!(
            proj_row_space(&TropMatrix::identity(2)).unwrap(),
            ClosedConvexSet::full_line()
        );
        assert_eq!(
            proj_row_space(&TropMatrix::zero(2)).unwrap(),
            ClosedConvexSet::Empty
        );
        let a = m(S::int(0), S::int(1), S::int(2), S::int(3));
        let (pc, pr) = (proj_column_space(&a).unwrap(), proj_row_space(&a).unwrap());
        assert_eq!(pc, ClosedConvexSet::Singleton(p(2)));
        assert_eq!(pr, ClosedConvexSet::Singleton(p(1)));
        assert_eq!(pc.diameter(), pr.diameter());
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&ClosedConvexSet::Empty), ExtDistance::zero());
        assert_eq!(diameter(&iv(p(1), p(4))), ExtDistance::Finite(rat(3)));
        assert_eq!(
            diameter(&iv(p(0), ProjPoint::PosInf)),
            ExtDistance::Infinite
        );
        assert_eq!(
            diameter(&ClosedConvexSet::Singleton(ProjPoint::PosInf)),
            ExtDistance::zero()
        );
    }

    #[test]
    fn isometry_examples() {
        assert!(isometric(
            &iv(ProjPoint::NegInf, p(0)),
            &iv(p(0), ProjPoint::PosInf)
        ));
        assert!(isometric(&iv(p(0), p(1)), &iv(p(5), p(6))));
        assert!(!isometric(&iv(p(0), p(1)), &iv(p(0), p(2))));
        assert_eq!(
            iso_type(&iv(ProjPoint::NegInf, p(3))),
            IsoType::HalfInfinite
        );
        assert_eq!(
            iso_type(&ClosedConvexSet::Singleton(ProjPoint::PosInf)),
            IsoType::Singleton
        );
        assert_eq!(iso_type(&ClosedConvexSet::full_line()), IsoType::FullLine);
    }

    #[test]
    fn embedding_examples() {
        assert!(embeds_isometrically(&iv(p(0), p(1)), &iv(p(5), p(7))));
        assert_eq!(
            embedding_image(&iv(p(0), p(1)), &iv(p(5), p(7))),
            Some(iv(p(5), p(6)))
        );
        assert!(!embeds_isometrically(
            &iv(p(0), ProjPoint::PosInf),
            &iv(p(0), p(5))
        ));
        assert!(embeds_isometrically(
            &ClosedConvexSet::Empty,
            &ClosedConvexSet::Empty
        ));
        assert!(!embeds_isometrically(
            &ClosedConvexSet::full_line(),
            &iv(p(0), ProjPoint::PosInf)
        ));
    }

    #[test]
    fn subsets() {
        assert!(subset(&iv(p(1), p(2)), &iv(p(0), p(3))));
        assert!(subset(&ClosedConvexSet::Singleton(p(2)), &iv(p(0), p(3))));
        assert!(!subset(&iv(p(0), p(3)), &iv(p(1), p(2))));
        assert!(subset(&ClosedConvexSet::Empty, &ClosedConvexSet::Empty));
        assert!(!subset(
            &ClosedConvexSet::Singleton(p(0)),
            &ClosedConvexSet::Empty
        ));
    }

    #[test]
    fn column_membership() {
        let a = m(S::int(0), S::int(0), S::int(1), S::int(2));
        for j in 0..2 {
            assert!(in_column_space(&a.column(j), &a).unwrap());
            assert!(in_column_space(&a.column(j).scale(&S::int(-7)), &a).unwrap());
        }
        assert!(!in_column_space(&TropVector::new(vec![S::int(2), S::int(5)]), &a).unwrap());
        assert!(in_column_space(&TropVector::new(vec![S::int(2), S::int(4)]), &a).unwrap());
        assert!(in_column_space(&TropVector::zero(2), &a).unwrap());
        assert!(in_column_space(&TropVector::zero(2), &TropMatrix::zero(2)).unwrap());
        assert!(
            !in_column_space(&TropVector::new(vec![S::int(0), NI]), &TropMatrix::zero(2)).unwrap()
        );
    }

    #[test]
    fn set_text_format() {
        assert_eq!(
            "empty".parse::<ClosedConvexSet>().unwrap(),
            ClosedConvexSet::Empty
        );
        assert_eq!(
            "{-inf}".parse::<ClosedConvexSet>().unwrap(),
            ClosedConvexSet::Singleton(ProjPoint::NegInf)
        );
        assert_eq!(
            "[1/2, +inf]".parse::<ClosedConvexSet>().unwrap(),
            iv(ProjPoint::ratio(1, 2), ProjPoint::PosInf)
        );
        assert_eq!(
            "[3,3]".parse::<ClosedConvexSet>().unwrap(),
            ClosedConvexSet::Singleton(p(3))
        );
        assert!("[3,1]".parse::<ClosedConvexSet>().is_err());
        assert!("(0,1)".parse::<ClosedConvexSet>().is_err());
        match "[0,x]".parse::<ClosedConvexSet>() {
            Err(TropError::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(iv(ProjPoint::NegInf, p(2)).to_string(), "[-inf,2]");
        assert_eq!(
            "interval:3/2".parse::<IsoType>().unwrap(),
            IsoType::FiniteInterval(crate::semiring::ratio(3, 2))
        );
        assert!("interval:0".parse::<IsoType>().is_err());
    }

    // -- property tests ------------------------------------------------------

    fn scalar() -> impl Strategy<Value = S> {
        prop_oneof![
            1 => Just(S::NegInf),
            3 => (-5i64..5).prop_map(S::int),
        ]
    }

    fn matrix() -> impl Strategy<Value = TropMatrix> {
        (scalar(), scalar(), scalar(), scalar()).prop_map(|(a, b, c, d)| m(a, b, c, d))
    }

    fn point() -> impl Strategy<Value = ProjPoint> {
        prop_oneof![
            1 => Just(ProjPoint::NegInf),
            1 => Just(ProjPoint::PosInf),
            4 => (-5i64..5).prop_map(ProjPoint::int),
        ]
    }

    fn set() -> impl Strategy<Value = ClosedConvexSet> {
        prop_oneof![
            1 => Just(ClosedConvexSet::Empty),
            6 => (point(), point()).prop_map(|(a, b)| ClosedConvexSet::closed(a, b)),
        ]
    }

    /// Maximum number of points pairwise at infinite distance. Isometric
    /// embeddings cannot increase it.
    fn infinite_spread(s: &ClosedConvexSet) -> usize {
        match s.endpoints() {
            None => 0,
            Some((lo, hi)) if lo == hi => 1,
            // a proper interval always contains some real point
            Some((lo, hi)) => 1 + [lo, hi].iter().filter(|q| !q.is_finite()).count(),
        }
    }

    proptest! {
        #[test]
        fn duality(a in matrix()) {
            prop_assert!(isometric(&proj_column_space(&a).unwrap(), &proj_row_space(&a).unwrap()));
        }

        #[test]
        fn residual_membership_matches_geometry(a in matrix(), x in scalar(), y in scalar()) {
            let v = TropVector::new(vec![x, y]);
            let geometric = match project(&v) {
                None => true,
                Some(q) => proj_column_space(&a).unwrap().contains(&q),
            };
            prop_assert_eq!(in_column_space(&v, &a).unwrap(), geometric);
        }

        #[test]
        fn embedding_is_a_partial_order(s in set(), t in set(), u in set()) {
            prop_assert!(embeds_isometrically(&s, &s));
            if embeds_isometrically(&s, &t) && embeds_isometrically(&t, &u) {
                prop_assert!(embeds_isometrically(&s, &u));
            }
            if embeds_isometrically(&s, &t) && embeds_isometrically(&t, &s) {
                prop_assert_eq!(iso_type(&s), iso_type(&t));
            }
        }

        #[test]
        fn embedding_is_witnessed(s in set(), t in set()) {
            match embedding_image(&s, &t) {
                Some(img) => {
                    prop_assert!(embeds_isometrically(&s, &t));
                    prop_assert!(img.is_subset_of(&t));
                    prop_assert!(isometric(&img, &s));
                }
                None => {
                    prop_assert!(!embeds_isometrically(&s, &t));
                    // some metric obstruction must exist
                    prop_assert!(
                        s.diameter() > t.diameter()
                            || infinite_spread(&s) > infinite_spread(&t)
                            || (t.is_empty() && !s.is_empty())
                    );
                }
            }
        }

        #[test]
        fn iso_type_agrees_with_isometric(s in set(), t in set()) {
            prop_assert_eq!(isometric(&s, &t), iso_type(&s) == iso_type(&t));
            if isometric(&s, &t) {
                prop_assert_eq!(s.diameter(), t.diameter());
            }
        }

        #[test]
        fn product_columns_lie_in_left_factor(a in matrix(), b in matrix()) {
            let ab = a.mul(&b).unwrap();
            prop_assert!(subset(&proj_column_space(&ab).unwrap(), &proj_column_space(&a).unwrap()));
        }

        #[test]
        fn set_text_round_trip(s in set()) {
            prop_assert_eq!(s.to_string().parse::<ClosedConvexSet>().unwrap(), s);
        }
    }
}
