//! Square max-plus matrices and vectors of any size, plus left/right
//! residuation.
//!
//! The residual `B \ A` is the greatest `X` with `B ⊗ X <= A`. It lives in the
//! completed carrier `R ∪ {-inf, +inf}` ([`ResidualMatrix`]); products against
//! it use the convention `(-inf) + (+inf) = -inf`. `A = B ⊗ X` is solvable over
//! the semiring exactly when `B ⊗ (B \ A) = A`, which is how the order-theoretic
//! decisions in [`crate::green`] are cross-checked.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Result, TropError};
use crate::semiring::{cmp_scalar_point, ProjPoint, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropVector {
    entries: Vec<TropScalar>,
}

impl TropVector {
    pub fn new(entries: Vec<TropScalar>) -> Self {
        TropVector { entries }
    }

    pub fn zero(n: usize) -> Self {
        TropVector {
            entries: vec![TropScalar::NegInf; n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &TropScalar {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TropScalar::is_neg_inf)
    }

    /// Tropical scaling: adds `lambda` to every entry.
    pub fn scale(&self, lambda: &TropScalar) -> TropVector {
        TropVector {
            entries: self.entries.iter().map(|x| x.otimes(lambda)).collect(),
        }
    }
}

pub fn scale(lambda: &TropScalar, v: &TropVector) -> TropVector {
    v.scale(lambda)
}

/// An `n x n` matrix over the max-plus semiring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    n: usize,
    entries: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn new(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(TropError::NotSquare);
        }
        Ok(TropMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> TropScalar) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        TropMatrix { n, entries }
    }

    /// `[[a, b], [c, d]]`.
    pub fn two(a: TropScalar, b: TropScalar, c: TropScalar, d: TropScalar) -> Self {
        TropMatrix {
            n: 2,
            entries: vec![a, b, c, d],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                TropScalar::one()
            } else {
                TropScalar::NegInf
            }
        })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| TropScalar::NegInf)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<TropScalar>> {
        self.entries.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    pub fn row(&self, i: usize) -> TropVector {
        TropVector::new(self.entries[i * self.n..(i + 1) * self.n].to_vec())
    }

    pub fn column(&self, j: usize) -> TropVector {
        TropVector::new((0..self.n).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TropScalar::is_neg_inf)
    }

    pub(crate) fn require_two_by_two(&self) -> Result<()> {
        if self.n == 2 {
            Ok(())
        } else {
            Err(TropError::RequiresTwoByTwo(self.n))
        }
    }

    fn check_same_dim(&self, other: &TropMatrix) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(TropError::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// `(A ⊗ B)_ij = max_k A_ik + B_kj`.
    pub fn mul(&self, rhs: &TropMatrix) -> Result<TropMatrix> {
        self.check_same_dim(rhs)?;
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n)
                .map(|k| self.get(i, k).otimes(rhs.get(k, j)))
                .max()
                .unwrap_or(TropScalar::NegInf)
        }))
    }

    pub fn add(&self, rhs: &TropMatrix) -> Result<TropMatrix> {
        self.check_same_dim(rhs)?;
        Ok(TropMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        })
    }

    pub fn transpose(&self) -> TropMatrix {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Left action on column vectors.
    pub fn apply(&self, v: &TropVector) -> Result<TropVector> {
        if v.len() != self.n {
            return Err(TropError::DimensionMismatch {
                left: self.n,
                right: v.len(),
            });
        }
        Ok(TropVector::new(
            (0..self.n)
                .map(|i| {
                    (0..self.n)
                        .map(|k| self.get(i, k).otimes(v.get(k)))
                        .max()
                        .unwrap_or(TropScalar::NegInf)
                })
                .collect(),
        ))
    }

    /// Entrywise `self <= other`.
    pub fn entrywise_le(&self, other: &TropMatrix) -> bool {
        self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Exactly one finite entry in every row and every column. These are the
    /// units of the multiplicative monoid.
    pub fn is_monomial(&self) -> bool {
        let n = self.n;
        let row_ok = (0..n).all(|i| (0..n).filter(|&j| self.get(i, j).is_finite()).count() == 1);
        let col_ok = (0..n).all(|j| (0..n).filter(|&i| self.get(i, j).is_finite()).count() == 1);
        row_ok && col_ok
    }

    /// Inverse of a monomial matrix: transpose the pattern and negate the
    /// finite entries.
    pub fn monomial_inverse(&self) -> Option<TropMatrix> {
        if !self.is_monomial() {
            return None;
        }
        Some(Self::from_fn(self.n, |i, j| match self.get(j, i) {
            TropScalar::Finite(q) => TropScalar::Finite(-q),
            TropScalar::NegInf => TropScalar::NegInf,
        }))
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("matrix serialization is infallible")
    }

    /// Parses the interchange format `[["0","-inf"],["1/2","3"]]`.
    pub fn from_json_str(s: &str) -> Result<TropMatrix> {
        let raw: Vec<Vec<String>> = serde_json::from_str(s).map_err(|e| {
            TropError::parse(
                e.column().saturating_sub(1),
                "JSON array of arrays of scalar strings",
                e.to_string(),
            )
        })?;
        let n = raw.len();
        let mut rows = Vec::with_capacity(n);
        for (i, row) in raw.into_iter().enumerate() {
            if row.len() != n {
                return Err(TropError::parse(
                    i,
                    format!("row {i} with {n} entries (square matrix)"),
                    format!("{} entries", row.len()),
                ));
            }
            let mut parsed = Vec::with_capacity(n);
            for (j, tok) in row.iter().enumerate() {
                let v = tok.parse::<TropScalar>().map_err(|_| {
                    TropError::parse(
                        i * n + j,
                        format!("scalar token at entry ({i},{j})"),
                        tok.clone(),
                    )
                })?;
                parsed.push(v);
            }
            rows.push(parsed);
        }
        TropMatrix::new(rows)
    }
}

impl Serialize for TropMatrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TropMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<TropScalar>>::deserialize(deserializer)?;
        TropMatrix::new(rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

pub fn mat_mul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    a.mul(b)
}

pub fn mat_add(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    a.add(b)
}

pub fn transpose(a: &TropMatrix) -> TropMatrix {
    a.transpose()
}

pub fn is_monomial(a: &TropMatrix) -> bool {
    a.is_monomial()
}

pub fn mat_vec(a: &TropMatrix, v: &TropVector) -> Result<TropVector> {
    a.apply(v)
}

// ---------------------------------------------------------------------------
// Residuation

/// Largest `t` in the completed carrier with `b + t <= a`.
fn sub_star(a: &ProjPoint, b: &TropScalar) -> ProjPoint {
    match (a, b) {
        (_, TropScalar::NegInf) | (ProjPoint::PosInf, _) => ProjPoint::PosInf,
        (ProjPoint::NegInf, TropScalar::Finite(_)) => ProjPoint::NegInf,
        (ProjPoint::Finite(x), TropScalar::Finite(y)) => ProjPoint::Finite(x - y),
    }
}

/// `b + t` in the completed carrier with `(-inf) + (+inf) = -inf`.
fn completed_otimes(b: &TropScalar, t: &ProjPoint) -> ProjPoint {
    match (b, t) {
        (TropScalar::NegInf, _) | (_, ProjPoint::NegInf) => ProjPoint::NegInf,
        (_, ProjPoint::PosInf) => ProjPoint::PosInf,
        (TropScalar::Finite(x), ProjPoint::Finite(y)) => ProjPoint::Finite(x + y),
    }
}

/// A matrix over `R ∪ {-inf, +inf}`. `+inf` marks an unconstrained entry:
/// it only meets `-inf` entries of the divisor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidualMatrix {
    n: usize,
    entries: Vec<ProjPoint>,
}

impl ResidualMatrix {
    fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ProjPoint) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ResidualMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ProjPoint {
        &self.entries[i * self.n + j]
    }

    pub fn has_pos_inf(&self) -> bool {
        self.entries.contains(&ProjPoint::PosInf)
    }

    /// A concrete semiring matrix: every `+inf` becomes `0`.
    pub fn materialize(&self) -> TropMatrix {
        TropMatrix::from_fn(self.n, |i, j| {
            self.get(i, j).to_scalar().unwrap_or_else(TropScalar::one)
        })
    }

    /// Entrywise `x <= self` with `+inf` maximal.
    pub fn dominates(&self, x: &TropMatrix) -> bool {
        x.n() == self.n
            && (0..self.n)
                .all(|i| (0..self.n).all(|j| cmp_scalar_point(x.get(i, j), self.get(i, j)).is_le()))
    }

    /// `B ⊗ self` in the completed carrier.
    pub fn premultiply(&self, b: &TropMatrix) -> Result<ResidualMatrix> {
        if b.n() != self.n {
            return Err(TropError::DimensionMismatch {
                left: b.n(),
                right: self.n,
            });
        }
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n)
                .map(|k| completed_otimes(b.get(i, k), self.get(k, j)))
                .max()
                .unwrap_or(ProjPoint::NegInf)
        }))
    }
}

impl From<&TropMatrix> for ResidualMatrix {
    fn from(a: &TropMatrix) -> Self {
        ResidualMatrix::from_fn(a.n(), |i, j| ProjPoint::from(a.get(i, j)))
    }
}

/// `B \ A`: the greatest `X` with `B ⊗ X <= A`,
/// `X_kj = min_i sub*(A_ij, B_ik)`.
pub fn left_residual(b: &TropMatrix, a: &TropMatrix) -> Result<ResidualMatrix> {
    left_residual_completed(b, &ResidualMatrix::from(a))
}

pub fn left_residual_completed(b: &TropMatrix, a: &ResidualMatrix) -> Result<ResidualMatrix> {
    if b.n() != a.n() {
        return Err(TropError::DimensionMismatch {
            left: b.n(),
            right: a.n(),
        });
    }
    let n = b.n();
    Ok(ResidualMatrix::from_fn(n, |k, j| {
        (0..n)
            .map(|i| sub_star(a.get(i, j), b.get(i, k)))
            .min()
            .unwrap_or(ProjPoint::PosInf)
    }))
}

/// `C / A`: the greatest `Y` with `Y ⊗ A <= C`,
/// `Y_ik = min_j sub*(C_ij, A_kj)`.
pub fn right_residual_completed(c: &ResidualMatrix, a: &TropMatrix) -> Result<ResidualMatrix> {
    if c.n() != a.n() {
        return Err(TropError::DimensionMismatch {
            left: c.n(),
            right: a.n(),
        });
    }
    let n = a.n();
    Ok(ResidualMatrix::from_fn(n, |i, k| {
        (0..n)
            .map(|j| sub_star(c.get(i, j), a.get(k, j)))
            .min()
            .unwrap_or(ProjPoint::PosInf)
    }))
}

/// `A \ v` for a column vector: the greatest `x` with `A ⊗ x <= v`.
pub fn vector_residual(a: &TropMatrix, v: &TropVector) -> Result<Vec<ProjPoint>> {
    if v.len() != a.n() {
        return Err(TropError::DimensionMismatch {
            left: a.n(),
            right: v.len(),
        });
    }
    let n = a.n();
    Ok((0..n)
        .map(|k| {
            (0..n)
                .map(|i| sub_star(&ProjPoint::from(v.get(i)), a.get(i, k)))
                .min()
                .unwrap_or(ProjPoint::PosInf)
        })
        .collect())
}

/// Some `X` over the semiring with `B ⊗ X = A`, if one exists.
pub fn solve_right(b: &TropMatrix, a: &TropMatrix) -> Result<Option<TropMatrix>> {
    let x = left_residual(b, a)?.materialize();
    Ok((b.mul(&x)? == *a).then_some(x))
}

/// Some `X` with `X ⊗ B = A`, if one exists.
pub fn solve_left(b: &TropMatrix, a: &TropMatrix) -> Result<Option<TropMatrix>> {
    Ok(solve_right(&b.transpose(), &a.transpose())?.map(|x| x.transpose()))
}

/// Whether `A = B ⊗ X` for some `X`, i.e. `A <=_R B` by pure algebra.
pub fn solves_right(b: &TropMatrix, a: &TropMatrix) -> bool {
    matches!(solve_right(b, a), Ok(Some(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::TropScalar as S;
    use proptest::prelude::*;

    fn m(rows: [[i64; 2]; 2]) -> TropMatrix {
        TropMatrix::two(
            S::int(rows[0][0]),
            S::int(rows[0][1]),
            S::int(rows[1][0]),
            S::int(rows[1][1]),
        )
    }

    const NI: S = S::NegInf;

    #[test]
    fn products() {
        let a = m([[0, 1], [2, 3]]);
        assert_eq!(TropMatrix::identity(2).mul(&a).unwrap(), a);
        assert_eq!(a.mul(&a).unwrap(), m([[3, 4], [5, 6]]));
        assert_eq!(TropMatrix::zero(2).mul(&a).unwrap(), TropMatrix::zero(2));
        assert!(matches!(
            a.mul(&TropMatrix::identity(3)),
            Err(TropError::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn sums() {
        let a = m([[0, 1], [2, 3]]);
        assert_eq!(a.add(&a).unwrap(), a);
        assert_eq!(a.add(&TropMatrix::zero(2)).unwrap(), a);
        let x = TropMatrix::two(S::int(0), NI, S::int(1), S::int(2));
        let y = TropMatrix::two(S::int(-1), S::int(3), S::int(0), NI);
        assert_eq!(x.add(&y).unwrap(), m([[0, 3], [1, 2]]));
    }

    #[test]
    fn transposes() {
        let a = m([[0, 1], [2, 3]]);
        assert_eq!(a.transpose(), m([[0, 2], [1, 3]]));
        assert_eq!(a.transpose().transpose(), a);
        // every permutation pattern of size 3, with distinct finite values
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for p in perms {
            let u =
                TropMatrix::from_fn(3, |i, j| if p[i] == j { S::int(i as i64 + 1) } else { NI });
            assert!(u.is_monomial());
            assert!(u.transpose().is_monomial());
        }
    }

    #[test]
    fn monomial_detection() {
        assert!(TropMatrix::identity(2).is_monomial());
        assert!(TropMatrix::two(NI, S::int(3), S::int(5), NI).is_monomial());
        assert!(!TropMatrix::two(S::int(0), S::int(0), NI, S::int(0)).is_monomial());
        assert!(!TropMatrix::zero(2).is_monomial());
    }

    #[test]
    fn vector_action() {
        let v = TropVector::new(vec![S::int(2), S::int(5)]);
        assert_eq!(v.scale(&S::one()), v);
        assert!(v.scale(&NI).is_zero());
        let a = TropMatrix::two(S::int(0), NI, S::int(1), S::int(0));
        assert_eq!(a.apply(&v).unwrap(), v);
        assert!(a.apply(&TropVector::zero(3)).is_err());
    }

    #[test]
    fn residual_by_identity_is_unchanged() {
        let a = TropMatrix::two(S::int(4), NI, S::ratio(1, 2), S::int(-3));
        let r = left_residual(&TropMatrix::identity(2), &a).unwrap();
        assert!(!r.has_pos_inf());
        assert_eq!(r.materialize(), a);
    }

    /// Brute-force maximality: over a grid, every X with B X <= B is below B\B,
    /// and B\B itself attains B.
    #[test]
    fn residual_is_greatest_subsolution_on_grid() {
        let b = m([[0, 1], [2, 3]]);
        let r = left_residual(&b, &b).unwrap();
        let grid: Vec<S> = std::iter::once(NI).chain((-4..=4).map(S::int)).collect();
        let mut found_max = false;
        for x00 in &grid {
            for x01 in &grid {
                for x10 in &grid {
                    for x11 in &grid {
                        let x = TropMatrix::two(x00.clone(), x01.clone(), x10.clone(), x11.clone());
                        let bx = b.mul(&x).unwrap();
                        if bx.entrywise_le(&b) {
                            assert!(r.dominates(&x), "{x} not below residual");
                            if x == r.materialize() {
                                found_max = true;
                            }
                        }
                    }
                }
            }
        }
        assert!(found_max);
        assert_eq!(b.mul(&r.materialize()).unwrap(), b);
    }

    #[test]
    fn residual_certifies_r_order() {
        let b = m([[0, 0], [0, 3]]);
        let a = m([[0, 0], [1, 2]]);
        let x = left_residual(&b, &a).unwrap().materialize();
        assert_eq!(b.mul(&x).unwrap(), a);
        assert!(solves_right(&b, &a));
        assert!(solves_right(&b, &b));
        assert!(!solves_right(&TropMatrix::zero(2), &a));
        assert!(!solves_right(&a, &b));
    }

    #[test]
    fn pos_inf_only_over_zero_columns() {
        let b = TropMatrix::two(NI, S::int(1), NI, S::int(2));
        let a = m([[3, 4], [4, 5]]);
        let r = left_residual(&b, &a).unwrap();
        assert_eq!(r.get(0, 0), &ProjPoint::PosInf);
        assert_eq!(r.get(0, 1), &ProjPoint::PosInf);
        assert_eq!(
            r.premultiply(&b).unwrap(),
            ResidualMatrix::from(&b.mul(&r.materialize()).unwrap())
        );
    }

    #[test]
    fn json_format() {
        let a = TropMatrix::from_json_str(r#"[["0","-inf"],["1/2","3"]]"#).unwrap();
        assert_eq!(a, TropMatrix::two(S::int(0), NI, S::ratio(1, 2), S::int(3)));
        assert_eq!(a.to_json().to_string(), r#"[["0","-inf"],["1/2","3"]]"#);
        assert!(TropMatrix::from_json_str(r#"[["0","x"],["1","3"]]"#).is_err());
        assert!(TropMatrix::from_json_str(r#"[["0"],["1","3"]]"#).is_err());
        assert!(TropMatrix::from_json_str(r#"[["0","1"]"#).is_err());
        match TropMatrix::from_json_str(r#"[["0","1"],["2","+inf"]]"#) {
            Err(TropError::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    fn scalar() -> impl Strategy<Value = S> {
        prop_oneof![
            1 => Just(S::NegInf),
            3 => (-6i64..6, 1i64..3).prop_map(|(n, d)| S::ratio(n, d)),
        ]
    }

    fn matrix(n: usize) -> impl Strategy<Value = TropMatrix> {
        proptest::collection::vec(scalar(), n * n).prop_map(move |v| {
            let mut it = v.into_iter();
            TropMatrix::from_fn(n, |_, _| it.next().unwrap())
        })
    }

    proptest! {
        #[test]
        fn galois_connection(b in matrix(2), a in matrix(2), x in matrix(2)) {
            let r = left_residual(&b, &a).unwrap();
            prop_assert_eq!(b.mul(&x).unwrap().entrywise_le(&a), r.dominates(&x));
        }

        #[test]
        fn galois_connection_3x3(b in matrix(3), a in matrix(3), x in matrix(3)) {
            let r = left_residual(&b, &a).unwrap();
            prop_assert_eq!(b.mul(&x).unwrap().entrywise_le(&a), r.dominates(&x));
        }

        #[test]
        fn right_residual_galois(c in matrix(2), a in matrix(2), y in matrix(2)) {
            let r = right_residual_completed(&ResidualMatrix::from(&c), &a).unwrap();
            prop_assert_eq!(y.mul(&a).unwrap().entrywise_le(&c), r.dominates(&y));
        }

        #[test]
        fn product_laws(a in matrix(3), b in matrix(3), c in matrix(3)) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn monomials_are_invertible(a in matrix(2)) {
            if let Some(inv) = a.monomial_inverse() {
                prop_assert_eq!(a.mul(&inv).unwrap(), TropMatrix::identity(2));
                prop_assert_eq!(inv.mul(&a).unwrap(), TropMatrix::identity(2));
            }
        }

        #[test]
        fn solutions_are_exact(b in matrix(2), x in matrix(2)) {
            // A = B X is solvable by construction
            let a = b.mul(&x).unwrap();
            let w = solve_right(&b, &a).unwrap().expect("solvable system");
            prop_assert_eq!(b.mul(&w).unwrap(), a);
            let l = x.mul(&b).unwrap();
            let v = solve_left(&b, &l).unwrap().expect("solvable system");
            prop_assert_eq!(v.mul(&b).unwrap(), l);
        }

        #[test]
        fn json_round_trip(a in matrix(2)) {
            prop_assert_eq!(TropMatrix::from_json_str(&a.to_json().to_string()).unwrap(), a);
        }
    }
}
