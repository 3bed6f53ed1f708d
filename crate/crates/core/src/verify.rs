//! Seeded verification suites.
//!
//! Each suite draws its cases up front from a [`MatrixSampler`], checks them
//! in parallel and reports pass/fail counts. The two grid checks inside
//! `idempotent-grid` are exhaustive and ignore the sample count.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, TropError};
use crate::geometry::{isometric, proj_column_space, proj_row_space, ClosedConvexSet};
use crate::green::{
    d_class_witness, j_factorization, leq_j, leq_l, leq_r, r_class_of, related, GreenRelation,
};
use crate::ideals::{
    ideal_compare, ideal_contains, ideal_from_generators, matrix_of_type, principal_ideal_of,
    separating_iso_type,
};
use crate::matrix::{solve_left, solves_right, TropMatrix};
use crate::sampling::{MatrixSampler, Profile, RNG_NAME};
use crate::semiring::{ProjPoint, Rational, TropScalar};
use crate::structure::{
    idempotent_in_h, involution_parameter, is_idempotent, regular_witness, subgroup_element,
    IdempotentForm, SubgroupFamily,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Duality,
    DEqualsJ,
    Regularity,
    IdempotentGrid,
    GroupLaws,
    OracleAgreement,
    IdealOrder,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Duality,
        Suite::DEqualsJ,
        Suite::Regularity,
        Suite::IdempotentGrid,
        Suite::GroupLaws,
        Suite::OracleAgreement,
        Suite::IdealOrder,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::DEqualsJ => "d-equals-j",
            Suite::Regularity => "regularity",
            Suite::IdempotentGrid => "idempotent-grid",
            Suite::GroupLaws => "group-laws",
            Suite::OracleAgreement => "oracle-agreement",
            Suite::IdealOrder => "ideal-order",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            TropError::parse(
                0,
                "duality | d-equals-j | regularity | idempotent-grid | group-laws | oracle-agreement | ideal-order",
                s,
            )
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub seed: u64,
    pub profile: String,
    pub rng: &'static str,
    /// The first few failing cases, in sample order.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

const MAX_REPORTED: usize = 5;

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn tally<T: Sync>(
    cases: &[T],
    check: impl Fn(&T) -> Check + Sync + Send,
) -> (usize, usize, Vec<String>) {
    let outcomes: Vec<Check> = cases.par_iter().map(check).collect();
    let failures: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
    let failed = failures.len();
    (
        cases.len() - failed,
        failed,
        failures.into_iter().take(MAX_REPORTED).collect(),
    )
}

/// Profile a suite samples from when none is given.
pub fn default_profile(suite: Suite) -> Profile {
    match suite {
        Suite::IdempotentGrid => Profile::Boundary,
        Suite::GroupLaws | Suite::IdealOrder => Profile::DenseRational,
        _ => Profile::WithNegInf,
    }
}

pub fn run_suite(
    suite: Suite,
    samples: usize,
    seed: u64,
    profile: Option<Profile>,
) -> Result<SuiteReport> {
    if samples == 0 {
        return Err(TropError::InvalidParameters(
            "sample count must be positive".into(),
        ));
    }
    let profile = profile.unwrap_or_else(|| default_profile(suite));
    let mut s = MatrixSampler::new(seed, profile);
    let (passed, failed, failures) = match suite {
        Suite::Duality => tally(&matrices(&mut s, samples), check_duality),
        Suite::Regularity => tally(&matrices(&mut s, samples), check_regularity),
        Suite::DEqualsJ => tally(&related_pairs(&mut s, samples), |(a, b)| {
            check_d_equals_j(a, b)
        }),
        Suite::OracleAgreement => tally(&pairs(&mut s, samples), |(a, b)| {
            check_oracle_agreement(a, b)
        }),
        Suite::GroupLaws => {
            let cases: Vec<_> = (0..samples).map(|_| GroupCase::sample(&mut s)).collect();
            tally(&cases, GroupCase::check)
        }
        Suite::IdealOrder => {
            let cases: Vec<_> = (0..samples).map(|_| IdealCase::sample(&mut s)).collect();
            tally(&cases, IdealCase::check)
        }
        Suite::IdempotentGrid => {
            let (p1, f1, mut e1) = idempotent_grid_check();
            let (p2, f2, e2) = h_class_grid_check();
            e1.extend(e2);
            e1.truncate(MAX_REPORTED);
            (p1 + p2, f1 + f2, e1)
        }
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        passed,
        failed,
        seed,
        profile: profile.name().to_string(),
        rng: RNG_NAME,
        failures,
    })
}

fn matrices(s: &mut MatrixSampler, n: usize) -> Vec<TropMatrix> {
    (0..n).map(|_| s.matrix()).collect()
}

fn pairs(s: &mut MatrixSampler, n: usize) -> Vec<(TropMatrix, TropMatrix)> {
    (0..n).map(|_| (s.matrix(), s.matrix())).collect()
}

/// A random unit: a permutation matrix with finite weights.
fn monomial(s: &mut MatrixSampler) -> TropMatrix {
    let (p, q) = (
        TropScalar::Finite(s.rational(6)),
        TropScalar::Finite(s.rational(6)),
    );
    let ni = TropScalar::NegInf;
    if s.below(2) == 0 {
        TropMatrix::two(p, ni.clone(), ni, q)
    } else {
        TropMatrix::two(ni.clone(), p, q, ni)
    }
}

/// Independent pairs, interleaved with pairs `(A, U A V)` for random units,
/// which are always J-related.
fn related_pairs(s: &mut MatrixSampler, n: usize) -> Vec<(TropMatrix, TropMatrix)> {
    (0..n)
        .map(|i| {
            let a = s.matrix();
            let b = if i % 2 == 0 {
                s.matrix()
            } else {
                let (u, v) = (monomial(s), monomial(s));
                u.mul(&a).and_then(|ua| ua.mul(&v)).expect("2x2 products")
            };
            (a, b)
        })
        .collect()
}

pub fn check_duality(a: &TropMatrix) -> Check {
    let (pc, pr) = (lift(proj_column_space(a))?, lift(proj_row_space(a))?);
    ensure(isometric(&pc, &pr), || {
        format!("{a}: PC = {pc} and PR = {pr} are not isometric")
    })
}

pub fn check_regularity(a: &TropMatrix) -> Check {
    let y = lift(regular_witness(a))?;
    let aya = lift(a.mul(&y).and_then(|ay| ay.mul(a)))?;
    ensure(aya == *a, || format!("{a}: A Y A = {aya} for Y = {y}"))
}

pub fn check_d_equals_j(a: &TropMatrix, b: &TropMatrix) -> Check {
    let d = lift(related(GreenRelation::D, a, b))?;
    let j = lift(related(GreenRelation::J, a, b))?;
    // J from the two-sided preorder, rather than the isometry shortcut
    let jj = lift(leq_j(a, b))? && lift(leq_j(b, a))?;
    ensure(d == j && j == jj, || {
        format!("{a}, {b}: D = {d}, J = {j}, J via preorder = {jj}")
    })?;
    if j {
        let z = lift(d_class_witness(a, b))?;
        let (pcz, prz) = (lift(proj_column_space(&z))?, lift(proj_row_space(&z))?);
        ensure(
            pcz == lift(proj_column_space(b))? && prz == lift(proj_row_space(a))?,
            || format!("{a}, {b}: witness {z} has PC = {pcz}, PR = {prz}"),
        )?;
    }
    for (x, y) in [(a, b), (b, a)] {
        let leq = lift(leq_j(x, y))?;
        match lift(j_factorization(x, y))? {
            Some((p, q)) => {
                let prod = lift(p.mul(y).and_then(|py| py.mul(&q)))?;
                ensure(leq && prod == *x, || {
                    format!("{x} <=J {y}: factorization gives {prod}")
                })?;
            }
            None => ensure(!leq, || format!("{x} <=J {y} but no factorization found"))?,
        }
    }
    Ok(())
}

pub fn check_oracle_agreement(a: &TropMatrix, b: &TropMatrix) -> Check {
    for (x, y) in [(a, b), (b, a)] {
        let (gr, or) = (lift(leq_r(x, y))?, solves_right(y, x));
        ensure(gr == or, || {
            format!("{x} <=R {y}: geometry {gr}, residuation {or}")
        })?;
        let (gl, ol) = (lift(leq_l(x, y))?, lift(solve_left(y, x))?.is_some());
        ensure(gl == ol, || {
            format!("{x} <=L {y}: geometry {gl}, residuation {ol}")
        })?;
    }
    let shape = lift(r_class_of(a))?.to_set();
    let pc = lift(proj_column_space(a))?;
    ensure(shape == pc, || {
        format!("{a}: R-class shape {shape} but PC = {pc}")
    })
}

struct GroupCase {
    a: Rational,
    b: Rational,
    x: Rational,
    y: Rational,
}

impl GroupCase {
    fn sample(s: &mut MatrixSampler) -> Self {
        let x = s.rational(12);
        let y = &x + s.positive(12);
        GroupCase {
            a: s.rational(12),
            b: s.rational(12),
            x,
            y,
        }
    }

    fn check(&self) -> Check {
        let GroupCase { a, b, x, y } = self;
        let el = |f: &SubgroupFamily, t: &Rational| lift(subgroup_element(f, t));
        let prod = |f: &SubgroupFamily,
                    s: &Rational,
                    g: &SubgroupFamily,
                    t: &Rational|
         -> std::result::Result<TropMatrix, String> {
            lift(el(f, s)?.mul(&el(g, t)?))
        };
        let xf = SubgroupFamily::X {
            x: x.clone(),
            y: y.clone(),
        };
        let yf = SubgroupFamily::Y {
            x: x.clone(),
            y: y.clone(),
        };
        let zf = SubgroupFamily::Z { x: x.clone() };
        let w = SubgroupFamily::W;
        let sum = a + b;
        let laws = [
            ("W_a W_b = W_(a+b)", prod(&w, a, &w, b)?, el(&w, &sum)?),
            ("X_a X_b = X_(a+b)", prod(&xf, a, &xf, b)?, el(&xf, &sum)?),
            ("X_a Y_b = Y_(a+b)", prod(&xf, a, &yf, b)?, el(&yf, &sum)?),
            ("Y_b X_a = Y_(a+b)", prod(&yf, b, &xf, a)?, el(&yf, &sum)?),
            (
                "Y_a Y_b = X_(a+b+y-x)",
                prod(&yf, a, &yf, b)?,
                el(&xf, &(&sum + y - x))?,
            ),
            ("Z_a Z_b = Z_(a+b)", prod(&zf, a, &zf, b)?, el(&zf, &sum)?),
            (
                "Y_((x-y)/2)^2 = X_0",
                {
                    let h = involution_parameter(x, y);
                    prod(&yf, &h, &yf, &h)?
                },
                el(&xf, &Rational::from_integer(0.into()))?,
            ),
        ];
        for (name, lhs, rhs) in laws {
            ensure(lhs == rhs, || {
                format!(
                    "{name} fails for a={}, b={}, x={}, y={}: {lhs} vs {rhs}",
                    q(a),
                    q(b),
                    q(x),
                    q(y)
                )
            })?;
        }
        Ok(())
    }
}

fn q(r: &Rational) -> TropScalar {
    TropScalar::Finite(r.clone())
}

struct IdealCase {
    d1: crate::ideals::IdealDescriptor,
    d2: crate::ideals::IdealDescriptor,
    d3: crate::ideals::IdealDescriptor,
    probe: TropMatrix,
    gens: Vec<TropMatrix>,
}

impl IdealCase {
    fn sample(s: &mut MatrixSampler) -> Self {
        let k = 1 + s.below(4);
        // matrices come from with-neginf so every column-space type occurs
        let mut g = MatrixSampler::new(s.below(usize::MAX) as u64, Profile::WithNegInf);
        IdealCase {
            d1: s.descriptor(),
            d2: s.descriptor(),
            d3: s.descriptor(),
            probe: g.matrix(),
            gens: (0..k).map(|_| g.matrix()).collect(),
        }
    }

    fn check(&self) -> Check {
        let IdealCase {
            d1,
            d2,
            d3,
            probe,
            gens,
        } = self;
        let c12 = ideal_compare(d1, d2);
        ensure(c12 == ideal_compare(d2, d1).reverse(), || {
            format!("{d1} vs {d2}: compare is not antisymmetric")
        })?;
        ensure(c12.is_ne() || d1 == d2, || {
            format!("{d1} and {d2} compare equal but differ")
        })?;
        if d1 <= d2 && d2 <= d3 {
            ensure(d1 <= d3, || {
                format!("{d1} <= {d2} <= {d3} but not {d1} <= {d3}")
            })?;
        }
        let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        if lift(ideal_contains(lo, probe))? {
            ensure(lift(ideal_contains(hi, probe))?, || {
                format!("{probe} in {lo} but not in larger {hi}")
            })?;
        }
        if lo < hi {
            let t = separating_iso_type(lo, hi)
                .ok_or_else(|| format!("{lo} < {hi} without a separating type"))?;
            let w = matrix_of_type(&t);
            ensure(
                lift(ideal_contains(hi, &w))? && !lift(ideal_contains(lo, &w))?,
                || format!("{w} does not separate {lo} < {hi}"),
            )?;
        }
        let generated = lift(ideal_from_generators(gens))?;
        let mut max = lift(principal_ideal_of(&gens[0]))?;
        for g in &gens[1..] {
            max = max.max(lift(principal_ideal_of(g))?);
        }
        ensure(generated == max, || {
            format!("generated ideal {generated}, largest principal {max}")
        })?;
        for g in gens {
            ensure(lift(ideal_contains(&generated, g))?, || {
                format!("generator {g} not in {generated}")
            })?;
        }
        Ok(())
    }
}

/// Entry grid for the exhaustive idempotent check.
pub fn small_grid() -> Vec<TropScalar> {
    std::iter::once(TropScalar::NegInf)
        .chain((-2..=2).map(TropScalar::int))
        .collect()
}

/// All matrices with entries in `grid`.
pub fn grid_matrices(grid: &[TropScalar]) -> Vec<TropMatrix> {
    let mut out = Vec::with_capacity(grid.len().pow(4));
    for a in grid {
        for b in grid {
            for c in grid {
                for d in grid {
                    out.push(TropMatrix::two(a.clone(), b.clone(), c.clone(), d.clone()));
                }
            }
        }
    }
    out
}

/// Brute-force `E E = E` over the grid against the four-family description.
fn idempotent_grid_check() -> (usize, usize, Vec<String>) {
    let grid = small_grid();
    let in_grid = |m: &TropMatrix| (0..2).all(|i| (0..2).all(|j| grid.contains(m.get(i, j))));
    let mut families = HashSet::new();
    families.insert(IdempotentForm::Zero.matrix());
    for x in &grid {
        for y in &grid {
            if x.otimes(y) > TropScalar::one() {
                continue;
            }
            for form in [
                IdempotentForm::Upper {
                    x: x.clone(),
                    y: y.clone(),
                },
                IdempotentForm::Diagonal {
                    x: x.clone(),
                    y: y.clone(),
                },
                IdempotentForm::Lower {
                    x: x.clone(),
                    y: y.clone(),
                },
            ] {
                let m = form.matrix();
                if in_grid(&m) {
                    families.insert(m);
                }
            }
        }
    }
    tally(&grid_matrices(&grid), |m| {
        let (brute, family) = (is_idempotent(m), families.contains(m));
        ensure(brute == family, || {
            format!("{m}: E E = E is {brute}, family membership is {family}")
        })
    })
}

/// Closed convex sets with endpoints in `{-inf, -2, 0, 3, +inf}`.
pub fn endpoint_grid_sets() -> Vec<ClosedConvexSet> {
    let pts = [
        ProjPoint::NegInf,
        ProjPoint::int(-2),
        ProjPoint::int(0),
        ProjPoint::int(3),
        ProjPoint::PosInf,
    ];
    let mut sets = vec![ClosedConvexSet::Empty];
    for (i, p) in pts.iter().enumerate() {
        sets.push(ClosedConvexSet::Singleton(p.clone()));
        for q in &pts[i + 1..] {
            sets.push(ClosedConvexSet::closed(p.clone(), q.clone()));
        }
    }
    sets
}

/// H-classes realised by some idempotent, found by enumerating the four
/// families over a parameter grid.
fn realised_h_classes() -> HashSet<(ClosedConvexSet, ClosedConvexSet)> {
    let params: Vec<TropScalar> = std::iter::once(TropScalar::NegInf)
        .chain((-6..=6).map(TropScalar::int))
        .collect();
    let mut out = HashSet::new();
    let mut add = |e: TropMatrix| {
        if let (Ok(pc), Ok(pr)) = (proj_column_space(&e), proj_row_space(&e)) {
            out.insert((pc, pr));
        }
    };
    add(IdempotentForm::Zero.matrix());
    for x in &params {
        for y in &params {
            if x.otimes(y) <= TropScalar::one() {
                add(IdempotentForm::Upper {
                    x: x.clone(),
                    y: y.clone(),
                }
                .matrix());
                add(IdempotentForm::Diagonal {
                    x: x.clone(),
                    y: y.clone(),
                }
                .matrix());
                add(IdempotentForm::Lower {
                    x: x.clone(),
                    y: y.clone(),
                }
                .matrix());
            }
        }
    }
    out
}

fn h_class_grid_check() -> (usize, usize, Vec<String>) {
    let sets = endpoint_grid_sets();
    let realised = realised_h_classes();
    let cases: Vec<_> = sets
        .iter()
        .flat_map(|m| sets.iter().map(move |n| (m.clone(), n.clone())))
        .collect();
    tally(&cases, |(m, n)| {
        let expected = realised.contains(&(m.clone(), n.clone()));
        match idempotent_in_h(m, n) {
            None => ensure(!expected, || {
                format!("R_{m} n L_{n}: an idempotent exists but none was returned")
            }),
            Some(e) => {
                ensure(expected, || {
                    format!("R_{m} n L_{n}: returned {e} but no idempotent exists")
                })?;
                let (pc, pr) = (lift(proj_column_space(&e))?, lift(proj_row_space(&e))?);
                ensure(is_idempotent(&e) && pc == *m && pr == *n, || {
                    format!("R_{m} n L_{n}: returned {e} with PC = {pc}, PR = {pr}")
                })
            }
        }
    })
}
