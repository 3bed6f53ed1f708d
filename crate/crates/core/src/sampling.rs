//! Seeded random generation of matrices, sets, descriptors and parameters.
//!
//! Streams are driven by ChaCha8 seeded from a `u64`, so a seed and a
//! profile always reproduce the same sequence.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, TropError};
use crate::geometry::{ClosedConvexSet, IsoType};
use crate::ideals::IdealDescriptor;
use crate::matrix::TropMatrix;
use crate::semiring::{ratio, ProjPoint, Rational, TropScalar};

/// Name of the generator recorded in output metadata.
pub const RNG_NAME: &str = "ChaCha8";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    /// Finite entries `n/d` with `|n| <= 12`, `1 <= d <= 4`.
    DenseRational,
    /// As `DenseRational`, but each entry is `-inf` with probability 1/4.
    WithNegInf,
    /// Entries from `{-inf, -2, -1, -1/2, 0, 1/2, 1, 2}`.
    Boundary,
}

impl Profile {
    pub const ALL: [Profile; 3] = [
        Profile::DenseRational,
        Profile::WithNegInf,
        Profile::Boundary,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Profile::DenseRational => "dense-rational",
            Profile::WithNegInf => "with-neginf",
            Profile::Boundary => "boundary",
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| TropError::parse(0, "dense-rational | with-neginf | boundary", s))
    }
}

fn boundary_grid() -> [TropScalar; 8] {
    [
        TropScalar::NegInf,
        TropScalar::int(-2),
        TropScalar::int(-1),
        TropScalar::ratio(-1, 2),
        TropScalar::int(0),
        TropScalar::ratio(1, 2),
        TropScalar::int(1),
        TropScalar::int(2),
    ]
}

pub struct MatrixSampler {
    rng: ChaCha8Rng,
    profile: Profile,
}

impl MatrixSampler {
    pub fn new(seed: u64, profile: Profile) -> Self {
        MatrixSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            profile,
        }
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    /// `n/d` with `|n| <= bound`, `1 <= d <= 4`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        ratio(
            self.rng.gen_range(-bound..=bound),
            self.rng.gen_range(1..=4),
        )
    }

    /// Strictly positive `n/d` with `1 <= n <= bound`, `1 <= d <= 4`.
    pub fn positive(&mut self, bound: i64) -> Rational {
        ratio(self.rng.gen_range(1..=bound), self.rng.gen_range(1..=4))
    }

    pub fn scalar(&mut self) -> TropScalar {
        match self.profile {
            Profile::DenseRational => TropScalar::Finite(self.rational(12)),
            Profile::WithNegInf => {
                if self.rng.gen_ratio(1, 4) {
                    TropScalar::NegInf
                } else {
                    TropScalar::Finite(self.rational(12))
                }
            }
            Profile::Boundary => boundary_grid()
                .choose(&mut self.rng)
                .cloned()
                .expect("grid is nonempty"),
        }
    }

    pub fn matrix(&mut self) -> TropMatrix {
        let (a, b, c, d) = (self.scalar(), self.scalar(), self.scalar(), self.scalar());
        TropMatrix::two(a, b, c, d)
    }

    pub fn iso_type(&mut self) -> IsoType {
        match self.rng.gen_range(0..5) {
            0 => IsoType::Empty,
            1 => IsoType::Singleton,
            2 => IsoType::FiniteInterval(self.positive(12)),
            3 => IsoType::HalfInfinite,
            _ => IsoType::FullLine,
        }
    }

    /// A random placement of `t` in the projective line, either orientation.
    pub fn set_of_type(&mut self, t: &IsoType) -> ClosedConvexSet {
        let x = ProjPoint::Finite(self.rational(12));
        match t {
            IsoType::Empty => ClosedConvexSet::Empty,
            IsoType::Singleton => match self.rng.gen_range(0..4) {
                0 => ClosedConvexSet::Singleton(ProjPoint::NegInf),
                1 => ClosedConvexSet::Singleton(ProjPoint::PosInf),
                _ => ClosedConvexSet::Singleton(x),
            },
            IsoType::FiniteInterval(d) => {
                let lo = self.rational(12);
                let hi = &lo + d;
                ClosedConvexSet::closed(ProjPoint::Finite(lo), ProjPoint::Finite(hi))
            }
            IsoType::HalfInfinite => {
                if self.rng.gen() {
                    ClosedConvexSet::closed(x, ProjPoint::PosInf)
                } else {
                    ClosedConvexSet::closed(ProjPoint::NegInf, x)
                }
            }
            IsoType::FullLine => ClosedConvexSet::full_line(),
        }
    }

    /// Two independently placed sets of one random isometry type.
    pub fn isometric_pair(&mut self) -> (ClosedConvexSet, ClosedConvexSet) {
        let t = self.iso_type();
        (self.set_of_type(&t), self.set_of_type(&t))
    }

    pub fn descriptor(&mut self) -> IdealDescriptor {
        match self.rng.gen_range(0..7) {
            0 => IdealDescriptor::Closed(IsoType::Empty),
            1 => IdealDescriptor::Closed(IsoType::Singleton),
            2 => IdealDescriptor::Closed(IsoType::FiniteInterval(self.positive(8))),
            3 => IdealDescriptor::OpenFinite(self.positive(8)),
            4 => IdealDescriptor::OpenLine,
            5 => IdealDescriptor::Closed(IsoType::HalfInfinite),
            _ => IdealDescriptor::Closed(IsoType::FullLine),
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}
