//! The dimension-parametric traversal families and the bundled fixed curves.

mod fixed;
mod hilbert;
mod peano;
mod quadrant;
mod simplex;

use std::fmt;
use std::str::FromStr;

pub use fixed::FixedCurve;
pub use hilbert::{gen_alfa, gen_base_camp, gen_beta, gen_butz, gen_harmonious};
pub use peano::{gen_peano_family, PeanoVariant};
pub use quadrant::{gen_double_gray, gen_gray, gen_inside_out, gen_u, gen_z};
pub use simplex::{gen_hill_z, gen_maehara, gen_maehara_recursive};

use crate::bitmatrix::gray;
use crate::{Direction, Error, Move, Result, SignedPermutation, TraversalDefinition};

/// The sixteen dimension-parametric traversal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TraversalKind {
    Z,
    U,
    GrayCode,
    DoubleGray,
    InsideOut,
    HillZ,
    MaeharaReflected,
    BaseCampHilbert,
    HarmoniousHilbert,
    AlfaHilbert,
    BetaHilbert,
    ButzHilbert,
    Peano,
    Coil,
    HalfCoil,
    Meurthe,
}

impl TraversalKind {
    pub const ALL: [TraversalKind; 16] = [
        TraversalKind::Z,
        TraversalKind::U,
        TraversalKind::GrayCode,
        TraversalKind::DoubleGray,
        TraversalKind::InsideOut,
        TraversalKind::HillZ,
        TraversalKind::MaeharaReflected,
        TraversalKind::BaseCampHilbert,
        TraversalKind::HarmoniousHilbert,
        TraversalKind::AlfaHilbert,
        TraversalKind::BetaHilbert,
        TraversalKind::ButzHilbert,
        TraversalKind::Peano,
        TraversalKind::Coil,
        TraversalKind::HalfCoil,
        TraversalKind::Meurthe,
    ];

    /// Short command-line name, e.g. `double-gray`.
    pub fn name(self) -> &'static str {
        match self {
            TraversalKind::Z => "z",
            TraversalKind::U => "u",
            TraversalKind::GrayCode => "gray",
            TraversalKind::DoubleGray => "double-gray",
            TraversalKind::InsideOut => "inside-out",
            TraversalKind::HillZ => "hill-z",
            TraversalKind::MaeharaReflected => "maehara",
            TraversalKind::BaseCampHilbert => "base-camp",
            TraversalKind::HarmoniousHilbert => "harmonious",
            TraversalKind::AlfaHilbert => "alfa",
            TraversalKind::BetaHilbert => "beta",
            TraversalKind::ButzHilbert => "butz",
            TraversalKind::Peano => "peano",
            TraversalKind::Coil => "coil",
            TraversalKind::HalfCoil => "half-coil",
            TraversalKind::Meurthe => "meurthe",
        }
    }

    /// Cells per axis at each refinement.
    pub fn scale(self) -> u32 {
        if self.is_ternary() {
            3
        } else {
            2
        }
    }

    pub fn is_ternary(self) -> bool {
        matches!(
            self,
            TraversalKind::Peano | TraversalKind::Coil | TraversalKind::HalfCoil | TraversalKind::Meurthe
        )
    }

    pub fn is_simplex(self) -> bool {
        matches!(self, TraversalKind::HillZ | TraversalKind::MaeharaReflected)
    }

    /// The five quadrant traversals without rotations.
    pub fn is_unrotated(self) -> bool {
        matches!(
            self,
            TraversalKind::Z
                | TraversalKind::U
                | TraversalKind::GrayCode
                | TraversalKind::DoubleGray
                | TraversalKind::InsideOut
        )
    }

    pub fn is_hilbert(self) -> bool {
        matches!(
            self,
            TraversalKind::BaseCampHilbert
                | TraversalKind::HarmoniousHilbert
                | TraversalKind::AlfaHilbert
                | TraversalKind::BetaHilbert
                | TraversalKind::ButzHilbert
        )
    }

    /// Smallest dimension the family is defined for.
    pub fn min_dim(self) -> usize {
        if self == TraversalKind::BetaHilbert {
            3
        } else {
            1
        }
    }
}

impl fmt::Display for TraversalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TraversalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let alias = match key.as_str() {
            "gray-code" | "graycode" => "gray",
            "doublegray" => "double-gray",
            "insideout" => "inside-out",
            "hillz" => "hill-z",
            "maehara-reflected" => "maehara",
            "basecamp" | "base-camp-hilbert" => "base-camp",
            "harmonious-hilbert" => "harmonious",
            "alfa-hilbert" | "alpha" => "alfa",
            "beta-hilbert" => "beta",
            "butz-hilbert" => "butz",
            "halfcoil" => "half-coil",
            other => other,
        };
        TraversalKind::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Digits of `i - 1` in base 2 or 3; `digit(1)` is the least significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitVector {
    base: u32,
    digits: Vec<u32>,
}

impl DigitVector {
    pub fn new(value: u64, base: u32, len: usize) -> Self {
        let mut digits = Vec::with_capacity(len);
        let mut v = value;
        for _ in 0..len {
            digits.push((v % u64::from(base)) as u32);
            v /= u64::from(base);
        }
        DigitVector { base, digits }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit `j`, 1-based.
    pub fn digit(&self, j: usize) -> u32 {
        self.digits[j - 1]
    }

    pub fn sum(&self) -> u32 {
        self.digits.iter().sum()
    }

    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &t| acc * u64::from(self.base) + u64::from(t))
    }
}

/// The reflected Gray code pattern `G2(d)` or `G3(d)` as a move list.
pub fn gen_base_pattern(base: u32, d: usize) -> Vec<Move> {
    assert!(base == 2 || base == 3, "base patterns exist for base 2 and 3");
    let mut pattern: Vec<Move> = Vec::new();
    for k in 1..=d as i32 {
        let back: Vec<Move> = pattern.iter().rev().map(Move::negated).collect();
        let mut next = pattern.clone();
        next.push(Move::single(k));
        next.extend(back);
        if base == 3 {
            next.push(Move::single(k));
            next.extend(pattern.iter().cloned());
        }
        pattern = next;
    }
    pattern
}

/// Builds the definition of `kind` in dimension `d`.
pub fn generate(kind: TraversalKind, d: usize) -> Result<TraversalDefinition> {
    if d == 0 {
        return Err(Error::OutOfDomain("dimension must be at least 1".into()));
    }
    if d > 24 {
        return Err(Error::OutOfDomain(format!("dimension {d} is too large to enumerate")));
    }
    match kind {
        TraversalKind::Z => gen_z(d),
        TraversalKind::U => gen_u(d),
        TraversalKind::GrayCode => gen_gray(d),
        TraversalKind::DoubleGray => gen_double_gray(d),
        TraversalKind::InsideOut => gen_inside_out(d),
        TraversalKind::HillZ => gen_hill_z(d),
        TraversalKind::MaeharaReflected => gen_maehara(d),
        TraversalKind::BaseCampHilbert => gen_base_camp(d),
        TraversalKind::HarmoniousHilbert => gen_harmonious(d),
        TraversalKind::AlfaHilbert => gen_alfa(d),
        TraversalKind::BetaHilbert => gen_beta(d),
        TraversalKind::ButzHilbert => gen_butz(d),
        TraversalKind::Peano => gen_peano_family(PeanoVariant::Peano, d),
        TraversalKind::Coil => gen_peano_family(PeanoVariant::Coil, d),
        TraversalKind::HalfCoil => gen_peano_family(PeanoVariant::HalfCoil, d),
        TraversalKind::Meurthe => gen_peano_family(PeanoVariant::Meurthe, d),
    }
}

/// Sign of centre coordinate `j` (1-based) of subcube `i` in a well-folded
/// pattern: `+1` iff bit `j` of `g(i - 1)` is set.
pub(crate) fn well_folded_sign(i: usize, j: usize) -> i32 {
    if gray(i as u64 - 1) >> (j - 1) & 1 == 1 {
        1
    } else {
        -1
    }
}

/// A definition on the binary reflected Gray code pattern with one entry per
/// subcube produced by `entry(i)`, `i` 1-based.
pub(crate) fn well_folded(
    d: usize,
    mut entry: impl FnMut(usize) -> SignedPermutation,
) -> Result<TraversalDefinition> {
    let entries = (1..=1usize << d).map(&mut entry).collect();
    TraversalDefinition::new(d, 2, entries, gen_base_pattern(2, d))
}

pub(crate) fn signed(entries: Vec<i32>, reverse: bool) -> SignedPermutation {
    let direction = if reverse {
        Direction::Reverse
    } else {
        Direction::Forward
    };
    SignedPermutation::new(entries, direction).expect("generator produced a signed permutation")
}
