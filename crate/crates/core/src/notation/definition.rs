use num_integer::Integer;

use super::{Move, Rational, SignedPermutation};
use crate::{Error, Result};

/// A complete self-similar traversal: one signed, directed permutation per
/// subcell, in visiting order, with the move from each subcell centre to the
/// next.
///
/// Subcells are `1/scale` the size of the whole. Moves are counted in units
/// of `1/move_unit` of the unit-cube width; this is `1/scale` except for
/// shapes whose tiles sit off the cube grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraversalDefinition {
    dim: usize,
    scale: u32,
    move_unit: u32,
    entries: Vec<SignedPermutation>,
    moves: Vec<Move>,
}

impl TraversalDefinition {
    pub fn new(
        dim: usize,
        scale: u32,
        entries: Vec<SignedPermutation>,
        moves: Vec<Move>,
    ) -> Result<Self> {
        Self::with_move_unit(dim, scale, scale, entries, moves)
    }

    pub fn with_move_unit(
        dim: usize,
        scale: u32,
        move_unit: u32,
        entries: Vec<SignedPermutation>,
        moves: Vec<Move>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDefinition("dimension must be positive".into()));
        }
        if scale == 0 || move_unit == 0 {
            return Err(Error::InvalidDefinition(
                "scale and move unit must be positive".into(),
            ));
        }
        if entries.is_empty() {
            return Err(Error::InvalidDefinition("no entries".into()));
        }
        if moves.len() + 1 != entries.len() {
            return Err(Error::InvalidDefinition(format!(
                "{} entries need {} moves, found {}",
                entries.len(),
                entries.len() - 1,
                moves.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: e.dim(),
            });
        }
        for m in &moves {
            if let Some(&element) = m.steps().iter().find(|e| e.unsigned_abs() as usize > dim) {
                return Err(Error::MoveOutOfRange { element, dim });
            }
        }
        Ok(TraversalDefinition {
            dim,
            scale,
            move_unit,
            entries,
            moves,
        })
    }

    /// Builds a definition from explicit subcell centres, deriving the moves
    /// from consecutive differences.
    pub fn from_centres(
        dim: usize,
        scale: u32,
        entries: Vec<SignedPermutation>,
        centres: &[Vec<Rational>],
    ) -> Result<Self> {
        if centres.len() != entries.len() {
            return Err(Error::InvalidDefinition(format!(
                "{} entries but {} centres",
                entries.len(),
                centres.len()
            )));
        }
        let unit = Rational::from_integer(i64::from(scale));
        let mut moves = Vec::with_capacity(centres.len().saturating_sub(1));
        for pair in centres.windows(2) {
            let mut disp = Vec::with_capacity(dim);
            for (a, b) in pair[0].iter().zip(&pair[1]) {
                let steps = (*b - *a) * unit;
                if !steps.is_integer() {
                    return Err(Error::InvalidDefinition(format!(
                        "centre difference {} is not a whole number of moves",
                        *b - *a
                    )));
                }
                disp.push(steps.to_integer());
            }
            moves.push(Move::from_displacement(&disp));
        }
        let def = Self::new(dim, scale, entries, moves)?;
        if def.centres() != centres {
            return Err(Error::InvalidDefinition(
                "centres are not centred on the bounding box of the pattern".into(),
            ));
        }
        Ok(def)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn move_unit(&self) -> u32 {
        self.move_unit
    }

    pub fn entries(&self) -> &[SignedPermutation] {
        &self.entries
    }

    /// `moves()[i]` leads from entry `i` to entry `i + 1`.
    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Position of every subcell relative to the first, in move units.
    pub fn offsets(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.len());
        let mut at = vec![0i64; self.dim];
        out.push(at.clone());
        for m in &self.moves {
            for (x, dx) in at.iter_mut().zip(m.displacement(self.dim)) {
                *x += dx;
            }
            out.push(at.clone());
        }
        out
    }

    /// Exact subcell centres relative to the centre of the unit cube.
    ///
    /// The pattern is placed so that the bounding box of its subcells is
    /// centred on the origin; for cube traversals this is the same as putting
    /// the mean of the centres there.
    pub fn centres(&self) -> Vec<Vec<Rational>> {
        let offsets = self.offsets();
        let unit = i64::from(self.move_unit);
        let mid: Vec<Rational> = (0..self.dim)
            .map(|j| {
                let lo = offsets.iter().map(|o| o[j]).min().unwrap();
                let hi = offsets.iter().map(|o| o[j]).max().unwrap();
                Rational::new(lo + hi, 2)
            })
            .collect();
        offsets
            .iter()
            .map(|o| {
                o.iter()
                    .zip(&mid)
                    .map(|(&x, &m)| (Rational::from_integer(x) - m) / unit)
                    .collect()
            })
            .collect()
    }

    /// Whether the entries visit each of the `s^d` grid cells exactly once.
    pub fn is_cubic(&self) -> bool {
        let s = self.scale as u64;
        let Some(count) = u32::try_from(self.dim).ok().and_then(|d| s.checked_pow(d)) else {
            return false;
        };
        if count != self.len() as u64 {
            return false;
        }
        let cell = Rational::new(1, i64::from(self.scale));
        let half = Rational::new(1, 2);
        let mut seen = std::collections::HashSet::new();
        for c in self.centres() {
            let mut idx = Vec::with_capacity(self.dim);
            for x in c {
                let k = (x + half) / cell - half;
                if !k.is_integer() || k < Rational::from_integer(0) || k >= Rational::from(s as i64) {
                    return false;
                }
                idx.push(k.to_integer());
            }
            if !seen.insert(idx) {
                return false;
            }
        }
        true
    }

    /// Number of subcells `D`; equals `s^d` for cube traversals.
    pub fn entry_count(&self) -> usize {
        self.len()
    }

    /// Least common multiple of the denominators of all centre coordinates,
    /// measured in subcell widths, and of 2.
    pub(crate) fn centre_denominator(&self) -> i64 {
        let s = Rational::from_integer(i64::from(self.scale));
        self.centres()
            .iter()
            .flatten()
            .fold(2i64, |acc, &c| acc.lcm((c * s).denom()))
    }

    /// The same traversal run backwards. Entries keep their direction: each
    /// subcell now refers to the reversed traversal.
    pub fn reversed(&self) -> Self {
        TraversalDefinition {
            dim: self.dim,
            scale: self.scale,
            move_unit: self.move_unit,
            entries: self.entries.iter().rev().cloned().collect(),
            moves: self.moves.iter().rev().map(|m| m.negated()).collect(),
        }
    }

    /// The pieces in reverse order with each piece run backwards, for
    /// sequences whose entries refer to some other, fixed traversal.
    pub(crate) fn reversed_pieces(&self) -> Self {
        TraversalDefinition {
            entries: self.entries.iter().rev().map(|e| e.reversed()).collect(),
            ..self.reversed()
        }
    }

    /// The traversal mapped through the cube symmetry `p`.
    pub fn transformed(&self, p: &SignedPermutation) -> Result<Self> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        let p = p.with_direction(super::Direction::Forward);
        Ok(TraversalDefinition {
            dim: self.dim,
            scale: self.scale,
            move_unit: self.move_unit,
            entries: self.entries.iter().map(|e| p.compose_unchecked(e)).collect(),
            moves: self.moves.iter().map(|m| m.transformed(&p)).collect(),
        })
    }

    /// Entries of `self`, then `link`, then the entries of `tail`.
    pub fn concat(&self, link: Move, tail: &TraversalDefinition) -> Result<Self> {
        if tail.dim != self.dim || tail.scale != self.scale || tail.move_unit != self.move_unit {
            return Err(Error::InvalidDefinition(
                "cannot concatenate definitions of different shape".into(),
            ));
        }
        let mut entries = self.entries.clone();
        entries.extend(tail.entries.iter().cloned());
        let mut moves = self.moves.clone();
        moves.push(link);
        moves.extend(tail.moves.iter().cloned());
        Self::with_move_unit(self.dim, self.scale, self.move_unit, entries, moves)
    }

    /// Adds one axis that every entry leaves in place.
    pub fn extended(&self) -> Self {
        let d = self.dim as i32 + 1;
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let mut v = e.entries().to_vec();
                v.push(d);
                SignedPermutation::new(v, e.direction()).expect("extension keeps a permutation")
            })
            .collect();
        TraversalDefinition {
            dim: self.dim + 1,
            scale: self.scale,
            move_unit: self.move_unit,
            entries,
            moves: self.moves.clone(),
        }
    }

    /// Same traversal with every reversed entry `{π]` replaced by `[π·σ}`,
    /// where `σ` maps the reverse of the traversal onto itself.
    pub fn without_reversals(&self, sigma: &SignedPermutation) -> Self {
        let sigma = sigma.with_direction(super::Direction::Forward);
        let entries = self
            .entries
            .iter()
            .map(|e| {
                if e.direction().is_reverse() {
                    e.with_direction(super::Direction::Forward)
                        .compose_unchecked(&sigma)
                } else {
                    e.clone()
                }
            })
            .collect();
        TraversalDefinition {
            entries,
            ..self.clone()
        }
    }
}
