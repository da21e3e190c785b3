use std::fmt;

use super::{PropertyReport, Verdict};
use crate::bitmatrix::gray;
use crate::engine::Path;
use crate::generators::{gen_base_pattern, gen_z};
use crate::{Rational, TraversalDefinition};

/// The order in which a definition visits its first-level cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasePattern {
    /// Binary reflected Gray code.
    G2,
    /// Ternary reflected Gray code.
    G3,
    /// Row-by-row bit interleaving.
    ZigZag,
    Other,
}

impl fmt::Display for BasePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasePattern::G2 => "G2",
            BasePattern::G3 => "G3",
            BasePattern::ZigZag => "zigzag",
            BasePattern::Other => "other",
        })
    }
}

pub fn check_base_pattern(def: &TraversalDefinition) -> BasePattern {
    let d = def.dim();
    if !def.is_cubic() {
        return BasePattern::Other;
    }
    match def.scale() {
        2 if def.moves() == gen_base_pattern(2, d).as_slice() => BasePattern::G2,
        2 if gen_z(d).is_ok_and(|z| z.moves() == def.moves()) => BasePattern::ZigZag,
        3 if def.moves() == gen_base_pattern(3, d).as_slice() => BasePattern::G3,
        _ => BasePattern::Other,
    }
}

/// `bin(c_i) = g(i - 1)` for every first-level cell: bit `j - 1` of the
/// Gray code is set iff the centre lies on the high side of axis `j`.
pub fn check_well_folded_rank(def: &TraversalDefinition) -> PropertyReport {
    const NAME: &str = "well-folded";
    let d = def.dim();
    if def.scale() != 2 || !def.is_cubic() {
        return PropertyReport::new(NAME, d, 1, Verdict::Inconclusive, "not a binary cube traversal");
    }
    let zero = Rational::from_integer(0);
    for (i, c) in def.centres().iter().enumerate() {
        let bin = c
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &x)| if x > zero { acc | 1 << j } else { acc });
        if bin != gray(i as u64) {
            let witness = format!("cell {}: bin(c)={bin:b} g(i-1)={:b}", i + 1, gray(i as u64));
            return PropertyReport::new(NAME, d, 1, Verdict::Fails, witness);
        }
    }
    PropertyReport::new(NAME, d, 1, Verdict::Holds, "")
}

/// Distinct subcell centres in order of first appearance, with the number of
/// entries placed at each.
pub fn centre_multiplicities(def: &TraversalDefinition) -> Vec<(Vec<Rational>, usize)> {
    let mut out: Vec<(Vec<Rational>, usize)> = Vec::new();
    for c in def.centres() {
        match out.iter_mut().find(|(seen, _)| *seen == c) {
            Some((_, n)) => *n += 1,
            None => out.push((c, 1)),
        }
    }
    out
}

/// Every lowest-level grid cell is visited exactly once.
pub fn check_cell_cover(path: &Path) -> PropertyReport {
    const NAME: &str = "cover";
    let mut cells = path.cells();
    let expected = i64::from(path.scale()).pow((path.dim() * path.depth()) as u32) as usize;
    cells.sort();
    if let Some(pair) = cells.windows(2).find(|p| p[0] == p[1]) {
        let witness = format!("cell {:?} is visited more than once", pair[0]);
        return PropertyReport::new(NAME, path.dim(), path.depth(), Verdict::Fails, witness);
    }
    if cells.len() != expected {
        let witness = format!("{} cells visited, expected {expected}", cells.len());
        return PropertyReport::new(NAME, path.dim(), path.depth(), Verdict::Fails, witness);
    }
    PropertyReport::new(NAME, path.dim(), path.depth(), Verdict::Holds, "")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_harmonious, gen_hill_z, gen_peano_family, gen_u, PeanoVariant};

    #[test]
    fn base_patterns() {
        assert_eq!(check_base_pattern(&gen_u(4).unwrap()), BasePattern::G2);
        assert_eq!(check_base_pattern(&gen_z(3).unwrap()), BasePattern::ZigZag);
        assert_eq!(
            check_base_pattern(&gen_peano_family(PeanoVariant::Coil, 3).unwrap()),
            BasePattern::G3
        );
        assert_eq!(check_base_pattern(&gen_hill_z(3).unwrap()), BasePattern::Other);
    }

    #[test]
    fn well_folded_examples() {
        assert!(check_well_folded_rank(&gen_harmonious(5).unwrap()).holds());
        assert!(!check_well_folded_rank(&gen_z(3).unwrap()).holds());
        assert!(check_well_folded_rank(&gen_u(1).unwrap()).holds());
    }

    #[test]
    fn hill_z_multiplicities() {
        let counts: Vec<usize> = centre_multiplicities(&gen_hill_z(3).unwrap())
            .into_iter()
            .map(|(_, n)| n)
            .collect();
        assert_eq!(counts, vec![1, 3, 3, 1]);
    }
}
