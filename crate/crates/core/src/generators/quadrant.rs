//! Quadrant traversals without rotations: Z, U, Gray-code, Double-Gray and
//! Inside-out.

use super::{signed, well_folded, well_folded_sign};
use crate::{Rational, Result, SignedPermutation, TraversalDefinition};

/// Z-order: coordinate bits interleaved, every subcube traversed as a whole.
pub fn gen_z(d: usize) -> Result<TraversalDefinition> {
    let quarter = Rational::new(1, 4);
    let centres: Vec<Vec<Rational>> = (0..1u64 << d)
        .map(|n| {
            (0..d)
                .map(|j| if n >> j & 1 == 1 { quarter } else { -quarter })
                .collect()
        })
        .collect();
    let entries = vec![SignedPermutation::identity(d); centres.len()];
    TraversalDefinition::from_centres(d, 2, entries, &centres)
}

pub fn gen_u(d: usize) -> Result<TraversalDefinition> {
    well_folded(d, |_| SignedPermutation::identity(d))
}

/// Reflected binary Gray code order: the U pattern, reversed in every second
/// subcube.
pub fn gen_gray(d: usize) -> Result<TraversalDefinition> {
    well_folded(d, |i| signed((1..=d as i32).collect(), i % 2 == 0))
}

pub fn gen_double_gray(d: usize) -> Result<TraversalDefinition> {
    well_folded(d, |i| {
        let e = (1..=d).map(|j| -well_folded_sign(i, j) * j as i32).collect();
        signed(e, i % 2 == 0)
    })
}

pub fn gen_inside_out(d: usize) -> Result<TraversalDefinition> {
    well_folded(d, |i| {
        let e = (1..=d).map(|j| well_folded_sign(i, j) * j as i32).collect();
        signed(e, i % 2 == 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(gen_z(1).unwrap().to_string(), "[1} 1 [1}");
        assert_eq!(gen_z(2).unwrap().to_string(), "[1 2} 1 [1 2} -1 2 [1 2} 1 [1 2}");
        assert_eq!(gen_u(2).unwrap().to_string(), "[1 2} 1 [1 2} 2 [1 2} -1 [1 2}");
        assert_eq!(gen_gray(2).unwrap().to_string(), "[1 2} 1 {1 2] 2 [1 2} -1 {1 2]");
    }

    #[test]
    fn double_gray_and_inside_out_start() {
        assert!(gen_double_gray(3).unwrap().to_string().starts_with("[1 2 3} 1 {-1 2 3]"));
        assert!(gen_inside_out(3).unwrap().to_string().starts_with("[-1 -2 -3} 1 {1 -2 -3]"));
    }
}
