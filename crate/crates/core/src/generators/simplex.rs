//! Traversals of the Hill simplex with `2^d` subsimplices.

use super::{signed, DigitVector};
use crate::{Move, Rational, Result, SignedPermutation, TraversalDefinition};

/// Centre of subsimplex `i` (1-based): `+1/4` on the first `popcount(i - 1)`
/// axes, `-1/4` on the others.
fn hill_centres(d: usize) -> Vec<Vec<Rational>> {
    let quarter = Rational::new(1, 4);
    (0..1u64 << d)
        .map(|n| {
            let ones = n.count_ones() as usize;
            (1..=d).map(|j| if j <= ones { quarter } else { -quarter }).collect()
        })
        .collect()
}

/// `pi[j]` for a zero digit, shared by Hill-Z and Maehara.
fn low_axis(r: &DigitVector, d: usize, j: usize) -> i32 {
    let zeros_above = (j + 1..=d).filter(|&h| r.digit(h) == 0).count();
    (d - zeros_above) as i32
}

pub fn gen_hill_z(d: usize) -> Result<TraversalDefinition> {
    let entries = (0..1u64 << d)
        .map(|n| {
            let r = DigitVector::new(n, 2, d);
            let e = (1..=d)
                .map(|j| {
                    if r.digit(j) == 1 {
                        (1..=j).map(|h| r.digit(h)).sum::<u32>() as i32
                    } else {
                        low_axis(&r, d, j)
                    }
                })
                .collect();
            signed(e, false)
        })
        .collect();
    TraversalDefinition::from_centres(d, 2, entries, &hill_centres(d))
}

/// Maehara-reflected traversal from its closed-form entries.
pub fn gen_maehara(d: usize) -> Result<TraversalDefinition> {
    let entries = (0..1u64 << d)
        .map(|n| {
            let r = DigitVector::new(n, 2, d);
            let e = (1..=d)
                .map(|j| {
                    if r.digit(j) == 1 {
                        -((j..=d).map(|h| r.digit(h)).sum::<u32>() as i32)
                    } else {
                        low_axis(&r, d, j)
                    }
                })
                .collect();
            signed(e, r.digit(1) == 1)
        })
        .collect();
    TraversalDefinition::from_centres(d, 2, entries, &hill_centres(d))
}

/// Maehara-reflected traversal built by repeated bisection: `H(d)` is
/// `H'(d-1)`, the move `{-2..-(d-1)}`, and the reverse of `H'(d-1)` mapped by
/// `[-d..-1}`, where `H'` carries an extra fixed axis.
pub fn gen_maehara_recursive(d: usize) -> Result<TraversalDefinition> {
    let mut h = TraversalDefinition::new(
        1,
        2,
        vec![signed(vec![1], false), signed(vec![-1], true)],
        vec![Move::single(1)],
    )?;
    for k in 2..=d {
        let lifted = h.extended();
        let flip = SignedPermutation::forward((1..=k as i32).rev().map(|a| -a).collect())?;
        let tail = lifted.reversed_pieces().transformed(&flip)?;
        let link = Move::new((2..k as i32).map(|a| -a).collect(), k)?;
        h = lifted.concat(link, &tail)?;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hill_z_low_dimensions() {
        assert_eq!(gen_hill_z(2).unwrap().to_string(), "[1 2} 1 [1 2} [2 1} 2 [1 2}");
        assert_eq!(gen_hill_z(3).unwrap().entries()[2].to_string(), "[2 1 3}");
    }

    #[test]
    fn maehara_low_dimensions() {
        assert_eq!(gen_maehara(1).unwrap().to_string(), "[1} 1 {-1]");
        assert_eq!(gen_maehara(2).unwrap().to_string(), "[1 2} 1 {-1 2] [2 -1} 2 {-2 -1]");
        assert_eq!(gen_maehara_recursive(2).unwrap(), gen_maehara(2).unwrap());
    }

    #[test]
    fn both_maehara_constructions_agree() {
        for d in 1..=6 {
            assert_eq!(gen_maehara_recursive(d).unwrap(), gen_maehara(d).unwrap(), "d={d}");
        }
    }
}
