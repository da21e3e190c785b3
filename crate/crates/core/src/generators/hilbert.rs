//! Generalisations of the Hilbert curve on the binary reflected Gray code
//! pattern.

use super::{signed, well_folded, well_folded_sign, DigitVector};
use crate::{Error, Result, SignedPermutation, TraversalDefinition};

/// Harmonious sign rule: axis 1 gets the sign of the centre's first
/// coordinate, any other axis `p` the opposite sign of coordinate `p`.
fn harmonious_signs(i: usize, axes: &[usize]) -> Vec<i32> {
    axes.iter()
        .map(|&p| {
            let sign = if p == 1 {
                well_folded_sign(i, 1)
            } else {
                -well_folded_sign(i, p)
            };
            sign * p as i32
        })
        .collect()
}

fn inside_out_signs(i: usize, axes: &[usize]) -> Vec<i32> {
    axes.iter().map(|&p| well_folded_sign(i, p) * p as i32).collect()
}

pub fn gen_base_camp(d: usize) -> Result<TraversalDefinition> {
    let count = 1usize << d;
    well_folded(d, |i| {
        if i == 1 {
            let mut e: Vec<i32> = (1..=d as i32).collect();
            e.swap(0, d - 1);
            signed(e, false)
        } else if i == count && d == 1 {
            signed(vec![-1], true)
        } else if i == count {
            let mut e: Vec<i32> = (1..=d as i32).map(|a| -a).collect();
            e.swap(0, d - 1);
            e[d - 1] = 1;
            signed(e, true)
        } else {
            let e = (1..=d).map(|j| well_folded_sign(i, j) * j as i32).collect();
            signed(e, i % 2 == 0)
        }
    })
}

pub fn gen_harmonious(d: usize) -> Result<TraversalDefinition> {
    well_folded(d, |i| {
        let r = DigitVector::new(i as u64 - 1, 2, d);
        let start = (1..=d).rev();
        let (front, back): (Vec<usize>, Vec<usize>) = start.partition(|&a| r.digit(a) == r.digit(1));
        let axes: Vec<usize> = front.into_iter().chain(back).collect();
        signed(harmonious_signs(i, &axes), i % 2 == 1)
    })
}

/// Unsigned axis order shared by the Alfa and Beta curves.
fn hyperorthogonal_axes(i: usize, d: usize) -> Vec<usize> {
    let r = DigitVector::new(i as u64 - 1, 2, d);
    // r'[-1..=d] stored at offset 1
    let mut rp = vec![0u32; d + 2];
    rp[0] = r.digit(1);
    rp[1] = 1 - r.digit(1);
    for j in 1..=d.saturating_sub(2) {
        rp[j + 1] = r.digit(j);
    }
    if d >= 2 {
        let top = d >= 3 && (d - 2..=d).all(|j| r.digit(j) == 1);
        rp[d] = if top { 0 } else { r.digit(d - 1) };
    }
    rp[d + 1] = 1 - rp[d];
    (1..=d)
        .map(|j| {
            let target = rp[d - j];
            (d - j + 1..=d + 1)
                .find(|&h| rp[h] == target)
                .map(|h| h - 1)
                .expect("r' always repeats its reference digit")
        })
        .collect()
}

/// Swaps the last two axes, negates the last and flips the direction.
fn corrected(p: SignedPermutation) -> SignedPermutation {
    let mut e = p.entries().to_vec();
    let d = e.len();
    if d >= 2 {
        e.swap(d - 2, d - 1);
    }
    e[d - 1] = -e[d - 1];
    signed(e, !p.direction().is_reverse())
}

pub fn gen_alfa(d: usize) -> Result<TraversalDefinition> {
    let count = 1usize << d;
    well_folded(d, |i| {
        let axes = hyperorthogonal_axes(i, d);
        let p = signed(harmonious_signs(i, &axes), i % 2 == 1);
        if i == 1 || i == count {
            p
        } else {
            corrected(p)
        }
    })
}

pub fn gen_beta(d: usize) -> Result<TraversalDefinition> {
    if d < 3 {
        return Err(Error::BetaUndefined(d));
    }
    let count = 1usize << d;
    well_folded(d, |i| {
        let axes = hyperorthogonal_axes(i, d);
        let p = signed(inside_out_signs(i, &axes), i % 2 == 1);
        if i == 1 || i == count {
            corrected(p)
        } else {
            p
        }
    })
}

pub fn gen_butz(d: usize) -> Result<TraversalDefinition> {
    well_folded(d, |i| {
        let r = DigitVector::new(i as u64 - 1, 2, d);
        let k = (1..=d).find(|&k| r.digit(k) != r.digit(1)).unwrap_or(1);
        let axes: Vec<usize> = (1..=d).map(|j| (j + k - 1) % d + 1).collect();
        signed(harmonious_signs(i, &axes), i % 2 == 1)
    })
}
