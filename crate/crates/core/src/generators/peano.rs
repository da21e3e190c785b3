//! Order-preserving curves on the ternary reflected Gray code pattern.

use super::{gen_base_pattern, signed, DigitVector};
use crate::{Result, TraversalDefinition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeanoVariant {
    Peano,
    Coil,
    HalfCoil,
    Meurthe,
}

fn unsigned_axes(variant: PeanoVariant, i: usize, t: &DigitVector) -> Vec<usize> {
    let d = t.len();
    let identity = (1..=d).collect();
    let reversed = (1..=d).rev().collect();
    match variant {
        PeanoVariant::Peano => identity,
        PeanoVariant::Coil => reversed,
        PeanoVariant::HalfCoil if i % 2 == 1 => reversed,
        PeanoVariant::HalfCoil => identity,
        PeanoVariant::Meurthe => {
            let front = (1..=d).filter(|&a| t.digit(a) == 2);
            let back = (1..=d).rev().filter(|&a| t.digit(a) != 2);
            front.chain(back).collect()
        }
    }
}

pub fn gen_peano_family(variant: PeanoVariant, d: usize) -> Result<TraversalDefinition> {
    let count = 3usize.pow(d as u32);
    let entries = (1..=count)
        .map(|i| {
            let t = DigitVector::new(i as u64 - 1, 3, d);
            let parity = t.sum() % 2;
            let e = unsigned_axes(variant, i, &t)
                .into_iter()
                .map(|a| {
                    if t.digit(a) % 2 == parity {
                        a as i32
                    } else {
                        -(a as i32)
                    }
                })
                .collect();
            signed(e, false)
        })
        .collect();
    TraversalDefinition::new(d, 3, entries, gen_base_pattern(3, d))
}
