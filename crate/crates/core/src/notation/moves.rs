use std::fmt;

use super::SignedPermutation;
use crate::{Error, Result};

/// A step between consecutive subcell centres: a multiset of signed axes.
///
/// Each element `e` moves one unit along axis `|e|` in the direction of its
/// sign. The empty move keeps the centre where it is. Elements are kept in
/// canonical order (by axis, then sign) so equal multisets compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Move {
    steps: Vec<i32>,
}

impl Move {
    pub fn new(mut steps: Vec<i32>, dim: usize) -> Result<Self> {
        if let Some(&element) = steps
            .iter()
            .find(|e| **e == 0 || e.unsigned_abs() as usize > dim)
        {
            return Err(Error::MoveOutOfRange { element, dim });
        }
        steps.sort_by_key(|e| (e.unsigned_abs(), *e));
        Ok(Move { steps })
    }

    pub fn empty() -> Self {
        Move::default()
    }

    pub(crate) fn single(e: i32) -> Self {
        Move { steps: vec![e] }
    }

    /// The move realising an integer displacement (in move units).
    pub fn from_displacement(disp: &[i64]) -> Self {
        let mut steps = Vec::new();
        for (j, &n) in disp.iter().enumerate() {
            let axis = j as i32 + 1;
            let e = if n < 0 { -axis } else { axis };
            steps.extend(std::iter::repeat_n(e, n.unsigned_abs() as usize));
        }
        Move { steps }
    }

    pub fn steps(&self) -> &[i32] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Displacement vector in move units.
    pub fn displacement(&self, dim: usize) -> Vec<i64> {
        let mut v = vec![0; dim];
        for &e in &self.steps {
            v[e.unsigned_abs() as usize - 1] += i64::from(e.signum());
        }
        v
    }

    pub fn negated(&self) -> Self {
        let steps = self.steps.iter().map(|e| -e).collect();
        Move::canonical(steps)
    }

    /// The move seen through the cube symmetry `p`.
    pub fn transformed(&self, p: &SignedPermutation) -> Self {
        Move::canonical(self.steps.iter().map(|&e| p.map_axis(e)).collect())
    }

    fn canonical(mut steps: Vec<i32>) -> Self {
        steps.sort_by_key(|e| (e.unsigned_abs(), *e));
        Move { steps }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
