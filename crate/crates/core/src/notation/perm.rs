use std::fmt;
use std::ops::Neg;

use crate::{Error, Result};

/// Traversal direction of a subcell: `[...}` is forward, `{...]` reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Reverse,
}

impl Direction {
    pub fn is_reverse(self) -> bool {
        self == Direction::Reverse
    }

    pub fn flipped(self) -> Direction {
        match self {
            Direction::Forward => Direction::Reverse,
            Direction::Reverse => Direction::Forward,
        }
    }

    /// Direction of a subtraversal nested inside a traversal running `self`.
    pub fn then(self, inner: Direction) -> Direction {
        if self == inner {
            Direction::Forward
        } else {
            Direction::Reverse
        }
    }

    /// `+1` for forward, `-1` for reverse.
    pub fn sign(self) -> i32 {
        match self {
            Direction::Forward => 1,
            Direction::Reverse => -1,
        }
    }
}

/// A symmetry of the cube together with a traversal direction.
///
/// `entries[j - 1]` holds the row of the non-zero entry in column `j` of the
/// matrix, signed with the sign of that entry. So `[3 1 2}` sends the first
/// axis to the third, the second to the first and the third to the second.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    entries: Vec<i32>,
    direction: Direction,
}

impl SignedPermutation {
    pub fn new(entries: Vec<i32>, direction: Direction) -> Result<Self> {
        let dim = entries.len();
        let mut seen = vec![false; dim];
        for &e in &entries {
            let a = e.unsigned_abs() as usize;
            if a == 0 || a > dim || seen[a - 1] {
                return Err(Error::NotAPermutation { dim, entries });
            }
            seen[a - 1] = true;
        }
        if dim == 0 {
            return Err(Error::NotAPermutation { dim, entries });
        }
        Ok(SignedPermutation { entries, direction })
    }

    pub fn forward(entries: Vec<i32>) -> Result<Self> {
        Self::new(entries, Direction::Forward)
    }

    pub fn identity(dim: usize) -> Self {
        SignedPermutation {
            entries: (1..=dim as i32).collect(),
            direction: Direction::Forward,
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn with_direction(&self, direction: Direction) -> Self {
        SignedPermutation {
            entries: self.entries.clone(),
            direction,
        }
    }

    /// The same symmetry traversed the other way round.
    pub fn reversed(&self) -> Self {
        self.with_direction(self.direction.flipped())
    }

    /// The unsigned axis permutation, `|π[1]|, ..., |π[d]|`.
    pub fn unsigned(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.unsigned_abs() as usize).collect()
    }

    /// Image of the signed axis `e` (`1 <= |e| <= d`).
    pub fn map_axis(&self, e: i32) -> i32 {
        e.signum() * self.entries[e.unsigned_abs() as usize - 1]
    }

    /// Multiplies the matrix with the column vector `v`; the direction flag
    /// plays no role.
    pub fn apply<T>(&self, v: &[T]) -> Result<Vec<T>>
    where
        T: Copy + Neg<Output = T>,
    {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Copy + Neg<Output = T>,
    {
        let mut out = v.to_vec();
        for (j, &e) in self.entries.iter().enumerate() {
            let row = e.unsigned_abs() as usize - 1;
            out[row] = if e > 0 { v[j] } else { -v[j] };
        }
        out
    }

    /// Matrix product `self · other`; the result is reverse iff exactly one
    /// operand is.
    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignedPermutation) -> Self {
        SignedPermutation {
            entries: other.entries.iter().map(|&e| self.map_axis(e)).collect(),
            direction: self.direction.then(other.direction),
        }
    }

    /// Transpose of the matrix; the direction is kept.
    pub fn inverse(&self) -> Self {
        let mut entries = vec![0; self.dim()];
        for (j, &e) in self.entries.iter().enumerate() {
            entries[e.unsigned_abs() as usize - 1] = e.signum() * (j as i32 + 1);
        }
        SignedPermutation {
            entries,
            direction: self.direction,
        }
    }

    /// Row-major `d × d` matrix with entries in `{-1, 0, 1}`.
    pub fn matrix(&self) -> Vec<Vec<i32>> {
        let d = self.dim();
        let mut m = vec![vec![0; d]; d];
        for (j, &e) in self.entries.iter().enumerate() {
            m[e.unsigned_abs() as usize - 1][j] = e.signum();
        }
        m
    }

    pub fn determinant(&self) -> i32 {
        let perm = self.unsigned();
        let mut visited = vec![false; perm.len()];
        let mut sign = 1;
        for start in 0..perm.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !visited[k] {
                visited[k] = true;
                k = perm[k] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        self.entries.iter().fold(sign, |acc, e| acc * e.signum())
    }

    /// All `2^d · d!` forward signed permutations of dimension `dim`.
    pub fn all(dim: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for perm in permutations(dim) {
            for signs in 0u32..(1 << dim) {
                let entries = perm
                    .iter()
                    .enumerate()
                    .map(|(j, &a)| if signs >> j & 1 == 1 { -(a as i32) } else { a as i32 })
                    .collect();
                out.push(SignedPermutation {
                    entries,
                    direction: Direction::Forward,
                });
            }
        }
        out
    }
}

/// All permutations of `1..=n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.direction {
            Direction::Forward => ('[', '}'),
            Direction::Reverse => ('{', ']'),
        };
        write!(f, "{open}")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "{close}")
    }
}
