//! Coordinate-matrix bit operations that rank the cells of the quadrant
//! traversals without rotations directly, without recursion.
//!
//! A cell at refinement level `k` is identified by the integer coordinates of
//! its lowest corner, `0 <= x_i < 2^k`. Its [`CoordinateMatrix`] has `d` rows
//! and `k` columns; row `d + 1 - i` holds the bits of `x_i`, most significant
//! first. Reading the matrix column by column, top to bottom, interleaves the
//! coordinate bits.

use std::fmt;

use num_bigint::BigUint;

use crate::generators::TraversalKind;
use crate::{Error, Result};

/// Reflected binary Gray code, `n xor (n >> 1)`.
pub fn gray(n: u64) -> u64 {
    n ^ (n >> 1)
}

/// Inverse of [`gray`]: every bit becomes the xor of itself and all higher
/// bits.
pub fn gray_inverse(mut n: u64) -> u64 {
    let mut shift = 1;
    while shift < 64 {
        n ^= n >> shift;
        shift <<= 1;
    }
    n
}

/// `g` on a bit string, most significant bit first.
fn gray_bits(bits: &mut [u8]) {
    for k in (1..bits.len()).rev() {
        bits[k] ^= bits[k - 1];
    }
}

fn gray_inverse_bits(bits: &mut [u8]) {
    for k in 1..bits.len() {
        bits[k] ^= bits[k - 1];
    }
}

/// A `d × k` matrix of bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoordinateMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<u8>,
}

impl CoordinateMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let d = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        if d == 0 {
            return Err(Error::OutOfDomain("a coordinate matrix needs at least one row".into()));
        }
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::OutOfDomain("rows of a coordinate matrix differ in length".into()));
        }
        if rows.iter().flatten().any(|&b| b > 1) {
            return Err(Error::OutOfDomain("coordinate matrix entries must be 0 or 1".into()));
        }
        Ok(CoordinateMatrix {
            rows: d,
            cols: k,
            bits: rows.concat(),
        })
    }

    /// Matrix of the cell with lowest corner `coords` at level `level`.
    pub fn from_coordinates(coords: &[u64], level: usize) -> Result<Self> {
        let d = coords.len();
        if d == 0 {
            return Err(Error::OutOfDomain("a cell needs at least one coordinate".into()));
        }
        if let Some(&x) = coords.iter().find(|&&x| level < 64 && x >> level != 0) {
            return Err(Error::OutOfDomain(format!(
                "coordinate {x} does not fit in {level} bits"
            )));
        }
        let mut bits = vec![0; d * level];
        for (i, &x) in coords.iter().enumerate() {
            let row = d - 1 - i;
            for col in 0..level {
                bits[row * level + col] = (x >> (level - 1 - col) & 1) as u8;
            }
        }
        Ok(CoordinateMatrix {
            rows: d,
            cols: level,
            bits,
        })
    }

    /// Inverse of [`CoordinateMatrix::from_coordinates`].
    pub fn coordinates(&self) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                let row = self.rows - 1 - i;
                self.row(row).iter().fold(0, |acc, &b| acc << 1 | u64::from(b))
            })
            .collect()
    }

    fn from_column_major(rows: usize, cols: usize, read: &[u8]) -> Self {
        let mut bits = vec![0; rows * cols];
        for col in 0..cols {
            for row in 0..rows {
                bits[row * cols + col] = read[col * rows + row];
            }
        }
        CoordinateMatrix { rows, cols, bits }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `row`, `col`.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.bits[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.bits[row * self.cols..(row + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Bits column by column from the left, each column top to bottom.
    pub fn column_major(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.bits.len());
        for col in 0..self.cols {
            for row in 0..self.rows {
                out.push(self.get(row, col));
            }
        }
        out
    }

    /// Flips every bit in columns 2, 4, 6, ... (1-based).
    pub fn inversion(&self) -> Self {
        let mut out = self.clone();
        for row in 0..self.rows {
            for col in (1..self.cols).step_by(2) {
                out.bits[row * self.cols + col] ^= 1;
            }
        }
        out
    }

    /// Applies `g` to each row.
    pub fn row_coding(&self) -> Self {
        self.map_rows(gray_bits)
    }

    pub fn row_coding_inverse(&self) -> Self {
        self.map_rows(gray_inverse_bits)
    }

    /// Applies `g^-1` to the whole matrix read column by column.
    pub fn ranking(&self) -> Self {
        self.map_whole(gray_inverse_bits)
    }

    pub fn ranking_inverse(&self) -> Self {
        self.map_whole(gray_bits)
    }

    /// Applies `g^-1` to each column.
    pub fn column_ranking(&self) -> Self {
        self.map_columns(gray_inverse_bits)
    }

    pub fn column_ranking_inverse(&self) -> Self {
        self.map_columns(gray_bits)
    }

    fn map_rows(&self, f: fn(&mut [u8])) -> Self {
        let mut out = self.clone();
        for chunk in out.bits.chunks_mut(self.cols.max(1)) {
            f(chunk);
        }
        out
    }

    fn map_whole(&self, f: fn(&mut [u8])) -> Self {
        let mut read = self.column_major();
        f(&mut read);
        Self::from_column_major(self.rows, self.cols, &read)
    }

    fn map_columns(&self, f: fn(&mut [u8])) -> Self {
        let mut read = self.column_major();
        for chunk in read.chunks_mut(self.rows) {
            f(chunk);
        }
        Self::from_column_major(self.rows, self.cols, &read)
    }
}

impl fmt::Display for CoordinateMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..self.rows {
            if row > 0 {
                writeln!(f)?;
            }
            for &b in self.row(row) {
                write!(f, "{b}")?;
            }
        }
        Ok(())
    }
}

/// A cell's position in a traversal, as a `width`-bit binary number.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankWord {
    value: BigUint,
    width: usize,
}

impl RankWord {
    pub fn new(value: BigUint, width: usize) -> Result<Self> {
        if value.bits() > width as u64 {
            return Err(Error::RankOutOfRange {
                rank: value.to_string(),
                bits: width,
            });
        }
        Ok(RankWord { value, width })
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut value = BigUint::default();
        for &b in bits {
            value <<= 1u32;
            if b == 1 {
                value += 1u32;
            }
        }
        RankWord {
            value,
            width: bits.len(),
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The rank as a machine integer, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.value).ok()
    }

    /// Bits most significant first, padded to the full width.
    pub fn bits(&self) -> Vec<u8> {
        (0..self.width)
            .rev()
            .map(|k| u8::from(self.value.bit(k as u64)))
            .collect()
    }
}

impl fmt::Display for RankWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The five traversals whose ranks follow from matrix operations alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadrantKind {
    Z,
    U,
    GrayCode,
    DoubleGray,
    InsideOut,
}

impl QuadrantKind {
    pub const ALL: [QuadrantKind; 5] = [
        QuadrantKind::Z,
        QuadrantKind::U,
        QuadrantKind::GrayCode,
        QuadrantKind::DoubleGray,
        QuadrantKind::InsideOut,
    ];

    pub fn traversal_kind(self) -> TraversalKind {
        match self {
            QuadrantKind::Z => TraversalKind::Z,
            QuadrantKind::U => TraversalKind::U,
            QuadrantKind::GrayCode => TraversalKind::GrayCode,
            QuadrantKind::DoubleGray => TraversalKind::DoubleGray,
            QuadrantKind::InsideOut => TraversalKind::InsideOut,
        }
    }
}

impl TryFrom<TraversalKind> for QuadrantKind {
    type Error = Error;

    fn try_from(kind: TraversalKind) -> Result<Self> {
        QuadrantKind::ALL
            .into_iter()
            .find(|q| q.traversal_kind() == kind)
            .ok_or_else(|| {
                Error::OutOfDomain(format!("no bit-matrix ranking is known for {kind}"))
            })
    }
}

/// Position of the cell `corner` in the traversal `kind`.
pub fn rank_of_cell(kind: QuadrantKind, corner: &CoordinateMatrix) -> RankWord {
    let m = match kind {
        QuadrantKind::Z => corner.clone(),
        QuadrantKind::U => corner.column_ranking(),
        QuadrantKind::GrayCode => corner.ranking(),
        QuadrantKind::DoubleGray => corner.row_coding().ranking(),
        QuadrantKind::InsideOut => corner.inversion().row_coding().ranking(),
    };
    RankWord::from_bits(&m.column_major())
}

/// The cell at position `rank` among the `2^(d·level)` cells of level
/// `level`.
pub fn cell_of_rank(
    kind: QuadrantKind,
    rank: &RankWord,
    d: usize,
    level: usize,
) -> Result<CoordinateMatrix> {
    let width = d * level;
    if d == 0 || rank.value.bits() > width as u64 {
        return Err(Error::RankOutOfRange {
            rank: rank.value.to_string(),
            bits: width,
        });
    }
    let padded = RankWord {
        value: rank.value.clone(),
        width,
    };
    let m = CoordinateMatrix::from_column_major(d, level, &padded.bits());
    Ok(match kind {
        QuadrantKind::Z => m,
        QuadrantKind::U => m.column_ranking_inverse(),
        QuadrantKind::GrayCode => m.ranking_inverse(),
        QuadrantKind::DoubleGray => m.ranking_inverse().row_coding_inverse(),
        QuadrantKind::InsideOut => m.ranking_inverse().row_coding_inverse().inversion(),
    })
}
