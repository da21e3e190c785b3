//! Self-similar space-filling traversals of cubes and simplices in any
//! number of dimensions.
//!
//! A traversal is written as a list of signed, directed permutations with a
//! move between consecutive entries, for example the two-dimensional Hilbert
//! curve:
//!
//! ```text
//! {2 -1] 1 [1 2} 2 {1 -2] -1 [-2 -1}
//! ```
//!
//! Each `[...}` entry is traversed forward and each `{...]` entry backward;
//! the bare numbers between entries are the axis steps from one subcell
//! centre to the next.
//!
//! The crate is organised as follows:
//!
//! - [`notation`]: permutations, moves, definitions and their text format.
//! - [`generators`]: the sixteen dimension-parametric families and a few
//!   fixed-dimension curves shipped as data files.
//! - [`bitmatrix`]: coordinate-matrix bit tricks for the five quadrant
//!   traversals without rotations.
//! - [`engine`]: path enumeration, point location and squaring.
//! - [`analysis`]: finite-depth checks of continuity, palindromicity,
//!   dominance, locality and related properties.

pub mod analysis;
pub mod bitmatrix;
pub mod engine;
mod error;
pub mod generators;
pub mod notation;

pub use error::{Error, Result};
pub use generators::{generate, FixedCurve, TraversalKind};
pub use notation::{
    format_definition, parse_definition, Direction, Move, Rational, SignedPermutation,
    TraversalDefinition,
};
