//! Signed permutations, moves and traversal definitions, with their text form.

mod definition;
mod moves;
mod perm;
mod text;

pub use definition::TraversalDefinition;
pub use moves::Move;
pub use perm::{Direction, SignedPermutation};
pub use text::{format_definition, parse_definition};

/// Exact rational number used for subcell centres.
pub type Rational = num_rational::Ratio<i64>;
