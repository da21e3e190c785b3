//! Enumeration of traversal paths, point location and squaring.
//!
//! Paths use exact integer coordinates. One unit is `1/(q·s^depth)` of the
//! unit cube width, where `q` is the smallest even number that makes every
//! subcell centre an integer; for cube traversals `q = 2`, so a unit is half
//! a lowest-level cell.

mod locate;
mod square;

use std::fmt;
use std::str::FromStr;

pub use locate::{locate, Cell, Side};
pub use square::{find_reversal_symmetry, squared_definition, squared_path};

use crate::{Error, Result, SignedPermutation, TraversalDefinition};

/// Where the coordinate origin of a path is placed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OriginMode {
    /// Centre of the unit cube.
    Centre,
    /// Lowest corner of the unit cube.
    #[default]
    Corner,
    /// First point of the path.
    First,
    /// Last point of the path.
    Last,
}

impl OriginMode {
    pub fn name(self) -> &'static str {
        match self {
            OriginMode::Centre => "centre",
            OriginMode::Corner => "corner",
            OriginMode::First => "first",
            OriginMode::Last => "last",
        }
    }
}

impl fmt::Display for OriginMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OriginMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "centre" | "center" => Ok(OriginMode::Centre),
            "corner" => Ok(OriginMode::Corner),
            "first" => Ok(OriginMode::First),
            "last" => Ok(OriginMode::Last),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// An enumerated traversal at a fixed depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    dim: usize,
    depth: usize,
    scale: u32,
    units: i64,
    origin: OriginMode,
    // position of the cube centre in output coordinates
    shift: Vec<i64>,
    coords: Vec<i64>,
}

impl Path {
    fn from_centred(
        dim: usize,
        depth: usize,
        scale: u32,
        units: i64,
        coords: Vec<i64>,
    ) -> Self {
        Path {
            dim,
            depth,
            scale,
            units,
            origin: OriginMode::Centre,
            shift: vec![0; dim],
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Coordinate units per lowest-level cell width.
    pub fn units(&self) -> i64 {
        self.units
    }

    /// Width of the whole cube in coordinate units.
    pub fn cube_width(&self) -> i64 {
        self.units * i64::from(self.scale).pow(self.depth as u32)
    }

    pub fn origin(&self) -> OriginMode {
        self.origin
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[i64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn points(&self) -> Vec<Vec<i64>> {
        self.iter().map(<[i64]>::to_vec).collect()
    }

    /// The same path with its origin moved.
    pub fn with_origin(&self, origin: OriginMode) -> Path {
        let half = self.cube_width() / 2;
        let shift: Vec<i64> = match origin {
            OriginMode::Centre => vec![0; self.dim],
            OriginMode::Corner => vec![half; self.dim],
            OriginMode::First | OriginMode::Last => {
                let at = if origin == OriginMode::First { 0 } else { self.len() - 1 };
                self.point(at)
                    .iter()
                    .zip(&self.shift)
                    .map(|(x, s)| s - x)
                    .collect()
            }
        };
        let mut coords = self.coords.clone();
        for (k, x) in coords.iter_mut().enumerate() {
            let j = k % self.dim;
            *x += shift[j] - self.shift[j];
        }
        Path {
            origin,
            shift,
            coords,
            ..self.clone()
        }
    }

    /// Zero-based index of the lowest-level grid cell holding each point,
    /// counted from the lowest corner of the cube.
    pub fn cells(&self) -> Vec<Vec<i64>> {
        let half = self.cube_width() / 2;
        self.iter()
            .map(|p| {
                p.iter()
                    .zip(&self.shift)
                    .map(|(x, s)| (x - s + half).div_euclid(self.units))
                    .collect()
            })
            .collect()
    }
}

/// Position and orientation of one subcell during enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    /// Centre in path units, relative to the cube centre.
    pub centre: Vec<i64>,
    /// Accumulated symmetry; its direction is the direction in which the
    /// subcell is traversed.
    pub transform: SignedPermutation,
    /// Refinement levels still to expand below this subcell.
    pub remaining: usize,
}

/// Subcell centres scaled to integers: `c_i · s · q`.
struct Layout {
    q: i64,
    base: Vec<Vec<i64>>,
}

impl Layout {
    fn new(def: &TraversalDefinition) -> Self {
        let q = def.centre_denominator();
        let factor = crate::Rational::from_integer(i64::from(def.scale()) * q);
        let base = def
            .centres()
            .iter()
            .map(|c| c.iter().map(|&x| (x * factor).to_integer()).collect())
            .collect();
        Layout { q, base }
    }
}

fn power(s: u32, e: usize) -> Result<i64> {
    i64::from(s)
        .checked_pow(e as u32)
        .ok_or_else(|| Error::OutOfDomain(format!("depth {e} is too large for exact coordinates")))
}

/// Walks the subcells of `def` down to `depth`, calling `leaf` for each
/// lowest-level frame in visiting order.
pub fn visit_frames(
    def: &TraversalDefinition,
    depth: usize,
    mut leaf: impl FnMut(&Frame),
) -> Result<i64> {
    let layout = Layout::new(def);
    let s = def.scale();
    power(s, depth)?
        .checked_mul(layout.q)
        .ok_or_else(|| Error::OutOfDomain(format!("depth {depth} is too large for exact coordinates")))?;
    let d = def.dim();
    let mut stack = vec![Frame {
        centre: vec![0; d],
        transform: SignedPermutation::identity(d),
        remaining: depth,
    }];
    let entries = def.entries();
    while let Some(frame) = stack.pop() {
        if frame.remaining == 0 {
            leaf(&frame);
            continue;
        }
        let step = power(s, frame.remaining - 1)?;
        let reverse = frame.transform.direction().is_reverse();
        // push in reverse visiting order so the first child is popped first
        let order: Box<dyn Iterator<Item = usize>> = if reverse {
            Box::new(0..entries.len())
        } else {
            Box::new((0..entries.len()).rev())
        };
        for i in order {
            let offset = frame.transform.apply_unchecked(&layout.base[i]);
            let centre = frame
                .centre
                .iter()
                .zip(offset)
                .map(|(c, o)| c + step * o)
                .collect();
            stack.push(Frame {
                centre,
                transform: frame.transform.compose_unchecked(&entries[i]),
                remaining: frame.remaining - 1,
            });
        }
    }
    Ok(layout.q)
}

/// Streams the lowest-level centres of `def` at `depth`, relative to the cube
/// centre, and returns the number of units per lowest-level cell.
pub fn visit(def: &TraversalDefinition, depth: usize, mut f: impl FnMut(&[i64])) -> Result<i64> {
    visit_frames(def, depth, |frame| f(&frame.centre))
}

/// All lowest-level frames in visiting order.
pub fn frames(def: &TraversalDefinition, depth: usize) -> Result<Vec<Frame>> {
    let mut out = Vec::new();
    visit_frames(def, depth, |frame| out.push(frame.clone()))?;
    Ok(out)
}

/// Path of `def` at `depth` with the origin at the cube centre.
pub fn generate_path(def: &TraversalDefinition, depth: usize) -> Result<Path> {
    let count = def.len().checked_pow(depth as u32).unwrap_or(usize::MAX);
    if count > 1 << 28 {
        return Err(Error::OutOfDomain(format!(
            "depth {depth} would produce {} points",
            if count == usize::MAX { "too many".to_string() } else { count.to_string() }
        )));
    }
    let mut coords = Vec::with_capacity(count * def.dim());
    let units = visit(def, depth, |p| coords.extend_from_slice(p))?;
    Ok(Path::from_centred(def.dim(), depth, def.scale(), units, coords))
}

/// Path of `def` at `depth` with the origin placed per `origin`.
pub fn generate_full_path(def: &TraversalDefinition, depth: usize, origin: OriginMode) -> Result<Path> {
    Ok(generate_path(def, depth)?.with_origin(origin))
}
