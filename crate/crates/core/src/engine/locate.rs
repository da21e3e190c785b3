use crate::{Error, Rational, Result, SignedPermutation, TraversalDefinition};

/// Which limit to take at a boundary between two cells: `Plus` picks the
/// cell that starts at `t`, `Minus` the one that ends there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

/// A lowest-level cell, in unit-cube coordinates with the origin at the
/// lowest corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// 1-based position of the cell in the path.
    pub index: u128,
    pub centre: Vec<Rational>,
    pub width: Rational,
}

impl Cell {
    /// Whether `point` lies in the closed box of the cell.
    pub fn contains(&self, point: &[Rational]) -> bool {
        let half = self.width / 2;
        point.len() == self.centre.len()
            && point
                .iter()
                .zip(&self.centre)
                .all(|(x, c)| *x >= *c - half && *x <= *c + half)
    }
}

/// The cell of the depth-`depth` path that parameter `t` falls in, found by
/// descending through the definition without enumerating the path.
pub fn locate(def: &TraversalDefinition, t: Rational, depth: usize, side: Side) -> Result<Cell> {
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    let in_domain = match side {
        Side::Plus => t >= zero && t < one,
        Side::Minus => t > zero && t <= one,
    };
    if !in_domain {
        return Err(Error::OutOfDomain(format!("t = {t} is outside the domain for {side:?}")));
    }
    let count = def.len() as u128;
    let total = count
        .checked_pow(depth as u32)
        .ok_or_else(|| Error::OutOfDomain(format!("depth {depth} is too deep to index")))?;
    let numer = u128::try_from(*t.numer()).expect("t is non-negative");
    let denom = u128::try_from(*t.denom()).expect("denominator is positive");
    let scaled = total
        .checked_mul(numer)
        .ok_or_else(|| Error::OutOfDomain(format!("depth {depth} is too deep to index")))?;
    let index = match side {
        Side::Plus => scaled / denom + 1,
        Side::Minus => scaled.div_ceil(denom),
    };

    let centres = def.centres();
    let d = def.dim();
    let s = i64::from(def.scale());
    let mut centre = vec![Rational::new(1, 2); d];
    let mut transform = SignedPermutation::identity(d);
    let mut scale = one;
    let mut i = index;
    let mut z = total;
    for _ in 0..depth {
        z /= count;
        let b = i.div_ceil(z);
        let entry = &def.entries()[(b - 1) as usize];
        i = if entry.direction().is_reverse() {
            b * z - i + 1
        } else {
            i - (b - 1) * z
        };
        let offset = transform.apply_unchecked(&centres[(b - 1) as usize]);
        for (c, o) in centre.iter_mut().zip(offset) {
            *c += scale * o;
        }
        transform = transform.compose_unchecked(entry);
        scale /= s;
    }
    Ok(Cell {
        index,
        centre,
        width: scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{generate_full_path, OriginMode};
    use crate::generators::{gen_butz, gen_harmonious};

    #[test]
    fn origin_is_first_cell() {
        let def = gen_harmonious(2).unwrap();
        let cell = locate(&def, Rational::from_integer(0), 3, Side::Plus).unwrap();
        assert_eq!(cell.index, 1);
        assert_eq!(cell.centre, vec![Rational::new(1, 16); 2]);
        assert_eq!(cell.width, Rational::new(1, 8));
    }

    #[test]
    fn segment_midpoints_hit_path_points() {
        let def = gen_butz(3).unwrap();
        let depth = 2;
        let path = generate_full_path(&def, depth, OriginMode::Corner).unwrap();
        let n = path.len() as i64;
        let width = path.cube_width();
        for (k, p) in path.iter().enumerate() {
            let t = Rational::new(2 * k as i64 + 1, 2 * n);
            for side in [Side::Plus, Side::Minus] {
                let cell = locate(&def, t, depth, side).unwrap();
                let expected: Vec<Rational> = p.iter().map(|&x| Rational::new(x, width)).collect();
                assert_eq!(cell.centre, expected, "k={k}");
            }
        }
    }

    #[test]
    fn boundaries_pick_a_side() {
        let def = gen_harmonious(2).unwrap();
        let plus = locate(&def, Rational::new(1, 4), 1, Side::Plus).unwrap();
        let minus = locate(&def, Rational::new(1, 4), 1, Side::Minus).unwrap();
        assert_eq!((plus.index, minus.index), (2, 1));
        assert!(locate(&def, Rational::from_integer(1), 1, Side::Plus).is_err());
        assert!(locate(&def, Rational::from_integer(0), 1, Side::Minus).is_err());
        assert_eq!(locate(&def, Rational::from_integer(1), 2, Side::Minus).unwrap().index, 16);
    }
}
