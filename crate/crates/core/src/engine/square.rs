use super::{frames, generate_full_path, generate_path, OriginMode, Path};
use crate::{Error, Rational, Result, SignedPermutation, TraversalDefinition};

/// The `d²`-dimensional path obtained by applying the traversal to each
/// coordinate of its own output.
///
/// A level-`depth` cell of the squared cube is visited `q`-th when cell `q`
/// of the `d·depth` path of `def` has coordinates `(q_1, ..., q_d)` and
/// coordinate `(i-1)·d + j` of the squared cell is coordinate `j` of cell
/// `q_i` of the `depth` path.
pub fn squared_path(def: &TraversalDefinition, depth: usize) -> Result<Path> {
    if !def.is_cubic() {
        return Err(Error::NotCubic);
    }
    let d = def.dim();
    let inner = generate_full_path(def, depth, OriginMode::Corner)?.cells();
    let outer = generate_full_path(def, d * depth, OriginMode::Corner)?.cells();
    let units = 2;
    let mut coords = Vec::with_capacity(outer.len() * d * d);
    let half = i64::from(def.scale()).pow(depth as u32) * units / 2;
    for q in &outer {
        for &qi in q {
            for &x in &inner[qi as usize] {
                coords.push(units * x + 1 - half);
            }
        }
    }
    Ok(Path::from_centred(d * d, depth, def.scale(), units, coords).with_origin(OriginMode::Corner))
}

/// A symmetry `σ` of the cube with `σ(P[N-1-n]) = P[n]` for the depth-2
/// path `P`, if one exists. Such a `σ` is an involution, and the traversal
/// run backwards is `σ` applied to the traversal.
pub fn find_reversal_symmetry(def: &TraversalDefinition) -> Option<SignedPermutation> {
    let path = generate_path(def, 2).ok()?;
    let n = path.len();
    let first = path.point(0);
    let last = path.point(n - 1);
    SignedPermutation::all(def.dim()).into_iter().find(|sigma| {
        sigma.apply_unchecked(last) == first
            && (0..n).all(|k| sigma.apply_unchecked(path.point(n - 1 - k)) == path.point(k))
    })
}

/// `a ⊕ b`: `|b|` shifted up by `a`, keeping the sign of `b`.
fn oplus(a: i32, b: i32) -> i32 {
    b.signum() * (a + b.abs())
}

/// A self-similar definition of the squared traversal in `d²` dimensions.
///
/// Fails with [`Error::NotSymmetric`] when the traversal is not its own
/// reverse under a cube symmetry.
pub fn squared_definition(def: &TraversalDefinition) -> Result<TraversalDefinition> {
    if !def.is_cubic() {
        return Err(Error::NotCubic);
    }
    let sigma = find_reversal_symmetry(def).ok_or(Error::NotSymmetric)?;
    let forward = def.without_reversals(&sigma);
    let d = def.dim();
    let centres = def.centres();
    let leaves = frames(&forward, d)?;
    let half = i64::from(def.scale()).pow(d as u32);
    let entries = forward.entries();

    let mut new_entries = Vec::with_capacity(leaves.len());
    let mut new_centres: Vec<Vec<Rational>> = Vec::with_capacity(leaves.len());
    for leaf in &leaves {
        // 1-based subcell index along each axis
        let x: Vec<usize> = leaf
            .centre
            .iter()
            .map(|&c| ((c + half - 1) / 2) as usize + 1)
            .collect();
        let mut perm = vec![0i32; d * d];
        for (j, &pj) in leaf.transform.entries().iter().enumerate() {
            let a = pj.unsigned_abs() as usize;
            let inner = &entries[x[a - 1] - 1];
            let p = if pj > 0 {
                inner.clone()
            } else {
                inner.compose_unchecked(&sigma)
            };
            for (jp, &pe) in p.entries().iter().enumerate() {
                perm[j * d + jp] = oplus(((a - 1) * d) as i32, pe);
            }
        }
        new_entries.push(SignedPermutation::forward(perm)?);
        let centre = (0..d)
            .flat_map(|a| centres[x[a] - 1].iter().copied())
            .collect();
        new_centres.push(centre);
    }
    TraversalDefinition::from_centres(d * d, def.scale(), new_entries, &new_centres)
}
