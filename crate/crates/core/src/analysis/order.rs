use super::{PropertyReport, Verdict};
use crate::engine::{generate_full_path, generate_path, OriginMode};
use crate::{Result, SignedPermutation, TraversalDefinition};

fn not_cubic(property: &str, def: &TraversalDefinition, depth: usize) -> PropertyReport {
    PropertyReport::new(property, def.dim(), depth, Verdict::Inconclusive, "not a cube traversal")
}

fn fmt_cell(c: &[i64]) -> String {
    let parts: Vec<String> = c.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// Across every facet shared by two first-level cells, the deeper cells
/// touching the facet are visited in opposite orders on its two sides.
pub fn check_palindromic(def: &TraversalDefinition, depth: usize) -> Result<PropertyReport> {
    const NAME: &str = "palindromic";
    if !def.is_cubic() {
        return Ok(not_cubic(NAME, def, depth));
    }
    let d = def.dim();
    let s = i64::from(def.scale());
    let parents = def.len();
    for k in 2..=depth {
        let sub = s.pow(k as u32 - 1);
        let cells = generate_full_path(def, k, OriginMode::Corner)?.cells();
        // [parent][axis] -> cells on the high / low face of the parent, in path order
        let mut high = vec![vec![Vec::new(); d]; parents];
        let mut low = vec![vec![Vec::new(); d]; parents];
        for cell in &cells {
            let parent = cell.iter().rev().fold(0, |acc, &x| acc * s + x / sub) as usize;
            for a in 0..d {
                if cell[a] % sub == sub - 1 {
                    high[parent][a].push(cell.clone());
                }
                if cell[a] % sub == 0 {
                    low[parent][a].push(cell.clone());
                }
            }
        }
        for parent in 0..parents {
            for a in 0..d {
                let pa = (parent as i64 / s.pow(a as u32)) % s;
                if pa == s - 1 {
                    continue;
                }
                let other = parent + s.pow(a as u32) as usize;
                let mirrored: Vec<Vec<i64>> = high[parent][a]
                    .iter()
                    .rev()
                    .map(|c| {
                        let mut c = c.clone();
                        c[a] += 1;
                        c
                    })
                    .collect();
                if mirrored != low[other][a] {
                    let pos = mirrored
                        .iter()
                        .zip(&low[other][a])
                        .position(|(x, y)| x != y)
                        .unwrap_or(0);
                    let witness = format!(
                        "depth={k} axis={} cells {} {} differ at facet position {pos}",
                        a + 1,
                        fmt_cell(&high[parent][a][0].iter().map(|x| x / sub).collect::<Vec<_>>()),
                        fmt_cell(&low[other][a][0].iter().map(|x| x / sub).collect::<Vec<_>>()),
                    );
                    return Ok(PropertyReport::new(NAME, d, depth, Verdict::Fails, witness));
                }
            }
        }
    }
    Ok(PropertyReport::new(NAME, d, depth, Verdict::Holds, ""))
}

/// Whenever cell `A` is coordinate-wise at most cell `B`, `A` is visited
/// first.
pub fn check_dominance(path: &crate::engine::Path) -> PropertyReport {
    const NAME: &str = "dominance";
    let cells = path.cells();
    for j in 0..cells.len() {
        for i in 0..j {
            let dominated = cells[j] != cells[i]
                && cells[j].iter().zip(&cells[i]).all(|(b, a)| b <= a);
            if dominated {
                let witness = format!(
                    "point {j} {} is visited after point {i} {}",
                    fmt_cell(&cells[j]),
                    fmt_cell(&cells[i])
                );
                return PropertyReport::new(NAME, path.dim(), path.depth(), Verdict::Fails, witness);
            }
        }
    }
    PropertyReport::new(NAME, path.dim(), path.depth(), Verdict::Holds, "")
}

/// Consecutive cells on every level differ in exactly one coordinate.
pub fn check_straight_jumping(def: &TraversalDefinition, depth: usize) -> Result<PropertyReport> {
    const NAME: &str = "straight-jumping";
    if !def.is_cubic() {
        return Ok(not_cubic(NAME, def, depth));
    }
    for k in 1..=depth {
        let cells = generate_full_path(def, k, OriginMode::Corner)?.cells();
        for (n, pair) in cells.windows(2).enumerate() {
            let changed = pair[0].iter().zip(&pair[1]).filter(|(a, b)| a != b).count();
            if changed != 1 {
                let witness = format!(
                    "depth={k} step {n}: {} -> {}",
                    fmt_cell(&pair[0]),
                    fmt_cell(&pair[1])
                );
                return Ok(PropertyReport::new(NAME, def.dim(), depth, Verdict::Fails, witness));
            }
        }
    }
    Ok(PropertyReport::new(NAME, def.dim(), depth, Verdict::Holds, ""))
}

/// A facet of the unit cube: the cells with the lowest or highest
/// coordinate along `axis` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub axis: usize,
    pub high: bool,
}

impl Facet {
    /// All `2d` facets, low before high for each axis.
    pub fn all(d: usize) -> Vec<Facet> {
        (1..=d)
            .flat_map(|axis| [false, true].map(|high| Facet { axis, high }))
            .collect()
    }
}

impl std::fmt::Display for Facet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "x{}={}", self.axis, if self.high { "high" } else { "low" })
    }
}

/// Whether the cells on `facet` are visited in the order of `lower`, the
/// `(d-1)`-dimensional traversal, up to a cube symmetry and possibly
/// reversal.
pub fn check_facet_order(
    def: &TraversalDefinition,
    lower: &TraversalDefinition,
    facet: Facet,
    depth: usize,
) -> Result<PropertyReport> {
    let name = format!("facet-order[{facet}]");
    let d = def.dim();
    let report = |verdict, details: String| PropertyReport::new(&name, d, depth, verdict, details);
    if d < 2 || lower.dim() + 1 != d || lower.scale() != def.scale() || facet.axis == 0 || facet.axis > d {
        return Ok(report(Verdict::Inconclusive, "no matching lower-dimensional traversal".into()));
    }
    if !def.is_cubic() || !lower.is_cubic() {
        return Ok(report(Verdict::Inconclusive, "not a cube traversal".into()));
    }
    let width = i64::from(def.scale()).pow(depth as u32);
    let wanted = if facet.high { width - 1 } else { 0 };
    let a = facet.axis - 1;
    // centred coordinates in half-cell units, matching generate_path
    let induced: Vec<Vec<i64>> = generate_full_path(def, depth, OriginMode::Corner)?
        .cells()
        .into_iter()
        .filter(|c| c[a] == wanted)
        .map(|c| {
            c.iter()
                .enumerate()
                .filter(|&(j, _)| j != a)
                .map(|(_, &x)| 2 * x + 1 - width)
                .collect()
        })
        .collect();
    let target = generate_path(lower, depth)?.points();
    if induced.len() != target.len() {
        return Ok(report(
            Verdict::Fails,
            format!("facet has {} cells, expected {}", induced.len(), target.len()),
        ));
    }
    let n = induced.len();
    for reversed in [false, true] {
        let at = |k: usize| if reversed { &induced[n - 1 - k] } else { &induced[k] };
        let found = SignedPermutation::all(d - 1).into_iter().find(|sigma| {
            (0..n).all(|k| sigma.apply_unchecked(at(k)) == target[k])
        });
        if let Some(sigma) = found {
            let how = if reversed { " reversed" } else { "" };
            return Ok(report(Verdict::Holds, format!("sigma={sigma}{how}")));
        }
    }
    Ok(report(
        Verdict::Fails,
        "no cube symmetry maps the facet order onto the lower-dimensional order".into(),
    ))
}
