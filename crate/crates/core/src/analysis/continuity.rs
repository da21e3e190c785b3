use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::Path;

/// How consecutive points of a path relate to each other.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdjacencyProfile {
    /// Steps to a cell sharing a facet.
    pub face_steps: usize,
    /// Steps that stay in the same cell (shape traversals only).
    pub stay_steps: usize,
    /// All other steps: jumps, or cells meeting only along a lower-dimensional face.
    pub other_steps: usize,
    /// Largest Chebyshev distance between consecutive points, in cells.
    pub max_jump: i64,
    /// 0-based index `k` of the first step from point `k` to `k + 1` that is
    /// neither a face step nor a stay.
    pub first_jump: Option<usize>,
}

impl AdjacencyProfile {
    pub fn is_face_continuous(&self) -> bool {
        self.other_steps == 0
    }
}

pub fn adjacency_profile(path: &Path) -> AdjacencyProfile {
    let units = path.units();
    let mut profile = AdjacencyProfile::default();
    let points: Vec<&[i64]> = path.iter().collect();
    for (k, pair) in points.windows(2).enumerate() {
        let mut moved = 0;
        let mut unit_moves = 0;
        let mut jump = 0;
        for (a, b) in pair[0].iter().zip(pair[1]) {
            let delta = (b - a).abs();
            if delta != 0 {
                moved += 1;
                if delta == units {
                    unit_moves += 1;
                }
            }
            jump = jump.max(delta);
        }
        profile.max_jump = profile.max_jump.max((jump + units - 1) / units);
        if moved == 0 {
            profile.stay_steps += 1;
        } else if moved == 1 && unit_moves == 1 {
            profile.face_steps += 1;
        } else {
            profile.other_steps += 1;
            profile.first_jump.get_or_insert(k);
        }
    }
    profile
}

/// Counts face-connected components of the cells covered by path sections.
///
/// Cells visited more than once (shape traversals) count once.
pub struct SectionCounter {
    cell_of: Vec<u32>,
    neighbours: Vec<Vec<u32>>,
    parent: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl SectionCounter {
    pub fn new(path: &Path) -> Self {
        let cells = path.cells();
        let mut ids: HashMap<Vec<i64>, u32> = HashMap::new();
        let mut cell_of = Vec::with_capacity(cells.len());
        for c in &cells {
            let next = ids.len() as u32;
            cell_of.push(*ids.entry(c.clone()).or_insert(next));
        }
        let mut neighbours = vec![Vec::new(); ids.len()];
        for (cell, &id) in &ids {
            let mut probe = cell.clone();
            for j in 0..probe.len() {
                for delta in [-1, 1] {
                    probe[j] += delta;
                    if let Some(&n) = ids.get(&probe) {
                        neighbours[id as usize].push(n);
                    }
                    probe[j] -= delta;
                }
            }
        }
        let n = ids.len();
        SectionCounter {
            cell_of,
            neighbours,
            parent: vec![0; n],
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Components of the cells of points `a..=b` (0-based).
    pub fn count(&mut self, a: usize, b: usize) -> usize {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut components = 0;
        for k in a..=b {
            let id = self.cell_of[k];
            if self.stamp[id as usize] == epoch {
                continue;
            }
            self.stamp[id as usize] = epoch;
            self.parent[id as usize] = id;
            components += 1;
            for n in 0..self.neighbours[id as usize].len() {
                let other = self.neighbours[id as usize][n];
                if self.stamp[other as usize] != epoch {
                    continue;
                }
                let (ra, rb) = (self.find(id), self.find(other));
                if ra != rb {
                    self.parent[ra as usize] = rb;
                    components -= 1;
                }
            }
        }
        components
    }
}

/// Number of face-connected components of the cells of `path[a..=b]`.
pub fn component_count(path: &Path, a: usize, b: usize) -> usize {
    assert!(a <= b && b < path.len(), "section {a}..={b} outside a path of {}", path.len());
    SectionCounter::new(path).count(a, b)
}

/// Paths up to this length are checked on every section.
pub const EXHAUSTIVE_LIMIT: usize = 512;
/// Number of random sections drawn from longer paths.
pub const SAMPLED_SECTIONS: usize = 10_000;
/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Sections `(a, b)` with `a <= b` to audit: all of them for paths of at
/// most [`EXHAUSTIVE_LIMIT`] points, otherwise [`SAMPLED_SECTIONS`] uniform
/// random pairs.
pub fn sections(len: usize, seed: u64) -> Vec<(usize, usize)> {
    if len <= EXHAUSTIVE_LIMIT {
        return (0..len).flat_map(|a| (a..len).map(move |b| (a, b))).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SAMPLED_SECTIONS)
        .map(|_| {
            let a = rng.gen_range(0..len);
            let b = rng.gen_range(0..len);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Largest component count over the audited sections, with one section
/// attaining it.
pub fn max_components(path: &Path, seed: u64) -> (usize, (usize, usize)) {
    let mut counter = SectionCounter::new(path);
    let mut best = (0, (0, 0));
    for (a, b) in sections(path.len(), seed) {
        let c = counter.count(a, b);
        if c > best.0 {
            best = (c, (a, b));
        }
    }
    best
}
