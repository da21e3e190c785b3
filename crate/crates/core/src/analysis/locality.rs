use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::Path;
use crate::Rational;

/// Worst bounding-box ratio found over the audited sections of a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxRatio {
    /// Bounding-box volume divided by the number of cells in the section.
    pub ratio: Rational,
    /// 0-based inclusive section attaining `ratio`.
    pub section: (usize, usize),
    pub sections_checked: usize,
}

fn box_volume(lo: &[i64], hi: &[i64]) -> i64 {
    lo.iter().zip(hi).map(|(a, b)| b - a + 1).product()
}

/// Maximum of `bbox volume / section length` over contiguous sections.
///
/// Every section is visited when there are at most `max_sections` of them;
/// otherwise `max_sections` random sections are drawn with `seed`.
pub fn max_bbox_ratio(path: &Path, max_sections: usize, seed: u64) -> BoxRatio {
    let cells = path.cells();
    let n = cells.len();
    let total = n * (n + 1) / 2;
    let mut best = BoxRatio {
        ratio: Rational::from_integer(0),
        section: (0, 0),
        sections_checked: 0,
    };
    let consider = |a: usize, b: usize, lo: &[i64], hi: &[i64], best: &mut BoxRatio| {
        let r = Rational::new(box_volume(lo, hi), (b - a + 1) as i64);
        best.sections_checked += 1;
        if r > best.ratio {
            best.ratio = r;
            best.section = (a, b);
        }
    };
    if total <= max_sections {
        for a in 0..n {
            let mut lo = cells[a].clone();
            let mut hi = cells[a].clone();
            for (b, cell) in cells.iter().enumerate().skip(a) {
                for (j, &x) in cell.iter().enumerate() {
                    lo[j] = lo[j].min(x);
                    hi[j] = hi[j].max(x);
                }
                consider(a, b, &lo, &hi, &mut best);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..max_sections {
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let (a, b) = (x.min(y), x.max(y));
            let mut lo = cells[a].clone();
            let mut hi = cells[a].clone();
            for c in &cells[a..=b] {
                for (j, &x) in c.iter().enumerate() {
                    lo[j] = lo[j].min(x);
                    hi[j] = hi[j].max(x);
                }
            }
            consider(a, b, &lo, &hi, &mut best);
        }
    }
    best
}
