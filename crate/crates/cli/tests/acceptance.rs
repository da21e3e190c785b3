//! Acceptance suite: one PASS/FAIL line per criterion, then a single assertion.

use std::process::Command;
use std::time::{Duration, Instant};

use sfcurves::analysis::{
    adjacency_profile, centre_multiplicities, check_dominance, check_facet_order, check_palindromic,
    check_straight_jumping, max_bbox_ratio, max_components, Facet, DEFAULT_SEED,
};
use sfcurves::bitmatrix::{rank_of_cell, CoordinateMatrix, QuadrantKind};
use sfcurves::engine::{
    generate_full_path, generate_path, locate, squared_definition, squared_path, OriginMode, Side,
};
use sfcurves::generators::{gen_maehara, gen_maehara_recursive};
use sfcurves::{generate, Error, FixedCurve, Rational, TraversalDefinition, TraversalKind};

const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/golden");

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{GOLDEN}/{name}.txt"))
        .unwrap_or_else(|e| panic!("{name}: {e}"))
        .trim_end()
        .to_string()
}

fn def(kind: TraversalKind, d: usize) -> TraversalDefinition {
    generate(kind, d).unwrap()
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn golden_definitions() -> Outcome {
    for kind in TraversalKind::ALL {
        let out = Command::new(env!("CARGO_BIN_EXE_sfcurves"))
            .args(["describe", kind.name(), "3"])
            .output()
            .map_err(|e| e.to_string())?;
        let text = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.success() && text.trim_end() == golden(&format!("{}-3", kind.name())), || {
            format!("{kind}: got {}", text.trim_end())
        })?;
    }
    Ok("16 displays".into())
}

fn matrix_example() -> Outcome {
    let x0 = CoordinateMatrix::new(vec![vec![0, 1, 1, 0], vec![1, 0, 1, 1], vec![0, 0, 0, 1]]).unwrap();
    let expected = [
        ("inversion", x0.inversion(), [[0, 0, 1, 1], [1, 1, 1, 0], [0, 1, 0, 0]]),
        ("row coding", x0.row_coding(), [[0, 1, 0, 1], [1, 1, 1, 0], [0, 0, 0, 1]]),
        ("ranking", x0.ranking(), [[0, 0, 1, 0], [1, 0, 0, 1], [1, 0, 0, 0]]),
        ("column ranking", x0.column_ranking(), [[0, 1, 1, 0], [1, 1, 0, 1], [1, 1, 0, 0]]),
    ];
    for (name, got, rows) in expected {
        let rows: Vec<Vec<u8>> = rows.iter().map(|r| r.to_vec()).collect();
        ensure(got.to_rows() == rows, || format!("{name}: {:?}", got.to_rows()))?;
    }
    let rank = rank_of_cell(QuadrantKind::U, &x0).to_string();
    ensure(rank == "011111100010", || format!("U rank {rank}"))?;
    Ok(format!("U rank {rank}"))
}

fn oracle_equivalence() -> Outcome {
    let mut cases = 0;
    for kind in QuadrantKind::ALL {
        for d in 1..=4 {
            let traversal = def(kind.traversal_kind(), d);
            for depth in 1..=3 {
                let cells = generate_full_path(&traversal, depth, OriginMode::Corner).unwrap().cells();
                for (i, cell) in cells.iter().enumerate() {
                    let coords: Vec<u64> = cell.iter().map(|&x| x as u64).collect();
                    let m = CoordinateMatrix::from_coordinates(&coords, depth).unwrap();
                    let rank = rank_of_cell(kind, &m).to_u64();
                    ensure(rank == Some(i as u64), || {
                        format!("{kind:?} d={d} depth={depth}: cell {cell:?} at {i} ranked {rank:?}")
                    })?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn hilbert_coincidence() -> Outcome {
    let kinds = [
        TraversalKind::BaseCampHilbert,
        TraversalKind::HarmoniousHilbert,
        TraversalKind::AlfaHilbert,
        TraversalKind::ButzHilbert,
    ];
    let mut differing = Vec::new();
    let mut same_paths = true;
    for d in 1..=2 {
        let reference = def(TraversalKind::HarmoniousHilbert, d);
        for kind in kinds {
            let other = def(kind, d);
            if other != reference {
                differing.push(format!("{kind} d={d}: {other}"));
            }
            same_paths &= (1..=4).all(|depth| {
                generate_path(&other, depth).unwrap() == generate_path(&reference, depth).unwrap()
            });
        }
    }
    let paths = if same_paths {
        "paths coincide at depths 1..4"
    } else {
        "paths differ"
    };
    ensure(differing.is_empty(), || {
        format!("definitions differ from harmonious ({paths}): {}", differing.join("; "))
    })?;
    Ok(paths.into())
}

fn maehara_constructions() -> Outcome {
    for d in 1..=6 {
        let (direct, recursive) = (gen_maehara(d).unwrap(), gen_maehara_recursive(d).unwrap());
        ensure(direct == recursive, || format!("d={d}: {direct} vs {recursive}"))?;
    }
    Ok("d=1..6".into())
}

fn continuity_suite() -> Outcome {
    let mut cases = Vec::new();
    for kind in [
        TraversalKind::BaseCampHilbert,
        TraversalKind::HarmoniousHilbert,
        TraversalKind::AlfaHilbert,
        TraversalKind::BetaHilbert,
        TraversalKind::ButzHilbert,
    ] {
        for d in 2.max(kind.min_dim())..=4 {
            cases.push((kind, d, 3));
        }
    }
    for kind in TraversalKind::ALL.into_iter().filter(|k| k.is_ternary()) {
        for d in 2..=3 {
            cases.push((kind, d, 2));
        }
    }
    let mut failures = Vec::new();
    for &(kind, d, depth) in &cases {
        let path = generate_path(&def(kind, d), depth).unwrap();
        let profile = adjacency_profile(&path);
        if profile.other_steps > 0 {
            failures.push(format!(
                "{kind} d={d}: {} non-face steps, first at {:?}, max jump {} cell",
                profile.other_steps, profile.first_jump, profile.max_jump
            ));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} cases", cases.len()))
}

fn discontinuity_witnesses() -> Outcome {
    let mut witnesses = Vec::new();
    for (kind, depth) in [
        (TraversalKind::Z, 2),
        (TraversalKind::U, 2),
        (TraversalKind::GrayCode, 2),
        (TraversalKind::DoubleGray, 2),
        (TraversalKind::InsideOut, 3),
    ] {
        for d in 2..=3 {
            let profile = adjacency_profile(&generate_path(&def(kind, d), depth).unwrap());
            let step = profile.first_jump.ok_or_else(|| format!("{kind} d={d} depth={depth}: no jump"))?;
            witnesses.push(format!("{kind}/{d}@{step}"));
        }
    }
    Ok(witnesses.join(" "))
}

fn property_matrix() -> Outcome {
    for kind in [TraversalKind::DoubleGray, TraversalKind::InsideOut] {
        for d in 2..=3 {
            let r = check_palindromic(&def(kind, d), 3).unwrap();
            ensure(r.holds(), || r.to_string())?;
        }
    }
    for kind in [TraversalKind::GrayCode, TraversalKind::DoubleGray] {
        for d in 2..=3 {
            let r = check_straight_jumping(&def(kind, d), 2).unwrap();
            ensure(r.holds(), || r.to_string())?;
        }
    }
    for kind in TraversalKind::ALL {
        let r = check_dominance(&generate_path(&def(kind, 3), 2).unwrap());
        let expected = kind == TraversalKind::Z;
        ensure(r.holds() == expected && (expected || !r.details.is_empty()), || r.to_string())?;
    }
    Ok("palindromic, straight-jumping, dominance".into())
}

fn squared_goldens() -> Outcome {
    let mut sizes = Vec::new();
    for (name, kind) in [
        ("squared-inside-out", TraversalKind::InsideOut),
        ("squared-hilbert", TraversalKind::HarmoniousHilbert),
    ] {
        let base = def(kind, 2);
        let squared = squared_definition(&base).map_err(|e| e.to_string())?;
        ensure(squared.to_string() == golden(name), || format!("{name}: {squared}"))?;
        for depth in 2..=3 {
            let direct = generate_path(&squared, depth).unwrap();
            let built = squared_path(&base, depth).unwrap().with_origin(OriginMode::Centre);
            ensure(direct.points() == built.points(), || format!("{name} depth {depth}: paths differ"))?;
            sizes.push(direct.len());
        }
    }
    Ok(format!("points {sizes:?}"))
}

fn meander_squares() -> Outcome {
    let r = |n: i64, d: i64| Rational::new(n, d);
    let tau = [
        (17, [r(2, 9), r(1, 3)]),
        (18, [r(1, 3), r(1, 3)]),
        (19, [r(5, 18), r(5, 18)]),
        (21, [r(1, 3), r(1, 9)]),
        (22, [r(2, 9), r(1, 9)]),
        (23, [r(5, 18), r(1, 6)]),
    ];
    let tau_squared = [
        [r(2, 3), r(0, 1), r(2, 3), r(1, 3)],
        [r(2, 3), r(1, 3), r(2, 3), r(1, 3)],
        [r(1, 1), r(1, 3), r(1, 1), r(1, 3)],
        [r(2, 3), r(1, 3), r(1, 3), r(0, 1)],
        [r(2, 3), r(0, 1), r(1, 3), r(0, 1)],
        [r(1, 1), r(1, 3), r(2, 3), r(1, 3)],
    ];
    let meander = FixedCurve::Meander2D.definition();
    for ((n, point), squared) in tau.iter().zip(&tau_squared) {
        for depth in 4..=6 {
            for side in [Side::Plus, Side::Minus] {
                let cell = locate(&meander, r(*n, 324), depth, side).unwrap();
                ensure(cell.contains(point), || format!("t={n}/324 depth={depth}: {cell:?}"))?;
                for (k, x) in point.iter().enumerate() {
                    let Ok(inner) = locate(&meander, *x, depth, side) else { continue };
                    ensure(inner.contains(&squared[2 * k..2 * k + 2]), || {
                        format!("tau'({n}/324) coordinate group {k} at depth {depth}")
                    })?;
                }
            }
        }
    }
    let shared = |a: usize, b: usize| {
        tau_squared[a].iter().zip(&tau_squared[b]).filter(|(x, y)| x == y).count()
    };
    ensure(shared(1, 0) >= 2 && shared(1, 2) >= 2 && shared(4, 5) == 0, || "sharing pattern".into())?;
    let verdict = squared_definition(&meander);
    ensure(verdict == Err(Error::NotSymmetric), || format!("{verdict:?}"))?;
    Ok("six points, not symmetric".into())
}

fn locality_bound() -> Outcome {
    let mut found = Vec::new();
    for kind in [TraversalKind::AlfaHilbert, TraversalKind::BetaHilbert] {
        let b = max_bbox_ratio(&generate_path(&def(kind, 3), 2).unwrap(), usize::MAX, 0);
        ensure(b.sections_checked == 2080 && b.ratio <= Rational::from_integer(4), || {
            format!("{kind}: ratio {} over {} sections", b.ratio, b.sections_checked)
        })?;
        found.push(format!("{kind} {}", b.ratio));
    }
    Ok(found.join(", "))
}

fn semi_face_continuity() -> Outcome {
    let mut found = Vec::new();
    for (kind, d) in [
        (TraversalKind::Z, 3),
        (TraversalKind::Z, 4),
        (TraversalKind::MaeharaReflected, 3),
    ] {
        let (max, section) = max_components(&generate_path(&def(kind, d), 3).unwrap(), DEFAULT_SEED);
        ensure(max <= 2, || format!("{kind} d={d}: {max} components in {section:?}"))?;
        found.push(format!("{kind}/{d} {max}"));
    }
    Ok(found.join(", "))
}

fn facet_recursion() -> Outcome {
    let cube = def(TraversalKind::HarmoniousHilbert, 3);
    let square = def(TraversalKind::HarmoniousHilbert, 2);
    for facet in Facet::all(3) {
        let r = check_facet_order(&cube, &square, facet, 3).unwrap();
        let exception = facet == Facet { axis: 1, high: true };
        ensure(r.holds() != exception, || r.to_string())?;
    }
    for kind in TraversalKind::ALL.into_iter().filter(|k| k.is_ternary()) {
        let (cube, square) = (def(kind, 3), def(kind, 2));
        for facet in Facet::all(3) {
            let r = check_facet_order(&cube, &square, facet, 2).unwrap();
            ensure(r.holds(), || format!("{kind}: {r}"))?;
        }
    }
    Ok("harmonious 5/6, peano family 6/6".into())
}

fn hill_z_counts() -> Outcome {
    let zero = Rational::from_integer(0);
    for d in [3usize, 4] {
        for (centre, count) in centre_multiplicities(&def(TraversalKind::HillZ, d)) {
            let h = centre.iter().filter(|&&x| x > zero).count();
            let binomial = (0..h).fold(1, |acc, k| acc * (d - k) / (k + 1));
            ensure(count == binomial, || format!("d={d} h={h}: {count} entries, expected {binomial}"))?;
        }
    }
    Ok("d=3,4".into())
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 14] = [
        ("golden definitions", secs(1), golden_definitions),
        ("matrix worked example", secs(1), matrix_example),
        ("rank oracle equivalence", secs(30), oracle_equivalence),
        ("hilbert coincidence at d=1,2", secs(10), hilbert_coincidence),
        ("maehara double construction", secs(5), maehara_constructions),
        ("continuity suite", secs(60), continuity_suite),
        ("discontinuity witnesses", secs(10), discontinuity_witnesses),
        ("property matrix", secs(60), property_matrix),
        ("squared goldens", secs(10), squared_goldens),
        ("squared meander points", secs(30), meander_squares),
        ("locality bound", secs(10), locality_bound),
        ("semi-face-continuity audit", secs(60), semi_face_continuity),
        ("facet recursion", secs(60), facet_recursion),
        ("hill-z combinatorics", secs(10), hill_z_counts),
    ];
    let mut failed = Vec::new();
    for (n, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(details) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?} ({details})")),
            other => other,
        };
        match outcome {
            Ok(details) => println!("PASS {:>2} {name} [{elapsed:.2?}] {details}", n + 1),
            Err(why) => {
                println!("FAIL {:>2} {name} [{elapsed:.2?}] {why}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
