//! Claimed properties of each family, checked at small depths.

use sfcurves::analysis::{
    adjacency_profile, centre_multiplicities, check_base_pattern, check_cell_cover, check_dominance,
    check_facet_order, check_palindromic, check_straight_jumping, check_well_folded_rank,
    max_bbox_ratio, max_components, BasePattern, Facet, DEFAULT_SEED,
};
use sfcurves::engine::{generate_full_path, generate_path, OriginMode};
use sfcurves::generators::{gen_base_camp, gen_maehara, gen_maehara_recursive};
use sfcurves::{generate, Rational, TraversalKind};

fn dims(kind: TraversalKind, max: usize) -> impl Iterator<Item = usize> {
    kind.min_dim()..=max
}

#[test]
fn maehara_constructions_agree_up_to_six_dimensions() {
    for d in 1..=6 {
        assert_eq!(gen_maehara(d).unwrap(), gen_maehara_recursive(d).unwrap());
    }
}

#[test]
fn base_patterns_by_family() {
    for kind in TraversalKind::ALL {
        let max = if kind.is_ternary() { 4 } else { 6 };
        for d in dims(kind, max) {
            let def = generate(kind, d).unwrap();
            let expected = match kind {
                TraversalKind::Z if d > 1 => BasePattern::ZigZag,
                TraversalKind::HillZ | TraversalKind::MaeharaReflected if d > 1 => BasePattern::Other,
                k if k.is_ternary() => BasePattern::G3,
                _ => BasePattern::G2,
            };
            assert_eq!(check_base_pattern(&def), expected, "{kind} d={d}");
        }
    }
}

#[test]
fn well_folded_families_put_gray_codes_on_their_centres() {
    for kind in TraversalKind::ALL {
        if kind.scale() != 2 || kind.is_simplex() || kind == TraversalKind::Z {
            continue;
        }
        for d in dims(kind, 6) {
            assert!(check_well_folded_rank(&generate(kind, d).unwrap()).holds(), "{kind} d={d}");
        }
    }
}

#[test]
fn unrotated_families_use_identity_axes() {
    for kind in TraversalKind::ALL.into_iter().filter(|k| k.is_unrotated()) {
        for d in 1..=5 {
            let def = generate(kind, d).unwrap();
            let id: Vec<usize> = (1..=d).collect();
            assert!(def.entries().iter().all(|e| e.unsigned() == id), "{kind} d={d}");
        }
    }
}

#[test]
fn peano_family_never_reverses() {
    for kind in TraversalKind::ALL.into_iter().filter(|k| k.is_ternary()) {
        for d in 1..=4 {
            let def = generate(kind, d).unwrap();
            assert!(def.entries().iter().all(|e| !e.direction().is_reverse()), "{kind} d={d}");
        }
    }
}

#[test]
fn hilbert_generalisations_coincide_in_low_dimensions() {
    let kinds = [
        TraversalKind::BaseCampHilbert,
        TraversalKind::HarmoniousHilbert,
        TraversalKind::AlfaHilbert,
        TraversalKind::ButzHilbert,
    ];
    for d in 1..=2 {
        let reference = generate(TraversalKind::HarmoniousHilbert, d).unwrap();
        for kind in kinds {
            let def = generate(kind, d).unwrap();
            for depth in 1..=4 {
                assert_eq!(
                    generate_path(&def, depth).unwrap(),
                    generate_path(&reference, depth).unwrap(),
                    "{kind} d={d} depth={depth}"
                );
            }
        }
    }
}

#[test]
fn low_dimensional_hilbert_texts() {
    for d in 1..=2 {
        let h = generate(TraversalKind::HarmoniousHilbert, d).unwrap();
        assert_eq!(generate(TraversalKind::ButzHilbert, d).unwrap(), h, "d={d}");
    }
    // same curves, written with the square's reversal symmetry applied to some entries
    assert_eq!(
        generate(TraversalKind::AlfaHilbert, 2).unwrap().to_string(),
        "{2 -1] 1 {1 -2] 2 [1 2} -1 [-2 -1}"
    );
    assert_eq!(gen_base_camp(2).unwrap().to_string(), "[2 1} 1 {1 -2] 2 [1 2} -1 {-2 1]");
}

#[test]
fn continuous_families_have_only_face_steps() {
    for kind in TraversalKind::ALL {
        let (max_d, max_depth) = match kind {
            TraversalKind::BaseCampHilbert => continue,
            k if k.is_hilbert() => (4, 3),
            k if k.is_ternary() => (3, 2),
            _ => continue,
        };
        for d in dims(kind, max_d).filter(|&d| d >= 2) {
            let path = generate_path(&generate(kind, d).unwrap(), max_depth).unwrap();
            let profile = adjacency_profile(&path);
            assert_eq!(profile.other_steps, 0, "{kind} d={d}");
        }
    }
}

#[test]
fn base_camp_subcubes_meet_along_edges() {
    let def = generate(TraversalKind::BaseCampHilbert, 2).unwrap();
    assert!(adjacency_profile(&generate_path(&def, 3).unwrap()).is_face_continuous());
    for d in 3..=4 {
        let def = generate(TraversalKind::BaseCampHilbert, d).unwrap();
        let profile = adjacency_profile(&generate_path(&def, 3).unwrap());
        assert_eq!(profile.max_jump, 1, "d={d}");
        assert!(profile.other_steps > 0, "d={d}");
    }
}

#[test]
fn discontinuous_families_jump() {
    for (kind, depth) in [
        (TraversalKind::Z, 2),
        (TraversalKind::U, 2),
        (TraversalKind::GrayCode, 2),
        (TraversalKind::DoubleGray, 2),
        (TraversalKind::InsideOut, 3),
    ] {
        for d in 2..=3 {
            let path = generate_path(&generate(kind, d).unwrap(), depth).unwrap();
            assert!(adjacency_profile(&path).other_steps > 0, "{kind} d={d}");
        }
    }
}

#[test]
fn inside_out_is_continuous_for_two_levels() {
    let path = generate_path(&generate(TraversalKind::InsideOut, 3).unwrap(), 2).unwrap();
    assert_eq!(adjacency_profile(&path).other_steps, 0);
}

#[test]
fn cube_paths_cover_each_cell_once() {
    for kind in TraversalKind::ALL.into_iter().filter(|k| !k.is_simplex()) {
        for d in dims(kind, 3) {
            let depth = if kind.is_ternary() { 2 } else { 3 };
            let path = generate_path(&generate(kind, d).unwrap(), depth).unwrap();
            assert!(check_cell_cover(&path).holds(), "{kind} d={d}");
        }
    }
}

#[test]
fn palindromic_families() {
    for kind in [TraversalKind::DoubleGray, TraversalKind::InsideOut] {
        for d in 2..=3 {
            let r = check_palindromic(&generate(kind, d).unwrap(), 3).unwrap();
            assert!(r.holds(), "{kind} d={d}: {r}");
        }
    }
    let u = check_palindromic(&generate(TraversalKind::U, 2).unwrap(), 2).unwrap();
    assert!(!u.holds());
    assert!(!u.details.is_empty());
}

#[test]
fn straight_jumping_families() {
    for kind in [TraversalKind::GrayCode, TraversalKind::DoubleGray] {
        for d in 2..=3 {
            assert!(check_straight_jumping(&generate(kind, d).unwrap(), 2).unwrap().holds(), "{kind}");
        }
    }
}

#[test]
fn only_z_dominates() {
    for kind in TraversalKind::ALL {
        let def = generate(kind, 3).unwrap();
        let r = check_dominance(&generate_path(&def, 2).unwrap());
        assert_eq!(r.holds(), kind == TraversalKind::Z, "{kind}: {r}");
    }
}

#[test]
fn alfa_and_beta_bounding_boxes() {
    for kind in [TraversalKind::AlfaHilbert, TraversalKind::BetaHilbert] {
        let path = generate_path(&generate(kind, 3).unwrap(), 2).unwrap();
        let r = max_bbox_ratio(&path, usize::MAX, 0);
        assert_eq!(r.sections_checked, 2080);
        assert!(r.ratio <= Rational::from_integer(4), "{kind}: {}", r.ratio);
    }
}

#[test]
fn semi_face_continuity_audit() {
    for (kind, d) in [
        (TraversalKind::Z, 3),
        (TraversalKind::Z, 4),
        (TraversalKind::MaeharaReflected, 3),
    ] {
        let path = generate_path(&generate(kind, d).unwrap(), 3).unwrap();
        let (max, section) = max_components(&path, DEFAULT_SEED);
        assert!(max <= 2, "{kind} d={d}: {max} components in {section:?}");
    }
}

#[test]
fn harmonious_facets_follow_the_square_curve() {
    let cube = generate(TraversalKind::HarmoniousHilbert, 3).unwrap();
    let square = generate(TraversalKind::HarmoniousHilbert, 2).unwrap();
    for facet in Facet::all(3) {
        let r = check_facet_order(&cube, &square, facet, 3).unwrap();
        let exception = facet == Facet { axis: 1, high: true };
        assert_eq!(r.holds(), !exception, "{r}");
    }
}

#[test]
fn peano_family_facets() {
    for kind in TraversalKind::ALL.into_iter().filter(|k| k.is_ternary()) {
        let cube = generate(kind, 3).unwrap();
        let square = generate(kind, 2).unwrap();
        for facet in Facet::all(3) {
            let r = check_facet_order(&cube, &square, facet, 2).unwrap();
            assert!(r.holds(), "{kind}: {r}");
        }
    }
}

#[test]
fn hill_z_centre_multiplicities_are_binomial() {
    for d in [3usize, 4] {
        let def = generate(TraversalKind::HillZ, d).unwrap();
        let zero = Rational::from_integer(0);
        for (centre, count) in centre_multiplicities(&def) {
            let h = centre.iter().filter(|&&x| x > zero).count();
            let binom = (0..h).fold(1, |acc, k| acc * (d - k) / (k + 1));
            assert_eq!(count, binom, "d={d} h={h}");
        }
    }
}

#[test]
fn corner_origin_puts_cells_on_the_grid() {
    let path = generate_full_path(&generate(TraversalKind::ButzHilbert, 2).unwrap(), 2, OriginMode::Corner).unwrap();
    assert!(path.iter().flatten().all(|x| x % 2 == 1));
}
