mod common;

use fliplab::cylinder::{
    canonical_diagram, cylindrify, flip_to_canonical, planar_to_diagram, random_diagram, replay, stage_invariant,
    CanonicalSign, CylindricalDiagram,
};
use fliplab::pcircle::{fixtures, random_flips, PlanarArrangement, TripleClass};
use fliplab::signotope::binomial;
use fliplab::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Whether every pair of circles meets exactly twice, read off the words.
fn pairs_cross_twice(a: &PlanarArrangement) -> bool {
    let n = a.n();
    let mut count = vec![0usize; n * n];
    for (c, w) in a.words().iter().enumerate() {
        for x in w {
            let d = x.other(c);
            count[c.min(d) * n + c.max(d)] += 1;
        }
    }
    (0..n).all(|i| (i + 1..n).all(|j| count[i * n + j] == 4))
}

fn rotations(d: &CylindricalDiagram) -> Vec<CylindricalDiagram> {
    let mut out = vec![d.clone()];
    for _ in 1..d.word().len() {
        let next = out.last().unwrap().rotate_cut();
        out.push(next);
    }
    out
}

#[test]
fn canonical_three_curve_diagrams_give_the_expected_types() {
    for (sign, class) in [(CanonicalSign::Minus, TripleClass::NonKrupp(2)), (CanonicalSign::Plus, TripleClass::NonKrupp(4))] {
        for n in 3..=5 {
            let a = canonical_diagram(n, sign).to_planar().unwrap();
            assert!(a.triple_classes().iter().all(|(_, c)| *c == class));
        }
    }
}

#[test]
fn canonical_words_meet_in_order() {
    for n in 2..=7 {
        let d = canonical_diagram(n, CanonicalSign::Minus);
        assert_eq!(d.word().len(), 2 * binomial(n, 2));
        assert!(common::is_canonical_minus(n, d.word()));
        assert_eq!(canonical_diagram(n, CanonicalSign::Plus).word().len(), 2 * binomial(n, 2));
    }
}

#[test]
fn invalid_words_are_rejected() {
    assert!(CylindricalDiagram::new(3, vec![0, 1]).is_err());
    assert!(CylindricalDiagram::new(3, vec![0, 0, 0, 0, 1, 1]).is_err());
    assert!(CylindricalDiagram::new(3, vec![0, 1, 9, 0, 1, 0]).is_err());
    assert!(CylindricalDiagram::from_one_based(3, &[0, 1, 1, 1, 1, 1]).is_err());
}

#[test]
fn diagram_json_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let d = random_diagram(5, 40, &mut rng);
    let text = serde_json::to_string(&d).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["word"].as_array().unwrap().len(), 20);
    assert!(v["word"].as_array().unwrap().iter().all(|p| p.as_u64().unwrap() >= 1));
    let back: CylindricalDiagram = serde_json::from_str(&text).unwrap();
    assert_eq!(back, d);
    let path = format!("{}/fixtures/canonical_minus_4.json", env!("CARGO_MANIFEST_DIR"));
    let f: CylindricalDiagram = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(f, canonical_diagram(4, CanonicalSign::Minus));
}

#[test]
fn planar_round_trip_of_canonical_diagrams() {
    for n in 2..=5 {
        for sign in [CanonicalSign::Minus, CanonicalSign::Plus] {
            let d = canonical_diagram(n, sign);
            let a = d.to_planar().unwrap();
            let center = a.center_faces()[0];
            let e = planar_to_diagram(&a, center).unwrap();
            assert_eq!(e.to_planar().unwrap().canonical_code(), a.canonical_code());
            assert!(rotations(&e).iter().any(|r| r == &d) || e.same_up_to_cut(&d));
        }
    }
}

#[test]
fn venn_fixture_round_trip() {
    let k = fixtures::krupp();
    let d = planar_to_diagram(&k, k.center_faces()[0]).unwrap();
    assert_eq!(d.to_planar().unwrap(), k);
}

#[test]
fn non_cylindrical_type_has_no_diagram() {
    let a = fixtures::nonkrupp(3);
    for f in 0..a.face_count() {
        assert!(matches!(planar_to_diagram(&a, f), Err(Error::NotCylindrical)));
    }
}

#[test]
fn cut_rotation_and_commutation_keep_the_diagram() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let d = random_diagram(5, 50, &mut rng);
    for r in rotations(&d) {
        assert!(r.same_up_to_cut(&d));
        assert_eq!(r.to_planar().unwrap(), d.to_planar().unwrap());
    }
    let normal = CylindricalDiagram::new(5, d.normal_form()).unwrap();
    assert_eq!(normal, d);
    let rebuilt = CylindricalDiagram::from_local_sequences(5, &d.local_sequences()).unwrap();
    assert_eq!(rebuilt, d);
}

#[test]
fn mirror_swaps_the_canonical_diagrams() {
    for n in 2..=6 {
        let minus = canonical_diagram(n, CanonicalSign::Minus);
        let plus = canonical_diagram(n, CanonicalSign::Plus);
        assert!(minus.mirror().same_up_to_cut(&plus) || minus.mirror().to_planar().unwrap() == plus.to_planar().unwrap());
        assert_eq!(minus.mirror().mirror(), minus);
    }
}

#[test]
fn canonical_input_needs_no_flips() {
    for n in 2..=6 {
        let d = canonical_diagram(n, CanonicalSign::Minus);
        let (flips, end) = flip_to_canonical(&d, CanonicalSign::Minus).unwrap();
        assert!(flips.is_empty());
        assert_eq!(end, d);
        let p = canonical_diagram(n, CanonicalSign::Plus);
        assert!(flip_to_canonical(&p, CanonicalSign::Plus).unwrap().0.is_empty());
    }
}

#[test]
fn opposite_canonical_diagram_takes_exactly_twice_the_triples() {
    for n in 3..=6 {
        let p = canonical_diagram(n, CanonicalSign::Plus);
        let (flips, end) = flip_to_canonical(&p, CanonicalSign::Minus).unwrap();
        assert_eq!(flips.len(), 2 * binomial(n, 3), "n={n}");
        assert!(common::is_canonical_minus(n, end.word()));
        assert_eq!(replay(&p, &flips).unwrap(), end);
        // each triple of curves is flipped exactly twice
        let mut per = std::collections::HashMap::new();
        for t in &flips {
            *per.entry(t.curves()).or_insert(0) += 1;
        }
        assert!(per.values().all(|&m| m == 2) && per.len() == binomial(n, 3));
    }
}

#[test]
fn stages_never_go_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 3..=6 {
        for _ in 0..40 {
            let d = random_diagram(n, 40, &mut rng);
            let (flips, _) = flip_to_canonical(&d, CanonicalSign::Minus).unwrap();
            let stages: Vec<usize> = flips.iter().map(|t| t.curves()[0]).collect();
            assert!(stages.windows(2).all(|w| w[0] <= w[1]));
            let mut cur = d.clone();
            let mut done = 0;
            for (i, t) in flips.iter().enumerate() {
                cur = cur.flip(t).unwrap();
                let next_stage = flips.get(i + 1).map(|u| u.curves()[0]).unwrap_or(n);
                while done < next_stage {
                    assert!(stage_invariant(&cur, done), "stage {done}");
                    done += 1;
                }
            }
        }
    }
}

#[test]
fn diagram_flips_commute_with_the_planar_image() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for n in 3..=5 {
        for _ in 0..20 {
            let d = random_diagram(n, 30, &mut rng);
            let a = d.to_planar().unwrap();
            // cells at the center or touching the outer rim have no diagram triangle
            assert!(d.triangles().len() <= a.triangle_count());
            for t in d.triangles() {
                assert!(a.find_triangle(&t.planar()).is_some());
                let via_diagram = d.flip(&t).unwrap().to_planar().unwrap();
                let via_planar = a.flip(&t.planar()).unwrap();
                assert_eq!(via_diagram, via_planar);
            }
        }
    }
}

#[test]
fn cylindrify_leaves_cylindrical_input_alone() {
    for a in [fixtures::krupp(), fixtures::nonkrupp(2), fixtures::nonkrupp(4)] {
        let run = cylindrify(&a).unwrap();
        assert!(run.flips.is_empty());
        assert_eq!(run.result, a);
    }
}

#[test]
fn cylindrify_fixes_the_middle_triangle_in_one_flip() {
    let a = fixtures::nonkrupp(3);
    let run = cylindrify(&a).unwrap();
    assert_eq!(run.flips.len(), 1);
    assert!(run.result.is_cylindrical());
    assert!(a.neighbors().iter().all(|b| b.is_cylindrical() || b == &a) || run.flips.len() == 1);
}

#[test]
fn cylindrify_uses_lens_sweeps_on_some_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut sweeps = 0;
    let mut non_cylindrical = 0;
    for _ in 0..300 {
        let start = canonical_diagram(5, CanonicalSign::Minus).to_planar().unwrap();
        let a = random_flips(&start, 200, &mut rng);
        non_cylindrical += usize::from(!a.is_cylindrical());
        let run = cylindrify(&a).unwrap();
        sweeps += run.lens_sweeps;
        let mut cur = a.clone();
        for f in &run.flips {
            cur = cur.flip(f).unwrap();
            assert!(pairs_cross_twice(&cur));
        }
        assert!(cur.is_cylindrical());
        assert_eq!(cur, run.result);
    }
    assert!(non_cylindrical > 0);
    assert!(sweeps > 0);
}

proptest! {
    #![proptest_config(common::proptest_config(48))]

    #[test]
    fn random_diagrams_reach_the_canonical_one(n in 2usize..=6, steps in 0usize..80, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(n, steps, &mut rng);
        let a = d.to_planar().unwrap();
        prop_assert!(a.is_cylindrical());
        let (flips, end) = flip_to_canonical(&d, CanonicalSign::Minus).unwrap();
        prop_assert!(flips.len() <= 2 * binomial(n, 3));
        prop_assert!(common::is_canonical_minus(n, end.word()));
        prop_assert_eq!(replay(&d, &flips).unwrap(), end);
        let (plus_flips, plus_end) = flip_to_canonical(&d, CanonicalSign::Plus).unwrap();
        prop_assert_eq!(replay(&d, &plus_flips).unwrap(), plus_end.clone());
        prop_assert_eq!(plus_end, canonical_diagram(n, CanonicalSign::Plus));
    }

    #[test]
    fn images_of_diagrams_come_back(n in 2usize..=5, steps in 0usize..60, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_diagram(n, steps, &mut rng);
        let a = d.to_planar().unwrap();
        for f in a.center_faces() {
            let e = planar_to_diagram(&a, f).unwrap();
            prop_assert_eq!(e.to_planar().unwrap(), a.clone());
        }
    }

    #[test]
    fn cylindrify_succeeds_on_random_arrangements(n in 3usize..=6, steps in 0usize..80, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let start = canonical_diagram(n, CanonicalSign::Minus).to_planar().unwrap();
        let a = random_flips(&start, steps, &mut rng);
        let run = cylindrify(&a).unwrap();
        prop_assert_eq!(run.flips.is_empty(), a.is_cylindrical());
        let mut cur = a;
        for f in &run.flips {
            cur = cur.flip(f).unwrap();
            prop_assert!(pairs_cross_twice(&cur));
        }
        prop_assert!(cur.is_cylindrical());
        prop_assert_eq!(cur, run.result);
    }
}
