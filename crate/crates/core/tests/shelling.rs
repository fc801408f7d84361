mod common;

use std::collections::BTreeSet;

use fliplab::checks::random_shellable;
use fliplab::graph::explore_signotopes;
use fliplab::shelling::{
    build_good_set, compatible_triangles, extreme_side, from_shelling, path_to_shellable, replay,
    shellable_for_assignment, shelling_sequence, sweep_line_extreme, triangle_line_incidence_graph,
    ShellingSequence, Side,
};
use fliplab::signotope::{binomial, random_signotope, signotope_to_wiring};
use fliplab::{Sign, Signotope, Triple};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn t(a: usize, b: usize, c: usize) -> Triple {
    Triple::from_labels([a, b, c]).unwrap()
}

fn fixture(name: &str) -> Signotope {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn bools(s: &Signotope) -> Vec<bool> {
    s.signs().into_iter().map(Sign::is_plus).collect()
}

fn wiring_extreme(s: &Signotope, line: usize) -> bool {
    let w = signotope_to_wiring(s);
    common::extreme_in_wiring(s.n(), w.word(), line, &vec![true; s.n()])
}

fn wiring_shellable(s: &Signotope) -> bool {
    common::shellable_wiring(s.n(), signotope_to_wiring(s).word())
}

#[test]
fn first_line_of_all_plus_four_is_extreme() {
    let s = Signotope::all_plus(4).unwrap();
    assert!(extreme_side(&s, 0).unwrap().is_some());
    assert!(wiring_extreme(&s, 0));
}

#[test]
fn extremeness_matches_the_wiring_drawing() {
    for n in 3..=6 {
        for s in explore_signotopes(n, None).unwrap().states() {
            for l in 0..n {
                assert_eq!(extreme_side(s, l).unwrap().is_some(), wiring_extreme(s, l), "{s} line {l}");
            }
        }
    }
}

#[test]
fn shellability_matches_greedy_peeling_in_the_drawing() {
    let mut non_shellable = 0;
    for n in 3..=6 {
        for s in explore_signotopes(n, None).unwrap().states() {
            let seq = shelling_sequence(s);
            assert_eq!(seq.is_some(), wiring_shellable(s), "{s}");
            if let Some(seq) = seq {
                assert!(seq.verify(s));
                assert_eq!(&from_shelling(n, &seq).unwrap(), s);
            } else {
                non_shellable += 1;
            }
        }
    }
    assert!(non_shellable > 0);
}

#[test]
fn constant_signotopes_are_shellable() {
    for n in 3..=7 {
        for s in [Signotope::all_plus(n).unwrap(), Signotope::all_minus(n).unwrap()] {
            let seq = shelling_sequence(&s).unwrap();
            assert!(seq.verify(&s));
            assert_eq!(from_shelling(n, &seq).unwrap(), s);
        }
    }
}

#[test]
fn three_lines_are_always_shellable() {
    for text in ["+", "-"] {
        let s = Signotope::from_sign_string(3, text).unwrap();
        assert!(shelling_sequence(&s).is_some());
        for l in 0..3 {
            assert!(extreme_side(&s, l).unwrap().is_some());
        }
    }
}

#[test]
fn six_line_fixture_starts_its_shelling_with_lines_one_and_five() {
    let s = fixture("shelling6.json");
    assert!(extreme_side(&s, 0).unwrap().is_some());
    let seq = ShellingSequence {
        order: vec![0, 4, 1, 2, 3, 5],
        sides: vec![Side::Above, Side::Below, Side::Above, Side::Below, Side::Below, Side::Below],
    };
    assert!(seq.verify(&s));
    assert!(wiring_shellable(&s));
}

#[test]
fn star_has_no_extreme_line_until_a_star_triangle_flips() {
    for name in ["star5.json"] {
        let s = fixture(name);
        assert_eq!(s.flippable_triples().len(), 5);
        for l in 0..5 {
            assert_eq!(extreme_side(&s, l).unwrap(), None);
            assert!(!wiring_extreme(&s, l));
        }
        assert!(shelling_sequence(&s).is_none());
        for x in s.flippable_triples() {
            let f = s.flip(x).unwrap();
            assert!(shelling_sequence(&f).is_some());
            assert!(wiring_shellable(&f));
        }
    }
}

#[test]
fn sweep_of_an_extreme_line_to_its_own_side_is_empty() {
    let s = Signotope::all_plus(5).unwrap();
    let side = extreme_side(&s, 0).unwrap().unwrap();
    assert!(sweep_line_extreme(&s, 0, side).unwrap().is_empty());
}

#[test]
fn sweeping_line_two_of_all_minus_four() {
    // line 2 has the crossings of (1,3) and (1,4) below it and (3,4) above
    let s = Signotope::all_minus(4).unwrap();
    assert_eq!(extreme_side(&s, 1).unwrap(), None);
    assert!(!wiring_extreme(&s, 1));
    let mut all = BTreeSet::new();
    for (side, want) in [(Side::Above, vec![t(1, 2, 3), t(1, 2, 4)]), (Side::Below, vec![t(2, 3, 4)])] {
        let flips = sweep_line_extreme(&s, 1, side).unwrap();
        let got: BTreeSet<Triple> = flips.iter().copied().collect();
        assert_eq!(got, want.into_iter().collect());
        let end = replay(&s, &flips).unwrap();
        assert_eq!(extreme_side(&end, 1).unwrap(), Some(side));
        assert!(wiring_extreme(&end, 1));
        all.extend(got);
    }
    assert_eq!(all, BTreeSet::from([t(1, 2, 3), t(1, 2, 4), t(2, 3, 4)]));
}

#[test]
fn paths_between_constant_signotopes() {
    let plus = Signotope::all_plus(4).unwrap();
    let minus = Signotope::all_minus(4).unwrap();
    let seq = shelling_sequence(&plus).unwrap();
    assert!(path_to_shellable(&plus, &plus, &seq).unwrap().is_empty());
    let p = path_to_shellable(&minus, &plus, &seq).unwrap();
    assert_eq!(p.len(), 4);
    assert_eq!(p.iter().collect::<BTreeSet<_>>().len(), 4);
    assert_eq!(replay(&minus, &p).unwrap(), plus);
}

#[test]
fn paths_to_random_shellable_targets_at_six() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let a = random_signotope(&Signotope::all_plus(6).unwrap(), 700, &mut rng);
        let (target, seq) = random_shellable(6, &mut rng).unwrap();
        let p = path_to_shellable(&a, &target, &seq).unwrap();
        assert_eq!(p.len(), a.hamming_distance(&target));
        assert_eq!(replay(&a, &p).unwrap(), target);
    }
}

#[test]
fn good_sets_cover_enough_lines() {
    let s = Signotope::all_plus(3).unwrap();
    let set = build_good_set(&s);
    assert_eq!(set.triangles, vec![t(1, 2, 3)]);
    for n in 3..=6 {
        for s in explore_signotopes(n, None).unwrap().states() {
            let set = build_good_set(s);
            assert!(set.is_good(n));
            assert!(3 * set.triangles.len() >= n);
            for (i, (&x, &l)) in set.triangles.iter().zip(&set.lines).enumerate() {
                assert!(s.is_flippable(x) && x.contains(l));
                assert!(set.triangles[..i].iter().all(|p| !p.contains(l)));
            }
        }
    }
}

#[test]
fn one_triangle_assignments_differ_on_it() {
    let s = Signotope::all_minus(3).unwrap();
    let set = build_good_set(&s);
    let (p, _) = shellable_for_assignment(&set, &[Sign::Plus], 3).unwrap();
    let (m, _) = shellable_for_assignment(&set, &[Sign::Minus], 3).unwrap();
    assert_eq!(p.sign(t(1, 2, 3)), Sign::Plus);
    assert_eq!(m.sign(t(1, 2, 3)), Sign::Minus);
}

#[test]
fn all_assignments_of_a_five_line_good_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = random_signotope(&Signotope::all_plus(5).unwrap(), 300, &mut rng);
    let set = build_good_set(&s);
    let k = set.triangles.len();
    let mut seen = BTreeSet::new();
    for mask in 0..1u32 << k {
        let alpha: Vec<Sign> = (0..k).map(|i| Sign::from_plus(mask >> i & 1 == 1)).collect();
        let (out, seq) = shellable_for_assignment(&set, &alpha, 5).unwrap();
        for (x, a) in set.triangles.iter().zip(&alpha) {
            assert_eq!(out.sign(*x), *a);
        }
        assert!(seq.verify(&out));
        assert!(wiring_shellable(&out));
        seen.insert(out.sign_string());
    }
    assert_eq!(seen.len(), 1 << k);
}

#[test]
fn compatibility_matches_double_flips() {
    for n in 3..=5 {
        for s in explore_signotopes(n, None).unwrap().states() {
            let tri = s.flippable_triples();
            for &a in &tri {
                for &b in &tri {
                    if a == b {
                        continue;
                    }
                    let mut bits = bools(s);
                    bits[common::index_of(n, a.lines())] ^= true;
                    bits[common::index_of(n, b.lines())] ^= true;
                    assert_eq!(compatible_triangles(s, a, b).unwrap(), common::valid_signs(n, &bits));
                }
            }
        }
    }
}

#[test]
fn each_triangle_has_at_most_three_incompatible_ones() {
    for n in 3..=6 {
        for s in explore_signotopes(n, None).unwrap().states() {
            let tri = s.flippable_triples();
            for &a in &tri {
                let bad = tri.iter().filter(|&&b| b != a && !compatible_triangles(s, a, b).unwrap()).count();
                assert!(bad <= 3);
            }
        }
    }
}

#[test]
fn compatibility_rejects_non_triangles() {
    let s = Signotope::all_plus(4).unwrap();
    assert!(compatible_triangles(&s, t(1, 2, 4), t(1, 2, 3)).is_err());
    assert!(compatible_triangles(&s, t(1, 2, 3), t(1, 2, 3)).is_err());
}

#[test]
fn incidence_graph_examples() {
    let g = triangle_line_incidence_graph(&Signotope::all_plus(4).unwrap());
    assert_eq!(g.triangles, vec![t(1, 2, 3), t(2, 3, 4)]);
    assert_eq!(g.edges().len(), 6);
    let g = triangle_line_incidence_graph(&Signotope::all_plus(3).unwrap());
    assert_eq!(g.components.len(), 1);
    assert_eq!(g.components[0].lines, vec![0, 1, 2]);
    for s in explore_signotopes(6, None).unwrap().states() {
        let g = triangle_line_incidence_graph(s);
        assert_eq!(g.components.iter().map(|c| c.lines.len()).sum::<usize>(), 6);
        assert!(g.components.iter().all(|c| c.lines.len() != 3 && c.lines.len() != 5), "{s}");
    }
}

proptest! {
    #![proptest_config(common::proptest_config(48))]

    #[test]
    fn paths_flip_each_triple_once(n in 4usize..=7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_signotope(&Signotope::all_plus(n).unwrap(), 30 * n * n, &mut rng);
        let (target, seq) = random_shellable(n, &mut rng).unwrap();
        let p = path_to_shellable(&a, &target, &seq).unwrap();
        prop_assert_eq!(p.iter().collect::<BTreeSet<_>>().len(), p.len());
        prop_assert_eq!(p.len(), a.hamming_distance(&target));
        prop_assert_eq!(replay(&a, &p).unwrap(), target);
    }

    #[test]
    fn sweeps_touch_only_the_swept_line(n in 3usize..=7, seed in any::<u64>(), line in 0usize..7) {
        let line = line % n;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_signotope(&Signotope::all_plus(n).unwrap(), 30 * n * n, &mut rng);
        for side in [Side::Above, Side::Below] {
            let flips = sweep_line_extreme(&s, line, side).unwrap();
            prop_assert!(flips.len() <= binomial(n - 1, 2));
            prop_assert!(flips.iter().all(|x| x.contains(line)));
            let end = replay(&s, &flips).unwrap();
            prop_assert_eq!(extreme_side(&end, line).unwrap(), Some(side));
        }
    }

    #[test]
    fn assignments_are_read_back(n in 3usize..=8, seed in any::<u64>(), mask in any::<u32>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_signotope(&Signotope::all_plus(n).unwrap(), 30 * n * n, &mut rng);
        let set = build_good_set(&s);
        prop_assert!(set.is_good(n));
        let alpha: Vec<Sign> = (0..set.triangles.len()).map(|i| Sign::from_plus(mask >> i & 1 == 1)).collect();
        let (out, seq) = shellable_for_assignment(&set, &alpha, n).unwrap();
        prop_assert!(seq.verify(&out));
        for (x, a) in set.triangles.iter().zip(&alpha) {
            prop_assert_eq!(out.sign(*x), *a);
        }
    }
}
