mod common;

use std::collections::HashSet;

use fliplab::graph::{explore, explore_signotopes, random_walk, ConnectivityMode, Family};
use fliplab::pcircle::fixtures;
use fliplab::pcircle::PlanarArrangement;
use fliplab::{Error, Signotope};
use proptest::prelude::*;

#[test]
fn closure_sizes_match_two_independent_counts() {
    let want = [2, 8, 62, 908, 24698];
    for (n, &w) in (3..=7).zip(&want) {
        let g = explore_signotopes(n, None).unwrap();
        assert_eq!(g.len(), w, "n={n}");
        assert!(g.is_symmetric() && !g.is_truncated());
        if n <= 6 {
            assert_eq!(common::backtracking_count(n), w);
        }
        if n <= 5 {
            assert_eq!(common::brute_force_count(n), w);
        }
    }
}

#[test]
fn every_state_is_distinct_and_valid() {
    let g = explore_signotopes(5, None).unwrap();
    let codes: HashSet<_> = g.states().iter().map(Signotope::sign_string).collect();
    assert_eq!(codes.len(), g.len());
    for s in g.states() {
        let bits: Vec<bool> = s.signs().into_iter().map(|x| x.is_plus()).collect();
        assert!(common::valid_signs(5, &bits));
    }
}

#[test]
fn three_lines_give_one_edge() {
    let g = explore_signotopes(3, None).unwrap();
    assert_eq!((g.len(), g.edge_count()), (2, 1));
    assert_eq!(g.diameter(10).unwrap().value, 1);
    assert_eq!(g.vertex_connectivity(ConnectivityMode::Exact).value, 1);
}

#[test]
fn degree_equals_number_of_flippable_triples() {
    for n in 3..=6 {
        let g = explore_signotopes(n, None).unwrap();
        for v in 0..g.len() {
            assert_eq!(g.neighbors(v).len(), g.state(v).flippable_triples().len());
            for &u in g.neighbors(v) {
                assert_eq!(g.state(u).hamming_distance(g.state(v)), 1);
            }
        }
    }
}

#[test]
fn closure_does_not_depend_on_thread_count() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| serde_json::to_string(&explore_signotopes(6, None).unwrap().to_json()).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(7));
}

#[test]
fn connectivity_is_exactly_n_minus_two_for_small_n() {
    for n in 3..=5 {
        let g = explore_signotopes(n, None).unwrap();
        let c = g.vertex_connectivity(ConnectivityMode::Exact);
        assert!(c.exact);
        assert_eq!(c.value, n - 2, "n={n}");
    }
}

#[test]
fn separator_search_confirms_connectivity() {
    for n in 4..=5 {
        let g = explore_signotopes(n, None).unwrap();
        let adj = g.adjacency();
        assert!(common::no_small_separator(adj, n - 2), "n={n}");
        assert!(!common::no_small_separator(adj, n - 1), "n={n}");
    }
}

#[test]
fn sampled_connectivity_is_a_lower_bound() {
    let g = explore_signotopes(6, None).unwrap();
    let c = g.vertex_connectivity(ConnectivityMode::Sampled { pairs: 200, seed: 5 });
    assert!(!c.exact);
    assert_eq!(c.pairs_checked, 200);
    assert!(c.value >= 4);
}

#[test]
fn connectivity_of_a_cycle_is_two() {
    let g = explore(Family::Signotope, 0, 0usize, |v| vec![*v as u8], |&v| vec![(v + 1) % 9, (v + 8) % 9], None);
    assert_eq!(g.len(), 9);
    assert_eq!(g.vertex_connectivity(ConnectivityMode::Exact).value, 2);
    assert_eq!(g.diameter(100).unwrap().value, 4);
    assert!(common::no_small_separator(g.adjacency(), 2));
}

#[test]
fn shortest_paths() {
    let g = explore_signotopes(4, None).unwrap();
    let plus = Signotope::all_plus(4).unwrap().encode();
    let minus = Signotope::all_minus(4).unwrap().encode();
    assert_eq!(g.shortest_path_by_code(&plus, &plus).unwrap().len(), 1);
    let p = g.shortest_path_by_code(&plus, &minus).unwrap();
    assert_eq!(p.len() - 1, 4);
    for w in p.windows(2) {
        assert!(g.neighbors(w[0]).contains(&w[1]));
    }
    assert!(matches!(g.shortest_path_by_code(&[9, 9], &plus), Err(Error::NotInGraph)));
}

#[test]
fn three_circle_distance_between_the_two_four_cell_types() {
    let g = explore(
        Family::PlanarPseudocircle,
        3,
        fixtures::krupp(),
        PlanarArrangement::canonical_code,
        PlanarArrangement::neighbors,
        None,
    );
    let a = fixtures::nonkrupp(2).canonical_code();
    let b = fixtures::nonkrupp(4).canonical_code();
    assert_eq!(g.shortest_path_by_code(&a, &b).unwrap().len() - 1, 2);
}

#[test]
fn diameter_cap_is_enforced() {
    let g = explore_signotopes(5, None).unwrap();
    assert!(matches!(g.diameter(10), Err(Error::CapExceeded { vertices: 62, cap: 10 })));
    let d = g.diameter(100).unwrap();
    let (u, v) = d.witness;
    assert_eq!(g.distances(u)[v], Some(d.value));
    // every triple must change, so the two constant signotopes are C(5,3) apart
    assert!(d.value >= 10);
}

#[test]
fn truncated_closure_is_flagged() {
    let g = explore_signotopes(6, Some(100)).unwrap();
    assert!(g.is_truncated());
    assert_eq!(g.len(), 100);
    assert!(g.is_symmetric());
}

#[test]
fn walks_are_reproducible() {
    let g = explore_signotopes(5, None).unwrap();
    assert_eq!(g.random_walk(3, 0, 1), vec![3]);
    let a = g.random_walk(0, 500, 42);
    assert_eq!(a, g.random_walk(0, 500, 42));
    for w in a.windows(2) {
        assert!(w[0] == w[1] || g.neighbors(w[0]).contains(&w[1]));
    }
    let s = Signotope::all_plus(6).unwrap();
    let x = random_walk(&s, Signotope::neighbors, 200, 7);
    assert_eq!(x, random_walk(&s, Signotope::neighbors, 200, 7));
    assert_eq!(x.len(), 201);
}

#[test]
fn two_state_walk_is_uniform() {
    let g = explore_signotopes(3, None).unwrap();
    let walk = g.random_walk(0, 100_000, 11);
    let zeros = walk.iter().filter(|&&v| v == 0).count() as f64 / walk.len() as f64;
    assert!((zeros - 0.5).abs() < 0.05, "{zeros}");
}

#[test]
fn dot_and_json_exports_list_every_edge() {
    let g = explore_signotopes(4, None).unwrap();
    let j = g.to_json();
    assert_eq!(j.vertices.len(), 8);
    assert_eq!(j.edges.len(), g.edge_count());
    assert_eq!(g.to_dot().matches(" -- ").count(), g.edge_count());
}

proptest! {
    #![proptest_config(common::proptest_config(16))]

    #[test]
    fn truncation_keeps_adjacency_symmetric(limit in 1usize..300) {
        let g = explore_signotopes(6, Some(limit)).unwrap();
        prop_assert_eq!(g.len(), limit);
        prop_assert!(g.is_symmetric());
        for (u, v) in g.edges() {
            prop_assert_eq!(g.state(u).hamming_distance(g.state(v)), 1);
        }
    }

    #[test]
    fn walk_steps_are_flips(seed in any::<u64>(), steps in 0usize..300) {
        let g = explore_signotopes(5, None).unwrap();
        let w = g.random_walk(0, steps, seed);
        prop_assert_eq!(w.len(), steps + 1);
        for p in w.windows(2) {
            prop_assert!(g.state(p[0]).hamming_distance(g.state(p[1])) <= 1);
        }
    }
}
