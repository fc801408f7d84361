mod common;

use fliplab::graph::explore_signotopes;
use fliplab::realize::{
    combinatorial_type, count_realizable, interpolate_motion, maximize, parse_rational, realize_shellable,
    slope_feasibility, LineArrangement, LpOutcome, SlopeVector,
};
use fliplab::shelling::shelling_sequence;
use fliplab::signotope::random_signotope;
use fliplab::{Error, Sign, Signotope};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn oracle_type(a: &LineArrangement) -> Vec<bool> {
    common::type_from_crossings(a.slopes().values(), a.intercepts())
}

fn bools(s: &Signotope) -> Vec<bool> {
    s.signs().into_iter().map(Sign::is_plus).collect()
}

#[test]
fn concurrent_lines_are_named() {
    match LineArrangement::new(SlopeVector::standard(3), vec![q(0), q(0), q(0)]).unwrap_err() {
        Error::Degenerate { triple } => assert_eq!(triple, "(1,2,3)"),
        other => panic!("unexpected error {other}"),
    }
    let slopes = SlopeVector::standard(4);
    match LineArrangement::new(slopes, vec![q(5), q(0), q(0), q(0)]).unwrap_err() {
        Error::Degenerate { triple } => assert_eq!(triple, "(2,3,4)"),
        other => panic!("unexpected error {other}"),
    }
}

#[test]
fn three_lines_by_formula_and_by_coordinates() {
    let a = LineArrangement::new(SlopeVector::standard(3), vec![q(0), q(0), q(1)]).unwrap();
    let s = combinatorial_type(&a).unwrap();
    assert_eq!(s.sign_string(), "+");
    assert_eq!(bools(&s), oracle_type(&a));
    let (x, y) = a.crossing(0, 2);
    assert_eq!((x, y), (BigRational::new((-1).into(), 2.into()), BigRational::new((-1).into(), 2.into())));
}

#[test]
fn slopes_must_increase() {
    assert!(matches!(SlopeVector::new(vec![q(1), q(1)]), Err(Error::InvalidSlopes(_))));
    assert!(SlopeVector::parse(&["1/2", "2", "3"]).is_ok());
    assert!(SlopeVector::parse(&["3", "2"]).is_err());
    assert!(parse_rational("x").is_err());
}

#[test]
fn all_plus_four_with_standard_slopes() {
    let s = Signotope::all_plus(4).unwrap();
    let a = realize_shellable(&s, None, &SlopeVector::standard(4)).unwrap();
    assert_eq!(combinatorial_type(&a).unwrap(), s);
    assert_eq!(oracle_type(&a), vec![true; 4]);
}

#[test]
fn round_trip_for_every_shellable_signotope_up_to_five() {
    for n in 3..=5 {
        let slopes = SlopeVector::standard(n);
        for s in explore_signotopes(n, None).unwrap().states() {
            let Some(seq) = shelling_sequence(s) else { continue };
            let a = realize_shellable(s, Some(&seq), &slopes).unwrap();
            assert_eq!(oracle_type(&a), bools(s));
        }
    }
}

#[test]
fn non_shellable_input_is_refused() {
    let path = format!("{}/fixtures/star5.json", env!("CARGO_MANIFEST_DIR"));
    let star: Signotope = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert!(matches!(realize_shellable(&star, None, &SlopeVector::standard(5)), Err(Error::NotShellable)));
    // realizable with these slopes all the same, through the LP
    let w = slope_feasibility(&star, &SlopeVector::standard(5)).unwrap().unwrap();
    assert_eq!(oracle_type(&w), bools(&star));
}

#[test]
fn two_slope_vectors_give_the_same_type() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let s = Signotope::all_minus(6).unwrap().flip(fliplab::Triple::new(0, 1, 2).unwrap()).unwrap();
    let seq = shelling_sequence(&s).unwrap();
    let a = realize_shellable(&s, Some(&seq), &SlopeVector::standard(6)).unwrap();
    let b = realize_shellable(&s, Some(&seq), &SlopeVector::random(6, &mut rng)).unwrap();
    assert_ne!(a.slopes(), b.slopes());
    assert_eq!(oracle_type(&a), oracle_type(&b));
}

#[test]
fn lp_witnesses_reproduce_their_signotope() {
    let slopes = SlopeVector::standard(5);
    let g = explore_signotopes(5, None).unwrap();
    for s in g.states() {
        let w = slope_feasibility(s, &slopes).unwrap().expect("every five-line signotope is feasible");
        assert_eq!(oracle_type(&w), bools(s));
        assert_eq!(w.slopes(), &slopes);
    }
    assert_eq!(count_realizable(g.states(), &slopes).unwrap(), 62);
}

#[test]
fn fixed_slope_probe_at_six_lines() {
    let slopes = SlopeVector::standard(6);
    let g = explore_signotopes(6, None).unwrap();
    let mut feasible = 0;
    for s in g.states() {
        if let Some(w) = slope_feasibility(s, &slopes).unwrap() {
            assert_eq!(oracle_type(&w), bools(s));
            feasible += 1;
        }
    }
    println!("slopes 1..6: {feasible} of {} signotopes feasible", g.len());
    assert!(feasible <= g.len());
}

#[test]
fn lp_solves_a_small_program() {
    // max x + y subject to x + 2y <= 4, 3x + y <= 6
    let c = vec![q(1), q(1)];
    let a = vec![vec![q(1), q(2)], vec![q(3), q(1)]];
    let b = vec![q(4), q(6)];
    match maximize(&c, &a, &b) {
        LpOutcome::Optimal { x, value } => {
            assert_eq!(value, BigRational::new(14.into(), 5.into()));
            assert_eq!(x, vec![BigRational::new(8.into(), 5.into()), BigRational::new(6.into(), 5.into())]);
        }
        LpOutcome::Unbounded => panic!("bounded program"),
    }
    assert!(matches!(maximize(&[q(1)], &[vec![q(-1)]], &[q(1)]), LpOutcome::Unbounded));
}

#[test]
fn identical_endpoints_have_no_events() {
    let a = realize_shellable(&Signotope::all_plus(5).unwrap(), None, &SlopeVector::standard(5)).unwrap();
    let m = interpolate_motion(&a, &a).unwrap();
    assert!(m.events.is_empty() && m.verdict && m.flips_at_most_once);
}

#[test]
fn slopes_must_match_for_interpolation() {
    let s = Signotope::all_plus(3).unwrap();
    let a = realize_shellable(&s, None, &SlopeVector::standard(3)).unwrap();
    let b = realize_shellable(&s, None, &SlopeVector::parse(&["1", "2", "4"]).unwrap()).unwrap();
    assert!(matches!(interpolate_motion(&a, &b), Err(Error::SlopeMismatch)));
}

#[test]
fn adjacent_motion_fixture_has_one_event() {
    let path = format!("{}/fixtures/motion4.json", env!("CARGO_MANIFEST_DIR"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let from: LineArrangement = serde_json::from_value(v["from"].clone()).unwrap();
    let to: LineArrangement = serde_json::from_value(v["to"].clone()).unwrap();
    assert_eq!(
        combinatorial_type(&from).unwrap().hamming_distance(&combinatorial_type(&to).unwrap()),
        1
    );
    let m = interpolate_motion(&from, &to).unwrap();
    assert_eq!(m.events.len(), 1);
    assert!(m.events[0].time > BigRational::zero() && m.events[0].time < BigRational::one());
    assert!(m.verdict);
}

#[test]
fn arrangement_json_round_trip() {
    let a = realize_shellable(&Signotope::all_minus(5).unwrap(), None, &SlopeVector::standard(5)).unwrap();
    let text = serde_json::to_string(&a).unwrap();
    assert_eq!(serde_json::from_str::<LineArrangement>(&text).unwrap(), a);
}

fn lines_meet(l: &[BigRational], b: &[BigRational], [i, j, k]: [usize; 3]) -> bool {
    let x = (&b[k] - &b[i]) / (&l[i] - &l[k]);
    &l[i] * &x + &b[i] == &l[j] * &x + &b[j]
}

proptest! {
    #![proptest_config(common::proptest_config(40))]

    #[test]
    fn random_slopes_round_trip(n in 3usize..=7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (s, seq) = fliplab::checks::random_shellable(n, &mut rng).unwrap();
        let a = realize_shellable(&s, Some(&seq), &SlopeVector::random(n, &mut rng)).unwrap();
        prop_assert_eq!(oracle_type(&a), bools(&s));
    }

    #[test]
    fn feasibility_witnesses_replay(n in 4usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_signotope(&Signotope::all_plus(n).unwrap(), 20 * n * n, &mut rng);
        let slopes = SlopeVector::random(n, &mut rng);
        if let Some(w) = slope_feasibility(&s, &slopes).unwrap() {
            prop_assert_eq!(oracle_type(&w), bools(&s));
        }
    }

    #[test]
    fn motion_events_are_concurrences(n in 3usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let slopes = SlopeVector::random(n, &mut rng);
        let (s, _) = fliplab::checks::random_shellable(n, &mut rng).unwrap();
        let (t, _) = fliplab::checks::random_shellable(n, &mut rng).unwrap();
        let a = realize_shellable(&s, None, &slopes).unwrap();
        let b = realize_shellable(&t, None, &slopes).unwrap();
        let m = interpolate_motion(&a, &b).unwrap();
        prop_assert!(m.flips_at_most_once);
        let mut times: Vec<_> = m.events.iter().map(|e| e.time.clone()).collect();
        times.dedup();
        if times.len() == m.events.len() {
            prop_assert_eq!(m.events.len(), s.hamming_distance(&t));
        }
        for e in &m.events {
            prop_assert!(e.time > BigRational::zero() && e.time < BigRational::one());
            let bt: Vec<BigRational> = a.intercepts().iter().zip(b.intercepts())
                .map(|(x, y)| (BigRational::one() - &e.time) * x + &e.time * y)
                .collect();
            prop_assert!(lines_meet(slopes.values(), &bt, e.triple.lines()));
        }
        prop_assert_eq!(m.intermediate_types.len(), times.len() + 1);
    }
}
