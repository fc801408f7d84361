//! The acceptance checks, each runnable on its own (`fliplab check --criterion N`).
//!
//! A check returns whether it passed and a JSON record of the measured
//! values, so that callers can compare them with their own expectations.

use std::collections::HashSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cli::explore_pseudocircles;
use crate::cylinder::{self, canonical_diagram, CanonicalSign};
use crate::error::{Error, Result};
use crate::graph::{explore, explore_signotopes, ConnectivityMode, Family};
use crate::pcircle::{self, fixtures, PlanarArrangement};
use crate::realize::{self, SlopeVector};
use crate::shelling::{self, ShellingSequence, Side};
use crate::signotope::{binomial, random_signotope, Sign, Signotope};

/// Vertex counts of `F_n` for `n = 3..=7` (OEIS A006245).
pub const SIGNOTOPE_COUNTS: [usize; 5] = [2, 8, 62, 908, 24698];

pub const CRITERIA: [&str; 13] = [
    "signotope counts",
    "degree range",
    "vertex connectivity",
    "fixed-slope flip graph",
    "paths to shellable arrangements",
    "good triangle sets",
    "realization round trip",
    "intercept interpolation",
    "three pseudocircles",
    "cylindricity agreement",
    "flip to canonical",
    "cylindrify",
    "lens sweep",
];

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub criterion: usize,
    pub title: &'static str,
    pub pass: bool,
    pub details: Value,
}

/// Runs criterion `id` (1-based) with the given seed.
pub fn run(id: usize, seed: u64) -> Result<CheckReport> {
    let (pass, details) = match id {
        1 => counts()?,
        2 => degrees()?,
        3 => connectivity(seed)?,
        4 => fixed_slopes()?,
        5 => shellable_paths(seed)?,
        6 => good_sets(seed)?,
        7 => round_trip(seed)?,
        8 => interpolation()?,
        9 => three_circles()?,
        10 => agreement(seed)?,
        11 => canonical(seed)?,
        12 => cylindrify()?,
        13 => lens()?,
        _ => return Err(Error::OutOfRange(format!("criterion {id} (expected 1..=13)"))),
    };
    Ok(CheckReport { criterion: id, title: CRITERIA[id - 1], pass, details })
}

fn counts() -> Result<(bool, Value)> {
    let mut rows = Vec::new();
    let mut pass = true;
    for (n, &want) in (3..=7).zip(&SIGNOTOPE_COUNTS) {
        let t = Instant::now();
        let g = explore_signotopes(n, None)?;
        let secs = t.elapsed().as_secs_f64();
        let limit = if n <= 6 { 10.0 } else { 300.0 };
        pass &= g.len() == want && secs < limit;
        rows.push(json!({"n": n, "vertices": g.len(), "edges": g.edge_count(), "seconds": secs}));
    }
    Ok((pass, json!({"rows": rows})))
}

fn degrees() -> Result<(bool, Value)> {
    let mut rows = Vec::new();
    let mut pass = true;
    for n in 3..=7 {
        let g = explore_signotopes(n, None)?;
        let d = g.degree_stats();
        pass &= d.min == n - 2 && 3 * d.max <= n * (n - 2);
        rows.push(json!({"n": n, "min": d.min, "max": d.max}));
    }
    Ok((pass, json!({"rows": rows})))
}

fn connectivity(seed: u64) -> Result<(bool, Value)> {
    let mut rows = Vec::new();
    let mut pass = true;
    for n in 3..=7 {
        let g = explore_signotopes(n, None)?;
        let t = Instant::now();
        let mode = if n <= 5 { ConnectivityMode::Exact } else { ConnectivityMode::Sampled { pairs: 200, seed } };
        let c = g.vertex_connectivity(mode);
        let secs = t.elapsed().as_secs_f64();
        pass &= if n <= 5 { c.value == n - 2 && secs < 60.0 } else { c.value >= n - 2 && c.pairs_checked >= 200 };
        rows.push(json!({"n": n, "value": c.value, "exact": c.exact, "pairs_checked": c.pairs_checked, "seconds": secs}));
    }
    Ok((pass, json!({"rows": rows})))
}

fn fixed_slopes() -> Result<(bool, Value)> {
    let g = explore_signotopes(5, None)?;
    let slopes = SlopeVector::standard(5);
    let mut keep = Vec::with_capacity(g.len());
    for s in g.states() {
        keep.push(realize::slope_feasibility(s, &slopes)?.is_some());
    }
    let feasible = keep.iter().filter(|&&k| k).count();
    let h = g.induced(&keep);
    let c = h.vertex_connectivity(ConnectivityMode::Exact);
    let pass = feasible == 62 && c.value >= 3;
    Ok((pass, json!({"feasible": feasible, "vertices": h.len(), "edges": h.edge_count(), "connectivity": c.value})))
}

/// A shellable signotope from a random order and random sides.
pub fn random_shellable<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<(Signotope, ShellingSequence)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let sides = (0..n).map(|_| if rng.gen_bool(0.5) { Side::Above } else { Side::Below }).collect();
    let seq = ShellingSequence { order, sides };
    Ok((shelling::from_shelling(n, &seq)?, seq))
}

fn shellable_paths(seed: u64) -> Result<(bool, Value)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut violations = 0;
    for n in 5..=7 {
        let mut total = 0;
        for _ in 0..500 {
            let a = random_signotope(&Signotope::all_plus(n)?, 40 * n * n, &mut rng);
            let (target, seq) = random_shellable(n, &mut rng)?;
            let path = shelling::path_to_shellable(&a, &target, &seq)?;
            let mut seen = HashSet::new();
            let repeats = !path.iter().all(|t| seen.insert(*t));
            if repeats || path.len() != a.hamming_distance(&target) || shelling::replay(&a, &path)? != target {
                violations += 1;
            }
            total += path.len();
        }
        rows.push(json!({"n": n, "pairs": 500, "total_length": total}));
    }
    Ok((violations == 0, json!({"rows": rows, "violations": violations})))
}

fn good_sets(seed: u64) -> Result<(bool, Value)> {
    let mut violations = 0;
    let mut min_k = Vec::new();
    let mut pool = Vec::new();
    for n in 3..=6 {
        let g = explore_signotopes(n, None)?;
        let mut smallest = usize::MAX;
        for s in g.states() {
            let set = shelling::build_good_set(s);
            smallest = smallest.min(set.triangles.len());
            if !set.is_good(n) || set.triangles.len() < n.div_ceil(3) {
                violations += 1;
            }
            pool.push((s.clone(), set));
        }
        min_k.push(json!({"n": n, "min_k": smallest}));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignments = 0;
    for _ in 0..100 {
        let (s, set) = pool.choose(&mut rng).unwrap();
        let k = set.triangles.len();
        let mut seen = HashSet::new();
        for mask in 0..1u32 << k {
            let alpha: Vec<Sign> = (0..k).map(|i| Sign::from_plus(mask >> i & 1 == 1)).collect();
            let (t, seq) = shelling::shellable_for_assignment(set, &alpha, s.n())?;
            let matches = set.triangles.iter().zip(&alpha).all(|(&tri, &a)| t.sign(tri) == a);
            if !matches || !seq.verify(&t) || shelling::shelling_sequence(&t).is_none() {
                violations += 1;
            }
            seen.insert(t.encode());
            assignments += 1;
        }
        if seen.len() != 1 << k {
            violations += 1;
        }
    }
    Ok((violations == 0, json!({"min_k": min_k, "assignments": assignments, "violations": violations})))
}

fn round_trip(seed: u64) -> Result<(bool, Value)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut failures = 0;
    for n in 3..=5 {
        let g = explore_signotopes(n, None)?;
        for s in g.states() {
            let Some(seq) = shelling::shelling_sequence(s) else { continue };
            for _ in 0..10 {
                let slopes = SlopeVector::random(n, &mut rng);
                let a = realize::realize_shellable(s, Some(&seq), &slopes)?;
                if realize::combinatorial_type(&a)? != *s {
                    failures += 1;
                }
                checked += 1;
            }
        }
    }
    Ok((failures == 0 && checked > 0, json!({"checked": checked, "failures": failures})))
}

fn interpolation() -> Result<(bool, Value)> {
    let g = explore_signotopes(4, None)?;
    let slopes = SlopeVector::standard(4);
    let mut witnesses = Vec::new();
    for s in g.states() {
        witnesses.push(realize::slope_feasibility(s, &slopes)?);
    }
    let mut edges = 0;
    let mut unrealized = 0;
    let mut failures = 0;
    for (u, v) in g.edges() {
        let (Some(a), Some(b)) = (&witnesses[u], &witnesses[v]) else {
            unrealized += 1;
            continue;
        };
        let m = realize::interpolate_motion(a, b)?;
        let zero = num_traits::Zero::zero();
        let one = num_traits::One::one();
        let inside = m.events.iter().all(|e| e.time > zero && e.time < one);
        if m.events.len() != 1 || !inside || !m.flips_at_most_once || !m.verdict {
            failures += 1;
        }
        edges += 1;
    }
    let pass = failures == 0 && unrealized == 0 && edges == g.edge_count();
    Ok((pass, json!({"edges": edges, "unrealized": unrealized, "failures": failures})))
}

fn three_circles() -> Result<(bool, Value)> {
    let krupp = fixtures::krupp();
    let g = explore(Family::PlanarPseudocircle, 3, krupp, PlanarArrangement::canonical_code, PlanarArrangement::neighbors, None);
    let a = fixtures::nonkrupp(2).canonical_code();
    let b = fixtures::nonkrupp(4).canonical_code();
    let distance = g.shortest_path_by_code(&a, &b)?.len() - 1;
    let keep: Vec<bool> = g.states().iter().map(PlanarArrangement::is_cylindrical).collect();
    let cyl = g.induced(&keep);
    let diameter = cyl.diameter(1000)?.value;
    let pass = g.len() == 4 && distance == 2 && cyl.len() == 3 && diameter == 2;
    let classes: Vec<Value> = g
        .states()
        .iter()
        .map(|s| json!({"class": s.triple_classes()[0].1.to_string(), "cylindrical": s.is_cylindrical()}))
        .collect();
    Ok((
        pass,
        json!({"classes": g.len(), "distance": distance, "cylindrical": cyl.len(), "diameter": diameter, "members": classes}),
    ))
}

fn agreement(seed: u64) -> Result<(bool, Value)> {
    let mut checked = 0;
    let mut disagreements = 0;
    for n in 3..=4 {
        let g = explore_pseudocircles(n, false, None)?;
        for a in g.states() {
            checked += 1;
            disagreements += usize::from(!a.cylindricity().agree());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_cylindrical = 0;
    for _ in 0..1000 {
        let d = cylinder::random_diagram(5, 20, &mut rng);
        let a = d.to_planar()?;
        let c = a.cylindricity();
        random_cylindrical += usize::from(c.has_center);
        disagreements += usize::from(!c.agree() || !c.has_center);
        let b = pcircle::random_flips(&a, 10, &mut rng);
        disagreements += usize::from(!b.cylindricity().agree());
        checked += 2;
    }
    Ok((disagreements == 0, json!({"checked": checked, "disagreements": disagreements, "random_cylindrical": random_cylindrical})))
}

fn canonical(seed: u64) -> Result<(bool, Value)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pass = true;
    let mut rows = Vec::new();
    for n in 4..=6 {
        let bound = 2 * binomial(n, 3);
        let target = canonical_diagram(n, CanonicalSign::Minus);
        let mut worst = 0;
        for _ in 0..100 {
            let d = cylinder::random_diagram(n, 30, &mut rng);
            let (flips, end) = cylinder::flip_to_canonical(&d, CanonicalSign::Minus)?;
            let replayed = cylinder::replay(&d, &flips)?;
            pass &= flips.len() <= bound && end == target && replayed == target;
            worst = worst.max(flips.len());
        }
        rows.push(json!({"n": n, "bound": bound, "max_flips": worst}));
    }
    let mut distances = Vec::new();
    for n in 3..=5 {
        let g = explore_pseudocircles(n, true, None)?;
        let a = canonical_diagram(n, CanonicalSign::Minus).to_planar()?.canonical_code();
        let b = canonical_diagram(n, CanonicalSign::Plus).to_planar()?.canonical_code();
        let path = g.shortest_path_by_code(&a, &b)?;
        pass &= path.len() - 1 == 2 * binomial(n, 3);
        distances.push(json!({"n": n, "distance": path.len() - 1, "vertices": g.len()}));
    }
    let g4 = explore_pseudocircles(4, true, None)?;
    let diameter = g4.diameter(10_000)?.value;
    pass &= (8..=16).contains(&diameter);
    Ok((pass, json!({"random": rows, "canonical_distance": distances, "cylindrical_diameter_4": diameter})))
}

fn cylindrify() -> Result<(bool, Value)> {
    let t = Instant::now();
    let g = explore_pseudocircles(4, false, None)?;
    let mut failures = 0;
    let mut total = 0;
    for a in g.states() {
        let ok = cylinder::cylindrify(a).and_then(|run| {
            let mut cur = a.clone();
            for f in &run.flips {
                cur = cur.flip(f)?;
            }
            Ok(cur.is_cylindrical() && cur == run.result && run.flips.is_empty() == a.is_cylindrical())
        });
        match ok {
            Ok(true) => {}
            _ => failures += 1,
        }
        total += 1;
    }
    let secs = t.elapsed().as_secs_f64();
    Ok((failures == 0 && secs < 60.0, json!({"arrangements": total, "failures": failures, "seconds": secs})))
}

fn lens() -> Result<(bool, Value)> {
    let mut pass = true;
    let mut rows = Vec::new();
    for k in 0..=4 {
        let (a, lens) = fixtures::lens_fixture(k);
        let info = a.analyze_lens(lens)?;
        let (flips, after) = a.lens_sweep(lens)?;
        let replayed = pcircle::replay(&a, &flips)?;
        let left = replayed.analyze_lens(lens)?.interior_vertices.len();
        let transversal = info.arcs.iter().filter(|x| x.transversal).count();
        pass &= info.is_acyclic()
            && info.orders_agree
            && transversal == k
            && flips.len() == info.interior_vertices.len()
            && left == 0
            && replayed == after;
        rows.push(json!({
            "k": k,
            "transversal": transversal,
            "interior": info.interior_vertices.len(),
            "flips": flips.len(),
            "acyclic": info.is_acyclic(),
            "left_after_replay": left,
        }));
    }
    Ok((pass, json!({"rows": rows})))
}
