//! Lenses: bounded cells of two-circle sub-arrangements, and sweeping one
//! bounding arc across the lens.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{Crossing, PlanarArrangement, TriangleFlip};
use crate::error::{Error, Result};

/// Which bounded cell of the two circles forms the lens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LensRegion {
    InsideBoth,
    InsideSweepOnly,
    InsideTargetOnly,
}

impl LensRegion {
    /// (inside sweep circle, inside target circle).
    fn bits(self) -> (bool, bool) {
        match self {
            LensRegion::InsideBoth => (true, true),
            LensRegion::InsideSweepOnly => (true, false),
            LensRegion::InsideTargetOnly => (false, true),
        }
    }
}

/// The lens bounded by an arc `L` of `sweep` and an arc `R` of `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Lens {
    pub sweep: usize,
    pub target: usize,
    pub region: LensRegion,
}

/// A maximal piece of another circle inside the lens. Transversal arcs run
/// from `L` to `R`; `interior` lists their inner vertices in that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LensArc {
    pub circle: usize,
    pub from: Crossing,
    pub to: Crossing,
    pub transversal: bool,
    pub interior: Vec<Crossing>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LensAnalysis {
    pub lens: Lens,
    /// Crossings along `L`, endpoints included.
    pub sweep_arc: Vec<Crossing>,
    /// Crossings along `R`, endpoints included.
    pub target_arc: Vec<Crossing>,
    pub arcs: Vec<LensArc>,
    pub interior_vertices: Vec<Crossing>,
    /// Whether arcs crossing twice inside the lens do so in the same order.
    pub orders_agree: bool,
    /// A topological order of the arc digraph, if it is acyclic.
    pub topological_order: Option<Vec<Crossing>>,
}

impl LensAnalysis {
    pub fn is_acyclic(&self) -> bool {
        self.topological_order.is_some()
    }

    /// Edges of the arc digraph between consecutive interior vertices.
    pub fn digraph_edges(&self) -> Vec<(Crossing, Crossing)> {
        self.arcs
            .iter()
            .filter(|a| a.transversal)
            .flat_map(|a| a.interior.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
            .collect()
    }
}

fn boundary_arc(a: &PlanarArrangement, c: usize, other: usize, other_bit: bool) -> Result<Vec<Crossing>> {
    let w = &a.words()[c];
    let cuts: Vec<usize> = (0..w.len()).filter(|&t| w[t].involves(other)).collect();
    if cuts.len() != 2 {
        return Err(Error::Internal("lens circles must cross twice".into()));
    }
    for (s, e) in [(cuts[0], cuts[1]), (cuts[1], cuts[0])] {
        let h = a.half_edge_index(super::HalfEdgeKey { circle: c, at: w[s], forward: true }).unwrap();
        let mask = a.face_mask(a.face_of_half_edge(h));
        if (mask >> other & 1 == 1) == other_bit {
            let len = (e + w.len() - s) % w.len();
            return Ok((0..=len).map(|d| w[(s + d) % w.len()]).collect());
        }
    }
    Err(Error::Internal("no arc bounds the lens".into()))
}

pub fn analyze(a: &PlanarArrangement, lens: Lens) -> Result<LensAnalysis> {
    let (l, r) = (lens.sweep, lens.target);
    if l == r || l >= a.n() || r >= a.n() {
        return Err(Error::OutOfRange(format!("lens circles {} and {}", l + 1, r + 1)));
    }
    let (sl, sr) = lens.region.bits();
    let sweep_arc = boundary_arc(a, l, r, sr)?;
    let target_arc = boundary_arc(a, r, l, sl)?;
    let in_region = |x: Crossing| a.crossing_inside(x, l) == sl && a.crossing_inside(x, r) == sr;
    let mut arcs = Vec::new();
    for c in (0..a.n()).filter(|&c| c != l && c != r) {
        let w = &a.words()[c];
        let cuts: Vec<usize> = (0..w.len()).filter(|&t| w[t].involves(l) || w[t].involves(r)).collect();
        for (idx, &s) in cuts.iter().enumerate() {
            let e = cuts[(idx + 1) % cuts.len()];
            let h = a.half_edge_index(super::HalfEdgeKey { circle: c, at: w[s], forward: true }).unwrap();
            let mask = a.face_mask(a.face_of_half_edge(h));
            if (mask >> l & 1 == 1) != sl || (mask >> r & 1 == 1) != sr {
                continue;
            }
            let len = (e + w.len() - s) % w.len();
            let mut interior: Vec<Crossing> = (1..len).map(|d| w[(s + d) % w.len()]).collect();
            let (mut from, mut to) = (w[s], w[e]);
            let transversal = from.other(c) != to.other(c);
            if transversal && from.other(c) == r {
                std::mem::swap(&mut from, &mut to);
                interior.reverse();
            }
            arcs.push(LensArc { circle: c, from, to, transversal, interior });
        }
    }
    let mut interior_vertices: Vec<Crossing> = (0..a.n())
        .flat_map(|x| (0..a.n()).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && ![l, r].contains(&x) && ![l, r].contains(&y))
        .map(|(x, y)| Crossing::new(x, y))
        .filter(|&x| in_region(x))
        .collect();
    interior_vertices.sort();

    let mut place: HashMap<Crossing, Vec<(usize, usize)>> = HashMap::new();
    for (i, arc) in arcs.iter().enumerate() {
        for (p, &x) in arc.interior.iter().enumerate() {
            place.entry(x).or_default().push((i, p));
        }
    }
    let mut orders_agree = true;
    for (i, ai) in arcs.iter().enumerate() {
        for aj in &arcs[i + 1..] {
            let shared: Vec<Crossing> = ai.interior.iter().copied().filter(|x| aj.interior.contains(x)).collect();
            let on_j: Vec<Crossing> = aj.interior.iter().copied().filter(|x| shared.contains(x)).collect();
            if shared.len() >= 2 && ai.transversal && aj.transversal && shared != on_j {
                orders_agree = false;
            }
        }
    }

    let mut indeg: HashMap<Crossing, usize> = interior_vertices.iter().map(|&x| (x, 0)).collect();
    let mut out: HashMap<Crossing, Vec<Crossing>> = HashMap::new();
    let analysis = LensAnalysis {
        lens,
        sweep_arc,
        target_arc,
        arcs,
        interior_vertices,
        orders_agree,
        topological_order: None,
    };
    for (u, v) in analysis.digraph_edges() {
        *indeg.entry(v).or_default() += 1;
        out.entry(u).or_default().push(v);
    }
    let mut ready: BTreeSet<Crossing> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&x, _)| x).collect();
    let mut order = Vec::new();
    while let Some(x) = ready.pop_first() {
        order.push(x);
        for &y in out.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
            let d = indeg.get_mut(&y).unwrap();
            *d -= 1;
            if *d == 0 {
                ready.insert(y);
            }
        }
    }
    let acyclic = order.len() == indeg.len();
    Ok(LensAnalysis { topological_order: acyclic.then_some(order), ..analysis })
}

pub fn sweep(a: &PlanarArrangement, lens: Lens) -> Result<(Vec<TriangleFlip>, PlanarArrangement)> {
    let first = analyze(a, lens)?;
    if let Some(arc) = first.arcs.iter().find(|arc| !arc.transversal) {
        return Err(Error::Lens(format!(
            "arc of circle {} from {} to {} is not transversal",
            arc.circle + 1,
            arc.from,
            arc.to
        )));
    }
    if !first.is_acyclic() {
        return Err(Error::Internal("arc digraph of the lens has a cycle".into()));
    }
    let total = first.interior_vertices.len();
    let mut cur = a.clone();
    let mut flips = Vec::with_capacity(total);
    let mut info = first;
    while let Some(&v) = info.topological_order.as_ref().and_then(|o| o.first()) {
        if flips.len() >= total {
            return Err(Error::Internal("lens sweep exceeded its flip count".into()));
        }
        let starts: Vec<Crossing> = info
            .arcs
            .iter()
            .filter(|arc| arc.interior.first() == Some(&v))
            .map(|arc| arc.from)
            .collect();
        if starts.len() != 2 {
            return Err(Error::Internal(format!("vertex {v} is not a source of the lens digraph")));
        }
        let flip = TriangleFlip::new([v, starts[0], starts[1]]);
        cur = cur.flip(&flip)?;
        flips.push(flip);
        info = analyze(&cur, lens)?;
    }
    if !info.interior_vertices.is_empty() || flips.len() != total {
        return Err(Error::Internal("lens sweep left vertices inside the lens".into()));
    }
    Ok((flips, cur))
}
