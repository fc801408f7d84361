//! Cylindrical diagrams: `n` x-monotone curves on a cut cylinder, given as a
//! word of adjacent swaps whose final order equals the initial order.
//!
//! The top of the box is the side of the center, so a curve's interior lies
//! above it and curves run counterclockwise from left to right. For curves
//! `i < j`, the first swap of the pair is where `j` enters `i` and the second
//! is where `i` enters `j`.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pcircle::{Crossing, HalfEdgeKey, Lens, LensRegion, PlanarArrangement, TriangleFlip};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CanonicalSign {
    Minus,
    Plus,
}

/// The `occurrence`-th (0 or 1, left to right) crossing of curves `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramCrossing {
    pub lo: usize,
    pub hi: usize,
    pub occurrence: u8,
}

impl DiagramCrossing {
    fn new(a: usize, b: usize, occurrence: u8) -> DiagramCrossing {
        DiagramCrossing { lo: a.min(b), hi: a.max(b), occurrence }
    }

    pub fn involves(self, c: usize) -> bool {
        self.lo == c || self.hi == c
    }

    pub fn other(self, c: usize) -> usize {
        if self.lo == c {
            self.hi
        } else {
            self.lo
        }
    }

    /// The crossing in the planar image.
    pub fn planar(self) -> Crossing {
        if self.occurrence == 0 {
            Crossing::new(self.hi, self.lo)
        } else {
            Crossing::new(self.lo, self.hi)
        }
    }

    fn relabel(self, map: &[usize]) -> DiagramCrossing {
        DiagramCrossing::new(map[self.lo], map[self.hi], self.occurrence)
    }
}

/// Three pairwise crossings that are consecutive on each of their curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramTriangle {
    pub crossings: [DiagramCrossing; 3],
}

impl DiagramTriangle {
    fn new(mut crossings: [DiagramCrossing; 3]) -> DiagramTriangle {
        crossings.sort();
        DiagramTriangle { crossings }
    }

    pub fn curves(&self) -> [usize; 3] {
        let mut c: Vec<usize> = self.crossings.iter().flat_map(|x| [x.lo, x.hi]).collect();
        c.sort_unstable();
        c.dedup();
        [c[0], c[1], c[2]]
    }

    /// The crossing not on curve `c`.
    pub fn apex(&self, c: usize) -> DiagramCrossing {
        *self.crossings.iter().find(|x| !x.involves(c)).unwrap()
    }

    pub fn planar(&self) -> TriangleFlip {
        TriangleFlip::new(self.crossings.map(DiagramCrossing::planar))
    }
}

/// Equality and hashing compare local sequences, so words that differ by
/// commuting distant swaps describe the same diagram.
#[derive(Clone, Debug)]
pub struct CylindricalDiagram {
    n: usize,
    word: Vec<usize>,
}

impl PartialEq for CylindricalDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.local_sequences() == other.local_sequences()
    }
}

impl Eq for CylindricalDiagram {}

impl std::hash::Hash for CylindricalDiagram {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.local_sequences().hash(state);
    }
}

impl CylindricalDiagram {
    /// Validates a word of 0-based positions.
    pub fn new(n: usize, word: Vec<usize>) -> Result<CylindricalDiagram> {
        if n == 0 {
            return Err(Error::Malformed("a diagram needs at least one curve".into()));
        }
        let mut order: Vec<usize> = (0..n).collect();
        let mut count = vec![0u8; n * n];
        for (step, &p) in word.iter().enumerate() {
            if p + 1 >= n {
                return Err(Error::InvalidWord(format!("step {step}: position {} out of range", p + 1)));
            }
            let (a, b) = (order[p].min(order[p + 1]), order[p].max(order[p + 1]));
            count[a * n + b] += 1;
            if count[a * n + b] > 2 {
                return Err(Error::InvalidWord(format!("curves {} and {} swap more than twice", a + 1, b + 1)));
            }
            order.swap(p, p + 1);
        }
        if word.len() != n * (n - 1) {
            return Err(Error::InvalidWord(format!("expected {} swaps, got {}", n * (n - 1), word.len())));
        }
        if order.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(Error::InvalidWord("final order differs from the initial order".into()));
        }
        Ok(CylindricalDiagram { n, word })
    }

    pub fn from_one_based(n: usize, word: &[usize]) -> Result<CylindricalDiagram> {
        if word.contains(&0) {
            return Err(Error::InvalidWord("positions are 1-based".into()));
        }
        CylindricalDiagram::new(n, word.iter().map(|p| p - 1).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn one_based_word(&self) -> Vec<usize> {
        self.word.iter().map(|p| p + 1).collect()
    }

    /// The word that always performs the topmost available swap.
    pub fn normal_form(&self) -> Vec<usize> {
        CylindricalDiagram::from_local_sequences(self.n, &self.local_sequences()).unwrap().word
    }

    /// Whether some cut rotation of `self` equals `other`.
    pub fn same_up_to_cut(&self, other: &CylindricalDiagram) -> bool {
        let mut d = self.clone();
        for _ in 0..=self.word.len() {
            if d == *other {
                return true;
            }
            d = d.rotate_cut();
        }
        false
    }

    /// Crossing and top-to-bottom order before each step.
    fn steps(&self) -> Vec<(DiagramCrossing, Vec<usize>)> {
        let mut order: Vec<usize> = (0..self.n).collect();
        let mut count = vec![0u8; self.n * self.n];
        let mut out = Vec::with_capacity(self.word.len());
        for &p in &self.word {
            let (a, b) = (order[p], order[p + 1]);
            let key = a.min(b) * self.n + a.max(b);
            out.push((DiagramCrossing::new(a, b, count[key]), order.clone()));
            count[key] += 1;
            order.swap(p, p + 1);
        }
        out
    }

    /// For each curve, its crossings from left to right.
    pub fn local_sequences(&self) -> Vec<Vec<DiagramCrossing>> {
        let mut seqs = vec![Vec::new(); self.n];
        for (x, _) in self.steps() {
            seqs[x.lo].push(x);
            seqs[x.hi].push(x);
        }
        seqs
    }

    /// Rebuilds a word from local sequences by always performing the topmost
    /// crossing that is next on both of its curves.
    pub fn from_local_sequences(n: usize, seqs: &[Vec<DiagramCrossing>]) -> Result<CylindricalDiagram> {
        if seqs.len() != n {
            return Err(Error::Malformed("one local sequence per curve required".into()));
        }
        let total: usize = seqs.iter().map(Vec::len).sum::<usize>() / 2;
        let mut order: Vec<usize> = (0..n).collect();
        let mut ptr = vec![0usize; n];
        let mut word = Vec::with_capacity(total);
        for _ in 0..total {
            let p = (0..n.saturating_sub(1))
                .find(|&p| {
                    let (a, b) = (order[p], order[p + 1]);
                    match (seqs[a].get(ptr[a]), seqs[b].get(ptr[b])) {
                        (Some(x), Some(y)) => x == y && x.involves(a) && x.involves(b) && (x.occurrence == 0) == (a < b),
                        _ => false,
                    }
                })
                .ok_or_else(|| Error::InvalidWord("local sequences are not realizable".into()))?;
            let (a, b) = (order[p], order[p + 1]);
            ptr[a] += 1;
            ptr[b] += 1;
            order.swap(p, p + 1);
            word.push(p);
        }
        CylindricalDiagram::new(n, word)
    }

    /// Triangles formed by three crossings consecutive on each curve.
    pub fn triangles(&self) -> Vec<DiagramTriangle> {
        let seqs = self.local_sequences();
        let adjacent = |c: usize, x: DiagramCrossing, y: DiagramCrossing| {
            let s = &seqs[c];
            let i = s.iter().position(|&z| z == x).unwrap();
            let j = s.iter().position(|&z| z == y).unwrap();
            i.abs_diff(j) == 1
        };
        let mut out = BTreeSet::new();
        for (a, s) in seqs.iter().enumerate() {
            for w in s.windows(2) {
                let (x, y) = (w[0], w[1]);
                let (b, c) = (x.other(a), y.other(a));
                if b == c {
                    continue;
                }
                let sb = &seqs[b];
                let i = sb.iter().position(|&z| z == x).unwrap();
                for j in [i.wrapping_sub(1), i + 1] {
                    if let Some(&z) = sb.get(j) {
                        if z.involves(c) && adjacent(c, y, z) {
                            out.insert(DiagramTriangle::new([x, y, z]));
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Reverses the order of the triangle's crossings on each of its curves.
    pub fn flip(&self, t: &DiagramTriangle) -> Result<CylindricalDiagram> {
        if !self.triangles().contains(t) {
            return Err(Error::NotATriangle(format!("{t:?}")));
        }
        let mut seqs = self.local_sequences();
        for c in t.curves() {
            let s = &mut seqs[c];
            let idx: Vec<usize> = (0..s.len()).filter(|&i| t.crossings.contains(&s[i])).collect();
            s.swap(idx[0], idx[1]);
        }
        CylindricalDiagram::from_local_sequences(self.n, &seqs)
    }

    pub fn neighbors(&self) -> Vec<CylindricalDiagram> {
        self.triangles().iter().map(|t| self.flip(t).expect("diagram triangles flip")).collect()
    }

    /// The same arrangement cut one swap later; curves are renamed so the
    /// initial order is again `1..n`.
    pub fn rotate_cut(&self) -> CylindricalDiagram {
        if self.word.is_empty() {
            return self.clone();
        }
        let p = self.word[0];
        let mut order: Vec<usize> = (0..self.n).collect();
        order.swap(p, p + 1);
        let mut word = self.word[1..].to_vec();
        word.push(p);
        // positions are relative to rows, so renaming curves leaves the word intact
        CylindricalDiagram::new(self.n, word).expect("rotation keeps the word valid")
    }

    /// Vertical mirror image with curves renamed `c -> n - 1 - c`.
    pub fn mirror(&self) -> CylindricalDiagram {
        let n = self.n;
        CylindricalDiagram { n, word: self.word.iter().map(|&p| n - 2 - p).collect() }
    }

    /// The planar arrangement obtained by closing the curves around the
    /// center above the box.
    pub fn to_planar(&self) -> Result<PlanarArrangement> {
        let n = self.n;
        if n < 2 {
            return Err(Error::Malformed("planar image needs at least two curves".into()));
        }
        let words: Vec<Vec<Crossing>> =
            self.local_sequences().iter().map(|s| s.iter().map(|x| x.planar()).collect()).collect();
        let (x, order) = self
            .steps()
            .into_iter()
            .zip(&self.word)
            .find(|(_, &p)| p == n - 2)
            .map(|(s, _)| s)
            .ok_or_else(|| Error::Internal("no swap on the bottom row".into()))?;
        let bottom = order[n - 1];
        PlanarArrangement::from_words(n, words, HalfEdgeKey { circle: bottom, at: x.planar(), forward: false })
    }
}

/// `B_n^-` (each curve meets the others in increasing then decreasing order)
/// or `B_n^+` (decreasing then increasing).
pub fn canonical_diagram(n: usize, sign: CanonicalSign) -> CylindricalDiagram {
    let seqs: Vec<Vec<DiagramCrossing>> = (0..n)
        .map(|c| {
            let mut others: Vec<usize> = (0..n).filter(|&d| d != c).collect();
            if sign == CanonicalSign::Plus {
                others.reverse();
            }
            let first: Vec<usize> = others.clone();
            let second: Vec<usize> = others.into_iter().rev().collect();
            first
                .iter()
                .map(|&d| DiagramCrossing::new(c, d, 0))
                .chain(second.iter().map(|&d| DiagramCrossing::new(c, d, 1)))
                .collect()
        })
        .collect();
    CylindricalDiagram::from_local_sequences(n, &seqs).expect("canonical sequences are realizable")
}

/// The diagram of a cylindrical arrangement cut along a shortest dual path
/// from `center` to the unbounded face. Curve `i` of the diagram is the
/// `i`-th circle crossed when leaving the center.
pub fn planar_to_diagram(a: &PlanarArrangement, center: usize) -> Result<CylindricalDiagram> {
    let n = a.n();
    if !a.center_faces().contains(&center) {
        return Err(Error::NotCylindrical);
    }
    let outer = a.unbounded_face();
    let mut parent = vec![usize::MAX; a.face_count()];
    let mut q = std::collections::VecDeque::from([center]);
    parent[center] = usize::MAX - 1;
    while let Some(f) = q.pop_front() {
        for &h in a.face_half_edges(f) {
            let g = a.face_of_half_edge(a.half_edge(h).twin);
            if parent[g] == usize::MAX {
                parent[g] = h;
                q.push_back(g);
            }
        }
    }
    let mut cut = Vec::new();
    let mut f = outer;
    while f != center {
        let h = parent[f];
        cut.push(h);
        f = a.face_of_half_edge(h);
    }
    cut.reverse();
    if cut.len() != n || cut.iter().any(|&h| !a.half_edge(h).forward) {
        return Err(Error::NotCylindrical);
    }
    let words = a.words();
    let word_pos = |c: usize, x: Crossing| words[c].iter().position(|&y| y == x).unwrap();
    let start: Vec<(usize, usize)> = cut
        .iter()
        .map(|&h| {
            let c = a.half_edge(h).circle;
            (c, word_pos(c, a.origin(h)))
        })
        .collect();
    let head = |(c, t): (usize, usize)| words[c][(t + 1) % words[c].len()];
    let mut cur = start.clone();
    let mut word = Vec::with_capacity(n * (n - 1));
    for _ in 0..n * (n - 1) {
        let p = (0..n - 1)
            .find(|&p| head(cur[p]) == head(cur[p + 1]))
            .ok_or_else(|| Error::Internal("sweep of the cylindrical arrangement is stuck".into()))?;
        let (upper, lower) = (cur[p], cur[p + 1]);
        cur[p] = (lower.0, (lower.1 + 1) % words[lower.0].len());
        cur[p + 1] = (upper.0, (upper.1 + 1) % words[upper.0].len());
        word.push(p);
    }
    if cur != start {
        return Err(Error::Internal("sweep did not return to the cut".into()));
    }
    CylindricalDiagram::new(n, word)
}

/// Stage invariant after curves `0..=k` have been processed.
pub fn stage_invariant(d: &CylindricalDiagram, k: usize) -> bool {
    let n = d.n();
    let seqs = d.local_sequences();
    seqs.iter().enumerate().all(|(c, s)| {
        let others: Vec<usize> = s.iter().map(|x| x.other(c)).collect();
        if c <= k {
            let inc: Vec<usize> = (0..n).filter(|&x| x != c).collect();
            let want: Vec<usize> = inc.iter().copied().chain(inc.iter().rev().copied()).collect();
            others == want
        } else {
            let low: Vec<usize> = (0..=k).collect();
            let m = others.len();
            others[..=k] == low[..] && others[m - k - 1..].iter().rev().copied().eq(low.iter().copied())
        }
    })
}

/// Flips each curve downward in turn until the diagram is canonical.
///
/// For curve `k`, the leftmost triangle formed with two curves above index
/// `k` whose apex lies below curve `k` is flipped until none remains. At most
/// `2·C(n,3)` flips are used toward `B_n^-`; the plus target is handled on
/// the mirror image.
pub fn flip_to_canonical(d: &CylindricalDiagram, sign: CanonicalSign) -> Result<(Vec<DiagramTriangle>, CylindricalDiagram)> {
    if sign == CanonicalSign::Plus {
        let n = d.n();
        let map: Vec<usize> = (0..n).map(|c| n - 1 - c).collect();
        let (flips, end) = flip_to_canonical(&d.mirror(), CanonicalSign::Minus)?;
        let flips = flips.into_iter().map(|t| DiagramTriangle::new(t.crossings.map(|x| x.relabel(&map)))).collect();
        return Ok((flips, end.mirror()));
    }
    let n = d.n();
    let mut cur = d.clone();
    let mut flips = Vec::new();
    for k in 0..n {
        loop {
            let steps = cur.steps();
            let when = |x: DiagramCrossing| steps.iter().position(|(y, _)| *y == x).unwrap();
            let candidate = cur
                .triangles()
                .into_iter()
                .filter(|t| {
                    let c = t.curves();
                    c[0] == k
                })
                .filter_map(|t| {
                    let apex = t.apex(k);
                    let w = when(apex);
                    let order = &steps[w].1;
                    let row_k = order.iter().position(|&c| c == k).unwrap();
                    (row_k < cur.word[w]).then_some((w, t))
                })
                .min();
            let Some((_, t)) = candidate else {
                break;
            };
            cur = cur.flip(&t)?;
            flips.push(t);
            if flips.len() > 2 * crate::signotope::binomial(n, 3) {
                return Err(Error::Internal("flip-to-canonical exceeded its bound".into()));
            }
        }
        if !stage_invariant(&cur, k) {
            return Err(Error::Internal(format!("stage invariant fails after curve {}", k + 1)));
        }
    }
    if cur != canonical_diagram(n, CanonicalSign::Minus) {
        return Err(Error::Internal("flip-to-canonical did not reach the canonical diagram".into()));
    }
    Ok((flips, cur))
}

/// Replays diagram flips.
pub fn replay(d: &CylindricalDiagram, flips: &[DiagramTriangle]) -> Result<CylindricalDiagram> {
    flips.iter().try_fold(d.clone(), |cur, t| cur.flip(t))
}

/// A random diagram: a lazy walk of diagram flips from `B_n^-`, with a
/// random cut rotation after each step.
pub fn random_diagram<R: Rng + ?Sized>(n: usize, steps: usize, rng: &mut R) -> CylindricalDiagram {
    let mut d = canonical_diagram(n, CanonicalSign::Minus);
    for _ in 0..steps {
        if rng.gen_bool(0.5) {
            let t = d.triangles();
            if !t.is_empty() {
                d = d.flip(&t[rng.gen_range(0..t.len())]).unwrap();
            }
        }
        for _ in 0..rng.gen_range(0..n) {
            d = d.rotate_cut();
        }
    }
    d
}

/// Outcome of [`cylindrify`].
#[derive(Clone, Debug)]
pub struct CylindrifyRun {
    pub flips: Vec<TriangleFlip>,
    pub result: PlanarArrangement,
    /// Lens sweeps used to make a blocking circle parallel, recursion included.
    pub lens_sweeps: usize,
}

/// Flip budget before cylindrify reports an internal failure.
pub const CYLINDRIFY_BUDGET: usize = 100_000;

/// Triangle flips turning an intersecting arrangement into a cylindrical one.
///
/// Repeatedly takes a face `p` of maximum depth and the first circle `C`
/// not containing it, and expands `C` by flipping triangles outside `C` with
/// an edge on `C` (nearest to `p` first) until `C` contains `p`. If only a
/// digon with some circle `C'` blocks the expansion, `C'` is swept inside `C`
/// until the two are parallel, the arrangement without `C'` is made
/// cylindrical recursively, and its flips are mimicked with `C'` following
/// `C`.
pub fn cylindrify(a: &PlanarArrangement) -> Result<CylindrifyRun> {
    let mut budget = Budget { flips: CYLINDRIFY_BUDGET, lens_sweeps: 0 };
    let (flips, result) = cylindrify_inner(a, &mut budget)?;
    Ok(CylindrifyRun { flips, result, lens_sweeps: budget.lens_sweeps })
}

struct Budget {
    flips: usize,
    lens_sweeps: usize,
}

fn spend(budget: &mut Budget) -> Result<()> {
    if budget.flips == 0 {
        return Err(Error::Internal("cylindrify exceeded its flip budget".into()));
    }
    budget.flips -= 1;
    Ok(())
}

fn cylindrify_inner(a: &PlanarArrangement, budget: &mut Budget) -> Result<(Vec<TriangleFlip>, PlanarArrangement)> {
    let mut cur = a.clone();
    let mut flips = Vec::new();
    while !cur.is_cylindrical() {
        let pf = (0..cur.face_count())
            .max_by_key(|&f| (cur.face_mask(f).count_ones(), std::cmp::Reverse(f)))
            .unwrap();
        let mut p = cur.key_of(cur.face_half_edges(pf)[0]);
        let c = (0..cur.n()).find(|&c| cur.face_mask(pf) >> c & 1 == 0).unwrap();
        loop {
            let pf = cur.face_of_key(p).unwrap();
            if cur.face_mask(pf) >> c & 1 == 1 {
                break;
            }
            if let Some(&h) = cur.face_half_edges(pf).iter().find(|&&h| cur.half_edge(h).circle == c) {
                p = cur.key_of(cur.half_edge(h).twin);
                break;
            }
            let dist = cur.face_distances(pf);
            let outside_on_c = |f: usize| {
                cur.face_mask(f) >> c & 1 == 0 && cur.face_half_edges(f).iter().any(|&h| cur.half_edge(h).circle == c)
            };
            let nearest = |faces: Vec<usize>| {
                faces.into_iter().min_by_key(|&f| {
                    let mut v = cur.face_vertices(f);
                    v.sort();
                    (dist[f], v)
                })
            };
            let triangle = nearest(cur.triangle_cells().into_iter().map(|t| t.face).filter(|&f| outside_on_c(f)).collect());
            if let Some(f) = triangle {
                let flip = TriangleFlip::new(cur.face_vertices(f).try_into().unwrap());
                let mut anchors = [p];
                cur = cur.flip_tracking(f, &mut anchors)?;
                p = anchors[0];
                flips.push(flip);
                spend(budget)?;
                continue;
            }
            let digon = nearest(cur.digon_cells().into_iter().filter(|&f| outside_on_c(f)).collect())
                .ok_or_else(|| Error::Internal(format!("circle {} cannot be expanded", c + 1)))?;
            let c2 = cur
                .face_half_edges(digon)
                .iter()
                .map(|&h| cur.half_edge(h).circle)
                .find(|&x| x != c)
                .unwrap();
            budget.lens_sweeps += 1;
            let (lens_flips, next) = cur.lens_sweep(Lens { sweep: c2, target: c, region: LensRegion::InsideTargetOnly })?;
            for _ in &lens_flips {
                spend(budget)?;
            }
            flips.extend(lens_flips);
            cur = next;
            let keep: Vec<usize> = (0..cur.n()).filter(|&x| x != c2).collect();
            let sub = cur.restrict(&keep)?;
            let (sub_flips, _) = cylindrify_inner(&sub, budget)?;
            for f in sub_flips {
                let f = TriangleFlip::new(f.vertices.map(|x| Crossing::new(keep[x.enters], keep[x.entered])));
                mimic(&mut cur, &mut flips, &f, c, c2, budget)?;
            }
            break;
        }
    }
    Ok((flips, cur))
}

fn apply(cur: &mut PlanarArrangement, flips: &mut Vec<TriangleFlip>, f: TriangleFlip, budget: &mut Budget) -> Result<()> {
    *cur = cur.flip(&f)?;
    flips.push(f);
    spend(budget)
}

/// The bounded triangle with the given circles that has vertex `x` and
/// none of the vertices in `avoid`.
fn triangle_at(cur: &PlanarArrangement, circles: [usize; 3], x: Crossing, avoid: &[Crossing]) -> Result<TriangleFlip> {
    let mut want = circles;
    want.sort_unstable();
    cur.triangle_cells()
        .into_iter()
        .map(|t| TriangleFlip::new(t.vertices))
        .find(|t| t.circles() == want && t.vertices.contains(&x) && !t.vertices.iter().any(|v| avoid.contains(v)))
        .ok_or_else(|| Error::Internal(format!("no triangle on circles {want:?} at {x}")))
}

/// Applies a flip of the arrangement without `c2` while `c2` runs parallel
/// to `c`.
fn mimic(
    cur: &mut PlanarArrangement,
    flips: &mut Vec<TriangleFlip>,
    f: &TriangleFlip,
    c: usize,
    c2: usize,
    budget: &mut Budget,
) -> Result<()> {
    let circles = f.circles();
    if !circles.contains(&c) {
        return apply(cur, flips, *f, budget);
    }
    let others: Vec<usize> = circles.iter().copied().filter(|&x| x != c).collect();
    let (d, e) = (others[0], others[1]);
    let find = |u: usize, v: usize| *f.vertices.iter().find(|x| x.involves(u) && x.involves(v)).unwrap();
    let (x_cd, x_ce, x_de) = (find(c, d), find(c, e), find(d, e));
    let between = |cur: &PlanarArrangement| {
        let w = &cur.words()[c];
        let i = w.iter().position(|&y| y == x_cd).unwrap();
        let j = w.iter().position(|&y| y == x_ce).unwrap();
        let span = |s: usize, t: usize| (1..(t + w.len() - s) % w.len()).map(|k| w[(s + k) % w.len()]).collect::<Vec<_>>();
        let (fwd, bwd) = (span(i, j), span(j, i));
        if fwd.iter().all(|y| y.involves(c2)) {
            fwd.len()
        } else if bwd.iter().all(|y| y.involves(c2)) {
            bwd.len()
        } else {
            usize::MAX
        }
    };
    match between(cur) {
        0 => {}
        2 => {
            let first = triangle_at(cur, [c, c2, d], x_cd, &[])?;
            apply(cur, flips, first, budget)?;
            // the second flip must move the other crossing of `c` and `c2`
            let moved: Vec<Crossing> = first.vertices.iter().copied().filter(|v| v.involves(c) && v.involves(c2)).collect();
            let second = triangle_at(cur, [c, c2, d], x_cd, &moved)?;
            apply(cur, flips, second, budget)?;
            if between(cur) != 0 {
                return Err(Error::Internal("digon transfer failed".into()));
            }
        }
        _ => return Err(Error::Internal("parallel circles lost their structure".into())),
    }
    if cur.find_triangle(f).is_some() {
        apply(cur, flips, *f, budget)?;
        let copy = triangle_at(cur, [c2, d, e], x_de, &[])?;
        apply(cur, flips, copy, budget)
    } else {
        let copy = triangle_at(cur, [c2, d, e], x_de, &[])?;
        apply(cur, flips, copy, budget)?;
        apply(cur, flips, *f, budget)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    word: Vec<usize>,
}

impl Serialize for CylindricalDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson { n: self.n, word: self.one_based_word() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CylindricalDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        CylindricalDiagram::from_one_based(raw.n, &raw.word).map_err(serde::de::Error::custom)
    }
}
