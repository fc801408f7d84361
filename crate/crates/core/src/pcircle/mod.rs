//! Intersecting pseudocircle arrangements in the plane.
//!
//! An arrangement is stored as one counterclockwise crossing word per circle
//! plus a marked half-edge on the unbounded face; the half-edge complex, the
//! faces and their interior masks are derived and validated on construction.

mod canon;
pub mod complex;
pub mod fixtures;
mod lens;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{ArrangementError, Error, Result};
pub use complex::{FaceData, HalfEdge, HalfEdgeComplex};
pub use lens::{Lens, LensAnalysis, LensArc, LensRegion};

/// The crossing at which circle `enters` passes into the interior of circle
/// `entered`. Each ordered pair of distinct circles has exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub enters: usize,
    pub entered: usize,
}

impl Crossing {
    pub fn new(enters: usize, entered: usize) -> Crossing {
        Crossing { enters, entered }
    }

    pub fn circles(self) -> (usize, usize) {
        (self.enters.min(self.entered), self.enters.max(self.entered))
    }

    pub fn involves(self, c: usize) -> bool {
        self.enters == c || self.entered == c
    }

    /// The circle other than `c`.
    pub fn other(self, c: usize) -> usize {
        if self.enters == c {
            self.entered
        } else {
            self.enters
        }
    }

    fn relabel(self, map: &[usize]) -> Crossing {
        Crossing { enters: map[self.enters], entered: map[self.entered] }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.enters + 1, self.entered + 1)
    }
}

impl Serialize for Crossing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.enters + 1, self.entered + 1].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Crossing {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        if a == 0 || b == 0 || a == b {
            return Err(serde::de::Error::custom("crossing needs two distinct 1-based circles"));
        }
        Ok(Crossing::new(a - 1, b - 1))
    }
}

/// The half-edge of `circle` leaving crossing `at`, forward or backward.
/// It names the face on its left and keeps naming it across flips of
/// triangles not incident to `at`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdgeKey {
    pub circle: usize,
    pub at: Crossing,
    pub forward: bool,
}

/// Isomorphism type of three pairwise intersecting circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TripleClass {
    Krupp,
    NonKrupp(u8),
}

impl fmt::Display for TripleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleClass::Krupp => write!(f, "Krupp"),
            TripleClass::NonKrupp(m) => write!(f, "NonKrupp({m})"),
        }
    }
}

/// A bounded triangular face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangleCell {
    pub face: usize,
    pub vertices: [Crossing; 3],
}

/// A triangle flip named by its three (sorted) vertices, which persist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriangleFlip {
    pub vertices: [Crossing; 3],
}

impl TriangleFlip {
    pub fn new(mut vertices: [Crossing; 3]) -> TriangleFlip {
        vertices.sort();
        TriangleFlip { vertices }
    }

    /// The three circles involved, sorted.
    pub fn circles(&self) -> [usize; 3] {
        let mut c: Vec<usize> = self.vertices.iter().flat_map(|x| [x.enters, x.entered]).collect();
        c.sort_unstable();
        c.dedup();
        [c[0], c[1], c[2]]
    }
}

impl fmt::Display for TriangleFlip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        write!(f, "[{a} {b} {c}]")
    }
}

fn vertex_id(n: usize, x: Crossing) -> usize {
    x.enters * (n - 1) + if x.entered < x.enters { x.entered } else { x.entered - 1 }
}

fn vertex_of_id(n: usize, v: usize) -> Crossing {
    let enters = v / (n - 1);
    let r = v % (n - 1);
    Crossing { enters, entered: if r < enters { r } else { r + 1 } }
}

/// A validated intersecting pseudocircle arrangement with a marked unbounded
/// face.
#[derive(Clone, Debug)]
pub struct PlanarArrangement {
    n: usize,
    words: Vec<Vec<Crossing>>,
    outer: HalfEdgeKey,
    complex: HalfEdgeComplex,
    data: FaceData,
    base: Vec<usize>,
    pos: Vec<Vec<usize>>,
}

impl PartialEq for PlanarArrangement {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_code() == other.canonical_code()
    }
}

impl Eq for PlanarArrangement {}

impl PlanarArrangement {
    /// Builds and validates an arrangement from counterclockwise crossing
    /// words. `outer` must be a backward half-edge bounding the unbounded face.
    pub fn from_words(n: usize, words: Vec<Vec<Crossing>>, outer: HalfEdgeKey) -> Result<PlanarArrangement> {
        if n < 2 {
            return Err(Error::Malformed("an arrangement needs at least two circles".into()));
        }
        if outer.forward {
            return Err(ArrangementError::UnboundedFace("marked half-edge must be backward".into()).into());
        }
        let nv = n * (n - 1);
        let types: Vec<(usize, usize)> = (0..nv)
            .map(|v| {
                let x = vertex_of_id(n, v);
                (x.enters, x.entered)
            })
            .collect();
        let mut id_words = Vec::with_capacity(n);
        for w in &words {
            let mut ids = Vec::with_capacity(w.len());
            for &x in w {
                if x.enters >= n || x.entered >= n || x.enters == x.entered {
                    return Err(Error::Malformed(format!("invalid crossing {x}")));
                }
                ids.push(vertex_id(n, x));
            }
            id_words.push(ids);
        }
        if outer.circle >= n || outer.at.enters >= n || outer.at.entered >= n || outer.at.enters == outer.at.entered {
            return Err(ArrangementError::UnboundedFace("marked half-edge out of range".into()).into());
        }
        let complex = HalfEdgeComplex::from_words(n, types, &id_words, (outer.circle, vertex_id(n, outer.at)))?;
        let data = complex.validate()?;
        let mut base = Vec::with_capacity(n);
        let mut acc = 0;
        let mut pos = vec![vec![usize::MAX; nv]; n];
        for (c, w) in id_words.iter().enumerate() {
            base.push(acc);
            acc += 2 * w.len();
            for (t, &v) in w.iter().enumerate() {
                pos[c][v] = t;
            }
        }
        Ok(PlanarArrangement { n, words, outer, complex, data, base, pos })
    }

    /// Converts a validated raw complex into an arrangement.
    pub fn from_complex(c: &HalfEdgeComplex) -> Result<PlanarArrangement> {
        c.validate()?;
        let n = c.n;
        let mut words = Vec::with_capacity(n);
        for circle in 0..n {
            let start = (0..c.half_edges.len())
                .find(|&h| c.half_edges[h].circle == circle && c.half_edges[h].forward)
                .unwrap();
            let mut w = Vec::new();
            let mut h = start;
            loop {
                let (a, b) = c.vertex_types[c.half_edges[h].origin];
                w.push(Crossing::new(a, b));
                h = c.clockwise(c.clockwise(c.half_edges[h].twin));
                if h == start {
                    break;
                }
            }
            words.push(w);
        }
        let o = &c.half_edges[c.outer];
        let (a, b) = c.vertex_types[o.origin];
        PlanarArrangement::from_words(n, words, HalfEdgeKey { circle: o.circle, at: Crossing::new(a, b), forward: false })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[Vec<Crossing>] {
        &self.words
    }

    pub fn outer_key(&self) -> HalfEdgeKey {
        self.outer
    }

    pub fn complex(&self) -> &HalfEdgeComplex {
        &self.complex
    }

    pub fn face_count(&self) -> usize {
        self.data.faces.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.complex.vertex_types.len()
    }

    pub fn unbounded_face(&self) -> usize {
        self.data.outer_face
    }

    /// Boundary half-edges of a face in traversal order.
    pub fn face_half_edges(&self, f: usize) -> &[usize] {
        &self.data.faces[f]
    }

    pub fn face_mask(&self, f: usize) -> u64 {
        self.data.masks[f]
    }

    pub fn face_size(&self, f: usize) -> usize {
        self.data.faces[f].len()
    }

    pub fn half_edge(&self, h: usize) -> &HalfEdge {
        &self.complex.half_edges[h]
    }

    pub fn face_of_half_edge(&self, h: usize) -> usize {
        self.data.face_of[h]
    }

    /// Crossing at the origin of a half-edge.
    pub fn origin(&self, h: usize) -> Crossing {
        vertex_of_id(self.n, self.complex.half_edges[h].origin)
    }

    /// Crossings on the boundary of a face, in traversal order.
    pub fn face_vertices(&self, f: usize) -> Vec<Crossing> {
        self.data.faces[f].iter().map(|&h| self.origin(h)).collect()
    }

    /// Index of the half-edge named by `key`, if `key.at` lies on `key.circle`.
    pub fn half_edge_index(&self, key: HalfEdgeKey) -> Option<usize> {
        if key.circle >= self.n || !key.at.involves(key.circle) || key.at.enters >= self.n || key.at.entered >= self.n {
            return None;
        }
        let t = self.pos[key.circle][vertex_id(self.n, key.at)];
        let m = self.words[key.circle].len();
        let b = self.base[key.circle];
        Some(if key.forward { b + 2 * t } else { b + 2 * ((t + m - 1) % m) + 1 })
    }

    pub fn key_of(&self, h: usize) -> HalfEdgeKey {
        let e = &self.complex.half_edges[h];
        HalfEdgeKey { circle: e.circle, at: self.origin(h), forward: e.forward }
    }

    pub fn face_of_key(&self, key: HalfEdgeKey) -> Option<usize> {
        self.half_edge_index(key).map(|h| self.data.face_of[h])
    }

    /// Whether a crossing lies inside circle `c` (it must not lie on `c`).
    pub fn crossing_inside(&self, x: Crossing, c: usize) -> bool {
        let h = self.half_edge_index(HalfEdgeKey { circle: x.enters, at: x, forward: true }).unwrap();
        self.data.masks[self.data.face_of[h]] >> c & 1 == 1
    }

    pub fn triangle_cells(&self) -> Vec<TriangleCell> {
        (0..self.face_count())
            .filter(|&f| f != self.data.outer_face && self.face_size(f) == 3)
            .map(|f| {
                let mut v = self.face_vertices(f);
                v.sort();
                TriangleCell { face: f, vertices: [v[0], v[1], v[2]] }
            })
            .collect()
    }

    /// The bounded triangular face with exactly these vertices.
    pub fn find_triangle(&self, flip: &TriangleFlip) -> Option<usize> {
        self.triangle_cells().into_iter().find(|t| t.vertices == flip.vertices).map(|t| t.face)
    }

    pub fn flip_triangle_cell(&self, face: usize) -> Result<PlanarArrangement> {
        self.flip_tracking(face, &mut [])
    }

    /// Flips a triangle and re-anchors each key in `anchors` so it keeps
    /// naming the same face.
    pub fn flip_tracking(&self, face: usize, anchors: &mut [HalfEdgeKey]) -> Result<PlanarArrangement> {
        if face >= self.face_count() {
            return Err(Error::NotATriangle(format!("face {face} out of range")));
        }
        if face == self.data.outer_face {
            return Err(Error::NotATriangle("the unbounded face".into()));
        }
        let cycle = &self.data.faces[face];
        let circles: HashSet<usize> = cycle.iter().map(|&h| self.half_edge(h).circle).collect();
        if cycle.len() != 3 || circles.len() != 3 {
            return Err(Error::NotATriangle(format!("face {face} has {} sides on {} circles", cycle.len(), circles.len())));
        }
        let tri: Vec<Crossing> = self.face_vertices(face);
        let reanchor = |key: HalfEdgeKey| -> Result<HalfEdgeKey> {
            if !tri.contains(&key.at) {
                return Ok(key);
            }
            let f = self.face_of_key(key).unwrap();
            if f == face {
                return Err(Error::Internal("an anchor lies in the flipped triangle".into()));
            }
            self.data.faces[f]
                .iter()
                .map(|&h| self.key_of(h))
                .find(|k| !tri.contains(&k.at))
                .ok_or_else(|| Error::Internal("face has no vertex outside the triangle".into()))
        };
        for a in anchors.iter_mut() {
            *a = reanchor(*a)?;
        }
        let outer = reanchor(self.outer)?;
        let outer = if outer.forward {
            return Err(Error::Internal("unbounded face has a forward half-edge".into()));
        } else {
            outer
        };
        let mut words = self.words.clone();
        for &h in cycle {
            let c = self.half_edge(h).circle;
            let (u, w) = (self.origin(h), self.origin(self.half_edge(h).twin));
            let (pu, pw) = (self.pos[c][vertex_id(self.n, u)], self.pos[c][vertex_id(self.n, w)]);
            words[c].swap(pu, pw);
        }
        PlanarArrangement::from_words(self.n, words, outer)
    }

    pub fn flip(&self, flip: &TriangleFlip) -> Result<PlanarArrangement> {
        let face = self.find_triangle(flip).ok_or_else(|| Error::NotATriangle(flip.to_string()))?;
        self.flip_triangle_cell(face)
    }

    /// Arrangements reachable by one triangle flip.
    pub fn neighbors(&self) -> Vec<PlanarArrangement> {
        self.triangle_cells()
            .into_iter()
            .map(|t| self.flip_triangle_cell(t.face).expect("triangle flips preserve validity"))
            .collect()
    }

    /// Dual-graph distances from face `f`.
    pub fn face_distances(&self, f: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.face_count()];
        dist[f] = 0;
        let mut q = VecDeque::from([f]);
        while let Some(g) = q.pop_front() {
            for &h in &self.data.faces[g] {
                let o = self.data.face_of[self.half_edge(h).twin];
                if dist[o] == usize::MAX {
                    dist[o] = dist[g] + 1;
                    q.push_back(o);
                }
            }
        }
        dist
    }

    pub fn cell_eccentricity(&self, f: usize) -> usize {
        self.face_distances(f).into_iter().max().unwrap_or(0)
    }

    /// Faces inside every circle.
    pub fn center_faces(&self) -> Vec<usize> {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        (0..self.face_count()).filter(|&f| self.data.masks[f] == full).collect()
    }

    pub fn is_cylindrical(&self) -> bool {
        !self.center_faces().is_empty()
    }

    /// Bounded faces around which every boundary edge runs clockwise, i.e.
    /// faces outside every circle that bounds them.
    pub fn clockwise_cells(&self) -> Vec<usize> {
        (0..self.face_count())
            .filter(|&f| f != self.data.outer_face)
            .filter(|&f| self.data.faces[f].iter().all(|&h| !self.half_edge(h).forward))
            .collect()
    }

    /// The sub-arrangement on the given circles, relabeled in increasing
    /// order, with the unbounded face inherited.
    pub fn restrict(&self, circles: &[usize]) -> Result<PlanarArrangement> {
        let mut keep = circles.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.len() < 2 || keep.iter().any(|&c| c >= self.n) {
            return Err(Error::OutOfRange(format!("circle subset {circles:?}")));
        }
        let mut map = vec![usize::MAX; self.n];
        for (i, &c) in keep.iter().enumerate() {
            map[c] = i;
        }
        let inside = |c: usize| map[c] != usize::MAX;
        let words: Vec<Vec<Crossing>> = keep
            .iter()
            .map(|&c| self.words[c].iter().filter(|x| inside(x.other(c))).map(|x| x.relabel(&map)).collect())
            .collect();
        // walk the unbounded region of the sub-arrangement until it meets a kept circle
        let mut seen = vec![false; self.face_count()];
        let start = self.data.outer_face;
        seen[start] = true;
        let mut q = VecDeque::from([start]);
        let mut found = None;
        'bfs: while let Some(f) = q.pop_front() {
            for &h in &self.data.faces[f] {
                let e = self.half_edge(h);
                if inside(e.circle) {
                    found = Some(h);
                    break 'bfs;
                }
                let g = self.data.face_of[e.twin];
                if !seen[g] {
                    seen[g] = true;
                    q.push_back(g);
                }
            }
        }
        let h = found.ok_or_else(|| Error::Internal("no kept circle bounds the unbounded region".into()))?;
        let e = self.half_edge(h);
        if e.forward {
            return Err(Error::Internal("unbounded region lies inside a kept circle".into()));
        }
        let c = e.circle;
        let w = &self.words[c];
        let start = self.pos[c][e.origin];
        let at = (0..w.len())
            .map(|d| w[(start + d) % w.len()])
            .find(|x| inside(x.other(c)))
            .unwrap();
        PlanarArrangement::from_words(
            keep.len(),
            words,
            HalfEdgeKey { circle: map[c], at: at.relabel(&map), forward: false },
        )
    }

    /// Krupp iff each pair's crossings are separated by the third circle;
    /// otherwise NonKrupp with the size of the unbounded face.
    pub fn classify_triple(&self, i: usize, j: usize, k: usize) -> Result<TripleClass> {
        let mut t = [i, j, k];
        t.sort_unstable();
        if t[0] == t[1] || t[1] == t[2] || t[2] >= self.n {
            return Err(Error::OutOfRange(format!("triple ({}, {}, {})", i + 1, j + 1, k + 1)));
        }
        let sub = self.restrict(&t)?;
        let separated = [(0, 1, 2), (0, 2, 1), (1, 2, 0)].iter().all(|&(a, b, c)| {
            sub.crossing_inside(Crossing::new(a, b), c) != sub.crossing_inside(Crossing::new(b, a), c)
        });
        if separated {
            return Ok(TripleClass::Krupp);
        }
        let m = sub.face_size(sub.unbounded_face());
        if !(2..=4).contains(&m) {
            return Err(Error::Internal(format!("NonKrupp triple with unbounded face of size {m}")));
        }
        Ok(TripleClass::NonKrupp(m as u8))
    }

    /// Classes of all triples in lexicographic order.
    pub fn triple_classes(&self) -> Vec<([usize; 3], TripleClass)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                for k in (j + 1)..self.n {
                    out.push(([i, j, k], self.classify_triple(i, j, k).unwrap()));
                }
            }
        }
        out
    }

    pub fn has_nonkrupp3(&self) -> bool {
        self.triple_classes().iter().any(|(_, c)| *c == TripleClass::NonKrupp(3))
    }

    /// The four cylindricity criteria.
    pub fn cylindricity(&self) -> Cylindricity {
        Cylindricity {
            has_center: self.is_cylindrical(),
            no_nonkrupp3: !self.has_nonkrupp3(),
            no_clockwise_cell: self.clockwise_cells().is_empty(),
            unbounded_eccentricity_is_n: self.cell_eccentricity(self.unbounded_face()) == self.n,
        }
    }

    pub fn canonical_code(&self) -> Vec<u8> {
        canon::canonical_code(self)
    }

    pub fn triangle_count(&self) -> usize {
        self.triangle_cells().len()
    }

    /// Faces with exactly two sides that are bounded.
    pub fn digon_cells(&self) -> Vec<usize> {
        (0..self.face_count()).filter(|&f| f != self.data.outer_face && self.face_size(f) == 2).collect()
    }

    pub fn analyze_lens(&self, lens: Lens) -> Result<LensAnalysis> {
        lens::analyze(self, lens)
    }

    /// Sweeps the lens's sweep arc toward its target arc until the lens has
    /// no vertex inside; returns the flips and the final arrangement.
    pub fn lens_sweep(&self, lens: Lens) -> Result<(Vec<TriangleFlip>, PlanarArrangement)> {
        lens::sweep(self, lens)
    }

    /// Relabels circles by `perm` (old label to new label).
    pub fn relabel(&self, perm: &[usize]) -> Result<PlanarArrangement> {
        let mut words = vec![Vec::new(); self.n];
        for (c, w) in self.words.iter().enumerate() {
            words[perm[c]] = w.iter().map(|x| x.relabel(perm)).collect();
        }
        let o = self.outer;
        PlanarArrangement::from_words(self.n, words, HalfEdgeKey { circle: perm[o.circle], at: o.at.relabel(perm), forward: false })
    }
}

/// Verdicts of the four implemented cylindricity criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cylindricity {
    pub has_center: bool,
    pub no_nonkrupp3: bool,
    pub no_clockwise_cell: bool,
    pub unbounded_eccentricity_is_n: bool,
}

impl Cylindricity {
    pub fn agree(&self) -> bool {
        let v = self.has_center;
        self.no_nonkrupp3 == v && self.no_clockwise_cell == v && self.unbounded_eccentricity_is_n == v
    }
}

/// Validates a raw complex, reporting the first violated invariant.
pub fn validate_arrangement(c: &HalfEdgeComplex) -> std::result::Result<(), ArrangementError> {
    c.validate().map(|_| ())
}

/// Replays triangle flips, failing at the first one that is not a face.
pub fn replay(a: &PlanarArrangement, flips: &[TriangleFlip]) -> Result<PlanarArrangement> {
    flips.iter().try_fold(a.clone(), |cur, f| cur.flip(f))
}

/// A lazy random walk of triangle flips.
pub fn random_flips<R: Rng + ?Sized>(a: &PlanarArrangement, steps: usize, rng: &mut R) -> PlanarArrangement {
    let mut cur = a.clone();
    for _ in 0..steps {
        if rng.gen_bool(0.5) {
            continue;
        }
        let cells = cur.triangle_cells();
        if cells.is_empty() {
            break;
        }
        let t = cells[rng.gen_range(0..cells.len())];
        cur = cur.flip_triangle_cell(t.face).expect("triangle flips preserve validity");
    }
    cur
}

#[derive(Serialize, Deserialize)]
struct UnboundedJson {
    circle: usize,
    crossing: usize,
}

#[derive(Serialize, Deserialize)]
struct PlanarJson {
    n: usize,
    crossings: Vec<[usize; 2]>,
    circles: Vec<Vec<usize>>,
    unbounded_face: UnboundedJson,
}

impl PlanarArrangement {
    /// Raw complex from the JSON rotation-system codec, without validation.
    pub fn complex_from_json(text: &str) -> Result<HalfEdgeComplex> {
        let raw: PlanarJson = serde_json::from_str(text)?;
        let types = raw
            .crossings
            .iter()
            .map(|&[a, b]| {
                if a == 0 || b == 0 {
                    Err(Error::Malformed("circle labels are 1-based".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if raw.unbounded_face.circle == 0 {
            return Err(Error::Malformed("circle labels are 1-based".into()));
        }
        Ok(HalfEdgeComplex::from_words(
            raw.n,
            types,
            &raw.circles,
            (raw.unbounded_face.circle - 1, raw.unbounded_face.crossing),
        )?)
    }

    pub fn from_json(text: &str) -> Result<PlanarArrangement> {
        PlanarArrangement::from_complex(&PlanarArrangement::complex_from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        let n = self.n;
        let raw = PlanarJson {
            n,
            crossings: (0..n * (n - 1)).map(|v| vertex_of_id(n, v)).map(|x| [x.enters + 1, x.entered + 1]).collect(),
            circles: self.words.iter().map(|w| w.iter().map(|&x| vertex_id(n, x)).collect()).collect(),
            unbounded_face: UnboundedJson { circle: self.outer.circle + 1, crossing: vertex_id(n, self.outer.at) },
        };
        serde_json::to_string(&raw).expect("serializable")
    }
}

impl Serialize for PlanarArrangement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: serde_json::Value = serde_json::from_str(&self.to_json()).map_err(serde::ser::Error::custom)?;
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanarArrangement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        PlanarArrangement::from_json(&v.to_string()).map_err(serde::de::Error::custom)
    }
}
