//! Raw half-edge complexes and their validation.
//!
//! A vertex has a type `(enterer, entered)`: at it, circle `enterer` passes
//! into the interior of circle `entered`. Circles run counterclockwise, so a
//! forward half-edge has the circle's interior on its left. Around a vertex
//! of type `(a, b)` the outgoing half-edges in counterclockwise order are
//! `fwd(b), fwd(a), bwd(b), bwd(a)`. `next(h)` is the outgoing half-edge at
//! the head of `h` immediately clockwise from `twin(h)`, so faces lie to the
//! left of their boundary half-edges.

use std::collections::VecDeque;

use crate::error::ArrangementError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HalfEdge {
    pub origin: usize,
    pub twin: usize,
    pub next: usize,
    pub circle: usize,
    pub forward: bool,
}

/// A combinatorial cell complex claimed to be an intersecting pseudocircle
/// arrangement. Nothing is assumed until [`HalfEdgeComplex::validate`] passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfEdgeComplex {
    pub n: usize,
    /// `(enterer, entered)` per vertex.
    pub vertex_types: Vec<(usize, usize)>,
    pub half_edges: Vec<HalfEdge>,
    /// A half-edge of the marked unbounded face.
    pub outer: usize,
}

/// Faces and interior masks of a validated complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceData {
    pub face_of: Vec<usize>,
    pub faces: Vec<Vec<usize>>,
    /// Bit `c` is set iff the face lies inside circle `c`.
    pub masks: Vec<u64>,
    pub outer_face: usize,
}

impl HalfEdgeComplex {
    /// Builds a complex from per-circle counterclockwise vertex sequences.
    /// Forward half-edge of edge `t` on circle `c` runs from `words[c][t]` to
    /// `words[c][t + 1]`; `outer` names a circle and a vertex on it whose
    /// backward half-edge bounds the unbounded face.
    pub fn from_words(
        n: usize,
        vertex_types: Vec<(usize, usize)>,
        words: &[Vec<usize>],
        outer: (usize, usize),
    ) -> Result<HalfEdgeComplex, ArrangementError> {
        if words.len() != n || n < 2 {
            return Err(ArrangementError::Links(format!("expected {n} >= 2 circle words, got {}", words.len())));
        }
        let nv = vertex_types.len();
        for (v, &(a, b)) in vertex_types.iter().enumerate() {
            if a >= n || b >= n || a == b {
                return Err(ArrangementError::Links(format!("vertex {v} has invalid type ({a}, {b})")));
            }
        }
        // slot[v] collects (circle, fwd out, bwd out) for each visit
        let mut visits: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); nv];
        let mut half_edges = Vec::new();
        for (c, w) in words.iter().enumerate() {
            if w.is_empty() {
                return Err(ArrangementError::CircleCycle { circle: c });
            }
            let base = half_edges.len();
            let m = w.len();
            for t in 0..m {
                let (u, v) = (w[t], w[(t + 1) % m]);
                if u >= nv {
                    return Err(ArrangementError::Links(format!("circle {c} lists unknown vertex {u}")));
                }
                half_edges.push(HalfEdge { origin: u, twin: base + 2 * t + 1, next: usize::MAX, circle: c, forward: true });
                half_edges.push(HalfEdge { origin: v, twin: base + 2 * t, next: usize::MAX, circle: c, forward: false });
            }
            for t in 0..m {
                let v = w[t];
                let (a, b) = vertex_types[v];
                if c != a && c != b {
                    return Err(ArrangementError::Links(format!("circle {c} lists vertex {v} of circles {a} and {b}")));
                }
                let fwd = base + 2 * t;
                let bwd = base + 2 * ((t + m - 1) % m) + 1;
                visits[v].push((c, fwd, bwd));
            }
        }
        for (v, list) in visits.iter().enumerate() {
            if list.len() != 2 {
                return Err(ArrangementError::Degree { vertex: v, degree: 2 * list.len() });
            }
            let (a, b) = vertex_types[v];
            let find = |c: usize| list.iter().find(|x| x.0 == c).copied();
            let (Some(va), Some(vb)) = (find(a), find(b)) else {
                return Err(ArrangementError::NotAlternating { vertex: v });
            };
            let rot = [vb.1, va.1, vb.2, va.2];
            for i in 0..4 {
                // the half-edge arriving along twin(rot[i]) continues clockwise
                let incoming = half_edges[rot[i]].twin;
                half_edges[incoming].next = rot[(i + 3) % 4];
            }
        }
        let (oc, ov) = outer;
        if oc >= n {
            return Err(ArrangementError::UnboundedFace(format!("circle {oc} out of range")));
        }
        let base: usize = words[..oc].iter().map(|w| 2 * w.len()).sum();
        let m = words[oc].len();
        let t = words[oc]
            .iter()
            .position(|&x| x == ov)
            .ok_or_else(|| ArrangementError::UnboundedFace(format!("vertex {ov} is not on circle {oc}")))?;
        let outer = base + 2 * ((t + m - 1) % m) + 1;
        Ok(HalfEdgeComplex { n, vertex_types, half_edges, outer })
    }

    fn head(&self, h: usize) -> usize {
        self.half_edges[self.half_edges[h].twin].origin
    }

    /// Outgoing half-edge clockwise after the outgoing half-edge `h`.
    pub fn clockwise(&self, h: usize) -> usize {
        self.half_edges[self.half_edges[h].twin].next
    }

    /// Checks every arrangement invariant in a fixed order and returns the
    /// face structure on success.
    pub fn validate(&self) -> Result<FaceData, ArrangementError> {
        self.check_links()?;
        self.check_degrees()?;
        self.check_rotations()?;
        self.check_circles()?;
        self.check_pairs()?;
        let faces = self.faces();
        let (v, e, f) = (self.vertex_types.len(), self.half_edges.len() / 2, faces.len());
        let n = self.n;
        if v != n * (n - 1) || e != 2 * v || f != v + 2 {
            return Err(ArrangementError::Euler { v, e, f });
        }
        self.depths(faces)
    }

    fn check_links(&self) -> Result<(), ArrangementError> {
        let m = self.half_edges.len();
        let nv = self.vertex_types.len();
        if self.outer >= m {
            return Err(ArrangementError::UnboundedFace("outer half-edge out of range".into()));
        }
        let mut hit = vec![false; m];
        for (h, e) in self.half_edges.iter().enumerate() {
            if e.twin >= m || e.next >= m || e.origin >= nv || e.circle >= self.n {
                return Err(ArrangementError::Links(format!("half-edge {h} has an out-of-range link")));
            }
            let t = &self.half_edges[e.twin];
            if e.twin == h || t.twin != h || t.circle != e.circle || t.forward == e.forward {
                return Err(ArrangementError::Links(format!("half-edge {h} has an inconsistent twin")));
            }
            if self.half_edges[e.next].origin != t.origin {
                return Err(ArrangementError::Links(format!("next of half-edge {h} does not start at its head")));
            }
            if std::mem::replace(&mut hit[e.next], true) {
                return Err(ArrangementError::Links(format!("half-edge {} is the next of two half-edges", e.next)));
            }
        }
        Ok(())
    }

    fn check_degrees(&self) -> Result<(), ArrangementError> {
        let mut deg = vec![0usize; self.vertex_types.len()];
        for e in &self.half_edges {
            deg[e.origin] += 1;
        }
        match deg.iter().position(|&d| d != 4) {
            Some(v) => Err(ArrangementError::Degree { vertex: v, degree: deg[v] }),
            None => Ok(()),
        }
    }

    fn check_rotations(&self) -> Result<(), ArrangementError> {
        let mut done = vec![false; self.half_edges.len()];
        for h in 0..self.half_edges.len() {
            if done[h] {
                continue;
            }
            let v = self.half_edges[h].origin;
            let mut orbit = vec![h];
            let mut x = self.clockwise(h);
            while x != h && orbit.len() <= 4 {
                orbit.push(x);
                x = self.clockwise(x);
            }
            if orbit.len() != 4 {
                return Err(ArrangementError::Degree { vertex: v, degree: orbit.len() });
            }
            let (a, b) = self.vertex_types[v];
            for i in 0..4 {
                let (c, d) = (self.half_edges[orbit[i]].circle, self.half_edges[orbit[(i + 1) % 4]].circle);
                if c == d || (c != a && c != b) {
                    return Err(ArrangementError::NotAlternating { vertex: v });
                }
                done[orbit[i]] = true;
            }
        }
        Ok(())
    }

    fn check_circles(&self) -> Result<(), ArrangementError> {
        for c in 0..self.n {
            let fwd: Vec<usize> =
                (0..self.half_edges.len()).filter(|&h| self.half_edges[h].circle == c && self.half_edges[h].forward).collect();
            let Some(&start) = fwd.first() else {
                return Err(ArrangementError::CircleCycle { circle: c });
            };
            let mut len = 0;
            let mut h = start;
            loop {
                let cont = self.clockwise(self.clockwise(self.half_edges[h].twin));
                let e = &self.half_edges[cont];
                if e.circle != c || !e.forward {
                    return Err(ArrangementError::CircleCycle { circle: c });
                }
                len += 1;
                h = cont;
                if h == start || len > fwd.len() {
                    break;
                }
            }
            if h != start || len != fwd.len() {
                return Err(ArrangementError::CircleCycle { circle: c });
            }
        }
        Ok(())
    }

    fn check_pairs(&self) -> Result<(), ArrangementError> {
        let n = self.n;
        let mut count = vec![[0usize; 2]; n * n];
        for &(a, b) in &self.vertex_types {
            let (lo, hi) = (a.min(b), a.max(b));
            count[lo * n + hi][usize::from(a < b)] += 1;
        }
        for a in 0..n {
            for b in (a + 1)..n {
                let [x, y] = count[a * n + b];
                if x + y != 2 {
                    return Err(ArrangementError::PairCrossing { a, b, count: x + y });
                }
                if x != 1 {
                    return Err(ArrangementError::CrossingOrientation { a, b });
                }
            }
        }
        Ok(())
    }

    fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.half_edges.len()];
        let mut faces = Vec::new();
        for h in 0..self.half_edges.len() {
            if seen[h] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = h;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.half_edges[x].next;
            }
            faces.push(cycle);
        }
        faces
    }

    fn depths(&self, faces: Vec<Vec<usize>>) -> Result<FaceData, ArrangementError> {
        let mut face_of = vec![0; self.half_edges.len()];
        for (f, cycle) in faces.iter().enumerate() {
            for &h in cycle {
                face_of[h] = f;
            }
        }
        let outer_face = face_of[self.outer];
        let mut masks = vec![u64::MAX; faces.len()];
        masks[outer_face] = 0;
        let mut q = VecDeque::from([outer_face]);
        while let Some(f) = q.pop_front() {
            for &h in &faces[f] {
                let e = &self.half_edges[h];
                let g = face_of[e.twin];
                let m = masks[f] ^ (1 << e.circle);
                if masks[g] == u64::MAX {
                    masks[g] = m;
                    q.push_back(g);
                } else if masks[g] != m {
                    return Err(ArrangementError::UnboundedFace("interior masks are inconsistent".into()));
                }
            }
        }
        for (h, e) in self.half_edges.iter().enumerate() {
            if (masks[face_of[h]] >> e.circle & 1 == 1) != e.forward {
                return Err(ArrangementError::UnboundedFace(format!(
                    "face left of half-edge {h} has the wrong side of circle {}",
                    e.circle
                )));
            }
        }
        Ok(FaceData { face_of, faces, masks, outer_face })
    }

    pub fn vertex_head(&self, h: usize) -> usize {
        self.head(h)
    }
}
