//! Extreme lines, shelling sequences, sweeps, and good triangle sets.
//!
//! The side of a crossing relative to a line is read from the wiring
//! convention of [`crate::signotope`]: for a triple `x < y < z`, the crossing
//! of the two other lines lies above `x` or `z` iff the sign is `-`, and above
//! `y` iff the sign is `+`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signotope::{all_triples, Sign, Signotope, Triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Above,
    Below,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Above => Side::Below,
            Side::Below => Side::Above,
        }
    }
}

/// Side of `line` on which the crossing of the other two lines of `t` lies.
pub fn crossing_side(s: &Signotope, t: Triple, line: usize) -> Side {
    side_for_sign(t, line, s.sign(t))
}

fn side_for_sign(t: Triple, line: usize, sign: Sign) -> Side {
    let above = if line == t.j as usize { sign.is_plus() } else { !sign.is_plus() };
    if above {
        Side::Above
    } else {
        Side::Below
    }
}

/// The sign that places the crossing of the other two lines of `t` on `side`
/// of `line`.
pub fn sign_for_side(t: Triple, line: usize, side: Side) -> Sign {
    if side_for_sign(t, line, Sign::Plus) == side {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn check_line(s: &Signotope, line: usize) -> Result<()> {
    if line >= s.n() {
        return Err(Error::OutOfRange(format!("line {} for n={}", line + 1, s.n())));
    }
    Ok(())
}

fn lines_of(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |b| mask >> b & 1 == 1)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Side on which every crossing among the `active` lines lies relative to
/// `line`, if there is one.
fn extreme_side_within(s: &Signotope, line: usize, active: u64) -> Option<Side> {
    let others: Vec<usize> = lines_of(active).filter(|&l| l != line).collect();
    let mut side = None;
    for (a, &x) in others.iter().enumerate() {
        for &y in &others[a + 1..] {
            let here = crossing_side(s, Triple::new(line, x, y).unwrap(), line);
            match side {
                None => side = Some(here),
                Some(prev) if prev != here => return None,
                _ => {}
            }
        }
    }
    side
}

/// Whether all crossings not on `line` lie strictly on one side of it.
pub fn extreme_side(s: &Signotope, line: usize) -> Result<Option<Side>> {
    check_line(s, line)?;
    Ok(extreme_side_within(s, line, full_mask(s.n())))
}

/// Removal order together with the extreme side at each removal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingSequence {
    pub order: Vec<usize>,
    pub sides: Vec<Side>,
}

impl ShellingSequence {
    /// Replays the removals and checks extremality at every step.
    pub fn verify(&self, s: &Signotope) -> bool {
        let n = s.n();
        let mut seen = vec![false; n];
        if self.order.len() != n || self.sides.len() != n {
            return false;
        }
        let mut active = full_mask(n);
        for (&l, &side) in self.order.iter().zip(&self.sides) {
            if l >= n || seen[l] {
                return false;
            }
            seen[l] = true;
            if lines_of(active).count() >= 3 && extreme_side_within(s, l, active) != Some(side) {
                return false;
            }
            active &= !(1 << l);
        }
        true
    }
}

/// A shelling sequence by backtracking over extreme lines, trying lines in
/// increasing order and memoizing dead ends by the set of remaining lines.
pub fn shelling_sequence(s: &Signotope) -> Option<ShellingSequence> {
    let n = s.n();
    let mut dead = HashSet::new();
    let mut seq = ShellingSequence { order: Vec::with_capacity(n), sides: Vec::with_capacity(n) };
    if shell_from(s, full_mask(n), &mut dead, &mut seq) {
        Some(seq)
    } else {
        None
    }
}

fn shell_from(s: &Signotope, active: u64, dead: &mut HashSet<u64>, seq: &mut ShellingSequence) -> bool {
    let count = active.count_ones();
    if count <= 2 {
        // two lines left: each is extreme on either side; record a fixed choice
        for l in lines_of(active) {
            seq.order.push(l);
            seq.sides.push(Side::Below);
        }
        return true;
    }
    if dead.contains(&active) {
        return false;
    }
    for l in lines_of(active) {
        if let Some(side) = extreme_side_within(s, l, active) {
            seq.order.push(l);
            seq.sides.push(side);
            if shell_from(s, active & !(1 << l), dead, seq) {
                return true;
            }
            seq.order.pop();
            seq.sides.pop();
        }
    }
    dead.insert(active);
    false
}

/// The signotope obtained by inserting lines in reverse shelling order, each
/// in extreme position on its recorded side.
pub fn from_shelling(n: usize, seq: &ShellingSequence) -> Result<Signotope> {
    let mut pos = vec![usize::MAX; n];
    if seq.order.len() != n || seq.sides.len() != n {
        return Err(Error::Malformed("shelling sequence must list every line once".into()));
    }
    for (idx, &l) in seq.order.iter().enumerate() {
        if l >= n || pos[l] != usize::MAX {
            return Err(Error::Malformed("shelling sequence must list every line once".into()));
        }
        pos[l] = idx;
    }
    let signs: Vec<Sign> = all_triples(n)
        .into_iter()
        .map(|t| {
            let first = t.lines().into_iter().min_by_key(|&l| pos[l]).unwrap();
            sign_for_side(t, first, seq.sides[pos[first]])
        })
        .collect();
    Signotope::from_signs(n, &signs)
}

/// Flips that move `line` to extreme position on `side`, considering only
/// crossings among the `active` lines.
fn sweep_within(s: &Signotope, line: usize, side: Side, active: u64) -> Result<(Vec<Triple>, Signotope)> {
    let mut todo: Vec<Triple> = all_triples(s.n())
        .into_iter()
        .filter(|t| t.contains(line) && t.lines().iter().all(|&l| active >> l & 1 == 1))
        .filter(|&t| crossing_side(s, t, line) != side)
        .collect();
    let mut cur = s.clone();
    let mut flips = Vec::with_capacity(todo.len());
    while !todo.is_empty() {
        let idx = todo
            .iter()
            .position(|&t| cur.is_flippable(t))
            .ok_or_else(|| Error::Internal(format!("sweep of line {} is stuck", line + 1)))?;
        let t = todo.remove(idx);
        cur = cur.flip(t)?;
        flips.push(t);
    }
    Ok((flips, cur))
}

/// Flip sequence moving `line` to extreme position on `side`. Each triple
/// containing `line` whose crossing is on the wrong side is flipped once,
/// always the lowest such triple that is currently a triangle.
pub fn sweep_line_extreme(s: &Signotope, line: usize, side: Side) -> Result<Vec<Triple>> {
    check_line(s, line)?;
    Ok(sweep_within(s, line, side, full_mask(s.n()))?.0)
}

/// A flip path from `a` to the shellable `target`, flipping every differing
/// triple exactly once: sweep each shelling line of the target to its side
/// among the lines not yet removed.
pub fn path_to_shellable(a: &Signotope, target: &Signotope, seq: &ShellingSequence) -> Result<Vec<Triple>> {
    if a.n() != target.n() {
        return Err(Error::Malformed("signotopes have different sizes".into()));
    }
    if !seq.verify(target) {
        return Err(Error::NotShellable);
    }
    let mut cur = a.clone();
    let mut active = full_mask(a.n());
    let mut path = Vec::new();
    for (&l, &side) in seq.order.iter().zip(&seq.sides) {
        if active.count_ones() < 3 {
            break;
        }
        let (flips, next) = sweep_within(&cur, l, side, active)?;
        path.extend(flips);
        cur = next;
        active &= !(1 << l);
    }
    if cur != *target {
        return Err(Error::Internal("path did not reach the target".into()));
    }
    Ok(path)
}

/// Applies a flip sequence, failing on the first non-flippable triple.
pub fn replay(s: &Signotope, flips: &[Triple]) -> Result<Signotope> {
    flips.iter().try_fold(s.clone(), |cur, &t| cur.flip(t))
}

/// Triangles `t_1..t_k` with distinct lines `τ(1)..τ(k)` such that `t_i` is
/// the first triangle containing `τ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodTriangleSet {
    pub triangles: Vec<Triple>,
    pub lines: Vec<usize>,
}

impl GoodTriangleSet {
    /// Checks the first-occurrence property.
    pub fn is_good(&self, n: usize) -> bool {
        if self.triangles.len() != self.lines.len() {
            return false;
        }
        let mut seen_lines = HashSet::new();
        let mut seen_triangles = HashSet::new();
        for (i, (&t, &l)) in self.triangles.iter().zip(&self.lines).enumerate() {
            if t.k as usize >= n || !t.contains(l) || !seen_lines.insert(l) || !seen_triangles.insert(t) {
                return false;
            }
            if self.triangles[..i].iter().any(|p| p.contains(l)) {
                return false;
            }
        }
        true
    }
}

/// Repeatedly takes the lowest line not covered by a chosen triangle and its
/// lexicographically smallest incident triangle.
pub fn build_good_set(s: &Signotope) -> GoodTriangleSet {
    let n = s.n();
    let flippable = s.flippable_triples();
    let mut covered = vec![false; n];
    let mut set = GoodTriangleSet { triangles: Vec::new(), lines: Vec::new() };
    while let Some(l) = (0..n).find(|&l| !covered[l]) {
        let t = *flippable
            .iter()
            .find(|t| t.contains(l))
            .expect("every line bounds a triangle");
        for x in t.lines() {
            covered[x] = true;
        }
        set.triangles.push(t);
        set.lines.push(l);
    }
    set
}

/// A shellable signotope with orientation `alpha[i]` on `T.triangles[i]`,
/// together with its shelling sequence `τ(k),…,τ(1),τ(n),…,τ(k+1)` where
/// `τ(k+1..n)` are the remaining lines in increasing order.
pub fn shellable_for_assignment(
    set: &GoodTriangleSet,
    alpha: &[Sign],
    n: usize,
) -> Result<(Signotope, ShellingSequence)> {
    if !set.is_good(n) {
        return Err(Error::Malformed("triangle set is not good".into()));
    }
    if alpha.len() != set.triangles.len() {
        return Err(Error::Malformed("one sign per triangle required".into()));
    }
    let rest: Vec<usize> = (0..n).filter(|l| !set.lines.contains(l)).collect();
    let mut order: Vec<usize> = set.lines.iter().rev().copied().collect();
    let mut sides: Vec<Side> = set
        .triangles
        .iter()
        .zip(&set.lines)
        .zip(alpha)
        .rev()
        .map(|((&t, &l), &a)| side_for_sign(t, l, a))
        .collect();
    order.extend(rest.iter().rev());
    sides.extend(std::iter::repeat_n(Side::Below, rest.len()));
    let seq = ShellingSequence { order, sides };
    let s = from_shelling(n, &seq)?;
    Ok((s, seq))
}

/// Whether two distinct triangles share no vertex, i.e. no pair of lines.
pub fn compatible_triangles(s: &Signotope, t1: Triple, t2: Triple) -> Result<bool> {
    for t in [t1, t2] {
        if t.k as usize >= s.n() || !s.is_flippable(t) {
            return Err(Error::NotATriangle(t.to_string()));
        }
    }
    if t1 == t2 {
        return Err(Error::Malformed("triangles must be distinct".into()));
    }
    Ok(t1.shared_lines(t2) < 2)
}

/// The bipartite incidence graph between triangles and lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceGraph {
    pub triangles: Vec<Triple>,
    /// Components, each as its sorted lines and the indices of its triangles.
    pub components: Vec<IncidenceComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceComponent {
    pub lines: Vec<usize>,
    pub triangles: Vec<usize>,
}

impl IncidenceGraph {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.triangles
            .iter()
            .enumerate()
            .flat_map(|(i, t)| t.lines().map(|l| (i, l)))
            .collect()
    }
}

pub fn triangle_line_incidence_graph(s: &Signotope) -> IncidenceGraph {
    let n = s.n();
    let triangles = s.flippable_triples();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for t in &triangles {
        let [a, b, c] = t.lines();
        for x in [b, c] {
            let (ra, rx) = (find(&mut parent, a), find(&mut parent, x));
            parent[ra.max(rx)] = ra.min(rx);
        }
    }
    let mut components: Vec<IncidenceComponent> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for l in 0..n {
        let r = find(&mut parent, l);
        if slot[r] == usize::MAX {
            slot[r] = components.len();
            components.push(IncidenceComponent { lines: Vec::new(), triangles: Vec::new() });
        }
        components[slot[r]].lines.push(l);
    }
    for (i, t) in triangles.iter().enumerate() {
        let r = find(&mut parent, t.i as usize);
        components[slot[r]].triangles.push(i);
    }
    IncidenceGraph { triangles, components }
}
