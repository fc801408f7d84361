//! Flip graphs: deterministic BFS closure, connectivity, diameter, paths,
//! random walks and export.

mod flow;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signotope::Signotope;

pub use flow::{FlowWork, SplitNetwork};

/// Which kind of state a flip graph holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Signotope,
    PlanarPseudocircle,
    CylindricalDiagram,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Signotope => "signotope",
            Family::PlanarPseudocircle => "planar-pseudocircle",
            Family::CylindricalDiagram => "cylindrical-diagram",
        }
    }
}

/// An undirected flip graph with states stored alongside their encodings.
#[derive(Clone, Debug)]
pub struct FlipGraph<S> {
    family: Family,
    n: usize,
    states: Vec<S>,
    codes: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    adj: Vec<Vec<usize>>,
    truncated: bool,
}

/// Breadth-first closure of `seed` under `neighbors`.
///
/// Each layer is expanded in parallel; new vertices of a layer are numbered
/// in encoding order, so the result does not depend on the thread count.
/// With a `limit`, discovery stops at that many vertices, every discovered
/// vertex is still expanded, and the graph is flagged as truncated.
pub fn explore<S, E, N>(
    family: Family,
    n: usize,
    seed: S,
    encode: E,
    neighbors: N,
    limit: Option<usize>,
) -> FlipGraph<S>
where
    S: Send + Sync,
    E: Fn(&S) -> Vec<u8> + Sync,
    N: Fn(&S) -> Vec<S> + Sync,
{
    let code = encode(&seed);
    let mut g = FlipGraph {
        family,
        n,
        states: vec![seed],
        codes: vec![code.clone()],
        index: HashMap::from([(code, 0)]),
        adj: vec![Vec::new()],
        truncated: false,
    };
    let mut frontier = 0..1;
    while !frontier.is_empty() {
        let expanded: Vec<Vec<(Vec<u8>, S)>> = g.states[frontier.clone()]
            .par_iter()
            .map(|s| neighbors(s).into_iter().map(|t| (encode(&t), t)).collect())
            .collect();
        let mut fresh: Vec<(Vec<u8>, S)> = Vec::new();
        let mut pending: Vec<(usize, Vec<u8>)> = Vec::new();
        for (offset, list) in expanded.into_iter().enumerate() {
            let u = frontier.start + offset;
            for (c, t) in list {
                if !g.index.contains_key(&c) {
                    fresh.push((c.clone(), t));
                }
                pending.push((u, c));
            }
        }
        fresh.sort_by(|a, b| a.0.cmp(&b.0));
        fresh.dedup_by(|a, b| a.0 == b.0);
        let next_start = g.states.len();
        for (c, t) in fresh {
            if limit.is_some_and(|l| g.states.len() >= l) {
                g.truncated = true;
                break;
            }
            g.index.insert(c.clone(), g.states.len());
            g.codes.push(c);
            g.states.push(t);
            g.adj.push(Vec::new());
        }
        for (u, c) in pending {
            if let Some(&v) = g.index.get(&c) {
                if v != u {
                    g.adj[u].push(v);
                }
            }
        }
        frontier = next_start..g.states.len();
    }
    for (u, list) in g.adj.iter_mut().enumerate() {
        list.sort_unstable();
        list.dedup();
        debug_assert!(!list.contains(&u));
    }
    g
}

/// The signotope flip graph `F_n` (or its truncation).
pub fn explore_signotopes(n: usize, limit: Option<usize>) -> Result<FlipGraph<Signotope>> {
    let seed = Signotope::all_plus(n)?;
    Ok(explore(Family::Signotope, n, seed, Signotope::encode, Signotope::neighbors, limit))
}

impl<S> FlipGraph<S> {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn states(&self) -> &[S] {
        &self.states
    }

    pub fn state(&self, v: usize) -> &S {
        &self.states[v]
    }

    pub fn code(&self, v: usize) -> &[u8] {
        &self.codes[v]
    }

    pub fn index_of(&self, code: &[u8]) -> Option<usize> {
        self.index.get(code).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(u, list)| list.iter().all(|&v| self.adj[v].binary_search(&u).is_ok()))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut histogram = std::collections::BTreeMap::new();
        for list in &self.adj {
            *histogram.entry(list.len()).or_insert(0usize) += 1;
        }
        DegreeStats {
            min: histogram.keys().next().copied().unwrap_or(0),
            max: histogram.keys().next_back().copied().unwrap_or(0),
            histogram,
        }
    }

    /// The subgraph induced by the vertices with `keep[v]`, renumbered in order.
    pub fn induced(&self, keep: &[bool]) -> FlipGraph<S>
    where
        S: Clone,
    {
        let mut map = vec![usize::MAX; self.len()];
        let mut g = FlipGraph {
            family: self.family,
            n: self.n,
            states: Vec::new(),
            codes: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
            truncated: self.truncated,
        };
        for v in (0..self.len()).filter(|&v| keep[v]) {
            map[v] = g.states.len();
            g.index.insert(self.codes[v].clone(), g.states.len());
            g.states.push(self.states[v].clone());
            g.codes.push(self.codes[v].clone());
        }
        for v in (0..self.len()).filter(|&v| keep[v]) {
            g.adj.push(self.adj[v].iter().filter(|&&w| keep[w]).map(|&w| map[w]).collect());
        }
        g
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[src] = Some(0);
        let mut q = VecDeque::from([src]);
        while let Some(u) = q.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.distances(0).iter().all(Option::is_some)
    }

    /// A minimum-length vertex path from `a` to `b`.
    pub fn shortest_path(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        if a >= self.len() || b >= self.len() {
            return Err(Error::NotInGraph);
        }
        let mut parent = vec![usize::MAX; self.len()];
        parent[a] = a;
        let mut q = VecDeque::from([a]);
        while let Some(u) = q.pop_front() {
            if u == b {
                break;
            }
            for &v in &self.adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    q.push_back(v);
                }
            }
        }
        if parent[b] == usize::MAX {
            return Err(Error::NotInGraph);
        }
        let mut path = vec![b];
        while *path.last().unwrap() != a {
            path.push(parent[*path.last().unwrap()]);
        }
        path.reverse();
        Ok(path)
    }

    /// Shortest path between two states given by their encodings.
    pub fn shortest_path_by_code(&self, a: &[u8], b: &[u8]) -> Result<Vec<usize>> {
        let ia = self.index_of(a).ok_or(Error::NotInGraph)?;
        let ib = self.index_of(b).ok_or(Error::NotInGraph)?;
        self.shortest_path(ia, ib)
    }

    /// Exact diameter by all-pairs BFS, refusing graphs above `cap` vertices.
    pub fn diameter(&self, cap: usize) -> Result<Diameter>
    where
        S: Sync,
    {
        if self.len() > cap {
            return Err(Error::CapExceeded { vertices: self.len(), cap });
        }
        let ecc: Vec<Option<(usize, usize)>> = (0..self.len())
            .into_par_iter()
            .map(|u| {
                let d = self.distances(u);
                let mut best = (0, u);
                for (v, dv) in d.iter().enumerate() {
                    let dv = (*dv)?;
                    if dv > best.0 {
                        best = (dv, v);
                    }
                }
                Some(best)
            })
            .collect();
        let mut out = Diameter { value: 0, witness: (0, 0) };
        for (u, e) in ecc.into_iter().enumerate() {
            let (d, v) = e.ok_or_else(|| Error::Malformed("graph is disconnected".into()))?;
            if d > out.value {
                out = Diameter { value: d, witness: (u, v) };
            }
        }
        Ok(out)
    }

    /// Vertex connectivity by unit-capacity max-flow.
    ///
    /// Exact mode checks a fixed minimum-degree vertex against all its
    /// non-neighbors and all non-adjacent pairs of its neighbors. Sampled mode
    /// takes the minimum over random non-adjacent pairs.
    pub fn vertex_connectivity(&self, mode: ConnectivityMode) -> Connectivity
    where
        S: Sync,
    {
        let n = self.len();
        let dist = if n == 0 { Vec::new() } else { self.distances(0) };
        if let Some(w) = dist.iter().position(Option::is_none) {
            return Connectivity { value: 0, exact: true, witness: Some((0, w)), pairs_checked: 0 };
        }
        let stats = self.degree_stats();
        let delta = stats.min;
        let v = (0..n).find(|&v| self.adj[v].len() == delta).unwrap_or(0);
        let adjacent = |x: usize, y: usize| self.adj[x].binary_search(&y).is_ok();
        let (pairs, exact) = match mode {
            ConnectivityMode::Exact => {
                let mut pairs: Vec<(usize, usize)> =
                    (0..n).filter(|&w| w != v && !adjacent(v, w)).map(|w| (v, w)).collect();
                let nb = &self.adj[v];
                for (a, &x) in nb.iter().enumerate() {
                    for &y in &nb[a + 1..] {
                        if !adjacent(x, y) {
                            pairs.push((x, y));
                        }
                    }
                }
                (pairs, true)
            }
            ConnectivityMode::Sampled { pairs: k, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut pairs = Vec::with_capacity(k);
                let has_gap = (0..n).any(|x| self.adj[x].len() + 1 < n);
                while has_gap && pairs.len() < k {
                    let x = rng.gen_range(0..n);
                    let y = rng.gen_range(0..n);
                    if x != y && !adjacent(x, y) {
                        pairs.push((x.min(y), x.max(y)));
                    }
                }
                (pairs, false)
            }
        };
        if pairs.is_empty() {
            return Connectivity { value: delta, exact, witness: None, pairs_checked: 0 };
        }
        let limit = match mode {
            ConnectivityMode::Exact => delta,
            ConnectivityMode::Sampled { .. } => stats.max,
        };
        let net = SplitNetwork::new(&self.adj);
        let values: Vec<usize> = pairs
            .par_iter()
            .map_init(FlowWork::default, |work, &(s, t)| net.local_connectivity(s, t, limit, work))
            .collect();
        let (best, &value) = values.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
        match mode {
            ConnectivityMode::Exact if value >= delta => {
                Connectivity { value: delta, exact, witness: None, pairs_checked: pairs.len() }
            }
            _ => Connectivity { value, exact, witness: Some(pairs[best]), pairs_checked: pairs.len() },
        }
    }

    /// Lazy random walk over vertex indices, reproducible from `seed`.
    pub fn random_walk(&self, start: usize, steps: usize, seed: u64) -> Vec<usize> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(steps + 1);
        let mut cur = start;
        out.push(cur);
        for _ in 0..steps {
            if rng.gen_bool(0.5) {
                if let Some(&next) = self.adj[cur].choose(&mut rng) {
                    cur = next;
                }
            }
            out.push(cur);
        }
        out
    }

    /// Hex encoding of a vertex code.
    pub fn hex_code(&self, v: usize) -> String {
        self.codes[v].iter().fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            family: self.family,
            truncated: self.truncated,
            vertices: (0..self.len()).map(|v| self.hex_code(v)).collect(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flips {\n");
        for v in 0..self.len() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Lazy random walk on an implicit graph: stay with probability 1/2,
/// otherwise move to a uniform neighbor.
pub fn random_walk<S: Clone, N: Fn(&S) -> Vec<S>>(start: &S, neighbors: N, steps: usize, seed: u64) -> Vec<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(steps + 1);
    out.push(start.clone());
    for _ in 0..steps {
        let cur = out.last().unwrap();
        let next = if rng.gen_bool(0.5) {
            neighbors(cur).choose(&mut rng).cloned().unwrap_or_else(|| cur.clone())
        } else {
            cur.clone()
        };
        out.push(next);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub histogram: std::collections::BTreeMap<usize, usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Diameter {
    pub value: usize,
    pub witness: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectivityMode {
    Exact,
    Sampled { pairs: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub value: usize,
    pub exact: bool,
    pub witness: Option<(usize, usize)>,
    pub pairs_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub family: Family,
    pub truncated: bool,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}
