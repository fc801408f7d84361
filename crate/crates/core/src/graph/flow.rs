//! Unit-capacity max-flow on the vertex-split network of an undirected graph.

use std::collections::VecDeque;

/// Each vertex `v` becomes `in = 2v` and `out = 2v + 1` joined by a unit
/// arc; each undirected edge `{u, v}` becomes arcs `out(u) -> in(v)` and
/// `out(v) -> in(u)`. Arc `2e + 1` is the residual partner of arc `2e`.
pub struct SplitNetwork {
    start: Vec<usize>,
    arcs: Vec<usize>,
    head: Vec<usize>,
    base_cap: Vec<u8>,
}

impl SplitNetwork {
    pub fn new(adj: &[Vec<usize>]) -> SplitNetwork {
        let nodes = 2 * adj.len();
        let mut list: Vec<(usize, usize)> = Vec::new();
        for v in 0..adj.len() {
            list.push((2 * v, 2 * v + 1));
        }
        for (u, nb) in adj.iter().enumerate() {
            for &v in nb {
                list.push((2 * u + 1, 2 * v));
            }
        }
        let mut head = Vec::with_capacity(2 * list.len());
        let mut base_cap = Vec::with_capacity(2 * list.len());
        let mut out_deg = vec![0usize; nodes + 1];
        for &(a, b) in &list {
            head.push(b);
            base_cap.push(1);
            head.push(a);
            base_cap.push(0);
            out_deg[a] += 1;
            out_deg[b] += 1;
        }
        let mut start = vec![0usize; nodes + 1];
        for x in 0..nodes {
            start[x + 1] = start[x] + out_deg[x];
        }
        let mut fill = start.clone();
        let mut arcs = vec![0usize; head.len()];
        for (e, &(a, b)) in list.iter().enumerate() {
            arcs[fill[a]] = 2 * e;
            fill[a] += 1;
            arcs[fill[b]] = 2 * e + 1;
            fill[b] += 1;
        }
        SplitNetwork { start, arcs, head, base_cap }
    }

    fn tail(&self, arc: usize) -> usize {
        self.head[arc ^ 1]
    }

    /// Number of internally vertex-disjoint `s`–`t` paths, stopping at `limit`.
    pub fn local_connectivity(&self, s: usize, t: usize, limit: usize, work: &mut FlowWork) -> usize {
        work.reset(self);
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        while flow < limit {
            if !self.augment(source, sink, work) {
                break;
            }
            flow += 1;
        }
        flow
    }

    fn augment(&self, source: usize, sink: usize, work: &mut FlowWork) -> bool {
        work.parent.iter_mut().for_each(|p| *p = usize::MAX);
        work.queue.clear();
        work.queue.push_back(source);
        work.parent[source] = usize::MAX - 1;
        while let Some(x) = work.queue.pop_front() {
            for &arc in &self.arcs[self.start[x]..self.start[x + 1]] {
                let y = self.head[arc];
                if work.cap[arc] > 0 && work.parent[y] == usize::MAX {
                    work.parent[y] = arc;
                    if y == sink {
                        let mut z = sink;
                        while z != source {
                            let a = work.parent[z];
                            work.cap[a] -= 1;
                            work.cap[a ^ 1] += 1;
                            z = self.tail(a);
                        }
                        return true;
                    }
                    work.queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Reusable per-thread buffers for [`SplitNetwork::local_connectivity`].
#[derive(Default)]
pub struct FlowWork {
    cap: Vec<u8>,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
}

impl FlowWork {
    fn reset(&mut self, net: &SplitNetwork) {
        self.cap.clear();
        self.cap.extend_from_slice(&net.base_cap);
        self.parent.resize(net.start.len() - 1, usize::MAX);
    }
}
