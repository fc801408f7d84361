//! Independent oracles shared by the integration tests. None of them calls
//! into the library's own predicates.
#![allow(dead_code)]

use std::collections::VecDeque;

use num_rational::BigRational;
use num_traits::Signed;

/// Triples of `0..n` in lexicographic order.
pub fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

pub fn index_of(n: usize, t: [usize; 3]) -> usize {
    triples(n).iter().position(|&u| u == t).unwrap()
}

/// Whether a sign vector (lexicographic triple order) has at most one sign
/// change in every packet of four lines.
pub fn valid_signs(n: usize, signs: &[bool]) -> bool {
    let ts = triples(n);
    let at = |t: [usize; 3]| signs[ts.iter().position(|&u| u == t).unwrap()];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let seq = [at([a, b, c]), at([a, b, d]), at([a, c, d]), at([b, c, d])];
                    let changes = seq.windows(2).filter(|w| w[0] != w[1]).count();
                    if changes > 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Number of valid sign vectors by trying all of them.
pub fn brute_force_count(n: usize) -> usize {
    let m = triples(n).len();
    (0u64..1 << m)
        .filter(|bits| {
            let signs: Vec<bool> = (0..m).map(|r| bits >> r & 1 == 1).collect();
            valid_signs(n, &signs)
        })
        .count()
}

/// Number of valid sign vectors by backtracking over triples in
/// lexicographic order, rejecting a prefix once some packet is complete and
/// has two sign changes.
pub fn backtracking_count(n: usize) -> usize {
    let ts = triples(n);
    let rank = |t: [usize; 3]| ts.iter().position(|&u| u == t).unwrap();
    // packets whose last triple (in lex order) is the triple at each rank
    let mut closing: Vec<Vec<[usize; 4]>> = vec![Vec::new(); ts.len()];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let r = [rank([a, b, c]), rank([a, b, d]), rank([a, c, d]), rank([b, c, d])];
                    let last = *r.iter().max().unwrap();
                    closing[last].push(r);
                }
            }
        }
    }
    fn go(pos: usize, signs: &mut Vec<bool>, closing: &[Vec<[usize; 4]>]) -> usize {
        if pos == closing.len() {
            return 1;
        }
        let mut total = 0;
        for s in [false, true] {
            signs.push(s);
            let ok = closing[pos].iter().all(|r| {
                let seq = r.map(|i| signs[i]);
                seq.windows(2).filter(|w| w[0] != w[1]).count() <= 1
            });
            if ok {
                total += go(pos + 1, signs, closing);
            }
            signs.pop();
        }
        total
    }
    go(0, &mut Vec::new(), &closing)
}

/// Positions (lexicographic) of the triples whose sign can be flipped while
/// staying valid.
pub fn flippable_by_trial(n: usize, signs: &[bool]) -> Vec<usize> {
    (0..signs.len())
        .filter(|&r| {
            let mut s = signs.to_vec();
            s[r] = !s[r];
            valid_signs(n, &s)
        })
        .collect()
}

/// Combinatorial type of lines `y = λ_i x + b_i` from crossing coordinates:
/// the triple `i<j<k` is positive iff line `j` passes below the crossing of
/// lines `i` and `k`.
pub fn type_from_crossings(slopes: &[BigRational], intercepts: &[BigRational]) -> Vec<bool> {
    let n = slopes.len();
    triples(n)
        .into_iter()
        .map(|[i, j, k]| {
            let x = (&intercepts[k] - &intercepts[i]) / (&slopes[i] - &slopes[k]);
            let y_ik = &slopes[i] * &x + &intercepts[i];
            let y_j = &slopes[j] * &x + &intercepts[j];
            let d = y_ik - y_j;
            assert!(!num_traits::Zero::is_zero(&d), "concurrent lines");
            d.is_positive()
        })
        .collect()
}

/// Whether, in the drawing of a swap word, every crossing of two lines other
/// than `line` lies on the same side of it.
pub fn extreme_in_wiring(n: usize, word: &[usize], line: usize, alive: &[bool]) -> bool {
    let mut order: Vec<usize> = (0..n).collect();
    let mut side = None;
    for &p in word {
        let (a, b) = (order[p], order[p + 1]);
        if a != line && b != line && alive[a] && alive[b] {
            let row = order.iter().position(|&c| c == line).unwrap();
            let above_line = row > p;
            if *side.get_or_insert(above_line) != above_line {
                return false;
            }
        }
        order.swap(p, p + 1);
    }
    true
}

/// Shellability of a swap word: greedily peel any extreme line among those
/// still present. Peeling order never matters for extremeness of the rest.
pub fn shellable_wiring(n: usize, word: &[usize]) -> bool {
    let mut alive = vec![true; n];
    for _ in 0..n.saturating_sub(2) {
        match (0..n).find(|&l| alive[l] && extreme_in_wiring(n, word, l, &alive)) {
            Some(l) => alive[l] = false,
            None => return false,
        }
    }
    true
}

/// Whether removing any set of fewer than `k` vertices leaves the graph
/// connected, by trying every such set.
pub fn no_small_separator(adj: &[Vec<usize>], k: usize) -> bool {
    let n = adj.len();
    fn connected_without(adj: &[Vec<usize>], removed: &[bool]) -> bool {
        let Some(s) = (0..adj.len()).find(|&v| !removed[v]) else { return true };
        let mut seen = removed.to_vec();
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    q.push_back(v);
                }
            }
        }
        seen.iter().all(|&x| x)
    }
    fn rec(adj: &[Vec<usize>], removed: &mut Vec<bool>, start: usize, left: usize) -> bool {
        if !connected_without(adj, removed) {
            return false;
        }
        if left == 0 {
            return true;
        }
        for v in start..adj.len() {
            removed[v] = true;
            let ok = rec(adj, removed, v + 1, left - 1);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    rec(adj, &mut vec![false; n], 0, k.saturating_sub(1))
}

/// Rows of every curve after each step of a swap word, curve `c` starting
/// on row `c`.
pub fn simulate(n: usize, word: &[usize]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..n).collect();
    let mut out = vec![order.clone()];
    for &p in word {
        order.swap(p, p + 1);
        out.push(order.clone());
    }
    out
}

/// For each curve of a cylinder word, the sequence of curves it meets.
pub fn meeting_sequences(n: usize, word: &[usize]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..n).collect();
    let mut out = vec![Vec::new(); n];
    for &p in word {
        let (a, b) = (order[p], order[p + 1]);
        out[a].push(b);
        out[b].push(a);
        order.swap(p, p + 1);
    }
    out
}

/// Whether every curve meets the others in increasing order and then in
/// decreasing order.
pub fn is_canonical_minus(n: usize, word: &[usize]) -> bool {
    meeting_sequences(n, word).iter().enumerate().all(|(c, seq)| {
        let inc: Vec<usize> = (0..n).filter(|&d| d != c).collect();
        let want: Vec<usize> = inc.iter().copied().chain(inc.iter().rev().copied()).collect();
        *seq == want
    })
}

/// Proptest settings without regression files, which need a crate root next
/// to the test source.
pub fn proptest_config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config { cases, failure_persistence: None, ..Default::default() }
}
