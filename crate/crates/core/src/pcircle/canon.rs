//! Canonical codes: the lexicographically least encoding over all circle
//! relabelings, with each word rotated to start at its least crossing and
//! the unbounded face given by its least boundary half-edge.

use super::{Crossing, PlanarArrangement};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
}

fn encode(a: &PlanarArrangement, perm: &[usize], outer: &[(usize, Crossing)]) -> Vec<u8> {
    let n = a.n();
    let mut inv = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    let mut code = Vec::with_capacity(1 + 2 * n * (n - 1) * 2 + 3);
    code.push(n as u8);
    for new in 0..n {
        let old = inv[new];
        let w: Vec<Crossing> = a.words()[old].iter().map(|x| x.relabel(perm)).collect();
        let start = (0..w.len()).min_by_key(|&i| w[i]).unwrap();
        for d in 0..w.len() {
            let x = w[(start + d) % w.len()];
            code.push(x.other(new) as u8);
            code.push(u8::from(x.enters == new));
        }
    }
    let (c, x) = outer
        .iter()
        .map(|&(c, x)| (perm[c], x.relabel(perm)))
        .min()
        .unwrap();
    code.extend_from_slice(&[c as u8, x.enters as u8, x.entered as u8]);
    code
}

pub fn canonical_code(a: &PlanarArrangement) -> Vec<u8> {
    let f = a.unbounded_face();
    let outer: Vec<(usize, Crossing)> = a
        .face_half_edges(f)
        .iter()
        .map(|&h| (a.half_edge(h).circle, a.origin(h)))
        .collect();
    permutations(a.n()).iter().map(|p| encode(a, p, &outer)).min().unwrap()
}
