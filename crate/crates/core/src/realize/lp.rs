//! Dense-tableau simplex over exact rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub enum LpOutcome {
    Optimal { x: Vec<BigRational>, value: BigRational },
    Unbounded,
}

/// Maximizes `c·x` subject to `a x ≤ b`, `x ≥ 0`, where `b ≥ 0` so the origin
/// is a feasible starting basis. Bland's rule rules out cycling.
pub fn maximize(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let nv = c.len();
    let width = nv + m + 1;
    assert!(b.iter().all(|v| !v.is_negative()), "right-hand sides must be non-negative");
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for (i, row) in a.iter().enumerate() {
        let mut r = vec![BigRational::zero(); width];
        r[..nv].clone_from_slice(row);
        r[nv + i] = BigRational::one();
        r[width - 1] = b[i].clone();
        t.push(r);
    }
    let mut obj = vec![BigRational::zero(); width];
    for (j, cj) in c.iter().enumerate() {
        obj[j] = -cj.clone();
    }
    t.push(obj);
    let mut basis: Vec<usize> = (nv..nv + m).collect();
    while let Some(enter) = (0..width - 1).find(|&j| t[m][j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            return LpOutcome::Unbounded;
        };
        pivot(&mut t, row, enter);
        basis[row] = enter;
    }
    let mut x = vec![BigRational::zero(); nv];
    for (i, &v) in basis.iter().enumerate() {
        if v < nv {
            x[v] = t[i][width - 1].clone();
        }
    }
    LpOutcome::Optimal { x, value: t[m][width - 1].clone() }
}

fn pivot(t: &mut [Vec<BigRational>], row: usize, col: usize) {
    let p = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v = &*v / &p;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (v, pv) in r.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}
