//! SVG drawings of wiring diagrams, cylindrical diagrams and arrangements.

use std::fmt::Write;

use crate::cylinder::{planar_to_diagram, CylindricalDiagram};
use crate::pcircle::PlanarArrangement;

const PALETTE: [&str; 10] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"];

fn color(c: usize) -> &'static str {
    PALETTE[c % PALETTE.len()]
}

/// Row of each curve after every step of a swap word (`rows[t][c]`).
fn rows(n: usize, word: &[usize]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(word.len() + 1);
    let snapshot = |order: &[usize]| {
        let mut r = vec![0; n];
        for (row, &c) in order.iter().enumerate() {
            r[c] = row;
        }
        r
    };
    out.push(snapshot(&order));
    for &p in word {
        order.swap(p, p + 1);
        out.push(snapshot(&order));
    }
    out
}

/// Draws a wiring diagram: wire `c` starts on row `c`, one swap per column.
pub fn wiring_svg(n: usize, word: &[usize]) -> String {
    let (dx, dy, pad) = (30.0, 30.0, 30.0);
    let width = pad * 2.0 + dx * (word.len() + 1) as f64;
    let height = pad * 2.0 + dy * (n.max(1) - 1) as f64;
    let r = rows(n, word);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">"#);
    for c in 0..n {
        let mut pts = format!("{},{}", pad, pad + dy * r[0][c] as f64);
        for (t, rt) in r.iter().enumerate() {
            let x = pad + dx * (t as f64 + 0.5);
            let _ = write!(pts, " {},{}", x, pad + dy * rt[c] as f64);
        }
        let _ = write!(pts, " {},{}", width - pad, pad + dy * r[word.len()][c] as f64);
        let _ = writeln!(
            s,
            r#"<polyline points="{pts}" fill="none" stroke="{}" stroke-width="2"/><text x="4" y="{}" font-size="12">{}</text>"#,
            color(c),
            pad + dy * c as f64 + 4.0,
            c + 1
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Draws a cylindrical diagram on an annulus: rows become radii (top row
/// innermost) and swaps advance counterclockwise.
pub fn cylindrical_svg(d: &CylindricalDiagram) -> String {
    let n = d.n();
    let word = d.word();
    let r = rows(n, word);
    let size = 120.0 + 60.0 * n as f64;
    let center = size / 2.0;
    let radius = |row: f64| 40.0 + 25.0 * row;
    let steps = word.len().max(1) as f64;
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">"#);
    for c in 0..n {
        let mut pts = String::new();
        for t in 0..=word.len() * 8 {
            let u = t as f64 / 8.0;
            let (i, frac) = (u.floor() as usize, u.fract());
            let from = r[i.min(word.len())][c] as f64;
            let to = r[(i + 1).min(word.len())][c] as f64;
            let rho = radius(from + (to - from) * frac);
            let angle = std::f64::consts::TAU * u / steps;
            let _ = write!(pts, "{:.2},{:.2} ", center + rho * angle.cos(), center - rho * angle.sin());
        }
        let _ = writeln!(s, r#"<polygon points="{}" fill="none" stroke="{}" stroke-width="2"/>"#, pts.trim_end(), color(c));
    }
    s.push_str("</svg>\n");
    s
}

/// Draws an arrangement. Cylindrical ones go through their diagram; others
/// use a barycentric layout with the unbounded face on a circle.
pub fn arrangement_svg(a: &PlanarArrangement) -> String {
    if let Some(&center) = a.center_faces().first() {
        if let Ok(d) = planar_to_diagram(a, center) {
            return cylindrical_svg(&d);
        }
    }
    let n = a.n();
    let words = a.words();
    let ids: Vec<_> = a.complex().vertex_types.clone();
    let index = |x: crate::pcircle::Crossing| ids.iter().position(|&(p, q)| (p, q) == (x.enters, x.entered)).unwrap();
    let v = ids.len();
    let mut adj = vec![Vec::new(); v];
    for w in words {
        for t in 0..w.len() {
            let (p, q) = (index(w[t]), index(w[(t + 1) % w.len()]));
            adj[p].push(q);
            adj[q].push(p);
        }
    }
    let outer = a.face_vertices(a.unbounded_face());
    let mut fixed = vec![false; v];
    let mut pos = vec![(0.0f64, 0.0f64); v];
    let size = 200.0 + 80.0 * n as f64;
    let (cx, rr) = (size / 2.0, size / 2.0 - 30.0);
    for (i, &x) in outer.iter().enumerate() {
        let k = index(x);
        let angle = std::f64::consts::TAU * i as f64 / outer.len() as f64;
        pos[k] = (cx + rr * angle.cos(), cx - rr * angle.sin());
        fixed[k] = true;
    }
    for k in 0..v {
        if !fixed[k] {
            pos[k] = (cx + (k as f64).sin() * 5.0, cx + (k as f64).cos() * 5.0);
        }
    }
    for _ in 0..2000 {
        for k in 0..v {
            if fixed[k] {
                continue;
            }
            let m = adj[k].len() as f64;
            let (sx, sy) = adj[k].iter().fold((0.0, 0.0), |(x, y), &q| (x + pos[q].0, y + pos[q].1));
            pos[k] = (sx / m, sy / m);
        }
    }
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">"#);
    for (c, w) in words.iter().enumerate() {
        let mut path = String::new();
        for t in 0..w.len() {
            let (p, q) = (pos[index(w[t])], pos[index(w[(t + 1) % w.len()])]);
            // bow edges slightly to the left of travel so parallel edges separate
            let (mx, my) = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
            let (ex, ey) = (q.0 - p.0, q.1 - p.1);
            let (bx, by) = (mx - ey * 0.2, my + ex * 0.2);
            if t == 0 {
                let _ = write!(path, "M{:.2},{:.2} ", p.0, p.1);
            }
            let _ = write!(path, "Q{bx:.2},{by:.2} {:.2},{:.2} ", q.0, q.1);
        }
        let _ = writeln!(s, r#"<path d="{}Z" fill="none" stroke="{}" stroke-width="2"/>"#, path, color(c));
    }
    for &(x, y) in &pos {
        let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
    }
    s.push_str("</svg>\n");
    s
}
