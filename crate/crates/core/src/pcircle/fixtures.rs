//! Small reference arrangements.

use super::{Crossing, HalfEdgeKey, Lens, LensRegion, PlanarArrangement};
use crate::cylinder::{canonical_diagram, CanonicalSign, CylindricalDiagram};

fn x(a: usize, b: usize) -> Crossing {
    Crossing::new(a, b)
}

/// Two overlapping circles.
pub fn two_circles() -> PlanarArrangement {
    PlanarArrangement::from_words(
        2,
        vec![vec![x(0, 1), x(1, 0)], vec![x(1, 0), x(0, 1)]],
        HalfEdgeKey { circle: 0, at: x(0, 1), forward: false },
    )
    .expect("valid fixture")
}

/// Three circles in Venn position: circle 1 upper left, 2 upper right,
/// 3 below, read off a drawing with radius 1.5 and centers (-1, 0.6),
/// (1, 0.6), (0, -1).
pub fn krupp() -> PlanarArrangement {
    PlanarArrangement::from_words(
        3,
        vec![
            vec![x(1, 0), x(0, 2), x(0, 1), x(2, 0)],
            vec![x(1, 0), x(1, 2), x(0, 1), x(2, 1)],
            vec![x(2, 1), x(2, 0), x(1, 2), x(0, 2)],
        ],
        HalfEdgeKey { circle: 0, at: x(0, 2), forward: false },
    )
    .expect("valid fixture")
}

/// The NonKrupp arrangement whose unbounded face has `k` edges, `k` in 2..=4.
pub fn nonkrupp(k: usize) -> PlanarArrangement {
    match k {
        2 => canonical_diagram(3, CanonicalSign::Minus).to_planar().expect("valid fixture"),
        3 => {
            let a = krupp();
            let center = a.center_faces()[0];
            a.flip_triangle_cell(center).expect("center of the Venn fixture is a triangle")
        }
        4 => canonical_diagram(3, CanonicalSign::Plus).to_planar().expect("valid fixture"),
        _ => panic!("NonKrupp({k}) does not exist"),
    }
}

/// A cylindrical arrangement of `k + 2` curves with lens `L` = curve 1,
/// `R` = curve `k + 2`, crossed by `k` transversal arcs that pairwise cross
/// inside the lens.
pub fn lens_fixture(k: usize) -> (PlanarArrangement, Lens) {
    let n = k + 2;
    let mut word = Vec::new();
    let reverse_middle = |word: &mut Vec<usize>| {
        for i in 0..k {
            word.extend(1..k - i);
        }
    };
    word.extend((0..=k).rev());
    word.extend(1..=k);
    reverse_middle(&mut word);
    word.extend(0..k);
    word.push(k);
    word.extend((0..k).rev());
    reverse_middle(&mut word);
    let d = CylindricalDiagram::new(n, word).expect("valid lens word");
    let a = d.to_planar().expect("valid fixture");
    (a, Lens { sweep: 0, target: k + 1, region: LensRegion::InsideSweepOnly })
}
