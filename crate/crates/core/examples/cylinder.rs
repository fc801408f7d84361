//! Cylindrical diagrams: flipping to the canonical diagram and making arrangements cylindrical.

use fliplab::cylinder::{canonical_diagram, cylindrify, flip_to_canonical, random_diagram, CanonicalSign};
use fliplab::pcircle::{fixtures, random_flips};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fliplab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let d = random_diagram(5, 60, &mut rng);
    println!("diagram word {:?}", d.one_based_word());
    let (flips, end) = flip_to_canonical(&d, CanonicalSign::Minus)?;
    println!("{} flips reach the canonical diagram {:?}", flips.len(), end.one_based_word());
    assert_eq!(end, canonical_diagram(5, CanonicalSign::Minus));

    let start = canonical_diagram(5, CanonicalSign::Minus).to_planar()?;
    let a = random_flips(&start, 200, &mut rng);
    println!("random arrangement cylindrical: {}", a.is_cylindrical());
    let run = cylindrify(&a)?;
    println!("cylindrify: {} flips, {} lens sweeps, cylindrical {}", run.flips.len(), run.lens_sweeps, run.result.is_cylindrical());

    for k in 0..=4 {
        let (l, lens) = fixtures::lens_fixture(k);
        let info = l.analyze_lens(lens)?;
        let (sweep, _) = l.lens_sweep(lens)?;
        println!("lens with {k} transversals: {} interior crossings, {} flips", info.interior_vertices.len(), sweep.len());
    }
    Ok(())
}
