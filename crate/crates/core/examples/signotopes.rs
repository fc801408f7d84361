//! Sign vectors, triangle flips and wiring diagrams.

use fliplab::signotope::{signotope_to_wiring, wiring_to_signotope};
use fliplab::{Signotope, Triple};

fn main() -> fliplab::Result<()> {
    let s = Signotope::all_plus(5)?;
    println!("{} has {} triples", s, s.signs().len());
    let flippable = s.flippable_triples();
    println!("flippable: {}", flippable.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "));

    let t = Triple::from_labels([2, 3, 4]).unwrap();
    let f = s.flip(t)?;
    println!("after flipping {t}: {f}");

    let w = signotope_to_wiring(&f);
    println!("wiring word (1-based): {:?}", w.one_based_word());
    assert_eq!(wiring_to_signotope(&w)?, f);

    match s.flip(Triple::from_labels([1, 2, 4]).unwrap()) {
        Err(e) => println!("refused: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
