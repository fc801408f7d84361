//! Shelling sequences and flip paths to shellable arrangements.

use fliplab::shelling::{build_good_set, path_to_shellable, replay, shelling_sequence};
use fliplab::signotope::random_signotope;
use fliplab::Signotope;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> fliplab::Result<()> {
    let star: Signotope = serde_json::from_str(include_str!("../fixtures/star5.json")).unwrap();
    println!("{star} shellable: {}", shelling_sequence(&star).is_some());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s = random_signotope(&Signotope::all_plus(7)?, 400, &mut rng);
    println!("start {s}");
    if let Some(seq) = shelling_sequence(&s) {
        println!("shelling order {:?} sides {:?}", seq.order, seq.sides);
    }

    let target = Signotope::all_minus(7)?;
    let seq = shelling_sequence(&target).expect("constant signotopes are shellable");
    let flips = path_to_shellable(&s, &target, &seq)?;
    println!("{} flips to {target} (Hamming distance {})", flips.len(), s.hamming_distance(&target));
    assert_eq!(replay(&s, &flips)?, target);

    let good = build_good_set(&s);
    println!("good triangle set over lines {:?}:", good.lines.iter().map(|l| l + 1).collect::<Vec<_>>());
    for t in &good.triangles {
        println!("  {t}");
    }
    Ok(())
}
