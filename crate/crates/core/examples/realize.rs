//! Line arrangements with prescribed slopes, exact feasibility and intercept motion.

use fliplab::realize::{combinatorial_type, interpolate_motion, realize_shellable, slope_feasibility, SlopeVector};
use fliplab::{Signotope, Triple};

fn main() -> fliplab::Result<()> {
    let slopes = SlopeVector::parse(&["-2", "1/3", "1", "5"])?;
    let a = realize_shellable(&Signotope::all_plus(4)?, None, &slopes)?;
    let b_type = Signotope::all_plus(4)?.flip(Triple::from_labels([1, 2, 3]).unwrap())?;
    let b = realize_shellable(&b_type, None, &slopes)?;
    for (name, arr) in [("from", &a), ("to", &b)] {
        let ints: Vec<String> = arr.intercepts().iter().map(|x| x.to_string()).collect();
        println!("{name}: intercepts [{}] type {}", ints.join(", "), combinatorial_type(arr)?);
    }

    let m = interpolate_motion(&a, &b)?;
    for e in &m.events {
        println!("triple {} changes at t = {}", e.triple, e.time);
    }
    println!("stays between the endpoint types: {}", m.verdict);

    let s: Signotope = serde_json::from_str(include_str!("../fixtures/star5.json")).unwrap();
    println!("{s} shellable: {}", realize_shellable(&s, None, &SlopeVector::standard(5)).is_ok());
    match slope_feasibility(&s, &SlopeVector::standard(5))? {
        Some(w) => println!("{s} is realizable with slopes 1..5: {}", serde_json::to_string(&w).unwrap()),
        None => println!("{s} is not realizable with slopes 1..5"),
    }
    Ok(())
}
