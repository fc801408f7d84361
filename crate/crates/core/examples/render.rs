//! Writes SVG drawings of a wiring diagram, a cylindrical diagram and a planar arrangement.

use fliplab::cylinder::{canonical_diagram, CanonicalSign};
use fliplab::pcircle::fixtures;
use fliplab::signotope::signotope_to_wiring;
use fliplab::{svg, Signotope};

fn main() -> fliplab::Result<()> {
    let dir = std::env::temp_dir().join("fliplab-render");
    std::fs::create_dir_all(&dir)?;
    let w = signotope_to_wiring(&Signotope::all_minus(5)?);
    let files = [
        ("wiring.svg", svg::wiring_svg(5, w.word())),
        ("cylinder.svg", svg::cylindrical_svg(&canonical_diagram(4, CanonicalSign::Minus))),
        ("krupp.svg", svg::arrangement_svg(&fixtures::krupp())),
    ];
    for (name, body) in files {
        let p = dir.join(name);
        std::fs::write(&p, body)?;
        println!("wrote {}", p.display());
    }
    Ok(())
}
