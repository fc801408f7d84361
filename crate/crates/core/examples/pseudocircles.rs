//! Arrangements of pseudocircles: triple classes, cylindricity and triangle flips.

use fliplab::pcircle::fixtures;

fn main() -> fliplab::Result<()> {
    let arrangements = [
        ("krupp", fixtures::krupp()),
        ("nonkrupp2", fixtures::nonkrupp(2)),
        ("nonkrupp3", fixtures::nonkrupp(3)),
        ("nonkrupp4", fixtures::nonkrupp(4)),
    ];
    for (name, a) in &arrangements {
        let c = a.cylindricity();
        println!(
            "{name}: {} faces, {} triangles, class {}, center {}, cylindrical {}",
            a.face_count(),
            a.triangle_count(),
            a.triple_classes()[0].1,
            c.has_center,
            a.is_cylindrical()
        );
    }

    let k = fixtures::krupp();
    let cell = k.triangle_cells()[0];
    let flipped = k.flip_triangle_cell(cell.face)?;
    println!("flipping a triangle of krupp gives class {}", flipped.triple_classes()[0].1);
    println!("{}", k.to_json());
    Ok(())
}
