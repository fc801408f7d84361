//! Flip graph of simple pseudoline arrangements and its basic statistics.

use fliplab::graph::{explore_signotopes, ConnectivityMode};

fn main() -> fliplab::Result<()> {
    for n in 3..=6 {
        let g = explore_signotopes(n, None)?;
        let d = g.degree_stats();
        let mode = if n <= 5 { ConnectivityMode::Exact } else { ConnectivityMode::Sampled { pairs: 100, seed: 1 } };
        let c = g.vertex_connectivity(mode);
        let diam = g.diameter(usize::MAX)?;
        println!(
            "n={n}: {} vertices, {} edges, degree {}..{}, diameter {}, connectivity {}{}",
            g.len(),
            g.edge_count(),
            d.min,
            d.max,
            diam.value,
            c.value,
            if c.exact { "" } else { " (sampled)" }
        );
    }

    let g = explore_signotopes(5, None)?;
    let path = g.shortest_path(0, g.len() - 1)?;
    println!("path between first and last state:");
    for v in path {
        println!("  {}", g.state(v));
    }
    Ok(())
}
