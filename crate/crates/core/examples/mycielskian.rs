//! The Mycielskian construction and its diameter law.
//!
//! Run: `cargo run --example mycielskian`

use hosoya::constructions::{
    generate, mycielskian, predicted_mycielskian_diameter, MycielskianLayout,
};
use hosoya::graph::edgelist;
use hosoya::hosoya::hosoya;
use hosoya::Result;

fn main() -> Result<()> {
    let p2 = generate(&"path:2".parse()?)?;
    let mu = mycielskian(&p2);
    let layout = MycielskianLayout::new(p2.vertex_count());
    println!("mu(P_2) as an edge list:\n{}", edgelist::write(&mu));
    println!(
        "v_2 = {}, u_2 = {}, w = {}; H(mu(P_2)) = {}",
        layout.v(2),
        layout.u(2),
        layout.w(),
        hosoya(&mu)
    );

    println!(
        "\n{:<12}{:>6}{:>10}{:>12}",
        "graph", "D(G)", "D(mu(G))", "predicted"
    );
    for spec in [
        "complete:4",
        "cycle:4",
        "path:3",
        "path:6",
        "cycle:11",
        "path:30",
    ] {
        let g = generate(&spec.parse()?)?;
        println!(
            "{spec:<12}{:>6}{:>10}{:>12}",
            g.diameter(),
            mycielskian(&g).diameter(),
            predicted_mycielskian_diameter(&g)?
        );
    }

    // Iterating from K_2 gives the triangle-free Grötzsch graph on 11 vertices.
    let grotzsch = mycielskian(&mycielskian(&generate(&"complete:2".parse()?)?));
    println!(
        "\nmu(mu(K_2)): {} vertices, {} edges, H = {}",
        grotzsch.vertex_count(),
        grotzsch.edge_count(),
        hosoya(&grotzsch)
    );
    Ok(())
}
