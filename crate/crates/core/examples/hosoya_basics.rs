//! Hosoya polynomials of a few small graphs, built by hand and from specs.
//!
//! Run: `cargo run --example hosoya_basics`

use hosoya::constructions::generate;
use hosoya::graph::edgelist;
use hosoya::hosoya::hosoya;
use hosoya::{Graph, Result};

fn main() -> Result<()> {
    // A triangle with a pendant vertex.
    let paw = Graph::from_edge_list(4, [(1, 2), (2, 3), (1, 3), (3, 4)])?;
    println!("paw:          H = {}", hosoya(&paw));
    println!("              diameter {}", paw.diameter());

    for spec in [
        "path:2",
        "cycle:5",
        "star:4",
        "complete:5",
        "kbip:2,3",
        "join:path:2+cycle:4",
    ] {
        let g = generate(&spec.parse()?)?;
        let dist = g.distance_distribution();
        println!(
            "{spec:<22}H = {}  (pairs by distance {:?})",
            hosoya(&g),
            dist.counts()
        );
    }

    // Disconnected graphs simply omit unreachable pairs.
    let two_edges = edgelist::parse("4\n1 2\n3 4\n")?;
    let dist = two_edges.distance_distribution();
    println!(
        "two edges:    H = {}, {} unreachable pairs, diameter {}",
        hosoya(&two_edges),
        dist.unreachable_pairs(),
        two_edges.diameter()
    );
    Ok(())
}
