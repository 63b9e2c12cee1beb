//! Closeness, vertex residual closeness and betweenness for stars and paths
//! and their Mycielskians.
//!
//! Run: `cargo run --example vulnerability`

use hosoya::constructions::{generate, mycielskian};
use hosoya::hosoya::hosoya;
use hosoya::indices::{
    betweenness_centrality, betweenness_vertex, closeness, closeness_vertex,
    vertex_residual_closeness,
};
use hosoya::{Graph, Result};

fn gen(spec: &str) -> Result<Graph> {
    generate(&spec.parse()?)
}

fn main() -> Result<()> {
    println!(
        "{:<10}{:>14}{:>14}{:>14}",
        "graph", "closeness", "VRC", "betweenness"
    );
    for spec in ["path:4", "star:4", "cycle:5", "complete:5"] {
        for (label, g) in [
            (spec.to_string(), gen(spec)?),
            (format!("mu({spec})"), mycielskian(&gen(spec)?)),
        ] {
            println!(
                "{label:<18}{:>14}{:>14}{:>14}",
                closeness(&hosoya(&g))?.to_string(),
                vertex_residual_closeness(&g)?.to_string(),
                betweenness_centrality(&g)?.to_string()
            );
        }
    }

    // Per-vertex view of mu(S_3): the apex and the star center dominate.
    let mu = mycielskian(&gen("star:3")?);
    println!("\nmu(S_3) per vertex:");
    for v in mu.vertices() {
        println!(
            "  vertex {v}: closeness {:>6}, betweenness {:>6}",
            closeness_vertex(&mu, v)?.to_string(),
            betweenness_vertex(&mu, v)?.to_string()
        );
    }

    // The star always beats the path on closeness after the construction.
    println!("\nC(mu(S_n)) - C(mu(P_n)):");
    for n in 2..=8 {
        let s = closeness(&hosoya(&mycielskian(&gen(&format!("star:{n}"))?)))?;
        let p = closeness(&hosoya(&mycielskian(&gen(&format!("path:{n}"))?)))?;
        println!("  n = {n}: {}", s.checked_sub(p)?);
    }
    Ok(())
}
