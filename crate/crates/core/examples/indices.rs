//! Distance-based indices read off the Hosoya polynomial, checked against
//! their per-pair definitions.
//!
//! Run: `cargo run --example indices [SPEC]`

use hosoya::constructions::generate;
use hosoya::hosoya::hosoya;
use hosoya::indices::{self, pairwise, IndexReport};
use hosoya::Result;

fn main() -> Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "cycle:6".into());
    let g = generate(&spec.parse()?)?;
    let h = hosoya(&g);
    let dist = g.distance_matrix();
    println!("{spec}: H = {h}\n");

    let rows = [
        (
            "Wiener",
            indices::wiener(&h)?.to_string(),
            pairwise::wiener(&dist)?.to_string(),
        ),
        (
            "hyper-Wiener",
            indices::hyper_wiener(&h)?.to_string(),
            pairwise::hyper_wiener(&dist)?.to_string(),
        ),
        (
            "TSZ",
            indices::tsz(&h)?.to_string(),
            pairwise::tsz(&dist)?.to_string(),
        ),
        (
            "Harary",
            indices::harary(&h)?.to_string(),
            pairwise::harary(&dist)?.to_string(),
        ),
        (
            "closeness",
            indices::closeness(&h)?.to_string(),
            pairwise::closeness(&dist)?.to_string(),
        ),
    ];
    println!("{:<14}{:>14}{:>14}", "index", "from H", "per pair");
    for (name, poly, direct) in rows {
        println!("{name:<14}{poly:>14}{direct:>14}");
    }

    for order in 1..=h.degree() + 1 {
        println!("order-{order} Wiener: {}", indices::nth_wiener(&h, order)?);
    }

    let report = IndexReport::for_graph(&g, false)?;
    println!(
        "\n{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    Ok(())
}
