//! The Mycielskian TSZ formula: printed coefficients against direct
//! computation, and the corrected line.
//!
//! Run: `cargo run --example tsz_erratum`

use hosoya::constructions::{generate, mycielskian};
use hosoya::hosoya::{hosoya, SourceStats};
use hosoya::indices::{tsz, ERRATA};
use hosoya::Result;

fn main() -> Result<()> {
    let erratum = &ERRATA[0];
    println!("printed:   TSZ(mu(G)) = {}", erratum.printed);
    println!("corrected: TSZ(mu(G)) = {}\n", erratum.corrected);
    println!(
        "{:<12}{:>20}{:>10}{:>10}{:>10}",
        "G", "(n, m, a2, a3)", "printed", "corrected", "direct"
    );
    for spec in [
        "path:1",
        "path:2",
        "path:5",
        "cycle:5",
        "star:4",
        "complete:4",
        "kbip:3,4",
    ] {
        let g = generate(&spec.parse()?)?;
        let s = SourceStats::of(&g);
        let direct = tsz(&hosoya(&mycielskian(&g)))?;
        println!(
            "{spec:<12}{:>20}{:>10}{:>10}{:>10}",
            format!("({}, {}, {}, {})", s.n, s.m, s.a2, s.a3),
            (erratum.evaluate_printed)(s),
            (erratum.evaluate_corrected)(s),
            direct.to_string()
        );
    }
    Ok(())
}
