//! Runs the full verification harness and prints the report.
//!
//! Run: `cargo run --release --example verify_corpus [SEED] [COUNT]`

use hosoya::verify::{self, VerifyConfig};

fn main() -> hosoya::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut config = VerifyConfig::default();
    if let Some(seed) = args.next() {
        config.seed = seed.parse().expect("SEED is an integer");
    }
    if let Some(count) = args.next() {
        config.count = count.parse().expect("COUNT is an integer");
    }
    let report = verify::run(&config)?;
    print!("{}", report.to_text());
    if !report.passed() {
        std::process::exit(2);
    }
    Ok(())
}
