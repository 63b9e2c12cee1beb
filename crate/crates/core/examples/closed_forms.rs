//! Closed-form Hosoya polynomials of Mycielskians, compared with BFS.
//!
//! Run: `cargo run --example closed_forms`

use hosoya::constructions::{generate, join, mycielskian};
use hosoya::hosoya::{
    diameter2_mycielskian_hosoya_for_graph, hosoya, join_hosoya_for_graphs,
    kbip_mycielskian_hosoya, mycielskian_hosoya_for_graph, path_hosoya, path_mycielskian_hosoya,
    star_mycielskian_hosoya, SourceStats,
};
use hosoya::{Graph, IntPolynomial, Result};

fn gen(spec: &str) -> Result<Graph> {
    generate(&spec.parse()?)
}

fn show(label: &str, closed: &IntPolynomial, graph: &Graph) {
    let oracle = hosoya(graph);
    let mark = if *closed == oracle { "ok" } else { "MISMATCH" };
    println!("{mark:<10}{label:<34}{closed}");
}

fn main() -> Result<()> {
    // General theorem: only n, m, a2, a3 of G are needed.
    let petersen = Graph::from_edge_list(
        10,
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 10),
            (6, 8),
            (8, 10),
            (7, 10),
            (7, 9),
            (6, 9),
        ],
    )?;
    let stats = SourceStats::of(&petersen);
    println!(
        "Petersen: n={} m={} a2={} a3={}",
        stats.n, stats.m, stats.a2, stats.a3
    );
    let coeffs = mycielskian_hosoya_for_graph(&petersen)?;
    show(
        "mu(Petersen), general",
        &coeffs.polynomial(),
        &mycielskian(&petersen),
    );
    show(
        "mu(Petersen), diameter-2 lemma",
        &diameter2_mycielskian_hosoya_for_graph(&petersen)?,
        &mycielskian(&petersen),
    );

    for n in [2, 5, 9] {
        show(
            &format!("P_{n}"),
            &path_hosoya(n)?,
            &gen(&format!("path:{n}"))?,
        );
        show(
            &format!("mu(P_{n})"),
            &path_mycielskian_hosoya(n)?,
            &mycielskian(&gen(&format!("path:{n}"))?),
        );
        show(
            &format!("mu(S_{n})"),
            &star_mycielskian_hosoya(n)?,
            &mycielskian(&gen(&format!("star:{n}"))?),
        );
        show(
            &format!("mu(K_({n},{}))", n + 1),
            &kbip_mycielskian_hosoya(n, n + 1)?,
            &mycielskian(&gen(&format!("kbip:{n},{}", n + 1))?),
        );
    }

    let (a, b) = (gen("cycle:6")?, gen("path:4")?);
    let (h_join, h_mu_join) = join_hosoya_for_graphs(&a, &b)?;
    show("C_6 + P_4", &h_join, &join(&a, &b));
    show("mu(C_6 + P_4)", &h_mu_join, &mycielskian(&join(&a, &b)));
    Ok(())
}
