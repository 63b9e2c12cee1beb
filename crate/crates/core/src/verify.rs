//! Verification harness: runs every closed form against breadth-first
//! oracles over a seeded corpus of random connected graphs and named
//! families.
//!
//! The report contains no timings or other run-dependent data, so a fixed
//! configuration always serializes to the same bytes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    generate, join, mycielskian, predicted_mycielskian_diameter, GeneratorSpec, MycielskianLayout,
};
use crate::error::Result;
use crate::graph::{edgelist, Diameter, Graph};
use crate::hosoya::{
    self, diameter2_mycielskian_hosoya, join_hosoya_closed_form, kbip_mycielskian_hosoya,
    mycielskian_hosoya_closed_form, path_hosoya, path_mycielskian_hosoya, star_mycielskian_hosoya,
    SourceStats,
};
use crate::indices::{
    self, betweenness_centrality, betweenness_from_wiener, closeness_vertex,
    mycielskian_index_closed_forms, pairwise, IndexReport, ERRATA,
};
use crate::polynomial::Rational;

/// Resampling attempts per random instance before the vertex count is
/// lowered.
const MAX_ATTEMPTS: usize = 1000;

/// Number of corpus graphs (with diameter at least 2) paired up for the join
/// checks.
const JOIN_PARTNERS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Number of random connected graphs.
    pub count: usize,
    /// Random graphs have `n` uniform in `[2, max_n]`.
    pub max_n: usize,
    /// Largest family parameter (`path:N`, `kbip:N,M`, ...).
    pub family_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            count: 200,
            max_n: 40,
            family_max: 50,
        }
    }
}

/// One corpus member.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub id: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: String,
    pub detail: String,
    /// The offending graph in edge-list format.
    pub edge_list: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErratumFinding {
    pub id: &'static str,
    pub printed_formula: &'static str,
    pub corrected_formula: &'static str,
    pub counterexample_instance: String,
    pub counterexample_input: SourceStats,
    pub printed_value: i128,
    pub oracle_value: i128,
    /// Corpus instances on which the printed formula disagrees with the
    /// oracle, out of `instances`.
    pub disagreements: usize,
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub corpus_description: String,
    pub checks: Vec<CheckResult>,
    pub erratum_findings: Vec<ErratumFinding>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.failures > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("corpus: {}\n", self.corpus_description);
        for c in &self.checks {
            let status = if c.failures == 0 { "PASS" } else { "FAIL" };
            out += &format!(
                "{status} {:<38} {:>6} instances {:>4} failures\n",
                c.name, c.instances, c.failures
            );
            if let Some(cx) = &c.first_counterexample {
                out += &format!("     first counterexample {}: {}\n", cx.instance, cx.detail);
            }
        }
        for e in &self.erratum_findings {
            out += &format!(
                "ERRATUM {}: printed {} gives {} on {} (n={}, m={}, a2={}, a3={}), oracle {} (disagrees on {}/{} instances; corrected {})\n",
                e.id,
                e.printed_formula,
                e.printed_value,
                e.counterexample_instance,
                e.counterexample_input.n,
                e.counterexample_input.m,
                e.counterexample_input.a2,
                e.counterexample_input.a3,
                e.oracle_value,
                e.disagreements,
                e.instances,
                e.corrected_formula,
            );
        }
        out
    }
}

/// A connected `G(n, p)` sample with `p` uniform in `(0.1, 0.9)`, redrawn
/// until connected. After [`MAX_ATTEMPTS`] failures `n` is lowered by one.
pub fn random_connected_graph<R: Rng>(rng: &mut R, mut n: usize) -> Graph {
    loop {
        for _ in 0..MAX_ATTEMPTS {
            let p: f64 = rng.random_range(0.1..0.9);
            let mut edges = Vec::new();
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if rng.random_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_normalized(n, edges);
            if g.is_connected() {
                return g;
            }
        }
        n = (n - 1).max(1);
    }
}

fn family_specs(family_max: usize) -> Vec<GeneratorSpec> {
    let mut specs = Vec::new();
    specs.extend((1..=family_max).map(GeneratorSpec::Path));
    specs.extend((3..=family_max.max(2)).map(GeneratorSpec::Cycle));
    specs.extend((1..=family_max).map(GeneratorSpec::Star));
    specs.extend((2..=family_max).map(GeneratorSpec::Complete));
    for n in 1..=family_max {
        specs.extend((n..=family_max).map(|m| GeneratorSpec::CompleteBipartite(n, m)));
    }
    specs
}

/// Family graphs first (starting with `path:1`), then the random instances.
pub fn corpus(config: &VerifyConfig) -> Vec<CorpusGraph> {
    let mut out: Vec<CorpusGraph> = family_specs(config.family_max)
        .into_iter()
        .map(|spec| CorpusGraph {
            id: spec.to_string(),
            graph: generate(&spec).expect("family parameters are valid"),
        })
        .collect();
    let max_n = config.max_n.max(2);
    out.extend((0..config.count).map(|i| {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(i as u64);
        let n = rng.random_range(2..=max_n);
        CorpusGraph {
            id: format!("random#{i}"),
            graph: random_connected_graph(&mut rng, n),
        }
    }));
    out
}

struct Observation {
    check: &'static str,
    instance: String,
    failure: Option<(String, String)>,
}

struct Observer<'a> {
    instance: &'a str,
    graph: &'a Graph,
    seen: Vec<Observation>,
}

impl<'a> Observer<'a> {
    fn new(instance: &'a str, graph: &'a Graph) -> Self {
        Observer {
            instance,
            graph,
            seen: Vec::new(),
        }
    }

    fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.seen.push(Observation {
            check: name,
            instance: self.instance.to_string(),
            failure: (!ok).then(|| (detail(), edgelist::write(self.graph))),
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &'static str, expected: T, actual: T) {
        let ok = expected == actual;
        self.check(name, ok, || {
            format!("expected {expected:?}, got {actual:?}")
        });
    }
}

/// Fixed order of checks in the report.
pub const CHECK_NAMES: &[&str] = &[
    "main_theorem",
    "diameter_law",
    "hosoya_degree_at_most_4",
    "pair_count_conservation",
    "mycielskian_structure",
    "mycielskian_distance_claims",
    "diameter2_lemma",
    "mycielskian_index_corollary",
    "tsz_corrected_closed_form",
    "mycielskian_betweenness_by_counting",
    "nth_wiener_vanishes_above_4",
    "derivative_vs_definition",
    "closeness_vertex_sum",
    "wiener_betweenness_relation",
    "join_closed_form",
    "star_closed_form",
    "kbip_closed_form",
    "path_hosoya",
    "path_mycielskian_closed_form",
    "path_wiener_corollary",
    "path_closeness_betweenness_corollary",
    "star_closeness_betweenness_corollary",
    "star_path_closeness_difference",
];

struct InstanceOutcome {
    observations: Vec<Observation>,
    tsz: TszSample,
}

struct TszSample {
    stats: SourceStats,
    printed: i128,
    oracle: i128,
}

fn check_corpus_instance(item: &CorpusGraph) -> Result<InstanceOutcome> {
    let g = &item.graph;
    let mut obs = Observer::new(&item.id, g);
    let n = g.vertex_count();
    let dist_g = g.distance_matrix();
    let distribution = g.distance_distribution();
    let h_g = hosoya::from_distribution(&distribution);
    let stats = SourceStats::of_distribution(&distribution);

    let mu = mycielskian(g);
    let mu_matrix = mu.distance_matrix();
    let h_mu = hosoya::from_distribution(&mu.distance_distribution());

    let closed = mycielskian_hosoya_closed_form(stats);
    obs.eq(
        "main_theorem",
        closed.as_ref().ok().map(|c| c.polynomial()),
        Some(h_mu.clone()),
    );

    let predicted = predicted_mycielskian_diameter(g).ok();
    obs.eq(
        "diameter_law",
        predicted.map(Diameter::Finite),
        Some(mu.diameter()),
    );
    obs.check("hosoya_degree_at_most_4", h_mu.degree() <= 4, || {
        format!("degree {}", h_mu.degree())
    });
    let pairs = |k: usize| (k * (k - 1) / 2) as i128;
    obs.eq(
        "pair_count_conservation",
        (pairs(n), pairs(2 * n + 1)),
        (h_g.coefficient_sum()?, h_mu.coefficient_sum()?),
    );

    // |V|, |E|, degree law, induced copy of G on the v-vertices.
    let layout = MycielskianLayout::new(n);
    let mut structure_ok = mu.vertex_count() == 2 * n + 1
        && mu.edge_count() == 3 * g.edge_count() + n
        && mu.degree(layout.w())? == n;
    for i in 1..=n {
        let d = g.degree(i)?;
        structure_ok &= mu.degree(layout.v(i))? == 2 * d && mu.degree(layout.u(i))? == d + 1;
        for j in 1..=n {
            structure_ok &= mu.has_edge(layout.v(i), layout.v(j)) == g.has_edge(i, j);
        }
    }
    obs.check("mycielskian_structure", structure_ok, || {
        "vertex/edge counts, degree law or induced subgraph violated".into()
    });

    let mut claims = Vec::new();
    let w = layout.w();
    for i in 1..=n {
        let (vi, ui) = (layout.v(i), layout.u(i));
        if mu_matrix.get(w, ui) != Some(1) {
            claims.push(format!("d(w, u{i}) != 1"));
        }
        if mu_matrix.get(ui, vi) != Some(2) {
            claims.push(format!("d(u{i}, v{i}) != 2"));
        }
        if mu_matrix.get(w, vi) != Some(2) {
            claims.push(format!("d(w, v{i}) != 2"));
        }
        for j in (i + 1)..=n {
            if mu_matrix.get(ui, layout.u(j)) != Some(2) {
                claims.push(format!("d(u{i}, u{j}) != 2"));
            }
            let in_g = dist_g.get(i, j).expect("connected");
            let in_mu = mu_matrix.get(vi, layout.v(j)).expect("connected");
            if in_mu != in_g.min(4) {
                claims.push(format!("d(v{i}, v{j}) = {in_mu} but d_G = {in_g}"));
            }
        }
    }
    obs.check("mycielskian_distance_claims", claims.is_empty(), || {
        claims.first().cloned().unwrap_or_default()
    });

    if let Diameter::Finite(d) = distribution.diameter() {
        if d <= 2 {
            obs.eq(
                "diameter2_lemma",
                diameter2_mycielskian_hosoya(stats.n, stats.m).ok(),
                Some(h_mu.clone()),
            );
        }
    }

    let predicted = mycielskian_index_closed_forms(stats).ok();
    let from_h = IndexReport::from_hosoya(&h_mu, 2 * n + 1, true)?;
    obs.eq(
        "mycielskian_index_corollary",
        predicted.clone(),
        Some(from_h.clone()),
    );
    obs.eq(
        "tsz_corrected_closed_form",
        predicted.as_ref().map(|p| p.tsz),
        Some(from_h.tsz),
    );
    if n <= 40 {
        obs.eq(
            "mycielskian_betweenness_by_counting",
            predicted.and_then(|p| p.betweenness_centrality),
            Some(betweenness_centrality(&mu)?),
        );
    }
    let high_orders = (5..=8)
        .map(|k| indices::nth_wiener(&h_mu, k))
        .collect::<Result<Vec<_>>>()?;
    obs.eq("nth_wiener_vanishes_above_4", vec![0; 4], high_orders);

    // Polynomial routes against per-pair definitions, on G itself.
    let derivative = (
        indices::wiener(&h_g)?,
        indices::hyper_wiener(&h_g)?,
        indices::tsz(&h_g)?,
        indices::harary(&h_g)?,
        indices::closeness(&h_g)?,
    );
    let definition = (
        pairwise::wiener(&dist_g)?,
        pairwise::hyper_wiener(&dist_g)?,
        pairwise::tsz(&dist_g)?,
        pairwise::harary(&dist_g)?,
        pairwise::closeness(&dist_g)?,
    );
    obs.eq("derivative_vs_definition", definition, derivative);
    let vertex_sum = Rational::checked_sum(
        g.vertices()
            .map(|v| closeness_vertex(g, v))
            .collect::<Result<Vec<_>>>()?,
    )?;
    obs.eq(
        "closeness_vertex_sum",
        indices::closeness(&h_g)?,
        vertex_sum,
    );
    obs.eq(
        "wiener_betweenness_relation",
        betweenness_from_wiener(indices::wiener(&h_g)?, n)?,
        betweenness_centrality(g)?,
    );

    let tsz = TszSample {
        stats,
        printed: (ERRATA[0].evaluate_printed)(stats),
        oracle: indices::tsz(&h_mu)?.numer(),
    };
    Ok(InstanceOutcome {
        observations: obs.seen,
        tsz,
    })
}

fn gen(spec: GeneratorSpec) -> Graph {
    generate(&spec).expect("valid family parameters")
}

fn check_families(config: &VerifyConfig) -> Result<Vec<Observation>> {
    let top = config.family_max;
    let mut out = Vec::new();

    for n in 1..=top {
        let p = gen(GeneratorSpec::Path(n));
        let id = format!("path:{n}");
        let mut obs = Observer::new(&id, &p);
        obs.eq("path_hosoya", path_hosoya(n as i128)?, hosoya::hosoya(&p));
        out.extend(obs.seen);
    }

    for n in 2..=top {
        let k = n as i128;
        let id = format!("path:{n}");
        let mu = mycielskian(&gen(GeneratorSpec::Path(n)));
        let h = hosoya::hosoya(&mu);
        let mut obs = Observer::new(&id, &mu);
        obs.eq(
            "path_mycielskian_closed_form",
            path_mycielskian_hosoya(k)?,
            h.clone(),
        );
        obs.eq(
            "path_wiener_corollary",
            6 * k * k - k + 11,
            indices::wiener(&h)?,
        );
        let expected = (
            Rational::new(9 * k * k + 95 * k + 14, 16)?,
            Rational::new(4 * k * k - 6 * k + 8, 2 * k + 3)?,
        );
        obs.eq(
            "path_closeness_betweenness_corollary",
            (expected.0, expected.1, expected.1),
            (
                indices::closeness(&h)?,
                betweenness_from_wiener(indices::wiener(&h)?, mu.vertex_count())?,
                betweenness_centrality(&mu)?,
            ),
        );
        out.extend(obs.seen);

        let id = format!("star:{n}");
        let star_mu = mycielskian(&gen(GeneratorSpec::Star(n)));
        let star_h = hosoya::hosoya(&star_mu);
        let mut obs = Observer::new(&id, &star_mu);
        obs.eq(
            "star_closed_form",
            star_mycielskian_hosoya(k)?,
            star_h.clone(),
        );
        let expected = (
            Rational::new(16 * k * k + 72 * k + 32, 16)?,
            Rational::new(2 * k * k + k + 2, 2 * k + 3)?,
        );
        obs.eq(
            "star_closeness_betweenness_corollary",
            (expected.0, expected.1, expected.1),
            (
                indices::closeness(&star_h)?,
                betweenness_from_wiener(indices::wiener(&star_h)?, star_mu.vertex_count())?,
                betweenness_centrality(&star_mu)?,
            ),
        );
        let difference = indices::closeness(&star_h)?.checked_sub(indices::closeness(&h)?)?;
        let formula = Rational::new(7 * k * k - 23 * k + 18, 16)?;
        obs.check(
            "star_path_closeness_difference",
            difference == formula
                && difference >= Rational::ZERO
                && (difference == Rational::ZERO) == (n == 2),
            || format!("difference {difference}, formula {formula}"),
        );
        out.extend(obs.seen);
    }

    let grid: Vec<(usize, usize)> = (2..=top)
        .flat_map(|n| (2..=top).map(move |m| (n, m)))
        .collect();
    let kbip = grid
        .par_iter()
        .map(|&(n, m)| {
            let id = format!("kbip:{n},{m}");
            let mu = mycielskian(&gen(GeneratorSpec::CompleteBipartite(n, m)));
            let mut obs = Observer::new(&id, &mu);
            obs.eq(
                "kbip_closed_form",
                kbip_mycielskian_hosoya(n as i128, m as i128)?,
                hosoya::hosoya(&mu),
            );
            Ok(obs.seen)
        })
        .collect::<Result<Vec<_>>>()?;
    out.extend(kbip.into_iter().flatten());
    Ok(out)
}

fn check_joins(partners: &[&CorpusGraph]) -> Result<Vec<Observation>> {
    let pairs: Vec<(usize, usize)> = (0..partners.len())
        .flat_map(|i| (i..partners.len()).map(move |j| (i, j)))
        .collect();
    let nested = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (partners[i], partners[j]);
            let joined = join(&a.graph, &b.graph);
            let id = format!("join({}, {})", a.id, b.id);
            let mut obs = Observer::new(&id, &joined);
            let closed = join_hosoya_closed_form(
                a.graph.vertex_count() as i128,
                a.graph.edge_count() as i128,
                b.graph.vertex_count() as i128,
                b.graph.edge_count() as i128,
            )
            .ok();
            let actual = (
                hosoya::hosoya(&joined),
                hosoya::hosoya(&mycielskian(&joined)),
            );
            let diameter_ok = matches!(joined.diameter(), Diameter::Finite(d) if d <= 2);
            obs.check(
                "join_closed_form",
                closed.as_ref() == Some(&actual) && diameter_ok,
                || {
                    format!(
                        "closed form {closed:?}, oracle {actual:?}, diameter {}",
                        joined.diameter()
                    )
                },
            );
            Ok(obs.seen)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

/// Runs the whole harness. Arithmetic overflow aborts with an error; closed
/// forms that disagree with the oracles are recorded as failures.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let corpus = corpus(config);
    let outcomes = corpus
        .par_iter()
        .map(check_corpus_instance)
        .collect::<Result<Vec<_>>>()?;

    let partners: Vec<&CorpusGraph> = corpus
        .iter()
        .filter(|c| c.id.starts_with("random"))
        .chain(corpus.iter().filter(|c| !c.id.starts_with("random")))
        .filter(|c| matches!(c.graph.diameter(), Diameter::Finite(d) if d >= 2))
        .take(JOIN_PARTNERS)
        .collect();

    let mut observations: Vec<Observation> = Vec::new();
    let mut tsz_samples = Vec::new();
    for (item, outcome) in corpus.iter().zip(outcomes) {
        observations.extend(outcome.observations);
        tsz_samples.push((item.id.clone(), outcome.tsz));
    }
    observations.extend(check_joins(&partners)?);
    observations.extend(check_families(config)?);

    let mut checks: Vec<CheckResult> = CHECK_NAMES
        .iter()
        .map(|&name| CheckResult {
            name,
            instances: 0,
            failures: 0,
            first_counterexample: None,
        })
        .collect();
    for o in observations {
        let tally = checks
            .iter_mut()
            .find(|c| c.name == o.check)
            .expect("check listed in CHECK_NAMES");
        tally.instances += 1;
        if let Some((detail, edge_list)) = o.failure {
            tally.failures += 1;
            tally.first_counterexample.get_or_insert(Counterexample {
                instance: o.instance,
                detail,
                edge_list,
            });
        }
    }

    let erratum = &ERRATA[0];
    let disagreements: Vec<_> = tsz_samples
        .iter()
        .filter(|(_, s)| s.printed != s.oracle)
        .collect();
    let erratum_findings = disagreements
        .first()
        .map(|(id, sample)| ErratumFinding {
            id: erratum.id,
            printed_formula: erratum.printed,
            corrected_formula: erratum.corrected,
            counterexample_instance: id.clone(),
            counterexample_input: sample.stats,
            printed_value: sample.printed,
            oracle_value: sample.oracle,
            disagreements: disagreements.len(),
            instances: tsz_samples.len(),
        })
        .into_iter()
        .collect();

    Ok(VerifyReport {
        corpus_description: format!(
            "{} random connected graphs (seed {}, n in [2, {}]) plus path/cycle/star/complete/kbip families up to parameter {}; {} corpus instances, {} join partners",
            config.count,
            config.seed,
            config.max_n.max(2),
            config.family_max,
            corpus.len(),
            partners.len()
        ),
        checks,
        erratum_findings,
    })
}
