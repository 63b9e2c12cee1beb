//! Distance-based indices and vulnerability measures.
//!
//! The polynomial routes work from `H(G, x)`:
//!
//! | index | route |
//! |-------|-------|
//! | Wiener `W` | `H'(1)` |
//! | hyper-Wiener `WW` | `f''(1) / 2`, `f = x H` |
//! | TSZ | `g'''(1) / 6`, `g = x² H` |
//! | Harary | `∫₀¹ H(x)/x dx = Σ a_k / k` |
//! | `n`-th order Wiener | `H⁽ⁿ⁾(1)` |
//! | closeness `C` | `2 H(1/2)` |
//!
//! [`pairwise`] holds the per-pair definitional sums used to cross-check them.

mod betweenness;
pub mod pairwise;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hosoya::{self, mycielskian_hosoya_closed_form, SourceStats};
use crate::polynomial::{falling_factorial, IntPolynomial, Rational};

pub use betweenness::{betweenness_centrality, betweenness_vertex, PathCounts};

fn frac(p: i128, q: i128) -> Rational {
    Rational::new(p, q).expect("nonzero constant denominator")
}

fn integer_at_one(p: &crate::polynomial::Polynomial) -> Result<i128> {
    Ok(p.eval_rational(Rational::ONE)?.numer())
}

pub fn wiener(h: &IntPolynomial) -> Result<i128> {
    integer_at_one(&h.derivative(1)?)
}

pub fn hyper_wiener(h: &IntPolynomial) -> Result<Rational> {
    let f = h.shift_multiply(1);
    f.derivative(2)?
        .eval_rational(Rational::ONE)?
        .checked_mul(frac(1, 2))
}

pub fn tsz(h: &IntPolynomial) -> Result<Rational> {
    let g = h.shift_multiply(2);
    g.derivative(3)?
        .eval_rational(Rational::ONE)?
        .checked_mul(frac(1, 6))
}

/// `Σ a_k / k`, the exact value of `∫₀¹ H(x)/x dx`.
pub fn harary(h: &IntPolynomial) -> Result<Rational> {
    let mut total = Rational::ZERO;
    for (i, &c) in h.coefficients().iter().enumerate() {
        total = total.checked_add(Rational::new(c, i as i128 + 1)?)?;
    }
    Ok(total)
}

/// `H⁽ᵒʳᵈᵉʳ⁾(1)`; zero once `order` exceeds the degree.
pub fn nth_wiener(h: &IntPolynomial, order: usize) -> Result<i128> {
    if order == 0 {
        return Err(Error::precondition("order must be positive"));
    }
    integer_at_one(&h.derivative(order)?)
}

/// `C(G) = 2 H(G, 1/2)`; pairs with no path contribute nothing.
pub fn closeness(h: &IntPolynomial) -> Result<Rational> {
    h.eval_rational(frac(1, 2))?
        .checked_mul(Rational::from_integer(2))
}

/// `C(i) = Σ_{j ≠ i} 2^{-d(i, j)}` over vertices reachable from `i`.
pub fn closeness_vertex(graph: &Graph, i: usize) -> Result<Rational> {
    let mut total = Rational::ZERO;
    for d in graph
        .bfs_distances(i)?
        .into_iter()
        .flatten()
        .filter(|&d| d > 0)
    {
        let d = u32::try_from(d).map_err(|_| Error::Overflow("closeness"))?;
        total = total.checked_add(frac(1, 2).checked_pow(d)?)?;
    }
    Ok(total)
}

/// Vertex residual closeness `min_k C(G - k)`.
pub fn vertex_residual_closeness(graph: &Graph) -> Result<Rational> {
    if graph.vertex_count() < 2 {
        return Err(Error::precondition(
            "vertex residual closeness needs n >= 2",
        ));
    }
    let values = graph
        .vertices()
        .into_par_iter()
        .map(|k| closeness(&hosoya::hosoya(&graph.delete_vertex(k)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(values.into_iter().min().expect("n >= 2"))
}

/// `B⁻(G) = W(G)/n - (n - 1)/2`, the betweenness centrality of a connected
/// graph recovered from its Wiener index.
pub fn betweenness_from_wiener(wiener: i128, vertex_count: usize) -> Result<Rational> {
    let n = vertex_count as i128;
    Rational::new(wiener, n)?.checked_sub(Rational::new(n - 1, 2)?)
}

/// Every index for one graph, exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub wiener: i128,
    pub hyper_wiener: Rational,
    pub tsz: Rational,
    pub harary: Rational,
    pub closeness: Rational,
    /// `None` for disconnected graphs.
    pub betweenness_centrality: Option<Rational>,
    pub vrc: Option<Rational>,
    /// Orders `1..=D`.
    pub nth_wiener: Vec<i128>,
}

impl IndexReport {
    /// Every polynomial-route index; betweenness via the Wiener relation when
    /// `connected`, and no VRC.
    pub fn from_hosoya(h: &IntPolynomial, vertex_count: usize, connected: bool) -> Result<Self> {
        let wiener = wiener(h)?;
        Ok(IndexReport {
            wiener,
            hyper_wiener: hyper_wiener(h)?,
            tsz: tsz(h)?,
            harary: harary(h)?,
            closeness: closeness(h)?,
            betweenness_centrality: if connected {
                Some(betweenness_from_wiener(wiener, vertex_count)?)
            } else {
                None
            },
            vrc: None,
            nth_wiener: (1..=h.degree())
                .map(|order| nth_wiener(h, order))
                .collect::<Result<_>>()?,
        })
    }

    /// Full report for `graph`, with betweenness by shortest-path counting.
    pub fn for_graph(graph: &Graph, with_vrc: bool) -> Result<Self> {
        let h = hosoya::hosoya(graph);
        let connected = graph.is_connected();
        let mut report = Self::from_hosoya(&h, graph.vertex_count(), false)?;
        if connected {
            report.betweenness_centrality = Some(betweenness_centrality(graph)?);
        }
        if with_vrc {
            report.vrc = Some(vertex_residual_closeness(graph)?);
        }
        Ok(report)
    }
}

/// Index values of `μ(G)` predicted from `(n, m, a2, a3)` of `G`. TSZ uses
/// the coefficients implied by the Hosoya closed form; see [`ERRATA`] for the
/// widely printed variant.
pub fn mycielskian_index_closed_forms(stats: SourceStats) -> Result<IndexReport> {
    let coefficients = mycielskian_hosoya_closed_form(stats)?;
    let SourceStats { n, m, a2, a3 } = stats;
    let b = coefficients.as_array();
    let degree = b.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    let nth_wiener = (1..=degree)
        .map(|order| {
            b.iter().enumerate().try_fold(0i128, |acc, (i, &bi)| {
                acc.checked_add(falling_factorial(i as i128 + 1, order)?.checked_mul(bi)?)
            })
        })
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Overflow("nth-order Wiener closed form"))?;
    Ok(IndexReport {
        wiener: 6 * n * n - n - 7 * m - 4 * a2 - a3,
        hyper_wiener: frac(25 * n * n - 11 * n, 2)
            .checked_sub(Rational::from_integer(19 * m + 13 * a2 + 4 * a3))?,
        tsz: Rational::from_integer(22 * n * n - 13 * n - 37 * m - 28 * a2 - 10 * a3),
        harary: frac(17 * n * n + 31 * n + 50 * m + 14 * a2 + 2 * a3, 24),
        closeness: frac(9 * n * n + 23 * n + 38 * m + 14 * a2 + 2 * a3, 16),
        betweenness_centrality: Some(frac(4 * n * n - 2 * n - 7 * m - 4 * a2 - a3, 2 * n + 1)),
        vrc: None,
        nth_wiener,
    })
}

/// A published closed form that disagrees with direct computation.
#[derive(Debug, Clone, Copy)]
pub struct Erratum {
    pub id: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub evaluate_printed: fn(SourceStats) -> i128,
    pub evaluate_corrected: fn(SourceStats) -> i128,
}

fn tsz_printed(s: SourceStats) -> i128 {
    22 * s.n * s.n - 8 * s.n - 22 * s.m - 28 * s.a2 - 10 * s.a3
}

fn tsz_corrected(s: SourceStats) -> i128 {
    22 * s.n * s.n - 13 * s.n - 37 * s.m - 28 * s.a2 - 10 * s.a3
}

/// Known misprints among the Mycielskian index formulas. Expanding
/// `b1 + 4 b2 + 10 b3 + 20 b4` gives the corrected TSZ line; on `μ(P_1) ≅ C_5`
/// the printed line yields 50 against a true value of 25.
pub const ERRATA: &[Erratum] = &[Erratum {
    id: "tsz_mycielskian",
    printed: "22n^2 - 8n - 22m - 28a_2 - 10a_3",
    corrected: "22n^2 - 13n - 37m - 28a_2 - 10a_3",
    evaluate_printed: tsz_printed,
    evaluate_corrected: tsz_corrected,
}];
