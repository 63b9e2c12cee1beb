//! Hosoya polynomials, by breadth-first search and by closed form.
//!
//! `H(G, x) = Σ_k d(G, k) x^k` over finite distances `k >= 1`. For a
//! disconnected graph the unreachable pairs simply contribute nothing.
//!
//! The closed forms take numeric summaries of `G` (vertex count, edge count,
//! pair counts at distance 2 and 3) so they can be checked against any
//! distance source. The `*_for_graph` wrappers derive those summaries from a
//! [`Graph`] after checking the hypotheses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Diameter, DistanceDistribution, Graph};
use crate::polynomial::IntPolynomial;

pub fn hosoya(graph: &Graph) -> IntPolynomial {
    from_distribution(&graph.distance_distribution())
}

pub fn from_distribution(dist: &DistanceDistribution) -> IntPolynomial {
    IntPolynomial::from_coefficients(dist.counts().iter().map(|&a| a as i128).collect())
}

/// Numeric summary of a graph that the Mycielskian closed forms consume.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SourceStats {
    pub n: i128,
    pub m: i128,
    pub a2: i128,
    pub a3: i128,
}

impl SourceStats {
    pub fn new(n: i128, m: i128, a2: i128, a3: i128) -> Self {
        SourceStats { n, m, a2, a3 }
    }

    pub fn of(graph: &Graph) -> Self {
        Self::of_distribution(&graph.distance_distribution())
    }

    pub fn of_distribution(dist: &DistanceDistribution) -> Self {
        SourceStats {
            n: dist.vertex_count() as i128,
            m: dist.count(1) as i128,
            a2: dist.count(2) as i128,
            a3: dist.count(3) as i128,
        }
    }

    fn pairs(&self) -> i128 {
        self.n * (self.n - 1) / 2
    }

    /// Arithmetic consequences of "simple connected graph on `n >= 2`
    /// vertices" that can be checked without the graph.
    pub(crate) fn check_connected_hypothesis(&self) -> Result<()> {
        let SourceStats { n, m, a2, a3 } = *self;
        if n < 2 {
            return Err(Error::precondition(format!("need n >= 2, got n = {n}")));
        }
        bounded(&[n, m, a2, a3])?;
        if a2 < 0 || a3 < 0 {
            return Err(Error::precondition("pair counts must be non-negative"));
        }
        if m < n - 1 {
            return Err(Error::precondition(format!(
                "a connected graph on {n} vertices has at least {} edges, got {m}",
                n - 1
            )));
        }
        if m + a2 + a3 > self.pairs() {
            return Err(Error::precondition(format!(
                "m + a2 + a3 = {} exceeds the {} vertex pairs",
                m + a2 + a3,
                self.pairs()
            )));
        }
        Ok(())
    }
}

/// Largest magnitude accepted by the numeric closed forms; keeps every
/// intermediate product far from `i128` overflow.
const MAX_PARAMETER: i128 = 1 << 40;

fn bounded(values: &[i128]) -> Result<()> {
    match values.iter().find(|v| v.abs() > MAX_PARAMETER) {
        Some(v) => Err(Error::precondition(format!(
            "parameter {v} exceeds {MAX_PARAMETER}"
        ))),
        None => Ok(()),
    }
}

/// Coefficients `b_1..b_4` of `H(μ(G), x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MycielskianCoefficients {
    pub b1: i128,
    pub b2: i128,
    pub b3: i128,
    pub b4: i128,
    pub source: SourceStats,
}

impl MycielskianCoefficients {
    pub fn as_array(&self) -> [i128; 4] {
        [self.b1, self.b2, self.b3, self.b4]
    }

    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coefficients(self.as_array().to_vec())
    }
}

/// Coefficients of `H(μ(G), x)` for a simple connected `G`:
///
/// ```text
/// b1 = 3m + n
/// b2 = (n² + 3n)/2 + 3 a2
/// b3 = n² - 2m - n + a3 - 2 a2
/// b4 = n(n - 1)/2 - m - a2 - a3
/// ```
pub fn mycielskian_hosoya_closed_form(stats: SourceStats) -> Result<MycielskianCoefficients> {
    stats.check_connected_hypothesis()?;
    let SourceStats { n, m, a2, a3 } = stats;
    let coefficients = MycielskianCoefficients {
        b1: 3 * m + n,
        b2: (n * n + 3 * n) / 2 + 3 * a2,
        b3: n * n - 2 * m - n + a3 - 2 * a2,
        b4: stats.pairs() - m - a2 - a3,
        source: stats,
    };
    if let Some(b) = coefficients.as_array().iter().find(|&&b| b < 0) {
        return Err(Error::precondition(format!(
            "inconsistent inputs {stats:?} give negative coefficient {b}"
        )));
    }
    debug_assert_eq!(coefficients.as_array().iter().sum::<i128>(), 2 * n * n + n);
    Ok(coefficients)
}

/// Closed-form `H(μ(G), x)` after checking that `G` is connected with at
/// least two vertices.
pub fn mycielskian_hosoya_for_graph(graph: &Graph) -> Result<MycielskianCoefficients> {
    let dist = graph.distance_distribution();
    if dist.vertex_count() < 2 {
        return Err(Error::precondition("need at least two vertices"));
    }
    if dist.diameter() == Diameter::Infinite {
        return Err(Error::Disconnected);
    }
    mycielskian_hosoya_closed_form(SourceStats::of_distribution(&dist))
}

/// `(3m + n) x + (2n² - 3m) x²`, valid whenever `μ(G)` has diameter 2.
pub fn diameter2_mycielskian_hosoya(n: i128, m: i128) -> Result<IntPolynomial> {
    bounded(&[n, m])?;
    if n < 2 || m < n / 2 || m > n * (n - 1) / 2 {
        return Err(Error::precondition(format!(
            "(n, m) = ({n}, {m}) cannot describe a graph without isolated vertices"
        )));
    }
    Ok(IntPolynomial::from_coefficients(vec![
        3 * m + n,
        2 * n * n - 3 * m,
    ]))
}

/// Checks that `G` is connected with `D(G) <= 2` (so `D(μ(G)) = 2`) and
/// returns the diameter-2 form.
pub fn diameter2_mycielskian_hosoya_for_graph(graph: &Graph) -> Result<IntPolynomial> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    match graph.diameter() {
        Diameter::Infinite => Err(Error::Disconnected),
        Diameter::Finite(d) if d > 2 => Err(Error::precondition(format!(
            "D(G) = {d}, so μ(G) does not have diameter 2"
        ))),
        Diameter::Finite(_) => {
            diameter2_mycielskian_hosoya(graph.vertex_count() as i128, graph.edge_count() as i128)
        }
    }
}

/// `(H(G1 ⊕ G2, x), H(μ(G1 ⊕ G2), x))` for connected parts of diameter at
/// least 2.
pub fn join_hosoya_closed_form(
    n1: i128,
    m1: i128,
    n2: i128,
    m2: i128,
) -> Result<(IntPolynomial, IntPolynomial)> {
    bounded(&[n1, m1, n2, m2])?;
    for (n, m) in [(n1, m1), (n2, m2)] {
        // Connected and not complete.
        if n < 3 || m < n - 1 || m >= n * (n - 1) / 2 {
            return Err(Error::precondition(format!(
                "(n, m) = ({n}, {m}) cannot describe a connected graph of diameter >= 2"
            )));
        }
    }
    let join = IntPolynomial::from_coefficients(vec![
        m1 + m2 + n1 * n2,
        (n1 * n1 + n2 * n2 - n1 - n2 - 2 * m1 - 2 * m2) / 2,
    ]);
    let myc = IntPolynomial::from_coefficients(vec![
        3 * m1 + 3 * m2 + 3 * n1 * n2 + n1 + n2,
        2 * n1 * n1 + 2 * n2 * n2 + n1 * n2 - 3 * m1 - 3 * m2,
    ]);
    Ok((join, myc))
}

pub fn join_hosoya_for_graphs(
    first: &Graph,
    second: &Graph,
) -> Result<(IntPolynomial, IntPolynomial)> {
    for g in [first, second] {
        match g.diameter() {
            Diameter::Infinite => return Err(Error::Disconnected),
            Diameter::Finite(d) if d < 2 => {
                return Err(Error::precondition(format!("part has diameter {d} < 2")))
            }
            Diameter::Finite(_) => {}
        }
    }
    join_hosoya_closed_form(
        first.vertex_count() as i128,
        first.edge_count() as i128,
        second.vertex_count() as i128,
        second.edge_count() as i128,
    )
}

/// `H(μ(S_n), x) = (4n + 1) x + (2n² + n + 2) x²` for `n >= 2` leaves.
pub fn star_mycielskian_hosoya(n: i128) -> Result<IntPolynomial> {
    bounded(&[n])?;
    if n < 2 {
        return Err(Error::precondition(format!("star needs n >= 2, got {n}")));
    }
    Ok(IntPolynomial::from_coefficients(vec![
        4 * n + 1,
        2 * n * n + n + 2,
    ]))
}

/// `H(μ(K_{n,m}), x) = (3nm + n + m) x + (2n² + 2m² + nm) x²` for `n, m >= 2`.
pub fn kbip_mycielskian_hosoya(n: i128, m: i128) -> Result<IntPolynomial> {
    bounded(&[n, m])?;
    if n < 2 || m < 2 {
        return Err(Error::precondition(format!(
            "K_(n,m) needs n, m >= 2, got ({n}, {m})"
        )));
    }
    Ok(IntPolynomial::from_coefficients(vec![
        3 * n * m + n + m,
        2 * n * n + 2 * m * m + n * m,
    ]))
}

/// `H(P_n, x) = Σ_{k=1}^{n} (n - k + 1) x^k`.
pub fn path_hosoya(n: i128) -> Result<IntPolynomial> {
    if n > 1 << 24 {
        return Err(Error::precondition(format!("path length {n} is too large")));
    }
    if n < 1 {
        return Err(Error::precondition(format!("path needs n >= 1, got {n}")));
    }
    Ok(IntPolynomial::from_coefficients((1..=n).rev().collect()))
}

/// `H(μ(P_n), x)` for a path of length `n >= 2`:
///
/// ```text
/// (4n + 1) x + (n² + 11n - 2)/2 x² + (n² - 2n) x³ + (n² - 5n + 6)/2 x⁴
/// ```
pub fn path_mycielskian_hosoya(n: i128) -> Result<IntPolynomial> {
    bounded(&[n])?;
    if n < 2 {
        return Err(Error::precondition(format!("path needs n >= 2, got {n}")));
    }
    Ok(IntPolynomial::from_coefficients(vec![
        4 * n + 1,
        (n * n + 11 * n - 2) / 2,
        n * n - 2 * n,
        (n * n - 5 * n + 6) / 2,
    ]))
}
