//! Exact betweenness by shortest-path counting.
//!
//! `σ(u, v)` is the number of shortest `u`-`v` paths and a vertex `w` lies on
//! `σ(u, w) σ(w, v)` of them whenever `d(u, w) + d(w, v) = d(u, v)`. Pairs are
//! unordered.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Rational;

/// All-pairs distances and shortest-path counts of a connected graph.
pub struct PathCounts {
    n: usize,
    dist: Vec<usize>,
    sigma: Vec<i128>,
}

impl PathCounts {
    pub fn new(graph: &Graph) -> Result<Self> {
        let n = graph.vertex_count();
        let mut dist = vec![usize::MAX; n * n];
        let mut sigma = vec![0i128; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = s * n;
            dist[row + s] = 0;
            sigma[row + s] = 1;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let dv = dist[row + v];
                for &u in &graph.adjacency()[v] {
                    if dist[row + u] == usize::MAX {
                        dist[row + u] = dv + 1;
                        queue.push_back(u);
                    }
                    if dist[row + u] == dv + 1 {
                        sigma[row + u] = sigma[row + u]
                            .checked_add(sigma[row + v])
                            .ok_or(Error::Overflow("shortest-path count"))?;
                    }
                }
            }
            if dist[row..row + n].contains(&usize::MAX) {
                return Err(Error::Disconnected);
            }
        }
        Ok(PathCounts { n, dist, sigma })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Distance between 1-based vertices.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[(u - 1) * self.n + (v - 1)]
    }

    /// Number of shortest paths between 1-based vertices.
    pub fn path_count(&self, u: usize, v: usize) -> i128 {
        self.sigma[(u - 1) * self.n + (v - 1)]
    }

    /// `σ(u, v | w)`: shortest `u`-`v` paths through `w`, zero-based.
    fn through(&self, u: usize, v: usize, w: usize) -> Result<i128> {
        let n = self.n;
        if self.dist[u * n + w] + self.dist[w * n + v] != self.dist[u * n + v] {
            return Ok(0);
        }
        self.sigma[u * n + w]
            .checked_mul(self.sigma[w * n + v])
            .ok_or(Error::Overflow("shortest-path count"))
    }

    /// `B_w`, summed over unordered pairs avoiding `w`.
    pub fn vertex_betweenness(&self, w: usize) -> Result<Rational> {
        if w == 0 || w > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                vertex_count: self.n,
            });
        }
        let w = w - 1;
        let mut total = Rational::ZERO;
        for u in (0..self.n).filter(|&u| u != w) {
            for v in ((u + 1)..self.n).filter(|&v| v != w) {
                let through = self.through(u, v, w)?;
                if through != 0 {
                    total =
                        total.checked_add(Rational::new(through, self.sigma[u * self.n + v])?)?;
                }
            }
        }
        Ok(total)
    }

    /// `(1/n) Σ_w B_w`, accumulated pair by pair so each pair's fraction has
    /// denominator `σ(u, v)`.
    pub fn centrality(&self) -> Result<Rational> {
        let n = self.n;
        let mut total = Rational::ZERO;
        for u in 0..n {
            for v in (u + 1)..n {
                let mut interior = 0i128;
                for w in (0..n).filter(|&w| w != u && w != v) {
                    interior = interior
                        .checked_add(self.through(u, v, w)?)
                        .ok_or(Error::Overflow("shortest-path count"))?;
                }
                if interior != 0 {
                    total = total.checked_add(Rational::new(interior, self.sigma[u * n + v])?)?;
                }
            }
        }
        total.checked_div(Rational::from_integer(n as i128))
    }
}

/// Betweenness `B_w` of vertex `w` in a connected graph.
pub fn betweenness_vertex(graph: &Graph, w: usize) -> Result<Rational> {
    graph.check_vertex(w)?;
    PathCounts::new(graph)?.vertex_betweenness(w)
}

/// Average vertex betweenness `B⁻(G)` of a connected graph.
pub fn betweenness_centrality(graph: &Graph) -> Result<Rational> {
    PathCounts::new(graph)?.centrality()
}
