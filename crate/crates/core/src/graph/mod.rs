//! Immutable simple undirected graphs and their breadth-first distance
//! machinery.
//!
//! Vertices are numbered `1..=n` in every public signature. Distances to
//! vertices in another component are `None`; no numeric stand-in for
//! infinity ever leaves this module.

mod distance;
pub mod edgelist;

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub use distance::{Diameter, DistanceDistribution, DistanceMatrix};

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    /// Normalized `(i, j)` with `i < j`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    /// Zero-based neighbour lists, each sorted.
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from 1-based endpoint pairs.
    ///
    /// Pair order and orientation do not matter, but the same edge given twice
    /// (in either orientation) is rejected rather than merged.
    pub fn from_edge_list<I>(vertex_count: usize, edge_pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        let mut seen = BTreeSet::new();
        for (i, j) in edge_pairs {
            let edge = normalize_pair(vertex_count, i, j)?;
            if !seen.insert(edge) {
                return Err(Error::DuplicateEdge(edge.0, edge.1));
            }
        }
        Ok(Self::from_normalized(
            vertex_count,
            seen.into_iter().collect(),
        ))
    }

    /// The graph on `vertex_count` vertices with no edges.
    pub fn empty(vertex_count: usize) -> Result<Self> {
        Self::from_edge_list(vertex_count, [])
    }

    /// `edges` must already be normalized, sorted and deduplicated.
    pub(crate) fn from_normalized(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(i, j) in &edges {
            adjacency[i - 1].push(j - 1);
            adjacency[j - 1].push(i - 1);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            vertex_count,
            edges,
            adjacency,
        }
    }

    /// Sorts and deduplicates arbitrary generated pairs; used by the
    /// constructions, which cannot produce invalid pairs.
    pub(crate) fn from_generated(vertex_count: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_normalized(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.vertex_count
    }

    pub fn neighbors(&self, v: usize) -> Result<impl Iterator<Item = usize> + '_> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v - 1].iter().map(|&u| u + 1))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v - 1].len())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j
            && (1..=self.vertex_count).contains(&i)
            && (1..=self.vertex_count).contains(&j)
            && self.adjacency[i - 1].binary_search(&(j - 1)).is_ok()
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adjacency.iter().position(Vec::is_empty).map(|v| v + 1)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.vertex_count {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// Shortest-path edge counts from `source` to every vertex; entry `v - 1`
    /// holds the distance to vertex `v`.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        Ok(self.bfs_zero_based(source - 1))
    }

    pub(crate) fn bfs_zero_based(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::with_capacity(self.vertex_count);
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].map(|d| d + 1);
            for &u in &self.adjacency[v] {
                if dist[u].is_none() {
                    dist[u] = next;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// All-pairs distances by one BFS per source.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.vertex_count;
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            entries.extend(self.bfs_zero_based(s));
        }
        DistanceMatrix::from_entries(n, entries)
    }

    pub fn distance_distribution(&self) -> DistanceDistribution {
        DistanceDistribution::from_matrix(&self.distance_matrix())
    }

    pub fn diameter(&self) -> Diameter {
        self.distance_distribution().diameter()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_zero_based(0).iter().all(Option::is_some)
    }

    /// Removes vertex `k` and its incident edges. Vertices above `k` shift
    /// down by one so the result is again numbered `1..=n-1`.
    pub fn delete_vertex(&self, k: usize) -> Result<Graph> {
        self.check_vertex(k)?;
        if self.vertex_count == 1 {
            return Err(Error::CannotDeleteLastVertex);
        }
        let shift = |v: usize| if v > k { v - 1 } else { v };
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| i != k && j != k)
            .map(|&(i, j)| (shift(i), shift(j)))
            .collect();
        Ok(Graph::from_normalized(self.vertex_count - 1, edges))
    }
}

/// Checks range and self-loop constraints and orders the endpoints.
pub(crate) fn normalize_pair(vertex_count: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    for v in [i, j] {
        if v == 0 || v > vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count,
            });
        }
    }
    if i == j {
        return Err(Error::SelfLoop(i));
    }
    Ok((i.min(j), i.max(j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Graph {
        Graph::from_edge_list(3, [(1, 2), (2, 3)]).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edge_list(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap()
    }

    fn two_edges() -> Graph {
        Graph::from_edge_list(4, [(1, 2), (3, 4)]).unwrap()
    }

    #[test]
    fn builds_p2() {
        let g = p2();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(g.degree(2).unwrap(), 2);
        let reversed = Graph::from_edge_list(3, [(3, 2), (2, 1)]).unwrap();
        assert_eq!(g, reversed);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edge_list(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_connected());
        assert_eq!(g.diameter(), Diameter::Finite(0));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edge_list(3, [(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert_eq!(Graph::from_edge_list(3, [(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(
            Graph::from_edge_list(3, [(1, 4)]),
            Err(Error::VertexOutOfRange {
                vertex: 4,
                vertex_count: 3
            })
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 1)]),
            Err(Error::VertexOutOfRange {
                vertex: 0,
                vertex_count: 3
            })
        );
        assert_eq!(Graph::from_edge_list(0, []), Err(Error::NoVertices));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(
            p2().bfs_distances(1).unwrap(),
            vec![Some(0), Some(1), Some(2)]
        );
        for v in 1..=5 {
            let d = c5().bfs_distances(v).unwrap();
            assert_eq!(d.iter().filter(|&&x| x == Some(1)).count(), 2);
            assert_eq!(d.iter().filter(|&&x| x == Some(2)).count(), 2);
        }
        assert_eq!(
            two_edges().bfs_distances(1).unwrap(),
            vec![Some(0), Some(1), None, None]
        );
        assert!(p2().bfs_distances(4).is_err());
        assert!(p2().bfs_distances(0).is_err());
    }

    #[test]
    fn distributions() {
        let d = p2().distance_distribution();
        assert_eq!(d.counts(), &[2, 1]);
        assert_eq!(d.unreachable_pairs(), 0);
        let d = c5().distance_distribution();
        assert_eq!(d.counts(), &[5, 5]);
        let d = two_edges().distance_distribution();
        assert_eq!(d.counts(), &[2]);
        assert_eq!(d.unreachable_pairs(), 4);
        let d = Graph::empty(3).unwrap().distance_distribution();
        assert!(d.counts().is_empty());
        assert_eq!(d.unreachable_pairs(), 3);
    }

    #[test]
    fn diameters_and_connectivity() {
        assert_eq!(c5().diameter(), Diameter::Finite(2));
        assert_eq!(two_edges().diameter(), Diameter::Infinite);
        assert!(p2().is_connected());
        assert!(!two_edges().is_connected());
    }

    #[test]
    fn vertex_deletion() {
        let g = p2().delete_vertex(2).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);

        let g = c5().delete_vertex(3).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 4), (3, 4)]);
        assert_eq!(g.distance_distribution().counts(), &[3, 2, 1]);

        let star = Graph::from_edge_list(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let g = star.delete_vertex(1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);

        assert_eq!(
            Graph::empty(1).unwrap().delete_vertex(1),
            Err(Error::CannotDeleteLastVertex)
        );
        assert!(p2().delete_vertex(4).is_err());
    }

    #[test]
    fn isolated_vertex_lookup() {
        assert_eq!(p2().isolated_vertex(), None);
        let g = Graph::from_edge_list(3, [(2, 3)]).unwrap();
        assert_eq!(g.isolated_vertex(), Some(1));
    }
}
