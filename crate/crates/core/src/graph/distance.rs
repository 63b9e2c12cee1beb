use std::fmt;

/// Largest pairwise distance, or `Infinite` when some pair is unreachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => f.pad(&d.to_string()),
            Diameter::Infinite => f.pad("infinite"),
        }
    }
}

/// Row-major all-pairs distances, `None` for unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    vertex_count: usize,
    entries: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub(crate) fn from_entries(vertex_count: usize, entries: Vec<Option<usize>>) -> Self {
        debug_assert_eq!(entries.len(), vertex_count * vertex_count);
        DistanceMatrix {
            vertex_count,
            entries,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Distance between 1-based vertices `i` and `j`.
    ///
    /// Panics when either vertex is out of range.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        assert!(i >= 1 && j >= 1 && i <= self.vertex_count && j <= self.vertex_count);
        self.entries[(i - 1) * self.vertex_count + (j - 1)]
    }

    /// Iterates unordered pairs `(i, j, d)` with `i < j`, 1-based.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Option<usize>)> + '_ {
        let n = self.vertex_count;
        (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i + 1, j + 1, self.entries[i * n + j])))
    }
}

/// Number of unordered vertex pairs at each finite distance `k >= 1`, plus the
/// number of pairs with no connecting path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceDistribution {
    vertex_count: usize,
    /// `counts[k - 1]` is the number of pairs at distance `k`; trimmed so the
    /// last entry is nonzero.
    counts: Vec<u64>,
    unreachable_pairs: u64,
}

impl DistanceDistribution {
    pub(crate) fn from_matrix(matrix: &DistanceMatrix) -> Self {
        let mut counts: Vec<u64> = Vec::new();
        let mut unreachable_pairs = 0;
        for (_, _, d) in matrix.pairs() {
            match d {
                Some(k) => {
                    if counts.len() < k {
                        counts.resize(k, 0);
                    }
                    counts[k - 1] += 1;
                }
                None => unreachable_pairs += 1,
            }
        }
        let dist = DistanceDistribution {
            vertex_count: matrix.vertex_count(),
            counts,
            unreachable_pairs,
        };
        debug_assert_eq!(
            dist.counts.iter().sum::<u64>() + dist.unreachable_pairs,
            dist.total_pairs()
        );
        dist
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `a_1, a_2, ..., a_D`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `a_k`, zero beyond the largest finite distance and for `k = 0`.
    pub fn count(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.counts.get(k - 1).copied().unwrap_or(0)
        }
    }

    pub fn unreachable_pairs(&self) -> u64 {
        self.unreachable_pairs
    }

    /// `n(n - 1) / 2`.
    pub fn total_pairs(&self) -> u64 {
        let n = self.vertex_count as u64;
        n * n.saturating_sub(1) / 2
    }

    pub fn diameter(&self) -> Diameter {
        if self.unreachable_pairs > 0 {
            Diameter::Infinite
        } else {
            Diameter::Finite(self.counts.len())
        }
    }
}
