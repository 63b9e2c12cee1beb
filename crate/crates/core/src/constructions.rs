//! Graph generators, the Mycielskian and the join.
//!
//! `P_n` is the path *of length* `n`, so it has `n + 1` vertices, and `S_n` is
//! a star with `n` leaves (also `n + 1` vertices).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Diameter, Graph};

/// The Mycielskian `μ(G)`.
///
/// Vertex layout: `v_i = i`, `u_i = n + i`, `w = 2n + 1`. Edges are
/// `E(G)`, `w u_i` for every `i`, and `u_i v_j`, `u_j v_i` for each edge
/// `v_i v_j`, giving `2n + 1` vertices and `3m + n` edges.
pub fn mycielskian(graph: &Graph) -> Graph {
    let n = graph.vertex_count();
    let w = 2 * n + 1;
    let mut edges = Vec::with_capacity(3 * graph.edge_count() + n);
    for &(i, j) in graph.edges() {
        edges.push((i, j));
        edges.push((j, n + i));
        edges.push((i, n + j));
    }
    edges.extend((1..=n).map(|i| (n + i, w)));
    Graph::from_generated(w, edges)
}

/// Vertex ids of `v_i`, `u_i` and `w` in `mycielskian(G)` for `G` on `n`
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MycielskianLayout {
    pub base_vertices: usize,
}

impl MycielskianLayout {
    pub fn new(base_vertices: usize) -> Self {
        MycielskianLayout { base_vertices }
    }

    pub fn v(&self, i: usize) -> usize {
        i
    }

    pub fn u(&self, i: usize) -> usize {
        self.base_vertices + i
    }

    pub fn w(&self) -> usize {
        2 * self.base_vertices + 1
    }
}

/// `G1 ⊕ G2`: the disjoint union with every cross pair joined. Vertices of
/// `G2` are shifted up by `|V(G1)|`.
pub fn join(first: &Graph, second: &Graph) -> Graph {
    let n1 = first.vertex_count();
    let n2 = second.vertex_count();
    let mut edges = first.edges().to_vec();
    edges.extend(second.edges().iter().map(|&(i, j)| (i + n1, j + n1)));
    for i in 1..=n1 {
        edges.extend((1..=n2).map(|j| (i, n1 + j)));
    }
    Graph::from_generated(n1 + n2, edges)
}

/// The diameter `μ(G)` must have, `min(max(2, D(G)), 4)`.
///
/// Only defined here for connected graphs without isolated vertices; anything
/// else is rejected.
pub fn predicted_mycielskian_diameter(graph: &Graph) -> Result<usize> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    match graph.diameter() {
        Diameter::Infinite => Err(Error::Disconnected),
        Diameter::Finite(d) => Ok(d.clamp(2, 4)),
    }
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    /// Path of length `n` (`n + 1` vertices), `n >= 1`.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Star with `n >= 1` leaves; the center is vertex 1.
    Star(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// `K_{n,m}` with parts `1..=n` and `n+1..=n+m`, `n, m >= 1`.
    CompleteBipartite(usize, usize),
    /// Join of two non-join specs.
    Join(Box<GeneratorSpec>, Box<GeneratorSpec>),
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        let below = |family: &str, min: usize, got: usize| {
            Err(Error::precondition(format!(
                "{family} needs a parameter of at least {min}, got {got}"
            )))
        };
        match *self {
            GeneratorSpec::Path(n) if n < 1 => below("path", 1, n),
            GeneratorSpec::Cycle(n) if n < 3 => below("cycle", 3, n),
            GeneratorSpec::Star(n) if n < 1 => below("star", 1, n),
            GeneratorSpec::Complete(n) if n < 1 => below("complete", 1, n),
            GeneratorSpec::CompleteBipartite(n, m) if n.min(m) < 1 => below("kbip", 1, n.min(m)),
            GeneratorSpec::Join(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }
}

/// Builds the graph a [`GeneratorSpec`] describes.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    spec.validate()?;
    let graph = match *spec {
        GeneratorSpec::Path(n) => {
            Graph::from_generated(n + 1, (1..=n).map(|i| (i, i + 1)).collect())
        }
        GeneratorSpec::Cycle(n) => {
            let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            edges.push((1, n));
            Graph::from_generated(n, edges)
        }
        GeneratorSpec::Star(n) => {
            Graph::from_generated(n + 1, (2..=n + 1).map(|j| (1, j)).collect())
        }
        GeneratorSpec::Complete(n) => Graph::from_generated(
            n,
            (1..=n)
                .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
                .collect(),
        ),
        GeneratorSpec::CompleteBipartite(n, m) => join(&Graph::empty(n)?, &Graph::empty(m)?),
        GeneratorSpec::Join(ref a, ref b) => join(&generate(a)?, &generate(b)?),
    };
    Ok(graph)
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Path(n) => write!(f, "path:{n}"),
            GeneratorSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GeneratorSpec::Star(n) => write!(f, "star:{n}"),
            GeneratorSpec::Complete(n) => write!(f, "complete:{n}"),
            GeneratorSpec::CompleteBipartite(n, m) => write!(f, "kbip:{n},{m}"),
            GeneratorSpec::Join(a, b) => write!(f, "join:{a}+{b}"),
        }
    }
}

/// Parses `path:N`, `cycle:N`, `star:N`, `complete:N`, `kbip:N,M` and
/// `join:SPEC+SPEC`. Parameter minimums are checked here too.
impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let spec = parse_spec(s, 0, true)?;
        spec.validate().map_err(|e| Error::Spec {
            position: 0,
            message: e.to_string(),
        })?;
        Ok(spec)
    }
}

fn parse_spec(s: &str, offset: usize, allow_join: bool) -> Result<GeneratorSpec> {
    let err = |position: usize, message: String| Error::Spec {
        position: offset + position,
        message,
    };
    let (family, args) = s
        .split_once(':')
        .ok_or_else(|| err(0, format!("expected FAMILY:ARGS, found {s:?}")))?;
    let args_at = family.len() + 1;
    let number = |text: &str, at: usize| {
        text.trim().parse::<usize>().map_err(|_| {
            err(
                at,
                format!("expected a non-negative integer, found {text:?}"),
            )
        })
    };
    match family {
        "path" => Ok(GeneratorSpec::Path(number(args, args_at)?)),
        "cycle" => Ok(GeneratorSpec::Cycle(number(args, args_at)?)),
        "star" => Ok(GeneratorSpec::Star(number(args, args_at)?)),
        "complete" => Ok(GeneratorSpec::Complete(number(args, args_at)?)),
        "kbip" => {
            let (a, b) = args
                .split_once(',')
                .ok_or_else(|| err(args_at, format!("kbip expects N,M, found {args:?}")))?;
            Ok(GeneratorSpec::CompleteBipartite(
                number(a, args_at)?,
                number(b, args_at + a.len() + 1)?,
            ))
        }
        "join" if allow_join => {
            let (a, b) = args
                .split_once('+')
                .ok_or_else(|| err(args_at, format!("join expects SPEC+SPEC, found {args:?}")))?;
            Ok(GeneratorSpec::Join(
                Box::new(parse_spec(a, offset + args_at, false)?),
                Box::new(parse_spec(b, offset + args_at + a.len() + 1, false)?),
            ))
        }
        "join" => Err(err(0, "nested joins are not supported".into())),
        other => Err(err(0, format!("unknown graph family {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    fn is_c5(g: &Graph) -> bool {
        g.vertex_count() == 5
            && g.edge_count() == 5
            && g.is_connected()
            && g.vertices().all(|v| g.degree(v).unwrap() == 2)
    }

    #[test]
    fn mycielskian_examples() {
        assert!(is_c5(&mycielskian(&spec("path:1"))));

        let m = mycielskian(&spec("path:2"));
        assert_eq!((m.vertex_count(), m.edge_count()), (7, 9));

        let m = mycielskian(&Graph::empty(1).unwrap());
        assert_eq!((m.vertex_count(), m.edge_count()), (3, 1));
        assert_eq!(m.edges(), &[(2, 3)]);
        assert!(!m.is_connected());
    }

    #[test]
    fn mycielskian_layout_edges() {
        // P_2 = v1 v2 v3: u1 ~ v2, u2 ~ v1, v3, u3 ~ v2, all u ~ w.
        let m = mycielskian(&spec("path:2"));
        let l = MycielskianLayout::new(3);
        for (a, b) in [
            (l.v(1), l.v(2)),
            (l.v(2), l.v(3)),
            (l.u(1), l.v(2)),
            (l.u(2), l.v(1)),
            (l.u(2), l.v(3)),
            (l.u(3), l.v(2)),
            (l.u(1), l.w()),
            (l.u(2), l.w()),
            (l.u(3), l.w()),
        ] {
            assert!(m.has_edge(a, b), "missing {a}-{b}");
        }
    }

    #[test]
    fn join_examples() {
        let j = join(&spec("path:2"), &spec("path:2"));
        assert_eq!((j.vertex_count(), j.edge_count()), (6, 13));

        let k1 = Graph::empty(1).unwrap();
        assert_eq!(join(&k1, &k1).edges(), &[(1, 2)]);

        let kb = join(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap());
        assert_eq!(kb, spec("kbip:2,3"));
    }

    #[test]
    fn generator_examples() {
        assert_eq!(spec("path:2").edges(), &[(1, 2), (2, 3)]);
        let c = spec("cycle:5");
        assert_eq!((c.vertex_count(), c.edge_count()), (5, 5));
        let s = spec("star:3");
        assert_eq!((s.vertex_count(), s.edge_count()), (4, 3));
        assert_eq!(s.distance_distribution().counts(), &[3, 3]);
        assert_eq!(spec("complete:4").edge_count(), 6);
        assert_eq!(spec("complete:1").vertex_count(), 1);
        let k = spec("kbip:2,2");
        assert_eq!((k.vertex_count(), k.edge_count()), (4, 4));
        let j = spec("join:path:2+path:2");
        assert_eq!((j.vertex_count(), j.edge_count()), (6, 13));
    }

    #[test]
    fn generator_minimums() {
        assert!("cycle:2".parse::<GeneratorSpec>().is_err());
        assert!("path:0".parse::<GeneratorSpec>().is_err());
        assert!("star:0".parse::<GeneratorSpec>().is_err());
        assert!("complete:0".parse::<GeneratorSpec>().is_err());
        assert!("kbip:0,3".parse::<GeneratorSpec>().is_err());
        assert!(generate(&GeneratorSpec::Cycle(2)).is_err());
    }

    #[test]
    fn spec_grammar_errors_carry_positions() {
        let pos = |s: &str| match s.parse::<GeneratorSpec>() {
            Err(Error::Spec { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("wheel:5"), 0);
        assert_eq!(pos("path:x"), 5);
        assert_eq!(pos("kbip:2,y"), 7);
        assert_eq!(pos("join:path:2+cycle:q"), 18);
        assert_eq!(pos("join:join:path:1+path:1+path:1"), 5);
        assert_eq!(pos("path5"), 0);
    }

    #[test]
    fn spec_display_roundtrip() {
        for s in [
            "path:3",
            "cycle:7",
            "star:2",
            "complete:5",
            "kbip:2,9",
            "join:star:3+cycle:4",
        ] {
            assert_eq!(s.parse::<GeneratorSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn predicted_diameters() {
        assert_eq!(predicted_mycielskian_diameter(&spec("path:5")).unwrap(), 4);
        assert_eq!(
            predicted_mycielskian_diameter(&spec("complete:4")).unwrap(),
            2
        );
        assert_eq!(predicted_mycielskian_diameter(&spec("path:2")).unwrap(), 2);
        assert_eq!(mycielskian(&spec("path:5")).diameter(), Diameter::Finite(4));
        assert_eq!(
            predicted_mycielskian_diameter(&Graph::from_edge_list(3, [(1, 2)]).unwrap()),
            Err(Error::IsolatedVertex(3))
        );
        assert_eq!(
            predicted_mycielskian_diameter(&Graph::from_edge_list(4, [(1, 2), (3, 4)]).unwrap()),
            Err(Error::Disconnected)
        );
        assert_eq!(
            predicted_mycielskian_diameter(&Graph::empty(1).unwrap()),
            Err(Error::IsolatedVertex(1))
        );
    }
}
