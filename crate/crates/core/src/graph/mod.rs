//! Simple undirected graphs, family generators and hop distances.

mod distance;
mod families;

pub use distance::{apsp, DistanceMatrix};
pub use families::{generate, FamilySpec};

use std::collections::{BTreeSet, VecDeque};

use crate::GraphError;

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for index in [u, v] {
                if index >= n {
                    return Err(GraphError::VertexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adjacency: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adjacency, edge_count, labels: None })
    }

    /// Attaches display labels. Labels are cosmetic; indices stay dense.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].unwrap() + 1;
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(next);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// True iff a single BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Cartesian product. Vertex `(a, b)` has index `a * h.n() + b`;
    /// `(a1,b1) ~ (a2,b2)` iff one coordinate agrees and the other is an edge.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let (gn, hn) = (self.n(), h.n());
        let index = |a: usize, b: usize| a * hn + b;
        let mut edges = Vec::with_capacity(self.edge_count * hn + h.edge_count * gn);
        for a in 0..gn {
            for (b1, b2) in h.edges() {
                edges.push((index(a, b1), index(a, b2)));
            }
        }
        for (a1, a2) in self.edges() {
            for b in 0..hn {
                edges.push((index(a1, b), index(a2, b)));
            }
        }
        let labels = (0..gn)
            .flat_map(|a| (0..hn).map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", self.label(a), h.label(b)))
            .collect();
        Graph::from_edges(gn * hn, edges)
            .expect("product of valid graphs is valid")
            .with_labels(labels)
    }

    /// `k`-fold Cartesian power, `k >= 1`.
    pub fn cartesian_power(&self, k: usize) -> Graph {
        assert!(k >= 1, "power must be positive");
        (1..k).fold(self.clone(), |acc, _| acc.cartesian_product(self))
    }
}

/// Parses `u v` lines (0-indexed) into a graph. Blank lines and lines starting
/// with `#` are skipped; trailing `# ...` comments are allowed.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("expected two vertex indices, found {:?}", line),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| GraphError::Parse {
                line: line_no,
                message: format!("not a vertex index: {:?}", s),
            })
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().ok_or(GraphError::Empty)?;
    Graph::from_edges(n, edges)
}
