//! Simple undirected graphs over dense integer vertex ids.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("orientation has {0} directions but the graph has {1} edges")]
    OrientationLength(usize, usize),
    #[error("direction ({0}, {1}) does not match the edge at its index")]
    OrientationMismatch(usize, usize),
}

/// A simple undirected graph. Edges are kept sorted as (min, max) pairs so
/// edge indices are deterministic across runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, &[]).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list; the position of an edge here is its edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Minimum-degree peeling. Returns the degeneracy k and the peeling
    /// order; every vertex has at most k neighbors later in the order.
    pub fn degeneracy(&self) -> (usize, Vec<usize>) {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut k = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            k = k.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        (k, order)
    }

    /// Whether some common neighbor completes edge {u, v} to a triangle.
    pub fn edge_on_triangle(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&w| w != v && self.has_edge(w, v))
    }

    pub fn is_path(&self) -> bool {
        if self.n == 0 || !self.is_connected() {
            return false;
        }
        let ones = (0..self.n).filter(|&v| self.degree(v) == 1).count();
        self.n == 1 || (ones == 2 && self.max_degree() <= 2)
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, m={})", self.n, self.edges.len())
    }
}

/// JSON edge-list form: {"n": int, "edges": [[u, v], ...]}.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::new(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

/// An orientation assigns each edge a direction (tail, head), indexed in
/// step with the parent graph's edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    dirs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Canonical orientation: every edge directed low endpoint -> high.
    pub fn canonical(g: &Graph) -> Orientation {
        Orientation {
            dirs: g.edges().to_vec(),
        }
    }

    pub fn from_dirs(g: &Graph, dirs: Vec<(usize, usize)>) -> Result<Orientation, GraphError> {
        if dirs.len() != g.edge_count() {
            return Err(GraphError::OrientationLength(dirs.len(), g.edge_count()));
        }
        for (i, &(t, h)) in dirs.iter().enumerate() {
            let (u, v) = g.edges()[i];
            if (t.min(h), t.max(h)) != (u, v) {
                return Err(GraphError::OrientationMismatch(t, h));
            }
        }
        Ok(Orientation { dirs })
    }

    pub fn dir(&self, edge_idx: usize) -> (usize, usize) {
        self.dirs[edge_idx]
    }

    pub fn dirs(&self) -> &[(usize, usize)] {
        &self.dirs
    }

    pub fn flip(&mut self, edge_idx: usize) {
        let (t, h) = self.dirs[edge_idx];
        self.dirs[edge_idx] = (h, t);
    }
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, &edges).unwrap()
}

pub fn star_graph(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

pub fn petersen_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer pentagon
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    Graph::new(10, &edges).unwrap()
}

pub fn cube_graph() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::new(8, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Graph::new(3, &[(0, 0)]),
            Err(GraphError::Loop(0))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange(5, 2))
        ));
    }

    #[test]
    fn degrees_and_indices() {
        let g = complete_graph(4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.edge_index(2, 1), g.edge_index(1, 2));
        assert!(g.edge_index(1, 2).is_some());
    }

    #[test]
    fn degeneracy_examples() {
        // any nonempty tree is 1-degenerate
        let (k, _) = path_graph(6).degeneracy();
        assert_eq!(k, 1);
        let (k, _) = star_graph(5).degeneracy();
        assert_eq!(k, 1);

        let (k, _) = complete_graph(4).degeneracy();
        assert_eq!(k, 3);

        // diamond: C4 plus one chord
        let diamond = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let (k, order) = diamond.degeneracy();
        assert_eq!(k, 2);
        // oracle: every subgraph (vertex subset) has min degree <= 2
        for mask in 1u32..16 {
            let verts: Vec<usize> = (0..4).filter(|&v| mask & (1 << v) != 0).collect();
            let min_deg = verts
                .iter()
                .map(|&v| {
                    verts
                        .iter()
                        .filter(|&&w| w != v && diamond.has_edge(v, w))
                        .count()
                })
                .min()
                .unwrap();
            assert!(min_deg <= 2);
        }
        // the order witnesses its own k
        let pos: Vec<usize> = {
            let mut pos = vec![0; 4];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        let witness = (0..4)
            .map(|v| {
                diamond
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| pos[w] > pos[v])
                    .count()
            })
            .max()
            .unwrap();
        assert_eq!(witness, k);
    }

    #[test]
    fn path_cycle_recognition() {
        assert!(path_graph(1).is_path());
        assert!(path_graph(5).is_path());
        assert!(!cycle_graph(5).is_path());
        assert!(cycle_graph(3).is_cycle());
        assert!(!path_graph(4).is_cycle());
        assert!(!star_graph(3).is_path());
    }

    #[test]
    fn connectivity() {
        assert!(petersen_graph().is_connected());
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
    }

    #[test]
    fn orientation_flip_and_validate() {
        let g = cycle_graph(4);
        let mut o = Orientation::canonical(&g);
        assert_eq!(o.dir(0), (0, 1));
        o.flip(0);
        assert_eq!(o.dir(0), (1, 0));
        // (3, 0) is edge (0, 3) reversed, so this one is fine
        assert!(Orientation::from_dirs(&g, vec![(0, 1), (3, 0), (1, 2), (2, 3)]).is_ok());
        // slot 1 must hold edge (0, 3), not (1, 2)
        assert!(Orientation::from_dirs(&g, vec![(0, 1), (1, 2), (1, 2), (2, 3)]).is_err());
        // wrong length
        assert!(Orientation::from_dirs(&g, vec![(0, 1)]).is_err());
    }

    #[test]
    fn graph_json_roundtrip() {
        let g = petersen_graph();
        let s = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
    }
}
