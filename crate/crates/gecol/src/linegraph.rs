//! Line graph construction with the edge-to-vertex correspondence kept
//! explicit, since edge coloring questions are answered on the line graph.

use crate::graph::Graph;

/// The line graph of a source graph. Vertex `i` of the line graph represents
/// edge `i` of the source (in sorted edge order), so the bijection is the
/// identity on indices; `edge_of` recovers the source endpoints.
#[derive(Debug, Clone)]
pub struct LineGraphMap {
    pub line_graph: Graph,
    edges: Vec<(usize, usize)>,
}

impl LineGraphMap {
    /// Source edge represented by line-graph vertex `v`.
    pub fn edge_of(&self, v: usize) -> (usize, usize) {
        self.edges[v]
    }

    pub fn vertex_of(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        g.edge_index(u, v)
    }
}

pub fn line_graph(g: &Graph) -> LineGraphMap {
    let m = g.edge_count();
    let mut lg_edges = Vec::new();
    for a in 0..m {
        let (u1, v1) = g.edges()[a];
        for b in a + 1..m {
            let (u2, v2) = g.edges()[b];
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                lg_edges.push((a, b));
            }
        }
    }
    LineGraphMap {
        line_graph: Graph::new(m, &lg_edges).unwrap(),
        edges: g.edges().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn small_examples() {
        // P3 -> single edge
        let lg = line_graph(&path_graph(3)).line_graph;
        assert_eq!(lg.vertex_count(), 2);
        assert_eq!(lg.edge_count(), 1);

        // triangle is its own line graph
        let lg = line_graph(&cycle_graph(3)).line_graph;
        assert_eq!(lg, cycle_graph(3));

        // K_{1,3} -> K3, checked against a brute-force adjacency oracle
        let star = star_graph(3);
        let lg = line_graph(&star).line_graph;
        assert_eq!(lg, complete_graph(3));
        for a in 0..3 {
            for b in a + 1..3 {
                let (u1, v1) = star.edges()[a];
                let (u2, v2) = star.edges()[b];
                let share = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
                assert_eq!(share, lg.has_edge(a, b));
            }
        }
    }

    #[test]
    fn edge_count_identity() {
        // |E(L(G))| = sum_v C(d(v), 2), on a few fixed and pseudorandom graphs
        let mut graphs = vec![
            petersen_graph(),
            cube_graph(),
            complete_graph(5),
            complete_bipartite(3, 4),
        ];
        let mut seed = 12345u64;
        for n in 4..=10usize {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if seed >> 33 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            graphs.push(Graph::new(n, &edges).unwrap());
        }
        for g in graphs {
            let expected: usize = (0..g.vertex_count())
                .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
                .sum();
            let lg = line_graph(&g);
            assert_eq!(lg.line_graph.edge_count(), expected);
            assert_eq!(lg.line_graph.vertex_count(), g.edge_count());
            if g.edge_count() > 0 && g.max_degree() >= 1 {
                assert!(lg.line_graph.max_degree() <= 2 * g.max_degree() - 2);
            }
        }
    }
}
