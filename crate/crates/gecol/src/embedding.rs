//! Plane graphs as rotation systems. Faces are derived by tracing the
//! next-edge rule (arrive at v via e, leave via the successor of e in v's
//! rotation); the Euler formula is the acceptance gate, so higher-genus
//! rotation systems are rejected rather than silently accepted.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("graph must be connected for a spherical embedding")]
    Disconnected,
    #[error("rotation at vertex {vertex} is not a permutation of its incident edges")]
    InvalidRotation { vertex: usize },
    #[error("rotation has {0} vertex entries, graph has {1} vertices")]
    RotationLength(usize, usize),
    #[error(
        "rotation describes a non-spherical embedding: V - E + F = {0} - {1} + {2} != 2"
    )]
    NonSpherical(usize, usize, usize),
}

/// A face as its closed walk of directed edge traversals, canonically
/// rotated to start at the smallest directed edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<(usize, usize)>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    /// Number of times the face walk passes through `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.walk.iter().filter(|&&(t, _)| t == v).count()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.walk.iter().map(|&(t, _)| t).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn is_simple(&self) -> bool {
        !self.walk.is_empty() && self.vertices().len() == self.degree()
    }
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    /// face id containing each directed edge, keyed (tail, head)
    dart_face: BTreeMap<(usize, usize), usize>,
}

/// Summary row for one face, as reported by `face_profile`.
#[derive(Debug, Clone, Serialize)]
pub struct FaceInfo {
    pub id: usize,
    pub degree: usize,
    pub vertices: Vec<(usize, usize)>, // (vertex, multiplicity)
    pub simple: bool,
}

impl PlaneGraph {
    pub fn build(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<PlaneGraph, EmbeddingError> {
        if !graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(EmbeddingError::RotationLength(rotation.len(), n));
        }
        for v in 0..n {
            let mut expected: Vec<usize> = graph
                .neighbors(v)
                .iter()
                .map(|&w| graph.edge_index(v, w).unwrap())
                .collect();
            expected.sort_unstable();
            let mut got = rotation[v].clone();
            got.sort_unstable();
            if got != expected {
                return Err(EmbeddingError::InvalidRotation { vertex: v });
            }
        }
        // trace faces from every untraced directed edge, smallest first
        let mut darts: Vec<(usize, usize)> = Vec::new();
        for &(u, v) in graph.edges() {
            darts.push((u, v));
            darts.push((v, u));
        }
        darts.sort_unstable();
        let mut dart_face = BTreeMap::new();
        let mut faces = Vec::new();
        for &start in &darts {
            if dart_face.contains_key(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                walk.push(cur);
                dart_face.insert(cur, faces.len());
                cur = next_dart(&graph, &rotation, cur);
                if cur == start {
                    break;
                }
            }
            faces.push(Face { walk });
        }
        if n == 1 {
            // a single vertex bounds one empty face on the sphere
            faces.push(Face { walk: Vec::new() });
        }
        let f = faces.len();
        let e = graph.edge_count();
        if n + f != e + 2 {
            return Err(EmbeddingError::NonSpherical(n, e, f));
        }
        Ok(PlaneGraph {
            graph,
            rotation,
            faces,
            dart_face,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn multiplicity(&self, v: usize, face: usize) -> usize {
        self.faces[face].multiplicity(v)
    }

    /// Face on the side of the directed edge (tail, head).
    pub fn face_of_dart(&self, tail: usize, head: usize) -> Option<usize> {
        self.dart_face.get(&(tail, head)).copied()
    }

    pub fn face_profile(&self) -> Vec<FaceInfo> {
        self.faces
            .iter()
            .enumerate()
            .map(|(id, f)| FaceInfo {
                id,
                degree: f.degree(),
                vertices: f
                    .vertices()
                    .into_iter()
                    .map(|v| (v, f.multiplicity(v)))
                    .collect(),
                simple: f.is_simple(),
            })
            .collect()
    }

    /// One (face, face) adjacency instance per edge: the faces on its two
    /// sides, as an ordered pair (min, max). Bridges pair a face with itself.
    pub fn face_adjacencies(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let a = self.dart_face[&(u, v)];
                let b = self.dart_face[&(v, u)];
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

fn next_dart(g: &Graph, rotation: &[Vec<usize>], (u, v): (usize, usize)) -> (usize, usize) {
    let arrived = g.edge_index(u, v).unwrap();
    let rot = &rotation[v];
    let pos = rot.iter().position(|&e| e == arrived).unwrap();
    let next_edge = rot[(pos + 1) % rot.len()];
    let (a, b) = g.edges()[next_edge];
    let w = if a == v { b } else { a };
    (v, w)
}

/// Embedding JSON: {"n": int, "edges": [[u,v],...], "rotation": {"v": [edge
/// indices in cyclic order], ...}}.
#[derive(Debug, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub rotation: BTreeMap<String, Vec<usize>>,
}

impl EmbeddingJson {
    pub fn build(&self) -> Result<PlaneGraph, String> {
        let graph = Graph::new(self.n, &self.edges).map_err(|e| e.to_string())?;
        let mut rotation = vec![Vec::new(); self.n];
        for (k, order) in &self.rotation {
            let v: usize = k.parse().map_err(|_| format!("bad vertex key {:?}", k))?;
            if v >= self.n {
                return Err(format!("rotation vertex {} out of range", v));
            }
            rotation[v] = order.clone();
        }
        PlaneGraph::build(graph, rotation).map_err(|e| e.to_string())
    }

    pub fn from_plane_graph(pg: &PlaneGraph) -> EmbeddingJson {
        EmbeddingJson {
            n: pg.graph().vertex_count(),
            edges: pg.graph().edges().to_vec(),
            rotation: pg
                .rotation()
                .iter()
                .enumerate()
                .map(|(v, r)| (v.to_string(), r.clone()))
                .collect(),
        }
    }
}

/// The unique (up to reflection) rotation system of a cycle or tree-like
/// graph with maximum degree <= 2, and more generally any rotation where
/// incident edges are taken in sorted order. Only a valid embedding for
/// graphs this happens to embed spherically, which the builder checks.
pub fn sorted_rotation(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&w| g.edge_index(v, w).unwrap())
                .collect()
        })
        .collect()
}

/// Standard planar embedding of K4: vertex 3 inside triangle 0-1-2.
pub fn k4_embedding() -> PlaneGraph {
    let g = crate::graph::complete_graph(4);
    let faces = vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 1],
        vec![1, 3, 2],
    ];
    let rotation = rotation_from_faces(&g, &faces);
    PlaneGraph::build(g, rotation).expect("standard K4 embedding is planar")
}

/// Reconstruct a rotation system from a consistently oriented face list:
/// every directed edge must appear exactly once across the face cycles.
/// The resulting embedding traces exactly the given faces.
pub fn rotation_from_faces(g: &Graph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    // successor of an arriving edge in each vertex's rotation
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let u = face[i];
            let v = face[(i + 1) % k];
            let w = face[(i + 2) % k];
            let arrived = g.edge_index(u, v).expect("face edge exists");
            let leave = g.edge_index(v, w).expect("face edge exists");
            succ[v].insert(arrived, leave);
        }
    }
    (0..n)
        .map(|v| {
            let mut rot = Vec::with_capacity(g.degree(v));
            if let Some((&first, _)) = succ[v].iter().next() {
                let mut e = first;
                loop {
                    rot.push(e);
                    e = succ[v][&e];
                    if e == first {
                        break;
                    }
                }
            }
            rot
        })
        .collect()
}

/// The cube Q3 with its standard spherical embedding (6 quadrilateral faces).
pub fn cube_embedding() -> PlaneGraph {
    let g = crate::graph::cube_graph();
    let faces = vec![
        vec![0, 1, 3, 2],
        vec![1, 0, 4, 5],
        vec![3, 1, 5, 7],
        vec![2, 3, 7, 6],
        vec![0, 2, 6, 4],
        vec![4, 6, 7, 5],
    ];
    let rotation = rotation_from_faces(&g, &faces);
    PlaneGraph::build(g, rotation).expect("cube embedding is spherical")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn cycle_has_two_faces() {
        let g = cycle_graph(4);
        let pg = PlaneGraph::build(g, sorted_rotation(&cycle_graph(4))).unwrap();
        assert_eq!(pg.face_count(), 2);
        assert!(pg.faces().iter().all(|f| f.degree() == 4));
        for info in pg.face_profile() {
            assert!(info.simple);
        }
    }

    #[test]
    fn k4_embedding_faces() {
        let pg = k4_embedding();
        assert_eq!(pg.face_count(), 4);
        assert!(pg.faces().iter().all(|f| f.degree() == 3));
        // each face pair adjacent exactly once -> 6 adjacency instances
        let adj = pg.face_adjacencies();
        assert_eq!(adj.len(), 6);
        let mut sorted = adj.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
    }

    #[test]
    fn cube_embedding_faces() {
        let pg = cube_embedding();
        assert_eq!(pg.face_count(), 6);
        assert!(pg.faces().iter().all(|f| f.degree() == 4));
        assert!(pg.face_profile().iter().all(|i| i.simple));
    }

    #[test]
    fn path_single_face_with_multiplicity() {
        let g = path_graph(3);
        let pg = PlaneGraph::build(g.clone(), sorted_rotation(&g)).unwrap();
        assert_eq!(pg.face_count(), 1);
        assert_eq!(pg.faces()[0].degree(), 4);
        assert_eq!(pg.multiplicity(1, 0), 2);
        assert!(!pg.faces()[0].is_simple());
    }

    #[test]
    fn bowtie_outer_face_multiplicity() {
        // two triangles sharing vertex 2
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        // rotation at the cut vertex interleaves the two triangles
        let rot = |v: usize, ws: &[usize]| -> Vec<usize> {
            ws.iter().map(|&w| g.edge_index(v, w).unwrap()).collect()
        };
        let rotation = vec![
            rot(0, &[1, 2]),
            rot(1, &[2, 0]),
            rot(2, &[0, 1, 3, 4]),
            rot(3, &[4, 2]),
            rot(4, &[2, 3]),
        ];
        let pg = PlaneGraph::build(g, rotation).unwrap();
        assert_eq!(pg.face_count(), 3);
        let outer = (0..3)
            .find(|&f| pg.faces()[f].degree() == 6)
            .expect("outer face has degree 6");
        assert_eq!(pg.multiplicity(2, outer), 2);
        assert!(!pg.faces()[outer].is_simple());
    }

    #[test]
    fn invariants_hold_on_assorted_embeddings() {
        let graphs: Vec<(Graph, Vec<Vec<usize>>)> = vec![
            (cycle_graph(6), sorted_rotation(&cycle_graph(6))),
            (path_graph(5), sorted_rotation(&path_graph(5))),
            (star_graph(4), sorted_rotation(&star_graph(4))),
        ];
        for (g, rotation) in graphs {
            let pg = PlaneGraph::build(g.clone(), rotation.clone()).unwrap();
            let total: usize = pg.faces().iter().map(|f| f.degree()).sum();
            assert_eq!(total, 2 * g.edge_count());
            for v in 0..g.vertex_count() {
                let mult: usize = (0..pg.face_count()).map(|f| pg.multiplicity(v, f)).sum();
                assert_eq!(mult, g.degree(v));
            }
            // mirror embedding preserves the face degree multiset
            let mirrored: Vec<Vec<usize>> = rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect();
            let mg = PlaneGraph::build(g, mirrored).unwrap();
            let mut a: Vec<usize> = pg.faces().iter().map(|f| f.degree()).collect();
            let mut b: Vec<usize> = mg.faces().iter().map(|f| f.degree()).collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            PlaneGraph::build(g, vec![vec![0], vec![0], vec![1], vec![1]]),
            Err(EmbeddingError::Disconnected)
        ));

        let g = cycle_graph(3);
        let bad = vec![vec![0, 0], vec![0, 2], vec![1, 2]];
        assert!(matches!(
            PlaneGraph::build(g, bad),
            Err(EmbeddingError::InvalidRotation { vertex: 0 })
        ));

        // K5 has no spherical rotation system; any rotation must fail Euler
        let k5 = complete_graph(5);
        let res = PlaneGraph::build(k5.clone(), sorted_rotation(&k5));
        assert!(matches!(res, Err(EmbeddingError::NonSpherical(..))));
    }

    #[test]
    fn bridge_is_self_adjacent() {
        let g = path_graph(2);
        let pg = PlaneGraph::build(g.clone(), sorted_rotation(&g)).unwrap();
        assert_eq!(pg.face_adjacencies(), vec![(0, 0)]);
    }

    #[test]
    fn embedding_json_roundtrip() {
        let pg = k4_embedding();
        let j = EmbeddingJson::from_plane_graph(&pg);
        let s = serde_json::to_string(&j).unwrap();
        let back: EmbeddingJson = serde_json::from_str(&s).unwrap();
        let pg2 = back.build().unwrap();
        assert_eq!(pg2.face_count(), 4);
    }
}
