//! Graph and embedding generators for catalogs, sweeps and tests.

use crate::embedding::{rotation_from_faces, PlaneGraph};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// All labeled simple graphs on n vertices, edge subsets in mask order.
/// 2^(n choose 2) graphs; keep n small.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 31, "too many labeled graphs to enumerate");
    (0u64..(1 << pairs.len())).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_labeled_graphs(n).filter(|g| g.is_connected()).collect()
}

/// The dodecahedron as the generalized Petersen graph GP(10, 2):
/// 3-regular, planar, girth 5.
pub fn dodecahedron_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..10 {
        edges.push((i, (i + 1) % 10));
        edges.push((i, i + 10));
        edges.push((i + 10, (i + 2) % 10 + 10));
    }
    Graph::new(20, &edges).unwrap()
}

/// A uniformly-attached random tree on n vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::new(n, &edges).unwrap()
}

/// A random tree whose maximum degree lands in [lo, hi] (rejection sampled).
pub fn random_tree_with_max_degree<R: Rng>(
    rng: &mut R,
    n: usize,
    lo: usize,
    hi: usize,
) -> Graph {
    loop {
        let g = random_tree(rng, n);
        if (lo..=hi).contains(&g.max_degree()) {
            return g;
        }
    }
}

/// A random connected 2-degenerate graph: each new vertex attaches to one or
/// two existing vertices. `max_degree` caps degrees during construction.
pub fn random_2_degenerate<R: Rng>(rng: &mut R, n: usize, max_degree: usize) -> Graph {
    assert!(n >= 1 && max_degree >= 2);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut deg = vec![0usize; n];
    for v in 1..n {
        let mut candidates: Vec<usize> = (0..v).filter(|&u| deg[u] < max_degree).collect();
        candidates.shuffle(rng);
        let want = if candidates.len() >= 2 && rng.gen_bool(0.6) {
            2
        } else {
            1
        };
        for &u in candidates.iter().take(want) {
            edges.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg[v] == 0 {
            // degree cap exhausted everywhere; fall back to the youngest vertex
            let u = v - 1;
            edges.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let g = Graph::new(n, &edges).unwrap();
    debug_assert!(g.degeneracy().0 <= 2);
    g
}

/// A random stacked triangulation (Apollonian network) on n >= 3 vertices,
/// built face by face so the rotation system is planar by construction.
pub fn random_stacked_triangulation<R: Rng>(rng: &mut R, n: usize) -> PlaneGraph {
    assert!(n >= 3);
    let mut faces: Vec<Vec<usize>> = vec![vec![0, 1, 2], vec![0, 2, 1]];
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n {
        let fi = rng.gen_range(0..faces.len());
        let face = faces.swap_remove(fi);
        let (a, b, c) = (face[0], face[1], face[2]);
        faces.push(vec![a, b, v]);
        faces.push(vec![b, c, v]);
        faces.push(vec![c, a, v]);
        edges.push((a, v));
        edges.push((b, v));
        edges.push((c, v));
    }
    let g = Graph::new(n, &edges).unwrap();
    let rotation = rotation_from_faces(&g, &faces);
    PlaneGraph::build(g, rotation).expect("stacked triangulation is planar by construction")
}

/// A random tree with a uniformly shuffled rotation at every vertex; any
/// rotation system of a tree is spherical.
pub fn random_tree_embedding<R: Rng>(rng: &mut R, n: usize) -> PlaneGraph {
    let g = random_tree(rng, n.max(1));
    let mut rotation: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&w| g.edge_index(v, w).unwrap())
                .collect()
        })
        .collect();
    for r in &mut rotation {
        r.shuffle(rng);
    }
    PlaneGraph::build(g, rotation).expect("tree rotations are always spherical")
}

/// A random connected plane embedding: a stacked triangulation, a tree, or
/// a triangulation with some stacked vertices removed... kept simple: mix of
/// the two exact constructions.
pub fn random_plane_embedding<R: Rng>(rng: &mut R, n: usize) -> PlaneGraph {
    if n >= 4 && rng.gen_bool(0.5) {
        random_stacked_triangulation(rng, n)
    } else {
        random_tree_embedding(rng, n)
    }
}

/// The k-gonal prism with its standard spherical embedding: two k-faces and
/// k squares. Vertices 0..k are the top cycle, k..2k the bottom.
pub fn prism_embedding(k: usize) -> PlaneGraph {
    assert!(k >= 3);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    let g = Graph::new(2 * k, &edges).unwrap();
    let mut faces = vec![
        (0..k).collect::<Vec<_>>(),
        (0..k).rev().map(|i| k + i).collect::<Vec<_>>(),
    ];
    for i in 0..k {
        let j = (i + 1) % k;
        faces.push(vec![j, i, k + i, k + j]);
    }
    let rotation = rotation_from_faces(&g, &faces);
    PlaneGraph::build(g, rotation).expect("prism embedding is spherical")
}
