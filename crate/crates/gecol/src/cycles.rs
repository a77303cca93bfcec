//! Cycle structure queries: girth, exhaustive cycle enumeration with
//! canonical-start deduplication, adjacent short cycles, alternating cycles.
//!
//! The enumerative searches are exponential in the worst case and meant for
//! desk-scale graphs.

use crate::graph::Graph;

/// Girth via BFS from every vertex; `None` means the graph is a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w && parent[w] != v {
                    // non-tree edge: closes a cycle through the root region
                    let len = dist[v] + dist[w] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// All cycles of length at most `max_len`, each exactly once, as vertex
/// sequences. Canonical form: the smallest vertex starts the cycle and its
/// smaller neighbor comes second (kills rotations and reflections).
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend(g, start, max_len, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out
}

fn extend(
    g: &Graph,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && path[1] < *path.last().unwrap() {
            out.push(path.clone());
        }
        if w > start && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend(g, start, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len())
        .map(|i| {
            let u = cycle[i];
            let v = cycle[(i + 1) % cycle.len()];
            (u.min(v), u.max(v))
        })
        .collect()
}

/// Search for an i-cycle adjacent (edge-sharing) to a distinct j-cycle with
/// 3 <= i <= s and 3 <= j <= t. Returns the witness pair when found.
pub fn find_adjacent_short_cycles(
    g: &Graph,
    s: usize,
    t: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let (s, t) = (s.min(t), s.max(t));
    let long = enumerate_cycles(g, t);
    let mut edge_sets: Vec<Vec<(usize, usize)>> = Vec::with_capacity(long.len());
    for c in &long {
        edge_sets.push(cycle_edges(c));
    }
    for (a, ca) in long.iter().enumerate() {
        if ca.len() > s {
            continue;
        }
        for (b, cb) in long.iter().enumerate() {
            if b == a {
                continue;
            }
            let shares = edge_sets[a].iter().any(|e| edge_sets[b].contains(e));
            if shares {
                return Some((ca.clone(), cb.clone()));
            }
        }
    }
    None
}

pub fn has_adjacent_short_cycles(g: &Graph, s: usize, t: usize) -> bool {
    find_adjacent_short_cycles(g, s, t).is_some()
}

/// All even cycles in which one alternating vertex class has degree exactly
/// `i` in `g`. Cycles are deduplicated up to rotation and reflection.
pub fn alternating_cycles(g: &Graph, i: usize) -> Vec<Vec<usize>> {
    enumerate_cycles(g, g.vertex_count())
        .into_iter()
        .filter(|c| {
            c.len() % 2 == 0
                && ((0..c.len()).step_by(2).all(|p| g.degree(c[p]) == i)
                    || (1..c.len()).step_by(2).all(|p| g.degree(c[p]) == i))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&complete_graph(4)), Some(3));
        assert_eq!(girth(&path_graph(7)), None);
        assert_eq!(girth(&star_graph(5)), None);
        assert_eq!(girth(&petersen_graph()), Some(5));
        assert_eq!(girth(&cube_graph()), Some(4));
        assert_eq!(girth(&cycle_graph(9)), Some(9));
    }

    #[test]
    fn girth_matches_enumeration_oracle_small() {
        // all graphs on <= 6 vertices (labeled), plus spot n = 8 checks above
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                let oracle = enumerate_cycles(&g, n).iter().map(|c| c.len()).min();
                assert_eq!(girth(&g), oracle, "n={} mask={}", n, mask);
            }
        }
    }

    #[test]
    fn cycle_counts() {
        // K4 has 4 triangles and 3 four-cycles
        let cs = enumerate_cycles(&complete_graph(4), 4);
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 3);
        // C5 has exactly one cycle
        assert_eq!(enumerate_cycles(&cycle_graph(5), 5).len(), 1);
    }

    #[test]
    fn adjacent_short_cycles_examples() {
        let diamond = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let w = find_adjacent_short_cycles(&diamond, 3, 3);
        let (a, b) = w.expect("diamond has two triangles sharing an edge");
        assert_eq!(a.len(), 3);
        assert_eq!(b.len(), 3);

        assert!(!has_adjacent_short_cycles(&cycle_graph(5), 4, 7));

        // cube: adjacent square faces share edges
        assert!(has_adjacent_short_cycles(&cube_graph(), 4, 4));
        // but the cube has no triangles
        assert!(!has_adjacent_short_cycles(&cube_graph(), 3, 3));
    }

    #[test]
    fn alternating_cycles_examples() {
        let c4 = cycle_graph(4);
        assert_eq!(alternating_cycles(&c4, 2), vec![vec![0, 1, 2, 3]]);
        assert!(alternating_cycles(&c4, 3).is_empty());

        // K_{2,3}: all 4-cycles alternate through the two degree-3 vertices
        let k23 = complete_bipartite(2, 3);
        let four_cycles = enumerate_cycles(&k23, 4);
        assert_eq!(four_cycles.len(), 3);
        let alt = alternating_cycles(&k23, 3);
        assert_eq!(alt.len(), 3);
    }
}
