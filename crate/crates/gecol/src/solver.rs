//! Coloring algorithms: the verifier, the greedy single-vertex extension,
//! an exact backtracking decider, and the constructive peel-and-color route
//! for edge instances.

use crate::graph::Graph;
use crate::instance::{Coloring, ForbiddenAssignment, InstanceError, ListAssignment};
use crate::linegraph::line_graph;

/// Outcome of `verify_coloring`: valid, or the first violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Valid,
    /// c(tail) - c(head) equals f on this edge.
    EdgeViolation { edge: (usize, usize) },
    /// The vertex's color is outside its list.
    ListViolation { vertex: usize },
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid)
    }
}

/// Check a total coloring against every directed-edge constraint and,
/// when lists are given, list membership. Violations are reported in
/// vertex-then-edge order, first one wins.
pub fn verify_coloring(
    g: &Graph,
    fa: &ForbiddenAssignment,
    lists: Option<&ListAssignment>,
    c: &Coloring,
) -> Result<VerifyOutcome, InstanceError> {
    if let Some(v) = c.first_uncolored() {
        return Err(InstanceError::Incomplete(v));
    }
    if let Some(la) = lists {
        for v in 0..g.vertex_count() {
            if !la.contains(v, c.get(v).unwrap()) {
                return Ok(VerifyOutcome::ListViolation { vertex: v });
            }
        }
    }
    let group = &fa.group;
    for e in 0..g.edge_count() {
        let (tail, head) = fa.orientation.dir(e);
        let diff = group.sub_idx(c.get(tail).unwrap(), c.get(head).unwrap());
        if diff == fa.value_idx(e) {
            return Ok(VerifyOutcome::EdgeViolation {
                edge: (tail, head),
            });
        }
    }
    Ok(VerifyOutcome::Valid)
}

/// Extend a partial coloring at `v` with the first list color not forbidden
/// by any colored neighbor; uncolored neighbors impose nothing. `None`
/// means the forbidden set covers the whole list.
pub fn greedy_extend(
    g: &Graph,
    fa: &ForbiddenAssignment,
    la: &ListAssignment,
    c: &Coloring,
    v: usize,
) -> Option<u16> {
    debug_assert!(c.get(v).is_none(), "vertex {} already colored", v);
    let mut forbidden: Vec<u16> = Vec::with_capacity(g.degree(v));
    for &w in g.neighbors(v) {
        if let Some(cw) = c.get(w) {
            let e = g.edge_index(v, w).unwrap();
            forbidden.push(fa.forbidden_at(e, v, cw));
        }
    }
    la.list(v)
        .iter()
        .copied()
        .find(|x| !forbidden.contains(x))
}

/// Exact decision by backtracking in vertex index order, candidates in list
/// order. Returns the lexicographically first valid coloring, or `None`
/// after an exhaustive search.
pub fn solve_exact(
    g: &Graph,
    fa: &ForbiddenAssignment,
    la: &ListAssignment,
) -> Option<Coloring> {
    let n = g.vertex_count();
    // for each vertex, the earlier neighbors it must be checked against
    let earlier: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| w < v)
                .map(|&w| (w, g.edge_index(v, w).unwrap()))
                .collect()
        })
        .collect();
    let mut chosen = vec![0u16; n];
    if backtrack(g, fa, la, &earlier, &mut chosen, 0) {
        Some(Coloring::from_indices(chosen))
    } else {
        None
    }
}

fn backtrack(
    g: &Graph,
    fa: &ForbiddenAssignment,
    la: &ListAssignment,
    earlier: &[Vec<(usize, usize)>],
    chosen: &mut [u16],
    v: usize,
) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    'candidates: for &x in la.list(v) {
        for &(w, e) in &earlier[v] {
            if fa.forbidden_at(e, v, chosen[w]) == x {
                continue 'candidates;
            }
        }
        chosen[v] = x;
        if backtrack(g, fa, la, earlier, chosen, v + 1) {
            return true;
        }
    }
    false
}

/// Result of the constructive edge-coloring route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeelOutcome {
    /// A coloring of the line graph, one color per edge of the source.
    Colored(Coloring),
    /// No edge of the remaining subgraph had degree sum below the threshold;
    /// the irreducible core is returned as source-graph edge indices. Every
    /// core edge has degree sum >= max_degree + i + 2 within the core.
    Stuck { core: Vec<usize> },
}

/// The edge removal order behind `peel_and_color`: repeatedly removes an
/// edge uv with d(u) + d(v) <= max_degree(g) + i + 1 in the current
/// subgraph, smallest (min endpoint, max endpoint) first.
pub fn peel_order(g: &Graph, i: usize) -> Result<Vec<usize>, Vec<usize>> {
    let threshold = g.max_degree() + i + 1;
    let m = g.edge_count();
    let mut deg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; m];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        // edges are stored sorted, so the first hit is the tie-break winner
        let pick = (0..m).find(|&e| {
            if !alive[e] {
                return false;
            }
            let (u, v) = g.edges()[e];
            deg[u] + deg[v] <= threshold
        });
        match pick {
            Some(e) => {
                let (u, v) = g.edges()[e];
                alive[e] = false;
                deg[u] -= 1;
                deg[v] -= 1;
                order.push(e);
            }
            None => {
                return Err((0..m).filter(|&e| alive[e]).collect());
            }
        }
    }
    Ok(order)
}

/// Constructive group (max_degree + i)-edge coloring: peel edges below the
/// degree-sum threshold, then color them in reverse order greedily on the
/// line graph. With lists of size max_degree + i, every edge sees at most
/// max_degree + i - 1 colored neighbors at its turn, so the greedy step
/// cannot fail once peeling completes.
pub fn peel_and_color(
    g: &Graph,
    i: usize,
    fa: &ForbiddenAssignment,
    la: &ListAssignment,
) -> Result<PeelOutcome, InstanceError> {
    let lg = line_graph(g);
    let m = g.edge_count();
    let expected = g.max_degree() + i;
    if la.k != expected || la.vertex_count() != m {
        return Err(InstanceError::ListSize {
            vertex: 0,
            got: la.k,
            expected,
        });
    }
    let order = match peel_order(g, i) {
        Ok(order) => order,
        Err(core) => return Ok(PeelOutcome::Stuck { core }),
    };
    let mut c = Coloring::uncolored(m);
    for &e in order.iter().rev() {
        let color = greedy_extend(&lg.line_graph, fa, la, &c, e)
            .expect("list size exceeds colored degree along the peeling order");
        c.set(e, color);
    }
    Ok(PeelOutcome::Colored(c))
}
