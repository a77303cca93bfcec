//! Instance model for (A, L, f)-coloring: a forbidden-difference function on
//! oriented edges, per-vertex color lists, and partial colorings.

use crate::abelian::{Group, GroupElt};
use crate::graph::{Graph, Orientation};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("forbidden assignment has {0} values for {1} edges")]
    ValueCount(usize, usize),
    #[error("list assignment has {0} lists for {1} vertices")]
    ListCount(usize, usize),
    #[error("list for vertex {vertex} has size {got}, expected uniform size {expected}")]
    ListSize {
        vertex: usize,
        got: usize,
        expected: usize,
    },
    #[error("uniform list size {k} exceeds group order {order}")]
    ListTooLarge { k: usize, order: u64 },
    #[error("group element error: {0}")]
    Element(#[from] crate::abelian::GroupError),
    #[error("coloring is incomplete: vertex {0} is uncolored")]
    Incomplete(usize),
}

/// The function f: oriented edges -> A whose values are the forbidden color
/// differences c(tail) - c(head).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenAssignment {
    pub group: Group,
    pub orientation: Orientation,
    values: Vec<u16>,
}

impl ForbiddenAssignment {
    pub fn new(
        group: Group,
        orientation: Orientation,
        values: Vec<GroupElt>,
    ) -> Result<ForbiddenAssignment, InstanceError> {
        let idx: Result<Vec<u16>, _> = values.iter().map(|e| group.index_of(e)).collect();
        Ok(ForbiddenAssignment {
            values: idx?,
            group,
            orientation,
        })
    }

    pub fn from_indices(group: Group, orientation: Orientation, values: Vec<u16>) -> Self {
        debug_assert!(values.iter().all(|&v| (v as u64) < group.order()));
        ForbiddenAssignment {
            group,
            orientation,
            values,
        }
    }

    /// All-zero f under the canonical orientation.
    pub fn zero(group: Group, g: &Graph) -> ForbiddenAssignment {
        ForbiddenAssignment {
            orientation: Orientation::canonical(g),
            values: vec![0; g.edge_count()],
            group,
        }
    }

    pub fn value_idx(&self, edge: usize) -> u16 {
        self.values[edge]
    }

    pub fn value(&self, edge: usize) -> GroupElt {
        self.group.elt_at(self.values[edge])
    }

    pub fn values(&self) -> Vec<GroupElt> {
        self.values.iter().map(|&i| self.group.elt_at(i)).collect()
    }

    /// The color forbidden at `v` across `edge`, given that the other
    /// endpoint is colored `neighbor_color`. Both edge directions are
    /// handled: with the edge oriented into v the forbidden value is
    /// c(w) - f, oriented out of v it is c(w) + f.
    pub fn forbidden_at(&self, edge: usize, v: usize, neighbor_color: u16) -> u16 {
        let (tail, head) = self.orientation.dir(edge);
        let f = self.values[edge];
        if head == v {
            debug_assert_ne!(tail, v);
            self.group.sub_idx(neighbor_color, f)
        } else {
            debug_assert_eq!(tail, v);
            self.group.add_idx(neighbor_color, f)
        }
    }

    /// Reverse one edge's direction, negating its value. Preserves the
    /// constraint set exactly.
    pub fn flip_edge(&mut self, edge: usize) {
        self.orientation.flip(edge);
        self.values[edge] = self.group.neg_idx(self.values[edge]);
    }

    /// Gauge transform by a vertex potential: f'(u->v) = f(u->v) - p(u) + p(v).
    pub fn gauge(&self, potential: &[u16]) -> ForbiddenAssignment {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(e, &f)| {
                let (t, h) = self.orientation.dir(e);
                self.group
                    .add_idx(self.group.sub_idx(f, potential[t]), potential[h])
            })
            .collect();
        ForbiddenAssignment {
            group: self.group.clone(),
            orientation: self.orientation.clone(),
            values,
        }
    }
}

/// A k-uniform list assignment. Lists are stored sorted, so "first available
/// color" is well defined and reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    pub group: Group,
    pub k: usize,
    lists: Vec<Vec<u16>>,
}

impl ListAssignment {
    pub fn new(group: Group, lists: Vec<Vec<GroupElt>>) -> Result<ListAssignment, InstanceError> {
        let k = lists.first().map_or(0, |l| l.len());
        if k > group.order() as usize {
            return Err(InstanceError::ListTooLarge {
                k,
                order: group.order(),
            });
        }
        let mut idx_lists = Vec::with_capacity(lists.len());
        for (v, list) in lists.iter().enumerate() {
            if list.len() != k {
                return Err(InstanceError::ListSize {
                    vertex: v,
                    got: list.len(),
                    expected: k,
                });
            }
            let mut idx: Vec<u16> = list
                .iter()
                .map(|e| group.index_of(e))
                .collect::<Result<_, _>>()?;
            idx.sort_unstable();
            idx.dedup();
            if idx.len() != k {
                return Err(InstanceError::ListSize {
                    vertex: v,
                    got: idx.len(),
                    expected: k,
                });
            }
            idx_lists.push(idx);
        }
        Ok(ListAssignment {
            group,
            k,
            lists: idx_lists,
        })
    }

    pub fn from_indices(group: Group, k: usize, lists: Vec<Vec<u16>>) -> Self {
        ListAssignment { group, k, lists }
    }

    /// L(v) = A for every vertex.
    pub fn full(group: Group, n: usize) -> ListAssignment {
        let all: Vec<u16> = (0..group.order() as u16).collect();
        ListAssignment {
            k: group.order() as usize,
            lists: vec![all; n],
            group,
        }
    }

    pub fn list(&self, v: usize) -> &[u16] {
        &self.lists[v]
    }

    pub fn contains(&self, v: usize, color: u16) -> bool {
        self.lists[v].binary_search(&color).is_ok()
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    pub fn lists_elts(&self) -> Vec<Vec<GroupElt>> {
        self.lists
            .iter()
            .map(|l| l.iter().map(|&i| self.group.elt_at(i)).collect())
            .collect()
    }

    /// Shift every list by the potential: L'(v) = L(v) - p(v).
    pub fn gauge(&self, potential: &[u16]) -> ListAssignment {
        let lists = self
            .lists
            .iter()
            .enumerate()
            .map(|(v, l)| {
                let mut shifted: Vec<u16> = l
                    .iter()
                    .map(|&c| self.group.sub_idx(c, potential[v]))
                    .collect();
                shifted.sort_unstable();
                shifted
            })
            .collect();
        ListAssignment {
            group: self.group.clone(),
            k: self.k,
            lists,
        }
    }
}

/// A partial vertex coloring by group element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    values: Vec<Option<u16>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Coloring {
        Coloring {
            values: vec![None; n],
        }
    }

    pub fn from_indices(values: Vec<u16>) -> Coloring {
        Coloring {
            values: values.into_iter().map(Some).collect(),
        }
    }

    pub fn get(&self, v: usize) -> Option<u16> {
        self.values[v]
    }

    pub fn set(&mut self, v: usize, color: u16) {
        self.values[v] = Some(color);
    }

    pub fn clear(&mut self, v: usize) {
        self.values[v] = None;
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.values.iter().all(|c| c.is_some())
    }

    pub fn first_uncolored(&self) -> Option<usize> {
        self.values.iter().position(|c| c.is_none())
    }

    pub fn to_elts(&self, group: &Group) -> Vec<Option<GroupElt>> {
        self.values
            .iter()
            .map(|c| c.map(|i| group.elt_at(i)))
            .collect()
    }

    /// Shift a total coloring by the potential: c'(v) = c(v) - p(v).
    pub fn gauge(&self, group: &Group, potential: &[u16]) -> Coloring {
        Coloring {
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(v, c)| c.map(|x| group.sub_idx(x, potential[v])))
                .collect(),
        }
    }
}

/// Instance JSON: graph + group + orientation (one [tail, head] pair per
/// edge, in sorted edge order) + f (residue tuple per edge) + optional lists.
#[derive(Debug, Serialize, Deserialize)]
pub struct InstanceJson {
    pub group: Vec<u64>,
    pub n: usize,
    pub orientation: Vec<(usize, usize)>,
    pub f: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lists: Option<Vec<Vec<Vec<u64>>>>,
}

impl InstanceJson {
    pub fn build(
        &self,
    ) -> Result<(Graph, ForbiddenAssignment, Option<ListAssignment>), String> {
        let group = Group::new(&self.group).map_err(|e| e.to_string())?;
        let graph = Graph::new(self.n, &self.orientation).map_err(|e| e.to_string())?;
        if self.f.len() != graph.edge_count() {
            return Err(format!(
                "{} f values for {} edges",
                self.f.len(),
                graph.edge_count()
            ));
        }
        // orientation pairs arrive in arbitrary order; realign with the
        // sorted edge list, carrying f values along
        let mut dirs = graph.edges().to_vec();
        let mut values = vec![GroupElt(vec![]); graph.edge_count()];
        for (pair, fv) in self.orientation.iter().zip(&self.f) {
            let idx = graph
                .edge_index(pair.0, pair.1)
                .ok_or_else(|| format!("unknown edge ({}, {})", pair.0, pair.1))?;
            dirs[idx] = *pair;
            values[idx] = GroupElt(fv.clone());
        }
        let orientation = Orientation::from_dirs(&graph, dirs).map_err(|e| e.to_string())?;
        let fa = ForbiddenAssignment::new(group.clone(), orientation, values)
            .map_err(|e| e.to_string())?;
        let la = match &self.lists {
            None => None,
            Some(ls) => {
                if ls.len() != self.n {
                    return Err(format!("{} lists for {} vertices", ls.len(), self.n));
                }
                let lists = ls
                    .iter()
                    .map(|l| l.iter().map(|t| GroupElt(t.clone())).collect())
                    .collect();
                Some(ListAssignment::new(group, lists).map_err(|e| e.to_string())?)
            }
        };
        Ok((graph, fa, la))
    }

    pub fn from_parts(
        graph: &Graph,
        fa: &ForbiddenAssignment,
        la: Option<&ListAssignment>,
    ) -> InstanceJson {
        InstanceJson {
            group: fa.group.invariant_factors().to_vec(),
            n: graph.vertex_count(),
            orientation: fa.orientation.dirs().to_vec(),
            f: fa.values().iter().map(|e| e.0.clone()).collect(),
            lists: la.map(|la| {
                la.lists_elts()
                    .into_iter()
                    .map(|l| l.into_iter().map(|e| e.0).collect())
                    .collect()
            }),
        }
    }
}

/// Witness JSON: one residue tuple per vertex.
#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    pub group: Vec<u64>,
    pub colors: Vec<Vec<u64>>,
}

impl WitnessJson {
    pub fn from_coloring(group: &Group, c: &Coloring) -> WitnessJson {
        WitnessJson {
            group: group.invariant_factors().to_vec(),
            colors: c
                .to_elts(group)
                .into_iter()
                .map(|e| e.expect("witness coloring is total").0)
                .collect(),
        }
    }

    pub fn to_coloring(&self) -> Result<(Group, Coloring), String> {
        let group = Group::new(&self.group).map_err(|e| e.to_string())?;
        let mut values = Vec::with_capacity(self.colors.len());
        for t in &self.colors {
            values.push(
                group
                    .index_of(&GroupElt(t.clone()))
                    .map_err(|e| e.to_string())?,
            );
        }
        Ok((group, Coloring::from_indices(values)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;

    #[test]
    fn list_validation() {
        let z4 = Group::cyclic(4).unwrap();
        let bad = ListAssignment::new(
            z4.clone(),
            vec![
                vec![GroupElt(vec![0]), GroupElt(vec![1])],
                vec![GroupElt(vec![2])],
            ],
        );
        assert!(matches!(bad, Err(InstanceError::ListSize { vertex: 1, .. })));

        // duplicate entries collapse and violate uniformity
        let dup = ListAssignment::new(
            z4.clone(),
            vec![vec![GroupElt(vec![1]), GroupElt(vec![1])]],
        );
        assert!(dup.is_err());

        let z2 = Group::cyclic(2).unwrap();
        let too_big = ListAssignment::new(
            z2,
            vec![vec![
                GroupElt(vec![0]),
                GroupElt(vec![1]),
                GroupElt(vec![2]),
            ]],
        );
        assert!(matches!(too_big, Err(InstanceError::ListTooLarge { .. })));
    }

    #[test]
    fn forbidden_both_directions() {
        // edge 0-1 over Z4, f = 1
        let g = crate::graph::path_graph(2);
        let z4 = Group::cyclic(4).unwrap();
        let fa = ForbiddenAssignment::new(
            z4.clone(),
            Orientation::canonical(&g),
            vec![GroupElt(vec![1])],
        )
        .unwrap();
        // oriented 0 -> 1; at head 1 with c(0) = 3: forbidden is 3 - 1 = 2
        assert_eq!(fa.forbidden_at(0, 1, 3), 2);
        // at tail 0 with c(1) = 3: forbidden is 3 + 1 = 0
        assert_eq!(fa.forbidden_at(0, 0, 3), 0);

        // flipping the edge preserves both forbidden values
        let mut flipped = fa.clone();
        flipped.flip_edge(0);
        assert_eq!(flipped.forbidden_at(0, 1, 3), 2);
        assert_eq!(flipped.forbidden_at(0, 0, 3), 0);
    }

    #[test]
    fn instance_json_roundtrip() {
        let g = cycle_graph(4);
        let z2 = Group::cyclic(2).unwrap();
        let fa = ForbiddenAssignment::zero(z2.clone(), &g);
        let la = ListAssignment::full(z2, 4);
        let j = InstanceJson::from_parts(&g, &fa, Some(&la));
        let s = serde_json::to_string(&j).unwrap();
        let back: InstanceJson = serde_json::from_str(&s).unwrap();
        let (g2, fa2, la2) = back.build().unwrap();
        assert_eq!(g, g2);
        assert_eq!(fa, fa2);
        assert_eq!(Some(la), la2);
    }
}
