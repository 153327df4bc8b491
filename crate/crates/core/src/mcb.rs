// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Horton's minimum cycle basis.
//!
//! Every cycle of a minimum basis has the form `P(v, x) + (x, y) + P(y, v)`
//! where `P` are shortest paths from some vertex `v` and `(x, y)` is an
//! edge. Generating all such cycles, sorting them by length and keeping each
//! one that is independent (over GF(2)) of the shorter ones yields a
//! minimum basis.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf2::{BitRow, EchelonBasis};
use crate::graph::{
    all_pairs_shortest_paths, biconnected_blocks, cyclomatic_number, ApspResult, PlanarGraph,
};

/// A set of edges forming a cycle, with its GF(2) incidence vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Cycle {
    edges: Vec<usize>,
    incidence: BitRow,
    weight: f64,
}

impl Cycle {
    /// Builds a cycle from edge ids of `g`. The weight is summed in edge-id
    /// order so equal edge sets always get bit-identical weights.
    pub fn from_edges(g: &PlanarGraph, mut edges: Vec<usize>) -> Cycle {
        edges.sort_unstable();
        edges.dedup();
        let weight = edges.iter().map(|&e| g.edge(e).weight).sum();
        let incidence = BitRow::from_ones(g.edge_count(), edges.iter().copied());
        Cycle {
            edges,
            incidence,
            weight,
        }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn incidence(&self) -> &BitRow {
        &self.incidence
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices in walk order, starting at the smallest vertex id and
    /// continuing towards its smaller neighbor. `None` unless the edges form
    /// one closed walk that visits no vertex twice.
    pub fn vertex_sequence(&self, g: &PlanarGraph) -> Option<Vec<usize>> {
        if self.edges.len() < 3 {
            return None;
        }
        let mut incident: Vec<(usize, usize)> = self
            .edges
            .iter()
            .flat_map(|&e| {
                let edge = g.edge(e);
                [(edge.u, edge.v), (edge.v, edge.u)]
            })
            .collect();
        incident.sort_unstable();
        if !incident.chunk_by(|a, b| a.0 == b.0).all(|g| g.len() == 2) {
            return None;
        }
        let neighbors = |v: usize| -> (usize, usize) {
            let i = incident.partition_point(|&(a, _)| a < v);
            (incident[i].1, incident[i + 1].1)
        };

        let start = incident[0].0;
        let (first, _) = neighbors(start);
        let mut seq = vec![start];
        let (mut prev, mut cur) = (start, first);
        while cur != start {
            seq.push(cur);
            let (a, b) = neighbors(cur);
            let next = if a == prev { b } else { a };
            prev = cur;
            cur = next;
            if seq.len() > self.edges.len() {
                return None;
            }
        }
        (seq.len() == self.edges.len()).then_some(seq)
    }

    pub fn is_elementary(&self, g: &PlanarGraph) -> bool {
        self.vertex_sequence(g).is_some()
    }
}

/// Total order used to rank cycles: weight, then edge count, then edge ids.
pub fn cycle_order(a: &Cycle, b: &Cycle) -> Ordering {
    a.weight
        .total_cmp(&b.weight)
        .then_with(|| a.edges.len().cmp(&b.edges.len()))
        .then_with(|| a.edges.cmp(&b.edges))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub cycle: Cycle,
    /// Root vertex whose shortest paths generated this cycle.
    pub root: usize,
    /// Edge closing the two paths.
    pub edge: usize,
}

/// Horton candidates with duplicate edge sets removed (the first generating
/// `(root, edge)` pair is kept).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CandidateSet {
    pub candidates: Vec<Candidate>,
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

/// For each vertex, the first hop of its path from `root` (None for the
/// root itself and unreachable vertices).
fn first_hops(apsp: &ApspResult, root: usize) -> Vec<Option<usize>> {
    let n = apsp.vertex_count();
    let mut hop: Vec<Option<usize>> = vec![None; n];
    let mut known = vec![false; n];
    known[root] = true;
    let mut trail = Vec::new();
    for t in 0..n {
        if known[t] || !apsp.dist(root, t).is_finite() {
            continue;
        }
        let mut cur = t;
        while !known[cur] {
            trail.push(cur);
            let p = apsp
                .predecessor(root, cur)
                .expect("reachable vertex has a predecessor");
            if p == root {
                hop[cur] = Some(cur);
                known[cur] = true;
                trail.pop();
                break;
            }
            cur = p;
        }
        let h = hop[cur];
        for v in trail.drain(..) {
            hop[v] = h;
            known[v] = true;
        }
    }
    hop
}

fn push_path_edges(
    g: &PlanarGraph,
    apsp: &ApspResult,
    root: usize,
    mut t: usize,
    out: &mut Vec<usize>,
) {
    while t != root {
        let p = apsp.predecessor(root, t).expect("path to root");
        out.push(g.edge_between(p, t).expect("tree edge exists"));
        t = p;
    }
}

/// Generates the cycles `P(v, x) + (x, y) + P(y, v)` for every vertex `v` and
/// edge `(x, y)` not incident to `v`, skipping pairs of paths that meet
/// anywhere other than `v`.
pub fn horton_candidates(g: &PlanarGraph, apsp: &ApspResult) -> CandidateSet {
    let mut seen: HashSet<BitRow> = HashSet::new();
    let mut candidates = Vec::new();
    let mut edges = Vec::new();
    for root in 0..g.vertex_count() {
        let hops = first_hops(apsp, root);
        for (id, e) in g.edges().iter().enumerate() {
            if e.u == root || e.v == root {
                continue;
            }
            // Both paths are branches of one tree, so they only meet at the
            // root when they leave it through different first hops.
            match (hops[e.u], hops[e.v]) {
                (Some(a), Some(b)) if a != b => {}
                _ => continue,
            }
            edges.clear();
            push_path_edges(g, apsp, root, e.u, &mut edges);
            push_path_edges(g, apsp, root, e.v, &mut edges);
            edges.push(id);
            let cycle = Cycle::from_edges(g, edges.clone());
            if seen.insert(cycle.incidence.clone()) {
                candidates.push(Candidate {
                    cycle,
                    root,
                    edge: id,
                });
            }
        }
    }
    CandidateSet { candidates }
}

/// Sorts candidates by [`cycle_order`].
pub fn order_by_length(candidates: CandidateSet) -> Vec<Cycle> {
    let mut cycles: Vec<Cycle> = candidates.candidates.into_iter().map(|c| c.cycle).collect();
    cycles.sort_by(cycle_order);
    cycles
}

/// `nu` linearly independent cycles in ascending weight order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CycleBasis {
    cycles: Vec<Cycle>,
}

impl CycleBasis {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn total_weight(&self) -> f64 {
        self.cycles.iter().map(Cycle::weight).sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }
}

impl<'a> IntoIterator for &'a CycleBasis {
    type Item = &'a Cycle;
    type IntoIter = std::slice::Iter<'a, Cycle>;

    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

/// Greedy selection: keeps each cycle whose incidence vector is independent
/// of those kept so far, until `nu` cycles are kept.
pub fn select_cycles(sorted: Vec<Cycle>, nu: usize) -> Result<CycleBasis> {
    let mut cycles = Vec::with_capacity(nu);
    if nu == 0 {
        return Ok(CycleBasis { cycles });
    }
    let columns = sorted.first().map_or(0, |c| c.incidence.len());
    let mut echelon = EchelonBasis::new(columns);
    for cycle in sorted {
        if echelon.insert(cycle.incidence.clone()) {
            cycles.push(cycle);
            if cycles.len() == nu {
                return Ok(CycleBasis { cycles });
            }
        }
    }
    Err(Error::RankDeficiency {
        expected: nu,
        found: cycles.len(),
    })
}

/// Minimum cycle basis of `g`.
///
/// Cycles never cross an articulation point, so the basis is assembled from
/// independent runs over each biconnected block. This keeps the quadratic
/// shortest-path tables as small as the blocks themselves.
pub fn minimum_cycle_basis(g: &PlanarGraph) -> Result<CycleBasis> {
    let mut cycles = Vec::new();
    for block in biconnected_blocks(g) {
        if block.len() < 3 {
            continue;
        }
        let (sub, _, edge_map) = g.subgraph(&block);
        let nu = cyclomatic_number(&sub);
        if nu == 0 {
            continue;
        }
        let apsp = all_pairs_shortest_paths(&sub);
        let basis = select_cycles(order_by_length(horton_candidates(&sub, &apsp)), nu)?;
        cycles.extend(
            basis
                .cycles
                .into_iter()
                .map(|c| Cycle::from_edges(g, c.edges.iter().map(|&e| edge_map[e]).collect())),
        );
    }
    let nu = cyclomatic_number(g);
    if cycles.len() != nu {
        return Err(Error::RankDeficiency {
            expected: nu,
            found: cycles.len(),
        });
    }
    cycles.sort_by(cycle_order);
    Ok(CycleBasis { cycles })
}

/// Horton's algorithm on the whole graph at once, without splitting into
/// blocks.
pub fn minimum_cycle_basis_unsplit(g: &PlanarGraph) -> Result<CycleBasis> {
    let apsp = all_pairs_shortest_paths(g);
    select_cycles(
        order_by_length(horton_candidates(g, &apsp)),
        cyclomatic_number(g),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::graph::Edge;

    fn graph(points: &[(f64, f64)], edges: &[(usize, usize)]) -> PlanarGraph {
        PlanarGraph::from_geometry(
            points.iter().map(|&(x, y)| Point::new(x, y)).collect(),
            edges,
        )
        .unwrap()
    }

    fn triangle() -> PlanarGraph {
        graph(&[(0., 0.), (4., 0.), (2., 3.)], &[(0, 1), (1, 2), (0, 2)])
    }

    fn square_with_diagonals(s: f64) -> PlanarGraph {
        graph(
            &[(0., 0.), (0., s), (s / 2., s / 2.), (s, 0.), (s, s)],
            &[
                (0, 1),
                (0, 3),
                (1, 4),
                (3, 4),
                (0, 2),
                (1, 2),
                (2, 3),
                (2, 4),
            ],
        )
    }

    fn cycle_of(g: &PlanarGraph, verts: &[usize]) -> Cycle {
        let edges = verts
            .iter()
            .zip(verts.iter().cycle().skip(1))
            .map(|(&a, &b)| g.edge_between(a, b).unwrap())
            .collect();
        Cycle::from_edges(g, edges)
    }

    #[test]
    fn triangle_yields_one_candidate() {
        let g = triangle();
        let cands = horton_candidates(&g, &all_pairs_shortest_paths(&g));
        assert_eq!(cands.len(), 1);
        let basis = minimum_cycle_basis(&g).unwrap();
        assert_eq!(basis.len(), 1);
        let perimeter = 4.0 + 2f64.hypot(3.0) * 2.0;
        assert!((basis.total_weight() - perimeter).abs() < 1e-12);
    }

    #[test]
    fn tree_has_no_candidates() {
        let g = graph(
            &[(0., 0.), (2., 2.), (1., 1.), (0., 2.), (2., 0.)],
            &[(0, 2), (1, 2), (2, 3), (2, 4)],
        );
        assert!(horton_candidates(&g, &all_pairs_shortest_paths(&g)).is_empty());
        assert!(minimum_cycle_basis(&g).unwrap().is_empty());
    }

    #[test]
    fn square_with_diagonals_picks_the_four_triangles() {
        let g = square_with_diagonals(2.0);
        let cands = horton_candidates(&g, &all_pairs_shortest_paths(&g));
        let triangles = [[0, 1, 2], [1, 4, 2], [4, 3, 2], [3, 0, 2]];
        for t in triangles {
            let c = cycle_of(&g, &t);
            assert!(cands
                .candidates
                .iter()
                .any(|k| k.cycle.incidence == c.incidence));
        }
        let basis = minimum_cycle_basis(&g).unwrap();
        assert_eq!(basis.len(), 4);
        assert!(basis.iter().all(|c| c.len() == 3));
        let outer = cycle_of(&g, &[0, 1, 4, 3]);
        assert!(basis.iter().all(|c| c.incidence != outer.incidence));
    }

    #[test]
    fn two_disjoint_triangles() {
        let g = graph(
            &[(0., 0.), (1., 0.), (0., 1.), (5., 5.), (6., 5.), (5., 6.)],
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        );
        assert_eq!(cyclomatic_number(&g), 2);
        assert_eq!(minimum_cycle_basis(&g).unwrap().len(), 2);
    }

    #[test]
    fn order_by_length_examples() {
        let g = graph(
            &[(0., 0.), (1., 0.), (2., 0.), (3., 0.)],
            &[(0, 1), (1, 2), (2, 3)],
        );
        let mk = |w: f64, edges: Vec<usize>| Cycle {
            incidence: BitRow::from_ones(3, edges.iter().copied()),
            edges,
            weight: w,
        };
        let cands = |cs: Vec<Cycle>| CandidateSet {
            candidates: cs
                .into_iter()
                .map(|cycle| Candidate {
                    cycle,
                    root: 0,
                    edge: 0,
                })
                .collect(),
        };
        let sorted = order_by_length(cands(vec![
            mk(5.0, vec![0]),
            mk(3.0, vec![1]),
            mk(4.0, vec![2]),
        ]));
        let weights: Vec<f64> = sorted.iter().map(Cycle::weight).collect();
        assert_eq!(weights, vec![3.0, 4.0, 5.0]);

        let sorted = order_by_length(cands(vec![mk(1.0, vec![1, 2]), mk(1.0, vec![0, 2])]));
        assert_eq!(sorted[0].edges(), &[0, 2]);

        let a = order_by_length(cands(vec![
            mk(2.0, vec![0]),
            mk(2.0, vec![1]),
            mk(1.0, vec![2]),
        ]));
        let b = order_by_length(cands(vec![
            mk(1.0, vec![2]),
            mk(2.0, vec![1]),
            mk(2.0, vec![0]),
        ]));
        assert_eq!(a, b);
        let _ = g;
    }

    #[test]
    fn select_rejects_dependent_vectors() {
        let mk = |edges: Vec<usize>, w: f64| Cycle {
            incidence: BitRow::from_ones(3, edges.iter().copied()),
            edges,
            weight: w,
        };
        let sorted = vec![
            mk(vec![0, 1], 1.0),
            mk(vec![1, 2], 2.0),
            mk(vec![0, 2], 3.0),
        ];
        let basis = select_cycles(sorted.clone(), 2).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis.cycles()[1].edges(), &[1, 2]);
        assert!(select_cycles(sorted.clone(), 0).unwrap().is_empty());
        assert_eq!(
            select_cycles(sorted, 3),
            Err(Error::RankDeficiency {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn vertex_sequence_walks_the_ring() {
        let g = square_with_diagonals(2.0);
        let c = cycle_of(&g, &[4, 3, 0, 1]);
        assert_eq!(c.vertex_sequence(&g), Some(vec![0, 1, 4, 3]));
        // two triangles sharing vertex 2 form a figure eight, not elementary
        let eight = Cycle::from_edges(
            &g,
            [[0, 1, 2], [4, 3, 2]]
                .iter()
                .flat_map(|t| cycle_of(&g, t).edges.clone())
                .collect(),
        );
        assert!(!eight.is_elementary(&g));
        // a path is not closed
        let path = Cycle::from_edges(
            &g,
            vec![g.edge_between(0, 1).unwrap(), g.edge_between(1, 4).unwrap()],
        );
        assert!(!path.is_elementary(&g));
    }

    #[test]
    fn block_split_matches_unsplit() {
        // bowtie with a tail: articulation point at vertex 2
        let g = PlanarGraph::new(
            (0..7)
                .map(|i| Point::new(i as f64, (i * i) as f64))
                .collect(),
            vec![
                Edge::new(0, 1, 1.0),
                Edge::new(1, 2, 1.5),
                Edge::new(0, 2, 2.0),
                Edge::new(2, 3, 1.0),
                Edge::new(3, 4, 1.0),
                Edge::new(2, 4, 3.0),
                Edge::new(4, 5, 1.0),
                Edge::new(5, 6, 1.0),
                Edge::new(3, 5, 2.5),
            ],
        )
        .unwrap();
        let a = minimum_cycle_basis(&g).unwrap();
        let b = minimum_cycle_basis_unsplit(&g).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a, b);
    }
}
