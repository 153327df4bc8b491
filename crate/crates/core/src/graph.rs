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

//! Undirected simple graphs with geometric vertices.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::geometry::{Point, Segment};

/// How the length of an edge (and thus of a cycle) is measured.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LengthMetric {
    #[default]
    Euclidean,
    HopCount,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
    /// Index of the input segment this edge was cut from, if any.
    pub parent: Option<usize>,
}

impl Edge {
    pub fn new(u: usize, v: usize, weight: f64) -> Self {
        Edge {
            u,
            v,
            weight,
            parent: None,
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A simple undirected graph. Edges are stored with `u < v` and sorted by
/// `(u, v)`; an edge's id is its position in that order.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarGraph {
    vertices: Vec<Point>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl PlanarGraph {
    pub fn new(vertices: Vec<Point>, mut edges: Vec<Edge>) -> Result<Self> {
        let n = vertices.len();
        for e in &mut edges {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) references a vertex outside 0..{n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {}", e.u)));
            }
            if !(e.weight.is_finite() && e.weight > 0.0) {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) has non-positive weight {}",
                    e.u, e.v, e.weight
                )));
            }
            if e.u > e.v {
                std::mem::swap(&mut e.u, &mut e.v);
            }
        }
        edges.sort_by_key(|e| (e.u, e.v));
        if let Some(w) = edges
            .windows(2)
            .find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v))
        {
            return Err(Error::InvalidGraph(format!(
                "parallel edges between {} and {}",
                w[0].u, w[0].v
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(PlanarGraph {
            vertices,
            edges,
            adjacency,
        })
    }

    /// Graph on `vertices` whose edges weigh their Euclidean length.
    pub fn from_geometry(vertices: Vec<Point>, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(u, v)| {
                let w = match (vertices.get(u), vertices.get(v)) {
                    (Some(a), Some(b)) => a.distance(b),
                    _ => 1.0,
                };
                Edge::new(u, v, w)
            })
            .collect();
        PlanarGraph::new(vertices, edges)
    }

    /// Recomputes every edge weight under `metric`.
    pub fn with_metric(mut self, metric: LengthMetric) -> Self {
        for e in &mut self.edges {
            e.weight = match metric {
                LengthMetric::Euclidean => self.vertices[e.u].distance(&self.vertices[e.v]),
                LengthMetric::HopCount => 1.0,
            };
        }
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> Point {
        self.vertices[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = &self.adjacency[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn edge_segment(&self, id: usize) -> Segment {
        let e = &self.edges[id];
        Segment::new(self.vertices[e.u], self.vertices[e.v])
    }

    /// Subgraph spanned by `edge_ids`, with vertices renumbered in
    /// increasing order of their original ids. Returns the subgraph, the
    /// original id of each new vertex, and the original id of each new edge.
    pub fn subgraph(&self, edge_ids: &[usize]) -> (PlanarGraph, Vec<usize>, Vec<usize>) {
        let mut verts: Vec<usize> = edge_ids
            .iter()
            .flat_map(|&e| [self.edges[e].u, self.edges[e].v])
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |v: usize| verts.binary_search(&v).expect("vertex of a listed edge");
        let mut sorted_edges = edge_ids.to_vec();
        sorted_edges.sort_unstable();
        sorted_edges.dedup();
        let edges = sorted_edges
            .iter()
            .map(|&id| {
                let e = &self.edges[id];
                Edge {
                    u: local(e.u),
                    v: local(e.v),
                    weight: e.weight,
                    parent: e.parent,
                }
            })
            .collect();
        let points = verts.iter().map(|&v| self.vertices[v]).collect();
        // Renumbering is monotone, so local edge order matches `sorted_edges`.
        let sub = PlanarGraph::new(points, edges).expect("subgraph of a valid graph");
        (sub, verts, sorted_edges)
    }
}

/// Connected component label per vertex. Labels are assigned in order of
/// each component's smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<usize>,
    pub count: usize,
}

pub fn connected_components(g: &PlanarGraph) -> Components {
    let n = g.vertex_count();
    let mut labels = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if labels[root] != usize::MAX {
            continue;
        }
        labels[root] = count;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if labels[w] == usize::MAX {
                    labels[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    Components { labels, count }
}

/// Dimension of the cycle space, `E - V + P`.
pub fn cyclomatic_number(g: &PlanarGraph) -> usize {
    g.edge_count() + connected_components(g).count - g.vertex_count()
}

/// Edge sets of the biconnected components (blocks) of `g`. Bridges come out
/// as single-edge blocks. Edge ids within a block are sorted, and blocks are
/// ordered by their smallest edge id.
pub fn biconnected_blocks(g: &PlanarGraph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    // (vertex, edge to parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(&(v, parent_edge, next)) = stack.last() {
            if let Some(&(w, e)) = g.neighbors(v).get(next) {
                stack.last_mut().unwrap().2 += 1;
                if e == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(u, _, _)) = stack.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == parent_edge {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
    }
    blocks.sort_by_key(|b| b[0]);
    blocks
}

const NO_VERTEX: usize = usize::MAX;

/// All-pairs shortest path lengths plus one canonical shortest path per
/// ordered pair, stored as a predecessor tree per source.
#[derive(Clone, Debug)]
pub struct ApspResult {
    n: usize,
    dist: Vec<f64>,
    pred: Vec<usize>,
}

impl ApspResult {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Length of a shortest path, or infinity if `t` is unreachable.
    pub fn dist(&self, s: usize, t: usize) -> f64 {
        self.dist[s * self.n + t]
    }

    /// Vertex preceding `t` on the canonical path from `s`.
    pub fn predecessor(&self, s: usize, t: usize) -> Option<usize> {
        match self.pred[s * self.n + t] {
            NO_VERTEX => None,
            p => Some(p),
        }
    }

    /// Canonical shortest path from `s` to `t`, both ends included.
    pub fn path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        if !self.dist(s, t).is_finite() {
            return None;
        }
        let mut path = vec![t];
        let mut cur = t;
        while cur != s {
            cur = self.predecessor(s, cur)?;
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

#[derive(Clone, Copy, PartialEq)]
struct Dist(f64);

impl Eq for Dist {}

impl PartialOrd for Dist {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dist {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

fn tree_path(pred: &[usize], source: usize, mut t: usize, last: usize) -> Vec<usize> {
    let mut path = vec![last, t];
    while t != source {
        t = pred[t];
        path.push(t);
    }
    path.reverse();
    path
}

/// Dijkstra from `source`, then picks for every vertex the predecessor that
/// yields the lexicographically smallest vertex sequence among all shortest
/// paths. Prefixes of such paths are themselves lexicographically smallest,
/// so the choices form a tree.
fn single_source(g: &PlanarGraph, source: usize, dist: &mut [f64], pred: &mut [usize]) {
    let mut heap = BinaryHeap::new();
    let mut settled = vec![false; g.vertex_count()];
    let mut order = Vec::new();
    dist[source] = 0.0;
    heap.push(Reverse((Dist(0.0), source)));
    while let Some(Reverse((Dist(d), v))) = heap.pop() {
        if settled[v] {
            continue;
        }
        settled[v] = true;
        order.push(v);
        for &(w, e) in g.neighbors(v) {
            let nd = d + g.edge(e).weight;
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(Reverse((Dist(nd), w)));
            }
        }
    }

    let mut done = vec![false; g.vertex_count()];
    done[source] = true;
    for &t in &order[1..] {
        let mut best: Option<usize> = None;
        let mut best_path: Option<Vec<usize>> = None;
        for &(u, e) in g.neighbors(t) {
            if !done[u] || dist[u] + g.edge(e).weight != dist[t] {
                continue;
            }
            match best {
                None => best = Some(u),
                Some(b) => {
                    let current = best_path.get_or_insert_with(|| tree_path(pred, source, b, t));
                    let candidate = tree_path(pred, source, u, t);
                    if candidate < *current {
                        best = Some(u);
                        *current = candidate;
                    }
                }
            }
        }
        pred[t] = best.expect("settled vertex has a tight predecessor");
        done[t] = true;
    }
}

/// Shortest paths between all pairs of vertices, one Dijkstra run per
/// source. Unreachable pairs get an infinite distance.
pub fn all_pairs_shortest_paths(g: &PlanarGraph) -> ApspResult {
    let n = g.vertex_count();
    let mut dist = vec![f64::INFINITY; n * n];
    let mut pred = vec![NO_VERTEX; n * n];
    for (s, (d, p)) in dist
        .chunks_mut(n.max(1))
        .zip(pred.chunks_mut(n.max(1)))
        .enumerate()
    {
        single_source(g, s, d, p);
    }
    ApspResult { n, dist, pred }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlanarGraph {
        PlanarGraph::from_geometry(
            vec![Point::new(0., 0.), Point::new(4., 0.), Point::new(2., 3.)],
            &[(0, 1), (1, 2), (2, 0)],
        )
        .unwrap()
    }

    fn abstract_graph(n: usize, edges: &[(usize, usize, f64)]) -> PlanarGraph {
        let pts = (0..n).map(|i| Point::new(i as f64, 0.0)).collect();
        let edges = edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect();
        PlanarGraph::new(pts, edges).unwrap()
    }

    #[test]
    fn rejects_non_simple_graphs() {
        let pts = vec![Point::new(0., 0.), Point::new(1., 0.)];
        assert!(PlanarGraph::new(pts.clone(), vec![Edge::new(0, 0, 1.0)]).is_err());
        assert!(PlanarGraph::new(
            pts.clone(),
            vec![Edge::new(0, 1, 1.0), Edge::new(1, 0, 2.0)]
        )
        .is_err());
        assert!(PlanarGraph::new(pts.clone(), vec![Edge::new(0, 1, 0.0)]).is_err());
        assert!(PlanarGraph::new(pts, vec![Edge::new(0, 2, 1.0)]).is_err());
    }

    #[test]
    fn edges_are_canonical() {
        let g = abstract_graph(3, &[(2, 1, 1.0), (1, 0, 1.0)]);
        assert_eq!((g.edge(0).u, g.edge(0).v), (0, 1));
        assert_eq!((g.edge(1).u, g.edge(1).v), (1, 2));
        assert_eq!(g.edge_between(2, 1), Some(1));
        assert_eq!(g.edge_between(0, 2), None);
    }

    #[test]
    fn component_counts() {
        assert_eq!(connected_components(&triangle()).count, 1);
        let two = abstract_graph(
            6,
            &[
                (0, 1, 1.),
                (1, 2, 1.),
                (2, 0, 1.),
                (3, 4, 1.),
                (4, 5, 1.),
                (5, 3, 1.),
            ],
        );
        let c = connected_components(&two);
        assert_eq!(c.count, 2);
        assert_eq!(c.labels, vec![0, 0, 0, 1, 1, 1]);
        let empty = PlanarGraph::new(vec![], vec![]).unwrap();
        assert_eq!(connected_components(&empty).count, 0);
        assert_eq!(cyclomatic_number(&empty), 0);
    }

    #[test]
    fn cyclomatic_examples() {
        assert_eq!(cyclomatic_number(&triangle()), 1);
        // X-cross: a star with four leaves
        let star = abstract_graph(5, &[(0, 2, 1.), (1, 2, 1.), (2, 3, 1.), (2, 4, 1.)]);
        assert_eq!(cyclomatic_number(&star), 0);
        // square with both diagonals, split at the centre
        let sq = abstract_graph(
            5,
            &[
                (0, 1, 1.),
                (1, 2, 1.),
                (2, 3, 1.),
                (3, 0, 1.),
                (0, 4, 1.),
                (1, 4, 1.),
                (2, 4, 1.),
                (3, 4, 1.),
            ],
        );
        assert_eq!(cyclomatic_number(&sq), 8 - 5 + 1);
    }

    #[test]
    fn apsp_path_example() {
        let g = abstract_graph(3, &[(0, 1, 1.), (1, 2, 1.)]);
        let apsp = all_pairs_shortest_paths(&g);
        assert_eq!(apsp.dist(0, 2), 2.0);
        assert_eq!(apsp.path(0, 2), Some(vec![0, 1, 2]));
        assert_eq!(apsp.path(2, 0), Some(vec![2, 1, 0]));
        assert_eq!(apsp.path(1, 1), Some(vec![1]));
    }

    #[test]
    fn apsp_prefers_direct_edge() {
        let g = abstract_graph(3, &[(0, 1, 3.), (1, 2, 4.), (0, 2, 5.)]);
        let apsp = all_pairs_shortest_paths(&g);
        assert_eq!(apsp.dist(0, 2), 5.0);
        assert_eq!(apsp.path(0, 2), Some(vec![0, 2]));
    }

    #[test]
    fn apsp_disconnected_is_infinite() {
        let g = abstract_graph(4, &[(0, 1, 1.), (2, 3, 1.)]);
        let apsp = all_pairs_shortest_paths(&g);
        assert!(apsp.dist(0, 3).is_infinite());
        assert_eq!(apsp.path(0, 3), None);
    }

    #[test]
    fn apsp_ties_pick_smallest_sequence() {
        // 4-cycle 0-1-3-2-0 with unit weights: 0 to 3 has two shortest paths.
        let g = abstract_graph(4, &[(0, 1, 1.), (1, 3, 1.), (0, 2, 1.), (2, 3, 1.)]);
        let apsp = all_pairs_shortest_paths(&g);
        assert_eq!(apsp.path(0, 3), Some(vec![0, 1, 3]));
        assert_eq!(apsp.path(3, 0), Some(vec![3, 1, 0]));
        // a longer-but-smaller prefix must not win over a different tight path
        let g = abstract_graph(
            5,
            &[(0, 4, 1.), (4, 3, 1.), (0, 1, 1.), (1, 3, 1.), (2, 3, 1.)],
        );
        let apsp = all_pairs_shortest_paths(&g);
        assert_eq!(apsp.path(0, 3), Some(vec![0, 1, 3]));
        assert_eq!(apsp.path(0, 2), Some(vec![0, 1, 3, 2]));
        // one tight predecessor lies on the path to the other
        let g = abstract_graph(4, &[(0, 1, 1.), (1, 2, 1.), (1, 3, 2.), (2, 3, 1.)]);
        let apsp = all_pairs_shortest_paths(&g);
        assert_eq!(apsp.path(0, 3), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn blocks_split_at_articulation_points() {
        // two triangles sharing vertex 2, plus a pendant edge 4-5
        let g = abstract_graph(
            6,
            &[
                (0, 1, 1.),
                (1, 2, 1.),
                (0, 2, 1.),
                (2, 3, 1.),
                (3, 4, 1.),
                (2, 4, 1.),
                (4, 5, 1.),
            ],
        );
        let blocks = biconnected_blocks(&g);
        let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3, 1]);
        let total: usize = sizes.iter().sum();
        assert_eq!(total, g.edge_count());
    }

    #[test]
    fn subgraph_keeps_edge_order() {
        let g = abstract_graph(5, &[(0, 1, 1.), (1, 2, 2.), (0, 2, 3.), (3, 4, 4.)]);
        let (sub, verts, edges) = g.subgraph(&[2, 0, 1]);
        assert_eq!(verts, vec![0, 1, 2]);
        assert_eq!(edges, vec![0, 1, 2]);
        for (local, &global) in edges.iter().enumerate() {
            assert_eq!(sub.edge(local).weight, g.edge(global).weight);
        }
    }

    #[test]
    fn hop_metric_sets_unit_weights() {
        let g = triangle().with_metric(LengthMetric::HopCount);
        assert!(g.edges().iter().all(|e| e.weight == 1.0));
        let back = g.with_metric(LengthMetric::Euclidean);
        assert_eq!(back.edge(0).weight, 4.0);
    }
}
