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

//! Exhaustive structural checks on pipeline outputs.

use segpoly::{intersect_segments, IntersectionKind, PlanarGraph, Point, SegmentSet, Tolerance};

/// Pairs of graph edges that cross or overlap (anything but a shared
/// endpoint or no contact at all).
pub fn crossing_edge_pairs(g: &PlanarGraph, tol: Tolerance) -> Vec<(usize, usize)> {
    let segs: Vec<_> = (0..g.edge_count()).map(|e| g.edge_segment(e)).collect();
    let mut bad = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            match intersect_segments(&segs[i], &segs[j], tol).kind {
                IntersectionKind::None | IntersectionKind::EndpointTouch => {}
                _ => bad.push((i, j)),
            }
        }
    }
    bad
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PartitionError {
    /// Largest `|sum of child lengths - parent length|` over input segments.
    pub length: f64,
    /// Largest distance from a child edge endpoint to its parent segment.
    pub offset: f64,
}

/// How far the edges cut from each input segment are from tiling it.
pub fn partition_error(set: &SegmentSet, g: &PlanarGraph) -> PartitionError {
    let mut sums = vec![0.0; set.len()];
    let mut worst = PartitionError::default();
    for e in 0..g.edge_count() {
        let Some(parent) = g.edge(e).parent else {
            continue;
        };
        let child = g.edge_segment(e);
        let seg = set.segments()[parent];
        sums[parent] += child.length();
        worst.offset = worst
            .offset
            .max(seg.distance_to(&child.a))
            .max(seg.distance_to(&child.b));
    }
    for (s, sum) in set.segments().iter().zip(sums) {
        worst.length = worst.length.max((s.length() - sum).abs());
    }
    worst
}

/// True if no two non-adjacent sides of the closed ring touch and no
/// vertex repeats.
pub fn ring_is_simple(ring: &[Point], tol: Tolerance) -> bool {
    let n = ring.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            if ring[i].max_distance(&ring[j]) <= tol.eps() {
                return false;
            }
        }
    }
    let side = |i: usize| segpoly::Segment::new(ring[i], ring[(i + 1) % n]);
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let kind = intersect_segments(&side(i), &side(j), tol).kind;
            let ok = match kind {
                IntersectionKind::None => true,
                IntersectionKind::EndpointTouch => adjacent,
                _ => false,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}
