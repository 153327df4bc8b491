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

//! Plane sweep over a set of segments: reports every proper intersection
//! and cuts the segments into the edges of the induced planar graph.
//!
//! Events are visited in lexicographic `(x, y)` order. At each event point
//! the sweep collects every active segment passing within `eps` of the
//! point, reorders those that continue (plus those that start there) by
//! direction, and tests only the newly adjacent pairs for future crossings.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{
    canonicalize, intersect_segments, junction_point, orient, IntersectionKind, Orientation, Point,
    Segment, Tolerance,
};
use crate::graph::{Edge, PlanarGraph};

/// Validated input segments.
#[derive(Clone, Debug, PartialEq)]
pub struct SegmentSet {
    segments: Vec<Segment>,
}

impl SegmentSet {
    /// Rejects non-finite coordinates and segments shorter than `eps`.
    /// Collinear overlaps are only detected by the sweep itself.
    pub fn new(segments: Vec<Segment>, tol: Tolerance) -> Result<Self> {
        for (index, s) in segments.iter().enumerate() {
            if !(s.a.is_finite() && s.b.is_finite()) {
                return Err(Error::NonFinite { index });
            }
            if s.a.max_distance(&s.b) <= tol.eps() {
                return Err(Error::ZeroLength { index });
            }
        }
        Ok(SegmentSet { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }
}

/// A point where at least two segments meet and at least one of them
/// passes through (rather than ends at) the point.
#[derive(Clone, Debug, PartialEq)]
pub struct Junction {
    pub point: Point,
    /// Indices of every segment through the point, sorted.
    pub segments: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct IntersectionReport {
    /// Junctions sorted by point.
    pub junctions: Vec<Junction>,
}

impl IntersectionReport {
    pub fn new(mut junctions: Vec<Junction>) -> Self {
        junctions.sort_by(|a, b| a.point.lex_cmp(&b.point));
        IntersectionReport { junctions }
    }

    /// Number of distinct intersection points.
    pub fn count(&self) -> usize {
        self.junctions.len()
    }
}

/// Snaps every endpoint to its canonical vertex and orients each segment in
/// sweep order. Fails if snapping collapses a segment.
pub fn snap_segments(set: &SegmentSet, tol: Tolerance) -> Result<Vec<Segment>> {
    let endpoints: Vec<Point> = set.segments.iter().flat_map(|s| [s.a, s.b]).collect();
    let canon = canonicalize(&endpoints, tol);
    set.segments
        .iter()
        .enumerate()
        .map(|(index, _)| {
            let a = canon.points[canon.ids[2 * index]];
            let b = canon.points[canon.ids[2 * index + 1]];
            if a == b {
                Err(Error::ZeroLength { index })
            } else {
                Ok(Segment::new(a, b).normalized())
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Key(Point);

impl Eq for Key {}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.lex_cmp(&other.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    /// The segment passes below the point.
    Below,
    On,
    Above,
}

fn overlap_error(s: usize, t: usize) -> Error {
    Error::Overlap {
        first: s.min(t),
        second: s.max(t),
    }
}

struct Sweep<'a> {
    segs: &'a [Segment],
    tol: Tolerance,
    /// Event points, each with the segments that start there.
    queue: BTreeMap<Key, Vec<usize>>,
    /// Active segments, bottom to top.
    status: Vec<usize>,
    junctions: Vec<Junction>,
}

impl<'a> Sweep<'a> {
    fn new(segs: &'a [Segment], tol: Tolerance) -> Self {
        let mut queue: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
        for (i, s) in segs.iter().enumerate() {
            queue.entry(Key(s.a)).or_default().push(i);
            queue.entry(Key(s.b)).or_default();
        }
        Sweep {
            segs,
            tol,
            queue,
            status: Vec::new(),
            junctions: Vec::new(),
        }
    }

    fn run(mut self) -> Result<Vec<Junction>> {
        while let Some((Key(p), starts)) = self.queue.pop_first() {
            self.handle(p, starts)?;
        }
        let segs = self.segs;
        let tol = self.tol;
        Ok(self
            .junctions
            .into_iter()
            .map(|j| {
                let members: Vec<Segment> = j.segments.iter().map(|&i| segs[i]).collect();
                Junction {
                    point: junction_point(&members, j.point, tol),
                    segments: j.segments,
                }
            })
            .collect())
    }

    fn side(&self, s: usize, p: Point) -> Side {
        let seg = &self.segs[s];
        if seg.distance_to(&p) <= self.tol.eps() {
            return Side::On;
        }
        match orient(seg.a, seg.b, p) {
            Orientation::CounterClockwise => Side::Below,
            Orientation::Clockwise => Side::Above,
            // only reachable for a point on the line beyond the segment
            Orientation::Collinear => {
                if p.lex_cmp(&seg.b) == Ordering::Greater {
                    Side::Below
                } else {
                    Side::Above
                }
            }
        }
    }

    /// Bottom-to-top order of segments leaving a common point.
    fn direction_cmp(&self, s: usize, t: usize) -> Ordering {
        let (ds, dt) = (self.segs[s].direction(), self.segs[t].direction());
        let cross = ds.x * dt.y - ds.y * dt.x;
        0.0.partial_cmp(&cross)
            .unwrap_or(Ordering::Equal)
            .then(s.cmp(&t))
    }

    fn handle(&mut self, p: Point, starts: Vec<usize>) -> Result<()> {
        let eps = self.tol.eps();
        let split = self
            .status
            .partition_point(|&s| self.side(s, p) == Side::Below);
        let mut lo = split;
        while lo > 0 && self.side(self.status[lo - 1], p) == Side::On {
            lo -= 1;
        }
        let mut hi = split;
        while hi < self.status.len() && self.side(self.status[hi], p) == Side::On {
            hi += 1;
        }
        let through: Vec<usize> = self.status.drain(lo..hi).collect();
        let (ending, mut group): (Vec<usize>, Vec<usize>) = through
            .into_iter()
            .partition(|&s| self.segs[s].b.max_distance(&p) <= eps);

        if !group.is_empty() && group.len() + ending.len() + starts.len() >= 2 {
            let mut members: Vec<usize> = group
                .iter()
                .chain(&ending)
                .chain(&starts)
                .copied()
                .collect();
            members.sort_unstable();
            self.junctions.push(Junction {
                point: p,
                segments: members,
            });
        }

        group.extend(starts);
        group.sort_by(|&s, &t| self.direction_cmp(s, t));
        for w in group.windows(2) {
            if intersect_segments(&self.segs[w[0]], &self.segs[w[1]], self.tol).kind
                == IntersectionKind::CollinearOverlap
            {
                return Err(overlap_error(w[0], w[1]));
            }
        }

        let below = lo.checked_sub(1).map(|i| self.status[i]);
        let above = self.status.get(lo).copied();
        match (group.first().copied(), group.last().copied()) {
            (Some(first), Some(last)) => {
                if let Some(b) = below {
                    self.check(b, first, p)?;
                }
                if let Some(a) = above {
                    self.check(last, a, p)?;
                }
            }
            _ => {
                if let (Some(b), Some(a)) = (below, above) {
                    self.check(b, a, p)?;
                }
            }
        }
        self.status.splice(lo..lo, group);
        Ok(())
    }

    fn check(&mut self, s: usize, t: usize, p: Point) -> Result<()> {
        let r = intersect_segments(&self.segs[s], &self.segs[t], self.tol);
        match (r.kind, r.point) {
            (IntersectionKind::CollinearOverlap, _) => Err(overlap_error(s, t)),
            (IntersectionKind::ProperPoint, Some(q)) => {
                if q.lex_cmp(&p) == Ordering::Greater && q.max_distance(&p) > self.tol.eps() {
                    self.schedule(q);
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Adds an event at `q` unless one already exists within `eps`.
    fn schedule(&mut self, q: Point) {
        let eps = self.tol.eps();
        let lo = Key(Point::new(q.x - eps, f64::NEG_INFINITY));
        let hi = Key(Point::new(q.x + eps, f64::INFINITY));
        let exists = self
            .queue
            .range(lo..=hi)
            .any(|(k, _)| k.0.max_distance(&q) <= eps);
        if !exists {
            self.queue.insert(Key(q), Vec::new());
        }
    }
}

/// Every proper intersection point (crossings and T-junctions), each with
/// all segments passing through it.
pub fn find_intersections(set: &SegmentSet, tol: Tolerance) -> Result<IntersectionReport> {
    let segs = snap_segments(set, tol)?;
    Ok(IntersectionReport::new(Sweep::new(&segs, tol).run()?))
}

/// Induced graph together with the intersections it was cut at.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement {
    pub graph: PlanarGraph,
    pub intersections: IntersectionReport,
}

/// Builds the planar graph induced by `set` and reports the intersections
/// found along the way. Edge weights are Euclidean lengths.
pub fn build_arrangement(set: &SegmentSet, tol: Tolerance) -> Result<Arrangement> {
    let segs = snap_segments(set, tol)?;
    let intersections = IntersectionReport::new(Sweep::new(&segs, tol).run()?);

    let mut points: Vec<Point> = segs.iter().flat_map(|s| [s.a, s.b]).collect();
    points.extend(intersections.junctions.iter().map(|j| j.point));
    let canon = canonicalize(&points, tol);

    // (position along the segment, vertex) for every vertex on each segment
    let mut stops: Vec<Vec<(f64, usize)>> = segs
        .iter()
        .enumerate()
        .map(|(i, s)| vec![(0.0, canon.ids[2 * i]), (s.length(), canon.ids[2 * i + 1])])
        .collect();
    for (k, j) in intersections.junctions.iter().enumerate() {
        let vertex = canon.ids[2 * segs.len() + k];
        for &i in &j.segments {
            stops[i].push((segs[i].project(&j.point), vertex));
        }
    }

    let mut edges: Vec<Edge> = Vec::new();
    for (i, list) in stops.iter_mut().enumerate() {
        list.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        list.dedup_by_key(|s| s.1);
        for w in list.windows(2) {
            let (u, v) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
            edges.push(Edge {
                u,
                v,
                weight: canon.points[u].distance(&canon.points[v]),
                parent: Some(i),
            });
        }
    }
    edges.sort_by_key(|e| (e.u, e.v));
    if let Some(w) = edges
        .windows(2)
        .find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v))
    {
        let (a, b) = (w[0].parent.unwrap_or(0), w[1].parent.unwrap_or(0));
        return Err(overlap_error(a, b));
    }

    let graph = PlanarGraph::new(canon.points, edges)?;
    Ok(Arrangement {
        graph,
        intersections,
    })
}

/// The planar graph induced by `set`: vertices at endpoints and proper
/// intersections, edges along the pieces of segments between them.
pub fn compute_induced_graph(set: &SegmentSet, tol: Tolerance) -> Result<PlanarGraph> {
    build_arrangement(set, tol).map(|a| a.graph)
}
