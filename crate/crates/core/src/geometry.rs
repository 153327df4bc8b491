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

//! Low-level 2D primitives shared by every stage of the pipeline.
//!
//! All predicates work on plain `f64` coordinates. Near-degenerate
//! configurations are resolved with an absolute [`Tolerance`]: points closer
//! than `eps` (max-norm) are treated as the same point, and a point within
//! `eps` of a segment is treated as lying on it.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default snapping distance, suitable for inputs of roughly unit scale.
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Total lexicographic order on `(x, y)`. This is the sweep order.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Chebyshev distance, used for snapping.
    pub fn max_distance(&self, other: &Point) -> f64 {
        (self.x - other.x).abs().max((self.y - other.y).abs())
    }

    fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }

    fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub const fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn from_coords(x1: f64, y1: f64, x2: f64, y2: f64) -> Self {
        Segment::new(Point::new(x1, y1), Point::new(x2, y2))
    }

    pub fn length(&self) -> f64 {
        self.a.distance(&self.b)
    }

    pub fn direction(&self) -> Point {
        self.b.sub(self.a)
    }

    /// Same segment with endpoints in sweep order (`a` lexicographically first).
    pub fn normalized(&self) -> Segment {
        if self.a.lex_cmp(&self.b) == Ordering::Greater {
            Segment::new(self.b, self.a)
        } else {
            *self
        }
    }

    /// Lexicographic order on normalized endpoint coordinates.
    pub fn lex_cmp(&self, other: &Segment) -> Ordering {
        let (s, t) = (self.normalized(), other.normalized());
        s.a.lex_cmp(&t.a).then_with(|| s.b.lex_cmp(&t.b))
    }

    /// Euclidean distance from `p` to the closest point of the segment.
    pub fn distance_to(&self, p: &Point) -> f64 {
        let d = self.direction();
        let len2 = d.dot(d);
        if len2 == 0.0 {
            return self.a.distance(p);
        }
        let t = (p.sub(self.a).dot(d) / len2).clamp(0.0, 1.0);
        let foot = Point::new(self.a.x + t * d.x, self.a.y + t * d.y);
        foot.distance(p)
    }

    /// Distance from `p` to the infinite line supporting the segment.
    pub fn line_distance(&self, p: &Point) -> f64 {
        let d = self.direction();
        let len = d.x.hypot(d.y);
        if len == 0.0 {
            return self.a.distance(p);
        }
        d.cross(p.sub(self.a)).abs() / len
    }

    /// Signed position of the orthogonal projection of `p`, measured as a
    /// distance from `a` along the segment.
    pub fn project(&self, p: &Point) -> f64 {
        let d = self.direction();
        let len = d.x.hypot(d.y);
        p.sub(self.a).dot(d) / len
    }

    fn has_endpoint_near(&self, p: &Point, eps: f64) -> bool {
        self.a.max_distance(p) <= eps || self.b.max_distance(p) <= eps
    }
}

/// Absolute snapping distance in drawing units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps >= 0.0 {
            Ok(Tolerance { eps })
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    /// No snapping at all; only bit-identical points coincide.
    pub const fn exact() -> Self {
        Tolerance { eps: 0.0 }
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: DEFAULT_EPSILON,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[repr(i8)]
pub enum Orientation {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = 1,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        self as i8
    }

    fn from_value(v: f64) -> Self {
        if v > 0.0 {
            Orientation::CounterClockwise
        } else if v < 0.0 {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

/// Sign of the cross product `(q - p) x (r - p)`.
pub fn orient(p: Point, q: Point, r: Point) -> Orientation {
    Orientation::from_value(q.sub(p).cross(r.sub(p)))
}

/// Like [`orient`], but reports `Collinear` whenever `r` lies within `eps` of
/// the line through `p` and `q`.
pub fn orient_with_tolerance(p: Point, q: Point, r: Point, tol: Tolerance) -> Orientation {
    if Segment::new(p, q).line_distance(&r) <= tol.eps() {
        Orientation::Collinear
    } else {
        orient(p, q, r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntersectionKind {
    None,
    /// Interiors cross, or an endpoint of one segment lies inside the other.
    ProperPoint,
    /// The segments share an endpoint and nothing else.
    EndpointTouch,
    /// The segments share more than one point.
    CollinearOverlap,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntersectionResult {
    pub kind: IntersectionKind,
    pub point: Option<Point>,
}

impl IntersectionResult {
    const NONE: IntersectionResult = IntersectionResult {
        kind: IntersectionKind::None,
        point: None,
    };
    const OVERLAP: IntersectionResult = IntersectionResult {
        kind: IntersectionKind::CollinearOverlap,
        point: None,
    };

    fn proper(p: Point) -> Self {
        IntersectionResult {
            kind: IntersectionKind::ProperPoint,
            point: Some(p),
        }
    }

    fn touch(p: Point) -> Self {
        IntersectionResult {
            kind: IntersectionKind::EndpointTouch,
            point: Some(p),
        }
    }

    pub fn is_proper(&self) -> bool {
        self.kind == IntersectionKind::ProperPoint
    }
}

fn lex_min(p: Point, q: Point) -> Point {
    if q.lex_cmp(&p) == Ordering::Less {
        q
    } else {
        p
    }
}

/// Classifies how two segments meet.
///
/// The result does not depend on argument order or on the orientation of
/// either segment: both are normalized and put in a canonical order first,
/// so even the floating-point crossing point is bit-identical under swaps.
pub fn intersect_segments(s: &Segment, t: &Segment, tol: Tolerance) -> IntersectionResult {
    let eps = tol.eps();
    let (s, t) = {
        let (s, t) = (s.normalized(), t.normalized());
        if s.lex_cmp(&t) == Ordering::Greater {
            (t, s)
        } else {
            (s, t)
        }
    };

    let mut shared = None;
    for p in [s.a, s.b] {
        for q in [t.a, t.b] {
            if p.max_distance(&q) <= eps {
                let m = lex_min(p, q);
                shared = Some(shared.map_or(m, |prev| lex_min(prev, m)));
            }
        }
    }

    let collinear = s.line_distance(&t.a) <= eps
        && s.line_distance(&t.b) <= eps
        && t.line_distance(&s.a) <= eps
        && t.line_distance(&s.b) <= eps;
    if collinear {
        let len = s.length();
        let (p0, p1) = (s.project(&t.a), s.project(&t.b));
        let overlap = len.min(p0.max(p1)) - 0f64.max(p0.min(p1));
        if overlap > eps {
            return IntersectionResult::OVERLAP;
        }
        return match shared {
            Some(p) => IntersectionResult::touch(p),
            None => IntersectionResult::NONE,
        };
    }

    if let Some(p) = shared {
        return IntersectionResult::touch(p);
    }

    // T-junctions: an endpoint of one segment inside the other.
    for (stem, bar) in [(&t, &s), (&s, &t)] {
        for e in [stem.a, stem.b] {
            if bar.distance_to(&e) <= eps && !bar.has_endpoint_near(&e, eps) {
                return IntersectionResult::proper(e);
            }
        }
    }

    let o1 = orient(s.a, s.b, t.a).sign();
    let o2 = orient(s.a, s.b, t.b).sign();
    let o3 = orient(t.a, t.b, s.a).sign();
    let o4 = orient(t.a, t.b, s.b).sign();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        let ds = s.direction();
        let dt = t.direction();
        let u = t.a.sub(s.a).cross(dt) / ds.cross(dt);
        return IntersectionResult::proper(Point::new(s.a.x + u * ds.x, s.a.y + u * ds.y));
    }
    IntersectionResult::NONE
}

/// Result of [`canonicalize`]: `ids[i]` is the vertex of input point `i`,
/// and `points[id]` is that vertex's representative coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct Canonical {
    pub ids: Vec<usize>,
    pub points: Vec<Point>,
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller sorted position as root
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Merges points that lie within `eps` of each other (max-norm, closed
/// transitively) into vertices.
///
/// Each vertex is represented by the lexicographically smallest member of
/// its cluster, and vertex ids follow the lexicographic order of the
/// representatives, so the outcome depends only on the set of input points.
pub fn canonicalize(points: &[Point], tol: Tolerance) -> Canonical {
    let eps = tol.eps();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].lex_cmp(&points[j]));

    // Union-find over sorted positions.
    let mut sets = DisjointSet::new(order.len());
    for i in 0..order.len() {
        let p = points[order[i]];
        for j in i + 1..order.len() {
            let q = points[order[j]];
            if q.x - p.x > eps {
                break;
            }
            if (q.y - p.y).abs() <= eps {
                sets.union(i, j);
            }
        }
    }

    let mut root_id = vec![usize::MAX; order.len()];
    let mut reps = Vec::new();
    let mut ids = vec![0; points.len()];
    for (pos, &idx) in order.iter().enumerate() {
        let root = sets.find(pos);
        if root_id[root] == usize::MAX {
            // roots are the smallest sorted position of their cluster
            root_id[root] = reps.len();
            reps.push(points[order[root]]);
        }
        ids[idx] = root_id[root];
    }
    Canonical { ids, points: reps }
}

/// Deterministic location of a junction where `segments` meet near `near`.
///
/// If one of the segments ends at the junction, its endpoint wins (the
/// lexicographically smallest if several do). Otherwise the crossing point
/// of the two lexicographically smallest segments is used. Only the set of
/// segments matters, not the order they were discovered in.
pub fn junction_point(segments: &[Segment], near: Point, tol: Tolerance) -> Point {
    let eps = tol.eps();
    let endpoint = segments
        .iter()
        .flat_map(|s| [s.a, s.b])
        .filter(|p| p.max_distance(&near) <= eps)
        .min_by(|p, q| p.lex_cmp(q));
    if let Some(p) = endpoint {
        return p;
    }
    let mut sorted: Vec<Segment> = segments.to_vec();
    sorted.sort_by(|s, t| s.lex_cmp(t));
    if sorted.len() >= 2 {
        if let Some(p) = intersect_segments(&sorted[0], &sorted[1], tol).point {
            return p;
        }
    }
    near
}
