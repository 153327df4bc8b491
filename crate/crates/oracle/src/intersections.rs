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

//! Quadratic all-pairs intersection search.

use std::cmp::Ordering;

use segpoly::geometry::{canonicalize, intersect_segments, junction_point};
use segpoly::{
    Error, IntersectionKind, IntersectionReport, Junction, Point, Segment, SegmentSet, Tolerance,
};

use crate::{check_limit, OracleError, OracleLimits};

/// Tests every pair of segments and groups the proper intersection points
/// that coincide within `eps`.
pub fn naive_intersections(
    set: &SegmentSet,
    tol: Tolerance,
    limits: &OracleLimits,
) -> Result<IntersectionReport, OracleError> {
    check_limit("segments", limits.max_segments, set.len())?;

    let endpoints: Vec<Point> = set.segments().iter().flat_map(|s| [s.a, s.b]).collect();
    let snap = canonicalize(&endpoints, tol);
    let mut segs = Vec::with_capacity(set.len());
    for index in 0..set.len() {
        let a = snap.points[snap.ids[2 * index]];
        let b = snap.points[snap.ids[2 * index + 1]];
        if a == b {
            return Err(Error::ZeroLength { index }.into());
        }
        segs.push(Segment::new(a, b));
    }

    let mut hits: Vec<(Point, usize, usize)> = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let r = intersect_segments(&segs[i], &segs[j], tol);
            match r.kind {
                IntersectionKind::CollinearOverlap => {
                    return Err(Error::Overlap {
                        first: i,
                        second: j,
                    }
                    .into())
                }
                IntersectionKind::ProperPoint => hits.push((r.point.unwrap(), i, j)),
                _ => {}
            }
        }
    }

    let points: Vec<Point> = hits.iter().map(|h| h.0).collect();
    let groups = canonicalize(&points, tol);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); groups.points.len()];
    for (k, &(_, i, j)) in hits.iter().enumerate() {
        members[groups.ids[k]].extend([i, j]);
    }
    let junctions = members
        .into_iter()
        .zip(groups.points)
        .map(|(mut idx, near)| {
            idx.sort_unstable();
            idx.dedup();
            let involved: Vec<Segment> = idx.iter().map(|&i| segs[i]).collect();
            Junction {
                point: junction_point(&involved, near, tol),
                segments: idx,
            }
        })
        .collect();
    Ok(IntersectionReport::new(junctions))
}

/// Compares two reports point by point; returns a description of the first
/// difference.
pub fn report_difference(a: &IntersectionReport, b: &IntersectionReport) -> Option<String> {
    if a.count() != b.count() {
        return Some(format!("{} junctions vs {}", a.count(), b.count()));
    }
    for (x, y) in a.junctions.iter().zip(&b.junctions) {
        if x.point.lex_cmp(&y.point) != Ordering::Equal || x.segments != y.segments {
            return Some(format!(
                "{} {:?} vs {} {:?}",
                x.point, x.segments, y.point, y.segments
            ));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(coords: &[[f64; 4]]) -> SegmentSet {
        SegmentSet::new(
            coords
                .iter()
                .map(|c| Segment::from_coords(c[0], c[1], c[2], c[3]))
                .collect(),
            Tolerance::default(),
        )
        .unwrap()
    }

    #[test]
    fn x_cross() {
        let r = naive_intersections(
            &set(&[[0., 0., 2., 2.], [0., 2., 2., 0.]]),
            Tolerance::default(),
            &OracleLimits::default(),
        )
        .unwrap();
        assert_eq!(r.count(), 1);
        assert_eq!(r.junctions[0].point, Point::new(1., 1.));
    }

    #[test]
    fn triangle() {
        let r = naive_intersections(
            &set(&[[0., 0., 4., 0.], [4., 0., 2., 3.], [2., 3., 0., 0.]]),
            Tolerance::default(),
            &OracleLimits::default(),
        )
        .unwrap();
        assert_eq!(r.count(), 0);
    }

    #[test]
    fn limit_is_enforced() {
        let limits = OracleLimits {
            max_segments: 1,
            ..OracleLimits::default()
        };
        let r = naive_intersections(
            &set(&[[0., 0., 2., 2.], [0., 2., 2., 0.]]),
            Tolerance::default(),
            &limits,
        );
        assert!(matches!(r, Err(OracleError::LimitExceeded { .. })));
    }
}
