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

//! Turning basis cycles into polygons.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::PlanarGraph;
use crate::mcb::CycleBasis;

/// Shoelace area, positive for counterclockwise rings. Coordinates are
/// taken relative to the first vertex to limit cancellation.
pub fn signed_area(ring: &[Point]) -> f64 {
    let Some(origin) = ring.first() else {
        return 0.0;
    };
    let mut twice = 0.0;
    for (p, q) in ring.iter().zip(ring.iter().cycle().skip(1)) {
        let (px, py) = (p.x - origin.x, p.y - origin.y);
        let (qx, qy) = (q.x - origin.x, q.y - origin.y);
        twice += px * qy - qx * py;
    }
    twice / 2.0
}

pub fn polygon_area(ring: &[Point]) -> f64 {
    signed_area(ring).abs()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    ring: Vec<Point>,
    vertices: Vec<usize>,
    area: f64,
    cycle: usize,
}

impl Polygon {
    /// Counterclockwise ring; the closing vertex is implicit.
    pub fn ring(&self) -> &[Point] {
        &self.ring
    }

    /// Graph vertex ids matching [`ring`](Self::ring).
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Position of the source cycle in the basis.
    pub fn cycle(&self) -> usize {
        self.cycle
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PolygonSet {
    polygons: Vec<Polygon>,
}

impl PolygonSet {
    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Polygon> {
        self.polygons.iter()
    }
}

impl<'a> IntoIterator for &'a PolygonSet {
    type Item = &'a Polygon;
    type IntoIter = std::slice::Iter<'a, Polygon>;

    fn into_iter(self) -> Self::IntoIter {
        self.polygons.iter()
    }
}

/// One polygon per basis cycle. Each ring starts at the cycle's smallest
/// vertex id and runs counterclockwise.
pub fn polygons_from_cycles(basis: &CycleBasis, g: &PlanarGraph) -> Result<PolygonSet> {
    let polygons = basis
        .iter()
        .enumerate()
        .map(|(index, cycle)| {
            let mut vertices = cycle
                .vertex_sequence(g)
                .ok_or(Error::MalformedCycle { index })?;
            let mut ring: Vec<Point> = vertices.iter().map(|&v| g.vertex(v)).collect();
            let signed = signed_area(&ring);
            if signed == 0.0 || !signed.is_finite() {
                return Err(Error::MalformedCycle { index });
            }
            if signed < 0.0 {
                vertices[1..].reverse();
                ring[1..].reverse();
            }
            Ok(Polygon {
                ring,
                vertices,
                area: signed.abs(),
                cycle: index,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolygonSet { polygons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcb::minimum_cycle_basis;

    fn pts(c: &[(f64, f64)]) -> Vec<Point> {
        c.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn area_examples() {
        assert_eq!(
            polygon_area(&pts(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)])),
            1.0
        );
        assert_eq!(polygon_area(&pts(&[(0., 0.), (4., 0.), (2., 3.)])), 6.0);
        assert_eq!(signed_area(&pts(&[(0., 0.), (2., 3.), (4., 0.)])), -6.0);
        assert_eq!(polygon_area(&pts(&[(0., 0.), (1., 1.), (2., 2.)])), 0.0);
    }

    #[test]
    fn triangle_polygon() {
        let g = PlanarGraph::from_geometry(
            pts(&[(0., 0.), (2., 3.), (4., 0.)]),
            &[(0, 1), (1, 2), (0, 2)],
        )
        .unwrap();
        let basis = minimum_cycle_basis(&g).unwrap();
        let polys = polygons_from_cycles(&basis, &g).unwrap();
        assert_eq!(polys.len(), 1);
        let p = &polys.polygons()[0];
        assert_eq!(p.area(), 6.0);
        assert_eq!(p.vertices(), &[0, 2, 1]);
        assert_eq!(p.ring()[0], Point::new(0., 0.));
        assert!(signed_area(p.ring()) > 0.0);
    }

    #[test]
    fn empty_basis_gives_no_polygons() {
        let g = PlanarGraph::new(vec![], vec![]).unwrap();
        let polys = polygons_from_cycles(&CycleBasis::default(), &g).unwrap();
        assert!(polys.is_empty());
    }

    #[test]
    fn square_with_diagonals_gives_quarter_triangles() {
        let s = 3.0;
        let g = PlanarGraph::from_geometry(
            pts(&[(0., 0.), (0., s), (s / 2., s / 2.), (s, 0.), (s, s)]),
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
        .unwrap();
        let polys = polygons_from_cycles(&minimum_cycle_basis(&g).unwrap(), &g).unwrap();
        assert_eq!(polys.len(), 4);
        for p in &polys {
            assert!((p.area() - s * s / 4.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn collinear_cycle_is_malformed() {
        let g = PlanarGraph::from_geometry(
            pts(&[(0., 0.), (1., 0.), (2., 0.)]),
            &[(0, 1), (1, 2), (0, 2)],
        )
        .unwrap();
        let basis = minimum_cycle_basis(&g).unwrap();
        assert_eq!(
            polygons_from_cycles(&basis, &g),
            Err(Error::MalformedCycle { index: 0 })
        );
    }
}
