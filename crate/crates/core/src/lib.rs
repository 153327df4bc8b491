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

//! Detection of minimal polygons in a drawing made of straight line
//! segments.
//!
//! The pipeline has four stages:
//!
//! 1. a plane sweep finds every proper intersection ([`find_intersections`]);
//! 2. segments are cut at those points into the edges of a planar graph
//!    ([`compute_induced_graph`]);
//! 3. Horton's algorithm computes a minimum cycle basis of that graph
//!    ([`minimum_cycle_basis`]);
//! 4. each basis cycle becomes a polygon ([`polygons_from_cycles`]).
//!
//! [`detect_polygons`] runs all of them.
//!
//! ```
//! use segpoly::{detect_polygons, DetectConfig, Segment, SegmentSet, Tolerance};
//!
//! let square_and_diagonals = [
//!     (0., 0., 1., 0.), (1., 0., 1., 1.), (1., 1., 0., 1.),
//!     (0., 1., 0., 0.), (0., 0., 1., 1.), (1., 0., 0., 1.),
//! ];
//! let segments = square_and_diagonals
//!     .iter()
//!     .map(|&(x1, y1, x2, y2)| Segment::from_coords(x1, y1, x2, y2))
//!     .collect();
//! let set = SegmentSet::new(segments, Tolerance::default()).unwrap();
//! let found = detect_polygons(&set, &DetectConfig::default()).unwrap();
//! assert_eq!(found.polygons.len(), 4);
//! ```

pub mod error;
pub mod geometry;
pub mod gf2;
pub mod graph;
pub mod mcb;
pub mod pipeline;
pub mod polygon;
pub mod sweep;

pub use error::{Error, Result};
pub use geometry::{
    canonicalize, intersect_segments, junction_point, orient, orient_with_tolerance, Canonical,
    IntersectionKind, IntersectionResult, Orientation, Point, Segment, Tolerance, DEFAULT_EPSILON,
};
pub use graph::{
    all_pairs_shortest_paths, connected_components, cyclomatic_number, ApspResult, Components,
    Edge, LengthMetric, PlanarGraph,
};
pub use mcb::{
    horton_candidates, minimum_cycle_basis, order_by_length, select_cycles, CandidateSet, Cycle,
    CycleBasis,
};
pub use pipeline::{detect_polygons, DetectConfig, Detection, RunStats, StageTimings};
pub use polygon::{polygon_area, polygons_from_cycles, signed_area, Polygon, PolygonSet};
pub use sweep::{
    build_arrangement, compute_induced_graph, find_intersections, Arrangement, IntersectionReport,
    Junction, SegmentSet,
};
