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

//! Inputs shared by the benchmarks.

use segpoly::{build_arrangement, PlanarGraph, SegmentSet, Tolerance};
use segpoly_oracle::fixtures;

/// Drawing sizes used by the scaling benchmarks.
pub const SIZES: [usize; 3] = [250, 500, 1000];

pub fn drawing(n: usize) -> SegmentSet {
    SegmentSet::new(fixtures::random_drawing(1, n), Tolerance::default())
        .expect("generated drawings are valid")
}

pub fn drawing_graph(n: usize) -> PlanarGraph {
    build_arrangement(&drawing(n), Tolerance::default())
        .expect("generated drawings have no overlaps")
        .graph
}
