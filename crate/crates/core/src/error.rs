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

use thiserror::Error;

/// Everything that can go wrong while detecting polygons.
///
/// Segment indices are positions in the input [`SegmentSet`](crate::SegmentSet),
/// counted from zero.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("segment {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("segment {index} has zero length")]
    ZeroLength { index: usize },
    #[error("segments {first} and {second} overlap collinearly")]
    Overlap { first: usize, second: usize },
    #[error("tolerance must be finite and non-negative, got {0}")]
    InvalidTolerance(f64),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("found {found} independent cycles, expected {expected}")]
    RankDeficiency { expected: usize, found: usize },
    #[error("cycle {index} is not a single closed elementary walk")]
    MalformedCycle { index: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
