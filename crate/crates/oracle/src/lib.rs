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

//! Brute-force reference implementations and test fixtures for `segpoly`.
//!
//! Nothing here is used by the library itself. The oracles deliberately
//! take the slowest obvious route (all pairs, all cycles) and share only
//! the primitive predicates in [`segpoly::geometry`] with the code they
//! check.

pub mod checks;
pub mod cycles;
pub mod fixtures;
pub mod intersections;

use thiserror::Error;

pub use cycles::{brute_force_mcb, enumerate_elementary_cycles, BruteForceBasis, ElementaryCycle};
pub use intersections::naive_intersections;

/// Size caps that keep the exhaustive oracles tractable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_segments: usize,
    pub max_edges: usize,
    pub max_cycles: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_segments: 1000,
            max_edges: 12,
            max_cycles: 1 << 16,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("{what}: {actual} exceeds the oracle limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error(transparent)]
    Input(#[from] segpoly::Error),
}

fn check_limit(what: &'static str, limit: usize, actual: usize) -> Result<(), OracleError> {
    if actual > limit {
        Err(OracleError::LimitExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
