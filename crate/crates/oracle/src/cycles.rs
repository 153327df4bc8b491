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

//! Exhaustive cycle enumeration and the exhaustive minimum-basis search
//! built on it. Edge sets are `u64` masks, which caps graphs at 64 edges;
//! [`OracleLimits::max_edges`] is far below that.

use std::collections::HashSet;

use segpoly::PlanarGraph;

use crate::{check_limit, OracleError, OracleLimits};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ElementaryCycle {
    /// Bit `i` is set iff edge `i` is on the cycle.
    pub mask: u64,
    pub weight: f64,
}

impl ElementaryCycle {
    pub fn edges(&self) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..64).filter(move |i| mask >> i & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

fn mask_weight(g: &PlanarGraph, mask: u64) -> f64 {
    (0..g.edge_count())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| g.edge(i).weight)
        .sum()
}

struct Search<'a> {
    g: &'a PlanarGraph,
    start: usize,
    on_path: Vec<bool>,
    found: HashSet<u64>,
}

impl Search<'_> {
    fn extend(&mut self, v: usize, mask: u64, depth: usize) {
        for &(w, e) in self.g.neighbors(v) {
            if w == self.start && depth >= 2 && mask >> e & 1 == 0 {
                self.found.insert(mask | 1 << e);
            } else if w > self.start && !self.on_path[w] {
                self.on_path[w] = true;
                self.extend(w, mask | 1 << e, depth + 1);
                self.on_path[w] = false;
            }
        }
    }
}

/// Every elementary cycle of `g`, found by depth-first search from each
/// vertex over larger-numbered vertices only. Sorted by mask.
pub fn enumerate_elementary_cycles(
    g: &PlanarGraph,
    limits: &OracleLimits,
) -> Result<Vec<ElementaryCycle>, OracleError> {
    check_limit("edges", limits.max_edges.min(64), g.edge_count())?;
    let mut search = Search {
        g,
        start: 0,
        on_path: vec![false; g.vertex_count()],
        found: HashSet::new(),
    };
    for s in 0..g.vertex_count() {
        search.start = s;
        search.on_path[s] = true;
        search.extend(s, 0, 0);
        search.on_path[s] = false;
    }
    check_limit("cycles", limits.max_cycles, search.found.len())?;
    let mut masks: Vec<u64> = search.found.into_iter().collect();
    masks.sort_unstable();
    Ok(masks
        .into_iter()
        .map(|mask| ElementaryCycle {
            mask,
            weight: mask_weight(g, mask),
        })
        .collect())
}

/// XOR basis indexed by leading bit.
#[derive(Clone, Debug, Default)]
pub struct XorBasis {
    rows: Vec<u64>,
}

impl XorBasis {
    fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            v = v.min(v ^ r);
        }
        v
    }

    /// Adds `v` if independent; rows are kept sorted descending so the
    /// `min` trick above clears leading bits in order.
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let pos = self.rows.partition_point(|&r| r > v);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn gf2_rank(vectors: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = XorBasis::default();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BruteForceBasis {
    pub weight: f64,
    pub cycles: Vec<ElementaryCycle>,
}

/// Minimum total weight over all cycle bases: greedy over every elementary
/// cycle in ascending weight, which is optimal because independent edge
/// sets of the cycle space form a matroid.
pub fn brute_force_mcb(
    g: &PlanarGraph,
    limits: &OracleLimits,
) -> Result<BruteForceBasis, OracleError> {
    let mut cycles = enumerate_elementary_cycles(g, limits)?;
    cycles.sort_by(|a, b| a.weight.total_cmp(&b.weight).then(a.mask.cmp(&b.mask)));
    let mut basis = XorBasis::default();
    let chosen: Vec<ElementaryCycle> = cycles
        .into_iter()
        .filter(|c| basis.insert(c.mask))
        .collect();
    Ok(BruteForceBasis {
        weight: chosen.iter().map(|c| c.weight).sum(),
        cycles: chosen,
    })
}
