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

//! End-to-end detection: segments in, polygons out.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::geometry::Tolerance;
use crate::graph::{connected_components, LengthMetric, PlanarGraph};
use crate::mcb::{minimum_cycle_basis, CycleBasis};
use crate::polygon::{polygons_from_cycles, PolygonSet};
use crate::sweep::{build_arrangement, SegmentSet};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DetectConfig {
    pub tolerance: Tolerance,
    pub metric: LengthMetric,
    /// Record wall-clock time per stage.
    pub emit_stats: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StageTimings {
    pub induced_graph: Duration,
    pub cycle_basis: Duration,
    pub polygons: Duration,
}

impl StageTimings {
    pub fn total(&self) -> Duration {
        self.induced_graph + self.cycle_basis + self.polygons
    }
}

/// Size of each intermediate result, in the usual notation: `n` input
/// segments, `m` intersections, a graph with `v` vertices, `e` edges and
/// `p` components, cyclomatic number `nu`, and `c` polygons.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub n: usize,
    pub m: usize,
    pub v: usize,
    pub e: usize,
    pub p: usize,
    pub nu: usize,
    pub c: usize,
    /// Only collected when [`DetectConfig::emit_stats`] is set.
    pub timings: Option<StageTimings>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Detection {
    pub polygons: PolygonSet,
    pub basis: CycleBasis,
    pub graph: PlanarGraph,
    pub stats: RunStats,
}

pub fn detect_polygons(set: &SegmentSet, cfg: &DetectConfig) -> Result<Detection> {
    let start = Instant::now();
    let arrangement = build_arrangement(set, cfg.tolerance)?;
    let graph = arrangement.graph.with_metric(cfg.metric);
    let t_graph = start.elapsed();

    let start = Instant::now();
    let basis = minimum_cycle_basis(&graph)?;
    let t_basis = start.elapsed();

    let start = Instant::now();
    let polygons = polygons_from_cycles(&basis, &graph)?;
    let t_polygons = start.elapsed();

    let p = connected_components(&graph).count;
    let stats = RunStats {
        n: set.len(),
        m: arrangement.intersections.count(),
        v: graph.vertex_count(),
        e: graph.edge_count(),
        p,
        nu: graph.edge_count() + p - graph.vertex_count(),
        c: polygons.len(),
        timings: cfg.emit_stats.then_some(StageTimings {
            induced_graph: t_graph,
            cycle_basis: t_basis,
            polygons: t_polygons,
        }),
    };
    Ok(Detection {
        polygons,
        basis,
        graph,
        stats,
    })
}
