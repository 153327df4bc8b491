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

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use segpoly::{
    all_pairs_shortest_paths, detect_polygons, find_intersections, minimum_cycle_basis,
    DetectConfig, SegmentSet, Tolerance,
};
use segpoly_bench::{drawing, drawing_graph, SIZES};
use segpoly_oracle::fixtures;

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_intersections");
    for n in SIZES {
        let set = drawing(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &set, |b, s| {
            b.iter(|| find_intersections(black_box(s), Tolerance::default()).unwrap())
        });
    }
    group.finish();
}

fn cycle_basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("cycle_basis");
    group.sample_size(10);
    for n in SIZES {
        let g = drawing_graph(n);
        group.bench_with_input(BenchmarkId::new("apsp", n), &g, |b, g| {
            b.iter(|| all_pairs_shortest_paths(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("minimum_cycle_basis", n), &g, |b, g| {
            b.iter(|| minimum_cycle_basis(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let cfg = DetectConfig::default();
    let small =
        SegmentSet::new(fixtures::six_lines_nine_crossings(), Tolerance::default()).unwrap();
    c.bench_function("detect_polygons/six_lines", |b| {
        b.iter(|| detect_polygons(black_box(&small), &cfg).unwrap())
    });
    let mut group = c.benchmark_group("detect_polygons");
    group.sample_size(10);
    for n in SIZES {
        let set = drawing(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &set, |b, s| {
            b.iter(|| detect_polygons(black_box(s), &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweep, cycle_basis, pipeline);
criterion_main!(benches);
