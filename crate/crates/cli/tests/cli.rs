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

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use segpoly_cli::SegmentFile;
use segpoly_oracle::fixtures;
use serde_json::Value;

const SQUARE: &str =
    "# square with diagonals\n0 0 2 0\n2 0 2 2\n2 2 0 2\n0 2 0 0\n0 0 2 2\n2 0 0 2\n";

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segpoly"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn square_with_diagonals_gives_four_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "sq.txt", SQUARE);
    let out = run(&["--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(
        text.starts_with("{\"stats\":{\"n\":6,\"m\":1,\"v\":5,\"e\":8,\"p\":1,\"nu\":4,\"c\":4}")
    );
    assert!(!text.contains("ms_per_stage"));
    let v = json(&out);
    let polys = v["polygons"].as_array().unwrap();
    assert_eq!(polys.len(), 4);
    for p in polys {
        assert_eq!(p["area"].as_f64(), Some(1.0));
        assert_eq!(p["ring"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn printed_areas_match_the_printed_rings() {
    let dir = tempfile::tempdir().unwrap();
    let segs = fixtures::random_drawing(3, 120);
    let input = write(dir.path(), "r.txt", &SegmentFile::render(&segs));
    let out = run(&["--input", input.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    let polys = v["polygons"].as_array().unwrap();
    assert_eq!(polys.len() as u64, v["stats"]["c"].as_u64().unwrap());
    let mut last = f64::NEG_INFINITY;
    for p in polys {
        let ring: Vec<(f64, f64)> = p["ring"]
            .as_array()
            .unwrap()
            .iter()
            .map(|q| (q[0].as_f64().unwrap(), q[1].as_f64().unwrap()))
            .collect();
        let twice: f64 = (0..ring.len())
            .map(|i| {
                let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
                a.0 * b.1 - b.0 * a.1
            })
            .sum();
        let area = p["area"].as_f64().unwrap();
        assert!(area > 0.0);
        assert!(
            (twice / 2.0 - area).abs() <= 1e-6 * area.max(1.0),
            "{area} vs {}",
            twice / 2.0
        );
        assert!(area >= last, "sorted by area");
        last = area;
    }
}

#[test]
fn output_file_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "sq.txt", SQUARE);
    let target = dir.path().join("out.json");
    let out = run(&[
        "--input",
        input.to_str().unwrap(),
        "--output",
        target.to_str().unwrap(),
        "--stats",
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("intersections") && stderr.contains("basis_ms"),
        "{stderr}"
    );
    let v: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    let ms = &v["stats"]["ms_per_stage"];
    for key in ["induced_graph", "cycle_basis", "polygons"] {
        assert!(ms[key].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn hop_metric_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "sq.txt", SQUARE);
    let out = run(&["--input", input.to_str().unwrap(), "--metric", "hops"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["stats"]["c"], 4);
    let bad = run(&["--input", input.to_str().unwrap(), "--metric", "manhattan"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn svg_has_three_layers_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "sq.txt", SQUARE);
    let mut pictures = Vec::new();
    for k in 0..2 {
        let svg = dir.path().join(format!("sq{k}.svg"));
        let out = run(&[
            "--input",
            input.to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        pictures.push(std::fs::read_to_string(svg).unwrap());
    }
    assert_eq!(pictures[0], pictures[1]);
    let doc = roxmltree::Document::parse(&pictures[0]).unwrap();
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let view: Vec<f64> = root
        .attribute("viewBox")
        .unwrap()
        .split(' ')
        .map(|t| t.parse().unwrap())
        .collect();
    assert!(
        (view[0] + 0.1).abs() < 1e-9 && (view[2] - 2.2).abs() < 1e-9,
        "{view:?}"
    );
    let group = |id: &str| root.children().find(|n| n.attribute("id") == Some(id));
    assert_eq!(
        group("polygons")
            .unwrap()
            .children()
            .filter(|n| n.has_tag_name("path"))
            .count(),
        4
    );
    assert_eq!(
        group("segments")
            .unwrap()
            .children()
            .filter(|n| n.has_tag_name("line"))
            .count(),
        6
    );
    let graph = group("graph").unwrap();
    assert_eq!(
        graph.children().filter(|n| n.has_tag_name("line")).count(),
        8
    );
    assert_eq!(
        graph
            .children()
            .filter(|n| n.has_tag_name("circle"))
            .count(),
        5
    );
}

#[test]
fn svg_without_polygons_has_two_layers() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "x.txt", "0 0 1 1\n0 1 1 0\n");
    let svg = dir.path().join("x.svg");
    let out = run(&[
        "--input",
        input.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(svg).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    let ids: Vec<&str> = doc
        .root_element()
        .children()
        .filter_map(|n| n.attribute("id"))
        .collect();
    assert_eq!(ids, ["segments", "graph"]);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let out = run(&["--input", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let bad = write(dir.path(), "bad.txt", "0 0 1 1\n\n0 0 1\n");
    let out = run(&["--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let sq = write(dir.path(), "sq.txt", SQUARE);
    let out = run(&["--input", sq.to_str().unwrap(), "--epsilon", "-1"]);
    assert_eq!(out.status.code(), Some(2));

    let unwritable = dir.path().join("no/such/dir/out.json");
    let out = run(&[
        "--input",
        sq.to_str().unwrap(),
        "--output",
        unwritable.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));

    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn epsilon_merges_nearby_endpoints() {
    let dir = tempfile::tempdir().unwrap();
    let gap = write(dir.path(), "gap.txt", "0 0 1 0\n1.001 0 0.5 1\n0.5 1 0 0\n");
    let strict = run(&["--input", gap.to_str().unwrap()]);
    assert_eq!(json(&strict)["stats"]["c"], 0);
    let loose = run(&["--input", gap.to_str().unwrap(), "--epsilon", "0.01"]);
    assert_eq!(json(&loose)["stats"]["c"], 1);
}
