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

//! JSON report: run statistics followed by the polygons.

use std::cmp::Ordering;

use segpoly::{Detection, Point, Polygon};
use serde::Serialize;
use serde_json::value::RawValue;

/// Formats `x` with 9 significant digits, in plain decimal notation unless
/// the exponent is extreme. Negative zero prints as zero.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000".to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-7..=15).contains(&exp) {
        return sci;
    }
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let mut out = String::with_capacity(24);
    if negative {
        out.push('-');
    }
    if exp >= 0 {
        let int_len = exp as usize + 1;
        if int_len >= digits.len() {
            out.push_str(&digits);
            out.extend(std::iter::repeat_n('0', int_len - digits.len()));
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    } else {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
        out.push_str(&digits);
    }
    out
}

fn number(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_number(x)).expect("formatted number is valid JSON")
}

#[derive(Serialize)]
struct StageMillis {
    induced_graph: Box<RawValue>,
    cycle_basis: Box<RawValue>,
    polygons: Box<RawValue>,
}

#[derive(Serialize)]
struct Stats {
    n: usize,
    m: usize,
    v: usize,
    e: usize,
    p: usize,
    nu: usize,
    c: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    ms_per_stage: Option<StageMillis>,
}

#[derive(Serialize)]
struct PolygonEntry {
    area: Box<RawValue>,
    ring: Vec<[Box<RawValue>; 2]>,
}

#[derive(Serialize)]
struct Report {
    stats: Stats,
    polygons: Vec<PolygonEntry>,
}

fn ring_cmp(a: &[Point], b: &[Point]) -> Ordering {
    for (p, q) in a.iter().zip(b) {
        let o = p.lex_cmp(q);
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

/// Polygons in output order: by area, then ring coordinates.
pub fn sorted_polygons(d: &Detection) -> Vec<&Polygon> {
    let mut polys: Vec<&Polygon> = d.polygons.iter().collect();
    polys.sort_by(|a, b| {
        a.area()
            .total_cmp(&b.area())
            .then_with(|| ring_cmp(a.ring(), b.ring()))
    });
    polys
}

/// The JSON document for a finished run, newline-terminated. Stage timings
/// appear only if they were collected.
pub fn render_json(d: &Detection) -> String {
    let s = &d.stats;
    let ms = |t: std::time::Duration| number(t.as_secs_f64() * 1e3);
    let report = Report {
        stats: Stats {
            n: s.n,
            m: s.m,
            v: s.v,
            e: s.e,
            p: s.p,
            nu: s.nu,
            c: s.c,
            ms_per_stage: s.timings.map(|t| StageMillis {
                induced_graph: ms(t.induced_graph),
                cycle_basis: ms(t.cycle_basis),
                polygons: ms(t.polygons),
            }),
        },
        polygons: sorted_polygons(d)
            .into_iter()
            .map(|p| PolygonEntry {
                area: number(p.area()),
                ring: p
                    .ring()
                    .iter()
                    .map(|q| [number(q.x), number(q.y)])
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string(&report).expect("serializable report");
    out.push('\n');
    out
}

/// Fixed-width summary table of a run.
pub fn render_stats_table(d: &Detection) -> String {
    let s = &d.stats;
    let mut out = format!(
        "{:>8} {:>13} {:>8} {:>8} {:>10} {:>8} {:>8}",
        "lines", "intersections", "nodes", "edges", "components", "nu", "polygons"
    );
    let mut row = format!(
        "{:>8} {:>13} {:>8} {:>8} {:>10} {:>8} {:>8}",
        s.n, s.m, s.v, s.e, s.p, s.nu, s.c
    );
    if let Some(t) = s.timings {
        out.push_str(&format!(
            " {:>10} {:>10} {:>10}",
            "graph_ms", "basis_ms", "poly_ms"
        ));
        let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
        row.push_str(&format!(
            " {:>10.3} {:>10.3} {:>10.3}",
            ms(t.induced_graph),
            ms(t.cycle_basis),
            ms(t.polygons)
        ));
    }
    out.push('\n');
    out.push_str(&row);
    out.push('\n');
    out
}
