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

//! SVG rendering of a run: filled polygons under the induced graph under
//! the input segments. The y axis is flipped so drawings appear upright.

use std::fmt::Write;

use segpoly::{Detection, Point, Segment};

use crate::output::{format_number, sorted_polygons};

struct Frame {
    min_x: f64,
    min_y: f64,
    width: f64,
    height: f64,
    scale: f64,
}

impl Frame {
    fn fit(segments: &[Segment]) -> Self {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in segments.iter().flat_map(|s| [s.a, s.b]) {
            min = Point::new(min.x.min(p.x), min.y.min(p.y));
            max = Point::new(max.x.max(p.x), max.y.max(p.y));
        }
        if segments.is_empty() {
            min = Point::new(0.0, 0.0);
            max = Point::new(1.0, 1.0);
        }
        let scale = (max.x - min.x).max(max.y - min.y).max(f64::MIN_POSITIVE);
        // Degenerate extents borrow the other axis so nothing has zero size.
        let w = if max.x > min.x { max.x - min.x } else { scale };
        let h = if max.y > min.y { max.y - min.y } else { scale };
        let (cx, cy) = ((min.x + max.x) / 2.0, (min.y + max.y) / 2.0);
        let (width, height) = (w * 1.1, h * 1.1);
        Frame {
            min_x: cx - width / 2.0,
            min_y: -(cy + height / 2.0),
            width,
            height,
            scale,
        }
    }
}

fn xy(p: Point) -> (String, String) {
    (format_number(p.x), format_number(-p.y))
}

pub fn render_svg(segments: &[Segment], d: &Detection) -> String {
    let f = Frame::fit(segments);
    let stroke = format_number(f.scale * 0.004);
    let radius = format_number(f.scale * 0.008);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        format_number(f.min_x),
        format_number(f.min_y),
        format_number(f.width),
        format_number(f.height)
    );

    if !d.polygons.is_empty() {
        out.push_str("<g id=\"polygons\" fill=\"#9ecae1\" fill-opacity=\"0.7\" stroke=\"none\">\n");
        for poly in sorted_polygons(d) {
            out.push_str("<path d=\"");
            for (i, &p) in poly.ring().iter().enumerate() {
                let (x, y) = xy(p);
                let _ = write!(out, "{}{x} {y} ", if i == 0 { "M" } else { "L" });
            }
            out.push_str("Z\"/>\n");
        }
        out.push_str("</g>\n");
    }

    let _ = writeln!(
        out,
        "<g id=\"segments\" stroke=\"#bbbbbb\" stroke-width=\"{}\" stroke-linecap=\"round\">",
        format_number(f.scale * 0.012)
    );
    for s in segments {
        line(&mut out, s);
    }
    out.push_str("</g>\n");

    let _ = writeln!(
        out,
        "<g id=\"graph\" stroke=\"#08306b\" stroke-width=\"{stroke}\" fill=\"#08306b\">"
    );
    for id in 0..d.graph.edge_count() {
        line(&mut out, &d.graph.edge_segment(id));
    }
    for &p in d.graph.vertices() {
        let (x, y) = xy(p);
        let _ = writeln!(
            out,
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"{radius}\" stroke=\"none\"/>"
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn line(out: &mut String, s: &Segment) {
    let (x1, y1) = xy(s.a);
    let (x2, y2) = xy(s.b);
    let _ = writeln!(
        out,
        "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>"
    );
}
