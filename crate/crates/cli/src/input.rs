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

//! Plain-text segment files: one `x1 y1 x2 y2` per line, `#` comments and
//! blank lines ignored.

use segpoly::Segment;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// Segments with the 1-based line number each was read from.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SegmentFile {
    pub segments: Vec<Segment>,
    pub lines: Vec<usize>,
}

impl SegmentFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut file = SegmentFile::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(ParseError {
                    line,
                    message: format!("expected 4 numbers, found {} fields", fields.len()),
                });
            }
            let mut c = [0.0; 4];
            for (slot, field) in c.iter_mut().zip(&fields) {
                *slot = match field.parse::<f64>() {
                    Ok(v) if v.is_finite() => v,
                    _ => {
                        return Err(ParseError {
                            line,
                            message: format!("'{field}' is not a finite number"),
                        })
                    }
                };
            }
            file.segments
                .push(Segment::from_coords(c[0], c[1], c[2], c[3]));
            file.lines.push(line);
        }
        Ok(file)
    }

    /// Writes segments back in the same format, one per line.
    pub fn render(segments: &[Segment]) -> String {
        segments
            .iter()
            .map(|s| format!("{} {} {} {}\n", s.a.x, s.a.y, s.b.x, s.b.y))
            .collect()
    }
}
