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

//! Command-line front end: read a segment file, detect polygons, write JSON
//! and optionally an SVG picture.

pub mod input;
pub mod output;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use segpoly::{detect_polygons, DetectConfig, Error, LengthMetric, SegmentSet, Tolerance};
use thiserror::Error as ThisError;

pub use input::{ParseError, SegmentFile};
pub use output::{format_number, render_json, render_stats_table};
pub use svg::render_svg;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    #[default]
    Euclidean,
    Hops,
}

impl From<Metric> for LengthMetric {
    fn from(m: Metric) -> Self {
        match m {
            Metric::Euclidean => LengthMetric::Euclidean,
            Metric::Hops => LengthMetric::HopCount,
        }
    }
}

/// Find the minimal polygons formed by a set of line segments.
#[derive(Debug, Parser)]
#[command(name = "segpoly", version)]
pub struct Args {
    /// Segment file, one `x1 y1 x2 y2` per line.
    #[arg(long)]
    pub input: PathBuf,
    /// Where to write the JSON result (default: stdout).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Absolute distance below which points are identified.
    #[arg(long, default_value_t = segpoly::DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Edge length used when ranking cycles.
    #[arg(long, value_enum, default_value_t = Metric::Euclidean)]
    pub metric: Metric,
    /// Also draw segments, graph and polygons to this SVG file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Time each stage and print a summary table to stderr.
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Internal(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

fn io_err(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Rewrites a core error in terms of input line numbers.
fn describe(err: Error, lines: &[usize]) -> CliError {
    let line = |i: usize| lines.get(i).copied().unwrap_or(i + 1);
    match err {
        Error::ZeroLength { index } => {
            CliError::Input(format!("zero-length segment at line {}", line(index)))
        }
        Error::NonFinite { index } => {
            CliError::Input(format!("non-finite coordinate at line {}", line(index)))
        }
        Error::Overlap { first, second } => {
            let (a, b) = (line(first).min(line(second)), line(first).max(line(second)));
            CliError::Input(format!(
                "collinear overlap between segments at lines {a} and {b}"
            ))
        }
        Error::InvalidTolerance(eps) => CliError::Input(format!("invalid epsilon {eps}")),
        other => CliError::Internal(other),
    }
}

pub fn execute(args: &Args) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.input).map_err(io_err(&args.input))?;
    let file = SegmentFile::parse(&text).map_err(|e| CliError::Input(e.to_string()))?;
    let tolerance = Tolerance::new(args.epsilon).map_err(|e| describe(e, &file.lines))?;
    let set =
        SegmentSet::new(file.segments.clone(), tolerance).map_err(|e| describe(e, &file.lines))?;
    let cfg = DetectConfig {
        tolerance,
        metric: args.metric.into(),
        emit_stats: args.stats,
    };
    let detection = detect_polygons(&set, &cfg).map_err(|e| describe(e, &file.lines))?;

    let json = render_json(&detection);
    match &args.output {
        Some(path) => std::fs::write(path, json).map_err(io_err(path))?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(json.as_bytes())
                .and_then(|_| out.flush())
                .map_err(io_err("<stdout>".as_ref()))?;
        }
    }
    if let Some(path) = &args.svg {
        std::fs::write(path, render_svg(set.segments(), &detection)).map_err(io_err(path))?;
    }
    if args.stats {
        eprint!("{}", render_stats_table(&detection));
    }
    Ok(())
}

/// Parses `argv` (including the program name), runs, and returns the
/// process exit code. Diagnostics go to stderr.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&args) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("segpoly: {e}");
            e.exit_code()
        }
    }
}
