//! The `circline` command-line front end: job records, the `map`, `verify`
//! and `plot` commands, and SVG rendering.
//!
//! A job is one JSON record:
//!
//! ```text
//! {
//!   "transform": [[a_re, a_im], [b_re, b_im], [c_re, c_im], [d_re, d_im]],
//!   "shape": { "type": "circle", "center": [3, 0], "radius": 1 },
//!   "options": { "tol": 1e-9, "samples": 1000, "seed": 0, "viewport": [-4, -4, 4, 4] }
//! }
//! ```
//!
//! `transform` defaults to the inversion `z ↦ 1/z` and `options` to the
//! defaults shown. `tol` is either a number (classification and residual
//! tolerance) or an object with `classify_tol`, `residual_tol` and `margin`.

mod record;
mod svg;

use std::path::Path;

use serde_json::{json, Value};

pub use record::{parse_shape, parse_shape_str, report_to_json, shape_to_json, Shape};
pub use svg::{emit_svg, Viewport};

use crate::error::{Error, Result};
use crate::extplane::Tolerance;
use crate::moebius::{map_gcircle_with_case, map_region_with_case, MapCase, MoebiusMap};
use crate::oracle::{verify_gcircle_image, verify_region_image};
use record::{number, point, Fields};

/// Environment variable holding a default tolerance; `--tol` wins over it.
pub const TOL_ENV: &str = "CIRCLINE_TOL";

pub const DEFAULT_SAMPLES: usize = 1000;

/// Failures listed in full in a `verify` report.
const REPORTED_FAILURES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JobOptions {
    pub tol: Tolerance,
    pub samples: usize,
    pub seed: u64,
    pub viewport: Viewport,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            tol: Tolerance::default(),
            samples: DEFAULT_SAMPLES,
            seed: 0,
            viewport: Viewport::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobSpec {
    pub transform: MoebiusMap,
    pub shape: Shape,
    pub options: JobOptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Map,
    Verify,
    Plot,
}

/// Settings from the command line or environment, applied over the record.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub env_tol: Option<f64>,
    pub tol: Option<f64>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub viewport: Option<Viewport>,
}

/// A single scalar tolerance sets both classification and residual
/// tolerance, raising the sampling margin if needed to stay above them.
pub fn scalar_tolerance(t: f64) -> Result<Tolerance> {
    let base = Tolerance::default();
    Tolerance::new(t, t, base.margin.max(t))
}

fn parse_tolerance(v: &Value, path: &str) -> Result<Tolerance> {
    let tol = if v.is_number() {
        scalar_tolerance(number(v, path)?)
    } else {
        let mut f = Fields::new(v, path)?;
        let d = Tolerance::default();
        let tol = Tolerance {
            classify_tol: f.opt_number("classify_tol")?.unwrap_or(d.classify_tol),
            residual_tol: f.opt_number("residual_tol")?.unwrap_or(d.residual_tol),
            margin: f.opt_number("margin")?.unwrap_or(d.margin),
        };
        f.finish()?;
        tol.validate().map(|_| tol)
    };
    tol.map_err(|e| match e {
        Error::InvalidArgument(m) => Error::parse(path, m),
        other => other,
    })
}

fn parse_count(v: &Value, path: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::parse(path, "expected a non-negative integer"))
}

fn parse_viewport(v: &Value, path: &str) -> Result<Viewport> {
    let items = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| Error::parse(path, "expected [xmin, ymin, xmax, ymax]"))?;
    let mut c = [0.0; 4];
    for (i, item) in items.iter().enumerate() {
        c[i] = number(item, &format!("{path}[{i}]"))?;
    }
    Viewport::new(c[0], c[1], c[2], c[3]).map_err(|e| Error::parse(path, e.to_string()))
}

fn parse_options(v: &Value, path: &str) -> Result<JobOptions> {
    let mut f = Fields::new(v, path)?;
    let mut opts = JobOptions::default();
    if let Some(t) = f.get("tol") {
        opts.tol = parse_tolerance(t, &f.child("tol"))?;
    }
    if let Some(s) = f.get("samples") {
        let path = f.child("samples");
        opts.samples = parse_count(s, &path)? as usize;
        if opts.samples == 0 {
            return Err(Error::parse(path, "sample count must be at least 1"));
        }
    }
    if let Some(s) = f.get("seed") {
        opts.seed = parse_count(s, &f.child("seed"))?;
    }
    if let Some(vp) = f.get("viewport") {
        opts.viewport = parse_viewport(vp, &f.child("viewport"))?;
    }
    f.finish()?;
    Ok(opts)
}

fn parse_transform(v: &Value, path: &str) -> Result<MoebiusMap> {
    let items = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| Error::parse(path, "expected four [re, im] pairs"))?;
    let mut c = [num_complex::Complex64::new(0.0, 0.0); 4];
    for (i, item) in items.iter().enumerate() {
        c[i] = point(item, &format!("{path}[{i}]"))?;
    }
    MoebiusMap::new(c[0], c[1], c[2], c[3]).map_err(|e| Error::parse(path, e.to_string()))
}

/// Parses a job record. Unknown fields are rejected with their path.
///
/// The shape is validated with the record's own tolerance (puncture
/// placement depends on it).
pub fn parse_job(text: &str) -> Result<JobSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::parse("", e.to_string()))?;
    let mut f = Fields::new(&value, "")?;
    let transform = match f.get("transform") {
        Some(t) => parse_transform(t, "transform")?,
        None => MoebiusMap::inversion(),
    };
    let options = match f.get("options") {
        Some(o) => parse_options(o, "options")?,
        None => JobOptions::default(),
    };
    let shape = parse_shape(f.require("shape")?, "shape", &options.tol)?;
    f.finish()?;
    Ok(JobSpec {
        transform,
        shape,
        options,
    })
}

impl JobSpec {
    /// Applies overrides in increasing precedence: environment, record,
    /// command-line flags.
    pub fn with_overrides(mut self, o: &Overrides, record_sets_tol: bool) -> Result<Self> {
        if let (Some(t), false) = (o.env_tol, record_sets_tol) {
            self.options.tol = scalar_tolerance(t)?;
        }
        if let Some(t) = o.tol {
            self.options.tol = scalar_tolerance(t)?;
        }
        if let Some(s) = o.samples {
            if s == 0 {
                return Err(Error::InvalidArgument(
                    "sample count must be at least 1".into(),
                ));
            }
            self.options.samples = s;
        }
        if let Some(s) = o.seed {
            self.options.seed = s;
        }
        if let Some(v) = o.viewport {
            v.validate()?;
            self.options.viewport = v;
        }
        Ok(self)
    }
}

/// Reads a job from text and applies overrides.
pub fn load_job(text: &str, overrides: &Overrides) -> Result<JobSpec> {
    let job = parse_job(text)?;
    let record_sets_tol = serde_json::from_str::<Value>(text)
        .ok()
        .and_then(|v| v.get("options").and_then(|o| o.get("tol")).cloned())
        .is_some();
    job.with_overrides(overrides, record_sets_tol)
}

/// The image of the job's shape and the branch that produced it.
pub fn compute_image(job: &JobSpec) -> (Shape, MapCase) {
    let tol = &job.options.tol;
    match &job.shape {
        Shape::Curve(g) => {
            let (img, case) = map_gcircle_with_case(&job.transform, g, tol);
            (Shape::Curve(img), case)
        }
        Shape::Region(r) => {
            let (img, case) = map_region_with_case(&job.transform, r, tol);
            (Shape::Region(img), case)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub exit_code: i32,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Runs one command. `out` is the SVG destination for `plot`; without it the
/// SVG goes to stdout.
pub fn run(job: &JobSpec, command: Command, out: Option<&Path>) -> Result<RunOutput> {
    let (image, case) = compute_image(job);
    match command {
        Command::Map => Ok(RunOutput {
            stdout: pretty(&json!({
                "case": case.tag(),
                "image": shape_to_json(&image),
            })),
            exit_code: 0,
        }),
        Command::Verify => {
            let o = &job.options;
            let report = match (&job.shape, &image) {
                (Shape::Curve(g), Shape::Curve(img)) => {
                    verify_gcircle_image(&job.transform, g, img, o.samples, o.seed, &o.tol)?
                }
                (Shape::Region(r), Shape::Region(img)) => {
                    verify_region_image(&job.transform, r, img, o.samples, o.seed, &o.tol)?
                }
                _ => unreachable!("images keep the shape kind"),
            };
            Ok(RunOutput {
                stdout: pretty(&json!({
                    "case": case.tag(),
                    "image": shape_to_json(&image),
                    "report": report_to_json(&report, REPORTED_FAILURES),
                })),
                exit_code: if report.passed { 0 } else { 1 },
            })
        }
        Command::Plot => {
            let svg = emit_svg(&job.shape, &image, job.options.viewport)?;
            match out {
                Some(path) => {
                    std::fs::write(path, svg).map_err(|e| with_path(e, path))?;
                    Ok(RunOutput {
                        stdout: format!("wrote {}\n", path.display()),
                        exit_code: 0,
                    })
                }
                None => Ok(RunOutput {
                    stdout: svg,
                    exit_code: 0,
                }),
            }
        }
    }
}

/// Prefixes an I/O error with the file it concerns.
pub fn with_path(e: std::io::Error, path: &Path) -> Error {
    Error::Io(std::io::Error::new(
        e.kind(),
        format!("{}: {e}", path.display()),
    ))
}

/// Process exit status for an error: 2 for bad input, 3 for I/O, 1 when a
/// verification could not be carried out.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) => 3,
        Error::DegenerateRegion(_) => 1,
        Error::Parse { .. }
        | Error::InvalidShape(_)
        | Error::InvalidArgument(_)
        | Error::DegenerateMap { .. } => 2,
    }
}
