//! JSON records for shapes, regions, maps and verification reports.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::extplane::{ExtComplex, Tolerance};
use crate::oracle::VerificationReport;
use crate::shapes::{Circle, ExtLine, GeneralizedCircle, Region, Side};

/// Either a bare generalized circle or a region bounded by one.
#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Curve(GeneralizedCircle),
    Region(Region),
}

impl Shape {
    pub fn boundary(&self) -> &GeneralizedCircle {
        match self {
            Shape::Curve(g) => g,
            Shape::Region(r) => r.boundary(),
        }
    }
}

impl From<GeneralizedCircle> for Shape {
    fn from(g: GeneralizedCircle) -> Self {
        Shape::Curve(g)
    }
}

impl From<Region> for Shape {
    fn from(r: Region) -> Self {
        Shape::Region(r)
    }
}

/// Object fields consumed so far; anything left over is rejected.
pub(crate) struct Fields<'a> {
    path: String,
    map: &'a Map<String, Value>,
    used: Vec<&'static str>,
}

impl<'a> Fields<'a> {
    pub(crate) fn new(value: &'a Value, path: &str) -> Result<Self> {
        let map = value
            .as_object()
            .ok_or_else(|| Error::parse(path, "expected an object"))?;
        Ok(Fields {
            path: path.to_string(),
            map,
            used: Vec::new(),
        })
    }

    pub(crate) fn child(&self, key: &str) -> String {
        if self.path.is_empty() {
            key.to_string()
        } else {
            format!("{}.{key}", self.path)
        }
    }

    pub(crate) fn get(&mut self, key: &'static str) -> Option<&'a Value> {
        self.used.push(key);
        self.map.get(key)
    }

    pub(crate) fn has(&self, key: &str) -> bool {
        self.map.contains_key(key)
    }

    pub(crate) fn require(&mut self, key: &'static str) -> Result<&'a Value> {
        let path = self.child(key);
        self.get(key)
            .ok_or_else(|| Error::parse(path, "missing required field"))
    }

    pub(crate) fn number(&mut self, key: &'static str) -> Result<f64> {
        let v = self.require(key)?;
        number(v, &self.child(key))
    }

    pub(crate) fn opt_number(&mut self, key: &'static str) -> Result<Option<f64>> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => number(v, &self.child(key)).map(Some),
        }
    }

    pub(crate) fn opt_bool(&mut self, key: &'static str) -> Result<Option<bool>> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => v
                .as_bool()
                .map(Some)
                .ok_or_else(|| Error::parse(self.child(key), "expected true or false")),
        }
    }

    pub(crate) fn point(&mut self, key: &'static str) -> Result<Complex64> {
        let v = self.require(key)?;
        point(v, &self.child(key))
    }

    pub(crate) fn finish(self) -> Result<()> {
        for key in self.map.keys() {
            if !self.used.contains(&key.as_str()) {
                return Err(Error::parse(self.child(key), "unknown field"));
            }
        }
        Ok(())
    }
}

pub(crate) fn number(v: &Value, path: &str) -> Result<f64> {
    match v.as_f64() {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(Error::parse(path, "expected a finite number")),
    }
}

/// `[x, y]` or `[re, im]`.
pub(crate) fn point(v: &Value, path: &str) -> Result<Complex64> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok(Complex64::new(
            number(x, &format!("{path}[0]"))?,
            number(y, &format!("{path}[1]"))?,
        )),
        _ => Err(Error::parse(path, "expected a pair [x, y]")),
    }
}

fn shape_error(path: &str, e: Error) -> Error {
    match e {
        Error::InvalidShape(m) | Error::InvalidArgument(m) => Error::parse(path, m),
        other => other,
    }
}

fn parse_line(f: &mut Fields<'_>) -> Result<ExtLine> {
    let forms = [
        f.has("slope") || f.has("intercept"),
        f.has("vertical_x"),
        f.has("normal") || f.has("offset"),
    ];
    if forms.iter().filter(|&&x| x).count() != 1 {
        return Err(Error::parse(
            f.child("type"),
            "a line needs exactly one of slope/intercept, vertical_x, or normal/offset",
        ));
    }
    let line = if forms[0] {
        let a = f.number("slope")?;
        let b = f.number("intercept")?;
        ExtLine::from_slope(a, b)
    } else if forms[1] {
        ExtLine::vertical(f.number("vertical_x")?)
    } else {
        let n = f.point("normal")?;
        let d = f.number("offset")?;
        ExtLine::new(n.re, n.im, d).map_err(|e| shape_error(&f.child("normal"), e))
    };
    line.map_err(|e| shape_error(&f.child("type"), e))
}

fn parse_circle(f: &mut Fields<'_>) -> Result<Circle> {
    let center = f.point("center")?;
    let radius = f.number("radius")?;
    Circle::new(center, radius).map_err(|e| shape_error(&f.child("radius"), e))
}

fn parse_side(f: &mut Fields<'_>, allowed: [Side; 2]) -> Result<Side> {
    let path = f.child("side");
    match f.get("side") {
        None => Ok(allowed[0]),
        Some(v) => {
            let s = v
                .as_str()
                .ok_or_else(|| Error::parse(&path, "expected a string"))?;
            allowed
                .into_iter()
                .find(|side| side.as_str() == s)
                .ok_or_else(|| {
                    Error::parse(
                        &path,
                        format!(
                            "expected \"{}\" or \"{}\"",
                            allowed[0].as_str(),
                            allowed[1].as_str()
                        ),
                    )
                })
        }
    }
}

fn parse_punctures(f: &mut Fields<'_>) -> Result<Vec<Complex64>> {
    let path = f.child("punctures");
    match f.get("punctures") {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| point(v, &format!("{path}[{i}]")))
            .collect(),
        Some(_) => Err(Error::parse(path, "expected an array of [x, y] pairs")),
    }
}

fn parse_region(
    f: &mut Fields<'_>,
    boundary: GeneralizedCircle,
    sides: [Side; 2],
    tol: &Tolerance,
) -> Result<Region> {
    let side = parse_side(f, sides)?;
    let closed = f.opt_bool("closed")?.unwrap_or(false);
    let contains_infinity = f
        .opt_bool("contains_infinity")?
        .unwrap_or(side == Side::Outside);
    let punctures = parse_punctures(f)?;
    let path = f.child("type");
    Region::from_parts(boundary, side, closed, contains_infinity, punctures, tol)
        .map_err(|e| shape_error(&path, e))
}

/// Parses a shape record.
///
/// ```text
/// {"type":"circle","center":[x,y],"radius":R}
/// {"type":"line","slope":a,"intercept":b} | {"type":"line","vertical_x":c}
///     | {"type":"line","normal":[nx,ny],"offset":d}
/// {"type":"disk","center":[x,y],"radius":R,"closed":bool,
///     "side":"inside"|"outside","contains_infinity":bool,"punctures":[[x,y],…]}
/// {"type":"half_plane",<any line form>,"closed":bool,
///     "side":"positive"|"negative","contains_infinity":bool,"punctures":[…]}
/// ```
///
/// Only `type` and the geometric fields are required. Slope and vertical
/// forms are canonicalized to unit-normal form; the positive side of a
/// slope-form line is `y > ax + b`, of a vertical line `x > c`.
pub fn parse_shape(value: &Value, path: &str, tol: &Tolerance) -> Result<Shape> {
    let mut f = Fields::new(value, path)?;
    let type_path = f.child("type");
    let kind = f
        .require("type")?
        .as_str()
        .ok_or_else(|| Error::parse(&type_path, "expected a string"))?;
    let shape = match kind {
        "circle" => Shape::Curve(parse_circle(&mut f)?.into()),
        "line" => Shape::Curve(parse_line(&mut f)?.into()),
        "disk" => {
            let c = parse_circle(&mut f)?;
            Shape::Region(parse_region(
                &mut f,
                c.into(),
                [Side::Inside, Side::Outside],
                tol,
            )?)
        }
        "half_plane" => {
            let l = parse_line(&mut f)?;
            Shape::Region(parse_region(
                &mut f,
                l.into(),
                [Side::Positive, Side::Negative],
                tol,
            )?)
        }
        other => {
            return Err(Error::parse(
                type_path,
                format!("unknown shape type `{other}` (expected circle, line, disk or half_plane)"),
            ))
        }
    };
    f.finish()?;
    Ok(shape)
}

pub fn parse_shape_str(text: &str, tol: &Tolerance) -> Result<Shape> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("shape", e.to_string()))?;
    parse_shape(&value, "", tol)
}

/// JSON number with `-0.0` folded into `0.0`.
pub(crate) fn num(x: f64) -> Value {
    json!(x + 0.0)
}

pub(crate) fn pair(z: Complex64) -> Value {
    json!([num(z.re), num(z.im)])
}

pub(crate) fn ext_point(p: ExtComplex) -> Value {
    match p {
        ExtComplex::Finite(z) => pair(z),
        ExtComplex::Infinity => json!("inf"),
    }
}

fn boundary_fields(g: &GeneralizedCircle, out: &mut Map<String, Value>) {
    match g {
        GeneralizedCircle::Circle(c) => {
            out.insert("center".into(), pair(c.center()));
            out.insert("radius".into(), num(c.radius()));
        }
        GeneralizedCircle::Line(l) => {
            out.insert("normal".into(), pair(l.normal()));
            out.insert("offset".into(), num(l.offset()));
        }
    }
}

/// Canonical record for a shape; [`parse_shape`] reads it back unchanged.
pub fn shape_to_json(shape: &Shape) -> Value {
    let mut out = Map::new();
    match shape {
        Shape::Curve(g) => {
            let kind = if g.is_line() { "line" } else { "circle" };
            out.insert("type".into(), json!(kind));
            boundary_fields(g, &mut out);
        }
        Shape::Region(r) => {
            let kind = if r.boundary().is_line() {
                "half_plane"
            } else {
                "disk"
            };
            out.insert("type".into(), json!(kind));
            boundary_fields(r.boundary(), &mut out);
            out.insert("side".into(), json!(r.side().as_str()));
            out.insert("closed".into(), json!(r.is_closed()));
            out.insert("contains_infinity".into(), json!(r.contains_infinity()));
            out.insert(
                "punctures".into(),
                Value::Array(r.punctures().iter().map(|&p| pair(p)).collect()),
            );
        }
    }
    Value::Object(out)
}

/// Report record; at most `max_failures` failures are listed in full.
pub fn report_to_json(report: &VerificationReport, max_failures: usize) -> Value {
    let failures: Vec<Value> = report
        .failures
        .iter()
        .take(max_failures)
        .map(|f| {
            json!({
                "point": ext_point(f.point),
                "direction": f.direction.to_string(),
                "detail": f.detail,
            })
        })
        .collect();
    json!({
        "passed": report.passed,
        "samples_forward": report.samples_forward,
        "samples_backward": report.samples_backward,
        "infinite_images": report.infinite_images,
        "max_boundary_residual": num(report.max_boundary_residual),
        "failure_count": report.failures.len(),
        "failures": failures,
    })
}
