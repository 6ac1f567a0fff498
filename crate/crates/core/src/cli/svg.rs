//! Deterministic SVG 1.1 rendering of a shape and its image.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::record::Shape;
use crate::error::{Error, Result};
use crate::shapes::{Circle, ExtLine, GeneralizedCircle, Region, Side};

/// Axis-aligned window `[xmin, xmax] × [ymin, ymax]` in world coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

impl Default for Viewport {
    fn default() -> Self {
        Viewport {
            xmin: -4.0,
            ymin: -4.0,
            xmax: 4.0,
            ymax: 4.0,
        }
    }
}

impl Viewport {
    pub fn new(xmin: f64, ymin: f64, xmax: f64, ymax: f64) -> Result<Self> {
        let v = Viewport {
            xmin,
            ymin,
            xmax,
            ymax,
        };
        v.validate()?;
        Ok(v)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.xmin, self.ymin, self.xmax, self.ymax]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.xmin >= self.xmax || self.ymin >= self.ymax {
            return Err(Error::InvalidArgument(format!(
                "degenerate viewport [{}, {}, {}, {}]",
                self.xmin, self.ymin, self.xmax, self.ymax
            )));
        }
        Ok(())
    }

    fn width(&self) -> f64 {
        self.xmax - self.xmin
    }

    fn height(&self) -> f64 {
        self.ymax - self.ymin
    }

    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.xmin, self.ymin),
            Complex64::new(self.xmax, self.ymin),
            Complex64::new(self.xmax, self.ymax),
            Complex64::new(self.xmin, self.ymax),
        ]
    }

    /// Whether any point of the circle lies in the window.
    fn meets_circle(&self, c: &Circle) -> bool {
        let p = c.center();
        let nearest = Complex64::new(
            p.re.clamp(self.xmin, self.xmax),
            p.im.clamp(self.ymin, self.ymax),
        );
        let far = self
            .corners()
            .iter()
            .map(|&q| (q - p).norm())
            .fold(0.0, f64::max);
        (nearest - p).norm() <= c.radius() && c.radius() <= far
    }

    /// Liang–Barsky clip of a line to the window.
    fn clip_line(&self, l: &ExtLine) -> Option<(Complex64, Complex64)> {
        let p0 = l.anchor();
        let dir = l.direction();
        let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
        for (p, q) in [
            (-dir.re, p0.re - self.xmin),
            (dir.re, self.xmax - p0.re),
            (-dir.im, p0.im - self.ymin),
            (dir.im, self.ymax - p0.im),
        ] {
            if p == 0.0 {
                if q < 0.0 {
                    return None;
                }
            } else {
                let t = q / p;
                if p < 0.0 {
                    t0 = t0.max(t);
                } else {
                    t1 = t1.min(t);
                }
            }
        }
        (t0 < t1).then(|| (p0 + dir * t0, p0 + dir * t1))
    }

    /// The part of the window on `side` of the line (Sutherland–Hodgman).
    fn clip_half_plane(&self, l: &ExtLine, side: Side) -> Vec<Complex64> {
        let s = side.sign();
        let corners = self.corners();
        let mut out = Vec::with_capacity(5);
        for i in 0..4 {
            let (a, b) = (corners[i], corners[(i + 1) % 4]);
            let (fa, fb) = (s * l.signed(a), s * l.signed(b));
            if fa >= 0.0 {
                out.push(a);
            }
            if (fa >= 0.0) != (fb >= 0.0) {
                out.push(a + (b - a) * (fa / (fa - fb)));
            }
        }
        out
    }
}

const CANVAS_WIDTH: f64 = 600.0;

fn n(x: f64) -> String {
    format!("{}", x + 0.0)
}

struct Canvas {
    body: String,
    viewport: Viewport,
    stroke: f64,
}

impl Canvas {
    fn circle(&mut self, c: &Circle, class: &str) {
        let _ = writeln!(
            self.body,
            r#"    <circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            n(c.center().re),
            n(c.center().im),
            n(c.radius())
        );
    }

    fn warn(&mut self, role: &str, what: &str) {
        let _ = writeln!(
            self.body,
            "    <!-- warning: {role} {what} lies outside the viewport, omitted -->"
        );
    }

    fn polygon_path(points: &[Complex64]) -> String {
        let mut d = String::new();
        for (i, p) in points.iter().enumerate() {
            let cmd = if i == 0 { "M" } else { " L" };
            let _ = write!(d, "{cmd} {} {}", n(p.re), n(p.im));
        }
        d.push_str(" Z");
        d
    }

    fn curve(&mut self, g: &GeneralizedCircle, role: &str, class: &str) {
        match g {
            GeneralizedCircle::Circle(c) => {
                if self.viewport.meets_circle(c) {
                    self.circle(c, class);
                } else {
                    self.warn(role, "circle");
                }
            }
            GeneralizedCircle::Line(l) => match self.viewport.clip_line(l) {
                Some((a, b)) => {
                    let _ = writeln!(
                        self.body,
                        r#"    <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                        n(a.re),
                        n(a.im),
                        n(b.re),
                        n(b.im)
                    );
                }
                None => self.warn(role, "line"),
            },
        }
    }

    fn region(&mut self, r: &Region, role: &str) {
        let edge = if r.is_closed() { "closed" } else { "open" };
        let class = format!("{role} region {edge}");
        match (r.boundary(), r.side()) {
            (GeneralizedCircle::Circle(c), Side::Inside) => {
                if self.viewport.meets_circle(c) {
                    self.circle(c, &class);
                } else {
                    self.warn(role, "disk");
                }
            }
            (GeneralizedCircle::Circle(c), _) => {
                let rect = Self::polygon_path(&self.viewport.corners());
                let (x, y, rad) = (c.center().re, c.center().im, c.radius());
                let _ = writeln!(
                    self.body,
                    r#"    <path class="{role} fill" fill-rule="evenodd" d="{rect} M {} {} A {} {} 0 1 0 {} {} A {} {} 0 1 0 {} {} Z"/>"#,
                    n(x + rad),
                    n(y),
                    n(rad),
                    n(rad),
                    n(x - rad),
                    n(y),
                    n(rad),
                    n(rad),
                    n(x + rad),
                    n(y)
                );
                self.curve(r.boundary(), role, &format!("{role} {edge}"));
            }
            (GeneralizedCircle::Line(l), side) => {
                let poly = self.viewport.clip_half_plane(l, side);
                if poly.len() >= 3 {
                    let _ = writeln!(
                        self.body,
                        r#"    <path class="{role} fill" d="{}"/>"#,
                        Self::polygon_path(&poly)
                    );
                } else {
                    self.warn(role, "half-plane");
                }
                if self.viewport.clip_line(l).is_some() {
                    self.curve(r.boundary(), role, &format!("{role} {edge}"));
                }
            }
        }
        for &p in r.punctures() {
            let v = self.viewport;
            if (v.xmin..=v.xmax).contains(&p.re) && (v.ymin..=v.ymax).contains(&p.im) {
                let _ = writeln!(
                    self.body,
                    r#"    <circle class="{role} puncture" cx="{}" cy="{}" r="{}"/>"#,
                    n(p.re),
                    n(p.im),
                    n(3.0 * self.stroke)
                );
            }
        }
        if r.contains_infinity() {
            let _ = writeln!(
                self.body,
                "    <!-- {role} region contains the point at infinity -->"
            );
        }
    }

    fn shape(&mut self, s: &Shape, role: &str) {
        match s {
            Shape::Curve(g) => self.curve(g, role, role),
            Shape::Region(r) => self.region(r, role),
        }
    }
}

/// Renders `original`, `image` and the unit circle into an SVG document.
///
/// World coordinates are used directly (y axis flipped), circles become
/// `<circle>` elements and lines are clipped to the viewport; region
/// exteriors and half-planes are filled paths clipped to the viewport.
pub fn emit_svg(original: &Shape, image: &Shape, viewport: Viewport) -> Result<String> {
    viewport.validate()?;
    let (w, h) = (viewport.width(), viewport.height());
    let stroke = w.max(h) / 300.0;
    let mut canvas = Canvas {
        body: String::new(),
        viewport,
        stroke,
    };

    let unit = Circle::new(Complex64::new(0.0, 0.0), 1.0).expect("unit circle");
    let x_axis = ExtLine::from_slope(0.0, 0.0).expect("x axis");
    let y_axis = ExtLine::vertical(0.0).expect("y axis");
    for axis in [x_axis, y_axis] {
        if let Some((a, b)) = viewport.clip_line(&axis) {
            let _ = writeln!(
                canvas.body,
                r#"    <line class="axis" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                n(a.re),
                n(a.im),
                n(b.re),
                n(b.im)
            );
        }
    }
    if viewport.meets_circle(&unit) {
        canvas.circle(&unit, "unit");
    }
    canvas.shape(original, "original");
    canvas.shape(image, "image");

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        n(CANVAS_WIDTH),
        n((CANVAS_WIDTH * h / w).round()),
        n(viewport.xmin),
        n(-viewport.ymax),
        n(w),
        n(h)
    );
    let sw = n(stroke);
    let _ = writeln!(svg, "  <style>");
    let _ = writeln!(
        svg,
        "    circle, line, path {{ fill: none; stroke-width: {sw}; }}"
    );
    let _ = writeln!(svg, "    .axis {{ stroke: #bbbbbb; }}");
    let _ = writeln!(
        svg,
        "    .unit {{ stroke: #888888; stroke-dasharray: {} {}; }}",
        n(4.0 * stroke),
        n(4.0 * stroke)
    );
    let _ = writeln!(svg, "    .original {{ stroke: #1f77b4; }}");
    let _ = writeln!(svg, "    .image {{ stroke: #d62728; }}");
    let _ = writeln!(
        svg,
        "    .region.original, .fill.original {{ fill: #1f77b4; fill-opacity: 0.15; }}"
    );
    let _ = writeln!(
        svg,
        "    .region.image, .fill.image {{ fill: #d62728; fill-opacity: 0.15; }}"
    );
    let _ = writeln!(svg, "    .fill {{ stroke: none; }}");
    let _ = writeln!(
        svg,
        "    .open {{ stroke-dasharray: {} {}; }}",
        n(2.0 * stroke),
        n(2.0 * stroke)
    );
    let _ = writeln!(svg, "    .puncture {{ fill: #ffffff; fill-opacity: 1; }}");
    let _ = writeln!(svg, "  </style>");
    let _ = writeln!(svg, r#"  <g transform="scale(1,-1)">"#);
    svg.push_str(&canvas.body);
    let _ = writeln!(svg, "  </g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
