//! Generalized circles, regions of the Riemann sphere, membership and
//! incidence classification, and the samplers used by the oracle.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extplane::{approx_eq, ExtComplex, Tolerance};

/// Half-width of the parameter window used when sampling a line.
pub const LINE_SAMPLE_HALF_WIDTH: f64 = 1e3;

/// Proposals drawn per requested point before `sample_region` gives up.
const MAX_PROPOSALS: usize = 10_000;

/// Sampled region points never exceed this multiple of the region scale.
const MAX_SAMPLE_EXTENT: f64 = 1e8;

/// The circle `S(center, radius)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    center: Complex64,
    radius: f64,
}

impl Circle {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if !(center.re.is_finite() && center.im.is_finite()) {
            return Err(Error::InvalidShape("circle center must be finite".into()));
        }
        if !radius.is_finite() {
            return Err(Error::InvalidShape("radius must be finite".into()));
        }
        if radius <= 0.0 {
            return Err(Error::InvalidShape("radius must be positive".into()));
        }
        Ok(Circle { center, radius })
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// `R² − |p − center|²`: positive inside, negative outside.
    pub fn power(&self, p: Complex64) -> f64 {
        self.radius * self.radius - (p - self.center).norm_sqr()
    }

    /// Point at angle `phi`, i.e. `center + R·e^{iφ}`.
    pub fn point_at(&self, phi: f64) -> Complex64 {
        self.center + Complex64::from_polar(self.radius, phi)
    }
}

/// An extended line `{p : n·p = d} ∪ {∞}` with unit normal `n`.
///
/// The normal is stored as the complex number `n_x + i·n_y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtLine {
    normal: Complex64,
    offset: f64,
}

impl ExtLine {
    /// Line `n_x·x + n_y·y = d`; the normal need not be unit length.
    pub fn new(nx: f64, ny: f64, d: f64) -> Result<Self> {
        if !(nx.is_finite() && ny.is_finite() && d.is_finite()) {
            return Err(Error::InvalidShape(
                "line coefficients must be finite".into(),
            ));
        }
        let len = nx.hypot(ny);
        if len == 0.0 {
            return Err(Error::InvalidShape("line normal must be nonzero".into()));
        }
        Ok(ExtLine {
            normal: Complex64::new(nx / len, ny / len),
            offset: d / len,
        })
    }

    /// `y = a·x + b`, stored with normal `∝ (−a, 1)`.
    pub fn from_slope(slope: f64, intercept: f64) -> Result<Self> {
        Self::new(-slope, 1.0, intercept)
    }

    /// `x = c`, stored with normal `(1, 0)`.
    pub fn vertical(c: f64) -> Result<Self> {
        Self::new(1.0, 0.0, c)
    }

    pub(crate) fn from_unit(normal: Complex64, offset: f64) -> Self {
        ExtLine { normal, offset }
    }

    pub fn normal(&self) -> Complex64 {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// `n·p − d`: positive on the side the normal points to.
    pub fn signed(&self, p: Complex64) -> f64 {
        dot(self.normal, p) - self.offset
    }

    /// Foot of the perpendicular from the origin.
    pub fn anchor(&self) -> Complex64 {
        self.normal * self.offset
    }

    /// Unit direction, the normal turned a quarter turn counter-clockwise.
    pub fn direction(&self) -> Complex64 {
        self.normal * Complex64::i()
    }

    pub fn point_at(&self, t: f64) -> Complex64 {
        self.anchor() + self.direction() * t
    }

    /// Same point set, opposite orientation.
    pub fn flipped(&self) -> Self {
        ExtLine {
            normal: -self.normal,
            offset: -self.offset,
        }
    }
}

pub(crate) fn dot(a: Complex64, b: Complex64) -> f64 {
    a.re * b.re + a.im * b.im
}

/// A circle, or a line together with the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneralizedCircle {
    Circle(Circle),
    Line(ExtLine),
}

impl From<Circle> for GeneralizedCircle {
    fn from(c: Circle) -> Self {
        GeneralizedCircle::Circle(c)
    }
}

impl From<ExtLine> for GeneralizedCircle {
    fn from(l: ExtLine) -> Self {
        GeneralizedCircle::Line(l)
    }
}

impl GeneralizedCircle {
    pub fn is_line(&self) -> bool {
        matches!(self, GeneralizedCircle::Line(_))
    }

    /// Relative distance of `p` from the boundary equation.
    ///
    /// Circles: `||p − z*| − R| / max(1, |p|, R)`.
    /// Lines: `|n·p − d| / max(1, |p|)`; `∞` lies on every line.
    pub fn residual(&self, p: ExtComplex) -> f64 {
        match (self, p) {
            (GeneralizedCircle::Line(_), ExtComplex::Infinity) => 0.0,
            (GeneralizedCircle::Circle(_), ExtComplex::Infinity) => f64::INFINITY,
            (GeneralizedCircle::Circle(c), ExtComplex::Finite(z)) => {
                ((z - c.center).norm() - c.radius).abs() / 1f64.max(z.norm()).max(c.radius)
            }
            (GeneralizedCircle::Line(l), ExtComplex::Finite(z)) => {
                l.signed(z).abs() / 1f64.max(z.norm())
            }
        }
    }

    /// Parameter-wise comparison, lines compared up to orientation.
    pub fn approx_eq(&self, other: &GeneralizedCircle, rel: f64) -> bool {
        match (self, other) {
            (GeneralizedCircle::Circle(a), GeneralizedCircle::Circle(b)) => {
                close_c(a.center, b.center, rel) && close(a.radius, b.radius, rel)
            }
            (GeneralizedCircle::Line(a), GeneralizedCircle::Line(b)) => {
                line_orientation(a, b, rel).is_some()
            }
            _ => false,
        }
    }
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * 1f64.max(a.abs()).max(b.abs())
}

fn close_c(a: Complex64, b: Complex64, rel: f64) -> bool {
    (a - b).norm() <= rel * 1f64.max(a.norm()).max(b.norm())
}

/// `Some(true)` if the lines agree with the same orientation, `Some(false)`
/// if they agree with opposite orientations.
fn line_orientation(a: &ExtLine, b: &ExtLine, rel: f64) -> Option<bool> {
    if close_c(a.normal, b.normal, rel) && close(a.offset, b.offset, rel) {
        Some(true)
    } else if close_c(a.normal, -b.normal, rel) && close(a.offset, -b.offset, rel) {
        Some(false)
    } else {
        None
    }
}

impl fmt::Display for GeneralizedCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralizedCircle::Circle(c) => write!(
                f,
                "circle center {} radius {}",
                ExtComplex::Finite(c.center),
                c.radius
            ),
            GeneralizedCircle::Line(l) => write!(
                f,
                "line {}·x + {}·y = {}",
                l.normal.re + 0.0,
                l.normal.im + 0.0,
                l.offset + 0.0
            ),
        }
    }
}

/// Which side of the boundary a region occupies.
///
/// `Inside`/`Outside` pair with circles, `Positive`/`Negative` (with respect
/// to the line normal) with lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Inside,
    Outside,
    Positive,
    Negative,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Inside => Side::Outside,
            Side::Outside => Side::Inside,
            Side::Positive => Side::Negative,
            Side::Negative => Side::Positive,
        }
    }

    /// `+1` for the side where the boundary's signed classifier is positive.
    pub fn sign(self) -> f64 {
        match self {
            Side::Inside | Side::Positive => 1.0,
            Side::Outside | Side::Negative => -1.0,
        }
    }

    pub(crate) fn for_boundary(g: &GeneralizedCircle, positive: bool) -> Side {
        match (g, positive) {
            (GeneralizedCircle::Circle(_), true) => Side::Inside,
            (GeneralizedCircle::Circle(_), false) => Side::Outside,
            (GeneralizedCircle::Line(_), true) => Side::Positive,
            (GeneralizedCircle::Line(_), false) => Side::Negative,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Inside => "inside",
            Side::Outside => "outside",
            Side::Positive => "positive",
            Side::Negative => "negative",
        }
    }
}

/// One side of a generalized circle on the Riemann sphere.
///
/// The set is: finite points strictly on `side` (or on the boundary when
/// `closed`), plus `∞` when `contains_infinity`, minus `punctures`.
#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    boundary: GeneralizedCircle,
    side: Side,
    closed: bool,
    contains_infinity: bool,
    punctures: Vec<Complex64>,
}

impl Region {
    /// Region with no punctures. `∞` is included for disk complements and
    /// excluded for half-planes, which are taken as subsets of `ℂ`.
    pub fn new(boundary: impl Into<GeneralizedCircle>, side: Side, closed: bool) -> Result<Self> {
        let boundary = boundary.into();
        let contains_infinity = side == Side::Outside;
        Self::from_parts(
            boundary,
            side,
            closed,
            contains_infinity,
            Vec::new(),
            &Tolerance::default(),
        )
    }

    pub fn disk(center: Complex64, radius: f64, closed: bool) -> Result<Self> {
        Self::new(Circle::new(center, radius)?, Side::Inside, closed)
    }

    pub fn half_plane(line: ExtLine, side: Side, closed: bool) -> Result<Self> {
        Self::new(line, side, closed)
    }

    /// Fully specified region.
    ///
    /// Punctures must lie in the closure of the region; punctures on the
    /// boundary of an open region are not in the set to begin with and are
    /// dropped, duplicates are merged.
    pub fn from_parts(
        boundary: GeneralizedCircle,
        side: Side,
        closed: bool,
        contains_infinity: bool,
        punctures: Vec<Complex64>,
        tol: &Tolerance,
    ) -> Result<Self> {
        match (&boundary, side) {
            (GeneralizedCircle::Circle(_), Side::Inside | Side::Outside) => {}
            (GeneralizedCircle::Line(_), Side::Positive | Side::Negative) => {}
            (GeneralizedCircle::Circle(_), _) => {
                return Err(Error::InvalidShape(
                    "a circle-bounded region must be inside or outside".into(),
                ))
            }
            (GeneralizedCircle::Line(_), _) => {
                return Err(Error::InvalidShape(
                    "a half-plane must be on the positive or negative side".into(),
                ))
            }
        }
        if contains_infinity {
            let ok = match boundary {
                GeneralizedCircle::Circle(_) => side == Side::Outside,
                GeneralizedCircle::Line(_) => closed,
            };
            if !ok {
                return Err(Error::InvalidShape(
                    "only disk complements and closed half-planes can contain ∞".into(),
                ));
            }
        }
        let mut region = Region {
            boundary,
            side,
            closed,
            contains_infinity,
            punctures: Vec::with_capacity(punctures.len()),
        };
        for p in punctures {
            if !(p.re.is_finite() && p.im.is_finite()) {
                return Err(Error::InvalidShape("punctures must be finite".into()));
            }
            match region.position(p, tol) {
                Position::Out => {
                    return Err(Error::InvalidShape(format!(
                        "puncture ({}, {}) does not lie in the closed region",
                        p.re, p.im
                    )))
                }
                Position::On if !closed => continue,
                _ => {}
            }
            region.push_puncture(p, tol);
        }
        Ok(region)
    }

    pub(crate) fn from_parts_unchecked(
        boundary: GeneralizedCircle,
        side: Side,
        closed: bool,
        contains_infinity: bool,
        punctures: Vec<Complex64>,
    ) -> Self {
        Region {
            boundary,
            side,
            closed,
            contains_infinity,
            punctures,
        }
    }

    pub(crate) fn push_puncture(&mut self, p: Complex64, tol: &Tolerance) {
        let dup = self
            .punctures
            .iter()
            .any(|&q| approx_eq(ExtComplex::Finite(p), ExtComplex::Finite(q), tol));
        if !dup {
            self.punctures.push(p);
        }
    }

    pub fn boundary(&self) -> &GeneralizedCircle {
        &self.boundary
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains_infinity(&self) -> bool {
        self.contains_infinity
    }

    pub fn punctures(&self) -> &[Complex64] {
        &self.punctures
    }

    /// Whether the underlying predicate set (before adding `∞` or removing
    /// punctures) is unbounded.
    pub fn is_unbounded(&self) -> bool {
        self.side != Side::Inside
    }

    /// Position of a finite point relative to the boundary and side,
    /// ignoring punctures.
    pub(crate) fn position(&self, p: Complex64, tol: &Tolerance) -> Position {
        let inc = classify_point(&self.boundary, p, tol);
        if inc.kind == IncidenceKind::On {
            Position::On
        } else if inc.signed * self.side.sign() > 0.0 {
            Position::In
        } else {
            Position::Out
        }
    }

    /// Same set up to tolerance: boundary parameters, orientation-adjusted
    /// side, closedness, `∞` membership and punctures.
    pub fn approx_eq(&self, other: &Region, rel: f64, tol: &Tolerance) -> bool {
        let same_side = match (&self.boundary, &other.boundary) {
            (GeneralizedCircle::Circle(_), GeneralizedCircle::Circle(_)) => {
                self.boundary.approx_eq(&other.boundary, rel) && self.side == other.side
            }
            (GeneralizedCircle::Line(a), GeneralizedCircle::Line(b)) => {
                match line_orientation(a, b, rel) {
                    Some(true) => self.side == other.side,
                    Some(false) => self.side == other.side.opposite(),
                    None => false,
                }
            }
            _ => false,
        };
        same_side
            && self.closed == other.closed
            && self.contains_infinity == other.contains_infinity
            && self.punctures.len() == other.punctures.len()
            && self.punctures.iter().all(|&p| {
                other.punctures.iter().any(|&q| {
                    approx_eq(ExtComplex::Finite(p), ExtComplex::Finite(q), tol)
                        || (p - q).norm() <= rel * 1f64.max(p.norm())
                })
            })
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.closed { "closed" } else { "open" };
        write!(f, "{kind} {} side of {}", self.side.as_str(), self.boundary)?;
        if self.contains_infinity {
            write!(f, ", with ∞")?;
        }
        for &p in &self.punctures {
            write!(f, ", minus {}", ExtComplex::Finite(p))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Position {
    In,
    On,
    Out,
}

/// Where a point lies relative to a generalized circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IncidenceKind {
    Inside,
    On,
    Outside,
    Positive,
    Negative,
}

/// Incidence tag together with the signed classifier value it was derived
/// from: `R² − |p − z*|²` for circles, `n·p − d` for lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Incidence {
    pub kind: IncidenceKind,
    pub signed: f64,
}

/// Classifies a finite point against a generalized circle.
///
/// The point is `On` when `|signed| ≤ classify_tol · scale`, with
/// `scale = max(1, R², |p − z*|²)` for circles and `max(1, |d|, |n·p|)`
/// for lines.
pub fn classify_point(g: &GeneralizedCircle, p: Complex64, tol: &Tolerance) -> Incidence {
    let (signed, scale, pos, neg) = match g {
        GeneralizedCircle::Circle(c) => {
            let r2 = c.radius * c.radius;
            let d2 = (p - c.center).norm_sqr();
            (
                r2 - d2,
                1f64.max(r2).max(d2),
                IncidenceKind::Inside,
                IncidenceKind::Outside,
            )
        }
        GeneralizedCircle::Line(l) => {
            let np = dot(l.normal, p);
            (
                np - l.offset,
                1f64.max(l.offset.abs()).max(np.abs()),
                IncidenceKind::Positive,
                IncidenceKind::Negative,
            )
        }
    };
    let kind = if signed.abs() <= tol.classify_tol * scale {
        IncidenceKind::On
    } else if signed > 0.0 {
        pos
    } else {
        neg
    };
    Incidence { kind, signed }
}

/// Classifies the origin; for a circle the signed value is the discriminant
/// `s = R² − (x*² + y*²)`.
pub fn classify_origin(g: &GeneralizedCircle, tol: &Tolerance) -> Incidence {
    classify_point(g, Complex64::new(0.0, 0.0), tol)
}

/// Set membership, with boundary points decided by the `closed` flag.
pub fn contains(r: &Region, p: ExtComplex, tol: &Tolerance) -> bool {
    let z = match p {
        ExtComplex::Infinity => return r.contains_infinity,
        ExtComplex::Finite(z) => z,
    };
    if r.punctures
        .iter()
        .any(|&q| approx_eq(p, ExtComplex::Finite(q), tol))
    {
        return false;
    }
    match r.position(z, tol) {
        Position::In => true,
        Position::On => r.closed,
        Position::Out => false,
    }
}

fn substream(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// `(cos, sin)` of `2π·t/n`, exact at quarter turns.
fn unit_at(t: f64, n: usize) -> Complex64 {
    let quarter = 4.0 * t / n as f64;
    if quarter.fract() == 0.0 {
        match quarter as i64 % 4 {
            0 => return Complex64::new(1.0, 0.0),
            1 => return Complex64::new(0.0, 1.0),
            2 => return Complex64::new(-1.0, 0.0),
            _ => return Complex64::new(0.0, -1.0),
        }
    }
    Complex64::from_polar(1.0, TAU * t / n as f64)
}

fn boundary_points(g: &GeneralizedCircle, n: usize, seed: Option<u64>) -> Result<Vec<ExtComplex>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sample count must be at least 1".into(),
        ));
    }
    let jitter = |k: usize| match seed {
        Some(s) => substream(s, k).gen::<f64>(),
        None => match g {
            GeneralizedCircle::Circle(_) => 0.0,
            GeneralizedCircle::Line(_) => 0.5,
        },
    };
    let points = (0..n)
        .map(|k| {
            let t = k as f64 + jitter(k);
            let z = match g {
                GeneralizedCircle::Circle(c) => c.center + unit_at(t, n) * c.radius,
                GeneralizedCircle::Line(l) => {
                    let h = LINE_SAMPLE_HALF_WIDTH;
                    l.point_at(-h + 2.0 * h * t / n as f64)
                }
            };
            ExtComplex::Finite(z)
        })
        .collect();
    Ok(points)
}

/// `n` finite boundary points, stratified-random and deterministic in `seed`.
///
/// Circles are sampled by angle over `[0, 2π)`, lines by the parameter of
/// their point-direction form over `[−10³, 10³]`; `∞` is never emitted.
pub fn sample_boundary(g: &GeneralizedCircle, n: usize, seed: u64) -> Result<Vec<ExtComplex>> {
    boundary_points(g, n, Some(seed))
}

/// Like [`sample_boundary`] on an evenly spaced grid: angles `2πk/n` for
/// circles (exact at quarter turns), stratum midpoints for lines.
pub fn sample_boundary_grid(g: &GeneralizedCircle, n: usize) -> Result<Vec<ExtComplex>> {
    boundary_points(g, n, None)
}

/// Distance from `p` to the boundary point set.
fn boundary_distance(g: &GeneralizedCircle, p: Complex64) -> f64 {
    match g {
        GeneralizedCircle::Circle(c) => ((p - c.center).norm() - c.radius).abs(),
        GeneralizedCircle::Line(l) => l.signed(p).abs(),
    }
}

fn half_cauchy(rng: &mut ChaCha8Rng) -> f64 {
    (FRAC_PI_2 * rng.gen::<f64>()).tan()
}

fn propose(r: &Region, rng: &mut ChaCha8Rng, margin: f64) -> Complex64 {
    match (&r.boundary, r.side) {
        (GeneralizedCircle::Circle(c), Side::Inside) => {
            let rho = c.radius * rng.gen::<f64>().sqrt();
            c.center + Complex64::from_polar(rho, TAU * rng.gen::<f64>())
        }
        (GeneralizedCircle::Circle(c), _) => {
            let rho = c.radius + margin + c.radius * half_cauchy(rng);
            c.center + Complex64::from_polar(rho, TAU * rng.gen::<f64>())
        }
        (GeneralizedCircle::Line(l), side) => {
            let scale = 1f64.max(l.offset.abs());
            let depth = margin + scale * half_cauchy(rng);
            let along = scale * (PI * (rng.gen::<f64>() - 0.5)).tan();
            l.anchor() + l.normal * (side.sign() * depth) + l.direction() * along
        }
    }
}

fn region_extent(r: &Region) -> f64 {
    match &r.boundary {
        GeneralizedCircle::Circle(c) => 1f64.max(c.center.norm() + c.radius),
        GeneralizedCircle::Line(l) => 1f64.max(l.offset.abs()),
    }
}

/// `n` finite points strictly inside `r`, each at least `tol.margin` from
/// the boundary and from every puncture, and classified strictly inside by
/// [`contains`]. Deterministic in `seed`: point `k` is drawn from its own
/// random substream, so the result does not depend on thread scheduling.
pub fn sample_region(r: &Region, n: usize, seed: u64, tol: &Tolerance) -> Result<Vec<Complex64>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sample count must be at least 1".into(),
        ));
    }
    let extent = region_extent(r) * MAX_SAMPLE_EXTENT;
    (0..n)
        .into_par_iter()
        .map(|k| {
            let mut rng = substream(seed, k);
            for _ in 0..MAX_PROPOSALS {
                let p = propose(r, &mut rng, tol.margin);
                if !(p.re.is_finite() && p.im.is_finite()) || p.norm() > extent {
                    continue;
                }
                if boundary_distance(&r.boundary, p) < tol.margin {
                    continue;
                }
                if r.position(p, tol) != Position::In {
                    continue;
                }
                if r.punctures.iter().any(|&q| (p - q).norm() < tol.margin) {
                    continue;
                }
                return Ok(p);
            }
            Err(Error::DegenerateRegion(format!(
                "no admissible sample after {MAX_PROPOSALS} proposals"
            )))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    fn circle(x: f64, y: f64, r: f64) -> GeneralizedCircle {
        Circle::new(z(x, y), r).unwrap().into()
    }

    #[test]
    fn classify_origin_examples() {
        let tol = Tolerance::default();
        let inc = classify_origin(&circle(3.0, 0.0, 1.0), &tol);
        assert_eq!(inc.kind, IncidenceKind::Outside);
        assert_eq!(inc.signed, -8.0);
        let inc = classify_origin(&circle(1.0, 0.0, 1.0), &tol);
        assert_eq!(inc.kind, IncidenceKind::On);
        assert_eq!(inc.signed, 0.0);
        let inc = classify_origin(&circle(0.0, 0.0, 2.0), &tol);
        assert_eq!(inc.kind, IncidenceKind::Inside);
        assert_eq!(inc.signed, 4.0);
    }

    #[test]
    fn classify_origin_lines() {
        let tol = Tolerance::default();
        let l: GeneralizedCircle = ExtLine::vertical(2.0).unwrap().into();
        assert_eq!(classify_origin(&l, &tol).kind, IncidenceKind::Negative);
        let l: GeneralizedCircle = ExtLine::from_slope(3.0, 0.0).unwrap().into();
        assert_eq!(classify_origin(&l, &tol).kind, IncidenceKind::On);
        let l: GeneralizedCircle = ExtLine::from_slope(1.0, -1.0).unwrap().into();
        assert_eq!(classify_origin(&l, &tol).kind, IncidenceKind::Positive);
    }

    #[test]
    fn near_origin_circle_counts_as_through_origin() {
        let tol = Tolerance::default();
        let g = circle(1.0, 0.0, 1.0 + 1e-12);
        assert_eq!(classify_origin(&g, &tol).kind, IncidenceKind::On);
        let g = circle(1.0, 0.0, 1.0 + 1e-6);
        assert_eq!(classify_origin(&g, &tol).kind, IncidenceKind::Inside);
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert!(matches!(
            Circle::new(z(0.0, 0.0), -1.0),
            Err(Error::InvalidShape(m)) if m == "radius must be positive"
        ));
        assert!(Circle::new(z(0.0, 0.0), 0.0).is_err());
        assert!(Circle::new(z(f64::NAN, 0.0), 1.0).is_err());
        assert!(ExtLine::new(0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn slope_form_is_normalized() {
        let l = ExtLine::from_slope(1.0, 1.0).unwrap();
        let h = 1.0 / 2f64.sqrt();
        assert!((l.normal() - z(-h, h)).norm() < 1e-15);
        assert!((l.offset() - h).abs() < 1e-15);
    }

    #[test]
    fn contains_examples() {
        let tol = Tolerance::default();
        let open_disk = Region::disk(z(0.0, 0.0), 1.0, false).unwrap();
        assert!(contains(&open_disk, ExtComplex::ZERO, &tol));
        assert!(!contains(&open_disk, ExtComplex::new(1.0, 0.0), &tol));
        assert!(!contains(&open_disk, ExtComplex::Infinity, &tol));

        let outside_closed =
            Region::new(Circle::new(z(0.0, 0.0), 1.0).unwrap(), Side::Outside, false).unwrap();
        assert!(contains(&outside_closed, ExtComplex::Infinity, &tol));
        assert!(!contains(&outside_closed, ExtComplex::new(0.0, 1.0), &tol));

        let punctured = Region::from_parts(
            ExtLine::vertical(0.0).unwrap().into(),
            Side::Positive,
            true,
            true,
            vec![z(0.0, 0.0)],
            &tol,
        )
        .unwrap();
        assert!(!contains(&punctured, ExtComplex::ZERO, &tol));
        assert!(contains(&punctured, ExtComplex::new(0.0, 1.0), &tol));
        assert!(contains(&punctured, ExtComplex::Infinity, &tol));
    }

    #[test]
    fn region_validation() {
        let tol = Tolerance::default();
        let line: GeneralizedCircle = ExtLine::vertical(0.0).unwrap().into();
        assert!(Region::from_parts(line, Side::Inside, false, false, vec![], &tol).is_err());
        // open half-planes cannot hold ∞
        assert!(Region::from_parts(line, Side::Positive, false, true, vec![], &tol).is_err());
        // disks cannot hold ∞
        let c = circle(0.0, 0.0, 1.0);
        assert!(Region::from_parts(c, Side::Inside, true, true, vec![], &tol).is_err());
        // puncture outside the closed region
        assert!(Region::from_parts(c, Side::Inside, true, false, vec![z(3.0, 0.0)], &tol).is_err());
    }

    #[test]
    fn boundary_punctures_of_open_regions_are_dropped() {
        let tol = Tolerance::default();
        let c = circle(1.0, 0.0, 1.0);
        let r = Region::from_parts(c, Side::Inside, false, false, vec![z(0.0, 0.0)], &tol).unwrap();
        assert!(r.punctures().is_empty());
        let r = Region::from_parts(
            c,
            Side::Inside,
            true,
            false,
            vec![z(0.0, 0.0), z(0.0, 0.0), z(1.0, 0.0)],
            &tol,
        )
        .unwrap();
        assert_eq!(r.punctures().len(), 2);
    }

    #[test]
    fn grid_samples_on_quarter_angles() {
        let pts = sample_boundary_grid(&circle(0.0, 0.0, 1.0), 4).unwrap();
        let expect = [z(1.0, 0.0), z(0.0, 1.0), z(-1.0, 0.0), z(0.0, -1.0)];
        for (p, e) in pts.iter().zip(expect) {
            assert_eq!(p.finite().unwrap(), e);
        }
    }

    #[test]
    fn vertical_line_samples() {
        let g: GeneralizedCircle = ExtLine::vertical(0.0).unwrap().into();
        let pts = sample_boundary(&g, 100, 7).unwrap();
        assert_eq!(pts.len(), 100);
        for p in pts {
            let p = p.finite().unwrap();
            assert_eq!(p.re, 0.0);
            assert!(p.im.abs() <= LINE_SAMPLE_HALF_WIDTH);
        }
    }

    #[test]
    fn zero_samples_is_an_error() {
        let g = circle(0.0, 0.0, 1.0);
        assert!(matches!(
            sample_boundary(&g, 0, 0),
            Err(Error::InvalidArgument(_))
        ));
        let r = Region::disk(z(0.0, 0.0), 1.0, false).unwrap();
        assert!(sample_region(&r, 0, 0, &Tolerance::default()).is_err());
    }

    #[test]
    fn boundary_sampling_is_deterministic() {
        let g = circle(0.5, -2.0, 3.0);
        assert_eq!(
            sample_boundary(&g, 50, 11).unwrap(),
            sample_boundary(&g, 50, 11).unwrap()
        );
        assert_ne!(
            sample_boundary(&g, 50, 11).unwrap(),
            sample_boundary(&g, 50, 12).unwrap()
        );
    }

    #[test]
    fn region_samples_respect_margin() {
        let tol = Tolerance::default();
        let disk = Region::disk(z(0.0, 0.0), 1.0, false).unwrap();
        for p in sample_region(&disk, 10, 3, &tol).unwrap() {
            assert!(p.norm() <= 1.0 - tol.margin);
        }
        let hp = Region::half_plane(
            ExtLine::from_slope(0.0, 1.0).unwrap(),
            Side::Positive,
            false,
        )
        .unwrap();
        for p in sample_region(&hp, 10, 3, &tol).unwrap() {
            assert!(p.im >= 1.0 + tol.margin);
        }
        let punctured = Region::from_parts(
            circle(0.0, 0.0, 1.0),
            Side::Inside,
            false,
            false,
            vec![z(0.0, 0.0)],
            &tol,
        )
        .unwrap();
        for p in sample_region(&punctured, 500, 5, &tol).unwrap() {
            assert!(p.norm() >= tol.margin);
        }
    }

    #[test]
    fn tiny_disk_is_degenerate() {
        let tol = Tolerance::default();
        let r = Region::disk(z(0.0, 0.0), 1e-7, false).unwrap();
        assert!(matches!(
            sample_region(&r, 1, 0, &tol),
            Err(Error::DegenerateRegion(_))
        ));
    }

    #[test]
    fn region_sampling_is_deterministic() {
        let tol = Tolerance::default();
        let r = Region::new(circle(2.0, 1.0, 0.5), Side::Outside, true).unwrap();
        let a = sample_region(&r, 64, 9, &tol).unwrap();
        let b = sample_region(&r, 64, 9, &tol).unwrap();
        assert_eq!(a, b);
    }
}
