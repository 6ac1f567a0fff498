//! Brute-force verification of predicted images.
//!
//! The oracle never consults the case analysis: it samples points of the
//! source set, pushes them through [`apply_point`], and checks them against
//! the predicted set; then it does the same backwards with the inverse map.
//! Boundary samples are checked by relative residual, interior samples by
//! membership. Points whose image is `∞`, the pole, and punctures are
//! checked as explicit memberships since no residual exists for them.

use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::extplane::{ExtComplex, Tolerance};
use crate::moebius::{apply_point, MoebiusMap};
use crate::shapes::{
    contains, sample_boundary, sample_boundary_grid, sample_region, GeneralizedCircle, Position,
    Region,
};

/// Offset between the forward and backward random streams.
const BACKWARD_SEED_OFFSET: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Points of the source mapped by `m` into the prediction.
    Forward,
    /// Points of the prediction mapped by `m⁻¹` into the source.
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub point: ExtComplex,
    pub direction: Direction,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub samples_forward: usize,
    pub samples_backward: usize,
    /// Boundary samples whose image was `∞` (membership-checked only).
    pub infinite_images: usize,
    pub max_boundary_residual: f64,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

impl VerificationReport {
    fn new() -> Self {
        VerificationReport {
            samples_forward: 0,
            samples_backward: 0,
            infinite_images: 0,
            max_boundary_residual: 0.0,
            failures: Vec::new(),
            passed: false,
        }
    }

    fn finish(mut self, tol: &Tolerance) -> Self {
        self.passed = self.failures.is_empty() && self.max_boundary_residual <= tol.residual_tol;
        self
    }

    fn count(&mut self, direction: Direction, n: usize) {
        match direction {
            Direction::Forward => self.samples_forward += n,
            Direction::Backward => self.samples_backward += n,
        }
    }
}

/// How boundary points are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    Stratified(u64),
    Grid,
}

impl Sampling {
    fn boundary(self, g: &GeneralizedCircle, n: usize) -> Result<Vec<ExtComplex>> {
        match self {
            Sampling::Stratified(seed) => sample_boundary(g, n, seed),
            Sampling::Grid => sample_boundary_grid(g, n),
        }
    }

    fn backward(self) -> Self {
        match self {
            Sampling::Stratified(seed) => {
                Sampling::Stratified(seed.wrapping_add(BACKWARD_SEED_OFFSET))
            }
            Sampling::Grid => Sampling::Grid,
        }
    }
}

/// Checks that `m(g)` lies on `predicted` and `m⁻¹(predicted)` lies on `g`,
/// using `n` stratified-random boundary samples in each direction.
pub fn verify_gcircle_image(
    m: &MoebiusMap,
    g: &GeneralizedCircle,
    predicted: &GeneralizedCircle,
    n: usize,
    seed: u64,
    tol: &Tolerance,
) -> Result<VerificationReport> {
    verify_gcircle_image_with(m, g, predicted, n, Sampling::Stratified(seed), tol)
}

pub fn verify_gcircle_image_with(
    m: &MoebiusMap,
    g: &GeneralizedCircle,
    predicted: &GeneralizedCircle,
    n: usize,
    sampling: Sampling,
    tol: &Tolerance,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    check_boundary(
        &mut report,
        m,
        g,
        predicted,
        n,
        sampling,
        Direction::Forward,
        tol,
    )?;
    check_boundary(
        &mut report,
        &m.inverse(),
        predicted,
        g,
        n,
        sampling.backward(),
        Direction::Backward,
        tol,
    )?;
    Ok(report.finish(tol))
}

#[allow(clippy::too_many_arguments)]
fn check_boundary(
    report: &mut VerificationReport,
    m: &MoebiusMap,
    source: &GeneralizedCircle,
    target: &GeneralizedCircle,
    n: usize,
    sampling: Sampling,
    direction: Direction,
    tol: &Tolerance,
) -> Result<()> {
    let mut points = sampling.boundary(source, n)?;
    // ∞ is on every line
    if source.is_line() {
        points.push(ExtComplex::Infinity);
    }
    let outcomes: Vec<(f64, bool, Option<Failure>)> = points
        .par_iter()
        .map(|&p| {
            let q = apply_point(m, p);
            if q.is_infinite() {
                let failure = (!target.is_line()).then(|| Failure {
                    point: p,
                    direction,
                    detail: "maps to ∞ but the other image is a circle".into(),
                });
                return (0.0, true, failure);
            }
            let residual = target.residual(q);
            let failure = (residual > tol.residual_tol || residual.is_nan()).then(|| Failure {
                point: p,
                direction,
                detail: format!("image {q} is off the boundary, residual {residual:e}"),
            });
            (residual, false, failure)
        })
        .collect();
    report.count(direction, points.len());
    for (residual, at_infinity, failure) in outcomes {
        if at_infinity {
            report.infinite_images += 1;
        }
        if residual.is_nan() {
            report.max_boundary_residual = f64::INFINITY;
        } else {
            report.max_boundary_residual = report.max_boundary_residual.max(residual);
        }
        report.failures.extend(failure);
    }
    Ok(())
}

/// Membership check that ignores punctures and lets boundary-band points
/// through: open/closed is not decidable for sampled floating-point points.
fn admits(r: &Region, q: ExtComplex, tol: &Tolerance) -> bool {
    match q {
        ExtComplex::Infinity => r.contains_infinity(),
        ExtComplex::Finite(z) => r.position(z, tol) != Position::Out,
    }
}

/// Checks `m(r) = predicted` as sets.
///
/// Forward, `n` margin-interior samples of `r` must map into `predicted`;
/// backward, `n` margin-interior samples of `predicted` must map under
/// `m⁻¹` into `r`. Boundaries are checked as in [`verify_gcircle_image`].
/// `∞`, the pole, and all punctures are checked by exact membership.
pub fn verify_region_image(
    m: &MoebiusMap,
    r: &Region,
    predicted: &Region,
    n: usize,
    seed: u64,
    tol: &Tolerance,
) -> Result<VerificationReport> {
    let inverse = m.inverse();
    let mut report = VerificationReport::new();
    let sampling = Sampling::Stratified(seed);
    check_boundary(
        &mut report,
        m,
        r.boundary(),
        predicted.boundary(),
        n,
        sampling,
        Direction::Forward,
        tol,
    )?;
    check_boundary(
        &mut report,
        &inverse,
        predicted.boundary(),
        r.boundary(),
        n,
        sampling.backward(),
        Direction::Backward,
        tol,
    )?;
    check_interior(
        &mut report,
        m,
        r,
        predicted,
        n,
        seed,
        Direction::Forward,
        tol,
    )?;
    check_interior(
        &mut report,
        &inverse,
        predicted,
        r,
        n,
        seed.wrapping_add(BACKWARD_SEED_OFFSET),
        Direction::Backward,
        tol,
    )?;
    check_special(&mut report, m, r, predicted, Direction::Forward, tol);
    check_special(
        &mut report,
        &inverse,
        predicted,
        r,
        Direction::Backward,
        tol,
    );
    Ok(report.finish(tol))
}

#[allow(clippy::too_many_arguments)]
fn check_interior(
    report: &mut VerificationReport,
    m: &MoebiusMap,
    source: &Region,
    target: &Region,
    n: usize,
    seed: u64,
    direction: Direction,
    tol: &Tolerance,
) -> Result<()> {
    let points = sample_region(source, n, seed, tol)?;
    let failures: Vec<Failure> = points
        .par_iter()
        .filter_map(|&p| {
            let p = ExtComplex::Finite(p);
            let q = apply_point(m, p);
            (!admits(target, q, tol)).then(|| Failure {
                point: p,
                direction,
                detail: format!("interior point maps to {q}, outside the other region"),
            })
        })
        .collect();
    report.count(direction, points.len());
    report.failures.extend(failures);
    Ok(())
}

fn check_special(
    report: &mut VerificationReport,
    m: &MoebiusMap,
    source: &Region,
    target: &Region,
    direction: Direction,
    tol: &Tolerance,
) {
    let mut points = vec![ExtComplex::Infinity];
    if let ExtComplex::Finite(pole) = m.pole() {
        points.push(ExtComplex::Finite(pole));
    }
    points.extend(source.punctures().iter().map(|&p| ExtComplex::Finite(p)));
    for p in points {
        let q = apply_point(m, p);
        let expected = contains(source, p, tol);
        if contains(target, q, tol) != expected {
            let verb = if expected {
                "belongs"
            } else {
                "does not belong"
            };
            report.failures.push(Failure {
                point: p,
                direction,
                detail: format!("point {verb} to its region but its image {q} disagrees"),
            });
        }
    }
}
