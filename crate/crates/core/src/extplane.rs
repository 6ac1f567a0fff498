//! Points of the extended complex plane `ℂ ∪ {∞}` and the tolerance
//! settings shared by every classification and comparison in the crate.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point of the extended complex plane.
///
/// `Infinity` is a tag of its own; it is never encoded as a large or
/// non-finite float. Finite coordinates are always finite reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtComplex {
    pub const ZERO: ExtComplex = ExtComplex::Finite(Complex64::new(0.0, 0.0));

    /// Builds a finite point; non-finite coordinates collapse to `Infinity`.
    pub fn new(x: f64, y: f64) -> Self {
        Self::from(Complex64::new(x, y))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtComplex::Infinity)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match *self {
            ExtComplex::Finite(z) => Some(z),
            ExtComplex::Infinity => None,
        }
    }

    /// Modulus, `+∞` for the point at infinity.
    pub fn norm(&self) -> f64 {
        match self {
            ExtComplex::Finite(z) => z.norm(),
            ExtComplex::Infinity => f64::INFINITY,
        }
    }

    pub fn invert(self) -> Self {
        invert_point(self)
    }
}

impl From<Complex64> for ExtComplex {
    fn from(z: Complex64) -> Self {
        if z.re.is_finite() && z.im.is_finite() {
            ExtComplex::Finite(z)
        } else {
            ExtComplex::Infinity
        }
    }
}

impl fmt::Display for ExtComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // + 0.0 folds −0 into 0
            ExtComplex::Finite(z) => write!(f, "({}, {})", z.re + 0.0, z.im + 0.0),
            ExtComplex::Infinity => write!(f, "∞"),
        }
    }
}

/// Numerical tolerances.
///
/// - `classify_tol`: relative band inside which a signed classifier counts
///   as zero (a point is *on* a boundary).
/// - `residual_tol`: relative bound for point equality and oracle residuals.
/// - `margin`: absolute distance kept between sampled points and region
///   boundaries or punctures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub classify_tol: f64,
    pub residual_tol: f64,
    pub margin: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            classify_tol: 1e-9,
            residual_tol: 1e-9,
            margin: 1e-6,
        }
    }
}

impl Tolerance {
    pub fn new(classify_tol: f64, residual_tol: f64, margin: f64) -> Result<Self> {
        let tol = Tolerance {
            classify_tol,
            residual_tol,
            margin,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("classify_tol", self.classify_tol),
            ("residual_tol", self.residual_tol),
            ("margin", self.margin),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "{name} must be a positive finite number, got {v}"
                )));
            }
        }
        if self.margin < self.residual_tol {
            return Err(Error::InvalidArgument(format!(
                "margin ({}) must be at least residual_tol ({})",
                self.margin, self.residual_tol
            )));
        }
        Ok(())
    }
}

/// Reciprocal of a finite nonzero complex number without intermediate
/// overflow or underflow of `x² + y²`.
pub(crate) fn recip(z: Complex64) -> Complex64 {
    let scale = z.re.abs().max(z.im.abs());
    let w = z / scale;
    w.conj() / (w.norm_sqr() * scale)
}

/// The inversion `ι(z) = 1/z` with `ι(0) = ∞` and `ι(∞) = 0`.
pub fn invert_point(z: ExtComplex) -> ExtComplex {
    match z {
        ExtComplex::Infinity => ExtComplex::ZERO,
        ExtComplex::Finite(w) if w.re == 0.0 && w.im == 0.0 => ExtComplex::Infinity,
        ExtComplex::Finite(w) => ExtComplex::from(recip(w)),
    }
}

/// Both infinite, or both finite with `|p − q| ≤ residual_tol · max(1, |p|, |q|)`.
pub fn approx_eq(p: ExtComplex, q: ExtComplex, tol: &Tolerance) -> bool {
    match (p, q) {
        (ExtComplex::Infinity, ExtComplex::Infinity) => true,
        (ExtComplex::Finite(a), ExtComplex::Finite(b)) => {
            (a - b).norm() <= tol.residual_tol * 1f64.max(a.norm()).max(b.norm())
        }
        _ => false,
    }
}
