//! Images of generalized circles and regions under the inversion
//! `ι(z) = 1/z`.
//!
//! Every branch is selected by where the origin lies relative to the
//! boundary (see [`classify_origin`]), and every branch is reported as an
//! [`InversionCase`] so callers can observe which formula was used.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::Error;
use crate::extplane::{recip, ExtComplex, Tolerance};
use crate::shapes::{
    classify_origin, contains, Circle, ExtLine, GeneralizedCircle, IncidenceKind, Region, Side,
};

/// Dispatch branches of [`invert_gcircle`] and [`invert_region`].
///
/// Region tags read `<input>_origin_<where>_to_<output>`, where `<where>`
/// places the origin relative to the input region itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InversionCase {
    CircleToCircle,
    CircleThroughOriginToLine,
    LineToCircle,
    LineThroughOriginToLine,
    DiskOriginExteriorToDisk,
    DiskOriginInteriorToDiskComplement,
    DiskOriginOnBoundaryToHalfplane,
    DiskComplementOriginInteriorToDiskComplement,
    DiskComplementOriginExteriorToDisk,
    DiskComplementOriginOnBoundaryToHalfplane,
    HalfplaneOriginExteriorToDisk,
    HalfplaneOriginInteriorToDiskComplement,
    HalfplaneOriginOnBoundaryToHalfplane,
}

impl InversionCase {
    pub const ALL: [InversionCase; 13] = [
        InversionCase::CircleToCircle,
        InversionCase::CircleThroughOriginToLine,
        InversionCase::LineToCircle,
        InversionCase::LineThroughOriginToLine,
        InversionCase::DiskOriginExteriorToDisk,
        InversionCase::DiskOriginInteriorToDiskComplement,
        InversionCase::DiskOriginOnBoundaryToHalfplane,
        InversionCase::DiskComplementOriginInteriorToDiskComplement,
        InversionCase::DiskComplementOriginExteriorToDisk,
        InversionCase::DiskComplementOriginOnBoundaryToHalfplane,
        InversionCase::HalfplaneOriginExteriorToDisk,
        InversionCase::HalfplaneOriginInteriorToDiskComplement,
        InversionCase::HalfplaneOriginOnBoundaryToHalfplane,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            InversionCase::CircleToCircle => "circle_to_circle",
            InversionCase::CircleThroughOriginToLine => "circle_through_origin_to_line",
            InversionCase::LineToCircle => "line_to_circle",
            InversionCase::LineThroughOriginToLine => "line_through_origin_to_line",
            InversionCase::DiskOriginExteriorToDisk => "disk_origin_exterior_to_disk",
            InversionCase::DiskOriginInteriorToDiskComplement => {
                "disk_origin_interior_to_disk_complement"
            }
            InversionCase::DiskOriginOnBoundaryToHalfplane => {
                "disk_origin_on_boundary_to_halfplane"
            }
            InversionCase::DiskComplementOriginInteriorToDiskComplement => {
                "disk_complement_origin_interior_to_disk_complement"
            }
            InversionCase::DiskComplementOriginExteriorToDisk => {
                "disk_complement_origin_exterior_to_disk"
            }
            InversionCase::DiskComplementOriginOnBoundaryToHalfplane => {
                "disk_complement_origin_on_boundary_to_halfplane"
            }
            InversionCase::HalfplaneOriginExteriorToDisk => "halfplane_origin_exterior_to_disk",
            InversionCase::HalfplaneOriginInteriorToDiskComplement => {
                "halfplane_origin_interior_to_disk_complement"
            }
            InversionCase::HalfplaneOriginOnBoundaryToHalfplane => {
                "halfplane_origin_on_boundary_to_halfplane"
            }
        }
    }
}

impl fmt::Display for InversionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for InversionCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InversionCase::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown inversion case `{s}`")))
    }
}

/// Image of a generalized circle under `z ↦ 1/z`.
pub fn invert_gcircle(g: &GeneralizedCircle, tol: &Tolerance) -> GeneralizedCircle {
    invert_gcircle_with_case(g, tol).0
}

/// [`invert_gcircle`] together with the branch that produced it.
///
/// - circle `S(z*, R)` missing the origin: circle centered at
///   `(−x*/s, y*/s)` with radius `R/|s|`, where `s = R² − |z*|²`;
/// - circle through the origin: the line `x*·x − y*·y = 1/2`;
/// - line `n·p = d` missing the origin: circle centered at
///   `(n_x, −n_y)/(2d)` with radius `1/(2|d|)`;
/// - line through the origin: its mirror image in the real axis.
pub fn invert_gcircle_with_case(
    g: &GeneralizedCircle,
    tol: &Tolerance,
) -> (GeneralizedCircle, InversionCase) {
    let inc = classify_origin(g, tol);
    match g {
        GeneralizedCircle::Circle(c) => {
            let zs = c.center();
            if inc.kind == IncidenceKind::On {
                let m = zs.norm();
                let line = ExtLine::from_unit(zs.conj() / m, 0.5 / m);
                (line.into(), InversionCase::CircleThroughOriginToLine)
            } else {
                let s = inc.signed;
                let center = Complex64::new(-zs.re / s, zs.im / s);
                let circle = Circle::new(center, c.radius() / s.abs())
                    .expect("image of a valid circle off the origin is a valid circle");
                (circle.into(), InversionCase::CircleToCircle)
            }
        }
        GeneralizedCircle::Line(l) => {
            let n = l.normal();
            if inc.kind == IncidenceKind::On {
                let line = ExtLine::from_unit(n.conj(), 0.0);
                (line.into(), InversionCase::LineThroughOriginToLine)
            } else {
                let d = l.offset();
                let circle = Circle::new(n.conj() / (2.0 * d), 0.5 / d.abs())
                    .expect("image of a line off the origin is a valid circle");
                (circle.into(), InversionCase::LineToCircle)
            }
        }
    }
}

/// Exact image of a region under the sphere bijection `z ↦ 1/z`.
pub fn invert_region(r: &Region, tol: &Tolerance) -> Region {
    invert_region_with_case(r, tol).0
}

/// [`invert_region`] together with the branch that produced it.
///
/// The boundary is always [`invert_gcircle`] of the input boundary and the
/// open/closed flag is preserved. The image side follows from where the
/// origin sits:
///
/// | input | origin | image side |
/// |---|---|---|
/// | circle region | outside the circle | same side |
/// | circle region | inside the circle | opposite side |
/// | inside of circle | on the circle | positive side of `x*·x − y*·y = 1/2` |
/// | line region | off the line | inside the circle iff the origin is not on the region's side |
/// | line region | on the line | same side of the mirrored line |
///
/// `∞` joins the image exactly when `0` belongs to the input, `0` leaves the
/// image when the predicate set of the image contains it but `∞` was not in
/// the input, and every other puncture is inverted pointwise.
pub fn invert_region_with_case(r: &Region, tol: &Tolerance) -> (Region, InversionCase) {
    let (boundary, _) = invert_gcircle_with_case(r.boundary(), tol);
    let inc = classify_origin(r.boundary(), tol);
    let side = r.side();

    let (positive, case) = match (r.boundary(), inc.kind) {
        (GeneralizedCircle::Circle(_), IncidenceKind::Outside) => match side {
            Side::Inside => (true, InversionCase::DiskOriginExteriorToDisk),
            _ => (
                false,
                InversionCase::DiskComplementOriginInteriorToDiskComplement,
            ),
        },
        (GeneralizedCircle::Circle(_), IncidenceKind::Inside) => match side {
            Side::Inside => (false, InversionCase::DiskOriginInteriorToDiskComplement),
            _ => (true, InversionCase::DiskComplementOriginExteriorToDisk),
        },
        (GeneralizedCircle::Circle(_), _) => match side {
            Side::Inside => (true, InversionCase::DiskOriginOnBoundaryToHalfplane),
            _ => (
                false,
                InversionCase::DiskComplementOriginOnBoundaryToHalfplane,
            ),
        },
        (GeneralizedCircle::Line(_), IncidenceKind::On) => (
            side == Side::Positive,
            InversionCase::HalfplaneOriginOnBoundaryToHalfplane,
        ),
        (GeneralizedCircle::Line(_), _) => {
            // the classifier at the origin is −d
            if inc.signed * side.sign() > 0.0 {
                (
                    false,
                    InversionCase::HalfplaneOriginInteriorToDiskComplement,
                )
            } else {
                (true, InversionCase::HalfplaneOriginExteriorToDisk)
            }
        }
    };
    let image_side = Side::for_boundary(&boundary, positive);

    let origin_in_input = contains(r, ExtComplex::ZERO, tol);
    let origin_in_image_predicate = match r.boundary() {
        GeneralizedCircle::Circle(_) => r.is_unbounded(),
        GeneralizedCircle::Line(_) => r.is_closed(),
    };

    let mut image = Region::from_parts_unchecked(
        boundary,
        image_side,
        r.is_closed(),
        origin_in_input,
        Vec::with_capacity(r.punctures().len() + 1),
    );
    for &p in r.punctures() {
        if crate::extplane::approx_eq(ExtComplex::Finite(p), ExtComplex::ZERO, tol) {
            continue;
        }
        image.push_puncture(recip(p), tol);
    }
    if origin_in_image_predicate && !r.contains_infinity() {
        image.push_puncture(Complex64::new(0.0, 0.0), tol);
    }
    (image, case)
}
