//! Möbius transformations `h(z) = (az + b)/(cz + d)`.
//!
//! For `c ≠ 0` every map factors as
//! `h(z) = a/c + ((bc − ad)/c) · 1/(cz + d)`, i.e. an affine map, the
//! inversion, and another affine map. Images of shapes and regions are
//! computed by pushing them through that pipeline.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extplane::{recip, ExtComplex, Tolerance};
use crate::inversion::{invert_gcircle_with_case, invert_region_with_case, InversionCase};
use crate::shapes::{dot, Circle, ExtLine, GeneralizedCircle, Region};

/// Relative threshold on `|bc − ad|` below which a map is degenerate.
pub const DEGENERACY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

impl MoebiusMap {
    /// Requires `|bc − ad| > 1e-12 · max(1, |a||d|, |b||c|)`.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        if ![a, b, c, d].into_iter().all(finite) {
            return Err(Error::InvalidArgument(
                "Möbius coefficients must be finite".into(),
            ));
        }
        let det = b * c - a * d;
        let scale = 1f64.max(a.norm() * d.norm()).max(b.norm() * c.norm());
        if det.norm() <= DEGENERACY_TOL * scale {
            return Err(Error::DegenerateMap {
                det_abs: det.norm(),
            });
        }
        Ok(MoebiusMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        let (zero, one) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        MoebiusMap {
            a: one,
            b: zero,
            c: zero,
            d: one,
        }
    }

    /// `z ↦ 1/z`.
    pub fn inversion() -> Self {
        let (zero, one) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        MoebiusMap {
            a: zero,
            b: one,
            c: one,
            d: zero,
        }
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `bc − ad`.
    pub fn determinant(&self) -> Complex64 {
        self.b * self.c - self.a * self.d
    }

    pub fn is_affine(&self) -> bool {
        self.c == Complex64::new(0.0, 0.0)
    }

    /// The inverse map, from the adjugate coefficients `(d, −b, −c, a)`.
    pub fn inverse(&self) -> Self {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// `self ∘ inner`, by 2×2 coefficient matrix product (no normalization).
    pub fn compose(&self, inner: &MoebiusMap) -> Result<Self> {
        let (o, i) = (self, inner);
        MoebiusMap::new(
            o.a * i.a + o.b * i.c,
            o.a * i.b + o.b * i.d,
            o.c * i.a + o.d * i.c,
            o.c * i.b + o.d * i.d,
        )
    }

    /// The point sent to `∞`: `−d/c`, or `∞` itself for affine maps.
    pub fn pole(&self) -> ExtComplex {
        if self.is_affine() {
            ExtComplex::Infinity
        } else {
            ExtComplex::from(-self.d / self.c)
        }
    }

    pub fn apply(&self, z: ExtComplex) -> ExtComplex {
        apply_point(self, z)
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.coefficients().map(ExtComplex::Finite);
        write!(f, "z ↦ ({a}·z + {b}) / ({c}·z + {d})")
    }
}

/// `z ↦ scale·z + shift` with `scale ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    scale: Complex64,
    shift: Complex64,
}

impl AffineMap {
    pub fn new(scale: Complex64, shift: Complex64) -> Result<Self> {
        if !(finite(scale) && finite(shift)) {
            return Err(Error::InvalidArgument(
                "affine coefficients must be finite".into(),
            ));
        }
        if scale.norm() == 0.0 {
            return Err(Error::InvalidArgument(
                "affine scale must be nonzero".into(),
            ));
        }
        Ok(AffineMap { scale, shift })
    }

    pub fn scale(&self) -> Complex64 {
        self.scale
    }

    pub fn shift(&self) -> Complex64 {
        self.shift
    }

    pub fn apply(&self, z: ExtComplex) -> ExtComplex {
        match z {
            ExtComplex::Infinity => ExtComplex::Infinity,
            ExtComplex::Finite(w) => ExtComplex::from(self.scale * w + self.shift),
        }
    }

    /// The finite point mapped to the origin, `−shift/scale`.
    pub fn origin_preimage(&self) -> Complex64 {
        -self.shift / self.scale
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (
            ExtComplex::Finite(self.scale),
            ExtComplex::Finite(self.shift),
        );
        write!(f, "z ↦ {a}·z + {b}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Factorization {
    Affine(AffineMap),
    /// `post ∘ ι ∘ pre`.
    Composite {
        pre: AffineMap,
        post: AffineMap,
    },
}

impl Factorization {
    /// Evaluates the factors one after another.
    pub fn apply(&self, z: ExtComplex) -> ExtComplex {
        match self {
            Factorization::Affine(m) => m.apply(z),
            Factorization::Composite { pre, post } => {
                let w = match z {
                    ExtComplex::Finite(p) if p == pre.origin_preimage() => ExtComplex::ZERO,
                    _ => pre.apply(z),
                };
                post.apply(crate::extplane::invert_point(w))
            }
        }
    }
}

/// Splits `m` into affine maps and the inversion.
///
/// `c = 0` gives `Affine(z ↦ (a/d)·z + b/d)`; otherwise `pre: z ↦ cz + d`
/// and `post: w ↦ ((bc − ad)/c)·w + a/c`.
pub fn decompose(m: &MoebiusMap) -> Factorization {
    if m.is_affine() {
        Factorization::Affine(AffineMap {
            scale: m.a / m.d,
            shift: m.b / m.d,
        })
    } else {
        Factorization::Composite {
            pre: AffineMap {
                scale: m.c,
                shift: m.d,
            },
            post: AffineMap {
                scale: m.determinant() / m.c,
                shift: m.a / m.c,
            },
        }
    }
}

/// Direct evaluation of `(az + b)/(cz + d)` on the extended plane.
pub fn apply_point(m: &MoebiusMap, z: ExtComplex) -> ExtComplex {
    let MoebiusMap { a, b, c, d } = *m;
    match z {
        ExtComplex::Infinity if m.is_affine() => ExtComplex::Infinity,
        ExtComplex::Infinity => ExtComplex::from(a / c),
        ExtComplex::Finite(p) => {
            let den = c * p + d;
            if den == Complex64::new(0.0, 0.0) || (!m.is_affine() && p == -d / c) {
                return ExtComplex::Infinity;
            }
            ExtComplex::from((a * p + b) * recip(den))
        }
    }
}

/// Image of a generalized circle under an affine map.
pub fn affine_shape(map: &AffineMap, g: &GeneralizedCircle) -> GeneralizedCircle {
    match g {
        GeneralizedCircle::Circle(c) => Circle::new(
            map.scale * c.center() + map.shift,
            map.scale.norm() * c.radius(),
        )
        .expect("affine image of a circle is a circle")
        .into(),
        GeneralizedCircle::Line(l) => {
            // rotate the normal with the map so the positive side is preserved
            let normal = map.scale * l.normal() / map.scale.norm();
            let anchor = map.scale * l.anchor() + map.shift;
            ExtLine::from_unit(normal, dot(normal, anchor)).into()
        }
    }
}

/// Image of a region under an affine map; `∞` is fixed and punctures move
/// pointwise.
pub fn affine_region(map: &AffineMap, r: &Region) -> Region {
    let punctures = r
        .punctures()
        .iter()
        .map(|&p| map.scale * p + map.shift)
        .collect();
    Region::from_parts_unchecked(
        affine_shape(map, r.boundary()),
        r.side(),
        r.is_closed(),
        r.contains_infinity(),
        punctures,
    )
}

/// Which branch produced an image under a Möbius map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapCase {
    /// `c = 0`: no inversion involved.
    Affine,
    /// The inversion branch taken after the pre-affine stage.
    Inversion(InversionCase),
}

impl MapCase {
    pub fn tag(self) -> &'static str {
        match self {
            MapCase::Affine => "affine",
            MapCase::Inversion(c) => c.tag(),
        }
    }
}

impl fmt::Display for MapCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

pub fn map_gcircle(m: &MoebiusMap, g: &GeneralizedCircle, tol: &Tolerance) -> GeneralizedCircle {
    map_gcircle_with_case(m, g, tol).0
}

/// Image of `g` through `pre → ι → post`. The result is a line exactly when
/// the pre-affine image of `g` passes through the origin, i.e. when `g`
/// passes through the pole.
pub fn map_gcircle_with_case(
    m: &MoebiusMap,
    g: &GeneralizedCircle,
    tol: &Tolerance,
) -> (GeneralizedCircle, MapCase) {
    match decompose(m) {
        Factorization::Affine(a) => (affine_shape(&a, g), MapCase::Affine),
        Factorization::Composite { pre, post } => {
            let (inv, case) = invert_gcircle_with_case(&affine_shape(&pre, g), tol);
            (affine_shape(&post, &inv), MapCase::Inversion(case))
        }
    }
}

pub fn map_region(m: &MoebiusMap, r: &Region, tol: &Tolerance) -> Region {
    map_region_with_case(m, r, tol).0
}

/// Exact image of `r` under the sphere bijection `m`.
pub fn map_region_with_case(m: &MoebiusMap, r: &Region, tol: &Tolerance) -> (Region, MapCase) {
    match decompose(m) {
        Factorization::Affine(a) => (affine_region(&a, r), MapCase::Affine),
        Factorization::Composite { pre, post } => {
            let (inv, case) = invert_region_with_case(&affine_region(&pre, r), tol);
            (affine_region(&post, &inv), MapCase::Inversion(case))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extplane::approx_eq;
    use crate::shapes::{contains, Side};

    fn z(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    fn re(x: f64) -> Complex64 {
        z(x, 0.0)
    }

    fn map(a: f64, b: f64, c: f64, d: f64) -> MoebiusMap {
        MoebiusMap::new(re(a), re(b), re(c), re(d)).unwrap()
    }

    fn circle(x: f64, y: f64, r: f64) -> GeneralizedCircle {
        Circle::new(z(x, y), r).unwrap().into()
    }

    #[test]
    fn decompose_composite() {
        let m = map(1.0, 0.0, 1.0, -1.0);
        let Factorization::Composite { pre, post } = decompose(&m) else {
            panic!("expected composite")
        };
        assert_eq!((pre.scale(), pre.shift()), (re(1.0), re(-1.0)));
        assert_eq!((post.scale(), post.shift()), (re(1.0), re(1.0)));
        let two = ExtComplex::Finite(re(2.0));
        assert_eq!(apply_point(&m, two), two);
        assert_eq!(decompose(&m).apply(two), two);
    }

    #[test]
    fn decompose_affine() {
        let m = map(2.0, 3.0, 0.0, 5.0);
        assert_eq!(
            decompose(&m),
            Factorization::Affine(AffineMap::new(re(0.4), re(0.6)).unwrap())
        );
    }

    #[test]
    fn degenerate_coefficients() {
        assert!(matches!(
            MoebiusMap::new(re(1.0), re(2.0), re(1.0), re(2.0)),
            Err(Error::DegenerateMap { .. })
        ));
        assert!(MoebiusMap::new(re(f64::NAN), re(2.0), re(1.0), re(2.0)).is_err());
    }

    #[test]
    fn apply_examples() {
        let inv = MoebiusMap::inversion();
        assert_eq!(apply_point(&inv, ExtComplex::ZERO), ExtComplex::Infinity);
        assert_eq!(apply_point(&inv, ExtComplex::Infinity), ExtComplex::ZERO);
        let m = map(1.0, -1.0, 1.0, 1.0);
        assert_eq!(apply_point(&m, ExtComplex::new(1.0, 0.0)), ExtComplex::ZERO);
        let m = map(1.0, 0.0, 1.0, -1.0);
        assert_eq!(
            apply_point(&m, ExtComplex::Infinity),
            ExtComplex::new(1.0, 0.0)
        );
        assert_eq!(
            apply_point(&m, ExtComplex::new(1.0, 0.0)),
            ExtComplex::Infinity
        );
        // pole that is not exactly representable
        let m = map(1.0, 0.0, 3.0, 1.0);
        assert_eq!(apply_point(&m, m.pole()), ExtComplex::Infinity);
        assert_eq!(decompose(&m).apply(m.pole()), ExtComplex::Infinity);
    }

    #[test]
    fn affine_examples() {
        let tol = 1e-15;
        let a = AffineMap::new(re(2.0), re(0.0)).unwrap();
        assert!(affine_shape(&a, &circle(0.0, 0.0, 1.0)).approx_eq(&circle(0.0, 0.0, 2.0), tol));
        let a = AffineMap::new(z(0.0, 1.0), re(1.0)).unwrap();
        assert!(affine_shape(&a, &circle(1.0, 0.0, 1.0)).approx_eq(&circle(1.0, 1.0, 1.0), tol));
        let a = AffineMap::new(re(1.0), z(0.0, 1.0)).unwrap();
        let y0: GeneralizedCircle = ExtLine::from_slope(0.0, 0.0).unwrap().into();
        let y1: GeneralizedCircle = ExtLine::from_slope(0.0, 1.0).unwrap().into();
        assert!(affine_shape(&a, &y0).approx_eq(&y1, tol));
    }

    #[test]
    fn affine_region_keeps_orientation() {
        let t = Tolerance::default();
        // y > 0 rotated by a quarter turn is x < 0
        let r = Region::half_plane(
            ExtLine::from_slope(0.0, 0.0).unwrap(),
            Side::Positive,
            false,
        )
        .unwrap();
        let img = affine_region(&AffineMap::new(z(0.0, 1.0), re(0.0)).unwrap(), &r);
        assert!(contains(&img, ExtComplex::new(-1.0, 0.3), &t));
        assert!(!contains(&img, ExtComplex::new(1.0, 0.3), &t));
    }

    #[test]
    fn map_gcircle_examples() {
        let t = Tolerance::default();
        let (img, case) =
            map_gcircle_with_case(&MoebiusMap::inversion(), &circle(3.0, 0.0, 1.0), &t);
        assert_eq!(case, MapCase::Inversion(InversionCase::CircleToCircle));
        assert!(img.approx_eq(&circle(0.375, 0.0, 0.125), 1e-15));

        let half: GeneralizedCircle = ExtLine::vertical(0.5).unwrap().into();
        let (img, case) =
            map_gcircle_with_case(&map(0.0, 1.0, 1.0, -1.0), &circle(2.0, 0.0, 1.0), &t);
        assert_eq!(
            case,
            MapCase::Inversion(InversionCase::CircleThroughOriginToLine)
        );
        assert!(img.approx_eq(&half, 1e-15));

        let m = map(1.0, 0.0, 1.0, -1.0);
        let img = map_gcircle(&m, &circle(0.0, 0.0, 1.0), &t);
        assert!(img.approx_eq(&half, 1e-15));
        assert!(img.residual(apply_point(&m, ExtComplex::new(-1.0, 0.0))) < 1e-15);
        assert!(img.residual(apply_point(&m, ExtComplex::new(0.0, 1.0))) < 1e-15);
    }

    #[test]
    fn map_region_examples() {
        let t = Tolerance::default();
        let img = map_region(
            &MoebiusMap::inversion(),
            &Region::disk(re(1.0), 1.0, false).unwrap(),
            &t,
        );
        let expect =
            Region::half_plane(ExtLine::vertical(0.5).unwrap(), Side::Positive, false).unwrap();
        assert!(img.approx_eq(&expect, 1e-15, &t));

        let img = map_region(
            &map(0.0, 1.0, 1.0, -1.0),
            &Region::disk(re(3.0), 1.0, true).unwrap(),
            &t,
        );
        let expect = Region::disk(re(2.0 / 3.0), 1.0 / 3.0, true).unwrap();
        assert!(img.approx_eq(&expect, 1e-15, &t));

        let r = Region::from_parts(
            circle(1.0, 2.0, 3.0),
            Side::Outside,
            true,
            true,
            vec![re(5.0)],
            &t,
        )
        .unwrap();
        let (img, case) = map_region_with_case(&MoebiusMap::identity(), &r, &t);
        assert_eq!(case, MapCase::Affine);
        assert!(img.approx_eq(&r, 0.0, &t));
    }

    #[test]
    fn inverse_and_compose() {
        let m = MoebiusMap::new(z(1.0, 2.0), z(-0.5, 0.0), z(0.3, -1.0), z(2.0, 1.0)).unwrap();
        let t = Tolerance::default();
        let p = ExtComplex::new(0.7, -1.3);
        let back = apply_point(&m.inverse(), apply_point(&m, p));
        assert!(approx_eq(back, p, &t));
        let id = m.compose(&m.inverse()).unwrap();
        assert!(approx_eq(apply_point(&id, p), p, &t));
    }
}
