//! Exact images of generalized circles, disks and half-planes under the
//! inversion `z ↦ 1/z` and under arbitrary Möbius transformations.
//!
//! The crate is organised bottom-up:
//!
//! - [`extplane`]: points of the extended complex plane and tolerances.
//! - [`shapes`]: circles, extended lines, regions, membership and sampling.
//! - [`inversion`]: the case table for images under `z ↦ 1/z`.
//! - [`moebius`]: Möbius maps, their affine∘inversion∘affine factorization
//!   and images of shapes and regions.
//! - [`oracle`]: point-sampling verification of predicted images.
//! - [`cli`]: job records, the `map`/`verify`/`plot` commands and SVG output.
//!
//! ```
//! use circline::prelude::*;
//!
//! let circle = GeneralizedCircle::from(Circle::new(Complex64::new(3.0, 0.0), 1.0).unwrap());
//! let image = invert_gcircle(&circle, &Tolerance::default());
//! let GeneralizedCircle::Circle(c) = image else { panic!("expected a circle") };
//! assert_eq!(c.center(), Complex64::new(0.375, 0.0));
//! assert_eq!(c.radius(), 0.125);
//! ```

pub mod cli;
pub mod error;
pub mod extplane;
pub mod inversion;
pub mod moebius;
pub mod oracle;
pub mod shapes;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::extplane::{approx_eq, invert_point, ExtComplex, Tolerance};
    pub use crate::inversion::{
        invert_gcircle, invert_gcircle_with_case, invert_region, invert_region_with_case,
        InversionCase,
    };
    pub use crate::moebius::{
        affine_region, affine_shape, apply_point, decompose, map_gcircle, map_gcircle_with_case,
        map_region, map_region_with_case, AffineMap, Factorization, MapCase, MoebiusMap,
    };
    pub use crate::oracle::{
        verify_gcircle_image, verify_region_image, Direction, Failure, VerificationReport,
    };
    pub use crate::shapes::{
        classify_origin, classify_point, contains, sample_boundary, sample_boundary_grid,
        sample_region, Circle, ExtLine, GeneralizedCircle, Incidence, IncidenceKind, Region, Side,
    };
    pub use num_complex::Complex64;
}
