#![allow(dead_code)]

use circline::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn c(x: f64, y: f64) -> Complex64 {
    Complex64::new(x, y)
}

pub fn uniform_c(rng: &mut ChaCha8Rng, half_width: f64) -> Complex64 {
    c(
        rng.gen_range(-half_width..=half_width),
        rng.gen_range(-half_width..=half_width),
    )
}

pub fn unit(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Circle with coefficients in [−10, 10] and `|R² − |z*|²| ≥ 1e-2`.
pub fn circle_off_origin(rng: &mut ChaCha8Rng) -> Circle {
    loop {
        let center = uniform_c(rng, 10.0);
        let radius = rng.gen_range(0.0..=10.0);
        if radius > 0.0 && (radius * radius - center.norm_sqr()).abs() >= 1e-2 {
            return Circle::new(center, radius).unwrap();
        }
    }
}

/// Line `n·p = d` with `d ∈ [−10, 10]`, `|d| ≥ 1e-2`.
pub fn line_off_origin(rng: &mut ChaCha8Rng) -> ExtLine {
    loop {
        let n = uniform_c(rng, 10.0);
        let d = rng.gen_range(-10.0..=10.0);
        if n.norm() > 1e-3 {
            let line = ExtLine::new(n.re, n.im, d).unwrap();
            if line.offset().abs() >= 1e-2 {
                return line;
            }
        }
    }
}

pub fn circle_through_origin(rng: &mut ChaCha8Rng) -> Circle {
    loop {
        let center = uniform_c(rng, 10.0);
        if center.norm() > 1e-2 {
            return Circle::new(center, center.norm()).unwrap();
        }
    }
}

pub fn line_through_origin(rng: &mut ChaCha8Rng) -> ExtLine {
    let n = unit(rng);
    ExtLine::new(n.re, n.im, 0.0).unwrap()
}

/// The six region dispatch cases, three for disks and three for half-planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionCase {
    DiskOriginExterior,
    DiskOriginInterior,
    DiskOriginOnBoundary,
    HalfPlaneOriginExterior,
    HalfPlaneOriginInterior,
    HalfPlaneOriginOnBoundary,
}

impl RegionCase {
    pub const ALL: [RegionCase; 6] = [
        RegionCase::DiskOriginExterior,
        RegionCase::DiskOriginInterior,
        RegionCase::DiskOriginOnBoundary,
        RegionCase::HalfPlaneOriginExterior,
        RegionCase::HalfPlaneOriginInterior,
        RegionCase::HalfPlaneOriginOnBoundary,
    ];

    pub fn expected(self) -> InversionCase {
        match self {
            RegionCase::DiskOriginExterior => InversionCase::DiskOriginExteriorToDisk,
            RegionCase::DiskOriginInterior => InversionCase::DiskOriginInteriorToDiskComplement,
            RegionCase::DiskOriginOnBoundary => InversionCase::DiskOriginOnBoundaryToHalfplane,
            RegionCase::HalfPlaneOriginExterior => InversionCase::HalfplaneOriginExteriorToDisk,
            RegionCase::HalfPlaneOriginInterior => {
                InversionCase::HalfplaneOriginInteriorToDiskComplement
            }
            RegionCase::HalfPlaneOriginOnBoundary => {
                InversionCase::HalfplaneOriginOnBoundaryToHalfplane
            }
        }
    }
}

/// A disk or half-plane in the given case, kept clear of the dispatch
/// boundaries by a relative gap of at least 5%.
pub fn region_in_case(rng: &mut ChaCha8Rng, case: RegionCase) -> Region {
    let closed = rng.gen_bool(0.5);
    match case {
        RegionCase::DiskOriginExterior | RegionCase::DiskOriginInterior => {
            let z = unit(rng) * rng.gen_range(0.1..=10.0);
            let k = if case == RegionCase::DiskOriginExterior {
                rng.gen_range(0.05..=0.95)
            } else {
                rng.gen_range(1.05..=5.0)
            };
            Region::disk(z, z.norm() * k, closed).unwrap()
        }
        RegionCase::DiskOriginOnBoundary => {
            let circle = circle_through_origin(rng);
            Region::disk(circle.center(), circle.radius(), closed).unwrap()
        }
        RegionCase::HalfPlaneOriginExterior | RegionCase::HalfPlaneOriginInterior => {
            let n = unit(rng);
            let d = rng.gen_range(0.05..=10.0);
            let line = ExtLine::new(n.re, n.im, d).unwrap();
            // 0 has n·0 − d < 0, on the negative side
            let side = if case == RegionCase::HalfPlaneOriginExterior {
                Side::Positive
            } else {
                Side::Negative
            };
            Region::half_plane(line, side, closed).unwrap()
        }
        RegionCase::HalfPlaneOriginOnBoundary => {
            let side = if rng.gen_bool(0.5) {
                Side::Positive
            } else {
                Side::Negative
            };
            Region::half_plane(line_through_origin(rng), side, closed).unwrap()
        }
    }
}

/// Any of the above, or the complement of a disk.
pub fn any_region(rng: &mut ChaCha8Rng) -> Region {
    let case = RegionCase::ALL[rng.gen_range(0..6)];
    let r = region_in_case(rng, case);
    if rng.gen_bool(0.25) {
        if let GeneralizedCircle::Circle(circle) = r.boundary() {
            return Region::new(*circle, Side::Outside, r.is_closed()).unwrap();
        }
    }
    r
}

/// Möbius map with coefficients uniform in [−10, 10]², `|c|` not tiny and
/// the determinant well away from degenerate.
pub fn random_map(rng: &mut ChaCha8Rng) -> MoebiusMap {
    loop {
        let [a, b, cc, d] = [0; 4].map(|_| uniform_c(rng, 10.0));
        let scale = 1f64.max(a.norm() * d.norm()).max(b.norm() * cc.norm());
        if cc.norm() < 1e-3 || (b * cc - a * d).norm() < 1e-3 * scale {
            continue;
        }
        if let Ok(m) = MoebiusMap::new(a, b, cc, d) {
            return m;
        }
    }
}
