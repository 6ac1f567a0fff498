// Checking predicted images by sampling. A correct prediction passes, a
// slightly wrong one is caught, and so is the wrong side of a half-plane.

use circline::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    let z = Complex64::new;
    let inv = MoebiusMap::inversion();

    let s31 = GeneralizedCircle::from(Circle::new(z(3.0, 0.0), 1.0)?);
    let right = GeneralizedCircle::from(Circle::new(z(0.375, 0.0), 0.125)?);
    let wrong = GeneralizedCircle::from(Circle::new(z(0.4, 0.0), 0.125)?);
    let rep = verify_gcircle_image(&inv, &s31, &right, 1000, 0, &tol)?;
    println!(
        "S(3/8, 1/8): passed {}, max residual {:e}",
        rep.passed, rep.max_boundary_residual
    );
    let rep = verify_gcircle_image(&inv, &s31, &wrong, 1000, 0, &tol)?;
    println!(
        "S(0.4, 1/8): passed {}, {} failures, e.g.",
        rep.passed,
        rep.failures.len()
    );
    if let Some(f) = rep.failures.first() {
        println!("    {} {}: {}", f.direction, f.point, f.detail);
    }

    // 1/z sends the upper side of y = ax to the lower side of y = −ax
    for a in [0.5, -2.0, 7.0] {
        let above = Region::half_plane(ExtLine::from_slope(a, 0.0)?, Side::Positive, false)?;
        let below = Region::half_plane(ExtLine::from_slope(-a, 0.0)?, Side::Negative, false)?;
        let not_below = Region::half_plane(ExtLine::from_slope(-a, 0.0)?, Side::Positive, false)?;
        let good = verify_region_image(&inv, &above, &below, 500, 1, &tol)?;
        let bad = verify_region_image(&inv, &above, &not_below, 500, 1, &tol)?;
        println!(
            "a = {a}: y < −ax passed {}, y > −ax passed {} ({} failures)",
            good.passed,
            bad.passed,
            bad.failures.len()
        );
        assert!(good.passed && !bad.passed);
    }

    // the closed half-plane y ≥ 1 omits ∞, so its image omits 0
    let closed = Region::half_plane(ExtLine::from_slope(0.0, 1.0)?, Side::Positive, true)?;
    let image = invert_region(&closed, &tol);
    let unpunctured = Region::disk(z(0.0, -0.5), 0.5, true)?;
    let rep = verify_region_image(&inv, &closed, &image, 500, 2, &tol)?;
    println!("closed y ≥ 1 ↦ {image}: passed {}", rep.passed);
    let rep = verify_region_image(&inv, &closed, &unpunctured, 500, 2, &tol)?;
    println!("without the puncture: passed {}", rep.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
