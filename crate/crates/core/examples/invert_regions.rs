// Disks and half-planes under z ↦ 1/z, including open/closed flags,
// membership of ∞ and punctured points.

use circline::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    let z = Complex64::new;
    let regions = vec![
        ("closed B(3, 1)", Region::disk(z(3.0, 0.0), 1.0, true)?),
        ("open B(0, 2)", Region::disk(z(0.0, 0.0), 2.0, false)?),
        ("open B(1, 1)", Region::disk(z(1.0, 0.0), 1.0, false)?),
        ("closed B(1, 1)", Region::disk(z(1.0, 0.0), 1.0, true)?),
        (
            "closed y ≥ 1",
            Region::half_plane(ExtLine::from_slope(0.0, 1.0)?, Side::Positive, true)?,
        ),
        (
            "open x < 1",
            Region::half_plane(ExtLine::vertical(1.0)?, Side::Negative, false)?,
        ),
        (
            "open y > 3x",
            Region::half_plane(ExtLine::from_slope(3.0, 0.0)?, Side::Positive, false)?,
        ),
    ];
    for (name, r) in &regions {
        let (image, case) = invert_region_with_case(r, &tol);
        println!("{name}  [{case}]");
        println!("    {image}");
        // the image is exact as a set: every point maps across and back
        for p in sample_region(r, 200, 7, &tol)? {
            assert!(contains(&image, invert_point(ExtComplex::Finite(p)), &tol));
        }
        let back = invert_region(&image, &tol);
        assert!(back.approx_eq(r, 1e-9, &tol));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
