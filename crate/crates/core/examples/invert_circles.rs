// Images of circles and lines under z ↦ 1/z, with the branch taken.

use circline::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    let shapes: Vec<(&str, GeneralizedCircle)> = vec![
        (
            "S(3, 1)",
            Circle::new(Complex64::new(3.0, 0.0), 1.0)?.into(),
        ),
        (
            "S(1, 1)",
            Circle::new(Complex64::new(1.0, 0.0), 1.0)?.into(),
        ),
        ("y = x + 1", ExtLine::from_slope(1.0, 1.0)?.into()),
        ("y = 2x", ExtLine::from_slope(2.0, 0.0)?.into()),
        ("x = 2", ExtLine::vertical(2.0)?.into()),
    ];
    for (name, g) in &shapes {
        let (image, case) = invert_gcircle_with_case(g, &tol);
        println!("{name:<10} {:<32} {image}", case.tag());
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
