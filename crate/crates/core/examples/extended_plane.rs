// Points of the extended plane, including ∞, under the inversion and a
// general Möbius map.

use circline::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let points = [
        ExtComplex::new(2.0, 0.0),
        ExtComplex::new(0.0, 1.0),
        ExtComplex::new(3.0, -4.0),
        ExtComplex::ZERO,
        ExtComplex::Infinity,
    ];
    println!("1/z:");
    for z in points {
        println!("  {z:>10} ↦ {}", invert_point(z));
    }

    // h(z) = z/(z − 1) has its pole at 1 and sends ∞ to a/c = 1
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let h = MoebiusMap::new(one, zero, one, -one)?;
    println!("{h}: pole {}", h.pole());
    for z in [
        ExtComplex::new(2.0, 0.0),
        ExtComplex::new(1.0, 0.0),
        ExtComplex::Infinity,
    ] {
        println!("  {z:>10} ↦ {}", apply_point(&h, z));
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
