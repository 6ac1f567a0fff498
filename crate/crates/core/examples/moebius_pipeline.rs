// A Möbius map split into affine ∘ inversion ∘ affine, and the images of
// circles and disks it produces.

use circline::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    let z = Complex64::new;

    // h(z) = z/(z − 1) = 1 + 1/(z − 1)
    let h = MoebiusMap::new(z(1.0, 0.0), z(0.0, 0.0), z(1.0, 0.0), z(-1.0, 0.0))?;
    if let Factorization::Composite { pre, post } = decompose(&h) {
        println!("pre  {pre}");
        println!("post {post}");
    }
    for p in [z(2.0, 0.0), z(-1.0, 0.0), z(0.0, 1.0)] {
        let p = ExtComplex::Finite(p);
        println!(
            "h({p}) = {} = {}",
            apply_point(&h, p),
            decompose(&h).apply(p)
        );
    }

    // the unit circle passes through the pole 1, so its image is a line
    let unit = GeneralizedCircle::from(Circle::new(z(0.0, 0.0), 1.0)?);
    let (image, case) = map_gcircle_with_case(&h, &unit, &tol);
    println!("h(S(0, 1)) = {image}  [{}]", case.tag());

    // g(z) = 1/(z − 1) on the closed disk B(3, 1)
    let g = MoebiusMap::new(z(0.0, 0.0), z(1.0, 0.0), z(1.0, 0.0), z(-1.0, 0.0))?;
    let disk = Region::disk(z(3.0, 0.0), 1.0, true)?;
    let (image, case) = map_region_with_case(&g, &disk, &tol);
    println!("g(closed B(3, 1)) = {image}  [{}]", case.tag());

    // composing maps composes images
    let gh = g.compose(&h)?;
    let circle = GeneralizedCircle::from(Circle::new(z(-2.0, 1.0), 0.5)?);
    let stepwise = map_gcircle(&g, &map_gcircle(&h, &circle, &tol), &tol);
    let direct = map_gcircle(&gh, &circle, &tol);
    println!("g(h(S)) = {stepwise}");
    println!("(g∘h)(S) = {direct}");
    assert!(stepwise.approx_eq(&direct, 1e-12));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
