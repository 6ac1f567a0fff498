// Draws shapes and their images as SVG files. Pass an output directory,
// otherwise the system temp directory is used.

use std::path::{Path, PathBuf};

use circline::cli::{emit_svg, Shape, Viewport};
use circline::prelude::*;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    render(&std::env::temp_dir())
}

fn render(dir: &Path) -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerance::default();
    let z = Complex64::new;
    let figures: Vec<(&str, Shape, Viewport)> = vec![
        (
            "circle.svg",
            GeneralizedCircle::from(Circle::new(z(3.0, 0.0), 1.0)?).into(),
            Viewport::default(),
        ),
        (
            "line.svg",
            GeneralizedCircle::from(ExtLine::vertical(2.0)?).into(),
            Viewport::new(-1.0, -1.0, 3.0, 3.0)?,
        ),
        (
            "disk.svg",
            Region::disk(z(1.0, 0.0), 1.0, false)?.into(),
            Viewport::default(),
        ),
        (
            "half_plane.svg",
            Region::half_plane(ExtLine::from_slope(0.0, 1.0)?, Side::Positive, true)?.into(),
            Viewport::new(-3.0, -2.0, 3.0, 3.0)?,
        ),
    ];
    for (file, shape, viewport) in figures {
        let image = match &shape {
            Shape::Curve(g) => Shape::Curve(invert_gcircle(g, &tol)),
            Shape::Region(r) => Shape::Region(invert_region(r, &tol)),
        };
        let path = dir.join(file);
        std::fs::write(&path, emit_svg(&shape, &image, viewport)?)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    if let Err(e) = render(&dir) {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
