// Job records as the command-line tool reads them, run through the library.

use circline::cli::{self, Command, Overrides};

const JOBS: [&str; 3] = [
    r#"{"shape": {"type": "circle", "center": [1, 0], "radius": 1}}"#,
    r#"{"transform": [[0, 0], [1, 0], [1, 0], [-1, 0]],
        "shape": {"type": "disk", "center": [3, 0], "radius": 1, "closed": true},
        "options": {"samples": 200, "seed": 3}}"#,
    r#"{"shape": {"type": "half_plane", "slope": 0, "intercept": 1, "closed": true}}"#,
];

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in JOBS {
        let job = cli::load_job(text, &Overrides::default())?;
        let out = cli::run(&job, Command::Verify, None)?;
        print!("{}", out.stdout);
        assert_eq!(out.exit_code, 0);
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
