use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use circline::cli::{self, Command, Overrides, Viewport, TOL_ENV};
use circline::Error;

#[derive(Parser)]
#[command(
    name = "circline",
    version,
    about = "Images of circles, lines, disks and half-planes under Möbius maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the image record with its case tag.
    Map(Common),
    /// Check the computed image with the sampling oracle (exit 1 on failure).
    Verify(Common),
    /// Render the shape, its image and the unit circle as SVG.
    Plot(Common),
}

#[derive(Args)]
struct Common {
    /// Job record; read from stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Classification and residual tolerance (overrides CIRCLINE_TOL).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// xmin,ymin,xmax,ymax
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    viewport: Option<Vec<f64>>,
    /// SVG output path for `plot`; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn execute(command: Command, args: Common) -> Result<i32, Error> {
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| cli::with_path(e, path))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let env_tol = match std::env::var(TOL_ENV) {
        Ok(v) => Some(v.trim().parse::<f64>().map_err(|_| Error::Parse {
            path: TOL_ENV.into(),
            message: format!("not a number: {v}"),
        })?),
        Err(_) => None,
    };
    let viewport = match args.viewport.as_deref() {
        Some(&[a, b, c, d]) => Some(Viewport::new(a, b, c, d)?),
        Some(_) => {
            return Err(Error::InvalidArgument(
                "--viewport takes four values xmin,ymin,xmax,ymax".into(),
            ))
        }
        None => None,
    };
    let overrides = Overrides {
        env_tol,
        tol: args.tol,
        samples: args.samples,
        seed: args.seed,
        viewport,
    };
    let job = cli::load_job(&text, &overrides)?;
    let out = cli::run(&job, command, args.out.as_deref())?;
    print!("{}", out.stdout);
    Ok(out.exit_code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Cmd::Map(a) => (Command::Map, a),
        Cmd::Verify(a) => (Command::Verify, a),
        Cmd::Plot(a) => (Command::Plot, a),
    };
    match execute(command, args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("circline: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
