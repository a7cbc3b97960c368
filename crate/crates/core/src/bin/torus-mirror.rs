use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use torus_mirror::cli::{self, Command, Input, JobConfig, TOL_ENV};

#[derive(Parser)]
#[command(name = "torus-mirror", version, about = "Exact verification of mirror data for complex tori")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Tolerance for floating-point checks.
    #[arg(long, global = true, env = TOL_ENV, default_value_t = cli::DEFAULT_TOL)]
    tol: f64,
    #[arg(long, global = true, default_value_t = cli::DEFAULT_SEED)]
    seed: u64,
    /// Entry radius for enumerations.
    #[arg(long, global = true, default_value_t = cli::DEFAULT_BOUND)]
    bound: i64,
    /// Sample points and random instances per family.
    #[arg(long, global = true, default_value_t = cli::DEFAULT_SAMPLES)]
    samples: usize,
    /// Write the JSON report to a file, or to stdout with `-`.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Accept only exact numbers in the input (default).
    #[arg(long, global = true, conflicts_with = "float")]
    exact: bool,
    /// Accept IEEE doubles in the input, converted exactly.
    #[arg(long, global = true)]
    float: bool,
    /// Include wall time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Integer shift making T - delta nonsingular.
    FindDelta { input: Option<String> },
    /// Mirror partner T - delta, T' and the biholomorphism.
    Mirror { input: Option<String> },
    /// Rank, unitaries, holomorphicity and mirror objects of a bundle.
    CheckBundle { input: Option<String> },
    /// Transition matrices for (r, A).
    BuildUnitaries { input: Option<String> },
    /// Run a verification suite: gcs, mirror-relations, delta, rank,
    /// holomorphic, fukaya, pairings, automorphy, sets or all.
    Verify { suite: String, input: Option<String> },
    /// Membership table and object injectivity over a box of A.
    Enumerate { input: Option<String> },
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (command, input) = match args.command {
        Cmd::FindDelta { input } => (Command::FindDelta, input),
        Cmd::Mirror { input } => (Command::Mirror, input),
        Cmd::CheckBundle { input } => (Command::CheckBundle, input),
        Cmd::BuildUnitaries { input } => (Command::BuildUnitaries, input),
        Cmd::Verify { suite, input } => (Command::Verify(suite), input),
        Cmd::Enumerate { input } => (Command::Enumerate, input),
    };
    let o = args.opts;
    let config = JobConfig {
        command,
        input: input.as_deref().map_or(Input::Default, Input::parse),
        tol: o.tol,
        seed: o.seed,
        bound: o.bound,
        samples: o.samples,
        float_input: o.float && !o.exact,
        timing: o.timing,
    };
    let result = cli::run(&config);
    let code = cli::exit_code(&result);
    match result {
        Ok(report) => {
            let written = match o.json.as_deref() {
                Some(p) if p.as_os_str() == "-" => std::io::stdout().write_all(report.to_json().as_bytes()),
                Some(p) => std::fs::write(p, report.to_json()).and_then(|_| std::io::stdout().write_all(report.to_text().as_bytes())),
                None => std::io::stdout().write_all(report.to_text().as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(cli::EXIT_INPUT as u8);
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code as u8)
}
