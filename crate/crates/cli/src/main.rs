use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod eval;
mod json;
mod points;
mod report;

/// Exact checks of the 5-torsion of E5(b) and its link with the
/// Rogers-Ramanujan continued fraction.
#[derive(Parser, Debug)]
#[command(name = "tate5", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite and stream one report line per check.
    Verify {
        /// field, curve, watson, torsion, qseries or all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Number of exact series coefficients compared; 0 skips series identities.
        #[arg(long, default_value_t = tate5_core::rrcf::DEFAULT_TERMS)]
        terms: usize,
        /// Absolute tolerance of numeric checks.
        #[arg(long, default_value_t = tate5_core::rrcf::DEFAULT_TOL)]
        tol: f64,
        /// Worker threads; 0 uses every available core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Emit JSON lines instead of plain text.
        #[arg(long)]
        json: bool,
        /// Report ms = 0 so that repeated runs are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Evaluate r, b, u and the torsion point numerically at tau = re + i im.
    Eval {
        #[arg(allow_hyphen_values = true)]
        re: f64,
        #[arg(allow_hyphen_values = true)]
        im: f64,
        #[arg(long, default_value_t = tate5_core::rrcf::DEFAULT_TOL)]
        tol: f64,
    },
    /// List the 20 points of order 5 outside <(0,0)> for "u=<value>" (exact)
    /// or a value of b (numeric). Values are p/q or [c0,c1,c2,c3] in the
    /// basis 1, zeta, zeta^2, zeta^3.
    Points {
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value_t = tate5_core::rrcf::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// Exit status: 0 success, 1 a check failed or the input hit a pole or a
/// singular curve, 2 usage error.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] tate5_core::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(tate5_core::Error::UnknownSuite(_) | tate5_core::Error::NotInUpperHalfPlane(_)) => 2,
            CliError::Math(tate5_core::Error::Parse(_)) => 2,
            CliError::Math(_) => 1,
        }
    }
}

fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} worker threads: {e}")))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Verify { suite, terms, tol, jobs, json, no_timing } => {
            if tol.is_nan() || tol <= 0.0 {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            let pool = thread_pool(jobs)?;
            let opts = report::VerifyOptions { terms, tol, json, timing: !no_timing };
            report::verify(&suite, &opts, &pool)
        }
        Command::Eval { re, im, tol } => eval::eval(re, im, tol),
        Command::Points { value, tol, jobs } => points::points(&value, tol, &thread_pool(jobs)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("tate5: {e}");
            ExitCode::from(e.code())
        }
    }
}
