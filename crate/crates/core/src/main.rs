use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ugmin::expr::parse_and_eval;
use ugmin::verify::{parse_suites, run_suite, SuiteConfig, VerifyError};
use ugmin::{load_algebra, Context, EqMode};

const INPUT_ERROR: u8 = 3;

/// Builds U(g)^min ♯ U(g) for a Lie algebra and checks its axioms exactly.
#[derive(Parser, Debug)]
#[command(name = "ugmin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites and report pass/fail per check.
    Verify {
        /// Catalog name (abelian2, solvable2, heisenberg3, sl2) or path to a JSON file.
        #[arg(long)]
        algebra: String,
        /// all, or a comma-separated subset of validate, theorem61, yd, algebroid.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        dmax: u32,
        #[arg(long, default_value_t = 2)]
        rmax: u32,
        /// heuristic:D or exact.
        #[arg(long, default_value = "heuristic:6")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here; `-` writes it to stdout instead of the summary.
        #[arg(long)]
        json: Option<String>,
        /// Record 0 ms for every check so reports are byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
    },
    /// Evaluate an expression and print its normal form.
    Eval {
        #[arg(long)]
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(INPUT_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Verify { algebra, suite, dmax, rmax, mode, seed, json, no_timing } => {
            let cfg = match (parse_suites(&suite), mode.parse::<EqMode>()) {
                (Ok(suites), Ok(mode)) => SuiteConfig { algebra, dmax, rmax, mode, suites, seed, timing: !no_timing },
                (Err(e), _) | (_, Err(e)) => return input_error(&e),
            };
            verify(&cfg, json.as_deref())
        }
        Command::Eval { algebra, expr } => eval(&algebra, &expr),
    }
}

fn input_error(e: &dyn std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(INPUT_ERROR)
}

fn verify(cfg: &SuiteConfig, json: Option<&str>) -> ExitCode {
    let report = match run_suite(cfg) {
        Ok(r) => r,
        Err(e @ (VerifyError::Algebra(_) | VerifyError::Config(_))) => return input_error(&e),
    };
    match json {
        Some("-") => println!("{}", report.to_json()),
        Some(path) => {
            if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
                return input_error(&format!("cannot write {path}: {e}"));
            }
            print!("{}", report.human());
        }
        None => print!("{}", report.human()),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn eval(algebra: &str, expr: &str) -> ExitCode {
    let lie = match load_algebra(algebra) {
        Ok(l) => l,
        Err(e) => return input_error(&e),
    };
    let ctx = Context::new(lie);
    match parse_and_eval(&ctx, expr) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{expr}");
            eprintln!("{}^", " ".repeat(e.pos));
            input_error(&e)
        }
    }
}
