use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quregister::harness::{
    self, Format, RunConfig, SuiteSelection, DEFAULT_N_MAX, DEFAULT_SAMPLES, DEFAULT_SEED,
    DEFAULT_TOLERANCE,
};

const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "quregister", version)]
#[command(about = "Seeded verification suites for Clifford, spinor and qubit-register maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run claim suites and print a report
    Verify {
        /// `all` or a comma-separated list such as C1,C7
        #[arg(long, default_value = "all", value_parser = SuiteSelection::parse)]
        suites: SuiteSelection,

        /// Comparison tolerance for report-only suites and input validation
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,

        /// Base seed; every suite derives its own stream from it
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,

        /// Samples per randomized suite
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,

        /// Largest register size for the tensor suites (2 to 4)
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,

        /// Report format: text, json or csv
        #[arg(long, default_value = "text")]
        format: Format,

        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the suite catalog
    Claims,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Claims => {
            print_claims();
            ExitCode::SUCCESS
        }
        Command::Verify {
            suites,
            tolerance,
            seed,
            samples,
            n_max,
            format,
            out,
        } => {
            let config = RunConfig {
                suites,
                tolerance,
                seed,
                samples,
                n_max,
                format,
            };
            verify(&config, out)
        }
    }
}

fn print_claims() {
    let mut stdout = std::io::stdout().lock();
    for s in harness::list_claims() {
        let kind = if s.asserted {
            "asserted"
        } else {
            "report-only"
        };
        let _ = writeln!(
            stdout,
            "{:<4} {:<11} {} (\"{}\") [{}]",
            s.id,
            kind,
            s.title,
            s.paper_ref,
            s.exercises.join(", ")
        );
    }
}

fn verify(config: &RunConfig, out: Option<PathBuf>) -> ExitCode {
    let report = match harness::run(config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    for (id, elapsed) in &report.timings {
        eprintln!("{id:<4} {:>9.3} ms", elapsed.as_secs_f64() * 1e3);
    }
    let rendered = harness::render(&report, config.format);
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_IO);
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout
                .write_all(rendered.as_bytes())
                .and_then(|_| stdout.flush())
            {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(EXIT_IO);
            }
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
