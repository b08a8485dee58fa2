use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cli_verify::commands::{self, CommandError, Outcome};
use cli_verify::SuiteContext;
use duality_engine::SignConventionFile;

#[derive(Parser)]
#[command(name = "twisted", about = "Exact checks for twisted supergravity and its S-duality")]
struct Cli {
    /// Background, e.g. "R4A x C[z] x C[w1,w2]"; defaults to R4A x C3B.
    #[arg(long, global = true)]
    background: Option<String>,
    /// S-duality strategy.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Closed)]
    mode: Mode,
    /// Write the verification report here (JSON when the path ends in .json).
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Seed for the randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Composite,
    Closed,
    #[value(name = "c_times_c2")]
    CTimesC2,
    #[value(name = "c3_z4")]
    C3Z4,
}

impl Mode {
    fn key(self) -> &'static str {
        match self {
            Mode::Composite => "composite",
            Mode::Closed => "closed",
            Mode::CTimesC2 => "c_times_c2",
            Mode::C3Z4 => "c3_z4",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a multivector.
    Parse { expr: String },
    /// Apply S-duality and print the image with its case trace.
    Sdual { expr: String },
    /// Schouten-Nijenhuis bracket.
    Sn { a: String, b: String },
    /// Divergence with respect to the background volume form.
    Div { expr: String },
    /// Dolbeault operator.
    Dolbeault { expr: String },
    /// Closed-open map onto a flat brane.
    Comap {
        expr: String,
        #[arg(long, default_value = "d3")]
        brane: String,
    },
    /// Residual supersymmetry: Q-cohomology and the res map.
    Qcoh,
    /// Run a verification suite.
    Verify { suite: String },
}

fn run(cli: &Cli) -> Result<Outcome, CommandError> {
    let bg = || commands::background(cli.background.as_deref());
    let signs = SignConventionFile::frozen();
    match &cli.command {
        Command::Parse { expr } => commands::parse_cmd(expr, &bg()?),
        Command::Sdual { expr } => {
            let chosen = cli.background.as_deref().map(|_| bg()).transpose()?;
            commands::sdual_cmd(expr, cli.mode.key(), chosen.as_ref(), &signs)
        }
        Command::Sn { a, b } => commands::sn_cmd(a, b, &bg()?),
        Command::Div { expr } => commands::div_cmd(expr, &bg()?),
        Command::Dolbeault { expr } => commands::dolbeault_cmd(expr, &bg()?),
        Command::Comap { expr, brane } => commands::comap_cmd(expr, brane),
        Command::Qcoh => commands::qcoh_cmd(),
        Command::Verify { suite } => commands::verify_cmd(suite, &SuiteContext::new(cli.seed, signs), cli.report.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
