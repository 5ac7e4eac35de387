use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mopzeros_cli::{cmd_compare, cmd_density, cmd_poly, cmd_report, cmd_zeros, CliError, CliResult, ExperimentConfig};

#[derive(Parser)]
#[command(name = "mopzeros", version, about = "Multiple orthogonal polynomials: exact construction, zeros and limit densities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact coefficients, ascending, one rational per line
    Poly(Flags),
    /// Certified zeros as CSV
    Zeros(Flags),
    /// Limit density table as CSV
    Density(Flags),
    /// Empirical zeros against the limit law, as JSON
    Compare(Flags),
    /// Figure tables and summary text
    Report(Flags),
}

#[derive(Args, Default)]
struct Flags {
    /// jp, ml or meijer (long names also accepted)
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    r: Option<String>,
    /// Comma-separated rationals, e.g. 0,1/2
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Comma-separated nonnegative integers
    #[arg(long)]
    nu: Option<String>,
    /// Comma-separated sizes or explicit multi-indices like 3:2
    #[arg(long)]
    n: Option<String>,
    /// w, v, u, g or xg
    #[arg(long)]
    kind: Option<String>,
    /// Output file (a directory for `report`)
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    bits: Option<String>,
    #[arg(long)]
    grid: Option<String>,
    #[arg(long)]
    tol: Option<String>,
    /// Comma-separated evaluation points for ratio checks, e.g. -1,0.5+1i
    #[arg(long, allow_hyphen_values = true)]
    x0: Option<String>,
    #[arg(long)]
    interlacing: Option<String>,
    #[arg(long)]
    timing: Option<String>,
    /// key = value file; its keys override flags
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Flags {
    fn config(&self) -> CliResult<ExperimentConfig> {
        let mut cfg = ExperimentConfig::default();
        let pairs = [
            ("family", &self.family),
            ("r", &self.r),
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("nu", &self.nu),
            ("n", &self.n),
            ("kind", &self.kind),
            ("out", &self.out),
            ("bits", &self.bits),
            ("grid", &self.grid),
            ("tol", &self.tol),
            ("x0", &self.x0),
            ("interlacing", &self.interlacing),
            ("timing", &self.timing),
        ];
        for (key, value) in pairs {
            if let Some(v) = value {
                cfg.set(key, v)?;
            }
        }
        match &self.config {
            Some(path) => Ok(cfg.overlay(&ExperimentConfig::parse(&fs::read_to_string(path)?)?)),
            None => Ok(cfg),
        }
    }
}

fn emit(out: Option<&str>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(command: &Command) -> CliResult<()> {
    match command {
        Command::Poly(f) | Command::Zeros(f) | Command::Density(f) | Command::Compare(f) => {
            let cfg = f.config()?;
            let text = match command {
                Command::Poly(_) => cmd_poly(&cfg)?,
                Command::Zeros(_) => cmd_zeros(&cfg)?,
                Command::Density(_) => cmd_density(&cfg)?,
                _ => cmd_compare(&cfg)?,
            };
            emit(cfg.out.as_deref(), &text)
        }
        Command::Report(f) => {
            let cfg = f.config()?;
            let report = cmd_report(&cfg)?;
            match cfg.out.as_deref() {
                Some(dir) => {
                    fs::create_dir_all(dir)?;
                    for (name, body) in &report.tables {
                        fs::write(PathBuf::from(dir).join(name), body)?;
                    }
                    fs::write(PathBuf::from(dir).join("summary.txt"), &report.summary)?;
                    Ok(())
                }
                None => emit(None, &report.summary),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Numerical(_) = e {
                eprintln!("numerical failure");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
