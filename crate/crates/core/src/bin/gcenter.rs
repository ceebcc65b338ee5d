use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use gcenter::project::{emit_report, parse_project, run_suite};
use gcenter::report::{Format, Report};

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

/// Run named check suites on a project file.
///
/// Exit status: 0 when every check passes, 1 when a check fails, 2 on errors.
#[derive(Parser)]
#[command(version)]
struct Args {
    /// Project file (TOML).
    #[arg(long)]
    project: PathBuf,
    /// hopf, automorphism, action, yd, center, double or all. Defaults to the
    /// project's `suites` list, or `all`.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

fn run(args: &Args) -> Result<Report, String> {
    let text = std::fs::read_to_string(&args.project).map_err(|e| format!("{}: {e}", args.project.display()))?;
    let project = parse_project(&text).map_err(|e| format!("{}:{e}", args.project.display()))?;
    let suites = match &args.suite {
        Some(s) => vec![s.clone()],
        None if project.suites.is_empty() => vec!["all".to_string()],
        None => project.suites.clone(),
    };
    let mut report = Report::new();
    for s in &suites {
        report.extend(run_suite(&project, s).map_err(|e| e.to_string())?);
    }
    Ok(report)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(report) => {
            let format = match args.format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Machine => Format::Machine,
            };
            print!("{}", emit_report(&report, format));
            ExitCode::from(report.exit_status() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
