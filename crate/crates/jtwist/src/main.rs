use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use jtwist::config::{resolve, Cli, Command, Format, Options, Resolved, ORDER_ENV};
use jtwist::emit::emit;
use jtwist::suites::run_suites;

const USAGE: u8 = 2;
const FAILED: u8 = 1;

fn settings(options: &Options) -> Result<Resolved, ExitCode> {
    let env = std::env::var(ORDER_ENV).ok();
    resolve(options, env.as_deref()).map_err(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(USAGE)
    })
}

fn write_out(r: &Resolved, text: &str) -> Result<(), ExitCode> {
    let res = match &r.out {
        Some(path) => std::fs::write(path, format!("{text}\n")),
        None => writeln!(std::io::stdout().lock(), "{text}"),
    };
    res.map_err(|e| {
        eprintln!("error: cannot write output: {e}");
        ExitCode::from(FAILED)
    })
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Verify { suites, options } => {
            let r = settings(&options)?;
            let reports = run_suites(&suites, &r.params).map_err(|e| {
                eprintln!("error: {e:#}");
                ExitCode::from(USAGE)
            })?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let text = match r.format {
                Format::Json => serde_json::to_string_pretty(&reports).expect("reports serialize"),
                Format::Text => {
                    let mut lines: Vec<String> = reports.iter().map(|r| r.text_line()).collect();
                    lines.push(format!("{} checks, {} failed", reports.len(), failed));
                    lines.join("\n")
                }
            };
            write_out(&r, &text)?;
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(FAILED) })
        }
        Command::Emit { object, options } => {
            let r = settings(&options)?;
            let text = emit(object, &r.params, r.format).map_err(|e| {
                eprintln!("error: {e:#}");
                ExitCode::from(FAILED)
            })?;
            write_out(&r, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(|code| code)
}
