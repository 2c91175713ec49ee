use cfo_cli::config::{resolve, Cli, Command};
use cfo_cli::{cmd_compare, cmd_list, cmd_run, CliError};
use clap::error::ErrorKind;
use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Run(args) => resolve(args).and_then(|opts| {
            cmd_run(&opts).map(|paths| {
                for path in paths {
                    println!("wrote {}", path.display());
                }
            })
        }),
        Command::Compare(args) => resolve(args).and_then(|opts| {
            cmd_compare(&opts).map(|paths| {
                for path in paths {
                    println!("wrote {}", path.display());
                }
            })
        }),
        Command::List => {
            let mut stdout = std::io::stdout();
            cmd_list(&mut stdout).map_err(|e| CliError::Runtime(e.to_string()))
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
