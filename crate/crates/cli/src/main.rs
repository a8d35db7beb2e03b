use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use szeged_cli::args::Cli;
use szeged_cli::{run, ErrorObject};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let obj = ErrorObject { kind: "Usage".into(), message: e.to_string().trim().to_string(), counterexample: None };
            eprintln!("{}", serde_json::to_string(&obj).expect("error objects serialize"));
            return ExitCode::from(2);
        }
    };
    let outcome = run(&cli);
    if let Some(out) = outcome.stdout {
        let mut stdout = std::io::stdout().lock();
        // a closed pipe downstream is not our failure
        let _ = stdout.write_all(out.as_bytes());
    }
    if let Some(err) = outcome.stderr {
        eprint!("{err}");
    }
    ExitCode::from(outcome.status as u8)
}
