//! Command-line front end for `gfft-core`: oracle verification, operation
//! count benchmarks and factorization displays.

use std::ffi::OsString;
use std::io::Write;

use clap::{CommandFactory, FromArgMatches};

pub mod bench;
pub mod factor;
pub mod opts;
pub mod verify;

use opts::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn command() -> clap::Command {
    let help = opts::poly_help();
    let mut cmd = Cli::command();
    for sub in ["verify", "bench", "factor"] {
        let help = help.clone();
        cmd = cmd.mut_subcommand(sub, |s| s.mut_arg("poly", |a| a.long_help(help)));
    }
    cmd
}

/// Runs the CLI over `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match command().try_get_matches_from(args).and_then(|m| Cli::from_arg_matches(&m)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render().ansi());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => verify::run(a, out).map(|ok| if ok { EXIT_OK } else { EXIT_FAIL }),
        Command::Bench(a) => {
            bench::run(a, out).map(|recs| if recs.iter().all(|r| r.ok_mults && r.ok_adds) { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Factor(a) => factor::run(a, out).map(|()| EXIT_OK),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}
