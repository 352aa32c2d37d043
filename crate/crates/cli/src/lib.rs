//! Command-line front end for `cyldelta-core`.
//!
//! `cyldelta <command> [options]` computes one table and writes it as CSV
//! (default) or JSON. Options may also come from a flat JSON file given with
//! `--config`; flags on the command line take precedence.

pub mod config;
pub mod output;
pub mod run;

use std::ffi::OsString;

use config::{parse_config, ConfigError};

/// Parses `argv`, runs the command and returns the process exit status.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_config(argv) {
        Ok(cfg) => run::run(&cfg),
        Err(ConfigError::Display(text)) => {
            print!("{text}");
            run::EXIT_OK
        }
        Err(ConfigError::Usage(msg)) => {
            eprintln!("error: {msg}");
            run::EXIT_USAGE
        }
    }
}
