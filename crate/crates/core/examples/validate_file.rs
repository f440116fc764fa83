//! Parses a `.fkc` file and prints its validation report.
//!
//! cargo run --example validate_file -- crates/core/complexes/c3.fkc

use std::{env, fs, process::ExitCode};

use formal_knot::complex::{parse, validate};

fn main() -> ExitCode {
    let Some(path) = env::args().nth(1) else {
        eprintln!("usage: validate_file <file.fkc>");
        return ExitCode::from(2);
    };
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{path}: {e}");
            return ExitCode::from(2);
        }
    };
    let c = match parse(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{path}: {e}");
            return ExitCode::from(2);
        }
    };
    println!("{} generators", c.rank());
    let report = validate(&c);
    print!("{report}");
    if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
