//! The `fkc` command line: `.fkc` files in, `key = value` lines out.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or parse error,
//! 3 enumeration limit exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::complex::{is_stabilizer, parse, serialize, validate, FormalComplex};
use crate::error::Error;
use crate::invariants::{self, DEFAULT_MAX_ENUM};
use crate::pl::{parse_rational, Rational};
use crate::region::format_region_set;

#[derive(Parser, Debug)]
#[command(name = "fkc", version, about = "Formal knot complexes and their invariants")]
struct Cli {
    /// Largest coset enumeration allowed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ENUM)]
    max_enum: u64,

    /// Compute even when validation fails.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms and print one line per check.
    Validate { file: PathBuf },
    /// ν⁺, ν⁺ of the dual, τ, genus and V_0..V_K.
    Invariants {
        file: PathBuf,
        /// Largest k for V_k (default: ν⁺).
        #[arg(long)]
        vk_max: Option<u64>,
    },
    /// Breakpoints of Υ.
    Upsilon { file: PathBuf },
    /// Υ² at one (t, s).
    Upsilon2 {
        file: PathBuf,
        #[arg(long, value_parser = rational)]
        t: Rational,
        #[arg(long, value_parser = rational)]
        s: Rational,
    },
    /// Minimal regions of homological generators.
    G0 { file: PathBuf },
    /// G0, G1, ... while each level has exactly two regions.
    Gtower {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Position of A relative to B in the ν⁺-order.
    Compare { a: PathBuf, b: PathBuf },
    /// A ⊗ B.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// The dual complex.
    Dual {
        a: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// A ⊕ B (not validated).
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Swap the two filtrations (not validated).
    Reverse {
        a: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Change in the d-invariant of p/q surgery relative to the unknot.
    Dsurgery {
        file: PathBuf,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
        #[arg(short)]
        i: u64,
    },
    /// Whether the complex is acyclic in both level-0 filtrations.
    StabilizerCheck { file: PathBuf },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Enumeration(_) => 3,
            Error::NoHomologicalGenerator => 1,
            Error::Parse { .. } | Error::InvalidArgument(_) => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

struct Session<'a> {
    force: bool,
    cap: u64,
    out: &'a mut dyn Write,
}

fn load(path: &Path) -> Result<FormalComplex, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    parse(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

impl Session<'_> {
    /// Loads and validates, unless `--force`.
    fn load_valid(&self, path: &Path) -> Result<FormalComplex, Failure> {
        let c = load(path)?;
        if !self.force {
            let report = validate(&c);
            if !report.is_valid() {
                let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
                return Err(Failure {
                    code: 1,
                    message: format!("{}: not a formal knot complex (failed: {})", path.display(), failed.join(", ")),
                });
            }
        }
        Ok(c)
    }

    fn emit(&mut self, c: &FormalComplex, o: Option<&Path>) -> Result<(), Failure> {
        let text = serialize(c);
        match o {
            Some(path) => fs::write(path, text).map_err(|e| Failure {
                code: 2,
                message: format!("{}: {e}", path.display()),
            }),
            None => Ok(self.out.write_all(text.as_bytes())?),
        }
    }

    fn execute(&mut self, command: Command) -> Result<i32, Failure> {
        match command {
            Command::Validate { file } => {
                let c = load(&file)?;
                let report = validate(&c);
                write!(self.out, "{report}")?;
                let ok = report.is_valid();
                writeln!(self.out, "valid = {ok}")?;
                return Ok(if ok { 0 } else { 1 });
            }
            Command::Invariants { file, vk_max } => {
                let c = self.load_valid(&file)?;
                let nu = invariants::nu_plus(&c)?;
                writeln!(self.out, "nu_plus = {nu}")?;
                writeln!(self.out, "nu_plus_dual = {}", invariants::nu_plus_dual(&c)?)?;
                writeln!(self.out, "tau = {}", invariants::tau(&c)?)?;
                writeln!(self.out, "genus = {}", invariants::genus(&c))?;
                let top = vk_max.map_or(nu, |k| k as i64);
                for k in 0..=top {
                    writeln!(self.out, "V_{k} = {}", invariants::v_k(&c, k)?)?;
                }
            }
            Command::Upsilon { file } => {
                let c = self.load_valid(&file)?;
                writeln!(self.out, "upsilon = {}", invariants::upsilon(&c)?)?;
            }
            Command::Upsilon2 { file, t, s } => {
                let c = self.load_valid(&file)?;
                let v = invariants::upsilon2(&c, t, s, self.cap)?;
                writeln!(self.out, "upsilon2 = {v}")?;
            }
            Command::G0 { file } => {
                let c = self.load_valid(&file)?;
                let g = invariants::g0(&c, self.cap)?;
                writeln!(self.out, "G0 = {}", format_region_set(&g))?;
            }
            Command::Gtower { file, depth } => {
                let c = self.load_valid(&file)?;
                let tower = invariants::g_tower(&c, depth, self.cap)?;
                for (k, level) in tower.levels.iter().enumerate() {
                    writeln!(self.out, "G{k} = {}", format_region_set(&level.regions))?;
                }
                writeln!(self.out, "stop = {}", tower.stop)?;
            }
            Command::Compare { a, b } => {
                let (a, b) = (self.load_valid(&a)?, self.load_valid(&b)?);
                writeln!(self.out, "{}", invariants::compare(&a, &b)?)?;
            }
            Command::Tensor { a, b, o } => {
                let c = self.load_valid(&a)?.tensor(&self.load_valid(&b)?);
                self.emit(&c, o.as_deref())?;
            }
            Command::Dual { a, o } => {
                let c = self.load_valid(&a)?.dual();
                self.emit(&c, o.as_deref())?;
            }
            Command::Sum { a, b, o } => {
                let c = load(&a)?.direct_sum(&load(&b)?);
                self.emit(&c, o.as_deref())?;
            }
            Command::Reverse { a, o } => {
                let c = load(&a)?.reverse();
                self.emit(&c, o.as_deref())?;
            }
            Command::Dsurgery { file, p, q, i } => {
                let c = self.load_valid(&file)?;
                writeln!(self.out, "d_delta = {}", invariants::d_surgery_delta(&c, p, q, i)?)?;
            }
            Command::StabilizerCheck { file } => {
                let c = load(&file)?;
                writeln!(self.out, "stabilizer = {}", is_stabilizer(&c))?;
            }
        }
        Ok(0)
    }
}

/// Runs `fkc` with `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let text = text.strip_prefix("error: ").unwrap_or(&text);
            let _ = write!(err, "fkc: error: {text}");
            return 2;
        }
    };
    let mut session = Session {
        force: cli.force,
        cap: cli.max_enum,
        out,
    };
    match session.execute(cli.command) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "fkc: error: {}", f.message);
            f.code
        }
    }
}
