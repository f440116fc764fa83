//! Writes every catalog complex as a `.fkc` file.
//!
//! cargo run --example write_catalog -- <dir>

use std::{env, fs, path::PathBuf};

use formal_knot::{catalog, complex::serialize};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(env::args().nth(1).unwrap_or_else(|| "complexes".into()));
    fs::create_dir_all(&dir)?;
    for (file, c) in catalog::files() {
        fs::write(dir.join(file), serialize(&c))?;
        println!("{}", dir.join(file).display());
    }
    Ok(())
}
