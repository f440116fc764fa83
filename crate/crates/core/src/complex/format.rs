//! The line-oriented `.fkc` text format.
//!
//! ```text
//! # comment
//! complex t2_3
//! gen a0 0 1 0
//! gen a1 0 0 1
//! gen b0 1 1 1
//! d b0 : a0 a1
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::{FormalComplex, Generator};

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

fn parse_int(tok: &str, line: usize, what: &str) -> Result<i64> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{tok}`")))
}

/// Parses `.fkc` text. The result is not validated.
pub fn parse(text: &str) -> Result<FormalComplex> {
    let mut name = None;
    let mut gens: Vec<Generator> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    // (line, source, targets) resolved once every generator is known.
    let mut d_lines: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut seen_content = false;

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().unwrap_or("");
        match keyword {
            "complex" => {
                if seen_content {
                    return Err(Error::parse(line_no, "`complex` header must come first"));
                }
                let rest = line["complex".len()..].trim();
                if rest.is_empty() {
                    return Err(Error::parse(line_no, "`complex` header needs a name"));
                }
                name = Some(rest.to_string());
            }
            "gen" => {
                let fields: Vec<&str> = tokens.collect();
                let [id, gr, alg, alex] = fields[..] else {
                    return Err(Error::parse(
                        line_no,
                        "expected `gen <id> <gr> <alg> <alex>`",
                    ));
                };
                if !is_identifier(id) {
                    return Err(Error::parse(line_no, format!("invalid generator name `{id}`")));
                }
                if index.contains_key(id) {
                    return Err(Error::parse(line_no, format!("duplicate generator `{id}`")));
                }
                let g = Generator::new(
                    id,
                    parse_int(gr, line_no, "grading")?,
                    parse_int(alg, line_no, "algebraic level")?,
                    parse_int(alex, line_no, "Alexander level")?,
                );
                index.insert(id.to_string(), gens.len());
                gens.push(g);
            }
            "d" => {
                let fields: Vec<&str> = tokens.collect();
                if fields.len() < 2 || fields[1] != ":" {
                    return Err(Error::parse(line_no, "expected `d <id> : <id> ...`"));
                }
                d_lines.push((
                    line_no,
                    fields[0].to_string(),
                    fields[2..].iter().map(|s| s.to_string()).collect(),
                ));
            }
            other => {
                return Err(Error::parse(line_no, format!("unknown keyword `{other}`")));
            }
        }
        seen_content = true;
    }

    let lookup = |id: &str, line: usize| {
        index
            .get(id)
            .copied()
            .ok_or_else(|| Error::parse(line, format!("unknown generator `{id}`")))
    };
    let mut has_d = vec![false; gens.len()];
    let mut terms = Vec::new();
    for (line, source, targets) in &d_lines {
        let s = lookup(source, *line)?;
        if std::mem::replace(&mut has_d[s], true) {
            return Err(Error::parse(*line, format!("second `d` line for `{source}`")));
        }
        for t in targets {
            terms.push((s, lookup(t, *line)?));
        }
    }
    Ok(FormalComplex::new(name, gens, terms))
}

/// Normalized text: header, generators in stored order, then one `d` line
/// per generator with nonzero boundary.
pub fn serialize(c: &FormalComplex) -> String {
    let mut out = String::new();
    if let Some(name) = c.name() {
        let _ = writeln!(out, "complex {name}");
    }
    for g in c.generators() {
        let _ = writeln!(out, "gen {} {} {} {}", g.name, g.gr, g.alg, g.alex);
    }
    for k in 0..c.rank() {
        let targets = c.targets(k);
        if targets.is_empty() {
            continue;
        }
        let names: Vec<&str> = targets
            .iter()
            .map(|&t| c.generators()[t].name.as_str())
            .collect();
        let _ = writeln!(out, "d {} : {}", c.generators()[k].name, names.join(" "));
    }
    out
}
