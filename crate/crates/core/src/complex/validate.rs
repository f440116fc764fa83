//! Axiom checks for formal knot complexes.
//!
//! The structural axioms (grading parity, filtered boundary, `∂² = 0`, odd
//! rank) are checked exactly. The homotopy-equivalence axioms are checked
//! through their homological consequences only: reversal symmetry of the
//! quadrant subcomplexes, and the homology of each single filtration
//! compared with that of Λ.

use std::fmt;

use crate::region::Point;

use super::homology::{homology_dim, Window};
use super::FormalComplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.check(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "fail" };
            if c.detail.is_empty() {
                writeln!(f, "{}: {status}", c.name)?;
            } else {
                writeln!(f, "{}: {status} ({})", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Default grading-window span: twice the support diameter, at least one.
pub fn default_span(c: &FormalComplex) -> i64 {
    let (lo, hi) = c.support_box();
    let diameter = [
        hi.i - lo.i,
        hi.j - lo.j,
        lo.i.abs(),
        hi.i.abs(),
        lo.j.abs(),
        hi.j.abs(),
    ]
    .into_iter()
    .max()
    .unwrap_or(0);
    (2 * diameter).max(1)
}

pub fn validate(c: &FormalComplex) -> ValidationReport {
    validate_with_span(c, default_span(c))
}

pub fn validate_with_span(c: &FormalComplex, span: i64) -> ValidationReport {
    let mut checks = structural_checks(c);
    let structural_ok = checks.iter().all(|c| c.passed);

    let r = c.rank();
    checks.push(Check {
        name: "odd_rank",
        passed: r % 2 == 1,
        detail: format!("rank {r}"),
    });

    let window = Window::around(c, span);
    if !structural_ok {
        for name in ["homology", "symmetry", "alexander_filtration", "algebraic_filtration"] {
            checks.push(Check {
                name,
                passed: false,
                detail: "skipped: structural checks failed".into(),
            });
        }
        return ValidationReport { checks };
    }

    checks.push(global_homology_check(c, window));
    checks.push(symmetry_check(c, window));
    checks.push(filtration_check(c, window, "alexander_filtration", |p| p.j));
    checks.push(filtration_check(c, window, "algebraic_filtration", |p| p.i));
    ValidationReport { checks }
}

/// Parity, filtered boundary and `∂² = 0`.
pub fn structural_checks(c: &FormalComplex) -> Vec<Check> {
    let gens = c.generators();
    let mut parity = Vec::new();
    let mut filtered = Vec::new();
    for k in 0..c.rank() {
        for l in c.targets(k) {
            let (src, dst) = (&gens[k], &gens[l]);
            if (dst.gr - src.gr + 1).rem_euclid(2) != 0 {
                parity.push(format!("{} -> {}", src.name, dst.name));
                continue;
            }
            let m = c.term_upower(k, l);
            if dst.alg - m > src.alg || dst.alex - m > src.alex {
                filtered.push(format!("{} -> {}", src.name, dst.name));
            }
        }
    }
    let d = c.boundary();
    let d_squared_ok = d.mul(d).is_zero();
    vec![
        Check {
            name: "parity",
            passed: parity.is_empty(),
            detail: parity.join(", "),
        },
        Check {
            name: "filtered",
            passed: filtered.is_empty(),
            detail: filtered.join(", "),
        },
        Check {
            name: "d_squared",
            passed: d_squared_ok,
            detail: String::new(),
        },
    ]
}

fn global_homology_check(c: &FormalComplex, window: Window) -> Check {
    let bad: Vec<String> = window
        .gradings()
        .filter_map(|n| {
            let h = homology_dim(c, n, |_| true, |_| false);
            let want = usize::from(n.rem_euclid(2) == 0);
            (h != want).then(|| format!("H_{n} has dim {h}"))
        })
        .collect();
    Check {
        name: "homology",
        passed: bad.is_empty(),
        detail: bad.join(", "),
    }
}

fn symmetry_check(c: &FormalComplex, window: Window) -> Check {
    let (lo, hi) = c.support_box();
    let a_range = lo.i.min(lo.j)..=hi.i.max(hi.j);
    let mut bad = Vec::new();
    'outer: for a in a_range.clone() {
        for b in a_range.clone() {
            if b < a {
                continue;
            }
            for n in window.gradings() {
                let h1 = homology_dim(c, n, |p| p.is_below(Point::new(a, b)), |_| false);
                let h2 = homology_dim(c, n, |p| p.is_below(Point::new(b, a)), |_| false);
                if h1 != h2 {
                    bad.push(format!("R_({a},{b}) vs R_({b},{a}) differ in grading {n}"));
                    break 'outer;
                }
            }
        }
    }
    Check {
        name: "symmetry",
        passed: bad.is_empty(),
        detail: bad.join(", "),
    }
}

/// Compares one filtration with that of Λ: `H_*(F_j / F_{j-1})` must be F₂
/// in grading `2j`, and `H_n(F_j)` must be F₂ exactly for even `n <= 2j`.
fn filtration_check(
    c: &FormalComplex,
    window: Window,
    name: &'static str,
    level: impl Fn(Point) -> i64 + Copy,
) -> Check {
    let (lo, hi) = c.support_box();
    let (min_level, max_level) = if name == "alexander_filtration" {
        (lo.j, hi.j)
    } else {
        (lo.i, hi.i)
    };
    let mut bad = Vec::new();
    for j in min_level.min(0)..=max_level.max(0) {
        for n in window.gradings() {
            let graded = homology_dim(c, n, |p| level(p) <= j, |p| level(p) < j);
            if graded != usize::from(n == 2 * j) {
                bad.push(format!("H_{n}(F_{j}/F_{}) has dim {graded}", j - 1));
            }
            let sub = homology_dim(c, n, |p| level(p) <= j, |_| false);
            if sub != usize::from(n <= 2 * j && n.rem_euclid(2) == 0) {
                bad.push(format!("H_{n}(F_{j}) has dim {sub}"));
            }
        }
    }
    Check {
        name,
        passed: bad.is_empty(),
        detail: bad.into_iter().take(3).collect::<Vec<_>>().join(", "),
    }
}

/// Whether `a` is a stabilizer: it satisfies the structural axioms and both
/// level-0 filtration subcomplexes are acyclic.
pub fn is_stabilizer(a: &FormalComplex) -> bool {
    if !structural_checks(a).iter().all(|c| c.passed) {
        return false;
    }
    let window = Window::around(a, default_span(a));
    window.gradings().all(|n| {
        homology_dim(a, n, |p| p.j <= 0, |_| false) == 0
            && homology_dim(a, n, |p| p.i <= 0, |_| false) == 0
    })
}
