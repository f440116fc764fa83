//! Builders for the complexes used throughout the crate and its tests.

use crate::complex::{structural_checks, FormalComplex, Generator};
use crate::error::{Error, Result};
use crate::region::Point;

/// Λ itself: one generator in grading 0 at `(0,0)`.
pub fn unknot() -> FormalComplex {
    FormalComplex::new(Some("unknot".into()), vec![Generator::new("e", 0, 0, 0)], [])
}

/// The staircase complex of the torus knot `T(2, 2g+1)`, or of its mirror.
///
/// The mirror has generators `a_0..a_g` in grading 0 at `(-g+k, -k)` and
/// `b_0..b_{g-1}` in grading -1 at `(-g+l, -l-1)`, with
/// `∂a_k = b_{k-1} + b_k`. The non-mirror complex is its dual, keeping the
/// same generator names.
pub fn torus_staircase(g: u32, mirror: bool) -> Result<FormalComplex> {
    if g < 1 {
        return Err(Error::invalid("staircase genus must be at least 1"));
    }
    let g = i64::from(g);
    let mut gens = Vec::new();
    for k in 0..=g {
        gens.push(Generator::new(format!("a{k}"), 0, -g + k, -k));
    }
    for l in 0..g {
        gens.push(Generator::new(format!("b{l}"), -1, -g + l, -l - 1));
    }
    let b = |l: i64| (g + 1 + l) as usize;
    let mut terms = Vec::new();
    for k in 0..=g {
        if k >= 1 {
            terms.push((k as usize, b(k - 1)));
        }
        if k < g {
            terms.push((k as usize, b(k)));
        }
    }
    let knot = format!("t2_{}", 2 * g + 1);
    let m = FormalComplex::new(Some(format!("{knot}_mirror")), gens, terms);
    if mirror {
        return Ok(m);
    }
    let names: Vec<String> = m.generators().iter().map(|x| x.name.clone()).collect();
    Ok(m.dual().renamed(names).with_name(knot))
}

/// The right-handed trefoil `T(2,3)`.
pub fn trefoil() -> FormalComplex {
    torus_staircase(1, false).expect("genus 1 is valid")
}

/// The genus-one complex `C^n`: `x_k` (grading `k`, at `(k,k+1)`), `x'_k`
/// (grading `k`, at `(k+1,k)`) for `0 <= k < n`, and `y` (grading `n`, at
/// `(n,n)`), with `∂x_k = ∂x'_k = x_{k-1} + x'_{k-1}` and
/// `∂y = x_{n-1} + x'_{n-1}`.
pub fn cn(n: u32) -> Result<FormalComplex> {
    if n < 1 {
        return Err(Error::invalid("C^n needs n >= 1"));
    }
    let n = n as usize;
    let mut gens = Vec::with_capacity(2 * n + 1);
    for k in 0..n {
        let kk = k as i64;
        gens.push(Generator::new(format!("x{k}"), kk, kk, kk + 1));
        gens.push(Generator::new(format!("x{k}'"), kk, kk + 1, kk));
    }
    let ni = n as i64;
    gens.push(Generator::new("y", ni, ni, ni));
    let mut terms = Vec::new();
    for k in 1..n {
        for src in [2 * k, 2 * k + 1] {
            terms.push((src, 2 * (k - 1)));
            terms.push((src, 2 * (k - 1) + 1));
        }
    }
    terms.push((2 * n, 2 * (n - 1)));
    terms.push((2 * n, 2 * (n - 1) + 1));
    Ok(FormalComplex::new(Some(format!("c{n}")), gens, terms))
}

fn square_generators(shift: Point) -> Vec<Generator> {
    let gr = shift.i + shift.j;
    [("s11", 1, 1, 1), ("s01", 0, 0, 1), ("s10", 0, 1, 0), ("s00", -1, 0, 0)]
        .into_iter()
        .map(|(name, g, i, j)| Generator::new(name, g + gr, i + shift.i, j + shift.j))
        .collect()
}

const SQUARE_TERMS: [(usize, usize); 4] = [(0, 1), (0, 2), (1, 3), (2, 3)];

/// A dot at `(0,0)` plus a unit square: genus one with `τ = 0`.
pub fn figure_eight_model() -> FormalComplex {
    let mut gens = vec![Generator::new("e", 0, 0, 0)];
    gens.extend(square_generators(Point::new(0, 0)));
    let terms = SQUARE_TERMS.iter().map(|&(s, t)| (s + 1, t + 1));
    FormalComplex::new(Some("fig8".into()), gens, terms)
}

/// The acyclic square `s11 → s01 + s10 → s00` with corner `s00` moved to `shift`.
///
/// Algebraic and Alexander levels move by `shift.i` and `shift.j`; gradings
/// move by `shift.i + shift.j`, so a diagonal shift `(a,a)` is the U-translate
/// `U^{-a}`.
pub fn square_stabilizer(shift: Point) -> Result<FormalComplex> {
    let c = FormalComplex::new(Some("square".into()), square_generators(shift), SQUARE_TERMS);
    if let Some(bad) = structural_checks(&c).into_iter().find(|c| !c.passed) {
        return Err(Error::invalid(format!("shifted square fails {}", bad.name)));
    }
    Ok(c)
}

/// Every catalog formal knot complex (stabilizers excluded).
pub fn all() -> Vec<FormalComplex> {
    let mut out = vec![unknot()];
    for g in 1..=2 {
        out.push(torus_staircase(g, false).unwrap());
        out.push(torus_staircase(g, true).unwrap());
    }
    for n in 2..=4 {
        out.push(cn(n).unwrap());
    }
    out.push(figure_eight_model());
    out
}

/// The shipped `.fkc` files, by file name.
pub fn files() -> Vec<(&'static str, FormalComplex)> {
    vec![
        ("unknot.fkc", unknot()),
        ("t2_3.fkc", trefoil()),
        ("t2_5.fkc", torus_staircase(2, false).unwrap()),
        ("t2_3_mirror.fkc", torus_staircase(1, true).unwrap()),
        ("c2.fkc", cn(2).unwrap()),
        ("c3.fkc", cn(3).unwrap()),
        ("c4.fkc", cn(4).unwrap()),
        ("fig8.fkc", figure_eight_model()),
        ("square.fkc", square_stabilizer(Point::new(0, 0)).unwrap()),
    ]
}
