//! Υ and Υ² through the half-planes `{ℓ^t <= s}`, `ℓ^t(i,j) = (1 - t/2) i + (t/2) j`.

use std::collections::HashSet;

use crate::complex::FormalComplex;
use crate::error::{Error, Result};
use crate::gf2::Echelon;
use crate::pl::{PLFunction, Rational};
use crate::region::Point;

use super::{hom_generators, Degree0, HomGenerator};

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn ell(t: Rational, p: Point) -> Rational {
    (r(1) - t / 2) * p.i + t / 2 * p.j
}

fn slope(p: Point) -> Rational {
    Rational::new(p.j - p.i, 2)
}

fn check_t(t: Rational) -> Result<()> {
    if t < r(0) || t > r(2) {
        return Err(Error::invalid(format!("t = {t} is outside [0,2]")));
    }
    Ok(())
}

fn level_in(d: &Degree0, t: Rational) -> Result<Rational> {
    let mut values: Vec<Rational> = d.points.iter().map(|&p| ell(t, p)).collect();
    values.sort();
    values.dedup();
    // Membership is monotone in s, so binary search over the candidate levels.
    let first = values.partition_point(|&s| !d.contains(|p| ell(t, p) <= s));
    values.get(first).copied().ok_or(Error::NoHomologicalGenerator)
}

/// `υ_C(t)`: the least `s` whose half-plane `{ℓ^t <= s}` contains a homological generator.
pub fn upsilon_level(c: &FormalComplex, t: Rational) -> Result<Rational> {
    check_t(t)?;
    level_in(&Degree0::new(c), t)
}

/// `Υ_C(t) = -2 υ_C(t)`.
pub fn upsilon_at(c: &FormalComplex, t: Rational) -> Result<Rational> {
    Ok(upsilon_level(c, t)? * -2)
}

/// `Υ_C` as an exact piecewise-linear function.
///
/// Between two consecutive crossings of the lines `t ↦ ℓ^t(p)` the order of
/// the grading-0 support points is fixed, so every membership test and hence
/// `υ_C` follows a single line there.
pub fn upsilon(c: &FormalComplex) -> Result<PLFunction> {
    let d = Degree0::new(c);
    let mut pts = d.points.clone();
    pts.sort();
    pts.dedup();
    let mut ts = vec![r(0), r(2)];
    for (a, p) in pts.iter().enumerate() {
        for q in &pts[a + 1..] {
            let (dp, dq) = (p.j - p.i, q.j - q.i);
            if dp != dq {
                let t = Rational::new(2 * (q.i - p.i), dp - dq);
                if t > r(0) && t < r(2) {
                    ts.push(t);
                }
            }
        }
    }
    ts.sort();
    ts.dedup();
    let samples = ts
        .into_iter()
        .map(|t| Ok((t, level_in(&d, t)? * -2)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PLFunction::from_points(samples))
}

/// Value of Υ² at one `(t, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Upsilon2 {
    Finite(Rational),
    Infinity,
}

impl std::fmt::Display for Upsilon2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Upsilon2::Finite(v) => write!(f, "{v}"),
            Upsilon2::Infinity => f.write_str("inf"),
        }
    }
}

/// `f_z(t)` and the one-sided slopes `(f_z'(t-), f_z'(t+))`.
fn profile(z: &HomGenerator, t: Rational) -> (Rational, Rational, Rational) {
    let corners = z.region.corners();
    let value = corners.iter().map(|&p| ell(t, p)).max().expect("regions are nonempty");
    let active: Vec<Rational> = corners
        .iter()
        .filter(|&&p| ell(t, p) == value)
        .map(|&p| slope(p))
        .collect();
    let left = *active.iter().min().unwrap();
    let right = *active.iter().max().unwrap();
    (value, left, right)
}

/// `Υ²_{C,t}(s) = -2 (υ²_{C,t}(s) - υ_C(t))`.
///
/// `Z^+` (resp. `Z^-`) are the homological generators minimizing `f_z` just
/// right (resp. left) of `t`. If they share a generator the value is
/// infinite. Otherwise `υ²` is the least `r` such that some `z^- + z^+`
/// bounds in `F^t_{υ(t)} + F^s_r`; when no `r` at all is needed the value is
/// also reported as infinite.
pub fn upsilon2(c: &FormalComplex, t: Rational, s: Rational, cap: u64) -> Result<Upsilon2> {
    if t <= r(0) || t >= r(2) {
        return Err(Error::invalid(format!("t = {t} is outside (0,2)")));
    }
    check_t(s)?;
    let gens = hom_generators(c, cap)?;
    let profiles: Vec<_> = gens.iter().map(|z| profile(z, t)).collect();
    let upsilon = profiles.iter().map(|p| p.0).min().expect("at least one generator");
    let best_right = profiles.iter().map(|p| (p.0, p.2)).min().unwrap();
    let best_left = profiles.iter().map(|p| (p.0, -p.1)).min().unwrap();
    let plus: Vec<usize> = (0..gens.len()).filter(|&k| (profiles[k].0, profiles[k].2) == best_right).collect();
    let minus: Vec<usize> = (0..gens.len()).filter(|&k| (profiles[k].0, -profiles[k].1) == best_left).collect();
    if plus.iter().any(|k| minus.contains(k)) {
        return Ok(Upsilon2::Infinity);
    }

    let n0 = c.graded_basis(0).len();
    let d1 = c.boundary_matrix(1);
    let connected = |level: Option<Rational>| {
        let inside = |p: Point| ell(t, p) <= upsilon || level.is_some_and(|r| ell(s, p) <= r);
        let cols = c.region_slice_indices(inside, 1);
        let columns: Vec<_> = cols.iter().map(|&k| d1.column(k)).collect();
        let image = Echelon::from_vectors(n0, &columns);
        let reduced: HashSet<_> = minus.iter().map(|&k| image.reduce(&gens[k].vector)).collect();
        plus.iter().any(|&k| reduced.contains(&image.reduce(&gens[k].vector)))
    };
    if connected(None) {
        return Ok(Upsilon2::Infinity);
    }
    let mut levels: Vec<Rational> = c
        .graded_points(0)
        .into_iter()
        .chain(c.graded_points(1))
        .map(|p| ell(s, p))
        .collect();
    levels.sort();
    levels.dedup();
    let level = levels
        .into_iter()
        .find(|&l| connected(Some(l)))
        .expect("z- + z+ bounds in C once every support point is included");
    Ok(Upsilon2::Finite((level - upsilon) * -2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::invariants::{tau, DEFAULT_MAX_ENUM};

    #[test]
    fn trefoil_upsilon() {
        let t = catalog::trefoil();
        assert_eq!(upsilon(&t).unwrap().to_string(), "(0,0) (1,-1) (2,0)");
        assert_eq!(upsilon_level(&t, r(1)).unwrap(), Rational::new(1, 2));
    }

    #[test]
    fn unknot_upsilon_is_zero() {
        assert_eq!(upsilon(&catalog::unknot()).unwrap(), PLFunction::constant(r(0)));
    }

    #[test]
    fn staircase_upsilon() {
        for g in 1..=3i64 {
            let m = catalog::torus_staircase(g as u32, true).unwrap();
            let f = upsilon(&m).unwrap();
            assert_eq!(f.eval(r(1)), r(g));
            assert_eq!(f.slope_right(r(0)), r(-tau(&m).unwrap()));
        }
    }

    #[test]
    fn trefoil_upsilon2() {
        let t = catalog::trefoil();
        assert_eq!(upsilon2(&t, r(1), r(1), DEFAULT_MAX_ENUM).unwrap(), Upsilon2::Finite(r(-1)));
        // Away from the kink both sides are minimized by the same generator.
        let half = Rational::new(1, 2);
        assert_eq!(upsilon2(&t, half, r(1), DEFAULT_MAX_ENUM).unwrap(), Upsilon2::Infinity);
        assert_eq!(upsilon2(&catalog::unknot(), r(1), r(0), DEFAULT_MAX_ENUM).unwrap(), Upsilon2::Infinity);
        assert!(upsilon2(&t, r(0), r(1), DEFAULT_MAX_ENUM).is_err());
    }
}
