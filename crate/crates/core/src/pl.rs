//! Exact piecewise-linear functions on `[0, 2]`.

use std::fmt;
use std::ops::{Add, Neg};

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (i64, i64) = (p.parse().ok()?, q.parse().ok()?);
            (q != 0).then(|| Ratio::new(p, q))
        }
        None => s.parse().ok().map(Ratio::from_integer),
    }
}

/// A continuous piecewise-linear function on `[0, 2]`, stored as its
/// breakpoints with no three consecutive ones collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    breakpoints: Vec<(Rational, Rational)>,
}

fn slope(a: (Rational, Rational), b: (Rational, Rational)) -> Rational {
    (b.1 - a.1) / (b.0 - a.0)
}

impl PLFunction {
    /// Interpolates the given samples.
    ///
    /// # Panics
    /// Unless the `t` values are strictly increasing from 0 to 2.
    pub fn from_points(points: Vec<(Rational, Rational)>) -> Self {
        assert!(points.len() >= 2, "need samples at both ends");
        assert_eq!(points[0].0, Ratio::from_integer(0));
        assert_eq!(points[points.len() - 1].0, Ratio::from_integer(2));
        assert!(points.windows(2).all(|w| w[0].0 < w[1].0), "t values must increase");
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
        for p in points {
            while out.len() >= 2 && slope(out[out.len() - 2], out[out.len() - 1]) == slope(out[out.len() - 1], p) {
                out.pop();
            }
            out.push(p);
        }
        PLFunction { breakpoints: out }
    }

    pub fn constant(v: Rational) -> Self {
        Self::from_points(vec![(Ratio::from_integer(0), v), (Ratio::from_integer(2), v)])
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    /// Index of the segment `[t_k, t_{k+1}]` containing `t`, preferring the left one.
    fn segment(&self, t: Rational) -> usize {
        assert!(
            t >= Ratio::from_integer(0) && t <= Ratio::from_integer(2),
            "t = {t} outside [0,2]"
        );
        self.breakpoints
            .windows(2)
            .position(|w| t <= w[1].0)
            .expect("t lies in [0,2]")
    }

    pub fn eval(&self, t: Rational) -> Rational {
        let k = self.segment(t);
        let (a, b) = (self.breakpoints[k], self.breakpoints[k + 1]);
        a.1 + slope(a, b) * (t - a.0)
    }

    /// Slope on `(t, t + δ)`; requires `t < 2`.
    pub fn slope_right(&self, t: Rational) -> Rational {
        assert!(t < Ratio::from_integer(2));
        let k = self
            .breakpoints
            .windows(2)
            .position(|w| t < w[1].0)
            .expect("t < 2");
        slope(self.breakpoints[k], self.breakpoints[k + 1])
    }

    /// Slope on `(t - δ, t)`; requires `t > 0`.
    pub fn slope_left(&self, t: Rational) -> Rational {
        assert!(t > Ratio::from_integer(0));
        let k = self.segment(t);
        slope(self.breakpoints[k], self.breakpoints[k + 1])
    }

    /// Applies `f` to the values, which must preserve linearity (e.g. scaling).
    pub fn map_values(&self, f: impl Fn(Rational) -> Rational) -> Self {
        Self::from_points(self.breakpoints.iter().map(|&(t, v)| (t, f(v))).collect())
    }
}

impl Add for &PLFunction {
    type Output = PLFunction;

    fn add(self, other: &PLFunction) -> PLFunction {
        let mut ts: Vec<Rational> = self
            .breakpoints
            .iter()
            .chain(&other.breakpoints)
            .map(|p| p.0)
            .collect();
        ts.sort();
        ts.dedup();
        PLFunction::from_points(ts.into_iter().map(|t| (t, self.eval(t) + other.eval(t))).collect())
    }
}

impl Neg for &PLFunction {
    type Output = PLFunction;

    fn neg(self) -> PLFunction {
        self.map_values(|v| -v)
    }
}

impl fmt::Display for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (t, v)) in self.breakpoints.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "({t},{v})")?;
        }
        Ok(())
    }
}
