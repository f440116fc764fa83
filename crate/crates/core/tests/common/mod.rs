//! Brute-force reference implementations.
//!
//! Nothing here uses the crate's linear algebra: chains are `u64` bitmasks
//! over a lattice basis rebuilt from the generator data, boundaries are
//! recomputed term by term, and every question is answered by exhaustive
//! enumeration of chains.

#![allow(dead_code)]

pub mod suites;

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};

use formal_knot::{catalog, ClosedRegion, FormalComplex, Point, Rational};

pub struct Oracle {
    c: FormalComplex,
    columns: RefCell<HashMap<i64, Vec<u64>>>,
}

/// Grading-`n` lattice elements as `(generator, U-power, point)`.
fn basis(c: &FormalComplex, n: i64) -> Vec<(usize, i64, Point)> {
    c.generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| (g.gr - n) % 2 == 0)
        .map(|(k, g)| {
            let l = (g.gr - n) / 2;
            (k, l, Point::new(g.alg - l, g.alex - l))
        })
        .collect()
}

pub fn ell(t: Rational, p: Point) -> Rational {
    let two = Rational::from_integer(2);
    (Rational::from_integer(1) - t / two) * p.i + t / two * p.j
}

impl Oracle {
    pub fn new(c: &FormalComplex) -> Self {
        Oracle {
            c: c.clone(),
            columns: RefCell::new(HashMap::new()),
        }
    }

    pub fn points(&self, n: i64) -> Vec<Point> {
        basis(&self.c, n).into_iter().map(|(_, _, p)| p).collect()
    }

    pub fn dim(&self, n: i64) -> usize {
        basis(&self.c, n).len()
    }

    /// `∂` of each grading-`n` basis element, as grading-`(n-1)` masks.
    fn column_masks(&self, n: i64) -> Vec<u64> {
        let src = basis(&self.c, n);
        let dst = basis(&self.c, n - 1);
        src.iter()
            .map(|&(k, _, _)| {
                dst.iter()
                    .enumerate()
                    .filter(|&(_, &(t, _, _))| self.c.has_term(k, t))
                    .fold(0u64, |m, (b, _)| m ^ (1 << b))
            })
            .collect()
    }

    /// `∂` of a grading-`n` chain, as a grading-`(n-1)` mask.
    pub fn d(&self, n: i64, chain: u64) -> u64 {
        let mut cache = self.columns.borrow_mut();
        let cols = cache.entry(n).or_insert_with(|| self.column_masks(n));
        let mut out = 0u64;
        let mut rest = chain;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            out ^= cols[a];
            rest &= rest - 1;
        }
        out
    }

    /// Every grading-`n` chain.
    pub fn chains(&self, n: i64) -> impl Iterator<Item = u64> {
        let d = self.dim(n);
        assert!(d <= 24, "oracle refuses 2^{d} chains");
        0..(1u64 << d)
    }

    pub fn support(&self, n: i64, chain: u64) -> Vec<Point> {
        self.points(n)
            .into_iter()
            .enumerate()
            .filter(|(a, _)| chain >> a & 1 == 1)
            .map(|(_, p)| p)
            .collect()
    }

    pub fn boundaries(&self, n: i64) -> HashSet<u64> {
        self.chains(n + 1).map(|x| self.d(n + 1, x)).collect()
    }

    /// Homological generators with their support points.
    pub fn hom_generators(&self) -> Vec<(u64, Vec<Point>)> {
        let b = self.boundaries(0);
        self.chains(0)
            .filter(|&z| self.d(0, z) == 0 && !b.contains(&z))
            .map(|z| (z, self.support(0, z)))
            .collect()
    }

    pub fn nu_plus(&self) -> i64 {
        self.hom_generators()
            .iter()
            .filter(|(_, s)| s.iter().all(|p| p.i <= 0))
            .map(|(_, s)| s.iter().map(|p| p.j).max().unwrap().max(0))
            .min()
            .unwrap()
    }

    pub fn v_k(&self, k: i64) -> i64 {
        self.hom_generators()
            .iter()
            .map(|(_, s)| s.iter().map(|p| p.i.max(p.j - k)).max().unwrap().max(0))
            .min()
            .unwrap()
    }

    pub fn tau(&self) -> i64 {
        self.hom_generators()
            .iter()
            .filter(|(_, s)| s.iter().all(|p| p.i <= 0))
            .filter_map(|(_, s)| s.iter().filter(|p| p.i == 0).map(|p| p.j).max())
            .min()
            .unwrap()
    }

    pub fn upsilon_level(&self, t: Rational) -> Rational {
        self.hom_generators()
            .iter()
            .map(|(_, s)| s.iter().map(|&p| ell(t, p)).max().unwrap())
            .min()
            .unwrap()
    }

    /// Corner sets of the minimal generator regions, sorted.
    pub fn g0(&self) -> Vec<Vec<Point>> {
        minimal(self.hom_generators().into_iter().map(|(_, s)| s).collect())
    }

    /// Υ² by enumerating every grading-1 chain `x` with `∂x = z⁻ + z⁺`.
    /// `None` is infinity.
    pub fn upsilon2(&self, t: Rational, s: Rational) -> Option<Rational> {
        let gens = self.hom_generators();
        let f = |sup: &[Point], u: Rational| sup.iter().map(|&p| ell(u, p)).max().unwrap();
        let value: Vec<Rational> = gens.iter().map(|(_, sup)| f(sup, t)).collect();
        let upsilon = *value.iter().min().unwrap();
        // One-sided slopes from the active points.
        let slopes: Vec<(Rational, Rational)> = gens
            .iter()
            .zip(&value)
            .map(|((_, sup), &v)| {
                let active: Vec<Rational> = sup
                    .iter()
                    .filter(|&&p| ell(t, p) == v)
                    .map(|p| Rational::new(p.j - p.i, 2))
                    .collect();
                (*active.iter().min().unwrap(), *active.iter().max().unwrap())
            })
            .collect();
        let best_plus = (0..gens.len()).map(|k| (value[k], slopes[k].1)).min().unwrap();
        let best_minus = (0..gens.len()).map(|k| (value[k], -slopes[k].0)).min().unwrap();
        let plus: Vec<u64> = (0..gens.len()).filter(|&k| (value[k], slopes[k].1) == best_plus).map(|k| gens[k].0).collect();
        let minus: Vec<u64> = (0..gens.len()).filter(|&k| (value[k], -slopes[k].0) == best_minus).map(|k| gens[k].0).collect();
        if plus.iter().any(|z| minus.contains(z)) {
            return None;
        }
        let targets: HashSet<u64> = plus.iter().flat_map(|a| minus.iter().map(move |b| a ^ b)).collect();
        let mut best: Option<Option<Rational>> = None;
        for x in self.chains(1) {
            if !targets.contains(&self.d(1, x)) {
                continue;
            }
            // Least level of F^s that, together with F^t_υ, holds x; None is -∞.
            let need = self
                .support(1, x)
                .into_iter()
                .filter(|&p| ell(t, p) > upsilon)
                .map(|p| ell(s, p))
                .max();
            best = Some(match best {
                None => need,
                Some(b) => match (b, need) {
                    (None, _) | (_, None) => None,
                    (Some(a), Some(c)) => Some(a.min(c)),
                },
            });
        }
        let level = best.expect("z- + z+ always bounds")?;
        Some((level - upsilon) * Rational::from_integer(-2))
    }

    /// `G₀, G₁, ...` by enumerating all chains of each grading, continuing
    /// while a level has exactly two regions. At most `depth` steps.
    pub fn g_tower(&self, depth: usize) -> Vec<Vec<Vec<Point>>> {
        let gens = self.hom_generators();
        let mut chains: Vec<(u64, Vec<Point>)> = gens.into_iter().map(|(z, s)| (z, corners(&s))).collect();
        let mut levels = Vec::new();
        let mut n = 0;
        loop {
            let level = minimal(chains.iter().map(|(_, c)| c.clone()).collect());
            levels.push(level.clone());
            if level.len() != 2 || levels.len() > depth {
                return levels;
            }
            let real = |r: &Vec<Point>| -> Vec<u64> {
                chains.iter().filter(|(_, c)| c == r).map(|(z, _)| *z).collect()
            };
            let (r1, r2) = (real(&level[0]), real(&level[1]));
            let mut targets = HashSet::new();
            for &a in &r1 {
                for &b in &r2 {
                    if n == 0 || self.d(n, a) == self.d(n, b) {
                        targets.insert(a ^ b);
                    }
                }
            }
            n += 1;
            chains = self
                .chains(n)
                .filter(|&x| x != 0 && targets.contains(&self.d(n, x)))
                .map(|x| (x, corners(&self.support(n, x))))
                .collect();
        }
    }
}

/// Maximal points of a support set, sorted.
pub fn corners(points: &[Point]) -> Vec<Point> {
    let mut out: Vec<Point> = points
        .iter()
        .copied()
        .filter(|p| !points.iter().any(|q| q != p && p.is_below(*q)))
        .collect();
    out.sort();
    out.dedup();
    out
}

fn region_le(a: &[Point], b: &[Point]) -> bool {
    a.iter().all(|p| b.iter().any(|q| p.is_below(*q)))
}

/// Minimal regions among the closures of the given supports.
pub fn minimal(supports: Vec<Vec<Point>>) -> Vec<Vec<Point>> {
    let all: BTreeSet<Vec<Point>> = supports.iter().map(|s| corners(s)).collect();
    all.iter()
        .filter(|r| !all.iter().any(|s| s != *r && region_le(s, r)))
        .cloned()
        .collect()
}

pub fn as_corners(regions: &[ClosedRegion]) -> Vec<Vec<Point>> {
    let mut v: Vec<Vec<Point>> = regions.iter().map(|r| r.corners().to_vec()).collect();
    v.sort();
    v
}

/// Catalog complexes used throughout the integration tests.
pub fn complexes() -> Vec<FormalComplex> {
    catalog::all()
}

/// Small enough for the oracle: catalog complexes and the pairwise tensor products
/// whose grading-0 and grading-1 slices stay under 20 elements.
pub fn oracle_sized() -> Vec<FormalComplex> {
    let base = complexes();
    let mut out = base.clone();
    for (a, x) in base.iter().enumerate() {
        for y in &base[a..] {
            for c in [x.tensor(y), x.tensor(&y.dual())] {
                let o = Oracle::new(&c);
                if o.dim(0) <= 18 && o.dim(1) <= 18 && o.dim(-1) <= 18 {
                    out.push(c);
                }
            }
        }
    }
    out
}

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

pub fn sample_ts() -> [Rational; 4] {
    [q(1, 4), q(1, 2), q(1, 1), q(3, 2)]
}
