//! The region invariants `G₀` and `G_n`, and the formulas recovering ν⁺,
//! `V_k`, τ and `υ` from `G₀`.

use std::collections::BTreeSet;

use crate::complex::FormalComplex;
use crate::error::{Error, Result};
use crate::gf2::{enumerate_coset, kernel_basis, solve, BitVec};
use crate::pl::Rational;
use crate::region::{minimalize, ClosedRegion, Point};

use super::upsilon::ell;
use super::hom_generators;

/// One level of the tower: minimal regions of grading-`grading` chains and,
/// for each region, every chain realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub grading: i64,
    pub regions: Vec<ClosedRegion>,
    pub realizers: Vec<Vec<BitVec>>,
}

impl Level {
    fn from_chains(grading: i64, chains: Vec<(ClosedRegion, BitVec)>) -> Self {
        let regions = minimalize(chains.iter().map(|(r, _)| r));
        let realizers = regions
            .iter()
            .map(|r| {
                let set: BTreeSet<&BitVec> = chains.iter().filter(|(s, _)| s == r).map(|(_, v)| v).collect();
                set.into_iter().cloned().collect()
            })
            .collect();
        Level {
            grading,
            regions,
            realizers,
        }
    }
}

/// `G₀(C)`: the minimal regions of homological generators, sorted.
pub fn g0(c: &FormalComplex, cap: u64) -> Result<Vec<ClosedRegion>> {
    Ok(g0_level(c, cap)?.regions)
}

pub fn g0_level(c: &FormalComplex, cap: u64) -> Result<Level> {
    let chains = hom_generators(c, cap)?
        .into_iter()
        .map(|z| (z.region, z.vector))
        .collect();
    Ok(Level::from_chains(0, chains))
}

/// The next level from the realizers of regions `pair.0` and `pair.1` of `prev`.
///
/// Collects the regions of all chains `x` with `∂x = z₁ + z₂` for realizers
/// `z₁, z₂` of the two regions (above level 0 only pairs with `∂z₁ = ∂z₂`),
/// and keeps the minimal ones. The result may be empty.
pub fn g_next(c: &FormalComplex, prev: &Level, pair: (usize, usize), cap: u64) -> Result<Level> {
    let (a, b) = pair;
    let count = prev.regions.len();
    if a == b || a >= count || b >= count {
        return Err(Error::invalid(format!(
            "pair ({a},{b}) does not name two distinct regions of a level with {count}"
        )));
    }
    let n = prev.grading + 1;
    let dn = c.boundary_matrix(n);
    let below = c.boundary_matrix(prev.grading);
    let mut targets = BTreeSet::new();
    for z1 in &prev.realizers[a] {
        for z2 in &prev.realizers[b] {
            if prev.grading >= 1 && below.mul_vec(z1) != below.mul_vec(z2) {
                continue;
            }
            targets.insert(z1.sum(z2));
        }
    }
    let kernel = kernel_basis(&dn);
    let mut chains = Vec::new();
    for w in &targets {
        let Some(x0) = solve(&dn, w) else { continue };
        for x in enumerate_coset(&x0, &kernel, cap)? {
            if !x.is_zero() {
                chains.push((ClosedRegion::closure(c.chain_points(&x, n)), x));
            }
        }
    }
    Ok(Level::from_chains(n, chains))
}

/// Why [`g_tower`] stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    DepthReached,
    Singleton,
    MoreThanTwo,
    Empty,
}

impl std::fmt::Display for StopReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StopReason::DepthReached => "depth reached",
            StopReason::Singleton => "singleton level",
            StopReason::MoreThanTwo => "more than two regions",
            StopReason::Empty => "empty level",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GTower {
    pub levels: Vec<Level>,
    /// The pair of regions chosen at each level that was continued.
    pub pairs: Vec<(ClosedRegion, ClosedRegion)>,
    pub stop: StopReason,
}

/// `G₀, G₁, ...` up to level `depth`, continuing only from levels with
/// exactly two regions.
pub fn g_tower(c: &FormalComplex, depth: usize, cap: u64) -> Result<GTower> {
    let mut levels = vec![g0_level(c, cap)?];
    let mut pairs = Vec::new();
    let stop = loop {
        let last = levels.last().unwrap();
        match last.regions.len() {
            0 => break StopReason::Empty,
            1 => break StopReason::Singleton,
            2 => {}
            _ => break StopReason::MoreThanTwo,
        }
        if levels.len() > depth {
            break StopReason::DepthReached;
        }
        pairs.push((last.regions[0].clone(), last.regions[1].clone()));
        let next = g_next(c, last, (0, 1), cap)?;
        levels.push(next);
    };
    Ok(GTower { levels, pairs, stop })
}

/// `R^g = R_(-g,0) ∪ R_(-g+1,-1) ∪ ... ∪ R_(0,-g)`.
pub fn staircase_region(g: u32) -> ClosedRegion {
    let g = i64::from(g);
    ClosedRegion::closure((0..=g).map(|n| Point::new(-g + n, -n)))
}

fn max_corner(r: &ClosedRegion, f: impl Fn(Point) -> i64) -> i64 {
    r.corners().iter().map(|&p| f(p)).max().expect("regions are nonempty")
}

/// `min { m >= 0 : R ⊂ R_(0,m) for some R ∈ G₀ }`.
pub fn nu_plus_from_g0(g0: &[ClosedRegion]) -> Option<i64> {
    g0.iter()
        .filter(|r| max_corner(r, |p| p.i) <= 0)
        .map(|r| max_corner(r, |p| p.j).max(0))
        .min()
}

/// `min { m >= 0 : R ⊂ R_(m,k+m) for some R ∈ G₀ }`.
pub fn v_k_from_g0(g0: &[ClosedRegion], k: i64) -> Option<i64> {
    g0.iter()
        .map(|r| max_corner(r, |p| p.i.max(p.j - k)).max(0))
        .min()
}

/// `min { m : R ⊂ {i <= -1} ∪ R_(0,m) for some R ∈ G₀ }`.
pub fn tau_from_g0(g0: &[ClosedRegion]) -> Option<i64> {
    g0.iter()
        .filter(|r| max_corner(r, |p| p.i) <= 0)
        .filter_map(|r| r.corners().iter().find(|p| p.i == 0).map(|p| p.j))
        .min()
}

/// `min { s : R ⊂ {ℓ^t <= s} for some R ∈ G₀ }`.
pub fn upsilon_level_from_g0(g0: &[ClosedRegion], t: Rational) -> Option<Rational> {
    g0.iter()
        .map(|r| r.corners().iter().map(|&p| ell(t, p)).max().expect("regions are nonempty"))
        .min()
}
