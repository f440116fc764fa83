//! Invariants computed from homological generators: grading-0 cycles whose
//! class generates `H₀(C) ≅ F₂`.
//!
//! ν⁺, `V_k`, τ and Υ only ask whether some subcomplex `C_R` contains a
//! homological generator. That is a rank question (the cycles of `C_R` are
//! not all boundaries of `C`), so those invariants never enumerate. `G₀`, the
//! `G_n` tower and Υ² need the generators themselves and enumerate the coset
//! `z₀ + ∂(C₁)` under a cap.

mod regions;
mod upsilon;

pub use regions::{
    g0, g0_level, g_next, g_tower, nu_plus_from_g0, staircase_region, tau_from_g0,
    upsilon_level_from_g0, v_k_from_g0, GTower, Level, StopReason,
};
pub use upsilon::{ell, upsilon, upsilon2, upsilon_at, upsilon_level, Upsilon2};

use std::fmt;

use crate::complex::FormalComplex;
use crate::error::{Error, Result};
use crate::gf2::{enumerate_coset, image_basis, kernel_basis, BitMatrix, BitVec, Echelon};
use crate::region::{ClosedRegion, Point};

/// Default budget for coset enumerations: 2²².
pub const DEFAULT_MAX_ENUM: u64 = 1 << 22;

/// A homological generator, as a vector over `graded_basis(0)`, with its chain region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomGenerator {
    pub vector: BitVec,
    pub region: ClosedRegion,
}

/// Grading-0 data shared by the membership tests.
pub(crate) struct Degree0 {
    pub points: Vec<Point>,
    d0: BitMatrix,
    pub boundaries: Echelon,
    pub boundary_basis: Vec<BitVec>,
}

impl Degree0 {
    pub fn new(c: &FormalComplex) -> Self {
        let points = c.graded_points(0);
        let boundary_basis = image_basis(&c.boundary_matrix(1));
        Degree0 {
            boundaries: Echelon::from_vectors(points.len(), &boundary_basis),
            d0: c.boundary_matrix(0),
            points,
            boundary_basis,
        }
    }

    /// Whether `C_R` contains a homological generator, `R` given by membership.
    pub fn contains(&self, region: impl Fn(Point) -> bool) -> bool {
        self.witness(region).is_some()
    }

    /// A homological generator supported in `R`, if there is one.
    pub fn witness(&self, region: impl Fn(Point) -> bool) -> Option<BitVec> {
        let n = self.points.len();
        let idx: Vec<usize> = (0..n).filter(|&k| region(self.points[k])).collect();
        let rows: Vec<usize> = (0..self.d0.rows()).collect();
        let sub = self.d0.submatrix(&rows, &idx);
        kernel_basis(&sub)
            .into_iter()
            .map(|v| v.scatter(&idx, n))
            .find(|z| !self.boundaries.contains(z))
    }

    fn max_j(&self) -> i64 {
        self.points.iter().map(|p| p.j).max().unwrap_or(0)
    }
}

/// Every homological generator `z₀ + b`, `b ∈ ∂(C₁)`.
pub fn hom_generators(c: &FormalComplex, cap: u64) -> Result<Vec<HomGenerator>> {
    let d = Degree0::new(c);
    let z0 = d.witness(|_| true).ok_or(Error::NoHomologicalGenerator)?;
    Ok(enumerate_coset(&z0, &d.boundary_basis, cap)?
        .map(|v| {
            let region = ClosedRegion::closure(c.chain_points(&v, 0));
            HomGenerator { vector: v, region }
        })
        .collect())
}

/// ν⁺: the least `m >= 0` such that `C_{i<=0, j<=m}` contains a homological generator.
pub fn nu_plus(c: &FormalComplex) -> Result<i64> {
    let d = Degree0::new(c);
    (0..=d.max_j().max(0))
        .find(|&m| d.contains(|p| p.i <= 0 && p.j <= m))
        .ok_or(Error::NoHomologicalGenerator)
}

/// ν⁺ of the dual complex.
pub fn nu_plus_dual(c: &FormalComplex) -> Result<i64> {
    nu_plus(&c.dual())
}

/// `V_k`: the least `m >= 0` with a homological generator in `R_(m, k+m)`.
pub fn v_k(c: &FormalComplex, k: i64) -> Result<i64> {
    let d = Degree0::new(c);
    let top = d.points.iter().map(|p| p.i.max(p.j - k)).max().unwrap_or(0);
    (0..=top.max(0))
        .find(|&m| d.contains(|p| p.is_below(Point::new(m, k + m))))
        .ok_or(Error::NoHomologicalGenerator)
}

/// τ: the least `m ∈ Z` with a homological generator in `{i <= -1} ∪ R_(0,m)`.
pub fn tau(c: &FormalComplex) -> Result<i64> {
    let d = Degree0::new(c);
    let on_axis: Vec<i64> = d.points.iter().filter(|p| p.i == 0).map(|p| p.j).collect();
    let lo = on_axis.iter().copied().min().unwrap_or(0);
    let hi = on_axis.iter().copied().max().unwrap_or(0);
    (lo..=hi)
        .find(|&m| d.contains(|p| p.i <= -1 || (p.i == 0 && p.j <= m)))
        .ok_or(Error::NoHomologicalGenerator)
}

pub fn genus(c: &FormalComplex) -> i64 {
    c.degrees().genus
}

/// Whether `C_R` contains a homological generator.
pub fn contains_hom_generator(c: &FormalComplex, region: &ClosedRegion) -> bool {
    Degree0::new(c).contains(|p| region.contains(p))
}

/// Position of `[C]` relative to `[C']` in the ν⁺-order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Equal,
    Less,
    Greater,
    Incomparable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Equal => "equal",
            Comparison::Less => "less",
            Comparison::Greater => "greater",
            Comparison::Incomparable => "incomparable",
        })
    }
}

/// Compares via `a = ν⁺(C ⊗ C'*)` and `b = ν⁺(C* ⊗ C')`; `[C] <= [C']` iff `a = 0`.
pub fn compare(c: &FormalComplex, other: &FormalComplex) -> Result<Comparison> {
    let a = nu_plus(&c.tensor(&other.dual()))?;
    let b = nu_plus(&c.dual().tensor(other))?;
    Ok(match (a == 0, b == 0) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Less,
        (false, true) => Comparison::Greater,
        (false, false) => Comparison::Incomparable,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `d(S³_{p/q}(K), i) - d(S³_{p/q}(O), i) = -2 max(V_⌊i/q⌋, V_⌊(p+q-1-i)/q⌋)`.
pub fn d_surgery_delta(c: &FormalComplex, p: u64, q: u64, i: u64) -> Result<i64> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("p and q must be positive"));
    }
    if gcd(p, q) != 1 {
        return Err(Error::invalid(format!("p = {p} and q = {q} are not coprime")));
    }
    if i >= p {
        return Err(Error::invalid(format!("i = {i} is outside [0, {}]", p - 1)));
    }
    let a = v_k(c, (i / q) as i64)?;
    let b = v_k(c, ((p + q - 1 - i) / q) as i64)?;
    Ok(-2 * a.max(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn generators_of_small_complexes() {
        let u = hom_generators(&catalog::unknot(), DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(u.len(), 1);
        assert_eq!(u[0].region, ClosedRegion::quadrant(0, 0));

        let mut t: Vec<_> = hom_generators(&catalog::trefoil(), DEFAULT_MAX_ENUM)
            .unwrap()
            .into_iter()
            .map(|z| z.region.to_string())
            .collect();
        t.sort();
        assert_eq!(t, ["{(0,1)}", "{(1,0)}"]);

        // x₀, x'₀, and each plus the boundary ∂(U y) = U x₂ + U x'₂.
        let c3 = hom_generators(&catalog::cn(3).unwrap(), DEFAULT_MAX_ENUM).unwrap();
        assert_eq!(c3.len(), 4);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let t = catalog::trefoil();
        let err = hom_generators(&t, 1).unwrap_err();
        assert!(matches!(err, Error::Enumeration(_)));
    }

    #[test]
    fn acyclic_input_has_no_generator() {
        let sq = catalog::square_stabilizer(Point::new(0, 0)).unwrap();
        assert!(matches!(nu_plus(&sq), Err(Error::NoHomologicalGenerator)));
        assert!(hom_generators(&sq, DEFAULT_MAX_ENUM).is_err());
    }

    #[test]
    fn trefoil_numbers() {
        let t = catalog::trefoil();
        assert_eq!(nu_plus(&t).unwrap(), 1);
        assert_eq!(nu_plus_dual(&t).unwrap(), 0);
        assert_eq!(v_k(&t, 0).unwrap(), 1);
        assert_eq!(v_k(&t, 1).unwrap(), 0);
        assert_eq!(tau(&t).unwrap(), 1);
        assert_eq!(genus(&t), 1);
        assert_eq!(d_surgery_delta(&t, 1, 1, 0).unwrap(), -2);
        assert_eq!(d_surgery_delta(&t, 3, 1, 1).unwrap(), 0);
    }

    #[test]
    fn staircase_tau() {
        for g in 1..=3 {
            let m = catalog::torus_staircase(g, true).unwrap();
            assert_eq!(tau(&m).unwrap(), -(g as i64));
            assert_eq!(tau(&m.dual()).unwrap(), g as i64);
            assert_eq!(nu_plus(&m).unwrap(), 0);
        }
        for n in 1..=4 {
            assert_eq!(tau(&catalog::cn(n).unwrap()).unwrap(), 1);
        }
    }

    #[test]
    fn surgery_argument_errors() {
        let u = catalog::unknot();
        assert!(d_surgery_delta(&u, 4, 2, 0).is_err());
        assert!(d_surgery_delta(&u, 3, 1, 3).is_err());
        assert!(d_surgery_delta(&u, 0, 1, 0).is_err());
        assert_eq!(d_surgery_delta(&u, 5, 3, 4).unwrap(), 0);
    }

    #[test]
    fn comparisons() {
        let t = catalog::trefoil();
        assert_eq!(compare(&t, &t).unwrap(), Comparison::Equal);
        assert_eq!(compare(&t, &catalog::cn(2).unwrap()).unwrap(), Comparison::Less);
        assert_eq!(compare(&catalog::cn(2).unwrap(), &t).unwrap(), Comparison::Greater);
        let fig8 = catalog::figure_eight_model();
        assert_eq!(compare(&fig8, &catalog::unknot()).unwrap(), Comparison::Equal);
        assert_eq!(compare(&t, &t.dual()).unwrap(), Comparison::Greater);
    }
}
