//! Formal knot complexes `C = C̄ ⊗ Λ` over `Λ = F₂[U, U⁻¹]`, described by a
//! finite filtered basis and a GF(2) boundary matrix.
//!
//! U-powers in the boundary are never stored. For `D[l][k] = 1` the term of
//! `∂x_k` is `U^m x_l` with `m = (gr(x_l) - gr(x_k) + 1) / 2`, which is the
//! only power making `∂` drop the Maslov grading by one.

mod format;
mod homology;
mod validate;

pub use format::{parse, serialize};
pub use homology::{homology_dim, Window};
pub use validate::{
    default_span, is_stabilizer, structural_checks, validate, validate_with_span, Check,
    ValidationReport,
};

use std::collections::HashSet;

use crate::gf2::{BitMatrix, BitVec};
use crate::region::Point;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// Maslov grading.
    pub gr: i64,
    /// Algebraic filtration level.
    pub alg: i64,
    /// Alexander filtration level.
    pub alex: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, gr: i64, alg: i64, alex: i64) -> Self {
        Generator {
            name: name.into(),
            gr,
            alg,
            alex,
        }
    }

    pub fn point(&self) -> Point {
        Point::new(self.alg, self.alex)
    }
}

/// `U^upower · x_gen`, an element of the F₂-basis of `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeElement {
    pub gen: usize,
    pub upower: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalComplex {
    name: Option<String>,
    gens: Vec<Generator>,
    /// `boundary.get(l, k)` is set iff `x_l` (with its forced U-power) appears in `∂x_k`.
    boundary: BitMatrix,
}

impl FormalComplex {
    /// Builds a complex from generators and boundary terms `(source, target)`.
    ///
    /// A repeated term cancels, as it would over F₂. No axiom is checked here;
    /// see [`validate`].
    pub fn new(
        name: Option<String>,
        gens: Vec<Generator>,
        terms: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let r = gens.len();
        let mut boundary = BitMatrix::zeros(r, r);
        for (source, target) in terms {
            let v = boundary.get(target, source);
            boundary.set(target, source, !v);
        }
        FormalComplex {
            name,
            gens,
            boundary,
        }
    }

    pub(crate) fn from_matrix(name: Option<String>, gens: Vec<Generator>, boundary: BitMatrix) -> Self {
        assert_eq!(boundary.rows(), gens.len());
        assert_eq!(boundary.cols(), gens.len());
        FormalComplex {
            name,
            gens,
            boundary,
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// The Λ-rank `r`.
    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn boundary(&self) -> &BitMatrix {
        &self.boundary
    }

    /// Whether `x_target` appears in `∂x_source`.
    pub fn has_term(&self, source: usize, target: usize) -> bool {
        self.boundary.get(target, source)
    }

    /// Indices of the generators appearing in `∂x_source`.
    pub fn targets(&self, source: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&t| self.has_term(source, t)).collect()
    }

    /// The U-power carried by the term `x_target` in `∂x_source`.
    ///
    /// Only meaningful when the grading parity condition holds.
    pub fn term_upower(&self, source: usize, target: usize) -> i64 {
        (self.gens[target].gr - self.gens[source].gr + 1).div_euclid(2)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn point(&self, e: LatticeElement) -> Point {
        let g = &self.gens[e.gen];
        Point::new(g.alg - e.upower, g.alex - e.upower)
    }

    pub fn grading(&self, e: LatticeElement) -> i64 {
        self.gens[e.gen].gr - 2 * e.upower
    }

    /// The F₂-basis `{U^l x_k : gr(x_k) - 2l = n}` of `C_n`, ordered by `k`.
    pub fn graded_basis(&self, n: i64) -> Vec<LatticeElement> {
        self.gens
            .iter()
            .enumerate()
            .filter(|(_, g)| (g.gr - n).rem_euclid(2) == 0)
            .map(|(k, g)| LatticeElement {
                gen: k,
                upower: (g.gr - n) / 2,
            })
            .collect()
    }

    /// Support points of the grading-`n` basis, in basis order.
    pub fn graded_points(&self, n: i64) -> Vec<Point> {
        self.graded_basis(n).into_iter().map(|e| self.point(e)).collect()
    }

    /// Matrix of `∂ : C_n → C_{n-1}` on the lattice bases.
    pub fn boundary_matrix(&self, n: i64) -> BitMatrix {
        let cols = self.graded_basis(n);
        let rows = self.graded_basis(n - 1);
        let r: Vec<usize> = rows.iter().map(|e| e.gen).collect();
        let c: Vec<usize> = cols.iter().map(|e| e.gen).collect();
        self.boundary.submatrix(&r, &c)
    }

    /// The grading-`n` lattice elements whose support point satisfies `region`.
    ///
    /// `region` must describe a downward-closed subset of Z².
    pub fn region_slice(&self, region: impl Fn(Point) -> bool, n: i64) -> Vec<LatticeElement> {
        self.graded_basis(n)
            .into_iter()
            .filter(|&e| region(self.point(e)))
            .collect()
    }

    /// Positions within `graded_basis(n)` of [`region_slice`](Self::region_slice).
    pub fn region_slice_indices(&self, region: impl Fn(Point) -> bool, n: i64) -> Vec<usize> {
        self.graded_points(n)
            .into_iter()
            .enumerate()
            .filter(|(_, p)| region(*p))
            .map(|(i, _)| i)
            .collect()
    }

    /// Support points of a grading-`n` chain given over `graded_basis(n)`.
    pub fn chain_points(&self, chain: &BitVec, n: i64) -> Vec<Point> {
        let pts = self.graded_points(n);
        chain.ones().map(|i| pts[i]).collect()
    }

    pub fn degrees(&self) -> Degrees {
        let diffs = self.gens.iter().map(|g| g.alex - g.alg);
        let max = diffs.clone().max().unwrap_or(0);
        let min = diffs.min().unwrap_or(0);
        Degrees {
            max_degree: max,
            min_degree: min,
            genus: max.max(-min),
        }
    }

    /// Bounding box `(min, max)` of the generator support points.
    pub fn support_box(&self) -> (Point, Point) {
        let mut lo = Point::new(i64::MAX, i64::MAX);
        let mut hi = Point::new(i64::MIN, i64::MIN);
        for g in &self.gens {
            lo = Point::new(lo.i.min(g.alg), lo.j.min(g.alex));
            hi = Point::new(hi.i.max(g.alg), hi.j.max(g.alex));
        }
        if self.gens.is_empty() {
            (Point::new(0, 0), Point::new(0, 0))
        } else {
            (lo, hi)
        }
    }

    /// Tensor product over Λ with generators `x_k ⊗ x'_l` in lexicographic order.
    pub fn tensor(&self, other: &FormalComplex) -> FormalComplex {
        let (r, s) = (self.rank(), other.rank());
        let idx = |k: usize, l: usize| k * s + l;
        let mut gens = Vec::with_capacity(r * s);
        for a in &self.gens {
            for b in &other.gens {
                gens.push(Generator::new(
                    format!("{}__{}", a.name, b.name),
                    a.gr + b.gr,
                    a.alg + b.alg,
                    a.alex + b.alex,
                ));
            }
        }
        let mut boundary = BitMatrix::zeros(r * s, r * s);
        for k in 0..r {
            for l in 0..s {
                // ∂(x ⊗ y) = ∂x ⊗ y + x ⊗ ∂y; the two sums never share a term.
                for t in self.targets(k) {
                    boundary.set(idx(t, l), idx(k, l), true);
                }
                for t in other.targets(l) {
                    boundary.set(idx(k, t), idx(k, l), true);
                }
            }
        }
        ensure_unique_names(&mut gens, |n| format!("t{}_{}", n / s, n % s));
        let name = match (self.name(), other.name()) {
            (Some(a), Some(b)) => Some(format!("tensor({a},{b})")),
            _ => None,
        };
        FormalComplex::from_matrix(name, gens, boundary)
    }

    /// The dual complex `Hom_Λ(C, Λ)` on the dual basis.
    ///
    /// Gradings and both filtration levels are negated and the boundary
    /// matrix is transposed. Generator names toggle a `_dual` suffix, so
    /// `dual(dual(C)) == C`.
    pub fn dual(&self) -> FormalComplex {
        let gens = self
            .gens
            .iter()
            .map(|g| Generator::new(toggle_dual_suffix(&g.name), -g.gr, -g.alg, -g.alex))
            .collect();
        let name = self.name().map(toggle_dual_suffix);
        FormalComplex::from_matrix(name, gens, self.boundary.transpose())
    }

    /// Direct sum with block-diagonal boundary. Clashing names on the right
    /// receive a `_2` suffix.
    pub fn direct_sum(&self, other: &FormalComplex) -> FormalComplex {
        let r = self.rank();
        let n = r + other.rank();
        let taken: HashSet<&str> = self.gens.iter().map(|g| g.name.as_str()).collect();
        let mut gens = self.gens.clone();
        for g in &other.gens {
            let mut g = g.clone();
            while taken.contains(g.name.as_str()) {
                g.name.push_str("_2");
            }
            gens.push(g);
        }
        ensure_unique_names(&mut gens, |k| format!("g{k}"));
        let mut boundary = BitMatrix::zeros(n, n);
        for k in 0..self.rank() {
            for t in self.targets(k) {
                boundary.set(t, k, true);
            }
        }
        for k in 0..other.rank() {
            for t in other.targets(k) {
                boundary.set(r + t, r + k, true);
            }
        }
        let name = match (self.name(), other.name()) {
            (Some(a), Some(b)) => Some(format!("sum({a},{b})")),
            _ => None,
        };
        FormalComplex::from_matrix(name, gens, boundary)
    }

    /// Swaps the algebraic and Alexander filtrations.
    pub fn reverse(&self) -> FormalComplex {
        let gens = self
            .gens
            .iter()
            .map(|g| Generator::new(g.name.clone(), g.gr, g.alex, g.alg))
            .collect();
        FormalComplex::from_matrix(self.name.clone(), gens, self.boundary.clone())
    }

    /// Same complex with every generator renamed.
    pub fn renamed(&self, names: impl IntoIterator<Item = String>) -> FormalComplex {
        let mut out = self.clone();
        for (g, n) in out.gens.iter_mut().zip(names) {
            g.name = n;
        }
        out
    }

    /// Equality of gradings, filtration levels and boundary, ignoring names.
    pub fn same_structure(&self, other: &FormalComplex) -> bool {
        self.rank() == other.rank()
            && self.boundary == other.boundary
            && self
                .gens
                .iter()
                .zip(&other.gens)
                .all(|(a, b)| (a.gr, a.alg, a.alex) == (b.gr, b.alg, b.alex))
    }
}

/// Maximal and minimal values of `Alex - Alg` over the basis, and the genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degrees {
    pub max_degree: i64,
    pub min_degree: i64,
    pub genus: i64,
}

/// Odd counts of trailing `_dual` lose one, even counts gain one; an involution on names.
fn toggle_dual_suffix(name: &str) -> String {
    const SUFFIX: &str = "_dual";
    let mut base = name;
    let mut count = 0;
    while base.len() > SUFFIX.len() && base.ends_with(SUFFIX) {
        base = &base[..base.len() - SUFFIX.len()];
        count += 1;
    }
    if count % 2 == 1 {
        name[..name.len() - SUFFIX.len()].to_string()
    } else {
        format!("{name}{SUFFIX}")
    }
}

fn ensure_unique_names(gens: &mut [Generator], fallback: impl Fn(usize) -> String) {
    let mut seen = HashSet::new();
    if gens.iter().all(|g| seen.insert(g.name.clone())) {
        return;
    }
    for (n, g) in gens.iter_mut().enumerate() {
        g.name = fallback(n);
    }
}
