use crate::gf2::rank;
use crate::region::Point;

use super::FormalComplex;

/// An inclusive range of Maslov gradings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    pub fn gradings(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    /// `[min gr - 2·span, max gr + 2·span]` over the generators of `c`.
    pub fn around(c: &FormalComplex, span: i64) -> Self {
        let gr = c.generators().iter().map(|g| g.gr);
        let lo = gr.clone().min().unwrap_or(0);
        let hi = gr.max().unwrap_or(0);
        Window::new(lo - 2 * span, hi + 2 * span)
    }
}

fn selected(c: &FormalComplex, n: i64, keep: &impl Fn(Point) -> bool) -> Vec<usize> {
    c.region_slice_indices(keep, n)
}

/// `dim H_n(A / B)` where `A` and `B ⊂ A` are the subcomplexes spanned by
/// lattice elements whose support point satisfies `sub` and `kill`.
///
/// Both predicates must describe downward-closed subsets of Z².
pub fn homology_dim(
    c: &FormalComplex,
    n: i64,
    sub: impl Fn(Point) -> bool,
    kill: impl Fn(Point) -> bool,
) -> usize {
    let keep = |p: Point| sub(p) && !kill(p);
    let here = selected(c, n, &keep);
    let below = selected(c, n - 1, &keep);
    let above = selected(c, n + 1, &keep);
    let out = rank(&c.boundary_matrix(n).submatrix(&below, &here));
    let inc = rank(&c.boundary_matrix(n + 1).submatrix(&here, &above));
    here.len() - out - inc
}
