//! Dense linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words. Matrices are stored as a list of
//! packed rows. All eliminations pick the lowest-index pivot first, so kernel
//! bases and particular solutions are reproducible.

use std::fmt;

use crate::error::EnumerationLimit;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2) of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Standard basis vector `e_index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// In-place addition (XOR).
    pub fn add_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in vector addition");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn sum(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot product");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// True when every set bit of `self` is also set in `mask`.
    pub fn is_subset_of(&self, mask: &BitVec) -> bool {
        assert_eq!(self.len, mask.len);
        self.words
            .iter()
            .zip(&mask.words)
            .all(|(a, m)| a & !m == 0)
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    /// Restriction to the listed coordinates, in the given order.
    pub fn select(&self, indices: &[usize]) -> BitVec {
        let mut out = BitVec::zeros(indices.len());
        for (new, &old) in indices.iter().enumerate() {
            if self.get(old) {
                out.set(new, true);
            }
        }
        out
    }

    /// Inverse of [`select`](Self::select): places coordinates back into a vector of length `len`.
    pub fn scatter(&self, indices: &[usize], len: usize) -> BitVec {
        assert_eq!(self.len, indices.len());
        let mut out = BitVec::zeros(len);
        for i in self.ones() {
            out.set(indices[i], true);
        }
        out
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}

/// A dense `rows × cols` matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix literal");
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, x & 1 == 1);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for r in col.ones() {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = BitVec::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                out.set(r, true);
            }
        }
        out
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for k in row.ones() {
                out.data[r].add_assign(&other.data[k]);
            }
        }
        out
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), cols.len());
        for (nr, &r) in rows.iter().enumerate() {
            out.data[nr] = self.data[r].select(cols);
        }
        out
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for c in 0..self.cols {
            if next_row == self.rows {
                break;
            }
            let Some(p) = (next_row..self.rows).find(|&r| m.data[r].get(c)) else {
                continue;
            };
            m.data.swap(next_row, p);
            let pivot_row = m.data[next_row].clone();
            for r in 0..self.rows {
                if r != next_row && m.data[r].get(c) {
                    m.data[r].add_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next_row += 1;
        }
        (m, pivots)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    m.rref().1.len()
}

/// Returns some `x` with `m x = b`, or `None` when `b` is outside the column space.
///
/// Free variables are set to zero.
pub fn solve(m: &BitMatrix, b: &BitVec) -> Option<BitVec> {
    assert_eq!(
        b.len(),
        m.rows(),
        "right-hand side has length {} but matrix has {} rows",
        b.len(),
        m.rows()
    );
    let mut aug = BitMatrix::zeros(m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in m.data[r].ones() {
            aug.set(r, c, true);
        }
        aug.set(r, m.cols, b.get(r));
    }
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = BitVec::zeros(m.cols);
    for (row, &c) in pivots.iter().enumerate() {
        if red.get(row, m.cols) {
            x.set(c, true);
        }
    }
    Some(x)
}

/// A basis of `{x : m x = 0}`, one vector per free column in ascending order.
pub fn kernel_basis(m: &BitMatrix) -> Vec<BitVec> {
    let (red, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVec::unit(m.cols, f);
            for (row, &p) in pivots.iter().enumerate() {
                if red.get(row, f) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

/// A basis of the column space, taken from the original pivot columns.
pub fn image_basis(m: &BitMatrix) -> Vec<BitVec> {
    let (_, pivots) = m.rref();
    pivots.into_iter().map(|c| m.column(c)).collect()
}

/// Incrementally maintained echelon basis of a subspace, for fast span membership.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    // Each row has a distinct leading index, which no other row contains.
    rows: Vec<(usize, BitVec)>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon {
            len,
            rows: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(len: usize, vs: impl IntoIterator<Item = &'a BitVec>) -> Self {
        let mut e = Self::new(len);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the span; zero iff `v` was in the span.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.len);
        let mut r = v.clone();
        for (lead, row) in &self.rows {
            if r.get(*lead) {
                r.add_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let r = self.reduce(&v);
        let Some(lead) = r.first_one() else {
            return false;
        };
        for (_, row) in self.rows.iter_mut() {
            if row.get(lead) {
                row.add_assign(&r);
            }
        }
        self.rows.push((lead, r));
        true
    }
}

/// Iterates over the affine coset `x0 + span(basis)` in Gray-code order.
///
/// Every element is yielded exactly once when `basis` is linearly independent.
pub fn enumerate_coset(
    x0: &BitVec,
    basis: &[BitVec],
    cap: u64,
) -> Result<CosetIter, EnumerationLimit> {
    let size = coset_size(basis.len(), cap)?;
    for b in basis {
        assert_eq!(b.len(), x0.len(), "coset basis length mismatch");
    }
    Ok(CosetIter {
        current: x0.clone(),
        basis: basis.to_vec(),
        step: 0,
        size,
    })
}

/// `2^dim`, or an error when it exceeds `cap`.
pub fn coset_size(dim: usize, cap: u64) -> Result<u64, EnumerationLimit> {
    if dim >= 64 || (1u64 << dim) > cap {
        return Err(EnumerationLimit {
            dimension: dim,
            cap,
        });
    }
    Ok(1u64 << dim)
}

pub struct CosetIter {
    current: BitVec,
    basis: Vec<BitVec>,
    step: u64,
    size: u64,
}

impl Iterator for CosetIter {
    type Item = BitVec;

    fn next(&mut self) -> Option<BitVec> {
        if self.step >= self.size {
            return None;
        }
        if self.step > 0 {
            let flip = self.step.trailing_zeros() as usize;
            self.current.add_assign(&self.basis[flip]);
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.size - self.step) as usize;
        (rest, Some(rest))
    }
}
