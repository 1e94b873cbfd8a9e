//! Dense linear algebra over a prime field `F_p`.
//!
//! Matrices are row-major with entries stored as residues in `[0, p)`.
//! Column vectors are the convention everywhere: a module map `M -> N`
//! is a `dim N x dim M` matrix and composition is matrix product.

use rand::Rng;
use serde::{Deserialize, Serialize};

/// Default session prime.
pub const DEFAULT_PRIME: u32 = 1009;

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Multiplicative inverse of a nonzero residue.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, p as u64 - 2, p)
}

/// Reduce a signed integer into `[0, p)`.
pub fn residue(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Build from residues, reducing every entry mod `p`.
    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(rows * cols, data.len(), "shape does not match entry count");
        let data = data.into_iter().map(|x| x % p).collect();
        Matrix { p, rows, cols, data }
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| residue(v, p)));
        }
        Matrix { p, rows: r, cols: c, data }
    }

    /// A single column vector.
    pub fn column(p: u32, v: &[u32]) -> Self {
        Self::from_vec(p, v.len(), 1, v.to_vec())
    }

    pub fn random<R: Rng>(p: u32, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
        Matrix { p, rows, cols, data }
    }

    #[inline]
    pub fn prime(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn into_data(self) -> Vec<u32> {
        self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = self.p as u64;
        let n = other.cols;
        let mut out = vec![0u64; self.rows * n];
        // accumulate without reduction while it cannot overflow
        let limit = u64::MAX / ((p - 1).max(1) * (p - 1).max(1)) - 1;
        for r in 0..self.rows {
            let acc = &mut out[r * n..(r + 1) * n];
            let mut pending = 0u64;
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * n..(k + 1) * n];
                for (o, &b) in acc.iter_mut().zip(orow) {
                    *o += a * b as u64;
                }
                pending += 1;
                if pending >= limit {
                    for o in acc.iter_mut() {
                        *o %= p;
                    }
                    pending = 0;
                }
            }
        }
        Matrix { p: self.p, rows: self.rows, cols: n, data: out.into_iter().map(|x| (x % p) as u32).collect() }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut s = 0u64;
                for (a, b) in self.row(r).iter().zip(v) {
                    s = (s + *a as u64 * *b as u64) % p;
                }
                s as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| add_mod(a, b, self.p)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| sub_mod(a, b, self.p)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let data = self.data.iter().map(|&a| mul_mod(a, s, self.p)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, other: &Matrix, s: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let p = self.p;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = add_mod(*a, mul_mod(b, s, p), p);
        }
    }

    /// Linear combination `sum coeffs[i] * mats[i]`.
    pub fn combination(p: u32, rows: usize, cols: usize, mats: &[Matrix], coeffs: &[u32]) -> Matrix {
        let mut out = Matrix::zeros(p, rows, cols);
        for (m, &c) in mats.iter().zip(coeffs) {
            out.add_scaled(m, c);
        }
        out
    }

    pub fn hstack(p: u32, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for r in 0..rows {
                out.data[r * cols + off..r * cols + off + b.cols].copy_from_slice(b.row(r));
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(p: u32, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
        }
        Matrix { p, rows, cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(p: u32, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            out.set_block(ro, co, b);
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for r in 0..b.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + b.cols].copy_from_slice(b.row(r));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.p, rows, cols);
        for r in 0..rows {
            let src = (r0 + r) * self.cols + c0;
            out.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { p: self.p, rows: rows.len(), cols: self.cols, data }
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |s, i| add_mod(s, self.get(i, i), self.p))
    }

    /// Row-reduced echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for k in 0..cols {
                    self.data.swap(piv * cols + k, r * cols + k);
                }
            }
            let inv = inv_mod(self.data[r * cols + c], p);
            for k in c..cols {
                let v = &mut self.data[r * cols + k];
                *v = mul_mod(*v, inv, p);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let f = row[c];
                if f == 0 {
                    return;
                }
                let nf = (p - f) as u64;
                for k in c..cols {
                    if prow[k] != 0 {
                        row[k] = ((row[k] as u64 + nf * prow[k] as u64) % p as u64) as u32;
                    }
                }
            };
            for row in before.chunks_mut(cols) {
                eliminate(row);
            }
            for row in after.chunks_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols * 2 {
            // cheaper on the transpose when tall
            return self.transpose().rref().rank;
        }
        self.rref().rank
    }

    /// Basis of the right null space `{x : self * x = 0}`, returned as vectors.
    ///
    /// The basis vector attached to free column `f` has a 1 at `f` and zeros
    /// at every other free column.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let Rref { reduced, pivots, .. } = self.rref();
        kernel_from_rref(&reduced, &pivots)
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        let k = self.kernel();
        columns_to_matrix(self.p, self.cols, &k)
    }

    /// Solve `self * X = rhs`; returns a particular solution if consistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "rhs row count mismatch");
        let aug = Matrix::hstack(self.p, self.rows, &[self, rhs]);
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.p, self.cols, rhs.cols);
        for (i, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[c * rhs.cols + j] = reduced.get(i, self.cols + j);
            }
        }
        Some(x)
    }

    /// Particular solution plus kernel basis, as a single call.
    pub fn solve_and_kernel(&self, rhs: Option<&Matrix>) -> (Option<Matrix>, Vec<Vec<u32>>) {
        let particular = rhs.and_then(|r| self.solve(r));
        (particular, self.kernel())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.solve(&Matrix::identity(self.p, self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of the column space, as columns of a matrix (pivot columns of self).
    pub fn column_space(&self) -> Matrix {
        let r = self.rref();
        self.select_columns(&r.pivots)
    }

    /// Rows forming a basis of the left null space: `Q * self = 0`, Q full rank.
    pub fn cokernel_projection(&self) -> Matrix {
        let k = self.transpose().kernel();
        rows_to_matrix(self.p, self.rows, &k)
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.rows == 0 || self.pow(self.rows as u64).is_zero()
    }

    /// Entries as signed integers, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

pub(crate) fn kernel_from_rref(reduced: &Matrix, pivots: &[usize]) -> Vec<Vec<u32>> {
    let p = reduced.p;
    let cols = reduced.cols;
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[f] = 1 % p;
        for (i, &c) in pivots.iter().enumerate() {
            let a = reduced.get(i, f);
            if a != 0 {
                v[c] = p - a;
            }
        }
        basis.push(v);
    }
    basis
}

pub fn columns_to_matrix(p: u32, len: usize, cols: &[Vec<u32>]) -> Matrix {
    let mut m = Matrix::zeros(p, len, cols.len());
    for (j, v) in cols.iter().enumerate() {
        for (i, &x) in v.iter().enumerate() {
            m.data[i * cols.len() + j] = x;
        }
    }
    m
}

pub fn rows_to_matrix(p: u32, len: usize, rows: &[Vec<u32>]) -> Matrix {
    let mut data = Vec::with_capacity(rows.len() * len);
    for r in rows {
        assert_eq!(r.len(), len);
        data.extend_from_slice(r);
    }
    Matrix { p, rows: rows.len(), cols: len, data }
}

/// Rank of a family of vectors of a common length.
pub fn rank_of(p: u32, len: usize, vectors: &[Vec<u32>]) -> usize {
    if vectors.is_empty() || len == 0 {
        return 0;
    }
    rows_to_matrix(p, len, vectors).rank()
}

/// Coordinates with respect to a fixed basis of a subspace of `F_p^n`.
///
/// Picks `k` coordinate positions on which the basis restricts to an
/// invertible `k x k` block; coordinates of a vector in the span are then
/// read off those positions and multiplied by the stored inverse.
#[derive(Clone, Debug)]
pub struct CoordSystem {
    p: u32,
    len: usize,
    basis: Vec<Vec<u32>>,
    positions: Vec<usize>,
    inverse: Matrix,
}

impl CoordSystem {
    /// `basis` must be linearly independent.
    pub fn new(p: u32, len: usize, basis: Vec<Vec<u32>>) -> Self {
        let k = basis.len();
        if k == 0 {
            return CoordSystem { p, len, basis, positions: vec![], inverse: Matrix::zeros(p, 0, 0) };
        }
        let m = rows_to_matrix(p, len, &basis);
        let r = m.rref();
        assert_eq!(r.rank, k, "coordinate basis is not independent");
        let block = m.select_columns(&r.pivots); // k x k, rows = basis vectors
        let inverse = block.inverse().expect("pivot block invertible");
        CoordSystem { p, len, basis, positions: r.pivots, inverse }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Coordinates of `v`, assuming `v` lies in the span.
    pub fn coords(&self, v: &[u32]) -> Vec<u32> {
        let k = self.basis.len();
        let p = self.p as u64;
        // v = c * B  =>  v[P] = c * B[P]  =>  c = v[P] * B[P]^{-1}
        let mut out = vec![0u32; k];
        for (i, &pos) in self.positions.iter().enumerate() {
            let a = v[pos] as u64;
            if a == 0 {
                continue;
            }
            let row = self.inverse.row(i);
            for j in 0..k {
                out[j] = ((out[j] as u64 + a * row[j] as u64) % p) as u32;
            }
        }
        out
    }

    /// Coordinates if `v` lies in the span, otherwise `None`.
    pub fn try_coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c = self.coords(v);
        (self.combine(&c) == v).then_some(c)
    }

    pub fn combine(&self, c: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut v = vec![0u64; self.len];
        for (b, &x) in self.basis.iter().zip(c) {
            if x == 0 {
                continue;
            }
            for (o, &y) in v.iter_mut().zip(b) {
                *o = (*o + x as u64 * y as u64) % p;
            }
        }
        v.into_iter().map(|x| x as u32).collect()
    }
}

/// Coordinates in a quotient space `span(sub + reps) / span(sub)`.
#[derive(Clone, Debug)]
pub struct QuotientCoords {
    sub_dim: usize,
    system: CoordSystem,
}

impl QuotientCoords {
    /// Extend an (arbitrary) spanning set of the subspace by vectors from
    /// `candidates` until the whole span is reached; the added vectors are
    /// the quotient representatives.
    pub fn new(p: u32, len: usize, sub_span: &[Vec<u32>], candidates: &[Vec<u32>]) -> Self {
        let mut basis: Vec<Vec<u32>> = Vec::new();
        let mut ech = Echelon::new(p, len);
        for v in sub_span {
            if ech.insert(v) {
                basis.push(v.clone());
            }
        }
        let sub_dim = basis.len();
        for v in candidates {
            if ech.insert(v) {
                basis.push(v.clone());
            }
        }
        QuotientCoords { sub_dim, system: CoordSystem::new(p, len, basis) }
    }

    pub fn dim(&self) -> usize {
        self.system.dim() - self.sub_dim
    }

    pub fn sub_dim(&self) -> usize {
        self.sub_dim
    }

    pub fn representatives(&self) -> &[Vec<u32>] {
        &self.system.basis()[self.sub_dim..]
    }

    pub fn coords(&self, v: &[u32]) -> Vec<u32> {
        self.system.coords(v)[self.sub_dim..].to_vec()
    }

    pub fn try_coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        self.system.try_coords(v).map(|c| c[self.sub_dim..].to_vec())
    }

    pub fn is_in_sub(&self, v: &[u32]) -> bool {
        self.coords(v).iter().all(|&x| x == 0)
    }
}

/// Incremental echelon basis for membership and rank queries.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u32,
    len: usize,
    // rows normalized so that rows[i][pivots[i]] == 1
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: u32, len: usize) -> Self {
        Echelon { p, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    fn reduce(&self, v: &mut [u32]) {
        let p = self.p as u64;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f == 0 {
                continue;
            }
            let nf = p - f as u64;
            for (x, &y) in v.iter_mut().zip(row) {
                if y != 0 {
                    *x = ((*x as u64 + nf * y as u64) % p) as u32;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Insert `v`; returns true if it increased the rank.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.len);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(w[c], self.p);
        for x in w.iter_mut() {
            *x = mul_mod(*x, inv, self.p);
        }
        self.rows.push(w);
        self.pivots.push(c);
        true
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    /// Basis of the vectors orthogonal to every inserted row, i.e. the
    /// solution space of the inserted equations.
    pub fn null_space(&self) -> Vec<Vec<u32>> {
        if self.rows.is_empty() {
            return (0..self.len)
                .map(|i| {
                    let mut v = vec![0; self.len];
                    v[i] = 1;
                    v
                })
                .collect();
        }
        rows_to_matrix(self.p, self.len, &self.rows).kernel()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_and_zero() {
        let i = Matrix::identity(7, 3);
        let r = i.rref();
        assert_eq!(r.reduced, i);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        let z = Matrix::zeros(7, 2, 4);
        let r = z.rref();
        assert!(r.reduced.is_zero());
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one_over_f5() {
        let m = Matrix::from_rows(5, &[vec![2, 4], vec![1, 2]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        // hand elimination: first row scaled by 2^{-1}=3 gives (1,2)
        assert_eq!(r.reduced.row(0), &[1, 2]);
        assert_eq!(r.reduced.row(1), &[0, 0]);
    }

    #[test]
    fn solve_examples() {
        let i = Matrix::identity(5, 2);
        let v = Matrix::column(5, &[3, 1]);
        let (x, k) = i.solve_and_kernel(Some(&v));
        assert_eq!(x.unwrap(), v);
        assert!(k.is_empty());

        let z = Matrix::zeros(5, 2, 3);
        let (_, k) = z.solve_and_kernel(Some(&Matrix::zeros(5, 2, 1)));
        assert_eq!(k.len(), 3);

        // x + y = 2, y = 3  =>  x = -1 = 4
        let m = Matrix::from_rows(5, &[vec![1, 1], vec![0, 1]]);
        let x = m.solve(&Matrix::column(5, &[2, 3])).unwrap();
        assert_eq!(x.data(), &[4, 3]);
    }

    #[test]
    fn inconsistent_system_has_no_particular_solution() {
        let m = Matrix::from_rows(7, &[vec![1, 1], vec![2, 2]]);
        assert!(m.solve(&Matrix::column(7, &[1, 0])).is_none());
    }

    #[test]
    fn coord_system_roundtrip() {
        let basis = vec![vec![1, 2, 0, 3], vec![0, 1, 1, 1]];
        let cs = CoordSystem::new(11, 4, basis);
        let v = cs.combine(&[4, 9]);
        assert_eq!(cs.coords(&v), vec![4, 9]);
        assert!(cs.try_coords(&[1, 0, 0, 0]).is_none());
    }

    #[test]
    fn quotient_coords_ignore_subspace() {
        let sub = vec![vec![1, 0, 0]];
        let cand = vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]];
        let q = QuotientCoords::new(13, 3, &sub, &cand);
        assert_eq!(q.dim(), 2);
        assert!(q.is_in_sub(&[5, 0, 0]));
        assert_eq!(q.coords(&[7, 1, 0]), vec![1, 0]);
    }

    #[test]
    fn inverse_and_pow() {
        let m = Matrix::from_rows(1009, &[vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(1009, 2));
        let n = Matrix::from_rows(1009, &[vec![0, 1], vec![0, 0]]);
        assert!(n.is_nilpotent());
        assert!(!m.is_nilpotent());
    }
}
