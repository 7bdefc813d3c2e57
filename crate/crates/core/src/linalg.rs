//! Dense exact linear algebra over a prime field `F_p`.
//!
//! Elements are stored as residues `0 <= x < p` in `u32`; every matrix
//! carries its modulus so mixed-field arithmetic is caught early.

use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 1009;

/// Returns `true` when `p` is prime.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p as u64 {
        if (p as u64).is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

#[inline]
pub fn add(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

#[inline]
pub fn sub(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub fn mul(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn neg(p: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow(p: u32, mut a: u32, mut e: u64) -> u32 {
    let mut r = 1u32 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(p, r, a);
        }
        a = mul(p, a, a);
        e >>= 1;
    }
    r
}

/// Multiplicative inverse; panics on zero.
pub fn inv(p: u32, a: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero in F_{p}");
    pow(p, a, p as u64 - 2)
}

/// Reduces a signed integer into `F_p`.
pub fn from_i64(p: u32, v: i64) -> u32 {
    v.rem_euclid(p as i64) as u32
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}; {}x{}]", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        let data = data.into_iter().map(|x| x % p).collect();
        Matrix { p, rows, cols, data }
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, from_i64(p, v));
            }
        }
        m
    }

    /// Single column matrix from a vector.
    pub fn column(p: u32, v: &[u32]) -> Self {
        Matrix::from_vec(p, v.len(), 1, v.to_vec())
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(p: u32, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(p, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
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

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
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
        assert_eq!(self.p, other.p, "field mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for c in 0..other.cols {
                out.data[r * other.cols + c] = acc[c] as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                (row.iter().zip(v).fold(0u64, |s, (&a, &b)| (s + a as u64 * b as u64) % p)) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| add(p, a, b)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in difference");
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| sub(p, a, b)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let p = self.p;
        let data = self.data.iter().map(|&a| mul(p, a, s)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.p - 1)
    }

    pub fn trace(&self) -> u32 {
        (0..self.rows.min(self.cols)).fold(0, |s, i| add(self.p, s, self.get(i, i)))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.p, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.data[r * m.cols..r * m.cols + self.cols].copy_from_slice(self.row(r));
            m.data[r * m.cols + self.cols..(r + 1) * m.cols].copy_from_slice(other.row(r));
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, other);
        m
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "paste out of range");
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zeros(self.p, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.data[i * m.cols + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.p, idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            m.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(self.row(r));
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..m.cols {
                    m.data.swap(piv * m.cols + c, row * m.cols + c);
                }
            }
            let iv = inv(p, m.get(row, col));
            for c in col..m.cols {
                let v = mul(p, m.get(row, c), iv);
                m.data[row * m.cols + c] = v;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col);
                if f == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = sub(p, m.get(r, c), mul(p, f, m.get(row, c)));
                    m.data[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().1.len()
    }

    /// Basis of the right kernel as columns, in reduced-echelon canonical form.
    pub fn null_space(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.p, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            out.set(f, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, j, neg(self.p, r.get(i, f)));
            }
        }
        out
    }

    /// Basis of the column space, chosen among the original columns.
    pub fn column_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Solves `self * x = b`. Free variables are set to zero.
    pub fn solve_right(&self, b: &Matrix) -> Result<Matrix> {
        assert_eq!(self.rows, b.rows, "solve_right: row mismatch");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Matrix::zeros(self.p, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(i, self.cols + j));
            }
        }
        Ok(x)
    }

    pub fn solve_vec(&self, b: &[u32]) -> Result<Vec<u32>> {
        Ok(self.solve_right(&Matrix::column(self.p, b))?.col(0))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NoSolution);
        }
        let x = self.solve_right(&Matrix::identity(self.p, self.rows))?;
        if self.rank() != self.rows {
            return Err(Error::NoSolution);
        }
        Ok(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Rows spanning the left kernel: `q * self = 0`, `q` of full row rank.
    pub fn left_null_space(&self) -> Matrix {
        self.transpose().null_space().transpose()
    }
}

/// Whether `v` lies in the column span of `m`.
pub fn in_span(m: &Matrix, v: &[u32]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    m.solve_vec(v).is_ok()
}

/// Extends an independent set of columns (`basis`) to a basis of `F_p^n` with
/// standard vectors; returns only the added columns.
pub fn complement_columns(p: u32, n: usize, basis: &Matrix) -> Matrix {
    let mut current = basis.clone();
    let mut added = Vec::new();
    let mut rank = current.rank();
    for i in 0..n {
        if rank == n {
            break;
        }
        let mut e = vec![0u32; n];
        e[i] = 1;
        let cand = current.hstack(&Matrix::column(p, &e));
        let r = cand.rank();
        if r > rank {
            current = cand;
            rank = r;
            added.push(e);
        }
    }
    Matrix::from_columns(p, n, &added)
}

/// Independent subset of `cols` (greedy, in order).
pub fn independent_subset(p: u32, n: usize, cols: &[Vec<u32>]) -> Vec<usize> {
    let m = Matrix::from_columns(p, n, cols);
    m.rref().1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(7, 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(7, 3).rank(), 3);
        assert_eq!(Matrix::from_rows(7, &[vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_rows(7, &[vec![3, 1], vec![5, 6]]);
        assert_eq!(Matrix::identity(7, 2).solve_right(&b).unwrap(), b);
        let z = Matrix::zeros(7, 2, 2);
        assert!(z.solve_right(&z).unwrap().is_zero());
        let a = Matrix::from_rows(7, &[vec![1, 1], vec![0, 0]]);
        let b = Matrix::from_rows(7, &[vec![0], vec![1]]);
        assert!(matches!(a.solve_right(&b), Err(Error::NoSolution)));
    }

    #[test]
    fn null_space_examples() {
        assert_eq!(Matrix::identity(5, 4).null_space().cols(), 0);
        assert_eq!(Matrix::zeros(5, 3, 3).null_space(), Matrix::identity(5, 3));
        let m = Matrix::from_rows(5, &[vec![1, 2, 3]]);
        let k = m.null_space();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(11, &[vec![2, 3], vec![1, 4]]);
        let i = m.inverse().unwrap();
        assert_eq!(m.mul(&i), Matrix::identity(11, 2));
        assert!(Matrix::from_rows(11, &[vec![1, 2], vec![2, 4]]).inverse().is_err());
    }

    #[test]
    fn primes() {
        assert!(is_prime(1009));
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(1001));
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn matrix() -> impl Strategy<Value = Matrix> {
            (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
                proptest::collection::vec(0u32..13, r * c)
                    .prop_map(move |d| Matrix::from_vec(13, r, c, d))
            })
        }

        proptest! {
            #[test]
            fn rank_nullity(m in matrix()) {
                prop_assert_eq!(m.rank() + m.null_space().cols(), m.cols());
                prop_assert!(m.mul(&m.null_space()).is_zero());
            }

            #[test]
            fn solve_is_exact(m in matrix(), seed in proptest::collection::vec(0u32..13, 6)) {
                let x: Vec<u32> = seed.iter().cycle().take(m.cols()).cloned().collect();
                let b = m.mul_vec(&x);
                let sol = m.solve_vec(&b).unwrap();
                prop_assert_eq!(m.mul_vec(&sol), b);
                prop_assert_eq!(m.solve_vec(&m.mul_vec(&x)).unwrap(), sol);
            }
        }
    }
}
