//! Bounded complexes of projectives and the homotopy category `K^b(proj A)`.
//!
//! A map `P(c) -> P(r)` is right multiplication by an element of
//! `e_c A e_r` (paths from `r` to `c`); an [`AlgMatrix`] collects such
//! entries with rows indexed by target summands and columns by source
//! summands.

pub mod decompose;
pub mod hom;
pub mod iso;
pub mod minimize;
pub mod mutation;

use crate::algebra::{Algebra, Elem};
use crate::complex::ModComplex;
use crate::linalg::Matrix;
use crate::repcat::{self, ModuleMap, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Elem>,
}

impl AlgMatrix {
    pub fn zeros(alg: &Algebra, rows: usize, cols: usize) -> Self {
        AlgMatrix { rows, cols, entries: vec![alg.zero(); rows * cols] }
    }

    pub fn identity(alg: &Algebra, verts: &[usize]) -> Self {
        let mut m = AlgMatrix::zeros(alg, verts.len(), verts.len());
        for (i, &v) in verts.iter().enumerate() {
            m.entries[i * verts.len() + i] = alg.unit_elem(alg.idempotent(v));
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Algebra::is_zero)
    }

    /// `self ∘ first`.
    pub fn after(&self, alg: &Algebra, first: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.cols, first.rows, "composition shape mismatch");
        let mut out = AlgMatrix::zeros(alg, self.rows, first.cols);
        for r in 0..self.rows {
            for c in 0..first.cols {
                let mut acc = alg.zero();
                for m in 0..self.cols {
                    let (x, y) = (first.get(m, c), self.get(r, m));
                    if Algebra::is_zero(x) || Algebra::is_zero(y) {
                        continue;
                    }
                    acc = alg.add(&acc, &alg.mul(x, y));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn add(&self, alg: &Algebra, other: &AlgMatrix) -> AlgMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| alg.add(a, b)).collect();
        AlgMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, alg: &Algebra, s: u32) -> AlgMatrix {
        let entries = self.entries.iter().map(|a| alg.scale(a, s)).collect();
        AlgMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self, alg: &Algebra) -> AlgMatrix {
        self.scale(alg, alg.prime() - 1)
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> AlgMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        AlgMatrix { rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn block_diag(&self, alg: &Algebra, other: &AlgMatrix) -> AlgMatrix {
        let mut m = AlgMatrix::zeros(alg, self.rows + other.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, other);
        m
    }

    pub fn paste(&mut self, r0: usize, c0: usize, b: &AlgMatrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c).clone());
            }
        }
    }

    pub fn hstack(&self, alg: &Algebra, other: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = AlgMatrix::zeros(alg, self.rows, self.cols + other.cols);
        m.paste(0, 0, self);
        m.paste(0, self.cols, other);
        m
    }

    pub fn vstack(&self, alg: &Algebra, other: &AlgMatrix) -> AlgMatrix {
        assert_eq!(self.cols, other.cols);
        let mut m = AlgMatrix::zeros(alg, self.rows + other.rows, self.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, 0, other);
        m
    }

    /// Field matrix of this map between realized projectives at vertex `j`.
    pub fn realize_at(&self, alg: &Algebra, src: &[usize], tgt: &[usize], j: usize) -> Matrix {
        let p = alg.prime();
        let rdims: Vec<usize> = tgt.iter().map(|&w| alg.paths(w, j).len()).collect();
        let cdims: Vec<usize> = src.iter().map(|&v| alg.paths(v, j).len()).collect();
        let mut m = Matrix::zeros(p, rdims.iter().sum(), cdims.iter().sum());
        let mut r0 = 0;
        for (r, &w) in tgt.iter().enumerate() {
            let mut c0 = 0;
            for (c, &v) in src.iter().enumerate() {
                let x = self.get(r, c);
                if !Algebra::is_zero(x) {
                    m.paste(r0, c0, &alg.right_mult_block(x, w, v, j));
                }
                c0 += cdims[c];
            }
            r0 += rdims[r];
        }
        m
    }

    pub fn realize(&self, alg: &Algebra, src: &[usize], tgt: &[usize]) -> ModuleMap {
        ModuleMap { maps: (0..alg.vertex_count()).map(|j| self.realize_at(alg, src, tgt, j)).collect() }
    }

    /// Matrix of `e_v`-coefficients between summands sitting at vertex `v`.
    pub fn top_block(&self, alg: &Algebra, src: &[usize], tgt: &[usize], v: usize) -> Matrix {
        let rs: Vec<usize> = (0..tgt.len()).filter(|&r| tgt[r] == v).collect();
        let cs: Vec<usize> = (0..src.len()).filter(|&c| src[c] == v).collect();
        let mut m = Matrix::zeros(alg.prime(), rs.len(), cs.len());
        for (i, &r) in rs.iter().enumerate() {
            for (j, &c) in cs.iter().enumerate() {
                m.set(i, j, alg.unit_coeff(self.get(r, c), v));
            }
        }
        m
    }
}

/// Coordinates of `(⊕_r P(w_r))_v` split into algebra elements: the `r`-th
/// block lists coefficients of paths `w_r -> v`.
pub fn vector_to_column(alg: &Algebra, tgt: &[usize], v: usize, x: &[u32]) -> Vec<Elem> {
    let mut out = Vec::with_capacity(tgt.len());
    let mut off = 0;
    for &w in tgt {
        let mut e = alg.zero();
        for &b in alg.paths(w, v) {
            e[b] = x[off];
            off += 1;
        }
        out.push(e);
    }
    debug_assert_eq!(off, x.len());
    out
}

pub fn column_to_vector(alg: &Algebra, tgt: &[usize], v: usize, col: &[Elem]) -> Vec<u32> {
    let mut out = Vec::new();
    for (e, &w) in col.iter().zip(tgt) {
        for &b in alg.paths(w, v) {
            out.push(e[b]);
        }
    }
    out
}

/// Bounded complex of projectives; `terms[k]` lists the vertices of the
/// indecomposable projective summands in degree `lo + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjComplex {
    pub lo: i64,
    pub terms: Vec<Vec<usize>>,
    pub diffs: Vec<AlgMatrix>,
}

/// Chain map given degreewise on the source's degree range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjChainMap {
    pub lo: i64,
    pub maps: Vec<AlgMatrix>,
}

impl ProjComplex {
    pub fn zero() -> Self {
        ProjComplex { lo: 0, terms: vec![], diffs: vec![] }
    }

    pub fn new(lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<AlgMatrix>) -> Self {
        assert_eq!(diffs.len(), terms.len().saturating_sub(1));
        for (k, d) in diffs.iter().enumerate() {
            assert_eq!((d.rows, d.cols), (terms[k + 1].len(), terms[k].len()), "differential shape");
        }
        ProjComplex { lo, terms, diffs }
    }

    /// `⊕ P(v)` for `v` in `verts`, placed in degree `degree`.
    pub fn stalk(verts: Vec<usize>, degree: i64) -> Self {
        ProjComplex { lo: degree, terms: vec![verts], diffs: vec![] }
    }

    pub fn projective(v: usize, degree: i64) -> Self {
        ProjComplex::stalk(vec![v], degree)
    }

    /// The regular module `A` in degree 0.
    pub fn regular(alg: &Algebra) -> Self {
        ProjComplex::stalk((0..alg.vertex_count()).collect(), 0)
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_empty())
    }

    pub fn term(&self, q: i64) -> &[usize] {
        if q < self.lo || q > self.hi() {
            return &[];
        }
        &self.terms[(q - self.lo) as usize]
    }

    pub fn diff(&self, alg: &Algebra, q: i64) -> AlgMatrix {
        if q >= self.lo && q < self.hi() {
            return self.diffs[(q - self.lo) as usize].clone();
        }
        AlgMatrix::zeros(alg, self.term(q + 1).len(), self.term(q).len())
    }

    pub fn summand_count(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    /// Graded multiplicities: for each degree in `lo..=hi`, counts per vertex.
    pub fn multiplicities(&self, n: usize) -> Vec<(i64, Vec<usize>)> {
        let mut out = Vec::new();
        for (k, t) in self.terms.iter().enumerate() {
            if t.is_empty() {
                continue;
            }
            let mut m = vec![0; n];
            for &v in t {
                m[v] += 1;
            }
            out.push((self.lo + k as i64, m));
        }
        out
    }

    pub fn k0(&self, n: usize) -> Vec<i64> {
        let mut k = vec![0i64; n];
        for (q, m) in self.multiplicities(n) {
            let sign = if q.rem_euclid(2) == 0 { 1 } else { -1 };
            for v in 0..n {
                k[v] += sign * m[v] as i64;
            }
        }
        k
    }

    /// Whether all terms lie in degrees `lo..=hi`.
    pub fn within(&self, lo: i64, hi: i64) -> bool {
        (self.lo..=self.hi()).all(|q| self.term(q).is_empty() || (lo <= q && q <= hi))
    }

    /// Drops empty terms at both ends.
    pub fn trimmed(&self) -> ProjComplex {
        let Some(first) = self.terms.iter().position(|t| !t.is_empty()) else {
            return ProjComplex::zero();
        };
        let last = self.terms.iter().rposition(|t| !t.is_empty()).unwrap();
        ProjComplex {
            lo: self.lo + first as i64,
            terms: self.terms[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
        }
    }

    /// Brutal truncation keeping only the terms in degrees `lo..=hi`.
    pub fn brutal(&self, alg: &Algebra, lo: i64, hi: i64) -> ProjComplex {
        if self.is_zero() || lo > hi {
            return ProjComplex::zero();
        }
        let terms = (lo..=hi).map(|q| self.term(q).to_vec()).collect();
        let diffs = (lo..hi).map(|q| self.diff(alg, q)).collect();
        ProjComplex { lo, terms, diffs }.trimmed()
    }

    /// Copy spanning at least `lo..=hi`.
    pub fn padded(&self, alg: &Algebra, lo: i64, hi: i64) -> ProjComplex {
        if self.terms.is_empty() {
            let terms = (lo..=hi).map(|_| vec![]).collect();
            let diffs = (lo..hi).map(|_| AlgMatrix::zeros(alg, 0, 0)).collect();
            return ProjComplex { lo, terms, diffs };
        }
        let lo = lo.min(self.lo);
        let hi = hi.max(self.hi());
        let terms = (lo..=hi).map(|q| self.term(q).to_vec()).collect();
        let diffs = (lo..hi).map(|q| self.diff(alg, q)).collect();
        ProjComplex { lo, terms, diffs }
    }

    pub fn shift(&self, alg: &Algebra, k: i64) -> ProjComplex {
        let diffs = if k.rem_euclid(2) == 1 {
            self.diffs.iter().map(|d| d.neg(alg)).collect()
        } else {
            self.diffs.clone()
        };
        ProjComplex { lo: self.lo - k, terms: self.terms.clone(), diffs }
    }

    pub fn direct_sum(&self, alg: &Algebra, other: &ProjComplex) -> ProjComplex {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let a = self.padded(alg, lo, hi);
        let b = other.padded(alg, lo, hi);
        let terms = a.terms.iter().zip(&b.terms).map(|(x, y)| x.iter().chain(y).copied().collect()).collect();
        let diffs = a.diffs.iter().zip(&b.diffs).map(|(x, y)| x.block_diag(alg, y)).collect();
        ProjComplex { lo, terms, diffs }
    }

    pub fn direct_sum_all(alg: &Algebra, parts: &[ProjComplex]) -> ProjComplex {
        parts.iter().fold(ProjComplex::zero(), |acc, x| acc.direct_sum(alg, x))
    }

    pub fn is_complex(&self, alg: &Algebra) -> bool {
        self.diffs.windows(2).all(|w| w[1].after(alg, &w[0]).is_zero())
    }

    /// Whether every differential entry lies in the radical.
    pub fn is_minimal(&self, alg: &Algebra) -> bool {
        self.diffs.iter().all(|d| d.entries.iter().all(|x| alg.in_radical(x)))
    }

    pub fn realize_term(alg: &Algebra, verts: &[usize]) -> Representation {
        repcat::projective_sum(alg, verts)
    }

    /// The complex of representations underlying `self`.
    pub fn realize(&self, alg: &Algebra) -> ModComplex {
        let terms = self.terms.iter().map(|t| ProjComplex::realize_term(alg, t)).collect();
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(k, d)| d.realize(alg, &self.terms[k], &self.terms[k + 1]))
            .collect();
        ModComplex { lo: self.lo, terms, diffs }
    }

    /// Mapping cone of `f: self -> y`: `cone^q = self^{q+1} ⊕ y^q`.
    pub fn cone(&self, alg: &Algebra, y: &ProjComplex, f: &ProjChainMap) -> ProjComplex {
        if self.is_zero() {
            return y.clone();
        }
        let lo = (self.lo - 1).min(if y.is_zero() { self.lo - 1 } else { y.lo });
        let hi = (self.hi() - 1).max(if y.is_zero() { self.hi() - 1 } else { y.hi() });
        let terms: Vec<Vec<usize>> =
            (lo..=hi).map(|q| self.term(q + 1).iter().chain(y.term(q)).copied().collect()).collect();
        let diffs = (lo..hi)
            .map(|q| {
                let dx = self.diff(alg, q + 1).neg(alg);
                let dy = y.diff(alg, q);
                let fq = f.at(alg, self, y, q + 1);
                let top = dx.hstack(alg, &AlgMatrix::zeros(alg, dx.rows, dy.cols));
                let bottom = fq.hstack(alg, &dy);
                top.vstack(alg, &bottom)
            })
            .collect();
        ProjComplex { lo, terms, diffs }.trimmed()
    }

    pub fn identity_map(&self, alg: &Algebra) -> ProjChainMap {
        ProjChainMap { lo: self.lo, maps: self.terms.iter().map(|t| AlgMatrix::identity(alg, t)).collect() }
    }

    pub fn zero_map(&self, alg: &Algebra, y: &ProjComplex) -> ProjChainMap {
        ProjChainMap {
            lo: self.lo,
            maps: (self.lo..=self.hi()).map(|q| AlgMatrix::zeros(alg, y.term(q).len(), self.term(q).len())).collect(),
        }
    }
}

impl ProjChainMap {
    /// Component in degree `q`, zero outside the stored range.
    pub fn at(&self, alg: &Algebra, src: &ProjComplex, tgt: &ProjComplex, q: i64) -> AlgMatrix {
        let k = q - self.lo;
        if k >= 0 && (k as usize) < self.maps.len() {
            let m = &self.maps[k as usize];
            if m.rows == tgt.term(q).len() && m.cols == src.term(q).len() {
                return m.clone();
            }
        }
        AlgMatrix::zeros(alg, tgt.term(q).len(), src.term(q).len())
    }

    /// Re-indexes on the source's degree range.
    pub fn normalized(&self, alg: &Algebra, src: &ProjComplex, tgt: &ProjComplex) -> ProjChainMap {
        ProjChainMap { lo: src.lo, maps: (src.lo..=src.hi()).map(|q| self.at(alg, src, tgt, q)).collect() }
    }

    /// `self ∘ first` for `first: a -> b` and `self: b -> c`.
    pub fn after(
        &self,
        alg: &Algebra,
        first: &ProjChainMap,
        a: &ProjComplex,
        b: &ProjComplex,
        c: &ProjComplex,
    ) -> ProjChainMap {
        ProjChainMap {
            lo: a.lo,
            maps: (a.lo..=a.hi()).map(|q| self.at(alg, b, c, q).after(alg, &first.at(alg, a, b, q))).collect(),
        }
    }

    pub fn add(&self, alg: &Algebra, other: &ProjChainMap, src: &ProjComplex, tgt: &ProjComplex) -> ProjChainMap {
        ProjChainMap {
            lo: src.lo,
            maps: (src.lo..=src.hi())
                .map(|q| self.at(alg, src, tgt, q).add(alg, &other.at(alg, src, tgt, q)))
                .collect(),
        }
    }

    pub fn scale(&self, alg: &Algebra, s: u32) -> ProjChainMap {
        ProjChainMap { lo: self.lo, maps: self.maps.iter().map(|m| m.scale(alg, s)).collect() }
    }

    /// Same components viewed as a map `src[k] -> tgt[k]` (no sign change).
    pub fn shift(&self, k: i64) -> ProjChainMap {
        ProjChainMap { lo: self.lo - k, maps: self.maps.clone() }
    }

    pub fn is_chain_map(&self, alg: &Algebra, src: &ProjComplex, tgt: &ProjComplex) -> bool {
        let lo = src.lo.min(tgt.lo) - 1;
        let hi = src.hi().max(tgt.hi()) + 1;
        (lo..=hi).all(|q| {
            let l = tgt.diff(alg, q).after(alg, &self.at(alg, src, tgt, q));
            let r = self.at(alg, src, tgt, q + 1).after(alg, &src.diff(alg, q));
            l == r
        })
    }

    /// Degreewise invertibility, read off the top (mod radical) blocks.
    pub fn is_degreewise_iso(&self, alg: &Algebra, src: &ProjComplex, tgt: &ProjComplex) -> bool {
        let lo = src.lo.min(tgt.lo);
        let hi = src.hi().max(tgt.hi());
        (lo..=hi).all(|q| {
            let m = self.at(alg, src, tgt, q);
            (0..alg.vertex_count()).all(|v| m.top_block(alg, src.term(q), tgt.term(q), v).is_invertible())
        })
    }

    pub fn realize(&self, alg: &Algebra, src: &ProjComplex, tgt: &ProjComplex) -> Vec<ModuleMap> {
        (src.lo..=src.hi()).map(|q| self.at(alg, src, tgt, q).realize(alg, src.term(q), tgt.term(q))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn presentation_s1(alg: &Algebra) -> ProjComplex {
        let mut d = AlgMatrix::zeros(alg, 1, 1);
        d.set(0, 0, alg.unit_elem(alg.arrow_basis(0)));
        ProjComplex::new(-1, vec![vec![1], vec![0]], vec![d])
    }

    #[test]
    fn realization_has_expected_homology() {
        let alg = Algebra::linear_a(7, 2);
        let x = presentation_s1(&alg);
        assert!(x.is_complex(&alg));
        let r = x.realize(&alg);
        assert!(r.is_complex(&alg));
        assert_eq!(r.homology_dims(&alg, 0), vec![1, 0]);
        assert_eq!(r.homology_dims(&alg, -1), vec![0, 0]);
        assert!(x.is_minimal(&alg));
    }

    #[test]
    fn k0_and_shift() {
        let alg = Algebra::linear_a(7, 2);
        let x = presentation_s1(&alg);
        assert_eq!(x.k0(2), vec![1, -1]);
        assert_eq!(x.shift(&alg, 1).k0(2), vec![-1, 1]);
        let c = x.cone(&alg, &x, &x.zero_map(&alg, &x));
        assert_eq!(c.k0(2), vec![0, 0]);
        assert!(c.is_complex(&alg));
    }

    #[test]
    fn cone_of_identity_is_exact() {
        let alg = Algebra::linear_a(7, 3);
        let x = presentation_s1(&alg);
        let c = x.cone(&alg, &x, &x.identity_map(&alg));
        assert!(c.is_complex(&alg));
        assert!(c.realize(&alg).is_acyclic(&alg));
    }
}
