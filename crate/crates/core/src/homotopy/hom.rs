//! Morphisms from a complex of projectives into a complex of modules.
//!
//! A chain map `X -> N` is determined by the images of the generators
//! `e_v` of the summands `P(v)` of `X`, so its unknowns are vectors
//! `f^q_c ∈ (N^q)_{v_c}`.  Homotopies are parametrized the same way, and
//! `Hom_K(X, N)` is cycles modulo boundaries.

use std::collections::HashMap;

use super::{column_to_vector, vector_to_column, AlgMatrix, ProjChainMap, ProjComplex};
use crate::algebra::{Algebra, Elem};
use crate::complex::ModComplex;
use crate::linalg::{self, Matrix};

/// Offsets of the per-summand unknown blocks.
#[derive(Clone, Debug)]
struct Layout {
    blocks: HashMap<(i64, usize), (usize, usize)>,
    total: usize,
}

impl Layout {
    fn new(x: &ProjComplex, dim_at: impl Fn(i64, usize) -> usize) -> Self {
        let mut blocks = HashMap::new();
        let mut total = 0;
        for q in x.lo..=x.hi() {
            for (c, &v) in x.term(q).iter().enumerate() {
                let len = dim_at(q, v);
                blocks.insert((q, c), (total, len));
                total += len;
            }
        }
        Layout { blocks, total }
    }

    fn get(&self, q: i64, c: usize) -> Option<(usize, usize)> {
        self.blocks.get(&(q, c)).copied()
    }
}

/// Path-action matrices of every term of `n`, cached per degree.
struct Actions<'a> {
    alg: &'a Algebra,
    n: &'a ModComplex,
    cache: HashMap<(i64, usize), Matrix>,
}

impl<'a> Actions<'a> {
    fn new(alg: &'a Algebra, n: &'a ModComplex) -> Self {
        Actions { alg, n, cache: HashMap::new() }
    }

    /// Matrix of `x ∈ e_t A e_s` acting `N^q_s -> N^q_t`.
    fn elem(&mut self, q: i64, x: &Elem, s: usize, t: usize) -> Matrix {
        let term = self.n.term(q).expect("term exists");
        let p = self.alg.prime();
        let mut m = Matrix::zeros(p, term.dims()[t], term.dims()[s]);
        for &b in self.alg.paths(s, t) {
            if x[b] == 0 {
                continue;
            }
            let pm = self.cache.entry((q, b)).or_insert_with(|| term.path_matrix(self.alg, b));
            m = m.add(&pm.scale(x[b]));
        }
        m
    }
}

fn dim_of(n: &ModComplex, q: i64, v: usize) -> usize {
    n.term(q).map_or(0, |t| t.dims()[v])
}

/// The space `Hom_K(X, N)` with explicit cycles and boundaries.
pub struct HomSpace {
    layout: Layout,
    /// Columns: basis of all chain maps.
    pub cycles: Matrix,
    /// Columns: spanning set of null-homotopic chain maps.
    pub boundaries: Matrix,
    boundary_rank: usize,
}

impl HomSpace {
    pub fn compute(alg: &Algebra, x: &ProjComplex, n: &ModComplex) -> HomSpace {
        let p = alg.prime();
        let layout = Layout::new(x, |q, v| dim_of(n, q, v));
        let mut acts = Actions::new(alg, n);

        // chain condition per source summand
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for q in x.lo..=x.hi() {
            let d = x.diff(alg, q);
            for (c, &vc) in x.term(q).iter().enumerate() {
                let out_dim = dim_of(n, q + 1, vc);
                if out_dim == 0 {
                    continue;
                }
                let mut block = Matrix::zeros(p, out_dim, layout.total);
                if let Some((off, len)) = layout.get(q, c) {
                    if len > 0 {
                        let dn = &n.diff(q).expect("both terms exist").maps[vc];
                        block.paste(0, off, dn);
                    }
                }
                for (r, &vr) in x.term(q + 1).iter().enumerate() {
                    let e = d.get(r, c);
                    if Algebra::is_zero(e) {
                        continue;
                    }
                    let (off, len) = layout.get(q + 1, r).unwrap();
                    if len == 0 {
                        continue;
                    }
                    let m = acts.elem(q + 1, e, vr, vc).neg();
                    let cur = block.submatrix(0..out_dim, off..off + len);
                    block.paste(0, off, &cur.add(&m));
                }
                for r in 0..out_dim {
                    rows.push(block.row(r).to_vec());
                }
            }
        }
        let eqs = if rows.is_empty() {
            Matrix::zeros(p, 0, layout.total)
        } else {
            Matrix::from_vec(p, rows.len(), layout.total, rows.concat())
        };
        let cycles = eqs.null_space();

        // homotopies h^q_c ∈ (N^{q-1})_{v_c}
        let hlayout = Layout::new(x, |q, v| dim_of(n, q - 1, v));
        let mut boundaries = Matrix::zeros(p, layout.total, hlayout.total);
        for q in x.lo..=x.hi() {
            let d = x.diff(alg, q);
            for (c, &vc) in x.term(q).iter().enumerate() {
                let Some((foff, flen)) = layout.get(q, c) else { continue };
                if flen == 0 {
                    continue;
                }
                if let Some((hoff, hlen)) = hlayout.get(q, c) {
                    if hlen > 0 {
                        boundaries.paste(foff, hoff, &n.diff(q - 1).expect("both terms exist").maps[vc]);
                    }
                }
                for (r, &vr) in x.term(q + 1).iter().enumerate() {
                    let e = d.get(r, c);
                    if Algebra::is_zero(e) {
                        continue;
                    }
                    let (hoff, hlen) = hlayout.get(q + 1, r).unwrap();
                    if hlen == 0 {
                        continue;
                    }
                    let m = acts.elem(q, e, vr, vc);
                    let cur = boundaries.submatrix(foff..foff + flen, hoff..hoff + hlen);
                    boundaries.paste(foff, hoff, &cur.add(&m));
                }
            }
        }
        let boundary_rank = boundaries.rank();
        HomSpace { layout, cycles, boundaries, boundary_rank }
    }

    pub fn dim(&self) -> usize {
        self.cycles.cols() - self.boundary_rank
    }

    pub fn chain_map_dim(&self) -> usize {
        self.cycles.cols()
    }

    pub fn unknowns(&self) -> usize {
        self.layout.total
    }

    /// Chain maps whose classes form a basis of `Hom_K`.
    pub fn representatives(&self) -> Vec<Vec<u32>> {
        if self.dim() == 0 {
            return vec![];
        }
        let b = self.boundaries.column_space();
        let stacked = b.hstack(&self.cycles);
        let (_, pivots) = stacked.rref();
        pivots.iter().filter(|&&c| c >= b.cols()).map(|&c| stacked.col(c)).collect()
    }

    pub fn is_null_homotopic(&self, f: &[u32]) -> bool {
        linalg::in_span(&self.boundaries, f)
    }

    /// Reads a coordinate vector as a chain map into a complex of projectives
    /// `y` (whose realization was the target).
    pub fn decode(&self, alg: &Algebra, x: &ProjComplex, y: &ProjComplex, f: &[u32]) -> ProjChainMap {
        let maps = (x.lo..=x.hi())
            .map(|q| {
                let tgt = y.term(q);
                let mut m = AlgMatrix::zeros(alg, tgt.len(), x.term(q).len());
                for (c, &vc) in x.term(q).iter().enumerate() {
                    let (off, len) = self.layout.get(q, c).unwrap();
                    let col = vector_to_column(alg, tgt, vc, &f[off..off + len]);
                    for (r, e) in col.into_iter().enumerate() {
                        m.set(r, c, e);
                    }
                }
                m
            })
            .collect();
        ProjChainMap { lo: x.lo, maps }
    }

    pub fn encode(&self, alg: &Algebra, x: &ProjComplex, y: &ProjComplex, f: &ProjChainMap) -> Vec<u32> {
        let mut out = vec![0; self.layout.total];
        for q in x.lo..=x.hi() {
            let m = f.at(alg, x, y, q);
            for (c, &vc) in x.term(q).iter().enumerate() {
                let (off, len) = self.layout.get(q, c).unwrap();
                let col: Vec<Elem> = (0..m.rows).map(|r| m.get(r, c).clone()).collect();
                let v = column_to_vector(alg, y.term(q), vc, &col);
                out[off..off + len].copy_from_slice(&v[..len]);
            }
        }
        out
    }

    /// Encodes a chain map into a complex of modules given by its generator images.
    pub fn encode_images(&self, x: &ProjComplex, images: &HashMap<(i64, usize), Vec<u32>>) -> Vec<u32> {
        let mut out = vec![0; self.layout.total];
        for q in x.lo..=x.hi() {
            for c in 0..x.term(q).len() {
                let (off, len) = self.layout.get(q, c).unwrap();
                if let Some(v) = images.get(&(q, c)) {
                    out[off..off + len].copy_from_slice(v);
                }
            }
        }
        out
    }

    /// Generator images `(degree, summand) -> vector` of a coordinate vector.
    pub fn images(&self, x: &ProjComplex, f: &[u32]) -> HashMap<(i64, usize), Vec<u32>> {
        let mut out = HashMap::new();
        for q in x.lo..=x.hi() {
            for c in 0..x.term(q).len() {
                let (off, len) = self.layout.get(q, c).unwrap();
                out.insert((q, c), f[off..off + len].to_vec());
            }
        }
        out
    }
}

/// `dim Hom_D(X, N)` for `X` a bounded complex of projectives.
pub fn hom_dim(alg: &Algebra, x: &ProjComplex, n: &ModComplex) -> usize {
    if x.is_zero() || n.terms.is_empty() {
        return 0;
    }
    if x.lo > n.hi() || x.hi() < n.lo - 1 {
        return 0;
    }
    HomSpace::compute(alg, x, n).dim()
}

/// `dim Hom_K(X, Y[i])`.
pub fn hom_k(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, i: i64) -> usize {
    if x.is_zero() || y.is_zero() {
        return 0;
    }
    let ys = y.shift(alg, i);
    if x.lo > ys.hi() || x.hi() < ys.lo - 1 {
        return 0;
    }
    hom_dim(alg, x, &ys.realize(alg))
}

/// Basis of `Hom_K(X, Y)` as chain maps.
pub fn hom_basis_k(alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> Vec<ProjChainMap> {
    if x.is_zero() || y.is_zero() {
        return vec![];
    }
    let hs = HomSpace::compute(alg, x, &y.realize(alg));
    hs.representatives().iter().map(|f| hs.decode(alg, x, y, f)).collect()
}

pub fn is_null_homotopic(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, f: &ProjChainMap) -> bool {
    if x.is_zero() || y.is_zero() {
        return true;
    }
    let hs = HomSpace::compute(alg, x, &y.realize(alg));
    hs.is_null_homotopic(&hs.encode(alg, x, y, f))
}

/// Universal right approximation `⊕ gens -> target` by basis maps of each
/// `Hom_K(gens_j, target)`.
pub fn right_approximation(
    alg: &Algebra,
    gens: &[ProjComplex],
    target: &ProjComplex,
) -> (ProjComplex, ProjChainMap) {
    let mut parts: Vec<(ProjComplex, ProjChainMap)> = Vec::new();
    for g in gens {
        for f in hom_basis_k(alg, g, target) {
            parts.push((g.clone(), f));
        }
    }
    join_sources(alg, &parts, target)
}

/// Universal left approximation `source -> ⊕ targets`.
pub fn left_approximation(
    alg: &Algebra,
    source: &ProjComplex,
    targets: &[ProjComplex],
) -> (ProjComplex, ProjChainMap) {
    let mut parts: Vec<(ProjComplex, ProjChainMap)> = Vec::new();
    for t in targets {
        for f in hom_basis_k(alg, source, t) {
            parts.push((t.clone(), f));
        }
    }
    join_targets(alg, source, &parts)
}

/// `[f_1 ... f_k]: ⊕ X_j -> Y`.
pub fn join_sources(
    alg: &Algebra,
    parts: &[(ProjComplex, ProjChainMap)],
    target: &ProjComplex,
) -> (ProjComplex, ProjChainMap) {
    let sources: Vec<ProjComplex> = parts.iter().map(|(x, _)| x.clone()).collect();
    let sum = ProjComplex::direct_sum_all(alg, &sources);
    if sum.is_zero() {
        return (sum.clone(), sum.zero_map(alg, target));
    }
    let maps = (sum.lo..=sum.hi())
        .map(|q| {
            let mut m = AlgMatrix::zeros(alg, target.term(q).len(), 0);
            for (x, f) in parts {
                m = m.hstack(alg, &f.at(alg, x, target, q));
            }
            m
        })
        .collect();
    (sum.clone(), ProjChainMap { lo: sum.lo, maps })
}

/// `(f_1; ...; f_k): X -> ⊕ Y_j`.
pub fn join_targets(
    alg: &Algebra,
    source: &ProjComplex,
    parts: &[(ProjComplex, ProjChainMap)],
) -> (ProjComplex, ProjChainMap) {
    let targets: Vec<ProjComplex> = parts.iter().map(|(y, _)| y.clone()).collect();
    let sum = ProjComplex::direct_sum_all(alg, &targets);
    let maps = (source.lo..=source.hi())
        .map(|q| {
            let mut m = AlgMatrix::zeros(alg, 0, source.term(q).len());
            for (y, f) in parts {
                m = m.vstack(alg, &f.at(alg, source, y, q));
            }
            m
        })
        .collect();
    (sum, ProjChainMap { lo: source.lo, maps })
}

#[cfg(test)]
mod tests {
    use super::super::tests::presentation_s1;
    use super::*;

    #[test]
    fn stalk_homs() {
        let alg = Algebra::linear_a(7, 2);
        let p1 = ProjComplex::projective(0, 0);
        let p2 = ProjComplex::projective(1, 0);
        assert_eq!(hom_k(&alg, &p1, &p1, 0), 1);
        assert_eq!(hom_k(&alg, &p2, &p1, 0), 1);
        assert_eq!(hom_k(&alg, &p1, &p2, 0), 0);
        assert_eq!(hom_k(&alg, &p1, &p1, 1), 0);
        assert_eq!(hom_k(&alg, &p1, &p1.shift(&alg, 3), 0), 0);
    }

    #[test]
    fn presentation_of_simple_is_rigid() {
        let alg = Algebra::linear_a(7, 2);
        let x = presentation_s1(&alg);
        assert_eq!(hom_k(&alg, &x, &x, 0), 1);
        assert_eq!(hom_k(&alg, &x, &x, 1), 0);
        assert_eq!(hom_k(&alg, &x, &x, -1), 0);
        // Hom(S(1), S(2)[1]) = Ext^1 = k, S(2) = P(2)
        let p2 = ProjComplex::projective(1, 0);
        assert_eq!(hom_k(&alg, &x, &p2, 1), 1);
    }

    #[test]
    fn identity_is_not_null_homotopic() {
        let alg = Algebra::linear_a(7, 2);
        let x = presentation_s1(&alg);
        let id = x.identity_map(&alg);
        assert!(id.is_chain_map(&alg, &x, &x));
        assert!(!is_null_homotopic(&alg, &x, &x, &id));
        let basis = hom_basis_k(&alg, &x, &x);
        assert_eq!(basis.len(), 1);
        assert!(basis[0].is_chain_map(&alg, &x, &x));
    }

    #[test]
    fn approximations_are_chain_maps() {
        let alg = Algebra::linear_a(7, 3);
        let target = ProjComplex::regular(&alg);
        let gens = vec![ProjComplex::projective(2, 0), ProjComplex::projective(1, 0)];
        let (g, f) = right_approximation(&alg, &gens, &target);
        assert_eq!(g.summand_count(), 5);
        assert!(f.is_chain_map(&alg, &g, &target));
        let (e, h) = left_approximation(&alg, &gens[0], std::slice::from_ref(&target));
        assert_eq!(e.summand_count(), 9);
        assert!(h.is_chain_map(&alg, &gens[0], &e));
    }
}
