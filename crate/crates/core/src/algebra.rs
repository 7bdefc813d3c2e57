//! Bound quiver algebras `kQ/I` with monomial relations.
//!
//! Paths are stored in traversal order (first arrow first) but multiplied
//! right-to-left: for basis paths `x`, `y` the product `x·y` means "walk `y`,
//! then `x`" and is defined when `target(y) == source(x)`.  Vertices are
//! 0-based internally; file formats use 1-based numbering.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::repcat::Representation;

/// Algebra element as coordinates in the path basis.
pub type Elem = Vec<u32>;

pub const DEFAULT_LENGTH_BOUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    /// Arrow indices in traversal order.
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Algebra {
    p: u32,
    n: usize,
    arrows: Vec<Arrow>,
    relations: Vec<Vec<usize>>,
    basis: Vec<Path>,
    mult: Vec<Option<usize>>,
    between: Vec<Vec<Vec<usize>>>,
    idempotents: Vec<usize>,
    arrow_basis: Vec<usize>,
}

impl Algebra {
    /// Builds `kQ/I` from arrows (0-based endpoints) and forbidden arrow sequences.
    pub fn new(p: u32, n: usize, arrows: Vec<Arrow>, relations: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_length_bound(p, n, arrows, relations, DEFAULT_LENGTH_BOUND)
    }

    pub fn with_length_bound(
        p: u32,
        n: usize,
        arrows: Vec<Arrow>,
        relations: Vec<Vec<usize>>,
        bound: usize,
    ) -> Result<Self> {
        if !linalg::is_prime(p) {
            return Err(Error::Spec(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::Spec("quiver has no vertices".into()));
        }
        for (k, a) in arrows.iter().enumerate() {
            if a.source >= n || a.target >= n {
                return Err(Error::Spec(format!("arrow {} has an endpoint outside 1..{n}", a.id)));
            }
            if arrows[..k].iter().any(|b| b.id == a.id) {
                return Err(Error::Spec(format!("duplicate arrow id {}", a.id)));
            }
        }
        for r in &relations {
            if r.len() < 2 {
                return Err(Error::Spec("relations must have length at least 2".into()));
            }
            if r.iter().any(|&a| a >= arrows.len()) {
                return Err(Error::Spec("relation uses an unknown arrow".into()));
            }
            if r.windows(2).any(|w| arrows[w[0]].target != arrows[w[1]].source) {
                return Err(Error::Spec("relation is not a composable path".into()));
            }
        }

        let mut basis: Vec<Path> = (0..n).map(|v| Path { source: v, target: v, arrows: vec![] }).collect();
        let mut frontier: Vec<usize> = (0..n).collect();
        let mut len = 0;
        while !frontier.is_empty() {
            if len >= bound {
                return Err(Error::NotAdmissible(bound));
            }
            let mut next = Vec::new();
            for &pi in &frontier {
                let base = basis[pi].clone();
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source != base.target {
                        continue;
                    }
                    let mut seq = base.arrows.clone();
                    seq.push(ai);
                    if relations.iter().any(|r| seq.ends_with(r)) {
                        continue;
                    }
                    next.push(basis.len());
                    basis.push(Path { source: base.source, target: a.target, arrows: seq });
                }
            }
            frontier = next;
            len += 1;
        }

        let index: HashMap<(usize, Vec<usize>), usize> =
            basis.iter().enumerate().map(|(i, q)| ((q.source, q.arrows.clone()), i)).collect();
        let dim = basis.len();
        let mut mult = vec![None; dim * dim];
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                if y.target != x.source {
                    continue;
                }
                let mut seq = y.arrows.clone();
                seq.extend_from_slice(&x.arrows);
                mult[i * dim + j] = index.get(&(y.source, seq)).copied();
            }
        }
        let mut between = vec![vec![Vec::new(); n]; n];
        for (i, q) in basis.iter().enumerate() {
            between[q.source][q.target].push(i);
        }
        let arrow_basis = (0..arrows.len()).map(|a| index[&(arrows[a].source, vec![a])]).collect();
        Ok(Algebra { p, n, arrows, relations, basis, mult, between, idempotents: (0..n).collect(), arrow_basis })
    }

    /// Path algebra of the linearly oriented quiver `1 -> 2 -> ... -> n`.
    pub fn linear_a(p: u32, n: usize) -> Self {
        let arrows = (0..n.saturating_sub(1))
            .map(|i| Arrow { id: format!("a{}", i + 1), source: i, target: i + 1 })
            .collect();
        Algebra::new(p, n, arrows, vec![]).expect("linear quiver is admissible")
    }

    /// Linear `A_n` with every length-2 path forbidden (radical square zero).
    pub fn linear_rad2(p: u32, n: usize) -> Self {
        let arrows: Vec<Arrow> = (0..n.saturating_sub(1))
            .map(|i| Arrow { id: format!("a{}", i + 1), source: i, target: i + 1 })
            .collect();
        let rels = (0..arrows.len().saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
        Algebra::new(p, n, arrows, rels).expect("radical square zero is admissible")
    }

    pub fn prime(&self) -> u32 {
        self.p
    }
    pub fn vertex_count(&self) -> usize {
        self.n
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }
    pub fn is_hereditary(&self) -> bool {
        self.relations.is_empty()
    }

    /// Same quiver and relations over another prime field.
    pub fn with_prime(&self, p: u32) -> Result<Self> {
        Algebra::new(p, self.n, self.arrows.clone(), self.relations.clone())
    }

    /// Basis indices of paths from `s` to `t`, i.e. a basis of `e_t A e_s`.
    pub fn paths(&self, s: usize, t: usize) -> &[usize] {
        &self.between[s][t]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    /// Basis index of `x·y`, or `None` when the product vanishes.
    #[inline]
    pub fn mul_basis(&self, x: usize, y: usize) -> Option<usize> {
        self.mult[x * self.basis.len() + y]
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.dim()]
    }

    pub fn unit_elem(&self, b: usize) -> Elem {
        let mut e = self.zero();
        e[b] = 1;
        e
    }

    pub fn is_zero(x: &Elem) -> bool {
        x.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let p = self.p;
        let mut out = self.zero();
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                if let Some(k) = self.mul_basis(i, j) {
                    out[k] = linalg::add(p, out[k], linalg::mul(p, a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Elem {
        x.iter().zip(y).map(|(&a, &b)| linalg::add(self.p, a, b)).collect()
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Elem {
        x.iter().zip(y).map(|(&a, &b)| linalg::sub(self.p, a, b)).collect()
    }

    pub fn scale(&self, x: &Elem, s: u32) -> Elem {
        x.iter().map(|&a| linalg::mul(self.p, a, s)).collect()
    }

    pub fn neg(&self, x: &Elem) -> Elem {
        self.scale(x, self.p - 1)
    }

    /// Coefficient of `e_v` in `x`.
    pub fn unit_coeff(&self, x: &Elem, v: usize) -> u32 {
        x[self.idempotents[v]]
    }

    /// Whether `x` lies in the arrow ideal (no trivial path components).
    pub fn in_radical(&self, x: &Elem) -> bool {
        (0..self.n).all(|v| self.unit_coeff(x, v) == 0)
    }

    /// Inverse of `λ e_v + r` inside `e_v A e_v`, `λ ≠ 0`, `r` radical.
    pub fn local_inverse(&self, x: &Elem, v: usize) -> Elem {
        let lambda = self.unit_coeff(x, v);
        assert!(lambda != 0, "element is not a unit at vertex {v}");
        let li = linalg::inv(self.p, lambda);
        let e = self.unit_elem(self.idempotents[v]);
        let mut n = self.scale(x, li);
        n = self.sub(&n, &e);
        // (λ(1+n))^{-1} = λ^{-1} Σ (-n)^k
        let step = self.neg(&n);
        let mut term = e.clone();
        let mut sum = e;
        loop {
            term = self.mul(&term, &step);
            if Algebra::is_zero(&term) {
                break;
            }
            sum = self.add(&sum, &term);
        }
        self.scale(&sum, li)
    }

    /// Matrix of right multiplication by `x ∈ e_t A e_s` from `P(t)` to `P(s)`
    /// restricted to vertex `j`: rows are paths `s→j`, columns paths `t→j`.
    pub fn right_mult_block(&self, x: &Elem, s: usize, t: usize, j: usize) -> Matrix {
        let rows = self.paths(s, j);
        let cols = self.paths(t, j);
        let mut m = Matrix::zeros(self.p, rows.len(), cols.len());
        for (ci, &u) in cols.iter().enumerate() {
            for (b, &coef) in x.iter().enumerate() {
                if coef == 0 {
                    continue;
                }
                if let Some(k) = self.mul_basis(u, b) {
                    let ri = rows.iter().position(|&r| r == k).expect("product stays in e_j A e_s");
                    let v = linalg::add(self.p, m.get(ri, ci), coef);
                    m.set(ri, ci, v);
                }
            }
        }
        m
    }

    /// Indecomposable projective `P(i) = A e_i`.
    pub fn projective(&self, i: usize) -> Representation {
        let dims: Vec<usize> = (0..self.n).map(|j| self.paths(i, j).len()).collect();
        let maps = self
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let src = self.paths(i, a.source);
                let tgt = self.paths(i, a.target);
                let mut m = Matrix::zeros(self.p, tgt.len(), src.len());
                for (c, &q) in src.iter().enumerate() {
                    if let Some(k) = self.mul_basis(self.arrow_basis[ai], q) {
                        let r = tgt.iter().position(|&t| t == k).expect("arrow maps into P(i)");
                        m.set(r, c, 1);
                    }
                }
                m
            })
            .collect();
        Representation::new(dims, maps)
    }

    /// Indecomposable injective `J(i) = D(e_i A)`.
    pub fn injective(&self, i: usize) -> Representation {
        let dims: Vec<usize> = (0..self.n).map(|j| self.paths(j, i).len()).collect();
        let maps = self
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let rows = self.paths(a.target, i);
                let cols = self.paths(a.source, i);
                let mut m = Matrix::zeros(self.p, rows.len(), cols.len());
                let ab = self.arrow_basis[ai];
                for (r, &q) in rows.iter().enumerate() {
                    if let Some(k) = self.mul_basis(q, ab) {
                        let c = cols.iter().position(|&t| t == k).expect("dual action stays in D(e_i A)");
                        m.set(r, c, 1);
                    }
                }
                m
            })
            .collect();
        Representation::new(dims, maps)
    }

    /// Simple module `S(i)`.
    pub fn simple(&self, i: usize) -> Representation {
        let mut dims = vec![0; self.n];
        dims[i] = 1;
        let maps = self
            .arrows
            .iter()
            .map(|a| Matrix::zeros(self.p, dims[a.target], dims[a.source]))
            .collect();
        Representation::new(dims, maps)
    }

    /// The regular module `A = ⊕ P(i)`.
    pub fn regular(&self) -> Representation {
        let mut m = Representation::zero(self);
        for i in 0..self.n {
            m = m.direct_sum(&self.projective(i));
        }
        m
    }

    /// Basis index of the length-one path given by arrow `a`.
    pub fn arrow_basis(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }
}
