//! Bounded cochain complexes of representations.

use crate::algebra::Algebra;
use crate::linalg::Matrix;
use crate::repcat::{self, Diagram, Edge, ModuleMap, Representation};

/// `terms[k]` sits in degree `lo + k`; `diffs[k]` maps `terms[k]` to `terms[k + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModComplex {
    pub lo: i64,
    pub terms: Vec<Representation>,
    pub diffs: Vec<ModuleMap>,
}

impl ModComplex {
    pub fn zero(lo: i64) -> Self {
        ModComplex { lo, terms: vec![], diffs: vec![] }
    }

    pub fn stalk(m: Representation, degree: i64) -> Self {
        ModComplex { lo: degree, terms: vec![m], diffs: vec![] }
    }

    pub fn new(lo: i64, terms: Vec<Representation>, diffs: Vec<ModuleMap>) -> Self {
        assert_eq!(diffs.len(), terms.len().saturating_sub(1), "one differential between consecutive terms");
        ModComplex { lo, terms, diffs }
    }

    /// Highest degree slot (`lo - 1` when empty).
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.iter().all(|t| t.is_zero())
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(|t| t.total_dim()).sum()
    }

    pub fn term(&self, q: i64) -> Option<&Representation> {
        if q < self.lo || q > self.hi() {
            return None;
        }
        Some(&self.terms[(q - self.lo) as usize])
    }

    /// Term in degree `q`, zero outside the stored range.
    pub fn term_or_zero(&self, alg: &Algebra, q: i64) -> Representation {
        self.term(q).cloned().unwrap_or_else(|| Representation::zero(alg))
    }

    pub fn term_dims(&self, alg: &Algebra, q: i64) -> Vec<usize> {
        self.term(q).map_or(vec![0; alg.vertex_count()], |t| t.dims().to_vec())
    }

    /// Differential out of degree `q`.
    pub fn diff(&self, q: i64) -> Option<&ModuleMap> {
        if q < self.lo || q >= self.hi() {
            return None;
        }
        Some(&self.diffs[(q - self.lo) as usize])
    }

    pub fn diff_or_zero(&self, alg: &Algebra, q: i64) -> ModuleMap {
        self.diff(q).cloned().unwrap_or_else(|| {
            ModuleMap::zero(alg.prime(), &self.term_dims(alg, q), &self.term_dims(alg, q + 1))
        })
    }

    /// `X[k]` with `X[k]^q = X^{q+k}`; differentials change sign for odd `k`.
    pub fn shift(&self, k: i64) -> ModComplex {
        let diffs = if k.rem_euclid(2) == 1 {
            self.diffs.iter().map(|d| d.neg()).collect()
        } else {
            self.diffs.clone()
        };
        ModComplex { lo: self.lo - k, terms: self.terms.clone(), diffs }
    }

    /// Copy spanning at least the degrees `lo..=hi`, padding with zeros.
    pub fn padded(&self, alg: &Algebra, lo: i64, hi: i64) -> ModComplex {
        let lo = lo.min(self.lo);
        let hi = hi.max(self.hi());
        let terms: Vec<Representation> = (lo..=hi).map(|q| self.term_or_zero(alg, q)).collect();
        let diffs = (lo..hi).map(|q| self.diff_or_zero(alg, q)).collect();
        ModComplex { lo, terms, diffs }
    }

    /// Drops zero terms at both ends.
    pub fn trimmed(&self) -> ModComplex {
        let first = self.terms.iter().position(|t| !t.is_zero());
        let Some(first) = first else {
            return ModComplex::zero(self.lo);
        };
        let last = self.terms.iter().rposition(|t| !t.is_zero()).unwrap();
        ModComplex {
            lo: self.lo + first as i64,
            terms: self.terms[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
        }
    }

    pub fn direct_sum(&self, alg: &Algebra, other: &ModComplex) -> ModComplex {
        if self.terms.is_empty() {
            return other.clone();
        }
        if other.terms.is_empty() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let a = self.padded(alg, lo, hi);
        let b = other.padded(alg, lo, hi);
        let terms = a.terms.iter().zip(&b.terms).map(|(x, y)| x.direct_sum(y)).collect();
        let diffs = a.diffs.iter().zip(&b.diffs).map(|(x, y)| x.block_diag(y)).collect();
        ModComplex { lo, terms, diffs }
    }

    pub fn is_complex(&self, alg: &Algebra) -> bool {
        let maps_ok = self
            .diffs
            .iter()
            .enumerate()
            .all(|(k, d)| self.terms[k].is_module_map(alg, &self.terms[k + 1], d));
        maps_ok && self.diffs.windows(2).all(|w| w[1].after(&w[0]).is_zero())
    }

    /// `H^q = ker d^q / im d^{q-1}`.
    pub fn homology_at(&self, alg: &Algebra, q: i64) -> Representation {
        let Some(t) = self.term(q) else {
            return Representation::zero(alg);
        };
        let p = alg.prime();
        let (z, incl) = match self.diff(q) {
            Some(d) => repcat::kernel(alg, t, d),
            None => (t.clone(), t.identity(p)),
        };
        let boundaries: Vec<Matrix> = match self.diff(q - 1) {
            Some(d) => incl
                .maps
                .iter()
                .zip(&d.maps)
                .map(|(i, dm)| {
                    if i.cols() == 0 || dm.cols() == 0 {
                        Matrix::zeros(p, i.cols(), 0)
                    } else {
                        i.solve_right(dm).expect("boundaries are cycles")
                    }
                })
                .collect(),
            None => z.dims().iter().map(|&n| Matrix::zeros(p, n, 0)).collect(),
        };
        repcat::quotient(alg, &z, &boundaries).0
    }

    pub fn homology_dims(&self, alg: &Algebra, q: i64) -> Vec<usize> {
        self.homology_at(alg, q).dims().to_vec()
    }

    pub fn is_acyclic(&self, alg: &Algebra) -> bool {
        (self.lo..=self.hi()).all(|q| self.homology_at(alg, q).is_zero())
    }

    /// Flattened diagram with nodes `(degree index, vertex)`; arrows first,
    /// then differentials.
    pub fn to_diagram(&self, alg: &Algebra) -> Diagram {
        let n = alg.vertex_count();
        let mut dims = Vec::with_capacity(n * self.terms.len());
        let mut edges = Vec::new();
        for (k, t) in self.terms.iter().enumerate() {
            dims.extend_from_slice(t.dims());
            for (a, m) in alg.arrows().iter().zip(t.arrow_maps()) {
                edges.push(Edge { from: k * n + a.source, to: k * n + a.target, map: m.clone() });
            }
        }
        for (k, d) in self.diffs.iter().enumerate() {
            for (v, m) in d.maps.iter().enumerate() {
                edges.push(Edge { from: k * n + v, to: (k + 1) * n + v, map: m.clone() });
            }
        }
        Diagram { p: alg.prime(), dims, edges }
    }

    /// Inverse of [`ModComplex::to_diagram`] for a diagram of the same shape.
    pub fn from_diagram(alg: &Algebra, lo: i64, len: usize, d: &Diagram) -> ModComplex {
        let n = alg.vertex_count();
        let na = alg.arrows().len();
        let terms = (0..len)
            .map(|k| {
                let maps = (0..na).map(|a| d.edges[k * na + a].map.clone()).collect();
                Representation::new(d.dims[k * n..(k + 1) * n].to_vec(), maps)
            })
            .collect();
        let base = len * na;
        let diffs = (0..len.saturating_sub(1))
            .map(|k| ModuleMap { maps: (0..n).map(|v| d.edges[base + k * n + v].map.clone()).collect() })
            .collect();
        ModComplex { lo, terms, diffs }
    }

    /// Dimension of the strict chain-map space `self -> other` (same degrees).
    pub fn chain_map_dim(&self, alg: &Algebra, other: &ModComplex) -> usize {
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let a = self.padded(alg, lo, hi);
        let b = other.padded(alg, lo, hi);
        a.to_diagram(alg).hom_dim(&b.to_diagram(alg))
    }
}
