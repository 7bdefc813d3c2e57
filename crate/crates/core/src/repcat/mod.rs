//! Finite-dimensional modules as quiver representations.

pub mod decompose;
pub mod diagram;
pub mod indecomposables;

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
pub use diagram::{Diagram, Edge, NodeMaps};

pub const DEFAULT_RESOLUTION_BOUND: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    dims: Vec<usize>,
    /// One matrix per arrow, `dim(target) x dim(source)`.
    maps: Vec<Matrix>,
}

/// Vertexwise linear maps between two representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub maps: Vec<Matrix>,
}

impl ModuleMap {
    pub fn source_dims(&self) -> Vec<usize> {
        self.maps.iter().map(|m| m.cols()).collect()
    }

    pub fn target_dims(&self) -> Vec<usize> {
        self.maps.iter().map(|m| m.rows()).collect()
    }

    pub fn zero(p: u32, source: &[usize], target: &[usize]) -> Self {
        ModuleMap { maps: source.iter().zip(target).map(|(&s, &t)| Matrix::zeros(p, t, s)).collect() }
    }

    pub fn identity(p: u32, dims: &[usize]) -> Self {
        ModuleMap { maps: dims.iter().map(|&n| Matrix::identity(p, n)).collect() }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap { maps: diagram::compose(&self.maps, &first.maps) }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { maps: diagram::add_maps(&self.maps, &other.maps) }
    }

    pub fn scale(&self, s: u32) -> ModuleMap {
        ModuleMap { maps: diagram::scale_maps(&self.maps, s) }
    }

    pub fn neg(&self) -> ModuleMap {
        ModuleMap { maps: self.maps.iter().map(|m| m.neg()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        diagram::is_iso(&self.maps)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    /// Block map `[self, other]` out of a direct sum of sources.
    pub fn hstack(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.hstack(b)).collect() }
    }

    /// Block map `(self; other)` into a direct sum of targets.
    pub fn vstack(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.vstack(b)).collect() }
    }

    pub fn block_diag(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap { maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect() }
    }
}

impl Representation {
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Representation { dims, maps }
    }

    pub fn zero(alg: &Algebra) -> Self {
        let dims = vec![0; alg.vertex_count()];
        let maps = alg.arrows().iter().map(|_| Matrix::zeros(alg.prime(), 0, 0)).collect();
        Representation { dims, maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn to_diagram(&self, alg: &Algebra) -> Diagram {
        let edges = alg
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| Edge { from: a.source, to: a.target, map: m.clone() })
            .collect();
        Diagram { p: alg.prime(), dims: self.dims.clone(), edges }
    }

    pub fn from_diagram(d: &Diagram) -> Self {
        Representation { dims: d.dims.clone(), maps: d.edges.iter().map(|e| e.map.clone()).collect() }
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect();
        Representation { dims, maps }
    }

    pub fn identity(&self, p: u32) -> ModuleMap {
        ModuleMap::identity(p, &self.dims)
    }

    /// Matrix by which the basis path `b` acts, `dim(target) x dim(source)`.
    pub fn path_matrix(&self, alg: &Algebra, b: usize) -> Matrix {
        let path = &alg.basis()[b];
        let mut m = Matrix::identity(alg.prime(), self.dims[path.source]);
        for &a in &path.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Matrix of an element supported on paths `s -> t`.
    pub fn elem_matrix(&self, alg: &Algebra, x: &Elem, s: usize, t: usize) -> Matrix {
        let mut m = Matrix::zeros(alg.prime(), self.dims[t], self.dims[s]);
        for &b in alg.paths(s, t) {
            if x[b] != 0 {
                m = m.add(&self.path_matrix(alg, b).scale(x[b]));
            }
        }
        m
    }

    /// Whether every forbidden path acts as zero and the shapes fit the quiver.
    pub fn satisfies_relations(&self, alg: &Algebra) -> bool {
        let shapes = alg.arrows().iter().zip(&self.maps).all(|(a, m)| {
            m.rows() == self.dims[a.target] && m.cols() == self.dims[a.source]
        });
        shapes
            && alg.relations().iter().all(|r| {
                let mut m = Matrix::identity(alg.prime(), self.dims[alg.arrows()[r[0]].source]);
                for &a in r {
                    m = self.maps[a].mul(&m);
                }
                m.is_zero()
            })
    }

    pub fn is_module_map(&self, alg: &Algebra, target: &Representation, f: &ModuleMap) -> bool {
        self.to_diagram(alg).is_morphism(&target.to_diagram(alg), &f.maps)
    }

    /// Radical `rad M = Σ_a image(M_a)`, as column bases per vertex.
    pub fn radical(&self, alg: &Algebra) -> Vec<Matrix> {
        let p = alg.prime();
        (0..self.dims.len())
            .map(|v| {
                let mut m = Matrix::zeros(p, self.dims[v], 0);
                for (a, arrow) in alg.arrows().iter().enumerate() {
                    if arrow.target == v {
                        m = m.hstack(&self.maps[a]);
                    }
                }
                m.column_space()
            })
            .collect()
    }

    /// Multiplicities of simples in `M / rad M`.
    pub fn top_dims(&self, alg: &Algebra) -> Vec<usize> {
        self.radical(alg).iter().zip(&self.dims).map(|(r, &d)| d - r.cols()).collect()
    }

    pub fn socle_dims(&self, alg: &Algebra) -> Vec<usize> {
        let p = alg.prime();
        (0..self.dims.len())
            .map(|v| {
                let mut m = Matrix::zeros(p, 0, self.dims[v]);
                for (a, arrow) in alg.arrows().iter().enumerate() {
                    if arrow.source == v {
                        m = m.vstack(&self.maps[a]);
                    }
                }
                self.dims[v] - m.rank()
            })
            .collect()
    }

    /// Generators of `M` modulo its radical: `(vertex, vector)` pairs.
    pub fn top_generators(&self, alg: &Algebra) -> Vec<(usize, Vec<u32>)> {
        let p = alg.prime();
        let rad = self.radical(alg);
        let mut out = Vec::new();
        for v in 0..self.dims.len() {
            let comp = linalg::complement_columns(p, self.dims[v], &rad[v]);
            for c in comp.columns() {
                out.push((v, c));
            }
        }
        out
    }

    /// Element `x ∈ M_v` pushed along every path out of `v`.
    pub fn orbit_block(&self, alg: &Algebra, v: usize, x: &[u32], j: usize) -> Matrix {
        let cols: Vec<Vec<u32>> =
            alg.paths(v, j).iter().map(|&b| self.path_matrix(alg, b).mul_vec(x)).collect();
        Matrix::from_columns(alg.prime(), self.dims[j], &cols)
    }
}

pub fn hom_basis(alg: &Algebra, m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    m.to_diagram(alg)
        .hom_basis(&n.to_diagram(alg))
        .into_iter()
        .map(|maps| ModuleMap { maps })
        .collect()
}

pub fn hom_dim(alg: &Algebra, m: &Representation, n: &Representation) -> usize {
    m.to_diagram(alg).hom_dim(&n.to_diagram(alg))
}

/// Kernel of `f: M -> N` with its inclusion into `M`.
pub fn kernel(alg: &Algebra, m: &Representation, f: &ModuleMap) -> (Representation, ModuleMap) {
    let incl: Vec<Matrix> = f.maps.iter().map(|fm| fm.null_space()).collect();
    let k = Representation::from_diagram(&m.to_diagram(alg).restrict(&incl));
    (k, ModuleMap { maps: incl })
}

/// Image of `f: M -> N` with its inclusion into `N`.
pub fn image(alg: &Algebra, n: &Representation, f: &ModuleMap) -> (Representation, ModuleMap) {
    let incl: Vec<Matrix> = f.maps.iter().map(|fm| fm.column_space()).collect();
    let im = Representation::from_diagram(&n.to_diagram(alg).restrict(&incl));
    (im, ModuleMap { maps: incl })
}

/// Cokernel of `f: M -> N` with the projection from `N`.
pub fn cokernel(alg: &Algebra, n: &Representation, f: &ModuleMap) -> (Representation, ModuleMap) {
    quotient(alg, n, &f.maps)
}

/// `N / U` where `U` is spanned by the columns of `sub` at each vertex.
pub fn quotient(alg: &Algebra, n: &Representation, sub: &[Matrix]) -> (Representation, ModuleMap) {
    let (q, proj) = n.to_diagram(alg).quotient(&sub.to_vec());
    (Representation::from_diagram(&q), ModuleMap { maps: proj })
}

/// The direct sum `⊕_k P(v_k)` together with the map sending the `k`-th
/// idempotent to the `k`-th generator.
pub fn map_from_generators(
    alg: &Algebra,
    m: &Representation,
    gens: &[(usize, Vec<u32>)],
) -> (Representation, ModuleMap) {
    let p = alg.prime();
    let mut proj = Representation::zero(alg);
    for &(v, _) in gens {
        proj = proj.direct_sum(&alg.projective(v));
    }
    let maps = (0..alg.vertex_count())
        .map(|j| {
            let mut blk = Matrix::zeros(p, m.dims[j], 0);
            for (v, x) in gens {
                blk = blk.hstack(&m.orbit_block(alg, *v, x, j));
            }
            blk
        })
        .collect();
    (proj, ModuleMap { maps })
}

/// Sum of projectives indexed by `vertices`.
pub fn projective_sum(alg: &Algebra, vertices: &[usize]) -> Representation {
    vertices.iter().fold(Representation::zero(alg), |acc, &v| acc.direct_sum(&alg.projective(v)))
}

/// Minimal projective cover `P -> M`, with the generator vertices of `P`.
pub fn projective_cover(alg: &Algebra, m: &Representation) -> (Representation, ModuleMap, Vec<usize>) {
    let gens = m.top_generators(alg);
    let verts = gens.iter().map(|g| g.0).collect();
    let (p, f) = map_from_generators(alg, m, &gens);
    (p, f, verts)
}

/// `dim Ext^i(M, N)` from a minimal projective resolution of `M`.
pub fn ext_dim(alg: &Algebra, m: &Representation, n: &Representation, i: usize) -> Result<usize> {
    ext_dim_bounded(alg, m, n, i, DEFAULT_RESOLUTION_BOUND)
}

pub fn ext_dim_bounded(
    alg: &Algebra,
    m: &Representation,
    n: &Representation,
    i: usize,
    bound: usize,
) -> Result<usize> {
    assert!(i >= 1, "ext degree must be positive");
    if i + 1 > bound {
        return Err(Error::ResolutionDepthExceeded(bound));
    }
    // syzygy Ω^i M sits inside the (i-1)-th projective P_{i-1}
    let mut current = m.clone();
    let mut last: Option<(Representation, ModuleMap)> = None;
    for _ in 0..i {
        if current.is_zero() {
            return Ok(0);
        }
        let (pr, cover, _) = projective_cover(alg, &current);
        let (k, incl) = kernel(alg, &pr, &cover);
        last = Some((pr, incl));
        current = k;
    }
    let (pr, incl) = last.expect("i >= 1");
    let omega = current;
    let hom_omega = hom_dim(alg, &omega, n);
    if hom_omega == 0 {
        return Ok(0);
    }
    let restricted: Vec<Vec<u32>> = hom_basis(alg, &pr, n)
        .iter()
        .map(|f| f.after(&incl).maps.iter().flat_map(|m| m.data().to_vec()).collect())
        .collect();
    let len = omega.dims.iter().zip(&n.dims).map(|(a, b)| a * b).sum();
    let rank = if restricted.is_empty() { 0 } else { Matrix::from_columns(alg.prime(), len, &restricted).rank() };
    Ok(hom_omega - rank)
}

/// Projective dimension, or `None` beyond `bound`.
pub fn projective_dimension(alg: &Algebra, m: &Representation, bound: usize) -> Option<usize> {
    let mut current = m.clone();
    for k in 0..=bound {
        let (pr, cover, _) = projective_cover(alg, &current);
        let (ker, _) = kernel(alg, &pr, &cover);
        if ker.is_zero() {
            return Some(k);
        }
        current = ker;
    }
    None
}
