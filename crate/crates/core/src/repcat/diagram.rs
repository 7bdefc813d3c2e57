//! Finite diagrams of vector spaces: nodes carry dimensions, edges carry
//! structure matrices.  Both representations and complexes of
//! representations flatten into this shape, so morphism spaces and
//! decompositions are computed once here.

use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub map: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub p: u32,
    pub dims: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// A morphism of diagrams: one matrix per node.
pub type NodeMaps = Vec<Matrix>;

impl Diagram {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn identity(&self) -> NodeMaps {
        self.dims.iter().map(|&n| Matrix::identity(self.p, n)).collect()
    }

    pub fn zero_map(&self, other: &Diagram) -> NodeMaps {
        self.dims.iter().zip(&other.dims).map(|(&s, &t)| Matrix::zeros(self.p, t, s)).collect()
    }

    /// Linear system whose kernel is the space of morphisms `self -> other`.
    /// Unknowns are the node matrices flattened row-major, node by node.
    fn hom_system(&self, other: &Diagram) -> (Matrix, Vec<usize>) {
        assert_eq!(self.dims.len(), other.dims.len(), "diagram shapes differ");
        assert_eq!(self.edges.len(), other.edges.len(), "diagram shapes differ");
        let p = self.p;
        let mut offsets = Vec::with_capacity(self.dims.len() + 1);
        let mut total = 0;
        for (s, t) in self.dims.iter().zip(&other.dims) {
            offsets.push(total);
            total += s * t;
        }
        offsets.push(total);
        let neqs: usize = self.edges.iter().map(|e| other.dims[e.to] * self.dims[e.from]).sum();
        let mut sys = Matrix::zeros(p, neqs, total);
        let mut row = 0;
        for (ex, ey) in self.edges.iter().zip(&other.edges) {
            debug_assert_eq!((ex.from, ex.to), (ey.from, ey.to));
            let (s, t) = (ex.from, ex.to);
            let (xs, xt) = (self.dims[s], self.dims[t]);
            let (ys, yt) = (other.dims[s], other.dims[t]);
            // Y_e f_s - f_t X_e = 0, entry (r, c) with r < yt, c < xs
            for r in 0..yt {
                for c in 0..xs {
                    for k in 0..ys {
                        let v = ey.map.get(r, k);
                        if v != 0 {
                            let col = offsets[s] + k * xs + c;
                            let cur = sys.get(row, col);
                            sys.set(row, col, crate::linalg::add(p, cur, v));
                        }
                    }
                    for k in 0..xt {
                        let v = ex.map.get(k, c);
                        if v != 0 {
                            let col = offsets[t] + r * xt + k;
                            let cur = sys.get(row, col);
                            sys.set(row, col, crate::linalg::sub(p, cur, v));
                        }
                    }
                    row += 1;
                }
            }
        }
        (sys, offsets)
    }

    fn unflatten(&self, other: &Diagram, offsets: &[usize], v: &[u32]) -> NodeMaps {
        (0..self.dims.len())
            .map(|n| {
                let (c, r) = (self.dims[n], other.dims[n]);
                Matrix::from_vec(self.p, r, c, v[offsets[n]..offsets[n] + r * c].to_vec())
            })
            .collect()
    }

    /// Basis of the morphism space `self -> other`, in a fixed order.
    pub fn hom_basis(&self, other: &Diagram) -> Vec<NodeMaps> {
        let (sys, offsets) = self.hom_system(other);
        let ker = sys.null_space();
        (0..ker.cols()).map(|j| self.unflatten(other, &offsets, &ker.col(j))).collect()
    }

    pub fn hom_dim(&self, other: &Diagram) -> usize {
        let (sys, _) = self.hom_system(other);
        sys.cols() - sys.rank()
    }

    /// Whether the node maps commute with all structure maps.
    pub fn is_morphism(&self, other: &Diagram, f: &NodeMaps) -> bool {
        self.edges.iter().zip(&other.edges).all(|(ex, ey)| {
            ey.map.mul(&f[ex.from]) == f[ex.to].mul(&ex.map)
        })
    }

    /// Subdiagram spanned at each node by the columns of `incl`, which must
    /// span a subobject.  The returned diagram is expressed in those bases.
    pub fn restrict(&self, incl: &NodeMaps) -> Diagram {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let image = e.map.mul(&incl[e.from]);
                let m = if incl[e.to].cols() == 0 || image.cols() == 0 {
                    Matrix::zeros(self.p, incl[e.to].cols(), image.cols())
                } else {
                    incl[e.to].solve_right(&image).expect("columns span a subdiagram")
                };
                Edge { from: e.from, to: e.to, map: m }
            })
            .collect();
        Diagram { p: self.p, dims: incl.iter().map(|m| m.cols()).collect(), edges }
    }

    /// Quotient by the subdiagram spanned by `sub`; returns the quotient
    /// diagram and the projection maps.
    pub fn quotient(&self, sub: &NodeMaps) -> (Diagram, NodeMaps) {
        let p = self.p;
        let mut proj = Vec::with_capacity(self.dims.len());
        let mut sections = Vec::with_capacity(self.dims.len());
        for (n, s) in sub.iter().enumerate() {
            let dim = self.dims[n];
            let s = if s.cols() == 0 { Matrix::zeros(p, dim, 0) } else { s.column_space() };
            let comp = crate::linalg::complement_columns(p, dim, &s);
            // coordinates in basis [s | comp]; projection keeps the comp part
            let full = s.hstack(&comp);
            let inv = full.inverse().expect("basis of the ambient space");
            proj.push(inv.submatrix(s.cols()..dim, 0..dim));
            sections.push(comp);
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { from: e.from, to: e.to, map: proj[e.to].mul(&e.map).mul(&sections[e.from]) })
            .collect();
        let dims = proj.iter().map(|m| m.rows()).collect();
        (Diagram { p, dims, edges }, proj)
    }
}

pub fn compose(g: &NodeMaps, f: &NodeMaps) -> NodeMaps {
    g.iter().zip(f).map(|(a, b)| a.mul(b)).collect()
}

pub fn add_maps(f: &NodeMaps, g: &NodeMaps) -> NodeMaps {
    f.iter().zip(g).map(|(a, b)| a.add(b)).collect()
}

pub fn scale_maps(f: &NodeMaps, s: u32) -> NodeMaps {
    f.iter().map(|a| a.scale(s)).collect()
}

pub fn is_iso(f: &NodeMaps) -> bool {
    f.iter().all(|m| m.is_invertible())
}

pub fn is_zero_maps(f: &NodeMaps) -> bool {
    f.iter().all(|m| m.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(p: u32, a: usize, b: usize, m: Matrix) -> Diagram {
        Diagram { p, dims: vec![a, b], edges: vec![Edge { from: 0, to: 1, map: m }] }
    }

    #[test]
    fn hom_of_identity_edge() {
        let x = line(7, 1, 1, Matrix::identity(7, 1));
        let s = line(7, 0, 1, Matrix::zeros(7, 1, 0));
        assert_eq!(x.hom_dim(&x), 1);
        assert_eq!(s.hom_dim(&x), 1);
        assert_eq!(x.hom_dim(&s), 0);
        for f in x.hom_basis(&x) {
            assert!(x.is_morphism(&x, &f));
        }
    }

    #[test]
    fn quotient_dimensions() {
        let x = line(7, 1, 1, Matrix::identity(7, 1));
        let sub = vec![Matrix::zeros(7, 1, 0), Matrix::identity(7, 1)];
        let (q, proj) = x.quotient(&sub);
        assert_eq!(q.dims, vec![1, 0]);
        assert!(x.is_morphism(&q, &proj));
    }
}
