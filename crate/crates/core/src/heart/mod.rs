//! The extended heart `d-H`: complexes with homology in degrees `[-d+1, 0]`.

pub mod classes;
pub mod fac;
pub mod resolution;

use crate::algebra::Algebra;
use crate::complex::ModComplex;
use crate::error::{Error, Result};
use crate::homotopy::ProjComplex;
use crate::linalg::Matrix;
use crate::repcat::{self, ModuleMap, Representation};

/// A complex of representations stored on exactly the degrees `-d+1..=0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowComplex {
    pub d: usize,
    pub cx: ModComplex,
}

impl WindowComplex {
    pub fn lo(d: usize) -> i64 {
        1 - d as i64
    }

    /// Accepts complexes whose terms lie in the window.
    pub fn new(alg: &Algebra, d: usize, cx: ModComplex) -> Result<Self> {
        let lo = WindowComplex::lo(d);
        let t = cx.trimmed();
        if !t.terms.is_empty() && (t.lo < lo || t.hi() > 0) {
            return Err(Error::WindowViolation { lo, hi: 0 });
        }
        Ok(WindowComplex { d, cx: cx.padded(alg, lo, 0).trimmed().padded(alg, lo, 0) })
    }

    pub fn zero(alg: &Algebra, d: usize) -> Self {
        WindowComplex::new(alg, d, ModComplex::zero(0)).unwrap()
    }

    /// The module `m` placed in degree `-j`, i.e. `m[j]`.
    pub fn module(alg: &Algebra, d: usize, m: Representation, j: usize) -> Result<Self> {
        WindowComplex::new(alg, d, ModComplex::stalk(m, -(j as i64)))
    }

    pub fn homology_at(&self, alg: &Algebra, q: i64) -> Representation {
        self.cx.homology_at(alg, q)
    }

    pub fn homology_dims(&self, alg: &Algebra) -> Vec<Vec<usize>> {
        (WindowComplex::lo(self.d)..=0).map(|q| self.cx.homology_dims(alg, q)).collect()
    }

    /// Zero in the derived category.
    pub fn is_zero_object(&self, alg: &Algebra) -> bool {
        self.cx.is_acyclic(alg)
    }

    pub fn total_dim(&self) -> usize {
        self.cx.total_dim()
    }

    pub fn direct_sum(&self, alg: &Algebra, other: &WindowComplex) -> WindowComplex {
        WindowComplex::new(alg, self.d, self.cx.direct_sum(alg, &other.cx)).expect("sum stays in the window")
    }

    /// `self[i]` as a plain complex.
    pub fn shifted(&self, i: i64) -> ModComplex {
        self.cx.shift(i)
    }
}

/// Solves `incl * x = m` column-wise per vertex.
pub(crate) fn factor_through(p: u32, incl: &ModuleMap, m: &ModuleMap) -> ModuleMap {
    let maps = incl
        .maps
        .iter()
        .zip(&m.maps)
        .map(|(i, dm)| {
            if i.cols() == 0 || dm.cols() == 0 {
                Matrix::zeros(p, i.cols(), dm.cols())
            } else {
                i.solve_right(dm).expect("map lands in the subobject")
            }
        })
        .collect();
    ModuleMap { maps }
}

/// `τ^{≤hi}`: the term in degree `hi` becomes its cycles.
fn truncate_above(alg: &Algebra, c: &ModComplex, hi: i64) -> ModComplex {
    let p = alg.prime();
    if c.terms.is_empty() || c.lo > hi {
        return ModComplex::zero(c.lo);
    }
    let c = c.padded(alg, c.lo, hi);
    let k = (hi - c.lo) as usize;
    let mut terms = c.terms[..=k].to_vec();
    let mut diffs = c.diffs[..k].to_vec();
    let (z, incl) = repcat::kernel(alg, &terms[k], &c.diff_or_zero(alg, hi));
    if k > 0 {
        diffs[k - 1] = factor_through(p, &incl, &diffs[k - 1]);
    }
    terms[k] = z;
    ModComplex::new(c.lo, terms, diffs)
}

/// `τ^{≥lo}`: the term in degree `lo` becomes the cokernel of the incoming
/// differential.
fn truncate_below(alg: &Algebra, c: &ModComplex, lo: i64) -> ModComplex {
    let p = alg.prime();
    if c.terms.is_empty() || c.hi() < lo {
        return ModComplex::zero(lo);
    }
    let c = c.padded(alg, lo, c.hi());
    let k = (lo - c.lo) as usize;
    let mut terms = c.terms[k..].to_vec();
    let mut diffs = c.diffs[k..].to_vec();
    let (q, proj) = repcat::cokernel(alg, &terms[0], &c.diff_or_zero(alg, lo - 1));
    if !diffs.is_empty() {
        let maps = diffs[0]
            .maps
            .iter()
            .zip(&proj.maps)
            .map(|(dm, pm)| {
                if pm.rows() == 0 || pm.cols() == 0 {
                    Matrix::zeros(p, dm.rows(), pm.rows())
                } else {
                    dm.mul(&pm.solve_right(&Matrix::identity(p, pm.rows())).expect("projection is onto"))
                }
            })
            .collect();
        diffs[0] = ModuleMap { maps };
    }
    terms[0] = q;
    ModComplex::new(lo, terms, diffs)
}

/// Smart truncation into `[-d+1, 0]`.  Homology above degree 0 and in
/// degrees `floor..-d+1` must vanish.
pub fn to_window(alg: &Algebra, c: &ModComplex, d: usize, floor: i64) -> Result<WindowComplex> {
    let lo = WindowComplex::lo(d);
    let c = c.trimmed();
    if !c.terms.is_empty() {
        for q in (c.lo..=c.hi()).rev() {
            if (q > 0 || (q < lo && q >= floor)) && !c.homology_at(alg, q).is_zero() {
                return Err(Error::HomologyOutsideWindow(q));
            }
        }
    }
    let t = truncate_below(alg, &truncate_above(alg, &c, 0), lo);
    WindowComplex::new(alg, d, t)
}

/// `H^{[-d+1, 0]}(S)` for `S` with terms in `[-d, 0]`.
pub fn truncate_window(alg: &Algebra, s: &ProjComplex, d: usize) -> Result<WindowComplex> {
    if !s.within(-(d as i64), 0) {
        return Err(Error::WindowViolation { lo: -(d as i64), hi: 0 });
    }
    to_window(alg, &s.realize(alg), d, WindowComplex::lo(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::AlgMatrix;

    fn presentation_s1(alg: &Algebra) -> ProjComplex {
        let mut d = AlgMatrix::zeros(alg, 1, 1);
        d.set(0, 0, alg.unit_elem(alg.arrow_basis(0)));
        ProjComplex::new(-1, vec![vec![1], vec![0]], vec![d])
    }

    #[test]
    fn truncations() {
        let alg = Algebra::linear_a(7, 2);
        let w = truncate_window(&alg, &presentation_s1(&alg), 1).unwrap();
        assert_eq!(w.homology_dims(&alg), vec![vec![1, 0]]);
        assert_eq!(w.cx.terms[0].dims(), &[1, 0]);
        let a = truncate_window(&alg, &ProjComplex::regular(&alg), 1).unwrap();
        assert_eq!(a.cx.terms[0], alg.regular());
        let p2 = ProjComplex::projective(1, -1);
        assert!(truncate_window(&alg, &p2, 1).unwrap().is_zero_object(&alg));
        assert!(truncate_window(&alg, &ProjComplex::projective(1, -2), 1).is_err());
    }

    #[test]
    fn wider_window_keeps_both_degrees() {
        let alg = Algebra::linear_a(7, 2);
        let w = truncate_window(&alg, &presentation_s1(&alg), 2).unwrap();
        assert_eq!(w.homology_dims(&alg), vec![vec![0, 0], vec![1, 0]]);
        assert!(w.cx.is_complex(&alg));
    }

    #[test]
    fn homology_outside_window() {
        let alg = Algebra::linear_a(7, 2);
        let c = ModComplex::stalk(alg.simple(0), 1);
        assert_eq!(to_window(&alg, &c, 1, -5), Err(Error::HomologyOutsideWindow(1)));
        let w = WindowComplex::module(&alg, 2, alg.simple(1), 1).unwrap();
        assert_eq!(to_window(&alg, &w.cx, 2, -5).unwrap(), w);
    }
}
