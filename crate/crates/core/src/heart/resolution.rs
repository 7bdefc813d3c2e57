//! Minimal projective resolutions of bounded complexes of representations.
//!
//! Built from the top degree down: with `P^{>q}` already chosen, the cycles
//! of the cone `C^q = P^{q+1} ⊕ M^q` modulo the image of `M^{q-1}` are
//! covered by projectives, which become `P^q`.

use std::collections::HashMap;

use super::{factor_through, WindowComplex};
use crate::algebra::Algebra;
use crate::complex::ModComplex;
use crate::error::{Error, Result};
use crate::homotopy::hom::hom_dim;
use crate::homotopy::{vector_to_column, AlgMatrix, ProjComplex};
use crate::repcat::{self, ModuleMap};

/// Default resolution depth for `Ext` in the extended heart: `2d + 3`.
pub fn default_depth(d: usize) -> usize {
    2 * d + 3
}

/// A quasi-isomorphism `proj -> target` given by generator images; valid in
/// degrees `>= floor` (terms below are cut off).
#[derive(Clone, Debug)]
pub struct Resolution {
    pub proj: ProjComplex,
    pub images: HashMap<(i64, usize), Vec<u32>>,
    pub floor: i64,
}

impl Resolution {
    /// The degreewise module maps `proj^q -> target^q`.
    pub fn realize(&self, alg: &Algebra, target: &ModComplex) -> Vec<ModuleMap> {
        realize_images(alg, &self.proj, target, &self.images)
    }
}

/// Module maps of a chain map out of projectives given by generator images.
pub fn realize_images(
    alg: &Algebra,
    x: &ProjComplex,
    target: &ModComplex,
    images: &HashMap<(i64, usize), Vec<u32>>,
) -> Vec<ModuleMap> {
    (x.lo..=x.hi())
        .map(|q| {
            let t = target.term_or_zero(alg, q);
            let gens: Vec<(usize, Vec<u32>)> = x
                .term(q)
                .iter()
                .enumerate()
                .map(|(c, &v)| (v, images.get(&(q, c)).cloned().unwrap_or_else(|| vec![0; t.dims()[v]])))
                .collect();
            repcat::map_from_generators(alg, &t, &gens).1
        })
        .collect()
}

/// Minimal projective resolution of `m`, computed down to degree `floor`.
pub fn resolve(alg: &Algebra, m: &ModComplex, floor: i64) -> Resolution {
    let p = alg.prime();
    let m = m.trimmed();
    if m.terms.is_empty() {
        return Resolution { proj: ProjComplex::zero(), images: HashMap::new(), floor };
    }
    let top = m.hi();
    // terms[k] sits in degree top - k
    let mut terms: Vec<Vec<usize>> = Vec::new();
    let mut diffs_down: Vec<AlgMatrix> = Vec::new();
    let mut images: HashMap<(i64, usize), Vec<u32>> = HashMap::new();
    let mut q = top;
    while q >= floor {
        let above: Vec<usize> = terms.last().cloned().unwrap_or_default();
        let rp = repcat::projective_sum(alg, &above);
        let mq = m.term_or_zero(alg, q);
        let c = rp.direct_sum(&mq);
        // d_C = [[-∂_P, 0], [φ, ∂_M]]
        let two_above: Vec<usize> = if terms.len() >= 2 { terms[terms.len() - 2].clone() } else { vec![] };
        let rp2 = repcat::projective_sum(alg, &two_above);
        let m1 = m.term_or_zero(alg, q + 1);
        let dp = if terms.len() >= 2 {
            diffs_down.last().unwrap().realize(alg, &above, &two_above).neg()
        } else {
            ModuleMap::zero(p, rp.dims(), rp2.dims())
        };
        let phi = if above.is_empty() {
            ModuleMap::zero(p, rp.dims(), m1.dims())
        } else {
            let gens: Vec<(usize, Vec<u32>)> =
                above.iter().enumerate().map(|(i, &v)| (v, images[&(q + 1, i)].clone())).collect();
            repcat::map_from_generators(alg, &m1, &gens).1
        };
        let dm = m.diff_or_zero(alg, q);
        let top_row = dp.hstack(&ModuleMap::zero(p, mq.dims(), rp2.dims()));
        let bottom_row = phi.hstack(&dm);
        let dc = top_row.vstack(&bottom_row);
        let (z, incl) = repcat::kernel(alg, &c, &dc);
        let din = m.diff_or_zero(alg, q - 1);
        let into_c = ModuleMap::zero(p, &m.term_dims(alg, q - 1), rp.dims()).vstack(&din);
        let b = factor_through(p, &incl, &into_c);
        let (h, proj) = repcat::quotient(alg, &z, &b.maps);
        if h.is_zero() && q < m.lo {
            break;
        }
        let gens = h.top_generators(alg);
        let verts: Vec<usize> = gens.iter().map(|g| g.0).collect();
        let mut d = AlgMatrix::zeros(alg, above.len(), verts.len());
        for (i, (v, hv)) in gens.iter().enumerate() {
            let zv = proj.maps[*v].solve_vec(hv).expect("projection is onto");
            let cv = incl.maps[*v].mul_vec(&zv);
            let split = rp.dims()[*v];
            let x: Vec<u32> = cv[..split].iter().map(|&a| crate::linalg::neg(p, a)).collect();
            for (r, e) in vector_to_column(alg, &above, *v, &x).into_iter().enumerate() {
                d.set(r, i, e);
            }
            images.insert((q, i), cv[split..].to_vec());
        }
        if !terms.is_empty() {
            diffs_down.push(d);
        }
        terms.push(verts);
        q -= 1;
    }
    let lo = top - terms.len() as i64 + 1;
    terms.reverse();
    diffs_down.reverse();
    let proj = ProjComplex::new(lo, terms, diffs_down);
    let proj = if proj.is_zero() { ProjComplex::zero() } else { proj };
    Resolution { proj, images, floor }
}

/// Minimal `P`-presentation: the minimal resolution cut off below `-d`.
pub fn p_presentation(alg: &Algebra, m: &WindowComplex) -> ProjComplex {
    resolve(alg, &m.cx, -(m.d as i64)).proj.trimmed()
}

/// Drops the stalk summands `P(i)[d]`, which vanish in the heart.
pub fn reduced_presentation(alg: &Algebra, m: &WindowComplex) -> ProjComplex {
    let pres = p_presentation(alg, m);
    drop_bottom_stalks(alg, &pres, -(m.d as i64))
}

/// Removes summands in degree `bottom` whose outgoing differential vanishes.
pub fn drop_bottom_stalks(alg: &Algebra, x: &ProjComplex, bottom: i64) -> ProjComplex {
    if x.is_zero() || x.lo != bottom {
        return x.clone();
    }
    let d = x.diff(alg, bottom);
    let keep: Vec<usize> = (0..x.term(bottom).len()).filter(|&c| (0..d.rows).any(|r| !Algebra::is_zero(d.get(r, c)))).collect();
    if keep.len() == x.term(bottom).len() {
        return x.clone();
    }
    let mut terms = x.terms.clone();
    terms[0] = keep.iter().map(|&c| x.terms[0][c]).collect();
    let mut diffs = x.diffs.clone();
    if !diffs.is_empty() {
        let rows: Vec<usize> = (0..d.rows).collect();
        diffs[0] = d.select(&rows, &keep);
    }
    let out = ProjComplex::new(x.lo, terms, diffs).trimmed();
    if out.is_zero() { ProjComplex::zero() } else { out }
}

/// `dim Hom_D(M, N[i])` through a resolution of depth `depth`, which must be
/// at least `d + i`.
pub fn e_ext(alg: &Algebra, m: &WindowComplex, n: &WindowComplex, i: i64, depth: usize) -> Result<usize> {
    let needed = m.d as i64 + i;
    if (depth as i64) < needed {
        return Err(Error::ResolutionDepthExceeded(needed.max(0) as usize));
    }
    let res = resolve(alg, &m.cx, -(depth as i64));
    Ok(hom_dim(alg, &res.proj, &n.cx.shift(i)))
}

/// Same as [`e_ext`] with a precomputed resolution of `m`.
pub fn e_ext_with(alg: &Algebra, res: &Resolution, n: &WindowComplex, i: i64) -> Result<usize> {
    let needed_floor = 1 - n.d as i64 - i - 1;
    if res.floor > needed_floor && !resolution_is_complete(res) {
        return Err(Error::ResolutionDepthExceeded((-needed_floor).max(0) as usize));
    }
    Ok(hom_dim(alg, &res.proj, &n.cx.shift(i)))
}

/// True when the resolution stopped before reaching its floor.
pub fn resolution_is_complete(res: &Resolution) -> bool {
    res.proj.is_zero() || res.proj.lo > res.floor
}

/// Checks that `proj -> target` is a chain map inducing isomorphisms on
/// homology in degrees above `floor`.
pub fn is_quasi_iso_above(alg: &Algebra, res: &Resolution, target: &ModComplex) -> bool {
    let maps = res.realize(alg, target);
    let pr = res.proj.realize(alg);
    if res.proj.is_zero() {
        return target.is_acyclic(alg);
    }
    let p = alg.prime();
    for (k, q) in (res.proj.lo..=res.proj.hi()).enumerate() {
        let f = &maps[k];
        let lhs = target.diff_or_zero(alg, q).after(f);
        let rhs = if q < res.proj.hi() { maps[k + 1].after(&pr.diff_or_zero(alg, q)) } else { ModuleMap::zero(p, &pr.term_dims(alg, q), &target.term_dims(alg, q + 1)) };
        if lhs != rhs {
            return false;
        }
    }
    // the cone is acyclic above floor + 1
    let lo = res.floor.max(res.proj.lo.min(target.lo)) + 1;
    let cone = mapping_cone(alg, &pr, target, &maps, res.proj.lo);
    (lo..=cone.hi().max(lo)).all(|q| cone.homology_at(alg, q).is_zero())
}

/// Cone of a degreewise map `f: a -> b` of complexes (`f[k]` in degree `f_lo + k`).
pub fn mapping_cone(alg: &Algebra, a: &ModComplex, b: &ModComplex, f: &[ModuleMap], f_lo: i64) -> ModComplex {
    let p = alg.prime();
    let lo = (a.lo - 1).min(b.lo);
    let hi = (a.hi() - 1).max(b.hi());
    let fq = |q: i64| -> ModuleMap {
        let k = q - f_lo;
        if k >= 0 && (k as usize) < f.len() {
            f[k as usize].clone()
        } else {
            ModuleMap::zero(p, &a.term_dims(alg, q), &b.term_dims(alg, q))
        }
    };
    let terms = (lo..=hi).map(|q| a.term_or_zero(alg, q + 1).direct_sum(&b.term_or_zero(alg, q))).collect();
    let diffs = (lo..hi)
        .map(|q| {
            let da = a.diff_or_zero(alg, q + 1).neg();
            let db = b.diff_or_zero(alg, q);
            let top = da.hstack(&ModuleMap::zero(p, &b.term_dims(alg, q), &a.term_dims(alg, q + 2)));
            let bottom = fq(q + 1).hstack(&db);
            top.vstack(&bottom)
        })
        .collect();
    ModComplex::new(lo, terms, diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heart::truncate_window;
    use crate::homotopy::minimize::minimize;
    use crate::homotopy::iso::iso_k;

    #[test]
    fn resolution_of_simple() {
        let alg = Algebra::linear_a(7, 2);
        let s = ModComplex::stalk(alg.simple(0), 0);
        let r = resolve(&alg, &s, -5);
        assert_eq!(r.proj.lo, -1);
        assert_eq!(r.proj.terms, vec![vec![1], vec![0]]);
        assert!(r.proj.is_minimal(&alg));
        assert!(is_quasi_iso_above(&alg, &r, &s));
    }

    #[test]
    fn resolution_of_rad2_simple_is_cut() {
        let alg = Algebra::linear_rad2(7, 3);
        let s = ModComplex::stalk(alg.simple(0), 0);
        let r = resolve(&alg, &s, -1);
        assert_eq!(r.proj.terms, vec![vec![1], vec![0]]);
        let full = resolve(&alg, &s, -5);
        assert_eq!(full.proj.terms, vec![vec![2], vec![1], vec![0]]);
        assert!(is_quasi_iso_above(&alg, &full, &s));
    }

    #[test]
    fn presentation_roundtrip() {
        let alg = Algebra::linear_a(7, 3);
        for d in 1..=3usize {
            for (j, m) in [alg.simple(1), alg.injective(0), alg.projective(2)].into_iter().enumerate() {
                let w = WindowComplex::module(&alg, d, m, j.min(d - 1)).unwrap();
                let pres = p_presentation(&alg, &w);
                assert!(pres.within(-(d as i64), 0));
                assert!(pres.is_minimal(&alg));
                let back = truncate_window(&alg, &pres, d).unwrap();
                assert_eq!(back.homology_dims(&alg), w.homology_dims(&alg));
                let again = p_presentation(&alg, &back);
                assert!(iso_k(&alg, &minimize(&alg, &pres), &again, 50, 3).is_yes());
            }
        }
    }

    #[test]
    fn ext_in_heart() {
        let alg = Algebra::linear_a(7, 2);
        let d = 2;
        let s1 = WindowComplex::module(&alg, d, alg.simple(0), 0).unwrap();
        let s2 = WindowComplex::module(&alg, d, alg.simple(1), 0).unwrap();
        assert_eq!(e_ext(&alg, &s1, &s2, 1, default_depth(d)).unwrap(), 1);
        assert_eq!(e_ext(&alg, &s2, &s1, 1, default_depth(d)).unwrap(), 0);
        assert_eq!(e_ext(&alg, &s1, &s1, 0, default_depth(d)).unwrap(), 1);
        let s2_shift = WindowComplex::module(&alg, d, alg.simple(1), 1).unwrap();
        assert_eq!(e_ext(&alg, &s1, &s2_shift, 0, default_depth(d)).unwrap(), 1);
        assert_eq!(e_ext(&alg, &s2_shift, &s1, 0, default_depth(d)).unwrap(), 0);
        assert!(e_ext(&alg, &s1, &s2, 3, 2).is_err());
    }

    #[test]
    fn bottom_stalks_dropped() {
        let alg = Algebra::linear_a(7, 2);
        let x = ProjComplex::projective(0, -1).direct_sum(&alg, &ProjComplex::projective(1, 0));
        let r = drop_bottom_stalks(&alg, &x, -1);
        assert_eq!(r, ProjComplex::projective(1, 0));
    }
}
