//! Reduction to minimal complexes by Gaussian elimination of unit entries.

use super::{AlgMatrix, ProjChainMap, ProjComplex};
use crate::algebra::Algebra;

/// A minimal complex with mutually inverse homotopy equivalences.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub complex: ProjComplex,
    /// `original -> complex`
    pub to_min: ProjChainMap,
    /// `complex -> original`
    pub from_min: ProjChainMap,
}

fn find_unit(alg: &Algebra, x: &ProjComplex) -> Option<(usize, usize, usize)> {
    for (k, d) in x.diffs.iter().enumerate() {
        for r in 0..d.rows {
            for c in 0..d.cols {
                let v = x.terms[k][c];
                if x.terms[k + 1][r] == v && alg.unit_coeff(d.get(r, c), v) != 0 {
                    return Some((k, r, c));
                }
            }
        }
    }
    None
}

fn all_but(n: usize, skip: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != skip).collect()
}

/// One elimination step at `d^k[r][c]`; returns the new complex and, for
/// tracking, the projection and inclusion components in degrees `k`, `k+1`.
fn eliminate(
    alg: &Algebra,
    x: &ProjComplex,
    k: usize,
    r: usize,
    c: usize,
) -> (ProjComplex, [AlgMatrix; 2], [AlgMatrix; 2]) {
    let d = &x.diffs[k];
    let v = x.terms[k][c];
    let keep = all_but(x.terms[k].len(), c);
    let lkeep = all_but(x.terms[k + 1].len(), r);
    let phi_inv = {
        let mut m = AlgMatrix::zeros(alg, 1, 1);
        m.set(0, 0, alg.local_inverse(d.get(r, c), v));
        m
    };
    let beta = d.select(&[r], &keep);
    let gamma = d.select(&lkeep, &[c]);
    let alpha = d.select(&lkeep, &keep);
    let phi_inv_beta = phi_inv.after(alg, &beta);
    let gamma_phi_inv = gamma.after(alg, &phi_inv);
    let new_d = alpha.add(alg, &gamma.after(alg, &phi_inv_beta).neg(alg));

    let mut terms = x.terms.clone();
    terms[k] = keep.iter().map(|&i| x.terms[k][i]).collect();
    terms[k + 1] = lkeep.iter().map(|&i| x.terms[k + 1][i]).collect();
    let mut diffs = x.diffs.clone();
    diffs[k] = new_d;
    if k > 0 {
        let prev = &x.diffs[k - 1];
        diffs[k - 1] = prev.select(&keep, &(0..prev.cols).collect::<Vec<_>>());
    }
    if k + 1 < x.diffs.len() {
        let next = &x.diffs[k + 1];
        diffs[k + 1] = next.select(&(0..next.rows).collect::<Vec<_>>(), &lkeep);
    }

    // projection: degree k keeps K, degree k+1 is [-γφ^{-1} | 1_L]
    let id_k = AlgMatrix::identity(alg, &x.terms[k]);
    let pi_k = id_k.select(&keep, &(0..x.terms[k].len()).collect::<Vec<_>>());
    let mut pi_k1 = AlgMatrix::zeros(alg, lkeep.len(), x.terms[k + 1].len());
    for (i, &l) in lkeep.iter().enumerate() {
        pi_k1.set(i, l, alg.unit_elem(alg.idempotent(x.terms[k + 1][l])));
        pi_k1.set(i, r, alg.neg(gamma_phi_inv.get(i, 0)));
    }
    // inclusion: degree k is (1_K ; -φ^{-1}β), degree k+1 includes L
    let mut io_k = AlgMatrix::zeros(alg, x.terms[k].len(), keep.len());
    for (j, &i) in keep.iter().enumerate() {
        io_k.set(i, j, alg.unit_elem(alg.idempotent(x.terms[k][i])));
        io_k.set(c, j, alg.neg(phi_inv_beta.get(0, j)));
    }
    let id_k1 = AlgMatrix::identity(alg, &x.terms[k + 1]);
    let io_k1 = id_k1.select(&(0..x.terms[k + 1].len()).collect::<Vec<_>>(), &lkeep);

    (ProjComplex { lo: x.lo, terms, diffs }, [pi_k, pi_k1], [io_k, io_k1])
}

pub fn minimize(alg: &Algebra, x: &ProjComplex) -> ProjComplex {
    let mut cur = x.clone();
    while let Some((k, r, c)) = find_unit(alg, &cur) {
        cur = eliminate(alg, &cur, k, r, c).0;
    }
    cur.trimmed()
}

pub fn minimize_tracked(alg: &Algebra, x: &ProjComplex) -> Minimized {
    let mut cur = x.clone();
    let mut to_min = x.identity_map(alg);
    let mut from_min = x.identity_map(alg);
    while let Some((k, r, c)) = find_unit(alg, &cur) {
        let (next, pi, io) = eliminate(alg, &cur, k, r, c);
        let q = cur.lo + k as i64;
        let mut pi_map = cur.identity_map(alg);
        pi_map.maps[k] = pi[0].clone();
        pi_map.maps[k + 1] = pi[1].clone();
        let mut io_map = next.identity_map(alg);
        io_map.maps[k] = io[0].clone();
        io_map.maps[k + 1] = io[1].clone();
        debug_assert_eq!(q, next.lo + k as i64);
        to_min = pi_map.after(alg, &to_min, x, &cur, &next);
        from_min = from_min.after(alg, &io_map, &next, &cur, x);
        cur = next;
    }
    let complex = cur.trimmed();
    let to_min = to_min.normalized(alg, x, &complex);
    let from_min = from_min.normalized(alg, &cur, x);
    let from_min = ProjChainMap {
        lo: complex.lo,
        maps: (complex.lo..=complex.hi()).map(|q| from_min.at(alg, &cur, x, q)).collect(),
    };
    Minimized { complex, to_min, from_min }
}

#[cfg(test)]
mod tests {
    use super::super::hom::{hom_k, is_null_homotopic};
    use super::super::tests::presentation_s1;
    use super::*;

    #[test]
    fn contractible_summand_disappears() {
        let alg = Algebra::linear_a(7, 2);
        let x = presentation_s1(&alg);
        let p1 = ProjComplex::projective(0, 0);
        let c = p1.cone(&alg, &p1, &p1.identity_map(&alg));
        let big = x.direct_sum(&alg, &c);
        let m = minimize(&alg, &big);
        assert_eq!(m.multiplicities(2), x.multiplicities(2));
        assert!(minimize(&alg, &c).is_zero());
        assert_eq!(minimize(&alg, &x), x);
    }

    #[test]
    fn tracked_maps_are_inverse_equivalences() {
        let alg = Algebra::linear_a(7, 3);
        let x = presentation_s1(&alg);
        let p = ProjComplex::projective(1, -1);
        let c = p.cone(&alg, &p, &p.identity_map(&alg));
        let big = c.direct_sum(&alg, &x);
        let m = minimize_tracked(&alg, &big);
        assert!(m.complex.is_minimal(&alg));
        assert!(m.to_min.is_chain_map(&alg, &big, &m.complex));
        assert!(m.from_min.is_chain_map(&alg, &m.complex, &big));
        let round = m.to_min.after(&alg, &m.from_min, &m.complex, &big, &m.complex);
        let id = m.complex.identity_map(&alg);
        let diff = round.add(&alg, &id.scale(&alg, 6), &m.complex, &m.complex);
        assert!(is_null_homotopic(&alg, &m.complex, &m.complex, &diff));
        assert_eq!(hom_k(&alg, &m.complex, &big, 0), hom_k(&alg, &x, &x, 0));
    }
}
