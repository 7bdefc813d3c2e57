//! Torsion and torsion-free classes attached to a silting complex.

use super::WindowComplex;
use crate::algebra::Algebra;
use crate::homotopy::hom::hom_dim;
use crate::homotopy::ProjComplex;

/// `X ∈ T(S)`: `Hom(S, X[i]) = 0` for `i = 1..=d`; the case `i = d + 1`
/// is checked too.
pub fn in_torsion(alg: &Algebra, s: &[ProjComplex], x: &WindowComplex) -> bool {
    let d = x.d as i64;
    s.iter().all(|sj| (1..=d + 1).all(|i| hom_dim(alg, sj, &x.shifted(i)) == 0))
}

/// `X ∈ F(S)`: `Hom(S, X[i]) = 0` for `i = -d+1..=0`.
pub fn in_torsion_free(alg: &Algebra, s: &[ProjComplex], x: &WindowComplex) -> bool {
    let d = x.d as i64;
    s.iter().all(|sj| (1 - d..=0).all(|i| hom_dim(alg, sj, &x.shifted(i)) == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::AlgMatrix;

    #[test]
    fn classes_of_regular_and_shifted_silting() {
        let alg = Algebra::linear_a(7, 2);
        let a = vec![ProjComplex::projective(0, 0), ProjComplex::projective(1, 0)];
        let s1 = WindowComplex::module(&alg, 1, alg.simple(0), 0).unwrap();
        assert!(in_torsion(&alg, &a, &s1));
        assert!(!in_torsion_free(&alg, &a, &s1));
        let shifted = vec![ProjComplex::projective(0, -1), ProjComplex::projective(1, -1)];
        assert!(!in_torsion(&alg, &shifted, &s1));
        assert!(in_torsion_free(&alg, &shifted, &s1));
    }

    #[test]
    fn simple_silting_splits_simples() {
        // S = P(1) ⊕ (P(1) -> P(0)); T(S) = add{S(0), P(0)}, F(S) = add S(1)
        let alg = Algebra::linear_a(7, 2);
        let mut d = AlgMatrix::zeros(&alg, 1, 1);
        d.set(0, 0, alg.unit_elem(alg.arrow_basis(0)));
        let pres = ProjComplex::new(-1, vec![vec![1], vec![0]], vec![d]);
        let s = vec![ProjComplex::projective(0, 0), pres];
        let s0 = WindowComplex::module(&alg, 1, alg.simple(0), 0).unwrap();
        let s1 = WindowComplex::module(&alg, 1, alg.simple(1), 0).unwrap();
        assert!(in_torsion(&alg, &s, &s0));
        assert!(!in_torsion(&alg, &s, &s1));
        assert!(in_torsion_free(&alg, &s, &s1));
    }
}
