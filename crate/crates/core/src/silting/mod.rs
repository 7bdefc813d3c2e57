//! Silting complexes in `K^{[-d,0]}(proj A)`: recognition, comparison and
//! enumeration.

pub mod enumerate;
pub mod registry;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::homotopy::decompose::decompose_k;
use crate::homotopy::hom::{hom_k, is_null_homotopic, right_approximation};
use crate::homotopy::iso::{iso_k, DEFAULT_TRIALS};
use crate::homotopy::minimize::minimize_tracked;
use crate::homotopy::{AlgMatrix, ProjChainMap, ProjComplex};

/// A basic silting candidate: pairwise non-isomorphic indecomposable
/// minimal summands inside the window `[-d, 0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiltingComplex {
    pub d: usize,
    pub summands: Vec<ProjComplex>,
}

/// Why a candidate failed [`is_silting`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SiltingVerdict {
    Silting,
    OutsideWindow,
    /// `Hom(S_a, S_b[i]) != 0` for some `i > 0`.
    NotPresilting { a: usize, b: usize, i: i64 },
    /// The classes in `K_0` do not have full rank.
    RankDeficient { rank: usize },
    /// `P(v)[d]` is not reached from the summands.
    NotGenerating { vertex: usize },
}

impl SiltingComplex {
    pub fn new(d: usize, summands: Vec<ProjComplex>) -> Self {
        let mut s = SiltingComplex { d, summands };
        s.sort();
        s
    }

    /// The regular module `A` (degree 0).
    pub fn regular(alg: &Algebra, d: usize) -> Self {
        SiltingComplex::new(d, (0..alg.vertex_count()).map(|v| ProjComplex::projective(v, 0)).collect())
    }

    /// `A[d]`.
    pub fn shifted_regular(alg: &Algebra, d: usize) -> Self {
        SiltingComplex::new(d, (0..alg.vertex_count()).map(|v| ProjComplex::projective(v, -(d as i64))).collect())
    }

    pub fn sort(&mut self) {
        let n = self.summands.iter().flat_map(|s| s.terms.iter().flatten()).max().map_or(0, |&m| m + 1);
        self.summands.sort_by_key(|s| (s.k0(n), s.lo, s.terms.clone()));
    }

    /// All summands as one complex.
    pub fn total(&self, alg: &Algebra) -> ProjComplex {
        ProjComplex::direct_sum_all(alg, &self.summands)
    }

    pub fn k0_matrix(&self, alg: &Algebra) -> Vec<Vec<i64>> {
        self.summands.iter().map(|s| s.k0(alg.vertex_count())).collect()
    }

    pub fn in_window(&self) -> bool {
        self.summands.iter().all(|s| s.within(-(self.d as i64), 0))
    }
}

/// Rank over `Q` by fraction-free elimination.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(pr) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pr);
        for r in rank + 1..m.len() {
            for k in c + 1..cols {
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn integer_determinant(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev: i128 = 1;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&r| m[r][c] != 0) else { return 0 };
        if pr != c {
            m.swap(c, pr);
            sign = -sign;
        }
        for r in c + 1..n {
            for k in c + 1..n {
                m[r][k] = (m[c][c] * m[r][k] - m[r][c] * m[c][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    if n == 0 {
        return 1;
    }
    (sign * m[n - 1][n - 1]) as i64
}

/// First pair violating `Hom(X, Y[i]) = 0` for `i = 1..=d`, if any.
pub fn presilting_violation(alg: &Algebra, summands: &[ProjComplex], d: usize) -> Option<(usize, usize, i64)> {
    for (a, x) in summands.iter().enumerate() {
        for (b, y) in summands.iter().enumerate() {
            for i in 1..=d as i64 {
                if hom_k(alg, x, y, i) != 0 {
                    return Some((a, b, i));
                }
            }
        }
    }
    None
}

pub fn is_presilting(alg: &Algebra, summands: &[ProjComplex], d: usize) -> bool {
    presilting_violation(alg, summands, d).is_none()
}

/// Inclusion `V -> cone(f: G -> V)`.
fn cone_inclusion(alg: &Algebra, v: &ProjComplex, g: &ProjComplex, cone_lo: i64, cone: &ProjComplex) -> ProjChainMap {
    let maps = (v.lo..=v.hi())
        .map(|q| {
            let top = g.term(q + 1).len();
            let mut m = AlgMatrix::zeros(alg, cone.term(q).len(), v.term(q).len());
            debug_assert!(cone_lo <= q);
            m.paste(top, 0, &AlgMatrix::identity(alg, v.term(q)));
            m
        })
        .collect();
    ProjChainMap { lo: v.lo, maps }
}

/// Whether `P(v)[d]` lies in `thick(S)`: approximate it successively by
/// `add S, add S[1], ..., add S[d]`, passing to cones, and test whether the
/// composite map out of `P(v)[d]` is null-homotopic.
pub fn reaches_shifted_projective(alg: &Algebra, summands: &[ProjComplex], d: usize, v: usize) -> bool {
    let v0 = ProjComplex::projective(v, -(d as i64));
    let mut cur = v0.clone();
    let mut h = v0.identity_map(alg);
    for k in 0..=d as i64 {
        if cur.is_zero() {
            return true;
        }
        let gens: Vec<ProjComplex> = summands.iter().map(|s| s.shift(alg, k)).collect();
        let (g, f) = right_approximation(alg, &gens, &cur);
        if g.is_zero() {
            continue;
        }
        // cone with V in the lower block; keep the untrimmed range for the inclusion
        let cone = g.cone(alg, &cur, &f);
        let incl = cone_inclusion(alg, &cur, &g, cone.lo, &cone);
        let min = minimize_tracked(alg, &cone);
        let step = min.to_min.after(alg, &incl, &cur, &cone, &min.complex);
        h = step.after(alg, &h, &v0, &cur, &min.complex);
        cur = min.complex;
    }
    cur.is_zero() || is_null_homotopic(alg, &v0, &cur, &h)
}

/// Full silting test: window, presilting, rank of `K_0` classes, and
/// generation of every `P(v)[d]`.
pub fn is_silting(alg: &Algebra, s: &SiltingComplex) -> SiltingVerdict {
    if !s.in_window() {
        return SiltingVerdict::OutsideWindow;
    }
    if let Some((a, b, i)) = presilting_violation(alg, &s.summands, s.d) {
        return SiltingVerdict::NotPresilting { a, b, i };
    }
    let rank = integer_rank(&s.k0_matrix(alg));
    if rank < alg.vertex_count() {
        return SiltingVerdict::RankDeficient { rank };
    }
    for v in 0..alg.vertex_count() {
        if !reaches_shifted_projective(alg, &s.summands, s.d, v) {
            return SiltingVerdict::NotGenerating { vertex: v };
        }
    }
    SiltingVerdict::Silting
}

/// Splits arbitrary complexes into a basic list of indecomposable summands.
pub fn basic_summands(alg: &Algebra, parts: &[ProjComplex], seed: u64) -> Result<Vec<ProjComplex>> {
    let mut out: Vec<ProjComplex> = Vec::new();
    for x in parts {
        for part in decompose_k(alg, x, seed)? {
            if !out.iter().any(|y| iso_k(alg, y, &part, DEFAULT_TRIALS, seed).is_yes()) {
                out.push(part);
            }
        }
    }
    Ok(out)
}

/// Same additive closure: every summand of one is isomorphic to a summand
/// of the other.
pub fn silting_equal(alg: &Algebra, a: &[ProjComplex], b: &[ProjComplex], seed: u64) -> bool {
    let covered = |x: &[ProjComplex], y: &[ProjComplex]| {
        x.iter().all(|s| y.iter().any(|t| iso_k(alg, s, t, DEFAULT_TRIALS, seed).is_yes()))
    };
    covered(a, b) && covered(b, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::mutation::left_mutation;

    #[test]
    fn determinants() {
        assert_eq!(integer_determinant(&[vec![2, 1], vec![1, 1]]), 1);
        assert_eq!(integer_determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(integer_determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(integer_determinant(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn rank_over_rationals() {
        assert_eq!(integer_rank(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(integer_rank(&[vec![2, 4], vec![1, 2]]), 1);
        assert_eq!(integer_rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]), 2);
        assert_eq!(integer_rank(&[vec![1009, 0], vec![0, 1]]), 2);
    }

    #[test]
    fn regular_and_shift_are_silting() {
        let alg = Algebra::linear_a(1009, 3);
        for d in 1..=2 {
            assert_eq!(is_silting(&alg, &SiltingComplex::regular(&alg, d)), SiltingVerdict::Silting);
            assert_eq!(is_silting(&alg, &SiltingComplex::shifted_regular(&alg, d)), SiltingVerdict::Silting);
        }
    }

    #[test]
    fn mutation_of_regular_is_silting() {
        let alg = Algebra::linear_a(1009, 2);
        let a = SiltingComplex::regular(&alg, 1);
        for k in 0..2 {
            let m = left_mutation(&alg, &a.summands, k, 1, 0).unwrap();
            assert_eq!(is_silting(&alg, &SiltingComplex::new(1, m)), SiltingVerdict::Silting);
        }
    }

    #[test]
    fn negative_controls() {
        let alg = Algebra::linear_a(1009, 2);
        // a single projective is presilting but does not generate
        let p = SiltingComplex::new(1, vec![ProjComplex::projective(0, 0)]);
        assert!(matches!(is_silting(&alg, &p), SiltingVerdict::RankDeficient { .. }));
        // Hom(P(1)[1], P(0)[1]) != 0
        let q = SiltingComplex::new(1, vec![ProjComplex::projective(0, 0), ProjComplex::projective(1, -1)]);
        assert!(matches!(is_silting(&alg, &q), SiltingVerdict::NotPresilting { .. }));
        let r = SiltingComplex::new(1, vec![ProjComplex::projective(1, 0), ProjComplex::projective(0, -1)]);
        assert_eq!(is_silting(&alg, &r), SiltingVerdict::Silting);
    }

    #[test]
    fn generation_detects_missing_part() {
        let alg = Algebra::linear_a(1009, 2);
        let s = vec![ProjComplex::projective(0, 0)];
        assert!(!reaches_shifted_projective(&alg, &s, 1, 1));
        assert!(reaches_shifted_projective(&alg, &s, 1, 0));
    }
}
