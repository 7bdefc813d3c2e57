//! Search for indecomposable modules of small dimension.
//!
//! Hereditary algebras: generic representations over a grid of dimension
//! vectors.  In general: cokernels of random maps between small sums of
//! projectives (every module is such a cokernel).  Projectives, injectives
//! and simples are always included.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::decompose::{decompose, indecomposable_iso, DEFAULT_BUDGET};
use super::{cokernel, hom_basis, projective_sum, Representation};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::linalg::Matrix;

/// Random samples per dimension vector or projective pair.
pub const DEFAULT_SAMPLES: usize = 2;

fn random_matrix(rng: &mut ChaCha8Rng, p: u32, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
    Matrix::from_vec(p, rows, cols, data)
}

/// All vectors with entries in `0..=bound`, except zero.
fn grid(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<usize>| (0..=bound).map(move |k| {
            let mut w = v.clone();
            w.push(k);
            w
        })).collect();
    }
    out.retain(|v| v.iter().any(|&k| k > 0));
    out
}

/// Vertex multisets with at most `bound` elements, in a fixed order.
fn multisets(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..bound {
        let mut next = Vec::new();
        for m in &frontier {
            let start = m.last().copied().unwrap_or(0);
            for v in start..n {
                let mut w = m.clone();
                w.push(v);
                next.push(w);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

struct Collector {
    seed: u64,
    found: Vec<Representation>,
}

impl Collector {
    fn add(&mut self, alg: &Algebra, m: &Representation) -> Result<()> {
        if m.is_zero() {
            return Ok(());
        }
        for s in decompose(&m.to_diagram(alg), self.seed, DEFAULT_BUDGET)? {
            let r = Representation::from_diagram(&s.diagram);
            let known = self.found.iter().any(|f| {
                f.dims() == r.dims() && indecomposable_iso(&f.to_diagram(alg), &s.diagram).is_some()
            });
            if !known {
                self.found.push(r);
            }
        }
        Ok(())
    }
}

/// Indecomposable modules found with dimension (hereditary case) or number
/// of projective summands (general case) bounded by `bound`.
pub fn indecomposable_modules(alg: &Algebra, bound: usize, samples: usize, seed: u64) -> Result<Vec<Representation>> {
    let n = alg.vertex_count();
    let p = alg.prime();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Collector { seed, found: Vec::new() };
    for v in 0..n {
        c.add(alg, &alg.projective(v))?;
        c.add(alg, &alg.injective(v))?;
        c.add(alg, &alg.simple(v))?;
    }
    if alg.is_hereditary() {
        for dims in grid(n, bound) {
            for _ in 0..samples {
                let maps = alg
                    .arrows()
                    .iter()
                    .map(|a| random_matrix(&mut rng, p, dims[a.target], dims[a.source]))
                    .collect();
                c.add(alg, &Representation::new(dims.clone(), maps))?;
            }
        }
    } else {
        let sets = multisets(n, bound);
        for top in sets.iter().filter(|s| !s.is_empty()) {
            let p0 = projective_sum(alg, top);
            for rel in &sets {
                let p1 = projective_sum(alg, rel);
                let basis = hom_basis(alg, &p1, &p0);
                if basis.is_empty() {
                    continue;
                }
                for _ in 0..samples {
                    let mut f = basis[0].scale(0);
                    for b in &basis {
                        f = f.add(&b.scale(rng.gen_range(0..p)));
                    }
                    c.add(alg, &cokernel(alg, &p0, &f).0)?;
                }
            }
        }
    }
    let mut found = c.found;
    found.sort_by(|a, b| a.total_dim().cmp(&b.total_dim()).then_with(|| a.dims().cmp(b.dims())));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_a3_has_six_indecomposables() {
        let alg = Algebra::linear_a(1009, 3);
        let found = indecomposable_modules(&alg, 1, DEFAULT_SAMPLES, 1).unwrap();
        assert_eq!(found.len(), 6);
    }

    #[test]
    fn rad_square_zero_a3_has_five() {
        let alg = Algebra::linear_rad2(1009, 3);
        let found = indecomposable_modules(&alg, 2, DEFAULT_SAMPLES, 1).unwrap();
        assert_eq!(found.len(), 5);
    }
}
