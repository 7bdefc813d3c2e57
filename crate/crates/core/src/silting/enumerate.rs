//! Enumeration of basic silting complexes in `[-d, 0]`, by breadth-first
//! irreducible mutation and, for hereditary algebras, by maximal cliques of
//! pairwise compatible indecomposable presilting complexes.

use std::collections::VecDeque;

use super::registry::Registry;
use super::{is_silting, SiltingComplex, SiltingVerdict};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::heart::resolution::p_presentation;
use crate::heart::WindowComplex;
use crate::homotopy::hom::hom_k;
use crate::homotopy::mutation::{mutate, Direction};
use crate::homotopy::ProjComplex;
use crate::repcat::Representation;

pub const DEFAULT_MAX_CLASSES: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Mutation,
    Clique,
    Both,
}

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    pub seed: u64,
    pub max_classes: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { seed: 0, max_classes: DEFAULT_MAX_CLASSES }
    }
}

/// Seeds `A`, `A[d]`, and mixtures `⊕_{v∉U} P(v) ⊕ ⊕_{v∈U} P(v)[d]` that are
/// silting.
pub fn seeds(alg: &Algebra, d: usize) -> Vec<SiltingComplex> {
    let n = alg.vertex_count();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let summands = (0..n)
            .map(|v| ProjComplex::projective(v, if mask >> v & 1 == 1 { -(d as i64) } else { 0 }))
            .collect();
        let s = SiltingComplex::new(d, summands);
        if mask == 0 || mask == (1 << n) - 1 || is_silting(alg, &s) == SiltingVerdict::Silting {
            out.push(s);
        }
    }
    out
}

/// Breadth-first closure of the seeds under irreducible left and right
/// mutation, discarding results that leave the window.
pub fn by_mutation(alg: &Algebra, d: usize, opts: &EnumerationOptions) -> Result<Vec<SiltingComplex>> {
    let mut reg = Registry::new(opts.seed);
    let mut queue = VecDeque::new();
    for s in seeds(alg, d) {
        let (i, fresh) = reg.insert(alg, s)?;
        if fresh {
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        let cur = reg.entries()[i].clone();
        for k in 0..cur.summands.len() {
            for dir in [Direction::Left, Direction::Right] {
                let next = match mutate(alg, &cur.summands, k, dir, d, opts.seed) {
                    Ok(s) => SiltingComplex::new(d, s),
                    Err(Error::OutOfWindow) => continue,
                    Err(e) => return Err(e),
                };
                let (j, fresh) = reg.insert(alg, next)?;
                if fresh {
                    if reg.len() > opts.max_classes {
                        return Err(Error::BudgetExceeded(format!("more than {} silting classes", opts.max_classes)));
                    }
                    queue.push_back(j);
                }
            }
        }
    }
    Ok(reg.into_entries())
}

/// Indecomposable presilting candidates `M[j]` (`M` rigid indecomposable,
/// `0 <= j < d`) and `P(v)[d]`, as minimal complexes.
pub fn clique_pool(alg: &Algebra, d: usize, modules: &[Representation]) -> Result<Vec<ProjComplex>> {
    if !alg.is_hereditary() {
        return Err(Error::PoolConstructionUnsupported);
    }
    let mut pool = Vec::new();
    for m in modules {
        for j in 0..d {
            let w = WindowComplex::module(alg, d, m.clone(), j)?;
            let x = p_presentation(alg, &w);
            if hom_k(alg, &x, &x, 1) == 0 && (2..=d as i64).all(|i| hom_k(alg, &x, &x, i) == 0) {
                pool.push(x);
            }
        }
    }
    for v in 0..alg.vertex_count() {
        pool.push(ProjComplex::projective(v, -(d as i64)));
    }
    Ok(pool)
}

fn compatible(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, d: usize) -> bool {
    (1..=d as i64).all(|i| hom_k(alg, x, y, i) == 0 && hom_k(alg, y, x, i) == 0)
}

/// Bron–Kerbosch with pivoting; reports maximal cliques.
fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn go(adj: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = *p.iter().chain(&x).max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count()).unwrap();
        let cands: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        let (mut p, mut x) = (p, x);
        for v in cands {
            r.push(v);
            let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
            let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
            go(adj, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    go(adj, &mut Vec::new(), (0..adj.len()).collect(), Vec::new(), &mut out);
    out
}

/// Maximal compatible families of size `n` in the pool that pass the
/// silting test.
pub fn by_clique(
    alg: &Algebra,
    d: usize,
    modules: &[Representation],
    opts: &EnumerationOptions,
) -> Result<Vec<SiltingComplex>> {
    silting_cliques(alg, d, &clique_pool(alg, d, modules)?, opts)
}

/// Maximal compatible families of size `n` in an arbitrary pool of
/// indecomposable presilting complexes that pass the silting test.
pub fn silting_cliques(alg: &Algebra, d: usize, pool: &[ProjComplex], opts: &EnumerationOptions) -> Result<Vec<SiltingComplex>> {
    let m = pool.len();
    let mut adj = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let c = compatible(alg, &pool[a], &pool[b], d);
            adj[a][b] = c;
            adj[b][a] = c;
        }
    }
    let mut reg = Registry::new(opts.seed);
    for clique in maximal_cliques(&adj) {
        if clique.len() != alg.vertex_count() {
            continue;
        }
        let s = SiltingComplex::new(d, clique.iter().map(|&i| pool[i].clone()).collect());
        if is_silting(alg, &s) == SiltingVerdict::Silting {
            reg.insert(alg, s)?;
            if reg.len() > opts.max_classes {
                return Err(Error::BudgetExceeded(format!("more than {} silting classes", opts.max_classes)));
            }
        }
    }
    Ok(reg.into_entries())
}

/// Whether two enumerations list the same classes.
pub fn same_classes(alg: &Algebra, a: &[SiltingComplex], b: &[SiltingComplex], seed: u64) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut reg = Registry::new(seed);
    for s in a {
        reg.insert(alg, s.clone())?;
    }
    for s in b {
        if reg.find(alg, s)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::indecomposables::{indecomposable_modules, DEFAULT_SAMPLES};

    #[test]
    fn cliques_of_small_graph() {
        // path 0-1-2 plus edge 0-2 forms a triangle; 3 isolated
        let mut adj = vec![vec![false; 4]; 4];
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let mut c = maximal_cliques(&adj);
        c.iter_mut().for_each(|x| x.sort());
        c.sort();
        assert_eq!(c, vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn counts_for_small_cases() {
        let opts = EnumerationOptions::default();
        let a1 = Algebra::linear_a(1009, 1);
        for d in 1..=3 {
            assert_eq!(by_mutation(&a1, d, &opts).unwrap().len(), d + 1);
        }
        let a2 = Algebra::linear_a(1009, 2);
        assert_eq!(by_mutation(&a2, 1, &opts).unwrap().len(), 5);
        let mods = indecomposable_modules(&a2, 1, DEFAULT_SAMPLES, 0).unwrap();
        let cl = by_clique(&a2, 1, &mods, &opts).unwrap();
        assert_eq!(cl.len(), 5);
        assert!(same_classes(&a2, &cl, &by_mutation(&a2, 1, &opts).unwrap(), 0).unwrap());
    }

    #[test]
    fn clique_needs_hereditary() {
        let alg = Algebra::linear_rad2(1009, 3);
        assert_eq!(clique_pool(&alg, 1, &[]), Err(Error::PoolConstructionUnsupported));
    }
}
