//! Direct-sum decomposition of complexes of projectives.

use super::iso::{iso_minimal, IsoResult, DEFAULT_TRIALS};
use super::minimize::minimize;
use super::{vector_to_column, AlgMatrix, ProjComplex};
use crate::algebra::Algebra;
use crate::complex::ModComplex;
use crate::error::{Error, Result};
use crate::repcat::decompose::{decompose as decompose_diagram, DEFAULT_BUDGET};
use crate::repcat::{self, Representation};

/// Rewrites a complex of projective modules in terms of projective summands.
pub fn to_proj_complex(alg: &Algebra, c: &ModComplex) -> ProjComplex {
    let mut gens: Vec<Vec<(usize, Vec<u32>)>> = Vec::new();
    let mut covers = Vec::new();
    for t in &c.terms {
        let g = t.top_generators(alg);
        let (_, map) = repcat::map_from_generators(alg, t, &g);
        covers.push(map);
        gens.push(g);
    }
    let terms: Vec<Vec<usize>> = gens.iter().map(|g| g.iter().map(|x| x.0).collect()).collect();
    let diffs = (0..c.diffs.len())
        .map(|k| {
            let mut m = AlgMatrix::zeros(alg, terms[k + 1].len(), terms[k].len());
            for (col, (v, x)) in gens[k].iter().enumerate() {
                let image = c.diffs[k].maps[*v].mul_vec(x);
                let coords = covers[k + 1].maps[*v].solve_vec(&image).expect("term is projective");
                for (row, e) in vector_to_column(alg, &terms[k + 1], *v, &coords).into_iter().enumerate() {
                    m.set(row, col, e);
                }
            }
            m
        })
        .collect();
    ProjComplex { lo: c.lo, terms, diffs }.trimmed()
}

/// Indecomposable summands (over `F_p`) of the minimal model of `x`.
pub fn decompose_k(alg: &Algebra, x: &ProjComplex, seed: u64) -> Result<Vec<ProjComplex>> {
    let m = minimize(alg, x);
    if m.is_zero() {
        return Ok(vec![]);
    }
    let r = m.realize(alg);
    let parts = decompose_diagram(&r.to_diagram(alg), seed, DEFAULT_BUDGET)?;
    if parts.len() == 1 {
        return Ok(vec![m]);
    }
    Ok(parts
        .iter()
        .map(|s| to_proj_complex(alg, &ModComplex::from_diagram(alg, r.lo, r.len(), &s.diagram)))
        .collect())
}

/// Groups complexes into isomorphism classes with multiplicities.
pub fn group_k(alg: &Algebra, parts: Vec<ProjComplex>, seed: u64) -> Result<Vec<(ProjComplex, usize)>> {
    let mut classes: Vec<(ProjComplex, usize)> = Vec::new();
    'outer: for x in parts {
        for entry in classes.iter_mut() {
            match iso_minimal(alg, &entry.0, &x, DEFAULT_TRIALS, seed) {
                IsoResult::Yes(_) => {
                    entry.1 += 1;
                    continue 'outer;
                }
                IsoResult::No(_) => {}
                IsoResult::Undecided => return Err(Error::UndecidedIso),
            }
        }
        classes.push((x, 1));
    }
    Ok(classes)
}

/// Whether the projective module is indecomposable, read from its top.
pub fn is_indecomposable_projective(alg: &Algebra, m: &Representation) -> bool {
    m.top_dims(alg).iter().sum::<usize>() == 1
}
