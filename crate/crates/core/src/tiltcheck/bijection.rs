//! The map `S -> add H^{[-d+1,0]}(S)` from silting complexes in
//! `K^{[-d,0]}(proj A)` to AIR tilting subcategories of the heart.

use rayon::prelude::*;
use serde::Serialize;

use super::air::{check_air_tilting, same_add};
use super::universe::Universe;
use super::{presentation_of, windows_of};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::homotopy::hom::hom_k;
use crate::homotopy::ProjComplex;
use crate::silting::enumerate::{by_clique, by_mutation, same_classes, silting_cliques, EnumerationOptions};
use crate::silting::registry::Registry;
use crate::silting::{silting_equal, SiltingComplex};

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub class: usize,
    /// Summands of `S` that truncate to nonzero objects.
    pub image_summands: usize,
    pub air_tilting: bool,
    pub mismatches: Vec<usize>,
    /// The presentation of the image gives back `S`.
    pub presentation_recovered: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub d: usize,
    pub universe_size: usize,
    pub silting_classes: usize,
    /// `Some(agree)` when the clique enumeration applies.
    pub methods_agree: Option<bool>,
    pub rows: Vec<ClassRow>,
    /// Pairs of classes with the same image.
    pub collisions: Vec<(usize, usize)>,
    /// AIR tilting families found among universe objects.
    pub air_families: usize,
    /// Families not hit by any silting class.
    pub unmatched_families: usize,
    pub pass: bool,
}

/// Homology dimensions of the image, sorted, as a cheap invariant.
fn fingerprint(alg: &Algebra, s: &SiltingComplex) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut f: Vec<_> = windows_of(alg, s)?.iter().map(|w| w.homology_dims(alg)).collect();
    f.sort();
    Ok(f)
}

/// Silting complexes built from rigid universe objects and `P(v)[d]` whose
/// images are AIR tilting.
pub fn air_families(alg: &Algebra, universe: &Universe, seed: u64) -> Result<Vec<SiltingComplex>> {
    let d = universe.d;
    let mut pool: Vec<ProjComplex> = universe
        .objects
        .iter()
        .map(|o| o.presentation.clone())
        .filter(|x| (1..=d as i64).all(|i| hom_k(alg, x, x, i) == 0))
        .collect();
    pool.extend((0..alg.vertex_count()).map(|v| ProjComplex::projective(v, -(d as i64))));
    let opts = EnumerationOptions { seed, ..Default::default() };
    let mut out = Vec::new();
    for s in silting_cliques(alg, d, &pool, &opts)? {
        let m = windows_of(alg, &s)?;
        if check_air_tilting(alg, &m, &s, universe, seed)?.air_tilting {
            out.push(s);
        }
    }
    Ok(out)
}

pub fn verify_bijection(alg: &Algebra, universe: &Universe, opts: &EnumerationOptions) -> Result<BijectionReport> {
    let d = universe.d;
    let seed = opts.seed;
    let classes = by_mutation(alg, d, opts)?;
    let methods_agree = if alg.is_hereditary() {
        Some(same_classes(alg, &classes, &by_clique(alg, d, &universe.modules, opts)?, seed)?)
    } else {
        None
    };
    let rows: Vec<ClassRow> = classes
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let m = windows_of(alg, s)?;
            let air = check_air_tilting(alg, &m, s, universe, seed)?;
            let again = presentation_of(alg, &m, d, seed)?;
            Ok(ClassRow {
                class: i,
                image_summands: m.len(),
                air_tilting: air.air_tilting,
                mismatches: air.mismatches,
                presentation_recovered: silting_equal(alg, &again.summands, &s.summands, seed),
            })
        })
        .collect::<Result<_>>()?;
    let prints: Vec<_> = classes.iter().map(|s| fingerprint(alg, s)).collect::<Result<_>>()?;
    let images: Vec<_> = classes.iter().map(|s| windows_of(alg, s)).collect::<Result<_>>()?;
    let mut collisions = Vec::new();
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            if prints[a] == prints[b] && same_add(alg, &images[a], &images[b], seed)? {
                collisions.push((a, b));
            }
        }
    }
    let families = air_families(alg, universe, seed)?;
    let mut reg = Registry::new(seed);
    for s in &classes {
        reg.insert(alg, s.clone())?;
    }
    let mut unmatched = 0;
    for s in &families {
        if reg.find(alg, s)?.is_none() {
            unmatched += 1;
        }
    }
    let pass = methods_agree != Some(false)
        && rows.iter().all(|r| r.air_tilting && r.presentation_recovered)
        && collisions.is_empty()
        && unmatched == 0;
    Ok(BijectionReport {
        d,
        universe_size: universe.len(),
        silting_classes: classes.len(),
        methods_agree,
        rows,
        collisions,
        air_families: families.len(),
        unmatched_families: unmatched,
        pass,
    })
}
