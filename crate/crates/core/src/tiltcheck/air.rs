//! AIR tilting: `S` silting with `T(S) = Fac_d(add M)` for
//! `add M = add H^{[-d+1,0]}(S)`.

use rayon::prelude::*;
use serde::Serialize;

use super::universe::Universe;
use super::{verdict_label, windows_of, Membership};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::heart::classes::in_torsion;
use crate::heart::fac::FacContext;
use crate::heart::resolution::reduced_presentation;
use crate::heart::WindowComplex;
use crate::silting::{basic_summands, is_silting, silting_equal, SiltingComplex, SiltingVerdict};

#[derive(Clone, Debug, Serialize)]
pub struct AirRow {
    pub object: usize,
    pub in_torsion: bool,
    pub fac: Membership,
}

#[derive(Clone, Debug, Serialize)]
pub struct AirTiltingReport {
    pub silting: String,
    /// `add H^{[-d+1,0]}(S) = add M`.
    pub presents_m: bool,
    pub rows: Vec<AirRow>,
    /// Universe objects where `T(S)` and `Fac_d(M)` disagree.
    pub mismatches: Vec<usize>,
    pub air_tilting: bool,
}

/// `add M` and `add N` agree, compared through reduced presentations.
pub fn same_add(alg: &Algebra, m: &[WindowComplex], n: &[WindowComplex], seed: u64) -> Result<bool> {
    let basic = |xs: &[WindowComplex]| {
        let pres: Vec<_> = xs.iter().map(|x| reduced_presentation(alg, x)).collect();
        basic_summands(alg, &pres, seed)
    };
    Ok(silting_equal(alg, &basic(m)?, &basic(n)?, seed))
}

/// Compares `T(S)` with `Fac_d(M)` over the universe.
pub fn torsion_rows(alg: &Algebra, m: &[WindowComplex], s: &SiltingComplex, universe: &Universe, seed: u64) -> Result<Vec<AirRow>> {
    let ctx = FacContext::new(alg, s.d, m, seed)?;
    universe
        .objects
        .par_iter()
        .enumerate()
        .map(|(i, obj)| {
            let fac = Membership::from(&ctx.membership(&obj.window, s.d)?);
            Ok(AirRow { object: i, in_torsion: in_torsion(alg, &s.summands, &obj.window), fac })
        })
        .collect()
}

pub fn check_air_tilting(
    alg: &Algebra,
    m: &[WindowComplex],
    s: &SiltingComplex,
    universe: &Universe,
    seed: u64,
) -> Result<AirTiltingReport> {
    let verdict = is_silting(alg, s);
    let presents_m = s.in_window() && same_add(alg, &windows_of(alg, s)?, m, seed)?;
    let rows = torsion_rows(alg, m, s, universe, seed)?;
    let mismatches: Vec<usize> =
        rows.iter().filter(|r| r.in_torsion != (r.fac == Membership::In)).map(|r| r.object).collect();
    let air_tilting = verdict == SiltingVerdict::Silting && presents_m && mismatches.is_empty();
    Ok(AirTiltingReport { silting: verdict_label(&verdict), presents_m, rows, mismatches, air_tilting })
}

#[cfg(test)]
mod tests {
    use super::super::presentation_of;
    use super::super::universe::UniverseOptions;
    use super::*;
    use crate::silting::enumerate::{by_mutation, EnumerationOptions};

    #[test]
    fn every_silting_class_of_a2_is_air_tilting() {
        let alg = Algebra::linear_a(1009, 2);
        let u = Universe::build(&alg, 1, &UniverseOptions::default()).unwrap();
        let classes = by_mutation(&alg, 1, &EnumerationOptions::default()).unwrap();
        assert_eq!(classes.len(), 5);
        for s in &classes {
            let m = windows_of(&alg, s).unwrap();
            let r = check_air_tilting(&alg, &m, s, &u, 0).unwrap();
            assert!(r.air_tilting, "{r:?}");
            let again = presentation_of(&alg, &m, 1, 0).unwrap();
            assert!(silting_equal(&alg, &again.summands, &s.summands, 0));
        }
    }

    #[test]
    fn simple_alone_is_not_air_tilting() {
        let alg = Algebra::linear_a(1009, 2);
        let u = Universe::build(&alg, 1, &UniverseOptions::default()).unwrap();
        let m = vec![WindowComplex::module(&alg, 1, alg.simple(1), 0).unwrap()];
        let s = SiltingComplex::new(1, vec![reduced_presentation(&alg, &m[0])]);
        let r = check_air_tilting(&alg, &m, &s, &u, 0).unwrap();
        assert_eq!(r.silting, "K0 rank 1");
        assert!(!r.air_tilting);
    }
}
