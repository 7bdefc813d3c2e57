//! Cross-checks between the characterizations of tilting objects.

use serde::Serialize;

use super::air::check_air_tilting;
use super::tilting::{check_quasi_tilting, check_tilting, ext_orthogonal_agrees, injectives_in_fac};
use super::universe::Universe;
use super::Membership;
use crate::algebra::Algebra;
use crate::error::Result;
use crate::heart::resolution::resolve;
use crate::heart::WindowComplex;
use crate::silting::{basic_summands, SiltingComplex};

#[derive(Clone, Debug, Serialize)]
pub struct EquivRow {
    pub label: String,
    pub tilting: bool,
    /// `M` lies in `K^{[-d,0]}(proj)` and is AIR tilting with itself as
    /// presentation.
    pub air_self: bool,
    /// `pd M <= d` and `T(M) = Fac_d(M) = Fac_{d+1}(M)` on the universe.
    pub ext_orthogonal: bool,
    pub quasi_tilting: bool,
    pub injectives: Vec<Membership>,
}

impl EquivRow {
    /// The tilting characterizations agree: the three checkers, and
    /// quasi-tilting with all shifted injectives in `Fac_d`.
    pub fn consistent(&self) -> bool {
        let with_injectives = self.quasi_tilting && self.injectives.iter().all(|&m| m == Membership::In);
        self.tilting == self.air_self && self.tilting == self.ext_orthogonal && self.tilting == with_injectives
    }
}

/// `M` as complexes of projectives, when every summand has `pd <= d`.
pub fn self_presentation(alg: &Algebra, m: &[WindowComplex], d: usize, seed: u64) -> Result<Option<SiltingComplex>> {
    let d = d as i64;
    let mut pres = Vec::new();
    for x in m {
        let res = resolve(alg, &x.cx, -d - 1);
        if !res.proj.is_zero() && res.proj.lo < -d {
            return Ok(None);
        }
        pres.push(res.proj);
    }
    Ok(Some(SiltingComplex::new(d as usize, basic_summands(alg, &pres, seed)?)))
}

pub fn equivalence_row(
    alg: &Algebra,
    label: &str,
    m: &[WindowComplex],
    universe: &Universe,
    budget: usize,
    seed: u64,
) -> Result<EquivRow> {
    let d = universe.d;
    let tilting = check_tilting(alg, m, seed)?.verdict.is_tilting();
    let pres = self_presentation(alg, m, d, seed)?;
    let air_self = match &pres {
        Some(s) => check_air_tilting(alg, m, s, universe, seed)?.air_tilting,
        None => false,
    };
    let ext_orthogonal = pres.is_some() && ext_orthogonal_agrees(alg, m, universe, seed)?.is_none();
    let quasi_tilting = check_quasi_tilting(alg, m, universe, budget, seed)?.verdict.holds();
    let injectives = injectives_in_fac(alg, m, d, seed)?;
    Ok(EquivRow { label: label.to_string(), tilting, air_self, ext_orthogonal, quasi_tilting, injectives })
}

#[cfg(test)]
mod tests {
    use super::super::universe::UniverseOptions;
    use super::*;

    #[test]
    fn negative_controls_agree() {
        let alg = Algebra::linear_a(1009, 2);
        let u = Universe::build(&alg, 1, &UniverseOptions::default()).unwrap();
        let s: Vec<_> = (0..2).map(|v| WindowComplex::module(&alg, 1, alg.simple(v), 0).unwrap()).collect();
        let both = equivalence_row(&alg, "simples", &s, &u, 10, 0).unwrap();
        assert!(!both.tilting && both.consistent());
        for x in &s {
            let r = equivalence_row(&alg, "simple", std::slice::from_ref(x), &u, 10, 0).unwrap();
            assert!(!r.tilting && !r.air_self && r.consistent());
        }
        let a: Vec<_> = (0..2).map(|v| WindowComplex::module(&alg, 1, alg.projective(v), 0).unwrap()).collect();
        let r = equivalence_row(&alg, "A", &a, &u, 10, 0).unwrap();
        assert!(r.tilting && r.air_self && r.ext_orthogonal && r.quasi_tilting && r.consistent());
    }
}
