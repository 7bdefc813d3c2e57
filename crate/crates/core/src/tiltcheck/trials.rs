//! Randomized checks of the closure properties of `Fac_d(M)` for
//! quasi-tilting `M`, and of the Schanuel isomorphism for approximation
//! triangles in `K^b(proj A)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::universe::Universe;
use super::{random_cocone, random_cone, random_extension};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::heart::fac::FacContext;
use crate::heart::resolution::{default_depth, e_ext, reduced_presentation};
use crate::heart::{truncate_window, WindowComplex};
use crate::homotopy::decompose::decompose_k;
use crate::homotopy::hom::{hom_basis_k, join_sources, join_targets, left_approximation, right_approximation};
use crate::homotopy::iso::{iso_k, IsoResult, DEFAULT_TRIALS};
use crate::homotopy::{ProjChainMap, ProjComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Closure {
    /// `X, Z ∈ Fac_d` and `X -> Y -> Z` give `Y ∈ Fac_d`.
    Extension,
    /// `X, Y ∈ Fac_d` give `Z ∈ Fac_d`.
    Cone,
    /// `Y, Z ∈ Fac_d` and `E(M, X) = 0` give `X ∈ Fac_d`.
    Cocone,
    /// Summands of members are members.
    Summand,
    /// `Fac_s(Fac_d(M)) ⊆ Fac_s(M)`.
    FactorChain,
}

pub const CLOSURES: [Closure; 5] =
    [Closure::Extension, Closure::Cone, Closure::Cocone, Closure::Summand, Closure::FactorChain];

#[derive(Clone, Debug, Serialize)]
pub struct ClosureTally {
    pub closure: Closure,
    /// Trials whose hypotheses held.
    pub trials: usize,
    /// Draws discarded because the hypotheses failed.
    pub discarded: usize,
    pub counterexamples: Vec<String>,
}

/// One generator set with its `Fac_d` members sampled so far.
struct Subject<'a> {
    m: Vec<WindowComplex>,
    ctx: FacContext<'a>,
    pool: Vec<WindowComplex>,
    seed: u64,
}

impl Subject<'_> {
    fn is_in(&self, x: &WindowComplex, s: usize) -> Result<bool> {
        Ok(self.ctx.membership(x, s)?.is_in())
    }

    fn pick<'b>(&'b self, rng: &mut ChaCha8Rng) -> &'b WindowComplex {
        &self.pool[rng.gen_range(0..self.pool.len())]
    }
}

/// Outcome of one draw: `None` when the hypotheses fail, otherwise a
/// counterexample description if the conclusion fails.
type Draw = Option<Option<String>>;

fn draw(alg: &Algebra, sub: &Subject, universe: &Universe, c: Closure, rng: &mut ChaCha8Rng) -> Result<Draw> {
    let d = universe.d;
    match c {
        Closure::Extension => {
            let (x, z) = (sub.pick(rng), sub.pick(rng));
            let y = random_extension(alg, z, x, rng)?;
            Ok(Some((!sub.is_in(&y, d)?).then(|| "extension left Fac_d".to_string())))
        }
        Closure::Cone => {
            let (x, y) = (sub.pick(rng), sub.pick(rng));
            let Some(z) = random_cone(alg, x, y, rng)? else { return Ok(None) };
            Ok(Some((!sub.is_in(&z, d)?).then(|| "cone left Fac_d".to_string())))
        }
        Closure::Cocone => {
            let (y, z) = (sub.pick(rng), sub.pick(rng));
            let Some(x) = random_cocone(alg, y, z, rng)? else { return Ok(None) };
            for g in &sub.m {
                if e_ext(alg, g, &x, 1, default_depth(d))? != 0 {
                    return Ok(None);
                }
            }
            Ok(Some((!sub.is_in(&x, d)?).then(|| "cocone left Fac_d".to_string())))
        }
        Closure::Summand => {
            let (x, z) = (sub.pick(rng), sub.pick(rng));
            let y = random_extension(alg, z, x, rng)?;
            let parts = decompose_k(alg, &reduced_presentation(alg, &y), sub.seed)?;
            if parts.len() < 2 {
                return Ok(None);
            }
            for part in parts {
                let w = truncate_window(alg, &part, d)?;
                if !sub.is_in(&w, d)? {
                    return Ok(Some(Some("summand left Fac_d".into())));
                }
            }
            Ok(Some(None))
        }
        Closure::FactorChain => {
            // Z_0 built from Z_s ∈ d-H by cones Z_{i} -> Y_i -> Z_{i-1}, Y_i ∈ Fac_d
            let s = rng.gen_range(1..=d);
            let mut z = universe.objects[rng.gen_range(0..universe.len())].window.clone();
            for _ in 0..s {
                let y = sub.pick(rng);
                let Some(next) = random_cone(alg, &z, y, rng)? else { return Ok(None) };
                z = next;
            }
            Ok(Some((!sub.is_in(&z, s)?).then(|| format!("chain of length {s} left Fac_{s}(M)"))))
        }
    }
}

/// Runs `trials` valid draws per closure property, spread round-robin over
/// the generator sets. Each set must be quasi-tilting.
pub fn closure_trials(
    alg: &Algebra,
    subjects: &[Vec<WindowComplex>],
    universe: &Universe,
    trials: usize,
    seed: u64,
) -> Result<Vec<ClosureTally>> {
    let d = universe.d;
    let mut subs = Vec::new();
    for m in subjects {
        let ctx = FacContext::new(alg, d, m, seed)?;
        let mut pool = m.clone();
        for o in &universe.objects {
            if ctx.membership(&o.window, d)?.is_in() {
                pool.push(o.window.clone());
            }
        }
        if !pool.is_empty() {
            subs.push(Subject { m: m.clone(), ctx, pool, seed });
        }
    }
    let mut out = Vec::new();
    for (k, &c) in CLOSURES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let mut tally = ClosureTally { closure: c, trials: 0, discarded: 0, counterexamples: Vec::new() };
        let mut attempts = 0;
        while !subs.is_empty() && tally.trials < trials && attempts < 20 * trials {
            let i = attempts % subs.len();
            attempts += 1;
            match draw(alg, &subs[i], universe, c, &mut rng)? {
                None => tally.discarded += 1,
                Some(None) => tally.trials += 1,
                Some(Some(w)) => {
                    tally.trials += 1;
                    tally.counterexamples.push(format!("generator set {i}: {w}"));
                }
            }
        }
        out.push(tally);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SchanuelTally {
    pub trials: usize,
    pub failures: Vec<String>,
    pub undecided: usize,
}

fn random_map(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, rng: &mut ChaCha8Rng) -> ProjChainMap {
    let p = alg.prime();
    let mut f = x.zero_map(alg, y);
    for g in hom_basis_k(alg, x, y) {
        f = f.add(alg, &g.scale(alg, rng.gen_range(0..p)), x, y);
    }
    f
}

/// For two right approximations `X -> Z`, `X' -> Z` with cocones `Y`, `Y'`
/// (or dually two left approximations `Z -> X`, `Z -> X'` with cones),
/// checks `Y ⊕ X' ≅ Y' ⊕ X`. The second approximation adds random
/// redundant summands to the universal one.
pub fn schanuel_trials(alg: &Algebra, gens: &[ProjComplex], objects: &[ProjComplex], trials: usize, seed: u64) -> SchanuelTally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = SchanuelTally::default();
    if gens.is_empty() || objects.is_empty() {
        return tally;
    }
    for t in 0..trials {
        let z = objects[rng.gen_range(0..objects.len())].shift(alg, rng.gen_range(-1..=1));
        let extra: Vec<ProjComplex> = (0..rng.gen_range(1..=2)).map(|_| gens[rng.gen_range(0..gens.len())].clone()).collect();
        let (y, x, y2, x2) = if t % 2 == 0 {
            let (x, f) = right_approximation(alg, gens, &z);
            let mut parts = vec![(x.clone(), f.clone())];
            for e in &extra {
                parts.push((e.clone(), random_map(alg, e, &z, &mut rng)));
            }
            let (x2, f2) = join_sources(alg, &parts, &z);
            let y = x.cone(alg, &z, &f).shift(alg, -1);
            let y2 = x2.cone(alg, &z, &f2).shift(alg, -1);
            (y, x, y2, x2)
        } else {
            let (x, f) = left_approximation(alg, &z, gens);
            let mut parts = vec![(x.clone(), f.clone())];
            for e in &extra {
                parts.push((e.clone(), random_map(alg, &z, e, &mut rng)));
            }
            let (x2, f2) = join_targets(alg, &z, &parts);
            (z.cone(alg, &x, &f), x, z.cone(alg, &x2, &f2), x2)
        };
        tally.trials += 1;
        let lhs = y.direct_sum(alg, &x2);
        let rhs = y2.direct_sum(alg, &x);
        match iso_k(alg, &lhs, &rhs, DEFAULT_TRIALS, seed.wrapping_add(t as u64)) {
            IsoResult::Yes(_) => {}
            IsoResult::No(why) => tally.failures.push(format!("trial {t}: {why}")),
            IsoResult::Undecided => tally.undecided += 1,
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::super::universe::UniverseOptions;
    use super::super::windows_of;
    use super::*;
    use crate::silting::enumerate::{by_mutation, EnumerationOptions};

    #[test]
    fn closures_hold_for_a2_classes() {
        let alg = Algebra::linear_a(1009, 2);
        let u = Universe::build(&alg, 1, &UniverseOptions::default()).unwrap();
        let classes = by_mutation(&alg, 1, &EnumerationOptions::default()).unwrap();
        let subjects: Vec<_> = classes.iter().map(|s| windows_of(&alg, s).unwrap()).collect();
        let tallies = closure_trials(&alg, &subjects, &u, 40, 3).unwrap();
        assert_eq!(tallies.len(), CLOSURES.len());
        for t in tallies {
            assert_eq!(t.trials, 40, "{:?}", t.closure);
            assert!(t.counterexamples.is_empty());
        }
    }

    #[test]
    fn schanuel_on_regular_generators() {
        let alg = Algebra::linear_rad2(1009, 3);
        let gens: Vec<ProjComplex> = (0..3).map(|v| ProjComplex::projective(v, 0)).collect();
        let u = Universe::build(&alg, 1, &UniverseOptions::default()).unwrap();
        let objs: Vec<_> = u.objects.iter().map(|o| o.presentation.clone()).collect();
        let t = schanuel_trials(&alg, &gens, &objs, 12, 1);
        assert_eq!(t.trials, 12);
        assert!(t.failures.is_empty() && t.undecided == 0);
    }
}
