//! Tilting and quasi-tilting objects of the heart.
//!
//! `M` is tilting when `pd M <= d`, `E^i(M, M) = 0` for `i > 0`, and every
//! projective has a finite coresolution by extriangles with middle terms in
//! `add M`. It is quasi-tilting when `M` is E-projective in `Fac_d(M)` and
//! `Fac_d(M) = Fac_{d+1}(M)`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::air::check_air_tilting;
use super::universe::{injective_shifted, Universe};
use super::{presentation_of, random_extension, verdict_label, Membership};
use crate::algebra::Algebra;
use crate::complex::ModComplex;
use crate::error::{Error, Result};
use crate::heart::fac::{strip_summands, FacContext};
use crate::heart::resolution::{default_depth, e_ext, mapping_cone, realize_images, reduced_presentation, resolve};
use crate::heart::{to_window, WindowComplex};
use crate::homotopy::decompose::decompose_k;
use crate::homotopy::hom::HomSpace;
use crate::homotopy::ProjComplex;
use crate::silting::{basic_summands, is_silting, SiltingComplex, SiltingVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TiltingVerdict {
    Tilting,
    NotTilting(String),
}

impl TiltingVerdict {
    pub fn is_tilting(&self) -> bool {
        *self == TiltingVerdict::Tilting
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingReport {
    /// Presentations of the summands assembled into a silting candidate.
    pub silting_route: TiltingVerdict,
    /// Direct check of projective dimension, self-orthogonality and
    /// coresolutions of the projectives.
    pub direct_route: TiltingVerdict,
    pub verdict: TiltingVerdict,
}

fn projective_dimension_ok(alg: &Algebra, m: &WindowComplex) -> bool {
    let d = m.d as i64;
    let res = resolve(alg, &m.cx, -d - 1);
    res.proj.is_zero() || res.proj.lo >= -d
}

/// Silting route: each summand has projective dimension at most `d`, and
/// the presentations form a silting complex.
pub fn tilting_via_silting(alg: &Algebra, m: &[WindowComplex], seed: u64) -> Result<TiltingVerdict> {
    let Some(d) = m.first().map(|x| x.d) else {
        return Ok(TiltingVerdict::NotTilting("empty".into()));
    };
    let mut pres = Vec::new();
    for (j, x) in m.iter().enumerate() {
        if !projective_dimension_ok(alg, x) {
            return Ok(TiltingVerdict::NotTilting(format!("pd M{j} > {d}")));
        }
        pres.push(resolve(alg, &x.cx, -(d as i64) - 1).proj);
    }
    let s = SiltingComplex::new(d, basic_summands(alg, &pres, seed)?);
    Ok(match is_silting(alg, &s) {
        SiltingVerdict::Silting => TiltingVerdict::Tilting,
        v => TiltingVerdict::NotTilting(verdict_label(&v)),
    })
}

/// Cone of the universal left `add M`-approximation of `y`, in the heart.
fn left_cone(alg: &Algebra, y: &WindowComplex, gens: &[WindowComplex]) -> Result<Option<WindowComplex>> {
    let d = y.d;
    let res = resolve(alg, &y.cx, -(d as i64) - 2);
    if res.proj.is_zero() {
        return Ok(Some(y.clone()));
    }
    let mut target = ModComplex::zero(WindowComplex::lo(d));
    let mut blocks: Vec<(ModComplex, HashMap<(i64, usize), Vec<u32>>)> = Vec::new();
    for g in gens {
        let hs = HomSpace::compute(alg, &res.proj, &g.cx);
        for r in hs.representatives() {
            blocks.push((g.cx.clone(), hs.images(&res.proj, &r)));
        }
    }
    let lo = WindowComplex::lo(d);
    let mut images: HashMap<(i64, usize), Vec<u32>> = HashMap::new();
    for (cx, imgs) in &blocks {
        target = target.direct_sum(alg, cx);
        for q in res.proj.lo..=res.proj.hi() {
            for (c, &v) in res.proj.term(q).iter().enumerate() {
                let width = cx.term_dims(alg, q)[v];
                let piece = imgs.get(&(q, c)).cloned().unwrap_or_else(|| vec![0; width]);
                images.entry((q, c)).or_default().extend(piece);
            }
        }
    }
    let target = target.padded(alg, lo, 0);
    let maps = realize_images(alg, &res.proj, &target, &images);
    let cone = mapping_cone(alg, &res.proj.realize(alg), &target, &maps, res.proj.lo);
    match to_window(alg, &cone, d, -(d as i64)) {
        Ok(w) => Ok(Some(w)),
        Err(Error::HomologyOutsideWindow(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Length of the coresolution of `P(v)` by universal left approximations,
/// or `None` if a cone leaves the heart or `d + 2` steps do not suffice.
pub fn coresolution_length(alg: &Algebra, m: &[WindowComplex], v: usize, seed: u64) -> Result<Option<usize>> {
    let d = m[0].d;
    let mut parts: Vec<ProjComplex> = Vec::new();
    for x in m {
        parts.extend(decompose_k(alg, &reduced_presentation(alg, x), seed)?);
    }
    let mut y = WindowComplex::module(alg, d, alg.projective(v), 0)?;
    for r in 0..=d + 2 {
        y = strip_summands(alg, &y, &parts, seed)?;
        if y.is_zero_object(alg) {
            return Ok(Some(r));
        }
        match left_cone(alg, &y, m)? {
            Some(next) => y = next,
            None => return Ok(None),
        }
    }
    Ok(None)
}

/// Direct route through the defining conditions.
pub fn tilting_direct(alg: &Algebra, m: &[WindowComplex], seed: u64) -> Result<TiltingVerdict> {
    let Some(d) = m.first().map(|x| x.d) else {
        return Ok(TiltingVerdict::NotTilting("empty".into()));
    };
    let depth = default_depth(d);
    for (j, x) in m.iter().enumerate() {
        for v in 0..alg.vertex_count() {
            let s = WindowComplex::module(alg, d, alg.simple(v), 0)?;
            if e_ext(alg, x, &s, d as i64 + 1, depth)? != 0 {
                return Ok(TiltingVerdict::NotTilting(format!("E^{}(M{j}, S{}) != 0", d + 1, v + 1)));
            }
        }
    }
    for (a, x) in m.iter().enumerate() {
        for (b, y) in m.iter().enumerate() {
            for k in 1..=d as i64 {
                if e_ext(alg, x, y, k, depth)? != 0 {
                    return Ok(TiltingVerdict::NotTilting(format!("E^{k}(M{a}, M{b}) != 0")));
                }
            }
        }
    }
    for v in 0..alg.vertex_count() {
        if coresolution_length(alg, m, v, seed)?.is_none() {
            return Ok(TiltingVerdict::NotTilting(format!("no coresolution of P{}", v + 1)));
        }
    }
    Ok(TiltingVerdict::Tilting)
}

/// Both routes; the silting route decides and disagreement is an error.
pub fn check_tilting(alg: &Algebra, m: &[WindowComplex], seed: u64) -> Result<TiltingReport> {
    let silting_route = tilting_via_silting(alg, m, seed)?;
    let direct_route = tilting_direct(alg, m, seed)?;
    if silting_route.is_tilting() != direct_route.is_tilting() {
        return Err(Error::CheckerDisagreement(format!("{silting_route:?} vs {direct_route:?}")));
    }
    Ok(TiltingReport { verdict: silting_route.clone(), silting_route, direct_route })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum QuasiVerdict {
    CertifiedViaSilting,
    VerifiedOnSample,
    Refuted(String),
}

impl QuasiVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, QuasiVerdict::Refuted(_))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiReport {
    pub verdict: QuasiVerdict,
    /// Universe members in `Fac_d(M)`.
    pub fac_members: Vec<usize>,
    /// Generated extensions found in `Fac_d(M)` and tested.
    pub generated: usize,
}

fn quasi_conditions(alg: &Algebra, ctx: &FacContext, m: &[WindowComplex], z: &WindowComplex) -> Result<Option<String>> {
    let d = ctx.d();
    let at_d = Membership::from(&ctx.membership(z, d)?);
    let at_d1 = Membership::from(&ctx.membership(z, d + 1)?);
    if (at_d == Membership::In) != (at_d1 == Membership::In) {
        return Ok(Some(format!("Fac_{d} {at_d:?} but Fac_{} {at_d1:?}", d + 1)));
    }
    if at_d == Membership::In {
        for (j, x) in m.iter().enumerate() {
            if e_ext(alg, x, z, 1, default_depth(d))? != 0 {
                return Ok(Some(format!("E(M{j}, Z) != 0")));
            }
        }
    }
    Ok(None)
}

pub fn check_quasi_tilting(alg: &Algebra, m: &[WindowComplex], universe: &Universe, budget: usize, seed: u64) -> Result<QuasiReport> {
    let d = universe.d;
    let s = presentation_of(alg, m, d, seed)?;
    let ctx = FacContext::new(alg, d, m, seed)?;
    let memberships: Vec<Membership> = universe
        .objects
        .par_iter()
        .map(|o| Ok(Membership::from(&ctx.membership(&o.window, d)?)))
        .collect::<Result<_>>()?;
    let fac_members: Vec<usize> = (0..memberships.len()).filter(|&i| memberships[i] == Membership::In).collect();
    if check_air_tilting(alg, m, &s, universe, seed)?.air_tilting {
        return Ok(QuasiReport { verdict: QuasiVerdict::CertifiedViaSilting, fac_members, generated: 0 });
    }
    let failures: Vec<Option<String>> = universe
        .objects
        .par_iter()
        .map(|o| quasi_conditions(alg, &ctx, m, &o.window))
        .collect::<Result<_>>()?;
    if let Some((i, w)) = failures.iter().enumerate().find_map(|(i, f)| f.as_ref().map(|w| (i, w))) {
        return Ok(QuasiReport { verdict: QuasiVerdict::Refuted(format!("object {i}: {w}")), fac_members, generated: 0 });
    }
    let mut pool: Vec<WindowComplex> = fac_members.iter().map(|&i| universe.objects[i].window.clone()).collect();
    pool.extend(m.iter().cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut generated = 0;
    for t in 0..if pool.is_empty() { 0 } else { budget } {
        let x = &pool[rng.gen_range(0..pool.len())];
        let z = &pool[rng.gen_range(0..pool.len())];
        let e = random_extension(alg, x, z, &mut rng)?;
        if !ctx.membership(&e, d)?.is_in() {
            continue;
        }
        generated += 1;
        if let Some(w) = quasi_conditions(alg, &ctx, m, &e)? {
            return Ok(QuasiReport { verdict: QuasiVerdict::Refuted(format!("extension {t}: {w}")), fac_members, generated });
        }
    }
    Ok(QuasiReport { verdict: QuasiVerdict::VerifiedOnSample, fac_members, generated })
}

/// `X ∈ T(M)`: `E^i(M, X) = 0` for `i = 1..=d+3`.
pub fn in_ext_orthogonal(alg: &Algebra, m: &[WindowComplex], x: &WindowComplex) -> Result<bool> {
    let d = x.d;
    for y in m {
        let res = resolve(alg, &y.cx, -(default_depth(d) as i64));
        for i in 1..=d as i64 + 3 {
            if crate::heart::resolution::e_ext_with(alg, &res, x, i)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sampled `T(M) = Fac_d(M) = Fac_{d+1}(M)` over the universe; returns the
/// first disagreeing object.
pub fn ext_orthogonal_agrees(alg: &Algebra, m: &[WindowComplex], universe: &Universe, seed: u64) -> Result<Option<usize>> {
    let d = universe.d;
    let ctx = FacContext::new(alg, d, m, seed)?;
    let bad: Vec<bool> = universe
        .objects
        .par_iter()
        .map(|o| {
            let t = in_ext_orthogonal(alg, m, &o.window)?;
            let a = ctx.membership(&o.window, d)?.is_in();
            let b = ctx.membership(&o.window, d + 1)?.is_in();
            Ok(t != a || a != b)
        })
        .collect::<Result<_>>()?;
    Ok(bad.iter().position(|&b| b))
}

/// Membership of every `J(v)[d-1]` in `Fac_d(M)`.
pub fn injectives_in_fac(alg: &Algebra, m: &[WindowComplex], d: usize, seed: u64) -> Result<Vec<Membership>> {
    let ctx = FacContext::new(alg, d, m, seed)?;
    (0..alg.vertex_count())
        .map(|v| Ok(Membership::from(&ctx.membership(&injective_shifted(alg, d, v)?, d)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::universe::UniverseOptions;
    use super::*;

    fn module(alg: &Algebra, d: usize, m: crate::repcat::Representation) -> WindowComplex {
        WindowComplex::module(alg, d, m, 0).unwrap()
    }

    #[test]
    fn regular_and_apr_tilts() {
        let alg = Algebra::linear_a(1009, 2);
        let a: Vec<_> = (0..2).map(|v| module(&alg, 1, alg.projective(v))).collect();
        assert!(check_tilting(&alg, &a, 0).unwrap().verdict.is_tilting());
        let s1 = alg.simple(0);
        let s2 = alg.simple(1);
        let top = if alg.projective(0).total_dim() == 1 { 1 } else { 0 };
        let apr = vec![module(&alg, 1, alg.projective(top)), module(&alg, 1, alg.simple(top))];
        assert!(check_tilting(&alg, &apr, 0).unwrap().verdict.is_tilting());
        let both = vec![module(&alg, 1, s1), module(&alg, 1, s2)];
        let r = check_tilting(&alg, &both, 0).unwrap();
        assert!(!r.verdict.is_tilting());
        assert!(matches!(r.direct_route, TiltingVerdict::NotTilting(ref w) if w.starts_with("E^1")));
    }

    #[test]
    fn quasi_tilting_of_regular_and_simple() {
        let alg = Algebra::linear_a(1009, 2);
        let u = Universe::build(&alg, 1, &UniverseOptions::default()).unwrap();
        let a: Vec<_> = (0..2).map(|v| module(&alg, 1, alg.projective(v))).collect();
        assert_eq!(check_quasi_tilting(&alg, &a, &u, 10, 0).unwrap().verdict, QuasiVerdict::CertifiedViaSilting);
        for v in 0..2 {
            let m = vec![module(&alg, 1, alg.simple(v))];
            assert!(check_quasi_tilting(&alg, &m, &u, 10, 0).unwrap().verdict.holds());
        }
        assert_eq!(ext_orthogonal_agrees(&alg, &a, &u, 0).unwrap(), None);
        assert!(injectives_in_fac(&alg, &a, 1, 0).unwrap().iter().all(|&x| x == Membership::In));
    }
}
