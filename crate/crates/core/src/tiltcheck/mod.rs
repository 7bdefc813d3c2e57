//! Checkers for AIR tilting, quasi-tilting and tilting objects of the
//! heart, and verifiers for the correspondence with silting complexes.

pub mod air;
pub mod bijection;
pub mod equiv;
pub mod tilting;
pub mod torsion;
pub mod trials;
pub mod universe;

use rand::Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::complex::ModComplex;
use crate::error::{Error, Result};
use crate::heart::fac::FacResult;
use crate::heart::resolution::{mapping_cone, realize_images, reduced_presentation, resolve};
use crate::heart::{to_window, truncate_window, WindowComplex};
use crate::homotopy::hom::HomSpace;
use crate::homotopy::ProjComplex;
use crate::silting::{basic_summands, SiltingComplex, SiltingVerdict};

/// Outcome of a `Fac_s` membership test, without the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    In,
    NotIn,
    NotInApprox,
}

impl From<&FacResult> for Membership {
    fn from(r: &FacResult) -> Self {
        match r {
            FacResult::In(_) => Membership::In,
            FacResult::NotIn => Membership::NotIn,
            FacResult::NotInApprox => Membership::NotInApprox,
        }
    }
}

pub fn verdict_label(v: &SiltingVerdict) -> String {
    match v {
        SiltingVerdict::Silting => "silting".into(),
        SiltingVerdict::OutsideWindow => "outside window".into(),
        SiltingVerdict::NotPresilting { a, b, i } => format!("Hom(S{a}, S{b}[{i}]) != 0"),
        SiltingVerdict::RankDeficient { rank } => format!("K0 rank {rank}"),
        SiltingVerdict::NotGenerating { vertex } => format!("P({})[d] not generated", vertex + 1),
    }
}

/// The presentation of `add M` used by the checkers: the reduced
/// presentations of the summands together with `P(i)[d]` for every vertex
/// `i` at which no homology of `M` is supported.
pub fn presentation_of(alg: &Algebra, m: &[WindowComplex], d: usize, seed: u64) -> Result<SiltingComplex> {
    let pres: Vec<ProjComplex> = m.iter().map(|x| reduced_presentation(alg, x)).collect();
    let mut parts = basic_summands(alg, &pres, seed)?;
    for v in 0..alg.vertex_count() {
        let supported = m.iter().any(|x| x.homology_dims(alg).iter().any(|h| h[v] != 0));
        if !supported {
            parts.push(ProjComplex::projective(v, -(d as i64)));
        }
    }
    Ok(SiltingComplex::new(d, parts))
}

/// `H^{[-d+1,0]}` of each summand, zero objects dropped.
pub fn windows_of(alg: &Algebra, s: &SiltingComplex) -> Result<Vec<WindowComplex>> {
    let mut out = Vec::new();
    for x in &s.summands {
        let w = truncate_window(alg, x, s.d)?;
        if !w.is_zero_object(alg) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Cone of a random morphism `x -> target` in `D`.
fn random_map_cone(alg: &Algebra, x: &WindowComplex, target: &ModComplex, rng: &mut impl Rng) -> ModComplex {
    let res = resolve(alg, &x.cx, -(x.d as i64) - 2);
    if res.proj.is_zero() {
        return target.clone();
    }
    let hs = HomSpace::compute(alg, &res.proj, target);
    let p = alg.prime();
    let mut f = vec![0u32; hs.unknowns()];
    for r in hs.representatives() {
        let c: u32 = rng.gen_range(0..p);
        for (a, b) in f.iter_mut().zip(&r) {
            *a = ((*a as u64 + c as u64 * *b as u64) % p as u64) as u32;
        }
    }
    let maps = realize_images(alg, &res.proj, target, &hs.images(&res.proj, &f));
    mapping_cone(alg, &res.proj.realize(alg), target, &maps, res.proj.lo)
}

fn in_heart(alg: &Algebra, c: &ModComplex, d: usize) -> Result<Option<WindowComplex>> {
    match to_window(alg, c, d, -(d as i64)) {
        Ok(w) => Ok(Some(w)),
        Err(Error::HomologyOutsideWindow(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Third term of `x -> y -> z` for a random `x -> y`, if it lies in the heart.
pub fn random_cone(alg: &Algebra, x: &WindowComplex, y: &WindowComplex, rng: &mut impl Rng) -> Result<Option<WindowComplex>> {
    in_heart(alg, &random_map_cone(alg, x, &y.cx, rng), x.d)
}

/// First term of `x -> y -> z` for a random `y -> z`, if it lies in the heart.
pub fn random_cocone(alg: &Algebra, y: &WindowComplex, z: &WindowComplex, rng: &mut impl Rng) -> Result<Option<WindowComplex>> {
    in_heart(alg, &random_map_cone(alg, y, &z.cx, rng).shift(-1), y.d)
}

/// Middle term of the extriangle `z -> e -> x` classified by a random
/// element of `Hom_D(x, z[1])`.
pub fn random_extension(alg: &Algebra, x: &WindowComplex, z: &WindowComplex, rng: &mut impl Rng) -> Result<WindowComplex> {
    let cone = random_map_cone(alg, x, &z.cx.shift(1), rng);
    to_window(alg, &cone.shift(-1), x.d, -(x.d as i64))
}
