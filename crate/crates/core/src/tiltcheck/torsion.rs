//! The torsion pair `(T(S), F(S))` of a silting complex and its relation
//! to `Fac_d` of the truncation.

use rayon::prelude::*;
use serde::Serialize;

use super::universe::{injective_shifted, Universe};
use super::{windows_of, Membership};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::heart::classes::{in_torsion, in_torsion_free};
use crate::heart::fac::FacContext;
use crate::heart::resolution::{default_depth, e_ext_with, reduced_presentation, resolve, Resolution};
use crate::heart::{truncate_window, WindowComplex};
use crate::homotopy::decompose::decompose_k;
use crate::silting::SiltingComplex;

#[derive(Clone, Debug, Default, Serialize)]
pub struct TorsionReport {
    pub torsion: Vec<usize>,
    pub torsion_free: Vec<usize>,
    /// `(X, Y)` with `X ∈ T`, `Y ∈ F` and `Hom(X, Y) != 0` or `Hom(X, Y[-1]) != 0`.
    pub orthogonality_failures: Vec<(usize, usize)>,
    /// Objects where `F(S)` and `M^{⊥≤0}` disagree.
    pub perpendicular_failures: Vec<usize>,
    /// Members of `T(S)` without an extriangle `Z -> M' -> X` whose cocone
    /// stays in `T(S)`.
    pub realizability_failures: Vec<usize>,
    /// Objects where `T(S)`, `Fac_d` and `Fac_{d+1}` do not all agree.
    pub level_failures: Vec<usize>,
    /// E-projective objects of `T(S)` in the universe.
    pub e_projectives: Vec<usize>,
    /// Universe indices of the summands of the truncation of `S`.
    pub truncation_summands: Vec<usize>,
    /// Summands of the truncation absent from the universe.
    pub summands_missing: usize,
    /// `S` lies in the heart; the injectives are then tested.
    pub in_heart: bool,
    pub injectives: Vec<Membership>,
    pub pass: bool,
}

fn ext(alg: &Algebra, res: &Resolution, y: &WindowComplex, i: i64) -> Result<usize> {
    e_ext_with(alg, res, y, i)
}

pub fn verify_torsion_reports(alg: &Algebra, s: &SiltingComplex, universe: &Universe, seed: u64) -> Result<TorsionReport> {
    let d = s.d;
    let objs: Vec<&WindowComplex> = universe.objects.iter().map(|o| &o.window).collect();
    let m = windows_of(alg, s)?;
    let ctx = FacContext::new(alg, d, &m, seed)?;
    let floor = -(default_depth(d) as i64);
    let res: Vec<Resolution> = objs.par_iter().map(|x| resolve(alg, &x.cx, floor)).collect();
    let m_res: Vec<Resolution> = m.iter().map(|x| resolve(alg, &x.cx, floor)).collect();

    let mut r = TorsionReport::default();
    let flags: Vec<(bool, bool)> =
        objs.par_iter().map(|x| (in_torsion(alg, &s.summands, x), in_torsion_free(alg, &s.summands, x))).collect();
    r.torsion = (0..objs.len()).filter(|&i| flags[i].0).collect();
    r.torsion_free = (0..objs.len()).filter(|&i| flags[i].1).collect();

    for &a in &r.torsion {
        for &b in &r.torsion_free {
            if ext(alg, &res[a], objs[b], 0)? != 0 || ext(alg, &res[a], objs[b], -1)? != 0 {
                r.orthogonality_failures.push((a, b));
            }
        }
    }

    let per_object: Vec<(bool, bool, bool)> = (0..objs.len())
        .into_par_iter()
        .map(|i| {
            let x = objs[i];
            let mut perp = true;
            for mr in &m_res {
                for k in 1 - d as i64..=0 {
                    if ext(alg, mr, x, k)? != 0 {
                        perp = false;
                    }
                }
            }
            let realizable = if flags[i].0 {
                match ctx.approximate(x)? {
                    Some(tri) => in_torsion(alg, &s.summands, &tri.cocone),
                    None => false,
                }
            } else {
                true
            };
            let at_d = ctx.membership(x, d)?.is_in();
            let at_d1 = ctx.membership(x, d + 1)?.is_in();
            let levels = at_d == flags[i].0 && at_d1 == at_d;
            Ok((perp == flags[i].1, realizable, levels))
        })
        .collect::<Result<_>>()?;
    for (i, &(perp, realizable, levels)) in per_object.iter().enumerate() {
        if !perp {
            r.perpendicular_failures.push(i);
        }
        if !realizable {
            r.realizability_failures.push(i);
        }
        if !levels {
            r.level_failures.push(i);
        }
    }

    let tor = r.torsion.clone();
    r.e_projectives = tor
        .par_iter()
        .map(|&a| Ok(tor.iter().map(|&b| ext(alg, &res[a], objs[b], 1)).collect::<Result<Vec<_>>>()?.iter().all(|&e| e == 0)))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .zip(&tor)
        .filter(|(p, _)| *p)
        .map(|(_, &a)| a)
        .collect();
    for x in &m {
        for part in decompose_k(alg, &reduced_presentation(alg, x), seed)? {
            match universe.find(alg, &part)? {
                Some(i) => {
                    if !r.truncation_summands.contains(&i) {
                        r.truncation_summands.push(i);
                    }
                }
                None => r.summands_missing += 1,
            }
        }
    }
    r.truncation_summands.sort_unstable();

    r.in_heart = s.summands.iter().all(|x| {
        let w = truncate_window(alg, x, d);
        let top = x.realize(alg);
        w.is_ok() && top.homology_at(alg, -(d as i64)).is_zero()
    });
    if r.in_heart {
        r.injectives = (0..alg.vertex_count())
            .map(|v| Ok(Membership::from(&ctx.membership(&injective_shifted(alg, d, v)?, d)?)))
            .collect::<Result<_>>()?;
    }
    r.pass = r.orthogonality_failures.is_empty()
        && r.perpendicular_failures.is_empty()
        && r.realizability_failures.is_empty()
        && r.level_failures.is_empty()
        && r.e_projectives == r.truncation_summands
        && r.injectives.iter().all(|&j| j == Membership::In);
    Ok(r)
}
