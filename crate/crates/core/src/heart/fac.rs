//! Membership in `Fac_s(M)`: objects `X` admitting extriangles
//! `Z_i -> M_i -> Z_{i-1}` with `M_i ∈ add M`, `Z_0 = X` and `Z_s ∈ d-H`.
//!
//! Each step uses the universal right `add M`-approximation; its cocone lies
//! in the heart exactly when the approximation is surjective on `H^0`.

use std::collections::HashMap;

use super::resolution::{mapping_cone, realize_images, reduced_presentation, resolve, Resolution};
use super::{to_window, WindowComplex};
use crate::algebra::Algebra;
use crate::complex::ModComplex;
use crate::error::{Error, Result};
use crate::homotopy::decompose::decompose_k;
use crate::homotopy::hom::HomSpace;
use crate::homotopy::iso::{iso_k, DEFAULT_TRIALS};
use crate::homotopy::ProjComplex;
use crate::repcat::ModuleMap;

/// One step `Z -> G -> X` of a `Fac` chain, `G ∈ add M`.
#[derive(Clone, Debug)]
pub struct Extriangle {
    /// Copies of each generator used in `G`.
    pub multiplicities: Vec<usize>,
    /// `G` as a complex of modules (resolutions of the generators).
    pub middle: ModComplex,
    /// Degreewise maps `G -> X`, starting in degree `middle.lo`.
    pub map: Vec<ModuleMap>,
    pub cocone: WindowComplex,
}

#[derive(Clone, Debug)]
pub enum FacResult {
    In(Vec<Extriangle>),
    /// Certified: the first approximation is not surjective on `H^0`.
    NotIn,
    /// The canonical chain broke at a later step.
    NotInApprox,
}

impl FacResult {
    pub fn is_in(&self) -> bool {
        matches!(self, FacResult::In(_))
    }
}

/// Precomputed data for testing membership in `Fac_s` of fixed generators.
pub struct FacContext<'a> {
    alg: &'a Algebra,
    d: usize,
    gens: Vec<Resolution>,
    parts: Vec<ProjComplex>,
    seed: u64,
}

impl<'a> FacContext<'a> {
    pub fn new(alg: &'a Algebra, d: usize, gens: &[WindowComplex], seed: u64) -> Result<Self> {
        let floor = -(d as i64) - 1;
        let res: Vec<Resolution> = gens.iter().map(|g| resolve(alg, &g.cx, floor)).collect();
        let mut parts = Vec::new();
        for g in gens {
            parts.extend(decompose_k(alg, &reduced_presentation(alg, g), seed)?);
        }
        Ok(FacContext { alg, d, gens: res, parts, seed })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Universal right approximation of `x` and its cocone, or `None` when
    /// the cocone leaves the heart.
    pub fn approximate(&self, x: &WindowComplex) -> Result<Option<Extriangle>> {
        let alg = self.alg;
        let mut multiplicities = Vec::with_capacity(self.gens.len());
        let mut pieces: Vec<ProjComplex> = Vec::new();
        let mut piece_images: Vec<HashMap<(i64, usize), Vec<u32>>> = Vec::new();
        for g in &self.gens {
            if g.proj.is_zero() {
                multiplicities.push(0);
                continue;
            }
            let hs = HomSpace::compute(alg, &g.proj, &x.cx);
            let reps = hs.representatives();
            multiplicities.push(reps.len());
            for r in reps {
                pieces.push(g.proj.clone());
                piece_images.push(hs.images(&g.proj, &r));
            }
        }
        let sum = ProjComplex::direct_sum_all(alg, &pieces);
        let mut images = HashMap::new();
        if !sum.is_zero() {
            for q in sum.lo..=sum.hi() {
                let mut off = 0;
                for (piece, imgs) in pieces.iter().zip(&piece_images) {
                    let n = piece.term(q).len();
                    for c in 0..n {
                        if let Some(v) = imgs.get(&(q, c)) {
                            images.insert((q, off + c), v.clone());
                        }
                    }
                    off += n;
                }
            }
        }
        let middle = sum.realize(alg);
        let map = if sum.is_zero() { vec![] } else { realize_images(alg, &sum, &x.cx, &images) };
        let cone = mapping_cone(alg, &middle, &x.cx, &map, sum.lo);
        match to_window(alg, &cone.shift(-1), self.d, 1 - self.d as i64) {
            Ok(cocone) => Ok(Some(Extriangle { multiplicities, middle, map, cocone })),
            Err(Error::HomologyOutsideWindow(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn reduce(&self, z: &WindowComplex) -> Result<WindowComplex> {
        strip_summands(self.alg, z, &self.parts, self.seed)
    }

    /// Indecomposable summands of the generators, as reduced presentations.
    pub fn parts(&self) -> &[ProjComplex] {
        &self.parts
    }

    /// Tests `x ∈ Fac_s(M)`.
    pub fn membership(&self, x: &WindowComplex, s: usize) -> Result<FacResult> {
        self.membership_at(x, s, 0)
    }

    fn membership_at(&self, x: &WindowComplex, s: usize, level: usize) -> Result<FacResult> {
        if s == 0 || x.is_zero_object(self.alg) {
            return Ok(FacResult::In(vec![]));
        }
        let Some(tri) = self.approximate(x)? else {
            return Ok(if level == 0 { FacResult::NotIn } else { FacResult::NotInApprox });
        };
        let next = self.reduce(&tri.cocone)?;
        match self.membership_at(&next, s - 1, level + 1)? {
            FacResult::In(mut chain) => {
                chain.insert(0, tri);
                Ok(FacResult::In(chain))
            }
            other => Ok(other),
        }
    }
}

/// Removes zero summands and summands isomorphic to one of `parts`
/// (reduced presentations); such summands lie in every `Fac_s` of a set
/// containing them.
pub fn strip_summands(alg: &Algebra, z: &WindowComplex, parts: &[ProjComplex], seed: u64) -> Result<WindowComplex> {
    let pres = reduced_presentation(alg, z);
    let n = alg.vertex_count();
    let mut kept = ProjComplex::zero();
    let mut dropped = false;
    for part in decompose_k(alg, &pres, seed)? {
        let known = parts
            .iter()
            .any(|g| g.multiplicities(n) == part.multiplicities(n) && iso_k(alg, g, &part, DEFAULT_TRIALS, seed).is_yes());
        if known {
            dropped = true;
        } else {
            kept = kept.direct_sum(alg, &part);
        }
    }
    if !dropped {
        return Ok(z.clone());
    }
    super::truncate_window(alg, &kept, z.d)
}

/// One-shot membership test.
pub fn fac_membership(alg: &Algebra, gens: &[WindowComplex], x: &WindowComplex, s: usize, seed: u64) -> Result<FacResult> {
    let d = x.d;
    FacContext::new(alg, d, gens, seed)?.membership(x, s)
}
