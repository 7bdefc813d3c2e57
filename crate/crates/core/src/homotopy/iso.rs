//! Isomorphism testing in `K^b(proj A)`.
//!
//! Minimal complexes are isomorphic iff there is a chain map between them
//! that is invertible in every degree.  Such maps form a dense open subset
//! of the chain-map space, so random combinations find one quickly when it
//! exists; otherwise cheap invariants usually refute isomorphism.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::HomSpace;
use super::minimize::minimize;
use super::{ProjChainMap, ProjComplex};
use crate::algebra::Algebra;

pub const DEFAULT_TRIALS: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult {
    /// Degreewise invertible chain map between the minimized complexes.
    Yes(ProjChainMap),
    No(String),
    Undecided,
}

impl IsoResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoResult::Yes(_))
    }
}

/// Compares already minimal complexes.
pub fn iso_minimal(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, trials: usize, seed: u64) -> IsoResult {
    let n = alg.vertex_count();
    if x.multiplicities(n) != y.multiplicities(n) {
        return IsoResult::No("graded multiplicities differ".into());
    }
    if x.is_zero() {
        return IsoResult::Yes(x.zero_map(alg, y));
    }
    let (rx, ry) = (x.realize(alg), y.realize(alg));
    for q in x.lo..=x.hi() {
        if rx.homology_dims(alg, q) != ry.homology_dims(alg, q) {
            return IsoResult::No(format!("homology differs in degree {q}"));
        }
    }
    let hs = HomSpace::compute(alg, x, &ry);
    let z = &hs.cycles;
    if z.cols() == 0 {
        return IsoResult::No("no chain maps".into());
    }
    let p = alg.prime();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        // first try the basis vectors themselves, then random combinations
        let f: Vec<u32> = if t < z.cols().min(4) {
            z.col(t)
        } else {
            let coeffs: Vec<u32> = (0..z.cols()).map(|_| rng.gen_range(0..p)).collect();
            z.mul_vec(&coeffs)
        };
        let map = hs.decode(alg, x, y, &f);
        if map.is_degreewise_iso(alg, x, y) {
            return IsoResult::Yes(map);
        }
    }
    if hs.dim() == 0 {
        return IsoResult::No("Hom_K vanishes".into());
    }
    IsoResult::Undecided
}

/// Minimizes both sides, then compares.
pub fn iso_k(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, trials: usize, seed: u64) -> IsoResult {
    iso_minimal(alg, &minimize(alg, x), &minimize(alg, y), trials, seed)
}
