//! Finite sampling ground for equalities of subcategories of the heart.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::complex::ModComplex;
use crate::heart::resolution::{reduced_presentation, resolve};
use crate::heart::{truncate_window, WindowComplex};
use crate::homotopy::decompose::decompose_k;
use crate::homotopy::hom::hom_basis_k;
use crate::homotopy::iso::{iso_minimal, IsoResult, DEFAULT_TRIALS};
use crate::homotopy::minimize::minimize;
use crate::homotopy::{ProjChainMap, ProjComplex};
use crate::repcat::Representation;
use crate::repcat::indecomposables::{indecomposable_modules, DEFAULT_SAMPLES};

/// One indecomposable object of the heart.
#[derive(Clone, Debug)]
pub struct UniverseObject {
    pub window: WindowComplex,
    /// Minimal presentation without `P(v)[d]` stalk summands.
    pub presentation: ProjComplex,
    pub origin: String,
}

#[derive(Clone, Debug)]
pub struct UniverseOptions {
    /// Entries of dimension vectors (hereditary) or number of projective
    /// summands (otherwise) in the module search.
    pub dim_bound: usize,
    pub samples: usize,
    /// Random cones between members whose truncations are added.
    pub cones: usize,
    pub seed: u64,
}

impl Default for UniverseOptions {
    fn default() -> Self {
        UniverseOptions { dim_bound: 3, samples: DEFAULT_SAMPLES, cones: 24, seed: 0 }
    }
}

#[derive(Clone, Debug)]
pub struct Universe {
    pub d: usize,
    pub objects: Vec<UniverseObject>,
    /// Indecomposable modules the universe was built from.
    pub modules: Vec<Representation>,
    buckets: HashMap<Vec<(i64, Vec<usize>)>, Vec<usize>>,
    seed: u64,
}

impl Universe {
    pub fn empty(d: usize, seed: u64) -> Self {
        Universe { d, objects: Vec::new(), modules: Vec::new(), buckets: HashMap::new(), seed }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Index of a member isomorphic to the indecomposable with this
    /// reduced presentation.
    pub fn find(&self, alg: &Algebra, pres: &ProjComplex) -> Result<Option<usize>> {
        let key = pres.multiplicities(alg.vertex_count());
        if let Some(ids) = self.buckets.get(&key) {
            for &i in ids {
                match iso_minimal(alg, &self.objects[i].presentation, pres, DEFAULT_TRIALS, self.seed) {
                    IsoResult::Yes(_) => return Ok(Some(i)),
                    IsoResult::No(_) => {}
                    IsoResult::Undecided => return Err(Error::UndecidedIso),
                }
            }
        }
        Ok(None)
    }

    /// Adds the indecomposable summands of a heart object; returns their
    /// indices.
    pub fn add(&mut self, alg: &Algebra, x: &WindowComplex, origin: &str) -> Result<Vec<usize>> {
        let pres = reduced_presentation(alg, x);
        self.add_presentation(alg, &pres, origin)
    }

    /// Same as [`Universe::add`] for a complex of projectives in `[-d, 0]`,
    /// read through its truncation.
    pub fn add_presentation(&mut self, alg: &Algebra, pres: &ProjComplex, origin: &str) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for part in decompose_k(alg, pres, self.seed)? {
            let w = truncate_window(alg, &part, self.d)?;
            if w.is_zero_object(alg) {
                continue;
            }
            let part = reduced_presentation(alg, &w);
            if let Some(i) = self.find(alg, &part)? {
                out.push(i);
                continue;
            }
            let i = self.objects.len();
            self.buckets.entry(part.multiplicities(alg.vertex_count())).or_default().push(i);
            self.objects.push(UniverseObject { window: w, presentation: part, origin: origin.to_string() });
            out.push(i);
        }
        Ok(out)
    }

    /// Stalk modules and their window shifts, injectives `J(v)[d-1]`,
    /// brutal truncations of resolutions, and truncations of random cones
    /// between members.
    pub fn build(alg: &Algebra, d: usize, opts: &UniverseOptions) -> Result<Universe> {
        let mut u = Universe::empty(d, opts.seed);
        let modules = indecomposable_modules(alg, opts.dim_bound, opts.samples, opts.seed)?;
        for j in 0..d {
            for m in &modules {
                u.add(alg, &WindowComplex::module(alg, d, m.clone(), j)?, &format!("module[{j}]"))?;
            }
        }
        for v in 0..alg.vertex_count() {
            u.add(alg, &injective_shifted(alg, d, v)?, "injective")?;
        }
        // brutal truncations of shifted resolutions
        let di = d as i64;
        for m in &modules {
            let res = resolve(alg, &ModComplex::stalk(m.clone(), 0), -di - 1).proj;
            for j in 0..di {
                let shifted = res.shift(alg, j);
                for lo in -di..-j {
                    u.add_presentation(alg, &shifted.brutal(alg, lo, 0), "truncated resolution")?;
                }
            }
        }
        u.add_cones(alg, opts.cones, opts.seed)?;
        u.modules = modules;
        Ok(u)
    }

    /// Truncations of cones of random maps `X -> Y[k]` between members.
    pub fn add_cones(&mut self, alg: &Algebra, count: usize, seed: u64) -> Result<()> {
        if self.objects.is_empty() {
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x636f6e65);
        let p = alg.prime();
        let d = self.d as i64;
        let mut attempts = 0;
        let mut made = 0;
        while made < count && attempts < 8 * count {
            attempts += 1;
            let a = rng.gen_range(0..self.objects.len());
            let b = rng.gen_range(0..self.objects.len());
            let k = rng.gen_range(0..=1i64);
            let x = self.objects[a].presentation.clone();
            let y = self.objects[b].presentation.shift(alg, k);
            let basis = hom_basis_k(alg, &x, &y);
            if basis.is_empty() {
                continue;
            }
            let mut f: ProjChainMap = x.zero_map(alg, &y);
            for g in &basis {
                f = f.add(alg, &g.scale(alg, rng.gen_range(1..p)), &x, &y);
            }
            let cone = minimize(alg, &x.cone(alg, &y, &f)).brutal(alg, -d, 0);
            if cone.is_zero() {
                continue;
            }
            self.add_presentation(alg, &cone, "cone")?;
            made += 1;
        }
        Ok(())
    }

    pub fn windows(&self) -> Vec<WindowComplex> {
        self.objects.iter().map(|o| o.window.clone()).collect()
    }
}

/// `J(v)[d-1]`, the `E`-injective objects of the heart.
pub fn injective_shifted(alg: &Algebra, d: usize, v: usize) -> Result<WindowComplex> {
    WindowComplex::module(alg, d, alg.injective(v), d - 1)
}
