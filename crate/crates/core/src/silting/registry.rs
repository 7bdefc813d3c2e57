//! Deduplicating store of silting complexes up to isomorphism.

use std::collections::HashMap;

use super::SiltingComplex;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homotopy::iso::{iso_minimal, IsoResult, DEFAULT_TRIALS};
use crate::homotopy::ProjComplex;

/// Graded multiplicities of every summand, sorted.
pub type Key = Vec<Vec<(i64, Vec<usize>)>>;

pub fn key(alg: &Algebra, s: &SiltingComplex) -> Key {
    let mut k: Key = s.summands.iter().map(|x| x.multiplicities(alg.vertex_count())).collect();
    k.sort();
    k
}

#[derive(Clone, Debug, Default)]
pub struct Registry {
    entries: Vec<SiltingComplex>,
    buckets: HashMap<Key, Vec<usize>>,
    seed: u64,
}

fn summand_iso(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, seed: u64) -> Result<bool> {
    match iso_minimal(alg, x, y, DEFAULT_TRIALS, seed) {
        IsoResult::Yes(_) => Ok(true),
        IsoResult::No(_) => Ok(false),
        IsoResult::Undecided => Err(Error::UndecidedIso),
    }
}

/// Same summands up to isomorphism (both basic, minimal summands).
pub fn same_summands(alg: &Algebra, a: &SiltingComplex, b: &SiltingComplex, seed: u64) -> Result<bool> {
    if a.summands.len() != b.summands.len() {
        return Ok(false);
    }
    for x in &a.summands {
        let mut hit = false;
        for y in &b.summands {
            if summand_iso(alg, x, y, seed)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Registry {
    pub fn new(seed: u64) -> Self {
        Registry { entries: Vec::new(), buckets: HashMap::new(), seed }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[SiltingComplex] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<SiltingComplex> {
        self.entries
    }

    pub fn find(&self, alg: &Algebra, s: &SiltingComplex) -> Result<Option<usize>> {
        if let Some(ids) = self.buckets.get(&key(alg, s)) {
            for &i in ids {
                if same_summands(alg, &self.entries[i], s, self.seed)? {
                    return Ok(Some(i));
                }
            }
        }
        Ok(None)
    }

    /// Index of `s`, and whether it was new.
    pub fn insert(&mut self, alg: &Algebra, s: SiltingComplex) -> Result<(usize, bool)> {
        if let Some(i) = self.find(alg, &s)? {
            return Ok((i, false));
        }
        let i = self.entries.len();
        self.buckets.entry(key(alg, &s)).or_default().push(i);
        self.entries.push(s);
        Ok((i, true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_by_summands() {
        let alg = Algebra::linear_a(1009, 2);
        let mut r = Registry::new(0);
        let a = SiltingComplex::regular(&alg, 1);
        let mut b = a.clone();
        b.summands.reverse();
        assert_eq!(r.insert(&alg, a).unwrap(), (0, true));
        assert_eq!(r.insert(&alg, b).unwrap(), (0, false));
        assert_eq!(r.insert(&alg, SiltingComplex::shifted_regular(&alg, 1)).unwrap(), (1, true));
        assert_eq!(r.len(), 2);
    }
}
