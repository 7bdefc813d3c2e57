//! Irreducible silting mutation inside the window `[-d, 0]`.

use super::decompose::decompose_k;
use super::hom::{left_approximation, right_approximation};
use super::iso::{iso_minimal, DEFAULT_TRIALS};
use super::minimize::minimize;
use super::ProjComplex;
use crate::algebra::Algebra;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Replaces `s[k]` by the new summand of the cone (left) or cocone (right)
/// of its approximation by the remaining summands.  Summands of the cone
/// isomorphic to remaining summands are discarded.
pub fn mutate(
    alg: &Algebra,
    s: &[ProjComplex],
    k: usize,
    dir: Direction,
    d: usize,
    seed: u64,
) -> Result<Vec<ProjComplex>> {
    let x = &s[k];
    let others: Vec<ProjComplex> = s.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, y)| y.clone()).collect();
    let cone = match dir {
        Direction::Left => {
            let (e, g) = left_approximation(alg, x, &others);
            x.cone(alg, &e, &g)
        }
        Direction::Right => {
            let (e, g) = right_approximation(alg, &others, x);
            e.cone(alg, x, &g).shift(alg, -1)
        }
    };
    let cone = minimize(alg, &cone);
    let mut fresh = Vec::new();
    for part in decompose_k(alg, &cone, seed)? {
        let known = others.iter().any(|o| iso_minimal(alg, o, &part, DEFAULT_TRIALS, seed).is_yes());
        if !known {
            fresh.push(part);
        }
    }
    if fresh.len() != 1 {
        return Err(Error::NotPresilting);
    }
    let y = fresh.pop().unwrap();
    if !y.within(-(d as i64), 0) {
        return Err(Error::OutOfWindow);
    }
    let mut out = s.to_vec();
    out[k] = y;
    Ok(out)
}

pub fn left_mutation(alg: &Algebra, s: &[ProjComplex], k: usize, d: usize, seed: u64) -> Result<Vec<ProjComplex>> {
    mutate(alg, s, k, Direction::Left, d, seed)
}

pub fn right_mutation(alg: &Algebra, s: &[ProjComplex], k: usize, d: usize, seed: u64) -> Result<Vec<ProjComplex>> {
    mutate(alg, s, k, Direction::Right, d, seed)
}
