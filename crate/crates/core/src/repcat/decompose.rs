//! Krull–Schmidt decomposition over `F_p` via idempotents of the
//! endomorphism algebra.
//!
//! The radical of `End(X)` is the kernel of the trace form, which is exact
//! once `p` exceeds the dimension of `X`.  Idempotents come from coprime
//! factorizations of minimal polynomials of random endomorphisms, so they
//! are exact and need no lifting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::diagram::{compose, Diagram, NodeMaps};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};

pub const DEFAULT_BUDGET: usize = 64;

#[derive(Clone, Debug)]
pub struct Summand {
    pub diagram: Diagram,
    /// Inclusion into the decomposed diagram.
    pub incl: NodeMaps,
}

/// Decomposes `x` into indecomposable summands (over `F_p`).
pub fn decompose(x: &Diagram, seed: u64, budget: usize) -> Result<Vec<Summand>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut work = vec![Summand { diagram: x.clone(), incl: x.identity() }];
    while let Some(s) = work.pop() {
        if s.diagram.total_dim() == 0 {
            continue;
        }
        match split(&s.diagram, &mut rng, budget)? {
            None => out.push(s),
            Some(e) => {
                let p = x.p;
                let one_minus: NodeMaps =
                    e.iter().map(|m| Matrix::identity(p, m.rows()).sub(m)).collect();
                for idem in [e, one_minus] {
                    let basis: NodeMaps = idem.iter().map(|m| m.column_space()).collect();
                    let sub = s.diagram.restrict(&basis);
                    work.push(Summand { diagram: sub, incl: compose(&s.incl, &basis) });
                }
            }
        }
    }
    // deterministic order: larger summands first, then by dimension vector
    out.sort_by(|a, b| {
        b.diagram.total_dim().cmp(&a.diagram.total_dim()).then_with(|| a.diagram.dims.cmp(&b.diagram.dims))
    });
    Ok(out)
}

/// Dimension check for the trace-form radical.
pub fn check_field(x: &Diagram, end_dim: usize) -> Result<()> {
    let needed = x.total_dim().max(end_dim);
    if (x.p as usize) <= needed {
        return Err(Error::FieldTooSmall { p: x.p, needed });
    }
    Ok(())
}

fn trace(f: &NodeMaps) -> u32 {
    let p = f.first().map_or(2, |m| m.prime());
    f.iter().fold(0, |s, m| linalg::add(p, s, m.trace()))
}

/// Dimension of `End(x) / rad End(x)`.
pub fn top_dim_of_end(x: &Diagram, basis: &[NodeMaps]) -> usize {
    let m = basis.len();
    let mut gram = Matrix::zeros(x.p, m, m);
    for i in 0..m {
        for j in 0..m {
            gram.set(i, j, trace(&compose(&basis[i], &basis[j])));
        }
    }
    gram.rank()
}

pub fn is_indecomposable(x: &Diagram) -> Result<bool> {
    if x.total_dim() == 0 {
        return Ok(false);
    }
    let basis = x.hom_basis(x);
    check_field(x, basis.len())?;
    Ok(top_dim_of_end(x, &basis) == 1)
}

/// Returns a nontrivial idempotent, or `None` when `End(x)` is local.
fn split(x: &Diagram, rng: &mut ChaCha8Rng, budget: usize) -> Result<Option<NodeMaps>> {
    let basis = x.hom_basis(x);
    check_field(x, basis.len())?;
    if top_dim_of_end(x, &basis) == 1 {
        return Ok(None);
    }
    let p = x.p;
    for _ in 0..budget {
        let mut y: NodeMaps = x.zero_map(x);
        for b in &basis {
            let c = rng.gen_range(0..p);
            y = y.iter().zip(b).map(|(a, m)| a.add(&m.scale(c))).collect();
        }
        if let Some(e) = idempotent_from(&y, p) {
            return Ok(Some(e));
        }
    }
    Err(Error::RandomBudgetExhausted(budget))
}

fn flatten(f: &NodeMaps) -> Vec<u32> {
    f.iter().flat_map(|m| m.data().to_vec()).collect()
}

/// Minimal polynomial of a block endomorphism, low degree first, monic.
pub fn min_poly(y: &NodeMaps, p: u32) -> Vec<u32> {
    let id: NodeMaps = y.iter().map(|m| Matrix::identity(p, m.rows())).collect();
    let len: usize = y.iter().map(|m| m.rows() * m.cols()).sum();
    let mut powers = vec![flatten(&id)];
    let mut cur = id;
    loop {
        cur = compose(y, &cur);
        let v = flatten(&cur);
        let a = Matrix::from_columns(p, len, &powers);
        if let Ok(c) = a.solve_vec(&v) {
            let mut poly: Vec<u32> = c.iter().map(|&x| linalg::neg(p, x)).collect();
            poly.push(1);
            return poly;
        }
        powers.push(v);
    }
}

fn idempotent_from(y: &NodeMaps, p: u32) -> Option<NodeMaps> {
    let m = min_poly(y, p);
    let roots: Vec<u32> = (0..p).filter(|&l| poly_eval(&m, l, p) == 0).collect();
    for lambda in roots {
        let lin = vec![linalg::neg(p, lambda), 1];
        let mut f = vec![1];
        let mut g = m.clone();
        loop {
            let (q, r) = poly_divmod(&g, &lin, p);
            if !r.iter().all(|&c| c == 0) {
                break;
            }
            g = q;
            f = poly_mul(&f, &lin, p);
        }
        if g.len() <= 1 {
            continue;
        }
        // u f + v g = 1, and e = v(y) g(y) projects onto ker f(y)
        let (_, v) = ext_gcd(&f, &g, p);
        let vg = poly_rem(&poly_mul(&v, &g, p), &m, p);
        return Some(poly_at(&vg, y, p));
    }
    None
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn poly_eval(a: &[u32], x: u32, p: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| linalg::add(p, linalg::mul(p, acc, x), c))
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = linalg::add(p, out[i + j], linalg::mul(p, x, y));
        }
    }
    trim(out)
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| linalg::sub(p, *a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

fn poly_divmod(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = linalg::inv(p, b[db]);
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (vec![0], trim(r));
    }
    let mut q = vec![0; r.len() - db];
    for shift in (0..q.len()).rev() {
        let c = linalg::mul(p, r[shift + db], lead);
        q[shift] = c;
        if c == 0 {
            continue;
        }
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = linalg::sub(p, r[shift + i], linalg::mul(p, c, bc));
        }
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    poly_divmod(a, b, p).1
}

/// Returns `(u, v)` with `u a + v b = 1` for coprime `a`, `b`.
fn ext_gcd(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1], vec![0]);
    let (mut t0, mut t1) = (vec![0], vec![1]);
    while !(r1.len() == 1 && r1[0] == 0) {
        let (q, r) = poly_divmod(&r0, &r1, p);
        let s = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        let t = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.len(), 1, "polynomials are not coprime");
    let c = linalg::inv(p, r0[0]);
    let scale = |v: Vec<u32>| trim(v.into_iter().map(|x| linalg::mul(p, x, c)).collect());
    (scale(s0), scale(t0))
}

fn poly_at(a: &[u32], y: &NodeMaps, p: u32) -> NodeMaps {
    let mut acc: NodeMaps = y.iter().map(|m| Matrix::zeros(p, m.rows(), m.cols())).collect();
    for &c in a.iter().rev() {
        acc = compose(&acc, y);
        acc = acc.iter().map(|m| {
            let id = Matrix::identity(p, m.rows()).scale(c);
            m.add(&id)
        }).collect();
    }
    acc
}

fn is_nilpotent(f: &NodeMaps) -> bool {
    f.iter().all(|m| {
        let mut k = m.clone();
        for _ in 0..m.rows() {
            if k.is_zero() {
                return true;
            }
            k = k.mul(m);
        }
        k.is_zero()
    })
}

/// Isomorphism between two indecomposable diagrams, if one exists.
///
/// For indecomposables every non-iso map lies in the radical, so some pair
/// of basis morphisms has a non-nilpotent composite exactly when `x ≅ y`.
pub fn indecomposable_iso(x: &Diagram, y: &Diagram) -> Option<NodeMaps> {
    if x.dims != y.dims {
        return None;
    }
    let fs = x.hom_basis(y);
    if fs.is_empty() {
        return None;
    }
    let gs = y.hom_basis(x);
    for f in &fs {
        if f.iter().all(|m| m.is_invertible()) {
            return Some(f.clone());
        }
    }
    for f in &fs {
        for g in &gs {
            if !is_nilpotent(&compose(g, f)) {
                return Some(f.clone());
            }
        }
    }
    None
}

/// Groups summands into isomorphism classes, keeping first representatives.
pub fn group_classes(parts: Vec<Summand>) -> Vec<(Summand, usize)> {
    let mut classes: Vec<(Summand, usize)> = Vec::new();
    for s in parts {
        match classes.iter_mut().find(|(c, _)| indecomposable_iso(&c.diagram, &s.diagram).is_some()) {
            Some(entry) => entry.1 += 1,
            None => classes.push((s, 1)),
        }
    }
    classes
}

/// Krull–Schmidt comparison of two diagrams.
pub fn isomorphic(x: &Diagram, y: &Diagram, seed: u64) -> Result<bool> {
    if x.dims != y.dims {
        return Ok(false);
    }
    let cx = group_classes(decompose(x, seed, DEFAULT_BUDGET)?);
    let cy = group_classes(decompose(y, seed, DEFAULT_BUDGET)?);
    if cx.len() != cy.len() {
        return Ok(false);
    }
    Ok(cx.iter().all(|(s, m)| {
        cy.iter().any(|(t, n)| m == n && indecomposable_iso(&s.diagram, &t.diagram).is_some())
    }))
}
