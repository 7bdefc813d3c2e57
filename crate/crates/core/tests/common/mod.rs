//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use tiltlab::repcat::Representation;
use tiltlab::Algebra;

/// Rank over `F_p` by plain row reduction.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Offsets of the blocks `f_v` (`n_v x m_v`, row-major) in the unknown vector.
fn offsets(m: &Representation, n: &Representation) -> (Vec<usize>, usize) {
    let mut off = Vec::new();
    let mut total = 0;
    for (a, b) in m.dims().iter().zip(n.dims()) {
        off.push(total);
        total += a * b;
    }
    (off, total)
}

/// The intertwining equations `N_a f_s - f_t M_a = 0`, one row per entry.
pub fn intertwining_system(alg: &Algebra, m: &Representation, n: &Representation) -> (Vec<Vec<u64>>, usize) {
    let p = alg.prime() as u64;
    let (off, total) = offsets(m, n);
    let mut rows = Vec::new();
    for (ai, arrow) in alg.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (ma, na) = (&m.arrow_maps()[ai], &n.arrow_maps()[ai]);
        let (ms, nt) = (m.dims()[s], n.dims()[t]);
        let mt = m.dims()[t];
        let ns = n.dims()[s];
        for i in 0..nt {
            for j in 0..ms {
                let mut row = vec![0u64; total];
                // (N_a f_s)_{ij} = sum_k N_a[i][k] f_s[k][j]
                for k in 0..ns {
                    row[off[s] + k * ms + j] += na.get(i, k) as u64;
                }
                // (f_t M_a)_{ij} = sum_k f_t[i][k] M_a[k][j]
                for k in 0..mt {
                    let idx = off[t] + i * mt + k;
                    row[idx] = (row[idx] + p - ma.get(k, j) as u64 % p) % p;
                }
                rows.push(row.into_iter().map(|x| x % p).collect());
            }
        }
    }
    (rows, total)
}

/// `dim Hom(M, N)` as the nullity of the intertwining system.
pub fn hom_dim_oracle(alg: &Algebra, m: &Representation, n: &Representation) -> usize {
    let (rows, total) = intertwining_system(alg, m, n);
    total - rank_mod(rows, alg.prime() as u64)
}

/// Number of module maps `M -> N`, by running over every tuple of vertex
/// matrices.
pub fn exhaustive_hom_count(alg: &Algebra, m: &Representation, n: &Representation) -> u64 {
    let p = alg.prime() as u64;
    let (rows, total) = intertwining_system(alg, m, n);
    assert!(total <= 8, "too many unknowns for exhaustive search");
    let mut x = vec![0u64; total];
    let mut count = 0;
    loop {
        if rows.iter().all(|r| r.iter().zip(&x).map(|(a, b)| a * b).sum::<u64>() % p == 0) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == total {
                return count;
            }
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Euler form `<a, b> = sum_v a_v b_v - sum_{arrows s->t} a_s b_t`.
pub fn euler_form(alg: &Algebra, a: &[usize], b: &[usize]) -> i64 {
    let vertices: i64 = a.iter().zip(b).map(|(x, y)| (x * y) as i64).sum();
    let arrows: i64 = alg.arrows().iter().map(|r| (a[r.source] * b[r.target]) as i64).sum();
    vertices - arrows
}

/// Determinant by cofactor expansion.
pub fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .collect::<Vec<_>>()
        .iter()
        .sum()
}

/// Alternating sum of homology dimension vectors.
pub fn euler_characteristic(homology: &[Vec<usize>], lo: i64) -> Vec<i64> {
    let n = homology.first().map_or(0, |h| h.len());
    let mut out = vec![0i64; n];
    for (k, h) in homology.iter().enumerate() {
        let sign = if (lo + k as i64).rem_euclid(2) == 0 { 1 } else { -1 };
        for (o, &x) in out.iter_mut().zip(h) {
            *o += sign * x as i64;
        }
    }
    out
}
