mod common;

use proptest::prelude::*;
use tiltlab::linalg::Matrix;
use tiltlab::repcat::{ext_dim, hom_basis, hom_dim, Representation};
use tiltlab::Algebra;

fn representation(alg: &Algebra, dims: &[usize], entries: &[u32]) -> Representation {
    let p = alg.prime();
    let mut it = entries.iter().cycle();
    let maps = alg
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target], dims[a.source]);
            Matrix::from_vec(p, r, c, (0..r * c).map(|_| it.next().unwrap() % p).collect())
        })
        .collect();
    Representation::new(dims.to_vec(), maps)
}

fn arb_rep(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<u32>)> {
    (prop::collection::vec(0usize..=2, n), prop::collection::vec(0u32..1009, 1..12))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_dimension_matches_intertwiner_nullity((da, ea) in arb_rep(3), (db, eb) in arb_rep(3)) {
        let alg = Algebra::linear_a(1009, 3);
        let m = representation(&alg, &da, &ea);
        let n = representation(&alg, &db, &eb);
        prop_assert_eq!(hom_dim(&alg, &m, &n), common::hom_dim_oracle(&alg, &m, &n));
        let basis = hom_basis(&alg, &m, &n);
        for f in &basis {
            prop_assert!(m.is_module_map(&alg, &n, f));
        }
        let flat: Vec<Vec<u64>> = basis
            .iter()
            .map(|f| f.maps.iter().flat_map(|x| x.data().iter().map(|&v| v as u64)).collect())
            .collect();
        prop_assert_eq!(common::rank_mod(flat, 1009), basis.len());
    }

    #[test]
    fn ext_matches_euler_form_on_hereditary((da, ea) in arb_rep(3), (db, eb) in arb_rep(3)) {
        let alg = Algebra::linear_a(1009, 3);
        let m = representation(&alg, &da, &ea);
        let n = representation(&alg, &db, &eb);
        let hom = common::hom_dim_oracle(&alg, &m, &n) as i64;
        let ext1 = ext_dim(&alg, &m, &n, 1).unwrap() as i64;
        prop_assert_eq!(hom - ext1, common::euler_form(&alg, m.dims(), n.dims()));
        prop_assert_eq!(ext_dim(&alg, &m, &n, 2).unwrap(), 0);
    }
}

#[test]
fn ext_between_simples_without_finite_global_dimension() {
    let alg = Algebra::linear_rad2(1009, 3);
    // Ext^i(S(v), S(w)) is one-dimensional exactly along walks of length i
    for v in 0..3 {
        for w in 0..3 {
            for i in 1..3 {
                let e = ext_dim(&alg, &alg.simple(v), &alg.simple(w), i).unwrap();
                assert_eq!(e, (walk(&alg, v, i) == Some(w)) as usize, "Ext^{i}(S{v}, S{w})");
            }
        }
    }
}

/// Endpoint of the unique walk of length `i` from `v`, if any.
fn walk(alg: &Algebra, v: usize, i: usize) -> Option<usize> {
    let mut at = v;
    for _ in 0..i {
        at = alg.arrows().iter().find(|a| a.source == at)?.target;
    }
    Some(at)
}
