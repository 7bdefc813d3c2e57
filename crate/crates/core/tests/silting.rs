mod common;

use tiltlab::repcat::indecomposables::{indecomposable_modules, DEFAULT_SAMPLES};
use tiltlab::silting::enumerate::{by_clique, by_mutation, same_classes, EnumerationOptions};
use tiltlab::silting::{is_silting, SiltingVerdict};
use tiltlab::Algebra;

#[test]
fn every_class_has_unimodular_k0() {
    let cases = [(Algebra::linear_a(1009, 3), 1), (Algebra::linear_a(1009, 2), 2), (Algebra::linear_rad2(1009, 3), 2)];
    for (alg, d) in cases {
        for s in by_mutation(&alg, d, &EnumerationOptions::default()).unwrap() {
            let k0 = s.k0_matrix(&alg);
            assert_eq!(k0.len(), alg.vertex_count());
            assert_eq!(common::cofactor_det(&k0).abs(), 1);
            assert_eq!(is_silting(&alg, &s), SiltingVerdict::Silting);
            assert!(s.in_window());
        }
    }
}

#[test]
fn mutation_and_cliques_find_the_same_classes() {
    for (alg, d) in [(Algebra::linear_a(1009, 2), 2), (Algebra::linear_a(1009, 3), 1)] {
        let opts = EnumerationOptions::default();
        let a = by_mutation(&alg, d, &opts).unwrap();
        let modules = indecomposable_modules(&alg, 3, DEFAULT_SAMPLES, 0).unwrap();
        let b = by_clique(&alg, d, &modules, &opts).unwrap();
        assert_eq!(a.len(), b.len());
        assert!(same_classes(&alg, &a, &b, 0).unwrap());
    }
}

#[test]
fn single_vertex_counts_grow_with_window() {
    // over a field the classes are P[j] for 0 <= j <= d
    let alg = Algebra::linear_a(1009, 1);
    for d in 1..=3 {
        assert_eq!(by_mutation(&alg, d, &EnumerationOptions::default()).unwrap().len(), d + 1);
    }
}
