use std::sync::OnceLock;

use proptest::prelude::*;
use tiltlab::homotopy::iso::{iso_k, DEFAULT_TRIALS};
use tiltlab::io::{proj_from_json, proj_to_json, window_from_json, window_to_json, AlgebraSpec};
use tiltlab::silting::enumerate::{by_mutation, EnumerationOptions};
use tiltlab::silting::SiltingComplex;
use tiltlab::tiltcheck::universe::{Universe, UniverseOptions};
use tiltlab::Algebra;

fn corpus() -> &'static (Algebra, Universe, Vec<SiltingComplex>) {
    static CELL: OnceLock<(Algebra, Universe, Vec<SiltingComplex>)> = OnceLock::new();
    CELL.get_or_init(|| {
        let alg = Algebra::linear_rad2(1009, 3);
        let u = Universe::build(&alg, 2, &UniverseOptions::default()).unwrap();
        let classes = by_mutation(&alg, 2, &EnumerationOptions::default()).unwrap();
        (alg, u, classes)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn summands_survive_json(c in 0usize..1000, k in 0usize..8) {
        let (alg, _, classes) = corpus();
        let s = &classes[c % classes.len()];
        let x = &s.summands[k % s.summands.len()];
        let text = serde_json::to_string(&proj_to_json(alg, x)).unwrap();
        let back = proj_from_json(alg, &serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert!(iso_k(alg, x, &back, DEFAULT_TRIALS, 0).is_yes());
    }

    #[test]
    fn windows_survive_json(a in 0usize..1000) {
        let (alg, u, _) = corpus();
        let x = &u.objects[a % u.len()].window;
        let text = serde_json::to_string(&window_to_json(x)).unwrap();
        let back = window_from_json(alg, 2, &serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back.homology_dims(alg), x.homology_dims(alg));
        prop_assert_eq!(back.cx, x.cx.clone());
    }
}

#[test]
fn algebra_spec_roundtrip() {
    for alg in [Algebra::linear_a(1009, 3), Algebra::linear_rad2(2003, 4)] {
        let spec = AlgebraSpec::from_algebra(&alg, 2);
        let text = serde_json::to_string(&spec).unwrap();
        let rebuilt = AlgebraSpec::parse(&text).unwrap().build().unwrap();
        assert_eq!(rebuilt.dim(), alg.dim());
        assert_eq!(rebuilt.prime(), alg.prime());
        assert_eq!(rebuilt.arrows(), alg.arrows());
    }
}
