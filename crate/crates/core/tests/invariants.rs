use okubo_core::algebra::StructureConstantAlgebra;
use okubo_core::idempotents::{
    enumerate_idempotents, minpoly_check_char_not3, petersson_twist, tau_map, DEFAULT_BUDGET,
};
use okubo_core::liealg::{derivations, is_automorphism, unflatten};
use okubo_core::linalg;
use okubo_core::okubo::*;
use okubo_core::{Field, Scalar, Vector};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::finite(2).unwrap()),
        Just(Field::finite(3).unwrap()),
        Just(Field::finite(4).unwrap()),
        Just(Field::finite(7).unwrap()),
        Just(Field::finite(9).unwrap()),
        Just(Field::finite(25).unwrap()),
        Just(Field::rationals_omega()),
    ]
}

fn vector(f: &Field, raw: &[i64]) -> Vector {
    raw.iter().map(|&c| f.from_i64(c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetric_composition_on_random_elements(
        f in field_strategy(),
        x in proptest::collection::vec(-4i64..5, 8),
        y in proptest::collection::vec(-4i64..5, 8),
        z in proptest::collection::vec(-4i64..5, 8),
    ) {
        let alg = build_split_okubo(&f);
        let (x, y, z) = (vector(&f, &x), vector(&f, &y), vector(&f, &z));
        let xy = alg.mul(&x, &y);
        let nx = alg.norm(&x).unwrap();
        prop_assert_eq!(alg.norm(&xy).unwrap(), f.mul(&nx, &alg.norm(&y).unwrap()));
        prop_assert_eq!(alg.norm_polar(&xy, &z).unwrap(), alg.norm_polar(&x, &alg.mul(&y, &z)).unwrap());
        let scaled = linalg::vscale(&f, &nx, &y);
        prop_assert_eq!(alg.mul(&xy, &x), scaled.clone());
        prop_assert_eq!(alg.mul(&x, &alg.mul(&y, &x)), scaled);
    }

    #[test]
    fn derivations_respect_random_products(
        x in proptest::collection::vec(0i64..3, 8),
        y in proptest::collection::vec(0i64..3, 8),
    ) {
        let f = Field::finite(3).unwrap();
        let alg = build_split_okubo(&f);
        let (x, y) = (vector(&f, &x), vector(&f, &y));
        for v in derivations(&alg).basis() {
            let d = unflatten(&f, 8, v);
            let lhs = d.mul_vec(&alg.mul(&x, &y));
            let rhs = linalg::vadd(&f, &alg.mul(&d.mul_vec(&x), &y), &alg.mul(&x, &d.mul_vec(&y)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn json_round_trip(f in field_strategy()) {
        let alg = build_split_okubo(&f);
        let back = StructureConstantAlgebra::from_json(&alg.to_json()).unwrap();
        prop_assert_eq!(back, alg);
    }
}

#[test]
fn grading_respected_by_all_models() {
    assert!(build_split_okubo(&Field::finite(5).unwrap()).check_grading().unwrap());
    assert!(build_sl3_model(&Field::finite(7).unwrap())
        .unwrap()
        .check_grading()
        .unwrap());
    let (alg, _) = build_char3_model(&Field::finite(9).unwrap()).unwrap();
    assert!(alg.check_grading().unwrap());
}

#[test]
fn tau_maps_send_idempotents_to_idempotents() {
    let alg = build_split_okubo(&Field::finite(3).unwrap());
    let all = enumerate_idempotents(&alg, DEFAULT_BUDGET).unwrap();
    let tau = tau_map(&alg, &all[all.len() / 2]).unwrap();
    for f in &all {
        let image = tau.mul_vec(f);
        assert!(all.contains(&image));
    }
    let twist = petersson_twist(&alg, &all[0]).unwrap();
    assert!(is_automorphism(&twist, &tau_map(&alg, &all[0]).unwrap()));
}

#[test]
fn no_zero_vector_in_census() {
    let f = Field::finite(3).unwrap();
    let alg = build_split_okubo(&f);
    let all = enumerate_idempotents(&alg, DEFAULT_BUDGET).unwrap();
    assert!(all.iter().all(|v| !v.iter().all(|c| *c == Scalar::Fin(0))));
}

#[test]
fn full_census_gf7_minimal_polynomials() {
    let f = Field::finite(7).unwrap();
    let model = Sl3Model::new(&f).unwrap();
    let alg = model.to_algebra().unwrap();
    let all = enumerate_idempotents(&alg, DEFAULT_BUDGET).unwrap();
    assert!(!all.is_empty());
    for idem in &all {
        assert!(minpoly_check_char_not3(&model, idem).unwrap() <= 2);
    }
}
