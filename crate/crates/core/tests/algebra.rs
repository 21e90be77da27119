use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use toda_core::exactalg::{exterior_trace, k_subsets, LaurentPoly, PolyMatrix, Ring};

fn ring() -> Arc<Ring> {
    Ring::indexed("y", 3, 2)
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-4i64..=4, 3), -5i64..=5), 0..6).prop_map(|terms| {
        let r = ring();
        terms
            .into_iter()
            .fold(LaurentPoly::zero(&r), |acc, (e, c)| acc.add(&LaurentPoly::monomial(&r, e, BigInt::from(c))).unwrap())
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&LaurentPoly::one(&ring())).unwrap(), a.clone());
    }

    #[test]
    fn exact_divide_inverts_mul(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b).unwrap();
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in poly()) {
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn diagonal_exterior_trace_is_elementary_symmetric(diag in prop::collection::vec(poly(), 1..5), k in 0usize..5) {
        let r = ring();
        let size = diag.len();
        prop_assume!(k <= size);
        let m = PolyMatrix::diagonal(&r, diag.clone());
        let mut e = LaurentPoly::zero(&r);
        for s in k_subsets(size, k) {
            let term = s.iter().fold(LaurentPoly::one(&r), |acc, &i| acc.mul(&diag[i]).unwrap());
            e = e.add(&term).unwrap();
        }
        prop_assert_eq!(exterior_trace(&m, k).unwrap(), e);
    }
}

#[test]
fn exact_divide_rejects_nondivisors() {
    let r = ring();
    let y1 = LaurentPoly::var(&r, 0);
    let y2 = LaurentPoly::var(&r, 1);
    let sum = y1.add(&y2).unwrap();
    let diff = y1.sub(&y2).unwrap();
    assert!(sum.exact_divide(&diff).is_err());
}

#[test]
fn canonical_text_is_order_independent() {
    let r = ring();
    let y1 = LaurentPoly::var(&r, 0);
    let y3 = LaurentPoly::monomial(&r, vec![0, 0, -1], BigInt::from(2));
    assert_eq!(y1.add(&y3).unwrap().to_string(), y3.add(&y1).unwrap().to_string());
    assert_eq!(y1.add(&y3).unwrap().to_json(), y3.add(&y1).unwrap().to_json());
}
