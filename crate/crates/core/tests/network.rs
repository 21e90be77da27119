use proptest::prelude::*;
use toda_core::cluster::build_qn;
use toda_core::network::homology::{homology_ring, QuadraticRefinement};
use toda_core::network::{
    bps_spectrum_of, crossing_sequence, holonomy_trace_for, lift_path, quadratic_refinement, theta_scan, HomologyClass,
};
use toda_core::toda::{hamiltonian_matrix, Coords};

fn class(rank: usize) -> impl Strategy<Value = HomologyClass> {
    (prop::collection::vec(-6i64..=6, rank), prop::collection::vec(-6i64..=6, rank))
        .prop_map(|(a, b)| HomologyClass { a, b })
}

fn pair() -> impl Strategy<Value = (HomologyClass, HomologyClass)> {
    (1usize..=7).prop_flat_map(|r| (class(r), class(r)))
}

proptest! {
    #[test]
    fn refinement_law((x, y) in pair()) {
        let sign = if x.pairing(&y).rem_euclid(2) == 0 { 1 } else { -1 };
        prop_assert_eq!(
            quadratic_refinement(&x.add(&y)),
            quadratic_refinement(&x) * quadratic_refinement(&y) * sign
        );
    }

    #[test]
    fn pairing_is_skew((x, y) in pair()) {
        prop_assert_eq!(x.pairing(&y), -y.pairing(&x));
        prop_assert_eq!(x.pairing(&x), 0);
    }

    #[test]
    fn any_parities_give_a_refinement((x, y) in pair(), bits in any::<u16>()) {
        let r = x.rank();
        let q = QuadraticRefinement {
            a_odd: (0..r).map(|i| bits >> i & 1 == 1).collect(),
            b_odd: (0..r).map(|i| bits >> (i + 8) & 1 == 1).collect(),
        };
        let sign = if x.pairing(&y).rem_euclid(2) == 0 { 1 } else { -1 };
        prop_assert_eq!(q.eval(&x.add(&y)), q.eval(&x) * q.eval(&y) * sign);
    }
}

#[test]
fn symplectic_basis() {
    for r in 1..=5 {
        for i in 1..=r {
            for j in 1..=r {
                let a = HomologyClass::a_cycle(r, i);
                let b = HomologyClass::b_cycle(r, j);
                assert_eq!(a.pairing(&b), i64::from(i == j));
                assert_eq!(a.pairing(&HomologyClass::a_cycle(r, j)), 0);
            }
        }
    }
}

#[test]
fn every_scanned_splitting_gives_qn_and_the_hamiltonians() {
    for sheets in 2..=5 {
        let qn = build_qn(sheets - 1).unwrap();
        let scan = theta_scan(sheets).unwrap();
        assert!(scan.len() >= 2);
        for (theta, s) in scan {
            assert_eq!(bps_spectrum_of(&s).unwrap().quiver, qn, "N={sheets} theta={theta}");
            for k in 1..sheets {
                assert_eq!(
                    holonomy_trace_for(&s, k).unwrap(),
                    hamiltonian_matrix(sheets - 1, k, Coords::X).unwrap(),
                    "N={sheets} k={k} theta={theta}"
                );
            }
        }
    }
}

#[test]
fn lifted_entries_have_trivial_spin() {
    for sheets in 2..=6 {
        for (_, s) in theta_scan(sheets).unwrap() {
            let m = lift_path(&s).unwrap();
            assert_eq!(m.size(), sheets);
            assert_eq!(m.ring().nvars(), homology_ring(sheets - 1).nvars());
            assert!(crossing_sequence(&s).unwrap().wall_count() > 0);
            let mut seen = 0;
            for i in 0..sheets {
                for (e, _) in m.get(i, i).terms() {
                    assert_eq!(quadratic_refinement(&HomologyClass::from_exponents(e)), 1);
                    seen += 1;
                }
            }
            assert!(seen >= sheets);
        }
    }
}

#[test]
fn positive_spectrum_size() {
    for sheets in 2..=8 {
        let (_, s) = theta_scan(sheets).unwrap().remove(0);
        let spectrum = bps_spectrum_of(&s).unwrap();
        assert_eq!(spectrum.positive.len(), sheets * (sheets - 1));
        assert_eq!(spectrum.basis.len(), 2 * (sheets - 1));
    }
}
