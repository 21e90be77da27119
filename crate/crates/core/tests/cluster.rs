use proptest::prelude::*;
use toda_core::cluster::{build_qn, commuting_square_holds, laurent_closure, Quiver, SeedA, SeedX};

fn skew(n: usize) -> impl Strategy<Value = Quiver> {
    prop::collection::vec(-2i64..=2, n * (n - 1) / 2).prop_map(move |upper| {
        let mut adj = vec![vec![0; n]; n];
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it.next().unwrap();
                adj[i][j] = v;
                adj[j][i] = -v;
            }
        }
        Quiver::from_adj(adj).unwrap()
    })
}

proptest! {
    #[test]
    fn quiver_mutation_is_involutive(q in skew(5), k in 1usize..=5) {
        prop_assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q);
    }

    #[test]
    fn seed_mutation_is_involutive(q in skew(4), k in 1usize..=4) {
        let a = SeedA::initial(&q);
        prop_assert_eq!(a.mutate(k).unwrap().mutate(k).unwrap(), a);
        let x = SeedX::initial(&q);
        prop_assert_eq!(x.mutate(k).unwrap().mutate(k).unwrap(), x);
    }
}

#[test]
fn qn_shape() {
    for n in 1..=6 {
        let q = build_qn(n).unwrap();
        assert_eq!(q.n(), 2 * n);
        assert_eq!(q.arrow_count() as usize, 4 * n - 2);
    }
}

#[test]
fn laurent_along_short_sequences() {
    for n in 1..=2 {
        let q = build_qn(n).unwrap();
        assert!(laurent_closure(&q, 4).unwrap() > 0);
    }
}

#[test]
fn p_map_intertwines_mutations() {
    let q = build_qn(2).unwrap();
    for seq in [vec![1], vec![1, 3], vec![2, 4, 1], vec![1, 2, 3, 4]] {
        assert!(commuting_square_holds(&q, &seq).unwrap(), "{seq:?}");
    }
}

#[test]
fn vertex_range_is_checked() {
    let q = build_qn(2).unwrap();
    assert!(q.mutate(0).is_err());
    assert!(q.mutate(5).is_err());
}
