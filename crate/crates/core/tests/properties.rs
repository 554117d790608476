use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use wreathchar::cyclotomic::CycloNum;
use wreathchar::partitions::{mn_character, Partition, QPoly};
use wreathchar::permwreath::Perm;

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]), prop::collection::vec((-4i64..=4, 1i64..=3, 0i64..12), 0..4)).prop_map(
        |(n, terms)| {
            terms
                .into_iter()
                .map(|(num, den, k)| {
                    let c = CycloNum::from_rational(BigRational::new(num.into(), den.into()));
                    c * CycloNum::root_of_unity(k, n).expect("n >= 1")
                })
                .sum()
        },
    )
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..6, 0..6).prop_map(Partition::from_unsorted)
}

fn perm(m: usize) -> impl Strategy<Value = Perm> {
    Just((0..m).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).expect("shuffle"))
}

/// A partition of `n` and a cycle type of `S_n`.
fn same_size() -> impl Strategy<Value = (Partition, Partition)> {
    (1usize..=8).prop_flat_map(|n| {
        let parts = prop::collection::vec(1usize..=n, 1..=n).prop_map(move |v| {
            let mut left = n;
            let mut out = Vec::new();
            for x in v {
                let x = x.min(left);
                if x > 0 {
                    out.push(x);
                    left -= x;
                }
            }
            out.extend(std::iter::repeat_n(1, left));
            Partition::from_unsorted(out)
        });
        (parts, perm(n).prop_map(|g| g.cycle_type()))
    })
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-5i64..=5, 0..6).prop_map(|c| QPoly::from_i64(&c))
}

proptest! {
    #[test]
    fn cyclo_ring_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
    }

    #[test]
    fn cyclo_inverse(a in cyclo()) {
        match a.inverse() {
            Ok(inv) => prop_assert_eq!(a * inv, CycloNum::one()),
            Err(_) => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn cyclo_conjugation_is_a_ring_map(a in cyclo(), b in cyclo()) {
        prop_assert_eq!((a.clone() * b.clone()).conjugate(), a.conjugate() * b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert!((a.clone() * a.conjugate()).conjugate() == a.clone() * a.conjugate());
    }

    #[test]
    fn cyclo_display_roundtrip(a in cyclo()) {
        let back: CycloNum = a.to_string().parse().expect("parse own output");
        prop_assert_eq!(back, a);
    }

    #[test]
    fn conjugate_partition_is_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn sign_twist_by_conjugation((p, mu) in same_size()) {
        prop_assert_eq!(mn_character(&p.conjugate(), &mu), mu.sign() * mn_character(&p, &mu));
    }

    #[test]
    fn partition_display_roundtrip(p in partition()) {
        let back: Partition = p.to_string().parse().expect("parse own output");
        prop_assert_eq!(back, p);
    }

    #[test]
    fn qpoly_display_roundtrip(f in qpoly()) {
        let back: QPoly = f.to_string().parse().expect("parse own output");
        prop_assert_eq!(back, f);
    }

    #[test]
    fn qpoly_eval_is_a_ring_map(f in qpoly(), g in qpoly(), q in -4i64..=4) {
        prop_assert_eq!((&f * &g).eval_i64(q), f.eval_i64(q) * g.eval_i64(q));
        prop_assert_eq!((&f + &g).eval_i64(q), f.eval_i64(q) + g.eval_i64(q));
        prop_assert_eq!(f.scale(&BigInt::from(3)).eval_i64(q), f.eval_i64(q) * 3);
    }

    #[test]
    fn perm_group_laws(g in perm(6), h in perm(6), k in perm(6)) {
        prop_assert_eq!(g.compose(&h).compose(&k), g.compose(&h.compose(&k)));
        prop_assert!(g.compose(&g.inverse()).is_identity());
        prop_assert!(g.pow(g.order() as i64).is_identity());
        prop_assert_eq!(g.compose(&h).inverse(), h.inverse().compose(&g.inverse()));
        prop_assert_eq!(g.conjugate(&h).cycle_type(), h.cycle_type());
    }

    #[test]
    fn perm_display_roundtrip(g in perm(7)) {
        let back: Perm = g.to_string().parse().expect("parse own output");
        prop_assert_eq!(back, g);
    }
}
