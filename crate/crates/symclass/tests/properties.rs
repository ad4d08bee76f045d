//! Randomized property tests for the scalar tower and the operator engine.

use proptest::prelude::*;

use symclass::diffop::PolyDiffOp;
use symclass::partition::{partitions_of, Partition};
use symclass::qlaurent::QLaurent;
use symclass::scalar::{parse_rat, rat_string, rfrac, rint, Rat};
use symclass::symfunc::SymF;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rfrac(n, d))
}

fn arb_qlaurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-4i64..=4, arb_rat()), 0..5).prop_map(|terms| {
        let mut p = QLaurent::zero();
        for (e, c) in terms {
            p = p.add(&QLaurent::monomial(e, c));
        }
        p
    })
}

fn arb_partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(move |w| {
        let parts = partitions_of(w);
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rat_string_round_trips(r in arb_rat()) {
        prop_assert_eq!(parse_rat(&rat_string(&r)), Some(r));
    }

    #[test]
    fn qlaurent_division_round_trips(a in arb_qlaurent(), b in arb_qlaurent()) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        prop_assert_eq!(prod.div_exact(&b), Some(a));
    }

    #[test]
    fn qlaurent_q_inversion_is_involutive(a in arb_qlaurent()) {
        prop_assert_eq!(a.invert_q().invert_q(), a);
    }

    #[test]
    fn boson_adjointness(mu in arb_partition(5), nu in arb_partition(5), k in 1u32..=4) {
        // <p_k f, g> = <f, k d/dp_k g> under the standard scalar product.
        let f = SymF::monomial(mu, rint(1));
        let g = SymF::monomial(nu, rint(1));
        let raise = PolyDiffOp::alpha(-(k as i64));
        let lower = PolyDiffOp::alpha(k as i64);
        let lhs = raise.apply(&f).unwrap().scalar_product(&g);
        let rhs = f.scalar_product(&lower.apply(&g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operator_composition_is_associative(
        j in 1i64..=3, k in 1i64..=3, mu in arb_partition(4)
    ) {
        let a = PolyDiffOp::alpha(j).compose(&PolyDiffOp::alpha(-k));
        let b = PolyDiffOp::alpha(-j);
        let c = PolyDiffOp::alpha(k);
        let f = SymF::monomial(mu, rint(1));
        let left = a.compose(&b).compose(&c).apply(&f).unwrap();
        let right = a.compose(&b.compose(&c)).apply(&f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn times_product_is_commutative(mu in arb_partition(5), nu in arb_partition(5)) {
        prop_assume!(mu.weight() == nu.weight());
        let f = SymF::monomial(mu, rint(1));
        let g = SymF::monomial(nu, rint(1));
        prop_assert_eq!(
            symclass::schur::times_product(&f, &g),
            symclass::schur::times_product(&g, &f)
        );
    }
}
