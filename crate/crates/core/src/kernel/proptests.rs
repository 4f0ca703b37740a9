//! Field axioms and the Galois action, on seeded sparse elements.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::{constants, ContextConstants, GaloisElem, Quartic, SplitElem};

fn ctx() -> &'static ContextConstants {
    static CTX: OnceLock<ContextConstants> = OnceLock::new();
    CTX.get_or_init(|| constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap())
}

fn elem(terms: &[(usize, i64, i64)]) -> SplitElem {
    let mut coeffs = vec![BigRational::from_integer(BigInt::from(0)); 48];
    for &(idx, n, d) in terms {
        coeffs[idx] += BigRational::new(n.into(), d.into());
    }
    ctx().field.from_coeffs(&coeffs)
}

fn sparse() -> impl Strategy<Value = SplitElem> {
    prop::collection::vec((0usize..48, -20i64..=20, 1i64..=7), 1..8).prop_map(|t| elem(&t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn field_axioms(a in sparse(), b in sparse(), c in sparse()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn galois_action_is_a_homomorphism(a in sparse(), b in sparse(), gi in 0usize..48, hi in 0usize..48) {
        let all = GaloisElem::all();
        let (g, h) = (all[gi], all[hi]);
        prop_assert_eq!(g.apply(&(&a * &b)), &g.apply(&a) * &g.apply(&b));
        prop_assert_eq!(g.apply(&(&a + &b)), &g.apply(&a) + &g.apply(&b));
        prop_assert_eq!(g.compose(&h).apply(&a), g.apply(&h.apply(&a)));
        prop_assert_eq!(g.inverse().apply(&g.apply(&a)), a.clone());
        let idd = &ctx().i * &ctx().dd;
        prop_assert_eq!(g.apply(&idd), idd.scale(&BigRational::from_integer(g.chi().into())));
    }
}
