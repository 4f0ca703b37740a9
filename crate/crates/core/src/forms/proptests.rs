//! Wedge and pullback laws on seeded random forms.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Form, LinMap};
use crate::kernel::{constants, ContextConstants, Quartic, SplitElem};

fn ctx() -> &'static ContextConstants {
    static CTX: OnceLock<ContextConstants> = OnceLock::new();
    CTX.get_or_init(|| constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap())
}

fn elem(rng: &mut ChaCha8Rng) -> SplitElem {
    let mut coeffs = vec![BigRational::from_integer(BigInt::from(0)); 48];
    for _ in 0..2 {
        coeffs[rng.gen_range(0..48)] += BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into());
    }
    ctx().field.from_coeffs(&coeffs)
}

fn homogeneous(rng: &mut ChaCha8Rng, degree: u32, terms: usize) -> Form<SplitElem> {
    let masks: Vec<u8> = (0u8..=255).filter(|m| m.count_ones() == degree).collect();
    Form::from_terms((0..terms).map(|_| (masks[rng.gen_range(0..masks.len())], elem(rng))))
}

fn any_form(rng: &mut ChaCha8Rng) -> Form<SplitElem> {
    Form::from_terms((0..3).map(|_| (rng.gen::<u8>(), elem(rng))))
}

fn linmap(rng: &mut ChaCha8Rng) -> LinMap<SplitElem> {
    LinMap::from_rows((0..8).map(|_| homogeneous(rng, 1, 3)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn pullback_is_functorial(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = (linmap(&mut rng), linmap(&mut rng));
        let (u, v) = (any_form(&mut rng), any_form(&mut rng));
        prop_assert_eq!(f.then(&g).pullback(&u), g.pullback(&f.pullback(&u)));
        prop_assert_eq!(f.pullback(&u.wedge(&v)), f.pullback(&u).wedge(&f.pullback(&v)));
        prop_assert_eq!(f.pullback(&u.plus(&v)), f.pullback(&u).plus(&f.pullback(&v)));
    }

    #[test]
    fn wedge_is_associative_and_graded_commutative(seed in any::<u64>(), p in 0u32..=4, r in 0u32..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = homogeneous(&mut rng, p, 3);
        let v = homogeneous(&mut rng, r, 3);
        let w = any_form(&mut rng);
        prop_assert_eq!(u.wedge(&v).wedge(&w), u.wedge(&v.wedge(&w)));
        let swapped = v.wedge(&u);
        let expected = if (p * r) % 2 == 1 { swapped.negated() } else { swapped };
        prop_assert_eq!(u.wedge(&v), expected);
        if p % 2 == 1 {
            prop_assert!(u.wedge(&u).is_zero());
        }
    }
}
