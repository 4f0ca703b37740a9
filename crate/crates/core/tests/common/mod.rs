//! Shared fixtures and random generators for the acceptance run.
#![allow(dead_code)]

use std::sync::OnceLock;

use hodge_core::forms::{Form, LinMap};
use hodge_core::kernel::{constants, ContextConstants, Quartic, SplitElem};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

pub fn default_fixture() -> Quartic {
    Quartic::from_ints(1, -5, -2, 1)
}

pub fn second_fixture() -> Quartic {
    Quartic::from_ints(1, -7, -2, 6)
}

pub fn fixtures() -> Vec<(&'static str, Quartic)> {
    vec![("x^4-5x^2-2x+1", default_fixture()), ("x^4-7x^2-2x+6", second_fixture())]
}

pub fn ctx() -> &'static ContextConstants {
    static CTX: OnceLock<ContextConstants> = OnceLock::new();
    CTX.get_or_init(|| constants(&default_fixture()).expect("default fixture is admissible"))
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A sparse element from (basis index, numerator, denominator) triples.
pub fn elem_from(c: &ContextConstants, terms: &[(usize, i64, i64)]) -> SplitElem {
    let mut coeffs = vec![q(0, 1); 48];
    for &(idx, n, d) in terms {
        coeffs[idx % 48] += q(n, d.max(1));
    }
    c.field.from_coeffs(&coeffs)
}

pub fn random_elem<R: Rng>(c: &ContextConstants, rng: &mut R, nonzero: usize) -> SplitElem {
    let terms: Vec<_> = (0..nonzero)
        .map(|_| (rng.gen_range(0..48usize), rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))
        .collect();
    elem_from(c, &terms)
}

pub fn random_form<R: Rng>(c: &ContextConstants, rng: &mut R, terms: usize) -> Form<SplitElem> {
    Form::from_terms((0..terms).map(|_| (rng.gen::<u8>(), random_elem(c, rng, 2))))
}

/// A random homogeneous form of the given degree.
pub fn random_homogeneous<R: Rng>(c: &ContextConstants, rng: &mut R, degree: u32, terms: usize) -> Form<SplitElem> {
    let masks: Vec<u8> = (0u16..256).map(|m| m as u8).filter(|m| m.count_ones() == degree).collect();
    Form::from_terms((0..terms).map(|_| (masks[rng.gen_range(0..masks.len())], random_elem(c, rng, 2))))
}

/// A random linear substitution: each generator goes to a random 1-form.
pub fn random_linmap<R: Rng>(c: &ContextConstants, rng: &mut R) -> LinMap<SplitElem> {
    LinMap::from_rows((0..8).map(|_| random_homogeneous(c, rng, 1, 3)).collect())
}
