//! Sparse exterior algebra on the eight generators dz1..dz4, dz̄1..dz̄4.
//!
//! A monomial is a bit mask; bit k < 4 is dz_{k+1} and bit k >= 4 is
//! dz̄_{k-3}. Masks are read in increasing bit order, which is the canonical
//! order dz1 < .. < dz4 < dz̄1 < .. < dz̄4.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::kernel::SplitElem;

/// Coefficient ring operations needed by forms. Conjugation is rho on the
/// splitting field and the formal involution on parameter polynomials.
pub trait Coeff: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn conj(&self) -> Self;
    fn scale_q(&self, q: &BigRational) -> Self;
}

impl Coeff for SplitElem {
    fn is_zero(&self) -> bool {
        SplitElem::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        SplitElem::conj(self)
    }
    fn scale_q(&self, q: &BigRational) -> Self {
        self.scale(q)
    }
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn scale_q(&self, q: &BigRational) -> Self {
        self * q
    }
}

pub const FULL: u8 = 0xff;
pub const HOLO: u8 = 0x0f;

/// Generator index of dz_j (j = 1..4).
pub const fn dz(j: usize) -> u8 {
    (j - 1) as u8
}

/// Generator index of dz̄_j (j = 1..4).
pub const fn dzb(j: usize) -> u8 {
    (j + 3) as u8
}

/// Sign of sorting a sequence of distinct generators into canonical order,
/// with the resulting mask; `None` if a generator repeats.
pub fn sort_sign(seq: &[u8]) -> Option<(i8, u8)> {
    let mut mask = 0u8;
    let mut inv = 0usize;
    for (i, &a) in seq.iter().enumerate() {
        if mask & (1 << a) != 0 {
            return None;
        }
        mask |= 1 << a;
        inv += seq[i + 1..].iter().filter(|&&b| b < a).count();
    }
    Some((if inv.is_multiple_of(2) { 1 } else { -1 }, mask))
}

/// Sign of dz^a ∧ dz^b relative to the canonical monomial a | b.
pub fn wedge_sign(a: u8, b: u8) -> i8 {
    let mut inv = 0u32;
    for i in 0..8 {
        if a & (1 << i) != 0 {
            // generators of b strictly below i
            inv += (b & ((1u16 << i) - 1) as u8).count_ones();
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn bidegree_of(mask: u8) -> (u32, u32) {
    ((mask & HOLO).count_ones(), (mask >> 4).count_ones())
}

/// Generators of a mask in canonical order.
pub fn generators(mask: u8) -> Vec<u8> {
    (0..8).filter(|k| mask & (1 << k) != 0).collect()
}

/// Human-readable monomial, e.g. "dz1 dz3 dzb2 dzb4".
pub fn monomial_name(mask: u8) -> String {
    if mask == 0 {
        return "1".into();
    }
    generators(mask)
        .iter()
        .map(|&g| if g < 4 { format!("dz{}", g + 1) } else { format!("dzb{}", g - 3) })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Form<C> {
    terms: BTreeMap<u8, C>,
}

impl<C: Coeff> Default for Form<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Form<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn scalar(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(mask: u8, c: C) -> Self {
        let mut f = Self::zero();
        f.add_term(mask, c);
        f
    }

    /// c · dz_{seq[0]} ∧ dz_{seq[1]} ∧ ..., reordered canonically.
    pub fn from_seq(seq: &[u8], c: C) -> Self {
        match sort_sign(seq) {
            Some((s, mask)) => Self::monomial(mask, if s < 0 { c.negated() } else { c }),
            None => Self::zero(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u8, C)>) -> Self {
        let mut f = Self::zero();
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    pub fn add_term(&mut self, mask: u8, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<u8, C> {
        &self.terms
    }

    pub fn coeff(&self, mask: u8) -> Option<&C> {
        self.terms.get(&mask)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.negated());
        }
        out
    }

    pub fn negated(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&m, c)| (m, c.negated())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(&m, v)| (m, v.times(c))))
    }

    pub fn scale_q(&self, q: &BigRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&m, v)| (m, v.scale_q(q))))
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let p = ca.times(cb);
                out.add_term(a | b, if wedge_sign(a, b) < 0 { p.negated() } else { p });
            }
        }
        out
    }

    pub fn pow(&self, n: u32, one: &C) -> Self {
        let mut acc = Self::scalar(one.clone());
        for _ in 0..n {
            acc = acc.wedge(self);
        }
        acc
    }

    /// Complex conjugate: conjugates coefficients and swaps dz_j with dz̄_j.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (&m, c) in &self.terms {
            let seq: Vec<u8> = generators(m).into_iter().map(|g| (g + 4) % 8).collect();
            let (s, mask) = sort_sign(&seq).expect("distinct generators");
            let v = c.conj();
            out.add_term(mask, if s < 0 { v.negated() } else { v });
        }
        out
    }

    pub fn degree_part(&self, deg: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() == deg)
                .map(|(&m, c)| (m, c.clone()))
                .collect(),
        }
    }

    pub fn bidegree_part(&self, p: u32, q: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&m, _)| bidegree_of(m) == (p, q))
                .map(|(&m, c)| (m, c.clone()))
                .collect(),
        }
    }

    /// Decomposition by (holomorphic, antiholomorphic) degree.
    pub fn bidegree_split(&self) -> BTreeMap<(u32, u32), Self> {
        let mut out: BTreeMap<(u32, u32), Self> = BTreeMap::new();
        for (&m, c) in &self.terms {
            out.entry(bidegree_of(m)).or_default().terms.insert(m, c.clone());
        }
        out
    }

    pub fn is_pure(&self, p: u32, q: u32) -> bool {
        self.terms.keys().all(|&m| bidegree_of(m) == (p, q))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Form<D> {
        Form::from_terms(self.terms.iter().map(|(&m, c)| (m, f(c))))
    }
}

/// A linear substitution of the eight generators: row k is the 1-form that
/// generator k is replaced by.
#[derive(Clone, Debug, PartialEq)]
pub struct LinMap<C> {
    rows: Vec<Form<C>>,
}

impl<C: Coeff> LinMap<C> {
    pub fn from_rows(rows: Vec<Form<C>>) -> Self {
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.terms.keys().all(|m| m.count_ones() == 1)));
        Self { rows }
    }

    pub fn identity(one: &C) -> Self {
        Self::from_rows((0..8).map(|k| Form::monomial(1 << k, one.clone())).collect())
    }

    /// dz_j -> Σ_k a[j][k] dw_k + b[j][k] dw̄_k, with the dz̄ rows forced to be
    /// the conjugates.
    pub fn holomorphic(a: &[[C; 4]; 4], b: &[[C; 4]; 4]) -> Self {
        let mut rows = Vec::with_capacity(8);
        for j in 0..4 {
            let mut f = Form::zero();
            for k in 0..4 {
                f.add_term(1 << k, a[j][k].clone());
                f.add_term(1 << (k + 4), b[j][k].clone());
            }
            rows.push(f);
        }
        for j in 0..4 {
            let c = rows[j].conj();
            rows.push(c);
        }
        Self { rows }
    }

    /// dz_j -> d_j dz_j and dz̄_j -> conj(d_j) dz̄_j.
    pub fn diagonal(d: &[C; 4]) -> Self {
        let mut rows = Vec::with_capacity(8);
        for (j, dj) in d.iter().enumerate() {
            rows.push(Form::monomial(1 << j, dj.clone()));
        }
        for (j, dj) in d.iter().enumerate() {
            rows.push(Form::monomial(1 << (j + 4), dj.conj()));
        }
        Self { rows }
    }

    pub fn row(&self, k: usize) -> &Form<C> {
        &self.rows[k]
    }

    /// Whether the dz̄ rows are the conjugates of the dz rows.
    pub fn is_conjugation_compatible(&self) -> bool {
        (0..4).all(|j| self.rows[j + 4] == self.rows[j].conj())
    }

    pub fn pullback(&self, f: &Form<C>) -> Form<C> {
        let mut out = Form::zero();
        for (&m, c) in f.terms() {
            let mut acc = Form::scalar(c.clone());
            for g in generators(m) {
                acc = acc.wedge(&self.rows[g as usize]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.plus(&acc);
        }
        out
    }

    /// The substitution `self` followed by `next`: pullback(self.then(next), f)
    /// equals pullback(next, pullback(self, f)).
    pub fn then(&self, next: &LinMap<C>) -> LinMap<C> {
        LinMap { rows: self.rows.iter().map(|r| next.pullback(r)).collect() }
    }
}

/// Restriction to the real locus: dz_j, dz̄_j -> dt_j. The result uses masks
/// in the low nibble, bit j-1 standing for dt_j.
pub fn restrict_to_y<C: Coeff>(f: &Form<C>, one: &C) -> Form<C> {
    let rows = (0..8).map(|k| Form::monomial(1 << (k % 4), one.clone())).collect();
    LinMap { rows }.pullback(f)
}

/// The virtual Chern character Σ m_i exp(A_i), truncated at degree 8.
pub fn ch_combination<C: Coeff>(terms: &[(BigRational, Form<C>)], one: &C) -> Form<C> {
    let mut total = Form::zero();
    for (mult, a) in terms {
        let mut term = Form::scalar(one.clone());
        let mut power = Form::scalar(one.clone());
        let mut fact = BigInt::one();
        for k in 1..=4u32 {
            power = power.wedge(a);
            if power.is_zero() {
                break;
            }
            fact *= k;
            term = term.plus(&power.scale_q(&BigRational::new(BigInt::one(), fact.clone())));
        }
        total = total.plus(&term.scale_q(mult));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn signs() {
        assert_eq!(sort_sign(&[1, 0]), Some((-1, 0b11)));
        assert_eq!(sort_sign(&[0, 0]), None);
        assert_eq!(wedge_sign(0b10, 0b01), -1);
        assert_eq!(wedge_sign(0b01, 0b10), 1);
        // dz1 dz̄2 dz3 dz̄4 -> dz1 dz3 dz̄2 dz̄4 needs one swap
        assert_eq!(sort_sign(&[dz(1), dzb(2), dz(3), dzb(4)]).unwrap().0, -1);
    }

    #[test]
    fn wedge_basics() {
        let a = Form::monomial(1, q(1));
        assert!(a.wedge(&a).is_zero());
        let one = Form::scalar(q(1));
        assert_eq!(a.wedge(&one), a);
        let b = Form::monomial(2, q(3));
        assert_eq!(a.wedge(&b), b.wedge(&a).negated());
    }

    #[test]
    fn ch_of_pair() {
        let a = Form::monomial(0b0001_0001, q(1)).plus(&Form::monomial(0b0010_0010, q(1)));
        let ch = ch_combination(&[(q(1), a.clone()), (q(1), a.negated())], &q(1));
        let a2 = a.wedge(&a);
        let expect = Form::scalar(q(2)).plus(&a2);
        assert_eq!(ch, expect);
        assert_eq!(ch_combination(&[(q(1), Form::zero())], &q(1)), Form::scalar(q(1)));
    }

    #[test]
    fn restriction_kills_pairs() {
        let w = Form::monomial(0b0001_0001, q(5));
        assert!(restrict_to_y(&w, &q(1)).is_zero());
        let m = Form::from_seq(&[dz(1), dzb(2), dz(3), dzb(4)], q(1));
        assert_eq!(restrict_to_y(&m, &q(1)), Form::monomial(0b1111, q(1)));
    }
}
