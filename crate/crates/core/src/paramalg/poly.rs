//! Polynomials in sixteen formal variables with coefficients in L.
//!
//! Variables 0..8 are a12, a14, a32, a34, t21, t23, t41, t43 (the entries of
//! alpha and alpha-tilde); variable k + 8 is the formal conjugate of k.
//! Monomials are ordered degree-reverse-lexicographically with this listing.

use num_rational::BigRational;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::forms::Coeff;
use crate::kernel::{SplitElem, SplitField};

pub const NVARS: usize = 16;

pub const VAR_NAMES: [&str; NVARS] = [
    "a12", "a14", "a32", "a34", "t21", "t23", "t41", "t43", "a12b", "a14b", "a32b", "a34b", "t21b", "t23b",
    "t41b", "t43b",
];

pub fn conj_var(v: usize) -> usize {
    (v + 8) % NVARS
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub [u8; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: usize) -> Self {
        let mut e = [0; NVARS];
        e[v] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a += b;
        }
        Mono(e)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming self divides other.
    pub fn quotient(&self, other: &Mono) -> Mono {
        let mut e = other.0;
        for (a, b) in e.iter_mut().zip(&self.0) {
            *a -= b;
        }
        Mono(e)
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a = (*a).max(*b);
        }
        Mono(e)
    }

    pub fn conj(&self) -> Mono {
        let mut e = [0; NVARS];
        for (v, &x) in self.0.iter().enumerate() {
            e[conj_var(v)] = x;
        }
        Mono(e)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for v in (0..NVARS).rev() {
            match self.0[v].cmp(&other.0[v]) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable is larger
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { VAR_NAMES[v].to_string() } else { format!("{}^{}", VAR_NAMES[v], e) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParamPoly {
    field: Arc<SplitField>,
    terms: BTreeMap<Mono, SplitElem>,
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl ParamPoly {
    pub fn zero(field: &Arc<SplitField>) -> Self {
        Self { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(c: SplitElem) -> Self {
        let mut p = Self::zero(c.field());
        p.add_term(Mono::one(), c);
        p
    }

    pub fn var(field: &Arc<SplitField>, v: usize) -> Self {
        let mut p = Self::zero(field);
        p.add_term(Mono::var(v), field.one());
        p
    }

    pub fn field(&self) -> &Arc<SplitField> {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<Mono, SplitElem> {
        &self.terms
    }

    pub fn add_term(&mut self, m: Mono, c: SplitElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
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

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Mono, &SplitElem)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> SplitElem {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { field: self.field.clone(), terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &SplitElem) -> Self {
        let mut out = Self::zero(&self.field);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    fn mul_term(&self, m: &Mono, c: &SplitElem) -> Self {
        let mut out = Self::zero(&self.field);
        for (mm, v) in &self.terms {
            out.add_term(mm.mul(m), v * c);
        }
        out
    }

    /// Formal conjugation: swap each variable with its partner and apply rho.
    pub fn conj(&self) -> Self {
        Self { field: self.field.clone(), terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect() }
    }

    pub fn eval(&self, point: &[SplitElem; NVARS]) -> SplitElem {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t * point[v].pow(u32::from(e));
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Replace variable v by `subs[v]` where given.
    pub fn substitute(&self, subs: &[Option<ParamPoly>; NVARS]) -> Self {
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let mut t = Self::zero(&self.field);
            let mut keep = Mono::one();
            for (v, &e) in m.0.iter().enumerate() {
                if subs[v].is_none() {
                    keep.0[v] = e;
                }
            }
            t.add_term(keep, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if let Some(s) = &subs[v] {
                    for _ in 0..e {
                        t = t.mul(s);
                    }
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Multiply by the inverse of the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(m, _)| m.to_string()).collect();
        write!(f, "[{} terms: {}]", parts.len(), parts.join(" + "))
    }
}

impl Coeff for ParamPoly {
    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn conj(&self) -> Self {
        ParamPoly::conj(self)
    }
    fn scale_q(&self, q: &BigRational) -> Self {
        self.scale(&self.field.rational(q.clone()))
    }
}

/// Remainder of multivariate division of `p` by `divisors` (leading terms
/// taken in degrevlex order).
pub fn reduce(p: &ParamPoly, divisors: &[ParamPoly]) -> ParamPoly {
    let divs: Vec<(Mono, ParamPoly)> = divisors
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| {
            let m = d.monic();
            (*m.leading().unwrap().0, m)
        })
        .collect();
    let mut rest = p.clone();
    let mut rem = ParamPoly::zero(&p.field);
    while let Some((lm, lc)) = rest.leading().map(|(m, c)| (*m, c.clone())) {
        match divs.iter().find(|(dm, _)| dm.divides(&lm)) {
            Some((dm, d)) => {
                let q = dm.quotient(&lm);
                rest = rest.sub(&d.mul_term(&q, &lc));
            }
            None => {
                rest.terms.remove(&lm);
                rem.add_term(lm, lc);
            }
        }
    }
    rem
}

fn s_poly(f: &ParamPoly, g: &ParamPoly) -> ParamPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient(&l), &gc.clone());
    let b = g.mul_term(&gm.quotient(&l), &fc.clone());
    a.sub(&b)
}

/// Buchberger completion of `gens`, giving up after `max_pairs` S-pairs.
pub fn groebner(gens: &[ParamPoly], max_pairs: usize) -> Option<Vec<ParamPoly>> {
    let mut basis: Vec<ParamPoly> = gens.iter().filter(|g| !g.is_zero()).map(ParamPoly::monic).collect();
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|i| (0..i).map(move |j| (j, i))).collect();
    let mut processed = 0;
    while let Some((i, j)) = pairs.pop() {
        processed += 1;
        if processed > max_pairs {
            return None;
        }
        let (mi, mj) = (*basis[i].leading().unwrap().0, *basis[j].leading().unwrap().0);
        // coprime leading monomials reduce to zero
        if mi.lcm(&mj) == mi.mul(&mj) {
            continue;
        }
        let r = reduce(&s_poly(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|a| (a, k)));
        }
    }
    Some(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{constants, Quartic};

    #[test]
    fn degrevlex_order() {
        let x0 = Mono::var(0);
        let x1 = Mono::var(1);
        assert!(x0 > x1);
        assert!(x0.mul(&x0) > x0);
        // x0 x2 vs x1^2: degrevlex puts x1^2 above x0 x2
        assert!(x1.mul(&x1) > x0.mul(&Mono::var(2)));
    }

    #[test]
    fn ideal_membership() {
        let ctx = constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap();
        let f = &ctx.field;
        let v = |k| ParamPoly::var(f, k);
        let g1 = v(0).mul(&v(3)).sub(&ParamPoly::constant(ctx.h3.clone()));
        let g2 = v(1).add(&v(2).scale(&ctx.x[0]));
        let p = g1.mul(&v(5)).add(&g2.mul(&v(8).mul(&v(0))));
        assert!(reduce(&p, &[g1.clone(), g2.clone()]).is_zero());
        let one = ParamPoly::constant(f.one());
        assert_eq!(reduce(&one, &[g1.clone(), g2.clone()]), one);
        assert!(reduce(&g1, std::slice::from_ref(&g1)).is_zero());
        let gb = groebner(&[g1, g2], 100).unwrap();
        assert!(gb.len() >= 2);
    }

    #[test]
    fn conjugation_and_eval() {
        let ctx = constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap();
        let f = &ctx.field;
        let p = ParamPoly::var(f, 0).mul(&ParamPoly::var(f, 9)).scale(&ctx.i).add(&ParamPoly::constant(ctx.x[1].clone()));
        assert_eq!(p.conj().conj(), p);
        let mut pt: [SplitElem; NVARS] = std::array::from_fn(|_| f.zero());
        pt[0] = ctx.x[0].clone();
        pt[1] = ctx.x[2].clone();
        pt[8] = ctx.x[0].conj();
        pt[9] = ctx.x[2].conj();
        assert_eq!(p.conj().eval(&pt), p.eval(&pt).conj());
    }
}
