//! Rational-endpoint interval arithmetic with outward dyadic rounding, root
//! enclosures for the real embedding x1 > x2 > x3 > x4, and certified signs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

use super::quartic::Quartic;
use super::split::{basis_exponents, SplitElem, DIM};
use super::upoly::{isolate_real_roots, refine_to_width, UPoly};
use super::KernelError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "crate::serial::ratio")]
    pub lo: BigRational,
    #[serde(with = "crate::serial::ratio")]
    pub hi: BigRational,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// Sign if the interval excludes zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    /// Round endpoints outward to multiples of 2^-bits.
    pub fn round_out(&self, bits: u32) -> Self {
        let s = BigRational::from_integer(pow2(bits));
        let lo = (&self.lo * &s).floor() / &s;
        let hi = (&self.hi * &s).ceil() / &s;
        Self { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let c = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }
}

/// Four disjoint intervals, in decreasing order, each holding exactly one root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEnclosure {
    pub intervals: Vec<Interval>,
    pub bits: u32,
    #[serde(skip)]
    poly: Option<UPoly>,
}

impl RootEnclosure {
    pub fn max_width(&self) -> BigRational {
        self.intervals.iter().map(|i| i.width()).max().unwrap_or_else(BigRational::zero)
    }

    /// Bisect every interval down to width <= 2^-bits.
    pub fn refine(&self, bits: u32) -> RootEnclosure {
        let poly = self.poly.clone().expect("enclosure without polynomial");
        let width = BigRational::new(BigInt::one(), pow2(bits));
        let intervals = self
            .intervals
            .iter()
            .map(|iv| {
                let (lo, hi) = refine_to_width(&poly, iv.lo.clone(), iv.hi.clone(), &width);
                Interval::new(lo, hi)
            })
            .collect();
        RootEnclosure { intervals, bits: bits.max(self.bits), poly: Some(poly) }
    }
}

/// Sturm-certified enclosures of the four real roots, width <= 2^-bits.
pub fn isolate_roots(p: &Quartic, bits: u32) -> Result<RootEnclosure, KernelError> {
    let poly = p.poly();
    let iso = isolate_real_roots(&poly);
    if iso.len() != 4 {
        return Err(KernelError::NotReal);
    }
    let intervals = iso.into_iter().map(|(lo, hi)| Interval::new(lo, hi)).collect();
    Ok(RootEnclosure { intervals, bits: 0, poly: Some(poly) }.refine(bits))
}

/// Interval value of the real part of `u` at the identity embedding, with
/// every intermediate rounded outward to `guard` fractional bits.
pub fn eval_real_part(u: &SplitElem, enc: &RootEnclosure, guard: u32) -> Interval {
    let x = &enc.intervals;
    let powers = |iv: &Interval, n: usize| {
        let mut out = vec![Interval::point(BigRational::one())];
        for k in 1..=n {
            let next = (&out[k - 1] * iv).round_out(guard);
            out.push(next);
        }
        out
    };
    let p1 = powers(&x[0], 3);
    let p2 = powers(&x[1], 2);
    let p3 = powers(&x[2], 1);
    let mut acc = Interval::zero();
    for idx in (0..DIM).step_by(2) {
        let c = u.coeff(idx);
        if c.is_zero() {
            continue;
        }
        let (e1, e2, e3, _) = basis_exponents(idx);
        let mono = (&(&p1[e1] * &p2[e2]) * &p3[e3]).round_out(guard);
        acc = (&acc + &mono.scale(&c)).round_out(guard);
    }
    acc
}

/// Real and imaginary parts of `u` at the identity embedding (i -> +i).
pub fn eval_complex(u: &SplitElem, enc: &RootEnclosure, guard: u32) -> (Interval, Interval) {
    let (re, im) = u.re_im();
    (eval_real_part(&re, enc, guard), eval_real_part(&im, enc, guard))
}

/// Certified sign of a rho-fixed element at the identity embedding.
pub fn sign_at_identity(u: &SplitElem, enc: &RootEnclosure) -> Result<i8, KernelError> {
    Ok(certified_sign(u, enc)?.0)
}

/// Certified sign together with the enclosing interval used to decide it.
pub fn certified_sign(u: &SplitElem, enc: &RootEnclosure) -> Result<(i8, Interval), KernelError> {
    if u.is_zero() {
        return Ok((0, Interval::zero()));
    }
    if !u.is_real() {
        return Err(KernelError::NotReal);
    }
    let mut bits = enc.bits.max(64);
    let mut enc = enc.clone();
    loop {
        if enc.bits < bits {
            enc = enc.refine(bits);
        }
        let v = eval_real_part(u, &enc, bits + 32);
        if let Some(s) = v.sign() {
            return Ok((s, v));
        }
        bits *= 2;
    }
}

/// Enclosure of `u` of width at most 2^-bits, refining roots as needed.
pub fn enclose(u: &SplitElem, enc: &RootEnclosure, bits: u32) -> Result<Interval, KernelError> {
    if !u.is_real() {
        return Err(KernelError::NotReal);
    }
    let target = BigRational::new(BigInt::one(), pow2(bits));
    let mut b = enc.bits.max(bits + 16);
    let mut enc = enc.clone();
    loop {
        if enc.bits < b {
            enc = enc.refine(b);
        }
        let v = eval_real_part(u, &enc, b + 32);
        if v.width() <= target {
            return Ok(v);
        }
        b += b / 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::split::SplitField;

    #[test]
    fn enclosure_widths_and_vieta() {
        let q = Quartic::from_ints(1, -5, -2, 1);
        let enc = isolate_roots(&q, 80).unwrap();
        let w = BigRational::new(BigInt::one(), pow2(80));
        for iv in &enc.intervals {
            assert!(iv.width() <= w);
        }
        for k in 0..3 {
            assert!(enc.intervals[k + 1].hi < enc.intervals[k].lo);
        }
        let sum = enc.intervals.iter().fold(Interval::zero(), |a, b| &a + b);
        assert!(sum.contains_zero());
        let prod = enc
            .intervals
            .iter()
            .fold(Interval::point(BigRational::one()), |a, b| &a * b);
        assert!(prod.contains(&BigRational::one()));
    }

    #[test]
    fn signs_of_simple_elements() {
        let q = Quartic::from_ints(1, -5, -2, 1);
        let f = SplitField::new(&q).unwrap();
        let enc = isolate_roots(&q, 64).unwrap();
        let d12 = &f.root(1) - &f.root(2);
        assert_eq!(sign_at_identity(&d12, &enc).unwrap(), 1);
        assert_eq!(sign_at_identity(&(-d12), &enc).unwrap(), -1);
        assert_eq!(sign_at_identity(&f.zero(), &enc).unwrap(), 0);
        assert!(matches!(sign_at_identity(&f.i(), &enc), Err(KernelError::NotReal)));
    }
}
