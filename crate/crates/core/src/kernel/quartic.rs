//! Depressed rational quartics `a x^4 + b x^2 + c x + d` and the admissibility gate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::upoly::{is_rational_square, rational_sqrt, UPoly};
use super::KernelError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quartic {
    #[serde(with = "crate::serial::ratio")]
    pub a: BigRational,
    #[serde(with = "crate::serial::ratio")]
    pub b: BigRational,
    #[serde(with = "crate::serial::ratio")]
    pub c: BigRational,
    #[serde(with = "crate::serial::ratio")]
    pub d: BigRational,
}

impl Quartic {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(v.into());
        Self::new(r(a), r(b), r(c), r(d))
    }

    pub fn poly(&self) -> UPoly {
        UPoly::new(vec![
            self.d.clone(),
            self.c.clone(),
            self.b.clone(),
            BigRational::zero(),
            self.a.clone(),
        ])
    }

    /// Coefficients (p, q, r) of the monic normalization x^4 + p x^2 + q x + r.
    pub fn monic(&self) -> (BigRational, BigRational, BigRational) {
        (&self.b / &self.a, &self.c / &self.a, &self.d / &self.a)
    }

    /// Closed-form discriminant of a x^4 + b x^2 + c x + d.
    pub fn discriminant(&self) -> BigRational {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let k = |n: i64| BigRational::from_integer(n.into());
        k(256) * a * a * a * d * d * d - k(128) * a * a * b * b * d * d
            + k(144) * a * a * b * c * c * d
            - k(27) * a * a * c * c * c * c
            + k(16) * a * b * b * b * b * d
            - k(4) * a * b * b * b * c * c
    }

    /// Delta = product over i<j of (x_i - x_j)^2 = disc / a^6.
    pub fn delta(&self) -> BigRational {
        let a2 = &self.a * &self.a;
        self.discriminant() / (&a2 * &a2 * &a2)
    }
}

impl fmt::Display for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})x^4 + ({})x^2 + ({})x + ({})", self.a, self.b, self.c, self.d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateReport {
    pub irreducible: bool,
    pub four_real_roots: bool,
    pub galois_s4: bool,
    pub delta_integral: bool,
    /// Number of distinct real roots from the Sturm chain.
    pub real_root_count: usize,
    #[serde(with = "crate::serial::ratio")]
    pub discriminant: BigRational,
    #[serde(with = "crate::serial::ratio")]
    pub delta: BigRational,
    /// Minimal N with N^12 * Delta integral (1 when already integral).
    #[serde(with = "crate::serial::bigint")]
    pub rescale: BigInt,
}

impl GateReport {
    pub fn admissible(&self) -> bool {
        self.irreducible && self.four_real_roots && self.galois_s4
    }

    pub fn passes_all(&self) -> bool {
        self.admissible() && self.delta_integral
    }
}

/// Resolvent cubic y^3 - p y^2 - 4 r y - (q^2 - 4 p r) whose roots are
/// x1 x2 + x3 x4 and its conjugates.
pub fn resolvent_cubic(p: &BigRational, q: &BigRational, r: &BigRational) -> UPoly {
    let four = BigRational::from_integer(4.into());
    UPoly::new(vec![
        -(q * q - &four * p * r),
        -(&four * r),
        -p.clone(),
        BigRational::one(),
    ])
}

/// Whether x^4 + p x^2 + q x + r splits as a product of two rational quadratics.
fn has_quadratic_factor(p: &BigRational, q: &BigRational, r: &BigRational) -> bool {
    // (x^2 + u x + v)(x^2 - u x + w): with u != 0, z = u^2 is a root of
    // z^3 + 2p z^2 + (p^2 - 4r) z - q^2.
    let four = BigRational::from_integer(4.into());
    let two = BigRational::from_integer(2.into());
    let ferrari = UPoly::new(vec![
        -(q * q),
        p * p - &four * r,
        &two * p,
        BigRational::one(),
    ]);
    if ferrari
        .rational_roots()
        .iter()
        .any(|z| !z.is_zero() && is_rational_square(z))
    {
        return true;
    }
    // u = 0 forces q = 0 and a quadratic in x^2 with rational roots.
    q.is_zero() && is_rational_square(&(p * p - &four * r))
}

fn minimal_rescale(delta: &BigRational) -> BigInt {
    let mut den = delta.denom().clone();
    let mut n = BigInt::one();
    let mut pr = BigInt::from(2);
    while den > BigInt::one() {
        if &pr * &pr > den {
            // den is prime
            n *= &den;
            break;
        }
        let mut e = 0u32;
        while (&den % &pr).is_zero() {
            den /= &pr;
            e += 1;
        }
        if e > 0 {
            n *= pr.pow(e.div_ceil(12));
        }
        pr += 1;
    }
    n
}

pub fn gate_quartic(p: &Quartic) -> Result<GateReport, KernelError> {
    if p.a.is_zero() {
        return Err(KernelError::DegenerateQuartic("leading coefficient is zero".into()));
    }
    let disc = p.discriminant();
    if disc.is_zero() {
        return Err(KernelError::DegenerateQuartic("repeated root (zero discriminant)".into()));
    }
    let poly = p.poly();
    let real_root_count = poly.count_real_roots();
    let (pp, qq, rr) = p.monic();
    let irreducible = poly.rational_roots().is_empty() && !has_quadratic_factor(&pp, &qq, &rr);
    let resolvent_has_root = !resolvent_cubic(&pp, &qq, &rr).rational_roots().is_empty();
    let galois_s4 = irreducible && !resolvent_has_root && !is_rational_square(&disc);
    let delta = p.delta();
    let delta_integral = delta.is_integer();
    let rescale = minimal_rescale(&delta);
    Ok(GateReport {
        irreducible,
        four_real_roots: real_root_count == 4,
        galois_s4,
        delta_integral,
        real_root_count,
        discriminant: disc,
        delta,
        rescale,
    })
}

/// Roots of the result are N times the roots of `p`.
pub fn rescale_quartic(p: &Quartic, n: &BigInt) -> Quartic {
    let n = BigRational::from_integer(n.clone());
    let n2 = &n * &n;
    Quartic::new(p.a.clone(), &p.b * &n2, &p.c * &n2 * &n, &p.d * &n2 * &n2)
}

/// Lexicographically first (a, b, c, d) with 1 <= a <= bound and
/// |b|, |c|, |d| <= bound that passes the gate, rescaled if Delta is not integral.
pub fn search_quartic(bound: u32) -> Result<Quartic, KernelError> {
    let bound = i64::from(bound);
    for a in 1..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    let q = Quartic::from_ints(a, b, c, d);
                    let Ok(rep) = gate_quartic(&q) else {
                        continue;
                    };
                    if !rep.admissible() {
                        continue;
                    }
                    return Ok(if rep.delta_integral { q } else { rescale_quartic(&q, &rep.rescale) });
                }
            }
        }
    }
    Err(KernelError::NotFound(bound.to_u32().unwrap_or(0)))
}

/// Exact square root of Delta when it is a rational square (never for admissible input).
pub fn sqrt_delta(p: &Quartic) -> Option<BigRational> {
    let d = p.delta();
    if d.is_negative() {
        return None;
    }
    rational_sqrt(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::upoly::discriminant;

    #[test]
    fn closed_form_matches_resultant() {
        for &(a, b, c, d) in &[(1, -5, -2, 1), (2, -7, 1, 3), (3, 0, -4, -1), (1, -7, -2, 6)] {
            let q = Quartic::from_ints(a, b, c, d);
            assert_eq!(q.discriminant(), discriminant(&q.poly()));
        }
    }

    #[test]
    fn x4_minus_2_has_two_real_roots() {
        let rep = gate_quartic(&Quartic::from_ints(1, 0, 0, -2)).unwrap();
        assert!(!rep.four_real_roots);
        assert_eq!(rep.real_root_count, 2);
        assert!(rep.irreducible);
    }

    #[test]
    fn biquadratic_is_not_s4() {
        let rep = gate_quartic(&Quartic::from_ints(1, -10, 0, 1)).unwrap();
        assert!(rep.irreducible);
        assert!(rep.four_real_roots);
        assert!(!rep.galois_s4);
    }

    #[test]
    fn repeated_root_is_degenerate() {
        // (x^2 - 1)^2
        assert!(matches!(
            gate_quartic(&Quartic::from_ints(1, -2, 0, 1)),
            Err(KernelError::DegenerateQuartic(_))
        ));
        assert!(matches!(
            gate_quartic(&Quartic::from_ints(0, 1, 1, 1)),
            Err(KernelError::DegenerateQuartic(_))
        ));
    }

    #[test]
    fn reducible_quartics_detected() {
        // (x^2 + x - 1)(x^2 - x - 3) = x^4 - 5x^2 - 2x + 3
        let rep = gate_quartic(&Quartic::from_ints(1, -5, -2, 3)).unwrap();
        assert!(!rep.irreducible);
        // (x - 1)(x^3 + x^2 - 4x - 1)
        let rep = gate_quartic(&Quartic::from_ints(1, -5, 3, 1)).unwrap();
        assert!(!rep.irreducible);
    }

    #[test]
    fn search_finds_default_fixture() {
        let q = search_quartic(5).unwrap();
        assert_eq!(q, Quartic::from_ints(1, -5, -2, 1));
        assert_eq!(q.delta(), BigRational::from_integer(5744.into()));
        assert_eq!(search_quartic(5).unwrap(), q);
        assert!(matches!(search_quartic(0), Err(KernelError::NotFound(0))));
    }

    #[test]
    fn rescale_scales_delta() {
        let q = Quartic::from_ints(1, -5, -2, 1);
        assert_eq!(rescale_quartic(&q, &BigInt::one()), q);
        let n = BigInt::from(3);
        let r = rescale_quartic(&q, &n);
        assert_eq!(r.delta(), q.delta() * BigRational::from_integer(n.pow(12)));
    }

    #[test]
    fn minimal_rescale_makes_delta_integral() {
        let q = Quartic::from_ints(2, -7, 1, 3);
        let rep = gate_quartic(&q).unwrap();
        let r = rescale_quartic(&q, &rep.rescale);
        assert!(r.delta().is_integer());
        if rep.rescale > BigInt::one() {
            let smaller = rescale_quartic(&q, &(&rep.rescale - 1));
            assert!(!smaller.delta().is_integer() || rep.delta_integral);
        }
    }
}
