//! Dense univariate polynomials over Q: Sturm chains, resultants and
//! rational-root detection without integer factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients in increasing degree; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<BigRational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Remainder of Euclidean division by a nonzero divisor.
    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let q = &r[top] / &lead;
            if !q.is_zero() {
                for (k, c) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + k;
                    r[idx] = &r[idx] - &q * c;
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UPoly::new(r)
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let q = &r[top] / &lead;
            if !q.is_zero() {
                for (k, c) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + k;
                    r[idx] = &r[idx] - &q * c;
                }
            }
            quot[top - dd] = q;
            r.pop();
        }
        (UPoly::new(quot), UPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&(BigRational::one() / l)),
            None => a,
        }
    }

    /// The product of the distinct irreducible factors, up to a constant.
    pub fn squarefree(&self) -> UPoly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Sturm chain p, p', -rem(p, p'), ...
    pub fn sturm_chain(&self) -> Vec<UPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        chain
    }

    /// Number of distinct real roots of a polynomial, via its Sturm chain.
    pub fn count_real_roots(&self) -> usize {
        let chain = self.sturm_chain();
        let at_neg: Vec<i8> = chain
            .iter()
            .map(|p| {
                let d = p.degree().unwrap_or(0);
                let s = sign(p.leading().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .collect();
        let at_pos: Vec<i8> = chain.iter().map(|p| sign(p.leading().unwrap())).collect();
        variations(&at_neg).saturating_sub(variations(&at_pos))
    }

    /// Roots in the half-open interval (lo, hi].
    pub fn count_roots_in(chain: &[UPoly], lo: &BigRational, hi: &BigRational) -> usize {
        let vl = variations(&chain.iter().map(|p| sign(&p.eval(lo))).collect::<Vec<_>>());
        let vh = variations(&chain.iter().map(|p| sign(&p.eval(hi))).collect::<Vec<_>>());
        vl.saturating_sub(vh)
    }

    /// A bound B with every real root in (-B, B).
    pub fn cauchy_bound(&self) -> BigRational {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| c.abs() / &lead)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        BigRational::one() + max
    }

    /// All distinct rational roots, in decreasing order.
    ///
    /// Each real root is isolated; a rational root p/q in lowest terms has q
    /// dividing the leading coefficient of the integer-scaled polynomial, so
    /// once an isolating interval is narrower than 1/(2Q^2) the simplest
    /// fraction inside it is the only candidate.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let sf = self.squarefree();
        sf.rational_roots_squarefree()
    }

    fn rational_roots_squarefree(&self) -> Vec<BigRational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let ints = integer_scaled(&self.coeffs);
        let q_bound = BigRational::from_integer(ints[deg].abs());
        let width = BigRational::one() / (BigRational::from_integer(2.into()) * &q_bound * &q_bound);
        let mut out = Vec::new();
        for (lo, hi) in isolate_real_roots(self) {
            if lo == hi {
                out.push(lo);
                continue;
            }
            let (lo, hi) = refine_to_width(self, lo, hi, &width);
            if lo == hi {
                out.push(lo);
                continue;
            }
            let cand = simplest_between(&lo, &hi);
            if self.eval(&cand).is_zero() {
                out.push(cand);
            }
        }
        out
    }
}

pub fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: &[i8]) -> usize {
    let nz: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Multiply through by the lcm of denominators.
pub fn integer_scaled(coeffs: &[BigRational]) -> Vec<BigInt> {
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
}

/// Isolating intervals for the real roots of a squarefree polynomial, in
/// decreasing order. Each entry is a closed interval [lo, hi] containing
/// exactly one root; lo == hi marks an exact rational root.
pub fn isolate_real_roots(p: &UPoly) -> Vec<(BigRational, BigRational)> {
    let chain = p.sturm_chain();
    let b = p.cauchy_bound();
    let mut stack = vec![(-b.clone(), b)];
    let mut found = Vec::new();
    let two = BigRational::from_integer(2.into());
    while let Some((lo, hi)) = stack.pop() {
        let n = UPoly::count_roots_in(&chain, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            if p.eval(&hi).is_zero() {
                found.push((hi.clone(), hi));
            } else {
                found.push((lo, hi));
            }
            continue;
        }
        let mid = (&lo + &hi) / &two;
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    found.sort_by(|a, b| b.1.cmp(&a.1));
    found
}

/// Bisect an isolating interval until its width is at most `width`.
pub fn refine_to_width(
    p: &UPoly,
    mut lo: BigRational,
    mut hi: BigRational,
    width: &BigRational,
) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(2.into());
    let s_hi = sign(&p.eval(&hi));
    if s_hi == 0 {
        return (hi.clone(), hi);
    }
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let s = sign(&p.eval(&mid));
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// The fraction with smallest denominator in the closed interval [lo, hi].
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if fl + BigRational::one() <= *hi {
        return lo.floor() + BigRational::one();
    }
    // lo and hi share the integer part n; recurse on reciprocals of the fractional parts.
    let n = lo.floor();
    let a = hi - &n;
    let b = lo - &n;
    let inner = simplest_between(&(BigRational::one() / a), &(BigRational::one() / b));
    n + BigRational::one() / inner
}

/// Sylvester-matrix resultant, computed by exact Gaussian elimination.
pub fn resultant(p: &UPoly, q: &UPoly) -> BigRational {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return BigRational::zero();
    };
    let size = m + n;
    if size == 0 {
        return BigRational::one();
    }
    let mut mat = vec![vec![BigRational::zero(); size]; size];
    for r in 0..n {
        for k in 0..=m {
            mat[r][r + k] = p.coeffs[m - k].clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            mat[n + r][r + k] = q.coeffs[n - k].clone();
        }
    }
    super::linalg::determinant(mat)
}

/// Discriminant via disc(P) = (-1)^(n(n-1)/2) Res(P, P') / lead(P).
pub fn discriminant(p: &UPoly) -> BigRational {
    let n = p.degree().expect("nonzero polynomial");
    let res = resultant(p, &p.derivative());
    let s = if (n * (n.saturating_sub(1)) / 2).is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    s * res / p.leading().unwrap()
}

pub fn is_rational_square(x: &BigRational) -> bool {
    if x.is_negative() {
        return false;
    }
    let (n, d) = (x.numer(), x.denom());
    let rn = n.sqrt();
    let rd = d.sqrt();
    &rn * &rn == *n && &rd * &rd == *d
}

pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if !is_rational_square(x) {
        return None;
    }
    Some(BigRational::new(x.numer().sqrt(), x.denom().sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sturm_counts_x4_minus_2() {
        assert_eq!(UPoly::from_ints(&[-2, 0, 0, 0, 1]).count_real_roots(), 2);
    }

    #[test]
    fn sturm_counts_four_roots() {
        assert_eq!(UPoly::from_ints(&[1, -2, -5, 0, 1]).count_real_roots(), 4);
    }

    #[test]
    fn rational_roots_found_and_irrational_rejected() {
        // (2x - 1)(x + 3)(x^2 - 2)
        let p = UPoly::from_ints(&[6, -10, -7, 5, 2]);
        assert_eq!(p.rational_roots(), vec![q(1, 2), q(-3, 1)]);
        assert!(UPoly::from_ints(&[-2, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn repeated_rational_root() {
        // (x - 2)^2 (x^2 + 1)
        let p = UPoly::from_ints(&[4, -4, 5, -4, 1]);
        assert_eq!(p.rational_roots(), vec![q(2, 1)]);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&q(3, 10), &q(4, 10)), q(1, 3));
        assert_eq!(simplest_between(&q(-7, 5), &q(-6, 5)), q(-4, 3));
        assert_eq!(simplest_between(&q(1, 2), &q(5, 2)), q(1, 1));
    }

    #[test]
    fn discriminant_of_quadratic() {
        // x^2 - 3x + 2 -> 9 - 8 = 1
        assert_eq!(discriminant(&UPoly::from_ints(&[2, -3, 1])), q(1, 1));
    }

    #[test]
    fn squares() {
        assert!(is_rational_square(&q(9, 4)));
        assert!(!is_rational_square(&q(2, 1)));
        assert!(!is_rational_square(&q(-1, 1)));
    }
}
