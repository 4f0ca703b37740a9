//! The splitting field L = Q(x1, x2, x3, x4, i) of a depressed quartic, as a
//! 48-dimensional Q-algebra in Cauchy-module normal form.
//!
//! Basis monomials are x1^e1 x2^e2 x3^e3 i^e4 with e1 <= 3, e2 <= 2, e3 <= 1,
//! e4 <= 1, stored at index `e4 + 2 * (e3 + 2 * (e2 + 3 * e1))`. The root x4
//! is eliminated via x4 = -x1 - x2 - x3, which is exact because the quartic
//! has no cubic term.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use super::linalg;
use super::quartic::Quartic;
use super::KernelError;

pub const DIM: usize = 48;
const REAL_DIM: usize = 24;
/// Raw exponent box for products of two normal forms: e1 <= 6, e2 <= 4, e3 <= 2.
const RAW_DIM: usize = 7 * 5 * 3;

pub fn basis_index(e1: usize, e2: usize, e3: usize, e4: usize) -> usize {
    e4 + 2 * (e3 + 2 * (e2 + 3 * e1))
}

/// Inverse of [`basis_index`].
pub fn basis_exponents(idx: usize) -> (usize, usize, usize, usize) {
    let e4 = idx % 2;
    let m = idx / 2;
    let e3 = m % 2;
    let e2 = (m / 2) % 3;
    let e1 = m / 6;
    (e1, e2, e3, e4)
}

fn real_exponents(m: usize) -> (usize, usize, usize) {
    (m / 6, (m / 2) % 3, m % 2)
}

fn raw_index(a: usize, b: usize, c: usize) -> usize {
    (a * 5 + b) * 3 + c
}

/// All 24 permutations of {0,1,2,3} in lexicographic order; `perm[j]` is the image of j.
pub fn permutations() -> &'static [[u8; 4]; 24] {
    static PERMS: OnceLock<[[u8; 4]; 24]> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = [[0u8; 4]; 24];
        let mut k = 0;
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        let p = [a, b, c, d];
                        let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                        if distinct {
                            out[k] = p;
                            k += 1;
                        }
                    }
                }
            }
        }
        out
    })
}

pub fn perm_index(p: &[u8; 4]) -> usize {
    permutations().iter().position(|q| q == p).expect("not a permutation")
}

pub fn perm_sign(p: &[u8; 4]) -> i8 {
    let mut s = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// A polynomial in x1, x2, x3, x4 and i with rational coefficients, keyed by exponents.
pub type RawPoly = BTreeMap<[u8; 5], BigRational>;

/// Integer numerators over a common positive denominator.
#[derive(Clone, Debug)]
struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
    den: BigInt,
}

pub struct SplitField {
    quartic: Quartic,
    p: BigRational,
    q: BigRational,
    r: BigRational,
    /// Row k: normal form (real part) of raw monomial k.
    reduction: IntMatrix,
    /// Per permutation: row m is the image of real basis monomial m.
    galois: Vec<OnceLock<IntMatrix>>,
}

impl fmt::Debug for SplitField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SplitField").field("quartic", &self.quartic).finish()
    }
}

/// Reduce a polynomial in x1, x2, x3 (no i) to the 24-dimensional real normal form.
fn reduce_real(
    p: &BigRational,
    q: &BigRational,
    r: &BigRational,
    mut poly: BTreeMap<(usize, usize, usize), BigRational>,
) -> Vec<BigRational> {
    fn add(map: &mut BTreeMap<(usize, usize, usize), BigRational>, k: (usize, usize, usize), v: BigRational) {
        if v.is_zero() {
            return;
        }
        let e = map.entry(k).or_insert_with(BigRational::zero);
        *e += v;
        if e.is_zero() {
            map.remove(&k);
        }
    }
    // x3^2 = -(x1^2 + x1 x2 + x2^2 + p) - (x1 + x2) x3
    while let Some((&k, _)) = poly.iter().find(|(k, _)| k.2 >= 2) {
        let v = poly.remove(&k).unwrap();
        let (a, b, c) = (k.0, k.1, k.2 - 2);
        for &(da, db, dc) in &[(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1)] {
            add(&mut poly, (a + da, b + db, c + dc), -v.clone());
        }
        add(&mut poly, (a, b, c), -(&v * p));
    }
    // x2^3 = -(x1^3 + x1^2 x2 + x1 x2^2 + p x1 + p x2 + q)
    while let Some((&k, _)) = poly.iter().find(|(k, _)| k.1 >= 3) {
        let v = poly.remove(&k).unwrap();
        let (a, b, c) = (k.0, k.1 - 3, k.2);
        for &(da, db) in &[(3, 0), (2, 1), (1, 2)] {
            add(&mut poly, (a + da, b + db, c), -v.clone());
        }
        add(&mut poly, (a + 1, b, c), -(&v * p));
        add(&mut poly, (a, b + 1, c), -(&v * p));
        add(&mut poly, (a, b, c), -(&v * q));
    }
    // x1^4 = -(p x1^2 + q x1 + r)
    while let Some((&k, _)) = poly.iter().rev().find(|(k, _)| k.0 >= 4) {
        let v = poly.remove(&k).unwrap();
        let (a, b, c) = (k.0 - 4, k.1, k.2);
        add(&mut poly, (a + 2, b, c), -(&v * p));
        add(&mut poly, (a + 1, b, c), -(&v * q));
        add(&mut poly, (a, b, c), -(&v * r));
    }
    let mut out = vec![BigRational::zero(); REAL_DIM];
    for ((a, b, c), v) in poly {
        out[c + 2 * (b + 3 * a)] = v;
    }
    out
}

fn to_int_matrix(rows: Vec<Vec<BigRational>>) -> IntMatrix {
    let den = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let rows = rows
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.numer() * (&den / v.denom())).collect())
        .collect();
    IntMatrix { rows, den }
}

/// Divide out the content so that gcd(num, den) = 1 and den > 0.
fn normalize(mut num: Vec<BigInt>, mut den: BigInt) -> (Vec<BigInt>, BigInt) {
    if den.is_negative() {
        den = -den;
        for v in num.iter_mut() {
            *v = -&*v;
        }
    }
    let mut g = den.clone();
    for v in &num {
        if g.is_one() {
            break;
        }
        if !v.is_zero() {
            g = g.gcd(v);
        }
    }
    if num.iter().all(|v| v.is_zero()) {
        return (num, BigInt::one());
    }
    if !g.is_one() {
        for v in num.iter_mut() {
            *v = &*v / &g;
        }
        den /= &g;
    }
    (num, den)
}

impl SplitField {
    /// Builds the normal-form tables. Requires a != 0; field properties are
    /// only guaranteed for quartics passing the gate.
    pub fn new(quartic: &Quartic) -> Result<Arc<Self>, KernelError> {
        if quartic.a.is_zero() {
            return Err(KernelError::DegenerateQuartic("leading coefficient is zero".into()));
        }
        let (p, q, r) = quartic.monic();
        let mut rows = Vec::with_capacity(RAW_DIM);
        for a in 0..7 {
            for b in 0..5 {
                for c in 0..3 {
                    let mut m = BTreeMap::new();
                    m.insert((a, b, c), BigRational::one());
                    rows.push(reduce_real(&p, &q, &r, m));
                }
            }
        }
        Ok(Arc::new(Self {
            quartic: quartic.clone(),
            p,
            q,
            r,
            reduction: to_int_matrix(rows),
            galois: (0..24).map(|_| OnceLock::new()).collect(),
        }))
    }

    pub fn quartic(&self) -> &Quartic {
        &self.quartic
    }

    fn mul_raw(&self, (un, ud): (&[BigInt], &BigInt), (vn, vd): (&[BigInt], &BigInt)) -> (Vec<BigInt>, BigInt) {
        let mut raw: Vec<[BigInt; 2]> = vec![[BigInt::zero(), BigInt::zero()]; RAW_DIM];
        let unz: Vec<(usize, &BigInt)> = un.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        let vnz: Vec<(usize, &BigInt)> = vn.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        for &(i, a) in &unz {
            let (a1, a2, a3, a4) = basis_exponents(i);
            for &(j, b) in &vnz {
                let (b1, b2, b3, b4) = basis_exponents(j);
                let k = raw_index(a1 + b1, a2 + b2, a3 + b3);
                let prod = a * b;
                match a4 + b4 {
                    0 => raw[k][0] += prod,
                    1 => raw[k][1] += prod,
                    _ => raw[k][0] -= prod,
                }
            }
        }
        let mut out = vec![BigInt::zero(); DIM];
        for (k, pair) in raw.iter().enumerate() {
            for (e, coef) in pair.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                for (m, t) in self.reduction.rows[k].iter().enumerate() {
                    if !t.is_zero() {
                        out[2 * m + e] += coef * t;
                    }
                }
            }
        }
        normalize(out, ud * vd * &self.reduction.den)
    }

    fn galois_table(&self, pidx: usize) -> &IntMatrix {
        self.galois[pidx].get_or_init(|| {
            let perm = permutations()[pidx];
            let root = |j: u8| -> (Vec<BigInt>, BigInt) {
                let mut n = vec![BigInt::zero(); DIM];
                if j == 3 {
                    for e in [basis_index(1, 0, 0, 0), basis_index(0, 1, 0, 0), basis_index(0, 0, 1, 0)] {
                        n[e] = BigInt::from(-1);
                    }
                } else {
                    let mut e = [0, 0, 0];
                    e[j as usize] = 1;
                    n[basis_index(e[0], e[1], e[2], 0)] = BigInt::one();
                }
                (n, BigInt::one())
            };
            let images = [root(perm[0]), root(perm[1]), root(perm[2])];
            let mut one = vec![BigInt::zero(); DIM];
            one[0] = BigInt::one();
            let unit = (one, BigInt::one());
            let pow = |base: &(Vec<BigInt>, BigInt), e: usize| {
                let mut acc = unit.clone();
                for _ in 0..e {
                    acc = self.mul_raw((&acc.0, &acc.1), (&base.0, &base.1));
                }
                acc
            };
            let rows: Vec<Vec<BigRational>> = (0..REAL_DIM)
                .map(|m| {
                    let (e1, e2, e3) = real_exponents(m);
                    let t1 = pow(&images[0], e1);
                    let t2 = pow(&images[1], e2);
                    let t3 = pow(&images[2], e3);
                    let t12 = self.mul_raw((&t1.0, &t1.1), (&t2.0, &t2.1));
                    let (n, d) = self.mul_raw((&t12.0, &t12.1), (&t3.0, &t3.1));
                    (0..REAL_DIM)
                        .map(|k| BigRational::new(n[2 * k].clone(), d.clone()))
                        .collect()
                })
                .collect();
            to_int_matrix(rows)
        })
    }

    pub fn zero(self: &Arc<Self>) -> SplitElem {
        SplitElem { field: self.clone(), num: vec![BigInt::zero(); DIM], den: BigInt::one() }
    }

    pub fn one(self: &Arc<Self>) -> SplitElem {
        self.rational(BigRational::one())
    }

    pub fn rational(self: &Arc<Self>, v: BigRational) -> SplitElem {
        let mut num = vec![BigInt::zero(); DIM];
        num[0] = v.numer().clone();
        SplitElem::from_parts(self.clone(), num, v.denom().clone())
    }

    pub fn int(self: &Arc<Self>, v: i64) -> SplitElem {
        self.rational(BigRational::from_integer(v.into()))
    }

    /// The root x_j, j in 1..=4.
    pub fn root(self: &Arc<Self>, j: usize) -> SplitElem {
        assert!((1..=4).contains(&j), "root index out of range");
        let mut num = vec![BigInt::zero(); DIM];
        if j == 4 {
            for e in [basis_index(1, 0, 0, 0), basis_index(0, 1, 0, 0), basis_index(0, 0, 1, 0)] {
                num[e] = BigInt::from(-1);
            }
        } else {
            let mut e = [0; 3];
            e[j - 1] = 1;
            num[basis_index(e[0], e[1], e[2], 0)] = BigInt::one();
        }
        SplitElem { field: self.clone(), num, den: BigInt::one() }
    }

    pub fn i(self: &Arc<Self>) -> SplitElem {
        let mut num = vec![BigInt::zero(); DIM];
        num[1] = BigInt::one();
        SplitElem { field: self.clone(), num, den: BigInt::one() }
    }

    pub fn basis(self: &Arc<Self>, idx: usize) -> SplitElem {
        let mut num = vec![BigInt::zero(); DIM];
        num[idx] = BigInt::one();
        SplitElem { field: self.clone(), num, den: BigInt::one() }
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[BigRational]) -> SplitElem {
        assert_eq!(coeffs.len(), DIM);
        let den = coeffs.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let num = coeffs.iter().map(|v| v.numer() * (&den / v.denom())).collect();
        SplitElem::from_parts(self.clone(), num, den)
    }

    /// Normal form of an arbitrary polynomial in x1..x4 and i.
    pub fn reduce(self: &Arc<Self>, raw: &RawPoly) -> SplitElem {
        let s = [self.root(1), self.root(2), self.root(3), self.root(4), self.i()];
        let mut acc = self.zero();
        for (exps, c) in raw {
            if c.is_zero() {
                continue;
            }
            let mut t = self.rational(c.clone());
            for (k, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &s[k];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Normal form of a polynomial in x1, x2, x3 only, via direct Cauchy-module
    /// rewriting (used as an independent check of [`SplitField::reduce`]).
    pub fn reduce_rewrite(self: &Arc<Self>, poly: &BTreeMap<(usize, usize, usize), BigRational>) -> SplitElem {
        let re = reduce_real(&self.p, &self.q, &self.r, poly.clone());
        let mut coeffs = vec![BigRational::zero(); DIM];
        for (m, v) in re.into_iter().enumerate() {
            coeffs[2 * m] = v;
        }
        self.from_coeffs(&coeffs)
    }
}

/// An element of L in normal form: `num / den` with integer numerators.
#[derive(Clone)]
pub struct SplitElem {
    field: Arc<SplitField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for SplitElem {
    fn eq(&self, other: &Self) -> bool {
        self.den == other.den && self.num == other.num
    }
}

impl Eq for SplitElem {}

impl fmt::Debug for SplitElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SplitElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, n) in self.num.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let (e1, e2, e3, e4) = basis_exponents(idx);
            write!(f, "({})", BigRational::new(n.clone(), self.den.clone()))?;
            for (name, e) in [("x1", e1), ("x2", e2), ("x3", e3), ("i", e4)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl SplitElem {
    fn from_parts(field: Arc<SplitField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let (num, den) = normalize(num, den);
        Self { field, num, den }
    }

    pub fn field(&self) -> &Arc<SplitField> {
        &self.field
    }

    pub fn coeff(&self, idx: usize) -> BigRational {
        BigRational::new(self.num[idx].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..DIM).map(|k| self.coeff(k)).collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|v| v.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.is_rational().is_some_and(|v| v.is_one())
    }

    /// The rational value, if every non-constant coordinate vanishes.
    pub fn is_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|v| v.is_zero()) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    pub fn zero_like(&self) -> SplitElem {
        self.field.zero()
    }

    pub fn rational_like(&self, v: BigRational) -> SplitElem {
        self.field.rational(v)
    }

    pub fn scale(&self, s: &BigRational) -> SplitElem {
        let num = self.num.iter().map(|v| v * s.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * s.denom())
    }

    /// Real part (coefficients without i) and imaginary part, both rho-fixed.
    pub fn re_im(&self) -> (SplitElem, SplitElem) {
        let mut re = vec![BigInt::zero(); DIM];
        let mut im = vec![BigInt::zero(); DIM];
        for m in 0..REAL_DIM {
            re[2 * m] = self.num[2 * m].clone();
            im[2 * m] = self.num[2 * m + 1].clone();
        }
        (
            Self::from_parts(self.field.clone(), re, self.den.clone()),
            Self::from_parts(self.field.clone(), im, self.den.clone()),
        )
    }

    /// Complex conjugation rho.
    pub fn conj(&self) -> SplitElem {
        let num = self
            .num
            .iter()
            .enumerate()
            .map(|(k, v)| if k % 2 == 1 { -v } else { v.clone() })
            .collect();
        SplitElem { field: self.field.clone(), num, den: self.den.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.num.iter().skip(1).step_by(2).all(|v| v.is_zero())
    }

    pub fn pow(&self, e: u32) -> SplitElem {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Apply the Galois element (sigma, eps): x_j -> x_{sigma(j)}, i -> (-1)^eps i.
    pub fn galois(&self, perm: &[u8; 4], eps: bool) -> SplitElem {
        let pidx = perm_index(perm);
        let mut num = vec![BigInt::zero(); DIM];
        let den = if pidx == 0 {
            num.clone_from(&self.num);
            self.den.clone()
        } else {
            let table = self.field.galois_table(pidx);
            for (m, row) in table.rows.iter().enumerate() {
                for e in 0..2 {
                    let c = &self.num[2 * m + e];
                    if c.is_zero() {
                        continue;
                    }
                    for (k, t) in row.iter().enumerate() {
                        if !t.is_zero() {
                            num[2 * k + e] += c * t;
                        }
                    }
                }
            }
            &self.den * &table.den
        };
        if eps {
            for k in (1..DIM).step_by(2) {
                num[k] = -&num[k];
            }
        }
        Self::from_parts(self.field.clone(), num, den)
    }

    pub fn inv(&self) -> Result<SplitElem, KernelError> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        if let Some(v) = self.is_rational() {
            return Ok(self.field.rational(BigRational::one() / v));
        }
        // Column k of the multiplication matrix is self * basis_k.
        let mut mat = vec![vec![BigRational::zero(); DIM]; DIM];
        for k in 0..DIM {
            let col = self * &self.field.basis(k);
            for (i, row) in mat.iter_mut().enumerate() {
                row[k] = col.coeff(i);
            }
        }
        let mut rhs = vec![BigRational::zero(); DIM];
        rhs[0] = BigRational::one();
        let y = linalg::solve(&mat, &rhs).ok_or(KernelError::SingularMultiplication)?;
        Ok(self.field.from_coeffs(&y))
    }

    pub fn div(&self, other: &SplitElem) -> Result<SplitElem, KernelError> {
        Ok(self * &other.inv()?)
    }

    /// Exact rational strings "n/d" for all 48 coordinates.
    pub fn to_strings(&self) -> Vec<String> {
        (0..DIM).map(|k| ratio_string(&self.coeff(k))).collect()
    }
}

pub use crate::serial::ratio_string;

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Add<&'a SplitElem> for &'a SplitElem {
    type Output = SplitElem;
    fn add(self, rhs: &SplitElem) -> SplitElem {
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &rhs.den + b * &self.den)
            .collect();
        SplitElem::from_parts(self.field.clone(), num, &self.den * &rhs.den)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Sub<&'a SplitElem> for &'a SplitElem {
    type Output = SplitElem;
    fn sub(self, rhs: &SplitElem) -> SplitElem {
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &rhs.den - b * &self.den)
            .collect();
        SplitElem::from_parts(self.field.clone(), num, &self.den * &rhs.den)
    }
}

impl<'a> Mul<&'a SplitElem> for &'a SplitElem {
    type Output = SplitElem;
    fn mul(self, rhs: &SplitElem) -> SplitElem {
        if let Some(v) = rhs.is_rational() {
            return self.scale(&v);
        }
        if let Some(v) = self.is_rational() {
            return rhs.scale(&v);
        }
        let (num, den) = self.field.mul_raw((&self.num, &self.den), (&rhs.num, &rhs.den));
        SplitElem { field: self.field.clone(), num, den }
    }
}

impl Neg for &SplitElem {
    type Output = SplitElem;
    fn neg(self) -> SplitElem {
        SplitElem {
            field: self.field.clone(),
            num: self.num.iter().map(|v| -v).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<SplitElem> for SplitElem {
            type Output = SplitElem;
            fn $m(self, rhs: SplitElem) -> SplitElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a SplitElem> for SplitElem {
            type Output = SplitElem;
            fn $m(self, rhs: &SplitElem) -> SplitElem {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<SplitElem> for &'a SplitElem {
            type Output = SplitElem;
            fn $m(self, rhs: SplitElem) -> SplitElem {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SplitElem {
    type Output = SplitElem;
    fn neg(self) -> SplitElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> Arc<SplitField> {
        SplitField::new(&Quartic::from_ints(1, -5, -2, 1)).unwrap()
    }

    #[test]
    fn index_roundtrip() {
        for idx in 0..DIM {
            let (a, b, c, d) = basis_exponents(idx);
            assert!(a <= 3 && b <= 2 && c <= 1 && d <= 1);
            assert_eq!(basis_index(a, b, c, d), idx);
        }
    }

    #[test]
    fn vieta() {
        let f = field();
        let x: Vec<_> = (1..=4).map(|j| f.root(j)).collect();
        assert!((&(&x[0] + &x[1]) + &(&x[2] + &x[3])).is_zero());
        let prod = &(&x[0] * &x[1]) * &(&x[2] * &x[3]);
        assert_eq!(prod.is_rational(), Some(BigRational::from_integer(1.into())));
        // e2 = p
        let mut e2 = f.zero();
        for i in 0..4 {
            for j in i + 1..4 {
                e2 = &e2 + &(&x[i] * &x[j]);
            }
        }
        assert_eq!(e2.is_rational(), Some(BigRational::from_integer((-5).into())));
    }

    #[test]
    fn x1_fourth_power() {
        let f = field();
        let x1 = f.root(1);
        // x^4 = 5x^2 + 2x - 1
        let expect = &(&(&x1 * &x1).scale(&BigRational::from_integer(5.into()))
            + &x1.scale(&BigRational::from_integer(2.into())))
            - &f.one();
        assert_eq!(x1.pow(4), expect);
    }

    #[test]
    fn i_squared() {
        let f = field();
        assert_eq!(&f.i() * &f.i(), f.int(-1));
    }

    #[test]
    fn inverse_of_root_difference() {
        let f = field();
        let u = &f.root(1) - &f.root(2);
        let v = u.inv().unwrap();
        assert!((&u * &v).is_one());
        assert!(matches!(f.zero().inv(), Err(KernelError::DivisionByZero)));
    }

    #[test]
    fn galois_permutes_roots() {
        let f = field();
        let p = [1u8, 2, 3, 0];
        for j in 1..=4 {
            let img = f.root(j).galois(&p, false);
            assert_eq!(img, f.root(p[j - 1] as usize + 1));
        }
        assert_eq!(f.i().galois(&[0, 1, 2, 3], true), -f.i());
    }

    #[test]
    fn reduce_matches_rewrite() {
        let f = field();
        let mut raw = RawPoly::new();
        raw.insert([3, 2, 4, 0, 0], BigRational::from_integer(2.into()));
        raw.insert([5, 0, 3, 0, 0], BigRational::new(1.into(), 3.into()));
        let mut poly = BTreeMap::new();
        poly.insert((3, 2, 4), BigRational::from_integer(2.into()));
        poly.insert((5, 0, 3), BigRational::new(1.into(), 3.into()));
        assert_eq!(f.reduce(&raw), f.reduce_rewrite(&poly));
    }
}
