//! Adapted complex structures: the coordinate change z = w + ᾱ w̄ with
//! formal coefficient matrices alpha and alpha-tilde, the conditions that
//! keep A1, A2 and omega of type (1,1), and the distinguished solution alpha*.

pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::forms::{bidegree_of, Coeff, Form, LinMap};
use crate::kernel::{enclose, isolate_roots, ContextConstants, SplitElem};
pub use poly::{conj_var, groebner, reduce, Mono, ParamPoly, NVARS, VAR_NAMES};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("det alpha equals (x2 - x4)/(x1 - x3): the inverse transform does not exist")]
    SingularTransform,
    #[error("h3 vanishes, alpha* is undefined")]
    DegenerateH3,
}

/// Coefficient rings that contain L as constants.
pub trait FromSplit: Coeff {
    fn from_split(c: SplitElem) -> Self;
}

impl FromSplit for SplitElem {
    fn from_split(c: SplitElem) -> Self {
        c
    }
}

impl FromSplit for ParamPoly {
    fn from_split(c: SplitElem) -> Self {
        ParamPoly::constant(c)
    }
}

/// A 2x2 matrix [[m11, m12], [m21, m22]].
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaMatrix<C>(pub [[C; 2]; 2]);

impl<C: Coeff> AlphaMatrix<C> {
    pub fn new(a: C, b: C, c: C, d: C) -> Self {
        Self([[a, b], [c, d]])
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.0[i][j]
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> AlphaMatrix<D> {
        AlphaMatrix([[f(&self.0[0][0]), f(&self.0[0][1])], [f(&self.0[1][0]), f(&self.0[1][1])]])
    }

    /// [[d, -b], [-c, a]].
    pub fn hat(&self) -> Self {
        let [[a, b], [c, d]] = &self.0;
        Self::new(d.clone(), b.negated(), c.negated(), a.clone())
    }

    pub fn det(&self) -> C {
        let [[a, b], [c, d]] = &self.0;
        a.times(d).minus(&b.times(c))
    }

    pub fn trace(&self) -> C {
        self.0[0][0].plus(&self.0[1][1])
    }

    pub fn add(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.0[i][j].plus(&o.0[i][j]);
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.0[i][0].times(&o.0[0][j]).plus(&self.0[i][1].times(&o.0[1][j]));
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map(|v| v.times(s))
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    /// Whether the matrix is s * I, returning s.
    pub fn as_scalar(&self) -> Option<C> {
        let [[a, b], [c, d]] = &self.0;
        (b.is_zero() && c.is_zero() && a == d).then(|| a.clone())
    }
}

/// <A, B> = Tr(A B̂).
pub fn pairing<C: Coeff>(a: &AlphaMatrix<C>, b: &AlphaMatrix<C>) -> C {
    a.mul(&b.hat()).trace()
}

/// det(A + B) - det A - det B.
pub fn pairing_by_det<C: Coeff>(a: &AlphaMatrix<C>, b: &AlphaMatrix<C>) -> C {
    a.add(b).det().minus(&a.det()).minus(&b.det())
}

fn k_ratio(ctx: &ContextConstants) -> SplitElem {
    ctx.diff(1, 3).div(&ctx.diff(2, 4)).expect("roots are distinct")
}

pub fn h_matrix(ctx: &ContextConstants) -> AlphaMatrix<SplitElem> {
    AlphaMatrix::new(
        -(&ctx.h4 * &ctx.diff(2, 3)),
        &ctx.h2 * &ctx.diff(3, 4),
        -(&ctx.h2 * &ctx.diff(1, 2)),
        -(&ctx.h4 * &ctx.diff(1, 4)),
    )
}

/// The displayed Ĥ, typed entrywise.
pub fn h_hat_displayed(ctx: &ContextConstants) -> AlphaMatrix<SplitElem> {
    AlphaMatrix::new(
        -(&ctx.h4 * &ctx.diff(1, 4)),
        -(&ctx.h2 * &ctx.diff(3, 4)),
        &ctx.h2 * &ctx.diff(1, 2),
        -(&ctx.h4 * &ctx.diff(2, 3)),
    )
}

pub fn alpha_vars(ctx: &ContextConstants) -> AlphaMatrix<ParamPoly> {
    let v = |k| ParamPoly::var(&ctx.field, k);
    AlphaMatrix::new(v(0), v(1), v(2), v(3))
}

pub fn tilde_vars(ctx: &ContextConstants) -> AlphaMatrix<ParamPoly> {
    let v = |k| ParamPoly::var(&ctx.field, k);
    AlphaMatrix::new(v(4), v(5), v(6), v(7))
}

/// <alpha, H> - h3(x2 - x4) - h3(x1 - x3) det alpha.
pub fn cond1<C: FromSplit>(alpha: &AlphaMatrix<C>, ctx: &ContextConstants) -> C {
    let h = h_matrix(ctx).map(|v| C::from_split(v.clone()));
    let c0 = C::from_split(&ctx.h3 * &ctx.diff(2, 4));
    let c1 = C::from_split(&ctx.h3 * &ctx.diff(1, 3));
    pairing(alpha, &h).minus(&c0).minus(&c1.times(&alpha.det()))
}

/// <alpha-tilde, Ĥ> - h3(x1 - x3) - h3(x2 - x4) det alpha-tilde.
pub fn cond2<C: FromSplit>(tilde: &AlphaMatrix<C>, ctx: &ContextConstants) -> C {
    let hh = h_matrix(ctx).hat().map(|v| C::from_split(v.clone()));
    let c0 = C::from_split(&ctx.h3 * &ctx.diff(1, 3));
    let c1 = C::from_split(&ctx.h3 * &ctx.diff(2, 4));
    pairing(tilde, &hh).minus(&c0).minus(&c1.times(&tilde.det()))
}

pub fn condition_polys(ctx: &ContextConstants) -> (ParamPoly, ParamPoly) {
    (cond1(&alpha_vars(ctx), ctx), cond2(&tilde_vars(ctx), ctx))
}

/// The two long-hand conditions as typed, term by term.
pub fn displayed_conditions(ctx: &ContextConstants) -> (ParamPoly, ParamPoly) {
    let v = |k| ParamPoly::var(&ctx.field, k);
    let c = |e: SplitElem| ParamPoly::constant(e);
    let d = |i, j| ctx.diff(i, j);
    let one = c(&ctx.h3 * &d(1, 3))
        .mul(&v(0).mul(&v(3)).sub(&v(1).mul(&v(2))))
        .add(&v(0).scale(&(&ctx.h4 * &d(1, 4))))
        .sub(&v(1).scale(&(&ctx.h2 * &d(1, 2))))
        .add(&v(2).scale(&(&ctx.h2 * &d(3, 4))))
        .sub(&v(3).scale(&(&ctx.h4 * &d(3, 2))))
        .add(&c(&ctx.h3 * &d(2, 4)));
    let two = c(&ctx.h3 * &d(2, 4))
        .mul(&v(4).mul(&v(7)).sub(&v(5).mul(&v(6))))
        .add(&v(7).scale(&(&ctx.h4 * &d(1, 4))))
        .sub(&v(6).scale(&(&ctx.h2 * &d(3, 4))))
        .add(&v(5).scale(&(&ctx.h2 * &d(1, 2))))
        .sub(&v(4).scale(&(&ctx.h4 * &d(3, 2))))
        .add(&c(&ctx.h3 * &d(1, 3)));
    (one, two)
}

/// The reduction set {cond1, cond2, conj cond1, conj cond2}.
pub fn condition_ideal(ctx: &ContextConstants) -> Vec<ParamPoly> {
    let (c1, c2) = condition_polys(ctx);
    vec![c1.clone(), c2.clone(), c1.conj(), c2.conj()]
}

/// (x1 - x3)/(x2 - x4) * hat(conj alpha).
pub fn tilde_from_alpha<C: FromSplit>(alpha: &AlphaMatrix<C>, ctx: &ContextConstants) -> AlphaMatrix<C> {
    alpha.conj().hat().scale(&C::from_split(k_ratio(ctx)))
}

/// The coordinate change dz1 = dw1 + conj(a12) dw̄2 + conj(a14) dw̄4, and so
/// on, with the dz̄ rows conjugate.
pub fn w_substitution<C: FromSplit>(
    alpha: &AlphaMatrix<C>,
    tilde: &AlphaMatrix<C>,
    ctx: &ContextConstants,
) -> LinMap<C> {
    let zero = C::from_split(ctx.field.zero());
    let one = C::from_split(ctx.field.one());
    let mut a: [[C; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zero.clone()));
    for (j, row) in a.iter_mut().enumerate() {
        row[j] = one.clone();
    }
    let mut b: [[C; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zero.clone()));
    let ab = alpha.conj();
    let tb = tilde.conj();
    // rows z1, z3 use w̄2, w̄4; rows z2, z4 use w̄1, w̄3
    b[0][1] = ab.0[0][0].clone();
    b[0][3] = ab.0[0][1].clone();
    b[2][1] = ab.0[1][0].clone();
    b[2][3] = ab.0[1][1].clone();
    b[1][0] = tb.0[0][0].clone();
    b[1][2] = tb.0[0][1].clone();
    b[3][0] = tb.0[1][0].clone();
    b[3][2] = tb.0[1][1].clone();
    LinMap::holomorphic(&a, &b)
}

pub fn lift_form(f: &Form<SplitElem>) -> Form<ParamPoly> {
    f.map_coeffs(|c| ParamPoly::constant(c.clone()))
}

/// The six (2,0) and six (0,2) coefficients of f pulled back through the
/// formal substitution, keyed by monomial mask.
pub fn symbolic_02_parts(f: &Form<SplitElem>, ctx: &ContextConstants) -> Vec<(u8, ParamPoly)> {
    let sub = w_substitution(&alpha_vars(ctx), &tilde_vars(ctx), ctx);
    let pulled = sub.pullback(&lift_form(f));
    let mut out = Vec::new();
    for mask in 0..=255u8 {
        let bd = bidegree_of(mask);
        if bd == (2, 0) || bd == (0, 2) {
            let c = pulled.coeff(mask).cloned().unwrap_or_else(|| ParamPoly::zero(&ctx.field));
            out.push((mask, c));
        }
    }
    out
}

/// How an ideal-membership question was settled.
#[derive(Debug, Clone, PartialEq)]
pub enum Membership {
    /// Division by the generators leaves remainder zero.
    Division,
    /// Division by a completed basis leaves remainder zero.
    Completed,
    /// Nonzero remainder against the completed basis (or completion gave up).
    NotCertified(ParamPoly),
}

pub fn certify_membership(p: &ParamPoly, gens: &[ParamPoly], max_pairs: usize) -> Membership {
    if reduce(p, gens).is_zero() {
        return Membership::Division;
    }
    match groebner(gens, max_pairs) {
        Some(gb) => {
            let r = reduce(p, &gb);
            if r.is_zero() {
                Membership::Completed
            } else {
                Membership::NotCertified(r)
            }
        }
        None => Membership::NotCertified(reduce(p, gens)),
    }
}

#[derive(Debug, Clone)]
pub struct InverseTransform {
    pub c: SplitElem,
    pub c_tilde: SplitElem,
    pub beta: AlphaMatrix<SplitElem>,
    pub beta_tilde: AlphaMatrix<SplitElem>,
    /// J on the covector basis dz1..dz4, dz̄1..dz̄4: J(e_r) = Σ_s j[r][s] e_s.
    pub j: Vec<Vec<SplitElem>>,
}

impl InverseTransform {
    pub fn j_squared(&self) -> Vec<Vec<SplitElem>> {
        let n = self.j.len();
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|t| {
                        (0..n).fold(self.c.zero_like(), |acc, s| acc + &self.j[r][s] * &self.j[s][t])
                    })
                    .collect()
            })
            .collect()
    }

    pub fn j_squared_is_minus_identity(&self) -> bool {
        let sq = self.j_squared();
        let one = self.c.rational_like(BigRational::one());
        sq.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(t, v)| if r == t { *v == -&one } else { v.is_zero() })
        })
    }
}

pub fn inverse_transform(alpha: &AlphaMatrix<SplitElem>, ctx: &ContextConstants) -> Result<InverseTransform, ParamError> {
    let k = k_ratio(ctx);
    let one = ctx.field.one();
    let denom = &one - &(&k * &alpha.det().conj());
    let c = denom.inv().map_err(|_| ParamError::SingularTransform)?;
    let c_tilde = c.conj();
    let tilde = tilde_from_alpha(alpha, ctx);
    let beta = alpha.scale(&-&c_tilde);
    let beta_tilde = tilde.scale(&-&c);
    let i = &ctx.i;
    let two = ctx.int(2);
    let zero = ctx.field.zero();
    let mut j = vec![vec![zero; 8]; 8];
    let diag1 = i * &(&(&two * &c) - &one);
    let diag2 = i * &(&(&two * &c_tilde) - &one);
    let two_i = &two * i;
    let bb = beta.conj();
    let tb = beta_tilde.conj();
    // J dz1, J dz3 involve dz̄2, dz̄4; J dz2, J dz4 involve dz̄1, dz̄3
    for (r, br) in [(0usize, 0usize), (2, 1)] {
        j[r][r] = diag1.clone();
        j[r][5] = &two_i * &bb.0[br][0];
        j[r][7] = &two_i * &bb.0[br][1];
    }
    for (r, br) in [(1usize, 0usize), (3, 1)] {
        j[r][r] = diag2.clone();
        j[r][4] = &two_i * &tb.0[br][0];
        j[r][6] = &two_i * &tb.0[br][1];
    }
    for r in 0..4 {
        for s in 0..8 {
            j[r + 4][(s + 4) % 8] = j[r][s].conj();
        }
    }
    Ok(InverseTransform { c, c_tilde, beta, beta_tilde, j })
}

pub fn alpha_star(ctx: &ContextConstants) -> Result<AlphaMatrix<SplitElem>, ParamError> {
    let h3_inv = ctx.h3.inv().map_err(|_| ParamError::DegenerateH3)?;
    let one = ctx.field.one();
    let two = ctx.int(2);
    let f4 = &one - &(&(&two * &ctx.h4) * &h3_inv);
    let f2 = &one - &(&(&two * &ctx.h2) * &h3_inv);
    let s = ctx.diff(1, 3).inv().expect("roots are distinct");
    let m = AlphaMatrix::new(
        &ctx.diff(2, 3) * &f4,
        -(&ctx.diff(3, 4) * &f2),
        &ctx.diff(1, 2) * &f2,
        &ctx.diff(1, 4) * &f4,
    );
    Ok(m.scale(&s))
}

/// k1 = (x1 - x4)/(x2 - x3), k2 = (x3 - x4)/(x1 - x2).
pub fn ellipsoid_weights(ctx: &ContextConstants) -> (SplitElem, SplitElem) {
    let k1 = ctx.diff(1, 4).div(&ctx.diff(2, 3)).expect("roots are distinct");
    let k2 = ctx.diff(3, 4).div(&ctx.diff(1, 2)).expect("roots are distinct");
    (k1, k2)
}

/// Residuals of the relations tying a34 to conj(a12) and a14 to conj(a32).
/// With `literal` the second relation uses (x1 - x3) as typed; otherwise (x1 - x2).
pub fn omegaoneone_residuals<C: FromSplit>(
    alpha: &AlphaMatrix<C>,
    ctx: &ContextConstants,
    literal: bool,
) -> (C, C) {
    let (k1, k2) = ellipsoid_weights(ctx);
    let k2 = if literal { ctx.diff(3, 4).div(&ctx.diff(1, 3)).expect("roots are distinct") } else { k2 };
    let r1 = alpha.0[1][1].minus(&alpha.0[0][0].conj().times(&C::from_split(k1)));
    let r2 = alpha.0[0][1].plus(&alpha.0[1][0].conj().times(&C::from_split(k2)));
    (r1, r2)
}

/// The alpha determined by free entries (a12, a32) through the corrected relations.
pub fn alpha_from_free<C: FromSplit>(a12: &C, a32: &C, ctx: &ContextConstants) -> AlphaMatrix<C> {
    let (k1, k2) = ellipsoid_weights(ctx);
    let a34 = a12.conj().times(&C::from_split(k1));
    let a14 = a32.conj().times(&C::from_split(k2)).negated();
    AlphaMatrix::new(a12.clone(), a14, a32.clone(), a34)
}

/// (ellipsoid residual, hyperplane residual) at (a12, a32), with |v|^2 = v conj(v).
pub fn ellipsoid_residual<C: FromSplit>(a12: &C, a32: &C, ctx: &ContextConstants) -> (C, C) {
    let (k1, k2) = ellipsoid_weights(ctx);
    let c = |e: SplitElem| C::from_split(e);
    let hyper = c(&ctx.h3 * &ctx.diff(2, 4))
        .plus(&c(&ctx.h4 * &ctx.diff(1, 4)).times(&a12.plus(&a12.conj())))
        .plus(&c(&ctx.h2 * &ctx.diff(3, 4)).times(&a32.plus(&a32.conj())));
    let quad = c(k1)
        .times(&a12.times(&a12.conj()))
        .plus(&c(k2).times(&a32.times(&a32.conj())));
    let e = c(&ctx.h3 * &ctx.diff(1, 3)).times(&quad).plus(&hyper);
    (e, hyper)
}

/// Outcome of the sampled fallback for an ideal-membership claim.
#[derive(Debug, Clone, Serialize)]
pub struct NumericCheck {
    pub samples: usize,
    pub bits: u32,
    /// Largest certified bound on |Re| and |Im| over all samples and polynomials.
    pub max_residual_bound: String,
    pub passed: bool,
}

/// A point on the constraint variety: random a12, a14, a32 with a34 solving
/// cond1, alpha-tilde from alpha, conjugate variables set to rho of the values.
pub fn sample_constraint_point(ctx: &ContextConstants, rng: &mut impl Rng) -> [SplitElem; NVARS] {
    let f = &ctx.field;
    let mut rnd = || {
        let re = BigRational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=7)));
        let im = BigRational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=7)));
        &f.rational(re) + &(&f.i() * &f.rational(im))
    };
    loop {
        let (a12, a14, a32) = (rnd(), rnd(), rnd());
        let at = |a34: SplitElem| AlphaMatrix::new(a12.clone(), a14.clone(), a32.clone(), a34);
        let b = cond1(&at(f.zero()), ctx);
        let a = &cond1(&at(f.one()), ctx) - &b;
        let Ok(a_inv) = a.inv() else { continue };
        let alpha = at(-(&b * &a_inv));
        let tilde = tilde_from_alpha(&alpha, ctx);
        let mut pt: [SplitElem; NVARS] = std::array::from_fn(|_| f.zero());
        for (k, v) in [&alpha.0[0][0], &alpha.0[0][1], &alpha.0[1][0], &alpha.0[1][1]].into_iter().enumerate() {
            pt[k] = v.clone();
        }
        for (k, v) in [&tilde.0[0][0], &tilde.0[0][1], &tilde.0[1][0], &tilde.0[1][1]].into_iter().enumerate() {
            pt[k + 4] = v.clone();
        }
        for k in 0..8 {
            pt[k + 8] = pt[k].conj();
        }
        return pt;
    }
}

/// Evaluate each polynomial at `samples` constraint points and bound the
/// residual by interval enclosures of width at most 2^-bits.
pub fn numeric_membership_check(
    polys: &[ParamPoly],
    ctx: &ContextConstants,
    samples: usize,
    seed: u64,
    bits: u32,
) -> NumericCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let enc = isolate_roots(&ctx.quartic, bits).expect("gate guarantees four real roots");
    let tol = BigRational::new(BigInt::one(), BigInt::one() << 128u32);
    let mut worst = BigRational::from_integer(0.into());
    for _ in 0..samples {
        let pt = sample_constraint_point(ctx, &mut rng);
        for p in polys {
            let (re, im) = p.eval(&pt).re_im();
            for part in [re, im] {
                let iv = enclose(&part, &enc, bits).expect("real and imaginary parts are real");
                let bound = iv.lo.abs().max(iv.hi.abs());
                if bound > worst {
                    worst = bound;
                }
            }
        }
    }
    NumericCheck { samples, bits, max_residual_bound: worst.to_string(), passed: worst < tol }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::StandardForms;
    use crate::kernel::{constants, Quartic};

    fn ctx() -> ContextConstants {
        constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap()
    }

    #[test]
    fn hat_and_pairing_laws() {
        let c = ctx();
        let a = alpha_vars(&c);
        let b = tilde_vars(&c);
        assert_eq!(a.hat().hat(), a);
        assert_eq!(a.mul(&a.hat()).as_scalar(), Some(a.det()));
        assert!(pairing(&a, &b).sub(&pairing_by_det(&a, &b)).is_zero());
        assert_eq!(pairing(&a, &a), a.det().scale(&c.int(2)));
        assert_eq!(h_matrix(&c).hat(), h_hat_displayed(&c));
    }

    #[test]
    fn conditions_match_long_form() {
        let c = ctx();
        let (c1, c2) = condition_polys(&c);
        let (d1, d2) = displayed_conditions(&c);
        assert!(c1.add(&d1).is_zero());
        assert!(c2.add(&d2).is_zero());
        assert_eq!(c1.constant_term(), -(&c.h3 * &c.diff(2, 4)));
    }

    #[test]
    fn a1_is_type_11_modulo_conditions() {
        let c = ctx();
        let s = StandardForms::new(c.clone()).unwrap();
        let ideal = condition_ideal(&c);
        for (_, p) in symbolic_02_parts(&s.a1, &c) {
            assert!(reduce(&p, &ideal).is_zero());
        }
    }

    #[test]
    fn alpha_star_and_transform() {
        let c = ctx();
        let a = alpha_star(&c).unwrap();
        assert!(cond1(&a, &c).is_zero());
        let (r1, r2) = omegaoneone_residuals(&a, &c, false);
        assert!(r1.is_zero() && r2.is_zero());
        let (e, _) = ellipsoid_residual(&a.0[0][0], &a.0[1][0], &c);
        assert!(e.is_zero());
        let t = inverse_transform(&a, &c).unwrap();
        assert!(t.j_squared_is_minus_identity());
        let zero = AlphaMatrix::new(c.field.zero(), c.field.zero(), c.field.zero(), c.field.zero());
        let t0 = inverse_transform(&zero, &c).unwrap();
        assert!(t0.c.is_one() && t0.beta.det().is_zero());
    }

    #[test]
    fn singular_transform_detected() {
        let c = ctx();
        // det alpha = (x2 - x4)/(x1 - x3) on a diagonal matrix with real entries
        let d = c.diff(2, 4).div(&c.diff(1, 3)).unwrap();
        let a = AlphaMatrix::new(d, c.field.zero(), c.field.zero(), c.field.one());
        assert!(matches!(inverse_transform(&a, &c), Err(ParamError::SingularTransform)));
    }

    #[test]
    fn ellipsoid_equals_condition_on_relations() {
        let c = ctx();
        let a12 = ParamPoly::var(&c.field, 0);
        let a32 = ParamPoly::var(&c.field, 2);
        let alpha = alpha_from_free(&a12, &a32, &c);
        let (e, _) = ellipsoid_residual(&a12, &a32, &c);
        assert!(cond1(&alpha, &c).add(&e).is_zero());
    }

    #[test]
    fn numeric_fallback_on_members() {
        let c = ctx();
        let (c1, _) = condition_polys(&c);
        let chk = numeric_membership_check(&[c1.clone(), c1.conj()], &c, 3, 7, 160);
        assert!(chk.passed);
        let one = ParamPoly::constant(c.field.one());
        assert!(!numeric_membership_check(&[one], &c, 1, 7, 160).passed);
    }
}
