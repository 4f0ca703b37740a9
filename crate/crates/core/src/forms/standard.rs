//! The standard forms attached to an admissible quartic: the Kähler form
//! omega, the holomorphic volume theta, the special classes M and M', the
//! classes A1 and A2 and the isogenies pi_a, pi_b.

use num_rational::BigRational;

use super::algebra::{wedge_sign, Coeff, Form, LinMap, FULL};
use super::FormsError;
use crate::cube::{CubeError, CubeModel, Orbit};
use crate::kernel::{ContextConstants, SplitElem};

/// Split a Chern character into (c1, c2), checking the rank.
pub fn chern_parts<C: Coeff>(ch: &Form<C>, rank: &C) -> Result<(Form<C>, Form<C>), FormsError> {
    let ch0 = ch.degree_part(0);
    let expect = Form::scalar(rank.clone());
    if ch0 != expect {
        return Err(FormsError::RankMismatch { expected: format!("{rank:?}") });
    }
    let c1 = ch.degree_part(2);
    let half = BigRational::new(1.into(), 2.into());
    let c2 = c1.wedge(&c1).scale_q(&half).minus(&ch.degree_part(4));
    Ok((c1, c2))
}

#[derive(Debug, Clone)]
pub struct StandardForms {
    pub ctx: ContextConstants,
    pub model: CubeModel,
    /// Metric weights g_j = (D/Delta)(-1)^{j+1} mu_j, so omega = i Σ g_j dz_j dz̄_j.
    pub g: [SplitElem; 4],
    g_inv: [SplitElem; 4],
    dd_inv: SplitElem,
    pub omega: Form<SplitElem>,
    pub theta: Form<SplitElem>,
    pub theta_bar: Form<SplitElem>,
    /// dz1 dz̄2 dz3 dz̄4 and its conjugate.
    pub m_small: Form<SplitElem>,
    pub m_small_bar: Form<SplitElem>,
    pub m: Form<SplitElem>,
    pub m_prime: Form<SplitElem>,
    pub a1: Form<SplitElem>,
    pub big_omega: Form<SplitElem>,
    pub pair_orbit: Orbit,
    pub special_orbit: Orbit,
}

impl StandardForms {
    pub fn new(ctx: ContextConstants) -> Result<Self, CubeError> {
        let model = CubeModel::build()?;
        let one = ctx.field.one();
        let delta = ctx.delta_elem();
        let dd_over_delta = ctx.dd.div(&delta).expect("Delta is nonzero");
        let g: [SplitElem; 4] = [0, 1, 2, 3].map(|j| {
            let v = &dd_over_delta * &ctx.mu[j];
            if j % 2 == 0 {
                v
            } else {
                -v
            }
        });
        let g_inv = g.clone().map(|v| v.inv().expect("metric weight is nonzero"));
        let dd_inv = ctx.dd.inv().expect("D is nonzero");

        let mut omega = Form::zero();
        for (j, gj) in g.iter().enumerate() {
            omega.add_term((1 << j) | (1 << (j + 4)), &ctx.i * gj);
        }
        let theta = Form::monomial(0x0f, dd_inv.clone());
        let theta_bar = theta.conj();
        let m_small = Form::from_seq(&[0, 5, 2, 7], one.clone());
        let m_small_bar = m_small.conj();
        let m = m_small.plus(&m_small_bar).scale(&ctx.dd);
        let m_prime = m_small.minus(&m_small_bar).scale(&ctx.i);

        let pair_orbit = model.orbit_of(&[0, 2])?;
        let special_orbit = model.orbit_of(&[0, 2, 5, 7])?;
        let a1 = model.expand_seed(&pair_orbit, &(&ctx.h3 * &ctx.diff(1, 3)))?;

        let half = BigRational::new(1.into(), 2.into());
        let two = ctx.int(2);
        let big_omega = omega
            .wedge(&omega)
            .scale_q(&half)
            .plus(&theta.scale(&two))
            .plus(&theta_bar.scale(&two));

        Ok(Self {
            ctx,
            model,
            g,
            g_inv,
            dd_inv,
            omega,
            theta,
            theta_bar,
            m_small,
            m_small_bar,
            m,
            m_prime,
            a1,
            big_omega,
            pair_orbit,
            special_orbit,
        })
    }

    pub fn one(&self) -> SplitElem {
        self.ctx.field.one()
    }

    /// A2(c), seeded by i c D h3 (x1 - x3) on (1, 3).
    pub fn a2(&self, c: &BigRational) -> Form<SplitElem> {
        let seed = (&self.ctx.i_dd * &self.ctx.h3 * &self.ctx.diff(1, 3)).scale(c);
        self.model
            .expand_seed(&self.pair_orbit, &seed)
            .expect("A2 seed is compatible with its stabilizer")
    }

    /// <f> = integral of the top-degree part against theta ∧ theta_bar = dz_{1..4} dz̄_{1..4} / Delta.
    pub fn pair_top(&self, f: &Form<SplitElem>) -> SplitElem {
        match f.coeff(FULL) {
            Some(c) => c.scale(&self.ctx.delta),
            None => self.ctx.field.zero(),
        }
    }

    /// The isogeny acting by the embedding phi_v(a) on dz_v.
    pub fn isogeny(&self, a: &SplitElem) -> Result<LinMap<SplitElem>, CubeError> {
        let mut d = Vec::with_capacity(4);
        for v in 0..4u8 {
            d.push(self.model.embedding_of(a, v)?);
        }
        Ok(LinMap::diagonal(&[d[0].clone(), d[1].clone(), d[2].clone(), d[3].clone()]))
    }

    pub fn pi_a(&self) -> LinMap<SplitElem> {
        self.isogeny(&self.ctx.a).expect("a lies in F")
    }

    pub fn pi_b(&self) -> LinMap<SplitElem> {
        self.isogeny(&self.ctx.b).expect("b lies in F")
    }

    /// The antilinear Hodge star on (0,2)-forms, normalized so that
    /// alpha ∧ star(alpha) = |alpha|^2 theta_bar.
    pub fn star_02(&self, f: &Form<SplitElem>) -> Result<Form<SplitElem>, FormsError> {
        if !f.is_pure(0, 2) {
            return Err(FormsError::NotPure02);
        }
        let mut out = Form::zero();
        for (&mask, c) in f.terms() {
            let comp = 0xf0 & !mask;
            let mut coef = c.conj() * &self.dd_inv;
            for j in 0..4 {
                if mask & (1 << (j + 4)) != 0 {
                    coef = coef * &self.g_inv[j];
                }
            }
            if wedge_sign(mask, comp) < 0 {
                coef = -coef;
            }
            out.add_term(comp, coef);
        }
        Ok(out)
    }

    pub fn restrict(&self, f: &Form<SplitElem>) -> Form<SplitElem> {
        super::algebra::restrict_to_y(f, &self.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{constants, Quartic};

    fn std_forms() -> StandardForms {
        StandardForms::new(constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap()).unwrap()
    }

    #[test]
    fn basic_forms_are_rational_and_real() {
        let s = std_forms();
        for f in [&s.omega, &s.m, &s.m_prime, &s.a1] {
            assert!(s.model.is_rational_form(f));
            assert_eq!(&f.conj(), f);
        }
        let top = s.omega.pow(4, &s.one());
        assert_eq!(s.pair_top(&top).is_rational(), Some(BigRational::from_integer(24.into())));
    }

    #[test]
    fn star_is_an_involution() {
        let s = std_forms();
        let f = Form::monomial(0b0011_0000, s.ctx.x[0].clone())
            .plus(&Form::monomial(0b1010_0000, s.ctx.i.clone()));
        let star = s.star_02(&f).unwrap();
        assert_eq!(s.star_02(&star).unwrap(), f);
        assert!(matches!(s.star_02(&s.omega), Err(FormsError::NotPure02)));
    }

    #[test]
    fn chern_parts_rank_check() {
        let s = std_forms();
        let one = s.one();
        let ch = Form::scalar(one.clone()).plus(&s.omega);
        assert!(matches!(chern_parts(&ch, &s.ctx.int(2)), Err(FormsError::RankMismatch { .. })));
        let (c1, _) = chern_parts(&ch, &one).unwrap();
        assert_eq!(c1, s.omega);
    }
}
