//! Claims about the classes A1, A2 and the Chern characters built from them (C09..C15).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{elem, elem_or_q, form, form_match, q, ratio, Checks, Context, Outcome};
use crate::forms::{bidegree_of, ch_combination, chern_parts, sort_sign, Form, FormsError, StandardForms};
use crate::kernel::SplitElem;

/// dz1 dz3 dz̄2 dz̄4 in canonical order.
const M_MASK: u8 = 0b1010_0101;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// c^2 Delta.
fn weight(s: &StandardForms, c: i64) -> BigRational {
    int(c * c) * &s.ctx.delta
}

/// Pfaffian of the restriction of a 2-form to the generators {dz1, dz3, dz̄2, dz̄4};
/// the coefficient of dz1 dz3 dz̄2 dz̄4 in its square is twice this.
fn pfaffian(f: &Form<SplitElem>, zero: &SplitElem) -> SplitElem {
    let a = |u: u8, v: u8| f.coeff((1 << u) | (1 << v)).cloned().unwrap_or_else(|| zero.clone());
    &(&a(0, 2) * &a(5, 7)) - &(&a(0, 5) * &a(2, 7)) + &(&a(0, 7) * &a(2, 5))
}

pub(crate) fn c09(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let zero = s.ctx.field.zero();
    let sq = s.a1.wedge(&s.a1);
    let t_a = sq.coeff(M_MASK).cloned().unwrap_or_else(|| zero.clone()).scale(&BigRational::new(1.into(), 2.into()));
    let residual = &t_a + &s.ctx.dd;
    ch.check("t_a_plus_d_is_zero", residual.is_zero(), json!({ "t_a": elem(&t_a), "residual": elem(&residual) }));
    let pf = pfaffian(&s.a1, &zero);
    ch.check("pfaffian_agrees", pf == t_a, json!({ "pfaffian": elem(&pf) }));
    ch.finish()
}

/// A1 and A2(c) for the seed a13 (x1 - x3), when the seed is compatible.
fn seeded_pair(s: &StandardForms, a13: &SplitElem, c: i64) -> Option<(Form<SplitElem>, Form<SplitElem>)> {
    let seed = a13 * &s.ctx.diff(1, 3);
    let a1 = s.model.expand_seed(&s.pair_orbit, &seed).ok()?;
    let a2 = s.model.expand_seed(&s.pair_orbit, &(&s.ctx.i_dd * &seed).scale(&int(c))).ok()?;
    Some((a1, a2))
}

fn virtual_ch(s: &StandardForms, a1: &Form<SplitElem>, a2: &Form<SplitElem>, c: i64) -> Form<SplitElem> {
    let w = weight(s, c);
    ch_combination(
        &[
            (w.clone(), a1.clone()),
            (w, a1.negated()),
            (-BigRational::one(), a2.clone()),
            (-BigRational::one(), a2.negated()),
        ],
        &s.one(),
    )
}

pub(crate) fn c10(s: &StandardForms, ctx: &Context) -> Outcome {
    let mut ch = Checks::new();
    let seeds = [("h3", s.ctx.h3.clone()), ("h3+1", &s.ctx.h3 + &s.one())];
    let (&mm, _) = s.m_small.terms().iter().next().expect("monomial");
    let (&mb, _) = s.m_small_bar.terms().iter().next().expect("monomial");
    for (name, a13) in &seeds {
        for &c in &ctx.opts.c_values {
            let key = format!("a13={name},c={c}");
            let Some((a1, a2)) = seeded_pair(s, a13, c) else {
                ch.info(&key, json!("seed not compatible with the stabilizer"));
                continue;
            };
            let chv = virtual_ch(s, &a1, &a2, c);
            let zero = s.ctx.field.zero();
            let t_a = a1.wedge(&a1).coeff(M_MASK).cloned().unwrap_or(zero).scale(&BigRational::new(1.into(), 2.into()));
            let d4 = chv.degree_part(4);
            let support_ok = d4.terms().keys().all(|&k| k == mm || k == mb);
            let coeff = d4.coeff(M_MASK).cloned().unwrap_or_else(|| s.ctx.field.zero());
            let want = t_a.scale(&(int(4) * weight(s, c)));
            let odd_free = [2u32, 6].iter().all(|&d| chv.degree_part(d).is_zero());
            let ends_rational = s.model.is_rational_form(&chv.degree_part(0))
                && s.model.is_rational_form(&chv.degree_part(8));
            ch.check(
                &key,
                support_ok && coeff == want && odd_free && ends_rational && s.model.is_rational_form(&d4),
                json!({
                    "degree4_support_is_m_m_bar": support_ok,
                    "coefficient_is_4c2delta_t_a": coeff == want,
                    "degree_2_and_6_vanish": odd_free,
                    "degree_0_and_8_rational": ends_rational,
                    "t_a": elem(&t_a),
                    "rank": chv.degree_part(0).coeff(0).map(elem_or_q),
                }),
            );
        }
    }
    ch.finish()
}

pub(crate) fn c11(s: &StandardForms, ctx: &Context) -> Outcome {
    let mut ch = Checks::new();
    for &c in &ctx.opts.c_values {
        let a2 = s.a2(&int(c));
        let d4 = virtual_ch(s, &s.a1, &a2, c).degree_part(4);
        let want = s.m.scale_q(&(int(4) * weight(s, c)));
        let (ok, d) = form_match(&d4, &want);
        ch.check(&format!("c={c}"), ok, d);
    }
    ch.finish()
}

pub(crate) fn c12(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let f = s.a1.wedge(&s.a1).wedge(&s.omega);
    ch.check("pure_33", f.is_pure(3, 3), json!({ "bidegrees": f.bidegree_split().keys().collect::<Vec<_>>() }));
    ch.check("rational", s.model.is_rational_form(&f), json!(null));

    // displayed order dz1 dz̄1 dz2 dz̄2 dz3 dz̄3
    let seq = [0u8, 4, 1, 5, 2, 6];
    let (sign, mask) = sort_sign(&seq).expect("distinct generators");
    let zero = s.ctx.field.zero();
    let computed_canon = f.coeff(mask).cloned().unwrap_or(zero);
    let computed = if sign < 0 { -computed_canon } else { computed_canon };
    let mu4_inv = s.ctx.mu[3].inv().expect("mu4 is nonzero");
    let neg_two_i = -(&s.ctx.i * &s.ctx.int(2));
    let displayed = &(&neg_two_i * &s.ctx.delta_elem()) * &mu4_inv;
    let with_d = &(&neg_two_i * &s.ctx.dd) * &mu4_inv;
    ch.check(
        "displayed_leading_coefficient",
        computed == displayed,
        json!({
            "computed": elem(&computed),
            "displayed": elem(&displayed),
            "computed_over_displayed": ratio(&computed, &displayed),
            "computed_equals_minus_2iD_over_mu4": computed == with_d,
        }),
    );
    ch.finish()
}

pub(crate) fn c13(s: &StandardForms, ctx: &Context) -> Outcome {
    let mut ch = Checks::new();
    let w3 = s.omega.pow(3, &s.one());
    let p1 = s.a1.wedge(&w3);
    ch.check("a1_omega3", p1.is_zero(), json!({ "terms": p1.len() }));
    for &c in &ctx.opts.c_values {
        let p2 = s.a2(&int(c)).wedge(&w3);
        ch.check(&format!("a2_omega3_c={c}"), p2.is_zero(), json!({ "terms": p2.len() }));
    }
    ch.finish()
}

pub(crate) fn c14(s: &StandardForms, ctx: &Context) -> Outcome {
    let mut ch = Checks::new();
    let one = s.one();
    let w2 = s.omega.wedge(&s.omega);
    let omega4 = s.pair_top(&w2.wedge(&w2)).is_rational().expect("<omega^4> is rational");
    ch.info("omega4", q(&omega4));
    let displayed_coef = (int(2) * &s.ctx.delta - int(3)) / (int(4) * (&s.ctx.delta - int(1)));
    for &c in &ctx.opts.c_values {
        let x = weight(s, c);
        let r = int(2) * &x - int(2);
        let a2 = s.a2(&int(c));
        for k in [1i64, 2] {
            let key = format!("c={c},k={k}");
            let kw = s.omega.scale_q(&int(k));
            let chv = ch_combination(
                &[
                    (x.clone(), s.a1.plus(&kw)),
                    (x.clone(), s.a1.negated().plus(&kw)),
                    (-BigRational::one(), a2.clone()),
                    (-BigRational::one(), a2.negated()),
                ],
                &one,
            );
            let d2_ok = chv.degree_part(2) == s.omega.scale_q(&(int(2) * &x * int(k)));
            let d4_ok = chv.degree_part(4) == s.m.scale_q(&(int(4) * &x)).plus(&w2.scale_q(&(int(k * k) * &x)));
            let d6 = chv.degree_part(6);
            let d6_ok = d6.is_pure(3, 3) && s.model.is_rational_form(&d6);
            let d8_ok = s.model.is_rational_form(&chv.degree_part(8));
            let rank = s.ctx.rational(r.clone());
            let Ok((c1, c2)) = chern_parts(&chv, &rank) else {
                ch.check(&key, false, json!({ "rank_mismatch": true, "degree0": form(&chv.degree_part(0)) }));
                continue;
            };
            let u = s.pair_top(&c2.wedge(&w2)).is_rational().map(|v| v / &omega4);
            let v = s.pair_top(&c1.wedge(&c1).wedge(&w2)).is_rational().map(|v| v / &omega4);
            let (Some(u), Some(v)) = (u, v) else {
                ch.check(&key, false, json!("pairings are not rational"));
                continue;
            };
            let coef = (&r - int(1)) / (int(2) * &r);
            let margin = &u - &coef * &v;
            let expected = &x / (&x - int(1)) * int(k * k);
            ch.check(
                &key,
                d2_ok && d4_ok && d6_ok && d8_ok && margin > BigRational::zero() && margin == expected,
                json!({
                    "degree2_is_2c2delta_k_omega": d2_ok,
                    "degree4_is_4c2delta_m_plus_k2c2delta_omega2": d4_ok,
                    "degree6_rational_33": d6_ok,
                    "degree8_rational": d8_ok,
                    "rank": q(&r),
                    "c2_omega2_over_omega4": q(&u),
                    "c1sq_omega2_over_omega4": q(&v),
                    "coefficient_r_minus_1_over_2r": q(&coef),
                    "margin_over_omega4": q(&margin),
                    "expected_margin_over_omega4": q(&expected),
                }),
            );
            ch.info(
                &format!("displayed_coefficient_c={c}"),
                json!({ "displayed": q(&displayed_coef), "matches_r_minus_1_over_2r": displayed_coef == coef }),
            );
        }
    }
    ch.finish()
}

pub(crate) fn c15(s: &StandardForms, _ctx: &Context) -> Outcome {
    let mut ch = Checks::new();
    let mut rows: Vec<Value> = Vec::new();
    let mut all = true;
    for mask in (0..=255u8).filter(|&m| bidegree_of(m) == (0, 2)) {
        let f = Form::monomial(mask, s.one());
        let ok = match s.star_02(&f).and_then(|g| s.star_02(&g)) {
            Ok(back) => back == f,
            Err(_) => false,
        };
        let star = s.star_02(&f).expect("pure (0,2)");
        let vol = f.wedge(&star);
        let vol_ok = vol.terms().keys().all(|&k| k == 0xf0);
        all &= ok && vol_ok;
        rows.push(json!({ "monomial": crate::forms::monomial_name(mask), "star_squared_is_identity": ok, "top_degree": vol_ok }));
    }
    ch.check("basis_monomials", all, json!(rows));
    let mixed = Form::monomial(0b0011_0000, s.ctx.x[0].clone()).plus(&Form::monomial(0b1100_0000, s.ctx.i_dd.clone()));
    let back = s.star_02(&mixed).and_then(|g| s.star_02(&g));
    ch.check("antilinear_combination", back.as_ref() == Ok(&mixed), json!(null));
    ch.check("rejects_other_bidegrees", s.star_02(&s.omega) == Err(FormsError::NotPure02), json!(null));
    ch.finish()
}
