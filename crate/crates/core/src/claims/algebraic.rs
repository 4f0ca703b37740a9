//! Claims about the field, the cube model and the rational Hodge classes (C01..C08).

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;
use std::collections::BTreeMap;

use super::{elem, form_match, q, Checks, Context, Outcome};
use crate::cube::lemma_check;
use crate::forms::{Form, StandardForms};
use crate::kernel::linalg::rank;
use crate::kernel::{certified_sign, SplitElem};

pub(crate) fn c01(ctx: &Context) -> Outcome {
    let mut ch = Checks::new();
    match &ctx.gate {
        Ok(g) => {
            ch.info("gate", serde_json::to_value(g).expect("json"));
            ch.check("irreducible", g.irreducible, json!(g.irreducible));
            ch.check("four_real_roots", g.four_real_roots, json!({ "sturm_count": g.real_root_count }));
            ch.check("galois_s4", g.galois_s4, json!(g.galois_s4));
            ch.check("delta_integral", g.delta_integral, json!({ "rescale": g.rescale.to_string() }));
        }
        Err(e) => ch.check("gate", false, json!({ "error": e.to_string() })),
    }
    ch.finish()
}

pub(crate) fn c02(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let c = &s.ctx;
    let pattern: [i8; 8] = [1, -1, 1, -1, -1, 1, -1, 1];
    let mut rows = Vec::new();
    let mut ok = true;
    for v in 0..8u8 {
        let img = s.model.embedding_of(&c.i_dd, v).expect("iD lies in F");
        let sign = if img == c.i_dd {
            1
        } else if img == -&c.i_dd {
            -1
        } else {
            0
        };
        ok &= sign == pattern[v as usize];
        rows.push(json!({ "vertex": crate::cube::vertex_name(v), "sign": sign, "expected": pattern[v as usize] }));
    }
    ch.check("sign_pattern", ok, json!(rows));

    let roots_ok = (0..8u8).all(|v| s.model.embedding_of(&c.x[0], v).ok().as_ref() == Some(&c.x[(v % 4) as usize]));
    ch.check("x1_maps_to_xj", roots_ok, json!(roots_ok));

    let u = &c.x[0] + &c.i_dd;
    let conj_ok = (0..4u8).all(|v| {
        s.model.embedding_of(&u, v + 4).unwrap() == s.model.embedding_of(&u, v).unwrap().conj()
    });
    ch.check("bottom_is_conjugate_of_top", conj_ok, json!(conj_ok));

    let h_ok = s.model.stabilizer.len() == 6
        && s.model.stabilizer.iter().all(|g| g.sigma[0] == 0 && g.eps == (g.sign() < 0));
    ch.check("stabilizer_is_h", h_ok, json!({ "order": s.model.stabilizer.len() }));
    ch.finish()
}

pub(crate) fn c03(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let rows = lemma_check(&s.model, &s.ctx, 4);
    let bad: Vec<_> = rows.iter().filter(|r| r.computed != r.predicted).collect();
    ch.check(
        "rank_equals_orbit_count",
        bad.is_empty(),
        json!({ "orbits": rows.len(), "mismatches": serde_json::to_value(&bad).expect("json") }),
    );
    ch.info("rows", serde_json::to_value(&rows).expect("json"));
    ch.finish()
}

/// Coordinates of forms over Q: one column per (monomial, basis index) that occurs.
pub(crate) fn q_rows(forms: &[&Form<SplitElem>]) -> Vec<Vec<BigRational>> {
    let mut cols: BTreeMap<(u8, usize), usize> = BTreeMap::new();
    for f in forms {
        for (&m, c) in f.terms() {
            for (k, v) in c.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    let n = cols.len();
                    cols.entry((m, k)).or_insert(n);
                }
            }
        }
    }
    forms
        .iter()
        .map(|f| {
            let mut row = vec![BigRational::zero(); cols.len()];
            for (&m, c) in f.terms() {
                for (k, v) in c.coeffs().into_iter().enumerate() {
                    if let Some(&j) = cols.get(&(m, k)) {
                        row[j] = v;
                    }
                }
            }
            row
        })
        .collect()
}

fn q_rank(forms: &[&Form<SplitElem>]) -> usize {
    if forms.is_empty() {
        return 0;
    }
    rank(&q_rows(forms))
}

/// Q-basis of the rational classes of bidegree (p, p) from the balanced orbits of size 2p.
fn rational_classes(s: &StandardForms, p: u32) -> Vec<Form<SplitElem>> {
    s.model
        .set_orbits(2 * p)
        .into_iter()
        .filter(|o| o.is_balanced())
        .flat_map(|o| s.model.equivariant_basis(&o, &s.ctx))
        .collect()
}

pub(crate) fn c04(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let ns = rational_classes(s, 1);
    let refs: Vec<_> = ns.iter().collect();
    let r = q_rank(&refs);
    ch.check("dimension", ns.len() == 4 && r == 4, json!({ "basis_size": ns.len(), "rank": r, "expected": 4 }));
    let all_rational = ns.iter().all(|f| s.model.is_rational_form(f) && f.is_pure(1, 1));
    ch.check("basis_is_rational_11", all_rational, json!(all_rational));
    let mut with_omega = refs.clone();
    with_omega.push(&s.omega);
    let r2 = q_rank(&with_omega);
    ch.check("omega_in_span", r2 == r, json!({ "rank_with_omega": r2 }));
    ch.finish()
}

pub(crate) fn c05(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let special = s.model.equivariant_basis(&s.special_orbit, &s.ctx);
    ch.check("dim_m", special.len() == 2, json!({ "dim": special.len(), "expected": 2 }));

    let sp: Vec<_> = special.iter().collect();
    let base = q_rank(&sp);
    let mut with_m = sp.clone();
    with_m.push(&s.m);
    with_m.push(&s.m_prime);
    let r_m = q_rank(&with_m);
    let rational = s.model.is_rational_form(&s.m) && s.model.is_rational_form(&s.m_prime);
    ch.check(
        "m_and_m_prime_span_the_special_classes",
        rational && base == 2 && r_m == 2 && q_rank(&[&s.m, &s.m_prime]) == 2,
        json!({ "rational": rational, "rank_basis": base, "rank_with_m": r_m }),
    );

    let ns = rational_classes(s, 1);
    let mut products = Vec::new();
    for i in 0..ns.len() {
        for j in i..ns.len() {
            products.push(ns[i].wedge(&ns[j]));
        }
    }
    let pr: Vec<_> = products.iter().collect();
    let p = q_rank(&pr);
    let mut with = pr.clone();
    with.push(&s.m);
    with.push(&s.m_prime);
    let pm = q_rank(&with);
    ch.check(
        "m_outside_products",
        pm == p + 2,
        json!({ "rank_products": p, "rank_products_with_m_m_prime": pm }),
    );

    let all22 = rational_classes(s, 2);
    let a22: Vec<_> = all22.iter().collect();
    let total = q_rank(&a22);
    let mut spanned = pr.clone();
    spanned.extend(sp.iter().copied());
    let span = q_rank(&spanned);
    ch.info(
        "rational_22",
        json!({ "dim_rational_22": total, "dim_products_plus_special": span, "products_and_special_span_all": span == total }),
    );
    ch.finish()
}

/// Coordinates (alpha, beta) of F = alpha M + beta M' when F lies in span{M, M'} with rational coordinates.
pub(crate) fn in_m_basis(s: &StandardForms, f: &Form<SplitElem>) -> Option<(BigRational, BigRational)> {
    let (&mm, mc) = s.m_small.terms().iter().next()?;
    let (&mb, mbc) = s.m_small_bar.terms().iter().next()?;
    if f.terms().keys().any(|&k| k != mm && k != mb) {
        return None;
    }
    let zero = s.ctx.field.zero();
    let fm = f.coeff(mm).unwrap_or(&zero).div(mc).ok()?;
    let fb = f.coeff(mb).unwrap_or(&zero).div(mbc).ok()?;
    let two = s.ctx.int(2);
    let alpha = (&fm + &fb).div(&(&two * &s.ctx.dd)).ok()?;
    let beta = (&fm - &fb).div(&(&two * &s.ctx.i)).ok()?;
    let (a, b) = (alpha.is_rational()?, beta.is_rational()?);
    let rebuilt = s.m.scale_q(&a).plus(&s.m_prime.scale_q(&b));
    (&rebuilt == f).then_some((a, b))
}

/// The displayed pi_a matrix: columns are the images of M and M'.
pub(crate) fn displayed_pi_a(delta: &BigRational) -> [[BigRational; 2]; 2] {
    let one = BigRational::one();
    let four = BigRational::from_integer(4.into());
    let p = (&one - delta) * (&one - delta) - &four * delta;
    let off = &four * (&one - delta);
    // rows: coefficient of M, of M'; columns: image of M, of M'
    [[p.clone(), -off.clone()], [&off * delta, p]]
}

fn matrix_json(m: &[[BigRational; 2]; 2]) -> serde_json::Value {
    json!([[q(&m[0][0]), q(&m[0][1])], [q(&m[1][0]), q(&m[1][1])]])
}

pub(crate) fn pi_a_matrix(s: &StandardForms) -> Option<[[BigRational; 2]; 2]> {
    let pi = s.pi_a();
    let (a, b) = in_m_basis(s, &pi.pullback(&s.m))?;
    let (c, d) = in_m_basis(s, &pi.pullback(&s.m_prime))?;
    Some([[a, c], [b, d]])
}

pub(crate) fn c06(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let pi = s.pi_a();
    let want = displayed_pi_a(&s.ctx.delta);
    let lhs_m = pi.pullback(&s.m);
    let rhs_m = s.m.scale_q(&want[0][0]).plus(&s.m_prime.scale_q(&want[1][0]));
    let (ok, d) = form_match(&lhs_m, &rhs_m);
    ch.check("pi_a_on_m", ok, d);
    let lhs_p = pi.pullback(&s.m_prime);
    let rhs_p = s.m.scale_q(&want[0][1]).plus(&s.m_prime.scale_q(&want[1][1]));
    let (ok, d) = form_match(&lhs_p, &rhs_p);
    ch.check("pi_a_on_m_prime", ok, d);
    match pi_a_matrix(s) {
        Some(m) => ch.info("matrix", matrix_json(&m)),
        None => ch.check("span_is_invariant", false, json!("pi_a leaves span{M, M'}")),
    }
    ch.finish()
}

pub(crate) fn c07(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    match pi_a_matrix(s) {
        Some(m) => {
            let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
            ch.check("matches_display", m == displayed_pi_a(&s.ctx.delta), matrix_json(&m));
            ch.check("invertible", !det.is_zero(), json!({ "determinant": q(&det) }));
            // a rational eigenvector would be a rational invariant line inside span{M, M'}
            let tr = &m[0][0] + &m[1][1];
            let disc = &tr * &tr - BigRational::from_integer(4.into()) * &det;
            ch.info("discriminant", json!({ "value": q(&disc), "negative": disc < BigRational::zero() }));
        }
        None => ch.check("span_is_invariant", false, json!("pi_a leaves span{M, M'}")),
    }
    ch.finish()
}

pub(crate) fn c08(s: &StandardForms, ctx: &Context) -> Outcome {
    let mut ch = Checks::new();
    let w = &s.omega;
    ch.check("rational", s.model.is_rational_form(w), json!(null));
    ch.check("real_11", w.is_pure(1, 1) && &w.conj() == w, json!(null));
    let one = s.one();
    let lhs = w.pow(4, &one).scale_q(&BigRational::new(1.into(), 24.into()));
    let rhs = s.theta.wedge(&s.theta_bar);
    let (ok, d) = form_match(&lhs, &rhs);
    ch.check("omega4_over_24_is_theta_theta_bar", ok, d);
    let enc = ctx.enclosure();
    let mut signs = Vec::new();
    let mut pos = true;
    for g in &s.g {
        match certified_sign(g, enc) {
            Ok((sg, iv)) => {
                pos &= sg > 0;
                signs.push(json!({ "sign": sg, "lo": q(&iv.lo), "hi": q(&iv.hi) }));
            }
            Err(e) => {
                pos = false;
                signs.push(json!({ "error": e.to_string() }));
            }
        }
    }
    ch.check_numeric("metric_weights_positive", pos, json!(signs));
    ch.info("weights", json!(s.g.iter().map(elem).collect::<Vec<_>>()));
    ch.finish()
}
