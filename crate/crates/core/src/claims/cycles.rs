//! Claims about the isogenies pi_a, pi_b, the operators Phi_a, Phi_ā and the
//! pairings with the real locus Y and the cycles C_a (C16..C20).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};
use std::collections::BTreeMap;

use super::algebraic::in_m_basis;
use super::{elem, elem_or_q, form_match, q, Checks, Outcome};
use crate::forms::{monomial_name, sort_sign, Form, LinMap, StandardForms};
use crate::kernel::SplitElem;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn degree4_masks() -> impl Iterator<Item = u8> {
    (0..=255u8).filter(|m| m.count_ones() == 4)
}

/// The eigenvalue of a diagonal map on a monomial, if the monomial is an eigenvector.
fn eigenvalue(map: &LinMap<SplitElem>, mask: u8, one: &SplitElem) -> Option<SplitElem> {
    let img = map.pullback(&Form::monomial(mask, one.clone()));
    match img.terms().iter().collect::<Vec<_>>().as_slice() {
        [] => Some(one.zero_like()),
        [(&m, c)] if m == mask => Some((*c).clone()),
        _ => None,
    }
}

/// (pi_a^* - (1+Delta)^2)(pi_b^* + Delta^2) F.
fn phi(s: &StandardForms, pa: &LinMap<SplitElem>, pb: &LinMap<SplitElem>, f: &Form<SplitElem>) -> Form<SplitElem> {
    let one = BigRational::one();
    let d = &s.ctx.delta;
    let g = pb.pullback(f).plus(&f.scale_q(&(d * d)));
    pa.pullback(&g).minus(&g.scale_q(&((&one + d) * (&one + d))))
}

struct Row {
    seq: [u8; 4],
    pi_a: SplitElem,
    pi_b: SplitElem,
    multiplicity: (usize, usize),
}

fn table(s: &StandardForms) -> Vec<Row> {
    let c = &s.ctx;
    let one = s.one();
    let d = c.delta_elem();
    let one_plus_delta = &one + &d;
    let plus = (&one + &c.i_dd).pow(4);
    let minus_sq = (&one - &c.i_dd).pow(2);
    let p_sq = one_plus_delta.pow(2);
    let mixed = &one_plus_delta * &minus_sq;
    let d2 = d.pow(2);
    let row = |seq, pi_a: &SplitElem, pi_b: &SplitElem, f, n| Row {
        seq,
        pi_a: pi_a.clone(),
        pi_b: pi_b.clone(),
        multiplicity: (f, n),
    };
    vec![
        row([0, 1, 2, 3], &p_sq, &d2, 2, 1),
        row([0, 4, 1, 2], &p_sq, &d2, 2, 8),
        row([0, 4, 1, 3], &mixed, &-&d2, 2, 4),
        row([4, 1, 2, 3], &mixed, &-&d2, 2, 4),
        row([0, 4, 1, 5], &p_sq, &d2, 1, 6),
        row([0, 4, 1, 6], &mixed, &-&d2, 2, 12),
        row([0, 1, 6, 7], &p_sq, &d2, 1, 4),
        row([0, 5, 2, 7], &plus, &d2, 1, 1),
        row([4, 1, 6, 3], &(&one - &c.i_dd).pow(4), &d2, 1, 1),
    ]
}

fn seq_name(seq: &[u8]) -> String {
    seq.iter()
        .map(|&v| if v < 4 { format!("dz{}", v + 1) } else { format!("dz{}b", v - 3) })
        .collect()
}

pub(crate) fn c16(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let one = s.one();
    let (pa, pb) = (s.pi_a(), s.pi_b());
    let rows = table(s);
    let mut out = Vec::new();
    let mut rows_ok = true;
    for r in &rows {
        let (_, mask) = sort_sign(&r.seq).expect("distinct generators");
        let conj_seq: Vec<u8> = r.seq.iter().map(|v| (v + 4) % 8).collect();
        let (_, cmask) = sort_sign(&conj_seq).expect("distinct generators");
        let ea = eigenvalue(&pa, mask, &one);
        let eb = eigenvalue(&pb, mask, &one);
        let ca = eigenvalue(&pa, cmask, &one);
        let cb = eigenvalue(&pb, cmask, &one);
        let ok = ea.as_ref() == Some(&r.pi_a) && eb.as_ref() == Some(&r.pi_b);
        let conj_ok = ca.as_ref() == Some(&r.pi_a.conj()) && cb.as_ref() == Some(&r.pi_b.conj());
        rows_ok &= ok && conj_ok;
        out.push(json!({
            "form": seq_name(&r.seq),
            "ok": ok,
            "conjugate_ok": conj_ok,
            "pi_a": ea.as_ref().map(elem_or_q),
            "pi_b": eb.as_ref().map(elem_or_q),
            "multiplicity": format!("{}x{}", r.multiplicity.0, r.multiplicity.1),
        }));
    }
    ch.check("table_rows", rows_ok, json!(out));

    // every degree-4 monomial is an eigenvector with an eigenvalue pair from the table
    let allowed: Vec<(SplitElem, SplitElem)> =
        rows.iter().flat_map(|r| [(r.pi_a.clone(), r.pi_b.clone()), (r.pi_a.conj(), r.pi_b.conj())]).collect();
    let mut distribution: BTreeMap<String, usize> = BTreeMap::new();
    let mut bad = Vec::new();
    let mut count = 0;
    for mask in degree4_masks() {
        count += 1;
        match (eigenvalue(&pa, mask, &one), eigenvalue(&pb, mask, &one)) {
            (Some(a), Some(b)) => {
                if allowed.iter().any(|p| p.0 == a && p.1 == b) {
                    *distribution.entry(eigen_class(s, &a)).or_default() += 1;
                } else {
                    bad.push(monomial_name(mask));
                }
            }
            _ => bad.push(monomial_name(mask)),
        }
    }
    ch.check(
        "all_degree4_monomials",
        bad.is_empty() && count == 70,
        json!({ "monomials": count, "unmatched": bad }),
    );
    let total: usize = rows.iter().map(|r| r.multiplicity.0 * r.multiplicity.1).sum();
    ch.check("multiplicities_sum_to_70", total == 70, json!({ "sum": total }));
    ch.info("eigenvalue_distribution", json!(distribution));
    ch.finish()
}

fn eigen_class(s: &StandardForms, a: &SplitElem) -> String {
    let one = s.one();
    let d = s.ctx.delta_elem();
    let p = &one + &s.ctx.i_dd;
    let m = &one - &s.ctx.i_dd;
    if *a == (&one + &d).pow(2) {
        "(1+Delta)^2".into()
    } else if *a == p.pow(4) {
        "(1+iD)^4".into()
    } else if *a == m.pow(4) {
        "(1-iD)^4".into()
    } else if *a == &(&one + &d) * &m.pow(2) {
        "(1+Delta)(1-iD)^2".into()
    } else if *a == &(&one + &d) * &p.pow(2) {
        "(1+Delta)(1+iD)^2".into()
    } else {
        "other".into()
    }
}

/// The four displayed Phi equations as coordinates (M, M') of the images of M and M'.
fn displayed_phi(delta: &BigRational, bar: bool) -> [[BigRational; 2]; 2] {
    let one = BigRational::one();
    let d2 = delta * delta;
    let d3 = &d2 * delta;
    let om = &one - delta;
    let s = if bar { -one.clone() } else { one.clone() };
    // image of M = -8 Delta^2 [2 Delta M -+ (1-Delta) Delta M']
    let im_m = [int(-16) * &d3, &s * int(8) * &d3 * &om];
    // image of M' = -8 Delta^2 [2 Delta M' +- (1-Delta) M]
    let im_p = [&s * int(-8) * &d2 * &om, int(-16) * &d3];
    [im_m, im_p]
}

fn coords_json(c: &Option<(BigRational, BigRational)>) -> Value {
    match c {
        Some((a, b)) => json!({ "M": q(a), "M_prime": q(b) }),
        None => Value::Null,
    }
}

pub(crate) fn c17(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let pb = s.pi_b();
    let pa = s.pi_a();
    let pa_bar = s.isogeny(&s.ctx.a.conj()).expect("a-bar lies in F");
    let pb_bar = s.isogeny(&s.ctx.b.conj()).expect("b-bar lies in F");
    for (name, a_map, b_map, bar) in [("phi_a", &pa, &pb, false), ("phi_a_bar", &pa_bar, &pb_bar, true)] {
        let want = displayed_phi(&s.ctx.delta, bar);
        let got_m = in_m_basis(s, &phi(s, a_map, b_map, &s.m));
        let got_p = in_m_basis(s, &phi(s, a_map, b_map, &s.m_prime));
        let ok_m = got_m.as_ref() == Some(&(want[0][0].clone(), want[0][1].clone()));
        let ok_p = got_p.as_ref() == Some(&(want[1][0].clone(), want[1][1].clone()));
        ch.check(
            &format!("{name}_on_m"),
            ok_m,
            json!({ "computed": coords_json(&got_m), "displayed": { "M": q(&want[0][0]), "M_prime": q(&want[0][1]) } }),
        );
        ch.check(
            &format!("{name}_on_m_prime"),
            ok_p,
            json!({ "computed": coords_json(&got_p), "displayed": { "M": q(&want[1][0]), "M_prime": q(&want[1][1]) } }),
        );

        // twice via pullbacks versus the square of the recorded matrix
        if let (Some((a, b)), Some((c, d))) = (got_m, got_p) {
            for (label, f, (x, y)) in [("m", &s.m, (int(1), int(0))), ("m_prime", &s.m_prime, (int(0), int(1)))] {
                let once = (&a * &x + &c * &y, &b * &x + &d * &y);
                let twice = (&a * &once.0 + &c * &once.1, &b * &once.0 + &d * &once.1);
                let lhs = phi(s, a_map, b_map, &phi(s, a_map, b_map, f));
                let rhs = s.m.scale_q(&twice.0).plus(&s.m_prime.scale_q(&twice.1));
                let (ok, det) = form_match(&lhs, &rhs);
                ch.check(&format!("{name}_squared_{label}"), ok, det);
            }
        }
    }

    let (&mm, _) = s.m_small.terms().iter().next().expect("monomial");
    let (&mb, _) = s.m_small_bar.terms().iter().next().expect("monomial");
    let mut survivors = Vec::new();
    for mask in degree4_masks().filter(|&k| k != mm && k != mb) {
        if !phi(s, &pa, &pb, &Form::monomial(mask, s.one())).is_zero() {
            survivors.push(monomial_name(mask));
        }
    }
    ch.check("annihilates_other_monomials", survivors.is_empty(), json!({ "not_annihilated": survivors }));
    ch.finish()
}

fn sigma1(s: &StandardForms) -> LinMap<SplitElem> {
    let one = s.one();
    let rows = (0..8u8).map(|k| Form::monomial(1 << ((k + 4) % 8), one.clone())).collect();
    LinMap::from_rows(rows)
}

pub(crate) fn c18(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let sig = sigma1(s);
    let one = s.one();
    ch.check("involution", sig.then(&sig) == LinMap::identity(&one), json!(null));
    let anti = (0..4).all(|k| sig.row(k).is_pure(0, 1)) && sig.is_conjugation_compatible();
    ch.check("antiholomorphic", anti, json!(null));
    let (ok, d) = form_match(&sig.pullback(&s.theta), &s.theta_bar);
    ch.check("sigma_theta_is_theta_bar", ok, d);
    let (ok, d) = form_match(&sig.pullback(&s.omega), &s.omega.negated());
    ch.check("sigma_omega_is_minus_omega", ok, d);
    let w = s.restrict(&s.omega);
    ch.check("omega_vanishes_on_y", w.is_zero(), json!({ "terms": w.len() }));
    let half_i = s.ctx.i.scale(&BigRational::new(1.into(), 2.into()));
    let im_theta = s.theta_bar.minus(&s.theta).scale(&half_i);
    let re_theta = s.theta.plus(&s.theta_bar).scale_q(&BigRational::new(1.into(), 2.into()));
    let im_y = s.restrict(&im_theta);
    ch.check("im_theta_vanishes_on_y", im_y.is_zero(), json!({ "terms": im_y.len() }));
    let re_y = s.restrict(&re_theta);
    ch.check("re_theta_nonzero_on_y", !re_y.is_zero(), super::form(&re_y));
    let fixed = [&s.m, &s.m_prime, &s.a1, &s.theta]
        .iter()
        .all(|f| s.restrict(&sig.pullback(f)) == s.restrict(f));
    ch.check("restriction_is_sigma_invariant", fixed, json!(null));
    let calib = s.restrict(&s.big_omega) == s.restrict(&re_theta).scale_q(&int(4));
    ch.info("cayley_form_restricts_to_4_re_theta", json!(calib));
    ch.finish()
}

/// <Y, F>: the dt1234 coefficient of F restricted to Y, in units of delta.
fn pair_y(s: &StandardForms, f: &Form<SplitElem>) -> SplitElem {
    s.restrict(f).coeff(0x0f).cloned().unwrap_or_else(|| s.ctx.field.zero())
}

pub(crate) fn c19(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let c = &s.ctx;
    let d = c.delta_elem();
    let one = s.one();
    let dd = &c.dd;
    let d2 = d.pow(2);
    let d3 = d.pow(3);
    let sixteen_d2_om_dd = &(&(&c.int(16) * &d2) * &(&one - &d)) * dd;
    let pa = s.pi_a();
    let pb = s.pi_b();
    let pa_bar = s.isogeny(&c.a.conj()).expect("a-bar lies in F");
    let pb_bar = s.isogeny(&c.b.conj()).expect("b-bar lies in F");
    let expected: [(&str, SplitElem, SplitElem); 6] = [
        ("y_m", pair_y(s, &s.m), &c.int(2) * dd),
        ("y_m_prime", pair_y(s, &s.m_prime), c.field.zero()),
        ("c_a_m", pair_y(s, &phi(s, &pa, &pb, &s.m)), &(&c.int(-32) * &d3) * dd),
        ("c_a_m_prime", pair_y(s, &phi(s, &pa, &pb, &s.m_prime)), -&sixteen_d2_om_dd),
        ("c_a_bar_m", pair_y(s, &phi(s, &pa_bar, &pb_bar, &s.m)), &(&c.int(-32) * &d3) * dd),
        ("c_a_bar_m_prime", pair_y(s, &phi(s, &pa_bar, &pb_bar, &s.m_prime)), sixteen_d2_om_dd.clone()),
    ];
    for (name, got, want) in &expected {
        ch.check(name, got == want, json!({ "computed_over_delta": elem(got), "expected_over_delta": elem(want) }));
    }

    // eigenvalue path on the eigenforms m and m-bar
    let plus1 = (&one + &d).pow(2);
    let mut cross = true;
    for f in [&s.m_small, &s.m_small_bar] {
        let (&mask, _) = f.terms().iter().next().expect("monomial");
        for (a_map, b_map) in [(&pa, &pb), (&pa_bar, &pb_bar)] {
            let la = eigenvalue(a_map, mask, &one).expect("diagonal");
            let lb = eigenvalue(b_map, mask, &one).expect("diagonal");
            let via_table = &(&(&la - &plus1) * &(&lb + &d2)) * &pair_y(s, f);
            cross &= via_table == pair_y(s, &phi(s, a_map, b_map, f));
        }
    }
    ch.check("eigenvalue_path_agrees", cross, json!(null));
    ch.info("delta", json!("the covolume delta is carried as a formal positive unit; its rational multiple of D is not computed"));
    ch.finish()
}

pub(crate) fn c20(s: &StandardForms) -> Outcome {
    let mut ch = Checks::new();
    let c = &s.ctx;
    let one = s.one();
    let d = c.delta_elem();
    let pa = s.pi_a();
    let pb = s.pi_b();
    let cases = [
        ("pi_a_omega", pa.pullback(&s.omega), s.omega.scale(&(&one + &d))),
        ("pi_a_theta", pa.pullback(&s.theta), s.theta.scale(&(&one + &d).pow(2))),
        ("pi_a_theta_bar", pa.pullback(&s.theta_bar), s.theta_bar.scale(&(&one + &d).pow(2))),
        ("pi_b_omega", pb.pullback(&s.omega), s.omega.scale(&d)),
        ("pi_b_theta", pb.pullback(&s.theta), s.theta.scale(&d.pow(2))),
        ("pi_b_theta_bar", pb.pullback(&s.theta_bar), s.theta_bar.scale(&d.pow(2))),
    ];
    for (name, lhs, rhs) in &cases {
        let (ok, det) = form_match(lhs, rhs);
        ch.check(name, ok, det);
    }
    ch.finish()
}
