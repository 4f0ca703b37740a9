//! Acceptance run: one PASS/FAIL line per criterion, over the default fixture
//! and a second admissible quartic.

mod common;

use std::time::Instant;

use common::{ctx, fixtures, random_elem, random_form, random_linmap};
use hodge_core::claims::{all_ids, run_all, ClaimReport, ClaimStatus, Context, Options};
use hodge_core::cube::{lemma_check, CubeModel};
use hodge_core::kernel::{search_quartic, GaloisElem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Suite {
    name: &'static str,
    reports: Vec<ClaimReport>,
}

impl Suite {
    fn get(&self, id: &str) -> &ClaimReport {
        self.reports.iter().find(|r| r.id == id).expect("claim was run")
    }
}

fn failing_checks(r: &ClaimReport) -> Vec<String> {
    r.witness["checks"]
        .as_object()
        .map(|m| m.iter().filter(|(_, v)| v["pass"] == false).map(|(k, _)| k.clone()).collect())
        .unwrap_or_default()
}

/// All listed claims verified (exact or certified numeric) on every fixture.
fn claims_verified(suites: &[Suite], ids: &[&str], exact_only: bool) -> (bool, String) {
    let mut bad = Vec::new();
    for s in suites {
        for id in ids {
            let r = s.get(id);
            let ok = if exact_only { r.status == ClaimStatus::VerifiedExact } else { r.status.is_verified() };
            if !ok {
                bad.push(format!("{}@{}: {:?} {:?}", id, s.name, r.status, failing_checks(r)));
            }
        }
    }
    if bad.is_empty() {
        (true, format!("{} verified on {} fixtures", ids.join(","), suites.len()))
    } else {
        (false, bad.join("; "))
    }
}

fn check_passes(suites: &[Suite], id: &str, check: &str) -> bool {
    suites.iter().all(|s| s.get(id).witness["checks"][check]["pass"] == true)
}

fn property_suites() -> (bool, String) {
    let k = ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut failures = 0usize;
    for _ in 0..100 {
        let (a, b, c) = (random_elem(k, &mut rng, 6), random_elem(k, &mut rng, 6), random_elem(k, &mut rng, 6));
        let ok = &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (a.is_zero() || (&a * &a.inv().expect("nonzero")).is_one());
        failures += usize::from(!ok);
    }
    let samples: Vec<_> = (0..20).map(|_| (random_elem(k, &mut rng, 6), random_elem(k, &mut rng, 6))).collect();
    for g in GaloisElem::all() {
        for (a, b) in &samples {
            let ok = g.apply(&(a * b)) == &g.apply(a) * &g.apply(b) && g.apply(&(a + b)) == &g.apply(a) + &g.apply(b);
            failures += usize::from(!ok);
        }
    }
    for _ in 0..20 {
        let (f, g) = (random_linmap(k, &mut rng), random_linmap(k, &mut rng));
        let u = random_form(k, &mut rng, 3);
        failures += usize::from(f.then(&g).pullback(&u) != g.pullback(&f.pullback(&u)));
    }
    let model = CubeModel::build().expect("cube model");
    let rows = lemma_check(&model, k, 4);
    let lemma_failures = rows.iter().filter(|r| r.computed != r.predicted).count();
    failures += lemma_failures;
    (
        failures == 0,
        format!("100 field samples, 48x20 Galois samples, 20 pullbacks, {} orbits; {failures} failures", rows.len()),
    )
}

#[test]
fn acceptance() {
    let start = Instant::now();
    assert_eq!(search_quartic(5).expect("default fixture found"), common::default_fixture());
    let suites: Vec<Suite> = fixtures()
        .into_iter()
        .map(|(name, q)| {
            let ctx = Context::new(q, Options::default());
            assert!(ctx.admissible(), "{name} must pass the gate");
            Suite { name, reports: run_all(&ctx, &[]).expect("all claims") }
        })
        .collect();
    let suite_secs = start.elapsed().as_secs_f64();

    let mut lines: Vec<(u32, bool, String)> = Vec::new();
    let mut push = |n: u32, (ok, detail): (bool, String)| lines.push((n, ok, detail));

    push(1, claims_verified(&suites, &["C09"], true));
    push(2, claims_verified(&suites, &["C11"], true));
    push(3, claims_verified(&suites, &["C12", "C13"], true));
    push(4, claims_verified(&suites, &["C16"], true));
    push(5, claims_verified(&suites, &["C17", "C06"], true));
    push(6, claims_verified(&suites, &["C19"], true));
    push(7, claims_verified(&suites, &["C04", "C05"], true));
    push(8, claims_verified(&suites, &["C21", "C22", "C23", "C24", "C25", "C26"], false));
    push(9, claims_verified(&suites, &["C27"], false));
    let (ok10, d10) = claims_verified(&suites, &["C08", "C15"], false);
    let exact10 = check_passes(&suites, "C08", "omega4_over_24_is_theta_theta_bar")
        && check_passes(&suites, "C15", "basis_monomials");
    push(10, (ok10 && exact10, d10));
    push(11, claims_verified(&suites, &["C28"], true));
    push(12, property_suites());

    let ran_all = suites.iter().all(|s| {
        s.reports.len() == all_ids().len() && s.reports.iter().all(|r| r.status != ClaimStatus::Skipped)
    });
    push(
        13,
        (
            ran_all && suite_secs < 300.0,
            format!(
                "scope: the headline algebraicity and instanton existence are not reproducible computationally; \
                 all {} catalogue claims executed on both fixtures in {suite_secs:.1}s",
                all_ids().len()
            ),
        ),
    );

    for (n, ok, detail) in &lines {
        println!("acceptance {n:02} {}: {detail}", if *ok { "PASS" } else { "FAIL" });
    }
    let failed: Vec<u32> = lines.iter().filter(|(_, ok, _)| !ok).map(|(n, _, _)| *n).collect();
    assert!(failed.is_empty(), "acceptance criteria failed: {failed:?}");
}
