//! The claim catalogue C01..C28: one verifier per computational assertion,
//! each producing a [`ClaimReport`] with an exact witness.

mod adapted;
mod algebraic;
mod arith;
mod chern;
mod cycles;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;
use thiserror::Error;

use crate::forms::{monomial_name, Form, StandardForms};
use crate::kernel::{constants, gate_quartic, isolate_roots, GateReport, KernelError, Quartic, RootEnclosure, SplitElem};

pub use arith::{genus_search, k_value, riemann_roch_holds, GenusSolution, KFormula};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ClaimsError {
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
    #[error("claim {0} needs a context built from an admissible quartic")]
    ContextMissing(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimStatus {
    #[serde(rename = "verified-exact")]
    VerifiedExact,
    #[serde(rename = "verified-numeric")]
    VerifiedNumeric,
    #[serde(rename = "failed")]
    Failed,
    #[serde(rename = "skipped")]
    Skipped,
}

impl ClaimStatus {
    pub fn is_verified(self) -> bool {
        matches!(self, ClaimStatus::VerifiedExact | ClaimStatus::VerifiedNumeric)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub title: String,
    pub anchor: String,
    pub status: ClaimStatus,
    pub witness: Value,
    pub elapsed_ms: u64,
}

/// (id, title, anchor) for every claim, in catalogue order.
pub const CATALOGUE: [(&str, &str, &str); 28] = [
    ("C01", "admissibility gate", "Galois group is S4"),
    ("C02", "sign pattern of i*D under the eight embeddings", "phi_j(iD) = -(-1)^j iD"),
    ("C03", "rank of H_R equals |R|/r!", "dimension of H_R is |R|/r!"),
    ("C04", "rank of the rational (1,1) classes", "Neron-Severi group has rank 4"),
    ("C05", "basis of the exceptional Hodge classes", "these are not products of rational (1,1) classes"),
    ("C06", "action of pi_a on M and M'", "pi_a^* M = ((1-Delta)^2-4Delta)M + 4(1-Delta)Delta M'"),
    ("C07", "invertibility of the pi_a matrix on span{M, M'}", "Algebraicity of either one of M or M'"),
    ("C08", "the Kähler form omega", "omega^4/4! = theta ∧ theta-bar"),
    ("C09", "T_a for the choice a13 = h3", "Then T_a = -D"),
    ("C10", "Chern character of the virtual bundle", "equality is modulo (rational) 0- and 8-forms"),
    ("C11", "the key identity", "ch(V1^{c^2 Delta} - V2) = 4c^2 Delta M"),
    ("C12", "A1^2 ∧ omega", "is a (rational) (3,3) form"),
    ("C13", "orthogonality to omega^3", "A1 ∧ omega^3 = 0"),
    ("C14", "bundle Chern character and Bogomolov margin", "satisfies the Bogomolov inequality"),
    ("C15", "the star operator on (0,2)-forms", "We have star^2 = 1"),
    ("C16", "isogeny eigenvalue table", "eigenvalue of pi_a^*"),
    ("C17", "Phi_a and Phi_a-bar on span{M, M'}", "Phi_a = (pi_a^* - (1+Delta)^2)(pi_b^* + Delta^2)"),
    ("C18", "special Lagrangian hypotheses for Y", "fixed point set is a Special Lagrangian"),
    ("C19", "cycle pairings", "<C_a, M> = -32 Delta^3 D delta"),
    ("C20", "isogenies on omega and theta", "pi_a^* omega = (1+Delta) omega"),
    ("C21", "sufficiency of the type (1,1) conditions", "will be of type (1,1) provided"),
    ("C22", "alpha-tilde from alpha", "is satisfied if we take"),
    ("C23", "inverse transform scalars", "This forces c to satisfy"),
    ("C24", "omega stays of type (1,1); the ellipsoid", "then omega remains of type (1,1)"),
    ("C25", "alpha* satisfies all constraints", "A particular choice of alpha has remarkable properties"),
    ("C26", "w-coordinate formulas at alpha*", "With this choice, we have"),
    ("C27", "-omega is Kähler in w-coordinates", "-omega is a Kähler form"),
    ("C28", "Riemann-Roch and genus arithmetic", "This is solved by taking"),
];

pub fn all_ids() -> Vec<String> {
    CATALOGUE.iter().map(|(id, _, _)| id.to_string()).collect()
}

/// Normalize "c9", "C09", "9" to "C09".
pub fn parse_claim_id(s: &str) -> Result<String, ClaimsError> {
    let t = s.trim();
    let digits = t.strip_prefix(['C', 'c']).unwrap_or(t);
    let n: usize = digits.parse().map_err(|_| ClaimsError::UnknownClaim(s.to_string()))?;
    if (1..=CATALOGUE.len()).contains(&n) {
        Ok(format!("C{n:02}"))
    } else {
        Err(ClaimsError::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Options {
    pub precision_bits: u32,
    pub samples: usize,
    pub seed: u64,
    pub c_max: u64,
    pub k1_max: u64,
    #[serde(with = "crate::serial::ratio")]
    pub omega4: BigRational,
    /// Values of c for the key identity and the bundle computation.
    pub c_values: Vec<i64>,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            precision_bits: 128,
            samples: 25,
            seed: 0,
            c_max: 200,
            k1_max: 20,
            omega4: BigRational::from_integer(BigInt::from(24)),
            c_values: vec![1, 2],
        }
    }
}

/// Everything claims may read: the quartic, its gate report and, for an
/// admissible quartic, the standard forms.
pub struct Context {
    pub quartic: Quartic,
    pub gate: Result<GateReport, KernelError>,
    pub forms: Option<StandardForms>,
    pub opts: Options,
    enclosure: OnceLock<RootEnclosure>,
}

impl Context {
    pub fn new(quartic: Quartic, opts: Options) -> Self {
        let gate = gate_quartic(&quartic);
        let forms = match &gate {
            Ok(g) if g.admissible() => {
                let ctx = constants(&quartic).expect("admissible quartic");
                Some(StandardForms::new(ctx).expect("cube model exists"))
            }
            _ => None,
        };
        Self { quartic, gate, forms, opts, enclosure: OnceLock::new() }
    }

    pub fn admissible(&self) -> bool {
        self.forms.is_some()
    }

    pub(crate) fn enclosure(&self) -> &RootEnclosure {
        self.enclosure
            .get_or_init(|| isolate_roots(&self.quartic, self.opts.precision_bits).expect("four real roots"))
    }
}

pub fn run_claim(id: &str, ctx: &Context) -> Result<ClaimReport, ClaimsError> {
    let id = parse_claim_id(id)?;
    let (_, title, anchor) = CATALOGUE.iter().find(|(c, _, _)| *c == id).expect("catalogue id");
    let start = Instant::now();
    let outcome = if id == "C01" {
        algebraic::c01(ctx)
    } else {
        let s = ctx.forms.as_ref().ok_or_else(|| ClaimsError::ContextMissing(id.clone()))?;
        match id.as_str() {
            "C02" => algebraic::c02(s),
            "C03" => algebraic::c03(s),
            "C04" => algebraic::c04(s),
            "C05" => algebraic::c05(s),
            "C06" => algebraic::c06(s),
            "C07" => algebraic::c07(s),
            "C08" => algebraic::c08(s, ctx),
            "C09" => chern::c09(s),
            "C10" => chern::c10(s, ctx),
            "C11" => chern::c11(s, ctx),
            "C12" => chern::c12(s),
            "C13" => chern::c13(s, ctx),
            "C14" => chern::c14(s, ctx),
            "C15" => chern::c15(s, ctx),
            "C16" => cycles::c16(s),
            "C17" => cycles::c17(s),
            "C18" => cycles::c18(s),
            "C19" => cycles::c19(s),
            "C20" => cycles::c20(s),
            "C21" => adapted::c21(s, ctx),
            "C22" => adapted::c22(s),
            "C23" => adapted::c23(s, ctx),
            "C24" => adapted::c24(s),
            "C25" => adapted::c25(s),
            "C26" => adapted::c26(s),
            "C27" => adapted::c27(s, ctx),
            "C28" => arith::c28(s, ctx),
            _ => unreachable!("catalogue is closed"),
        }
    };
    Ok(ClaimReport {
        id: id.clone(),
        title: title.to_string(),
        anchor: anchor.to_string(),
        status: outcome.status,
        witness: outcome.witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Run the given claims (all when `subset` is empty) concurrently; reports
/// come back in catalogue order. Claims that need an admissible context are
/// reported as skipped when it is missing.
pub fn run_all(ctx: &Context, subset: &[String]) -> Result<Vec<ClaimReport>, ClaimsError> {
    let mut ids: Vec<String> = if subset.is_empty() {
        all_ids()
    } else {
        subset.iter().map(|s| parse_claim_id(s)).collect::<Result<_, _>>()?
    };
    ids.sort();
    ids.dedup();
    let mut reports: Vec<ClaimReport> = ids
        .par_iter()
        .map(|id| match run_claim(id, ctx) {
            Ok(r) => r,
            Err(e) => {
                let (_, title, anchor) = CATALOGUE.iter().find(|(c, _, _)| c == id).expect("catalogue id");
                ClaimReport {
                    id: id.clone(),
                    title: title.to_string(),
                    anchor: anchor.to_string(),
                    status: ClaimStatus::Skipped,
                    witness: json!({ "reason": e.to_string() }),
                    elapsed_ms: 0,
                }
            }
        })
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

pub(crate) struct Outcome {
    pub status: ClaimStatus,
    pub witness: Value,
}

/// Accumulates named sub-checks into a witness.
pub(crate) struct Checks {
    checks: BTreeMap<String, Value>,
    info: Map<String, Value>,
    ok: bool,
    numeric: bool,
}

impl Checks {
    pub fn new() -> Self {
        Self { checks: BTreeMap::new(), info: Map::new(), ok: true, numeric: false }
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: Value) {
        self.ok &= pass;
        self.checks.insert(name.to_string(), json!({ "pass": pass, "detail": detail }));
    }

    /// A check decided by certified interval arithmetic.
    pub fn check_numeric(&mut self, name: &str, pass: bool, detail: Value) {
        self.numeric = true;
        self.check(name, pass, detail);
    }

    pub fn info(&mut self, name: &str, value: Value) {
        self.info.insert(name.to_string(), value);
    }

    pub fn finish(self) -> Outcome {
        let status = match (self.ok, self.numeric) {
            (false, _) => ClaimStatus::Failed,
            (true, true) => ClaimStatus::VerifiedNumeric,
            (true, false) => ClaimStatus::VerifiedExact,
        };
        let mut w = Map::new();
        w.insert("checks".into(), serde_json::to_value(self.checks).expect("json"));
        if !self.info.is_empty() {
            w.insert("info".into(), Value::Object(self.info));
        }
        Outcome { status, witness: Value::Object(w) }
    }
}

pub(crate) fn q(v: &BigRational) -> Value {
    Value::String(crate::serial::ratio_string(v))
}

/// A field element as its 48 coordinates "n/d" in basis-index order.
pub(crate) fn elem(e: &SplitElem) -> Value {
    Value::Array(e.to_strings().into_iter().map(Value::String).collect())
}

/// A field element that should be rational: the value, or the full coordinates.
pub(crate) fn elem_or_q(e: &SplitElem) -> Value {
    match e.is_rational() {
        Some(v) => q(&v),
        None => elem(e),
    }
}

pub(crate) fn form(f: &Form<SplitElem>) -> Value {
    let mut m = Map::new();
    for (&mask, c) in f.terms() {
        m.insert(monomial_name(mask), elem_or_q(c));
    }
    Value::Object(m)
}

/// Exact ratio a/b when it is rational, for reporting mismatches.
pub(crate) fn ratio(a: &SplitElem, b: &SplitElem) -> Value {
    match a.div(b) {
        Ok(r) => elem_or_q(&r),
        Err(_) => Value::Null,
    }
}

/// Compare two forms; on mismatch report the coefficientwise ratio when it is constant.
pub(crate) fn form_match(lhs: &Form<SplitElem>, rhs: &Form<SplitElem>) -> (bool, Value) {
    if lhs == rhs {
        return (true, json!({ "equal": true }));
    }
    let same_support = lhs.terms().keys().eq(rhs.terms().keys());
    let mut ratios: Vec<SplitElem> = Vec::new();
    if same_support {
        for (m, c) in lhs.terms() {
            if let Ok(r) = c.div(&rhs.terms()[m]) {
                ratios.push(r);
            }
        }
    }
    let constant = same_support && !ratios.is_empty() && ratios.iter().all(|r| r == &ratios[0]);
    let diff = lhs.minus(rhs);
    (
        false,
        json!({
            "equal": false,
            "same_support": same_support,
            "constant_ratio": if constant { elem_or_q(&ratios[0]) } else { Value::Null },
            "difference_terms": diff.len(),
            "lhs": form(lhs),
            "rhs": form(rhs),
        }),
    )
}
