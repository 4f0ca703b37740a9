//! Command-line front end: argument and config-file parsing, running the
//! claim suite, and emitting JSON or markdown reports.

use clap::{Parser, ValueEnum};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

use hodge_core::claims::{parse_claim_id, run_all, ClaimReport, Context, Options};
use hodge_core::kernel::{search_quartic, GateReport, Quartic};
use hodge_core::serial::{parse_ratio, ratio_string};

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_GATE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    #[value(alias = "markdown")]
    Md,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuarticInput {
    /// Coefficients a, b, c, d of a x^4 + b x^2 + c x + d.
    Poly {
        #[serde(with = "hodge_core::serial::ratio_vec")]
        coefficients: Vec<BigRational>,
    },
    Search { bound: u32 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub input: QuarticInput,
    /// Selected claim ids; empty means all.
    pub claims: Vec<String>,
    pub precision_bits: u32,
    pub samples: usize,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub c_max: u64,
    pub k1_max: u64,
    #[serde(with = "hodge_core::serial::ratio")]
    pub omega4: BigRational,
}

impl RunConfig {
    pub fn options(&self) -> Options {
        Options {
            precision_bits: self.precision_bits,
            samples: self.samples,
            seed: self.seed,
            c_max: self.c_max,
            k1_max: self.k1_max,
            omega4: self.omega4.clone(),
            ..Options::default()
        }
    }
}

#[derive(Debug, Parser, Default)]
#[command(name = "hodge-verify", version, about = "Verify the computational claims about Hodge classes on Mumford's four-folds")]
struct Args {
    /// Quartic coefficients a,b,c,d of a x^4 + b x^2 + c x + d (rationals allowed, e.g. 1/2).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "search")]
    poly: Option<String>,
    /// Search for the first admissible quartic with coefficients bounded by N.
    #[arg(long)]
    search: Option<u32>,
    /// Comma-separated claim ids (C01..C28) or "all".
    #[arg(long)]
    claims: Option<String>,
    #[arg(long)]
    precision_bits: Option<u32>,
    /// Sample count for the numeric fallback.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file; `-` or absent means stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    c_max: Option<u64>,
    #[arg(long)]
    k1_max: Option<u64>,
    /// Override for <omega^4> (exact rational).
    #[arg(long)]
    omega4: Option<String>,
    /// Flat key=value file mirroring the flags; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Parse a flat `key = value` config file; `#` starts a comment.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("config line {}: expected key=value", n + 1)))?;
        let key = k.trim().replace('_', "-");
        out.insert(key, v.trim().to_string());
    }
    Ok(out)
}

fn merge_file(args: &mut Args, file: &BTreeMap<String, String>) -> Result<(), CliError> {
    fn num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, CliError> {
        v.parse().map_err(|_| usage(format!("config key {key}: invalid value {v:?}")))
    }
    for (k, v) in file {
        match k.as_str() {
            "poly" => {
                if args.poly.is_none() && args.search.is_none() {
                    args.poly = Some(v.clone());
                }
            }
            "search" => {
                if args.poly.is_none() && args.search.is_none() {
                    args.search = Some(num(k, v)?);
                }
            }
            "claims" => args.claims = args.claims.take().or(Some(v.clone())),
            "precision-bits" => args.precision_bits = args.precision_bits.or(Some(num(k, v)?)),
            "samples" => args.samples = args.samples.or(Some(num(k, v)?)),
            "seed" => args.seed = args.seed.or(Some(num(k, v)?)),
            "format" => {
                let f = Format::from_str(v, true).map_err(|_| usage(format!("config key format: {v:?}")))?;
                args.format = args.format.or(Some(f));
            }
            "out" => args.out = args.out.take().or(Some(PathBuf::from(v))),
            "c-max" => args.c_max = args.c_max.or(Some(num(k, v)?)),
            "k1-max" => args.k1_max = args.k1_max.or(Some(num(k, v)?)),
            "omega4" => args.omega4 = args.omega4.take().or(Some(v.clone())),
            other => return Err(usage(format!("config: unknown key {other:?}"))),
        }
    }
    Ok(())
}

fn parse_poly(s: &str) -> Result<Vec<BigRational>, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() == 5 {
        return Err(usage(
            "--poly: a cubic term is not supported; depress the quartic (x -> x - b/(4a)) externally and pass a,b,c,d",
        ));
    }
    if parts.len() != 4 {
        return Err(usage(format!("--poly: expected 4 coefficients a,b,c,d, got {}", parts.len())));
    }
    let coeffs = parts
        .iter()
        .map(|p| parse_ratio(p).map_err(|e| usage(format!("--poly: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs[0].is_zero() {
        return Err(usage("--poly: leading coefficient a must be nonzero"));
    }
    Ok(coeffs)
}

fn parse_claims(s: &str) -> Result<Vec<String>, CliError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(Vec::new());
    }
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_claim_id(p).map_err(|e| usage(format!("--claims: {e}"))))
        .collect()
}

/// Parse argv (including the program name) and an optional config file into a validated RunConfig.
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    build_config(args).map_err(|e| clap::Error::raw(clap::error::ErrorKind::ValueValidation, format!("{e}\n")))
}

fn build_config(mut args: Args) -> Result<RunConfig, CliError> {
    if let Some(path) = args.config.clone() {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| usage(format!("--config {}: {e}", path.display())))?;
        merge_file(&mut args, &parse_config_file(&text)?)?;
    }
    let input = match (&args.poly, args.search) {
        (Some(p), None) => QuarticInput::Poly { coefficients: parse_poly(p)? },
        (None, Some(n)) => QuarticInput::Search { bound: n },
        (None, None) => QuarticInput::Search { bound: 5 },
        (Some(_), Some(_)) => return Err(usage("--poly and --search are mutually exclusive")),
    };
    let precision_bits = args.precision_bits.unwrap_or(128);
    if precision_bits < 32 {
        return Err(usage(format!("--precision-bits must be at least 32, got {precision_bits}")));
    }
    let omega4 = match &args.omega4 {
        Some(s) => parse_ratio(s).map_err(|e| usage(format!("--omega4: {e}")))?,
        None => Options::default().omega4,
    };
    if !omega4.is_positive() {
        return Err(usage("--omega4 must be positive"));
    }
    let defaults = Options::default();
    Ok(RunConfig {
        input,
        claims: parse_claims(args.claims.as_deref().unwrap_or("all"))?,
        precision_bits,
        samples: args.samples.unwrap_or(defaults.samples),
        seed: args.seed.unwrap_or(defaults.seed),
        format: args.format.unwrap_or(Format::Json),
        out: args.out,
        c_max: args.c_max.unwrap_or(defaults.c_max),
        k1_max: args.k1_max.unwrap_or(defaults.k1_max),
        omega4,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    Verified,
    Failed,
    GateRejected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateSection {
    pub quartic: Option<Quartic>,
    pub report: Option<GateReport>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: RunConfig,
    pub gate: GateSection,
    pub claims: Vec<ClaimReport>,
    pub overall: Overall,
    pub total_elapsed_ms: u64,
}

impl SuiteReport {
    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Overall::Verified => EXIT_VERIFIED,
            Overall::Failed => EXIT_FAILED,
            Overall::GateRejected => EXIT_GATE,
        }
    }
}

/// Resolve the quartic, build the context and run the selected claims.
pub fn run_suite(cfg: &RunConfig) -> SuiteReport {
    let start = Instant::now();
    let quartic = match &cfg.input {
        QuarticInput::Poly { coefficients: c } => {
            Ok(Quartic::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
        }
        QuarticInput::Search { bound } => search_quartic(*bound),
    };
    let quartic = match quartic {
        Ok(q) => q,
        Err(e) => {
            return SuiteReport {
                config: cfg.clone(),
                gate: GateSection { quartic: None, report: None, error: Some(e.to_string()) },
                claims: Vec::new(),
                overall: Overall::GateRejected,
                total_elapsed_ms: start.elapsed().as_millis() as u64,
            }
        }
    };
    let ctx = Context::new(quartic.clone(), cfg.options());
    let gate = match &ctx.gate {
        Ok(r) => GateSection { quartic: Some(quartic), report: Some(r.clone()), error: None },
        Err(e) => GateSection { quartic: Some(quartic), report: None, error: Some(e.to_string()) },
    };
    let claims = run_all(&ctx, &cfg.claims).expect("claim ids were validated");
    let overall = if !ctx.admissible() {
        Overall::GateRejected
    } else if claims.iter().all(|c| c.status.is_verified()) {
        Overall::Verified
    } else {
        Overall::Failed
    };
    SuiteReport { config: cfg.clone(), gate, claims, overall, total_elapsed_ms: start.elapsed().as_millis() as u64 }
}

pub fn to_json(r: &SuiteReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn to_markdown(r: &SuiteReport) -> String {
    let mut s = String::from("# Claim report\n\n");
    if let Some(q) = &r.gate.quartic {
        s.push_str(&format!("Quartic: `{q}`\n\n"));
    }
    if let Some(g) = &r.gate.report {
        s.push_str(&format!(
            "Gate: irreducible={}, real roots={}, Galois S4={}, Delta={}\n\n",
            g.irreducible,
            g.real_root_count,
            g.galois_s4,
            ratio_string(&g.delta)
        ));
    }
    if let Some(e) = &r.gate.error {
        s.push_str(&format!("Gate error: {e}\n\n"));
    }
    s.push_str("| id | title | status | ms |\n|---|---|---|---|\n");
    for c in &r.claims {
        let status = serde_json::to_value(c.status).expect("status").as_str().unwrap_or("").to_string();
        s.push_str(&format!("| {} | {} | {} | {} |\n", c.id, c.title, status, c.elapsed_ms));
    }
    let overall = serde_json::to_value(r.overall).expect("overall");
    s.push_str(&format!("\nOverall: **{}** ({} ms)\n", overall.as_str().unwrap_or(""), r.total_elapsed_ms));
    s
}

/// Write the report where the config asks; returns the process exit code.
pub fn emit_report(r: &SuiteReport, cfg: &RunConfig) -> Result<i32, CliError> {
    let text = match cfg.format {
        Format::Json => to_json(r),
        Format::Md => to_markdown(r),
    };
    match cfg.out.as_deref().filter(|p| *p != std::path::Path::new("-")) {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    Ok(r.exit_code())
}

/// Full command-line entry point; returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match parse_config(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_VERIFIED };
            let _ = e.print();
            return code;
        }
    };
    let report = run_suite(&cfg);
    match emit_report(&report, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> Result<RunConfig, clap::Error> {
        parse_config(std::iter::once("hodge-verify").chain(args.iter().copied()))
    }

    #[test]
    fn parses_poly_and_claims() {
        let c = cfg(&["--poly", "1,-4,1,1", "--claims", "all"]).unwrap();
        assert!(matches!(c.input, QuarticInput::Poly { ref coefficients } if coefficients.len() == 4));
        assert!(c.claims.is_empty());
        let c = cfg(&["--search", "5", "--claims", "C09,c16"]).unwrap();
        assert_eq!(c.input, QuarticInput::Search { bound: 5 });
        assert_eq!(c.claims, vec!["C09", "C16"]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(cfg(&["--poly", "0,1,1,1"]).is_err());
        assert!(cfg(&["--poly", "1,0,-5,-2,1"]).is_err());
        assert!(cfg(&["--claims", "C99"]).is_err());
        assert!(cfg(&["--precision-bits", "16"]).is_err());
        assert!(cfg(&["--poly", "1,-5,-2,1", "--search", "3"]).is_err());
    }

    #[test]
    fn config_file_and_precedence() {
        let map = parse_config_file("# comment\nsearch = 4\nseed=9\nprecision_bits = 64\n").unwrap();
        let mut args = Args { seed: Some(3), ..Args::default() };
        merge_file(&mut args, &map).unwrap();
        assert_eq!(args.seed, Some(3));
        assert_eq!(args.search, Some(4));
        assert_eq!(args.precision_bits, Some(64));
        assert!(parse_config_file("nonsense").is_err());
        assert!(merge_file(&mut Args::default(), &parse_config_file("colour = red").unwrap()).is_err());
    }
}
