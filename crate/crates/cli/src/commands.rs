use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use symcomvar::commvar::{
    c0_tangent_dim, reducibility_certificate, spadesuit_check, verify_certificate, ReducibilityCertificate,
    SpadesuitReport, VerifyReport,
};
use symcomvar::nilpotent::{
    centralizer_limit, diagram_from_ranks, enumerate_ab_diagrams, is_even, is_sigma_distinguished, kr_triple,
    representative, semisimple_deformation, sigma_adapted_jordan, AbDiagram, DecisionMode,
};
use symcomvar::sampling::RunConfig;
use symcomvar::spinor::e6_spadesuit_obstruction;
use symcomvar::sympair::{make_pair, PairSpec, SymPair};

use crate::args::{CertificateCommand, Cli, Command, NilpotentCommand, PairArgs, PairCommand, SpadesuitCommand};
use crate::error::CliError;

const NUMERIC_AMBIENT_LIMIT: usize = 16;
const SYMBOLIC_AMBIENT_LIMIT: usize = 12;

/// JSON for stdout and the exit code it comes with.
pub struct Outcome {
    pub json: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, code: 0 }
    }
}

struct Context {
    cfg: RunConfig,
    pretty: bool,
    unsafe_sizes: bool,
    verbose: u8,
}

impl Context {
    fn log(&self, msg: impl FnOnce() -> String) {
        if self.verbose > 0 {
            eprintln!("[symcomvar] {}", msg());
        }
    }

    fn guard(&self, spec: PairSpec, limit: usize) -> Result<(), CliError> {
        let n = spec.ambient();
        if n > limit && !self.unsafe_sizes {
            return Err(CliError::Invalid(format!(
                "{spec} has ambient size {n} > {limit}; pass --unsafe-sizes to run anyway"
            )));
        }
        Ok(())
    }

    fn pair(&self, spec: PairSpec, limit: usize) -> Result<SymPair, CliError> {
        spec.validate()?;
        self.guard(spec, limit)?;
        let start = Instant::now();
        let pair = make_pair(spec)?;
        self.log(|| format!("built {spec} in {:.2?}", start.elapsed()));
        Ok(pair)
    }

    fn render<T: Serialize>(&self, value: &T) -> String {
        let text = if self.pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
        text.expect("outputs serialize")
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = Context {
        cfg: cli.global.config(),
        pretty: cli.global.pretty,
        unsafe_sizes: cli.global.unsafe_sizes,
        verbose: cli.global.verbose,
    };
    ctx.cfg.validate()?;
    match &cli.command {
        Command::Pair(PairCommand::Info(args)) => pair_info(&ctx, args),
        Command::Nilpotent(NilpotentCommand::Enumerate { n, m, verify_ev }) => nilpotent(&ctx, *n, *m, *verify_ev),
        Command::Certificate(cmd) => certificate(&ctx, cmd),
        Command::Spadesuit(cmd) => spadesuit(&ctx, cmd),
        Command::C0dim(args) => c0dim(&ctx, args),
        Command::Verify { path } => verify(&ctx, path),
    }
}

fn pair_info(ctx: &Context, args: &PairArgs) -> Result<Outcome, CliError> {
    let spec = args.spec().map_err(CliError::Invalid)?;
    let pair = ctx.pair(spec, NUMERIC_AMBIENT_LIMIT)?;
    let c0_dim = c0_tangent_dim(&pair, &ctx.cfg)?;
    let jacobi = pair.algebra().check_jacobi().is_ok();
    let expected = pair.expected_commvar_dim();
    Ok(Outcome::ok(json!({
        "pair": spec.to_string(),
        "dim_g": pair.algebra().dim(),
        "dim_g0": pair.g0().dim(),
        "dim_g1": pair.g1().dim(),
        "rank": pair.rank(),
        "expected_commvar_dim": expected,
        "c0_dim": c0_dim,
        "invariant_checks": {
            "structure": true,
            "jacobi": jacobi,
            "c0_dim_matches_expected": pair.rank() == 0 || c0_dim == expected,
        },
        "config": ctx.cfg,
    })))
}

fn c0dim(ctx: &Context, args: &PairArgs) -> Result<Outcome, CliError> {
    let spec = args.spec().map_err(CliError::Invalid)?;
    let pair = ctx.pair(spec, NUMERIC_AMBIENT_LIMIT)?;
    let start = Instant::now();
    let dim = c0_tangent_dim(&pair, &ctx.cfg)?;
    ctx.log(|| format!("tangent dimension in {:.2?}", start.elapsed()));
    let expected = if pair.rank() == 0 { 0 } else { pair.expected_commvar_dim() };
    Ok(Outcome::ok(json!({
        "pair": spec.to_string(),
        "c0_tangent_dim": dim,
        "dim_g1_plus_rank": expected,
        "matches": dim == expected,
        "config": ctx.cfg,
    })))
}

fn nilpotent_row(d: &AbDiagram, pair: &SymPair, ctx: &Context, verify_ev: bool) -> (Value, Vec<String>) {
    let mut failures = Vec::new();
    let mut fail = |what: &str, detail: String| failures.push(format!("{d}: {what}: {detail}"));
    let e = match representative(d, pair) {
        Ok(e) => e,
        Err(err) => {
            fail("representative", err.to_string());
            return (json!({ "diagram": d, "valid": false }), failures);
        }
    };
    let round_trip = sigma_adapted_jordan(&e, pair).and_then(|j| {
        j.check(&e, pair)?;
        j.diagram()
    });
    match round_trip {
        Ok(back) if back == *d => {}
        Ok(back) => fail("round trip", format!("recovered {back}")),
        Err(err) => fail("round trip", err.to_string()),
    }
    match diagram_from_ranks(&e, pair) {
        Ok(back) if back == *d => {}
        Ok(back) => fail("rank oracle", format!("recovered {back}")),
        Err(err) => fail("rank oracle", err.to_string()),
    }
    let triple_verified = if e.is_zero() {
        true
    } else {
        match kr_triple(&e, pair).and_then(|t| t.check(pair)) {
            Ok(()) => true,
            Err(err) => {
                fail("triple", err.to_string());
                false
            }
        }
    };
    let even = is_even(&e, pair).unwrap_or_else(|err| {
        fail("evenness", err.to_string());
        false
    });
    let report = match is_sigma_distinguished(&e, pair, &ctx.cfg) {
        Ok(r) => Some(r),
        Err(err) => {
            fail("distinguishedness", err.to_string());
            None
        }
    };
    let distinguished = report.as_ref().is_some_and(|r| r.distinguished);
    let implies_even = !distinguished || even;
    let even_row_rule = !d.has_even_row() || !distinguished;
    if !implies_even {
        fail("distinguished but not even", String::new());
    }
    if !even_row_rule {
        fail("distinguished with an even row", String::new());
    }
    let mut row = json!({
        "diagram": d,
        "even": even,
        "distinguished": distinguished,
        "mode": report.as_ref().map(|r| r.mode),
        "centralizer_dim": report.as_ref().map(|r| r.centralizer_dim),
        "triple_verified": triple_verified,
        "distinguished_implies_even": implies_even,
        "even_row_not_distinguished": even_row_rule,
    });
    if let Some(bound) = report.as_ref().and_then(|r| r.failure_bound) {
        row["failure_bound"] = json!(bound);
    }
    if verify_ev && even && !e.is_zero() {
        let curve = semisimple_deformation(&e, pair).and_then(|dr| Ok((dr, centralizer_limit(&e, pair)?)));
        match curve {
            Ok((dr, limit)) => {
                let passed = dr.passed() && limit.equal;
                if !passed {
                    fail("curve checks", String::new());
                }
                row["curve"] = json!({
                    "min_poly_squarefree": dr.min_poly_squarefree,
                    "centralizer_dim_generic": dr.centralizer_dim_generic,
                    "centralizer_dim_at_e": dr.centralizer_dim_at_e,
                    "char_poly_matches": dr.char_poly_matches,
                    "fiber_at_zero_is_e": dr.fiber_at_zero_is_e,
                    "limit_equals_centralizer": limit.equal,
                    "passed": passed,
                });
            }
            Err(err) => fail("curve checks", err.to_string()),
        }
    }
    row["valid"] = json!(failures.is_empty());
    (row, failures)
}

fn nilpotent(ctx: &Context, n: usize, m: usize, verify_ev: bool) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    if n + m > 0 {
        let pair = ctx.pair(PairSpec::so_so(n, m), SYMBOLIC_AMBIENT_LIMIT)?;
        for d in enumerate_ab_diagrams(n, m) {
            let start = Instant::now();
            let (row, fails) = nilpotent_row(&d, &pair, ctx, verify_ev);
            ctx.log(|| format!("{d} in {:.2?}", start.elapsed()));
            rows.push(row);
            failures.extend(fails);
        }
    }
    let exact = rows.iter().all(|r| r["mode"] != json!(DecisionMode::Randomized));
    let code = if failures.is_empty() { 0 } else { 3 };
    Ok(Outcome {
        json: json!({
            "pair": format!("SO_SO({n}, {m})"),
            "rows": rows,
            "all_exact": exact,
            "failures": failures,
            "config": ctx.cfg,
        }),
        code,
    })
}

fn emit(ctx: &Context, text: String, out: Option<&Path>, summary: Value) -> Result<Outcome, CliError> {
    match out {
        Some(path) => {
            fs::write(path, text + "\n")?;
            let mut s = summary;
            s["out"] = json!(path.display().to_string());
            s["config"] = json!(ctx.cfg);
            Ok(Outcome::ok(s))
        }
        None => Ok(Outcome::ok(serde_json::from_str(&text).expect("own output parses"))),
    }
}

fn certificate_summary(cert: &ReducibilityCertificate) -> Value {
    let verified = verify_certificate(cert).passed();
    match cert {
        ReducibilityCertificate::D1(c) => json!({
            "invariant": "D1",
            "bound": c.bound,
            "witness_value": c.witness_value,
            "verified": verified,
        }),
        ReducibilityCertificate::QuarticSpinor(c) => json!({
            "invariant": "quartic_spinor",
            "bound": c.bound,
            "witness_value": symcomvar::scalar::q_to_string(&c.witness_value),
            "verified": verified,
        }),
    }
}

fn certificate(ctx: &Context, cmd: &CertificateCommand) -> Result<Outcome, CliError> {
    let (spec, out) = match cmd {
        CertificateCommand::Gl { n, m, out } => (PairSpec::gl_gl(*n, *m), out),
        CertificateCommand::SoGl { n, out } => (PairSpec::so2n_gln(*n), out),
    };
    spec.validate()?;
    ctx.guard(spec, SYMBOLIC_AMBIENT_LIMIT)?;
    let start = Instant::now();
    let cert = reducibility_certificate(spec, &ctx.cfg)?;
    ctx.log(|| format!("certificate for {spec} in {:.2?}", start.elapsed()));
    emit(ctx, cert.to_json_string(ctx.pretty), out.as_deref(), certificate_summary(&cert))
}

fn spadesuit(ctx: &Context, cmd: &SpadesuitCommand) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (report, out) = match cmd {
        SpadesuitCommand::Gl { n, m, out } => (grading_report(ctx, PairSpec::gl_gl(*n, *m))?, out),
        SpadesuitCommand::SoGl { n, out } => (grading_report(ctx, PairSpec::so2n_gln(*n))?, out),
        SpadesuitCommand::E6 { out } => {
            let certificate = Box::new(e6_spadesuit_obstruction(&ctx.cfg)?);
            (SpadesuitReport::FailsCertificate { tangent_dim: None, target: 32, certificate }, out)
        }
    };
    ctx.log(|| format!("spadesuit in {:.2?}", start.elapsed()));
    let summary = match &report {
        SpadesuitReport::FailsCertificate { certificate, .. } => {
            let mut s = certificate_summary(certificate);
            s["status"] = json!(report.status());
            s
        }
        _ => json!({ "status": report.status() }),
    };
    let mut value = serde_json::to_value(&report).expect("reports serialize");
    value["config"] = json!(ctx.cfg);
    emit(ctx, ctx.render(&value), out.as_deref(), summary)
}

fn grading_report(ctx: &Context, spec: PairSpec) -> Result<SpadesuitReport, CliError> {
    let pair = ctx.pair(spec, SYMBOLIC_AMBIENT_LIMIT)?;
    Ok(spadesuit_check(&pair, &ctx.cfg)?)
}

/// Accepts a bare certificate or a spadesuit report carrying one.
fn certificate_from_json(text: &str) -> Result<ReducibilityCertificate, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Malformed(e.to_string()))?;
    let inner = match value.get("status") {
        Some(_) => value
            .get("certificate")
            .cloned()
            .ok_or_else(|| CliError::Malformed("report carries no certificate".into()))?,
        None => value,
    };
    serde_json::from_value(inner).map_err(|e| CliError::Malformed(e.to_string()))
}

fn verify(ctx: &Context, path: &Path) -> Result<Outcome, CliError> {
    let text = fs::read_to_string(path)?;
    let cert = certificate_from_json(&text)?;
    let start = Instant::now();
    let report: VerifyReport = verify_certificate(&cert);
    ctx.log(|| format!("verified in {:.2?}", start.elapsed()));
    let passed = report.passed();
    Ok(Outcome {
        json: json!({ "passed": passed, "checks": report.checks, "config": ctx.cfg }),
        code: if passed { 0 } else { 1 },
    })
}

pub fn render(cli: &Cli, value: &Value) -> String {
    if cli.global.pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("outputs serialize")
}
