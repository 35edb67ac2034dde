//! The `qweyl` command line: JSON on stdout, a one-line summary on stderr.
//!
//! Exit codes: 0 success, 1 failed check or domain error, 2 usage or parse
//! error.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{verify_identity_suite, Algebra, Params};
use crate::centerpi::{pi_report, semigroup_generators_check};
use crate::cyclofield::{parse_literal, CycNum, Field, FieldCtx};
use crate::error::Error;
use crate::repmods::{
    build_family, central_scalars, classify, conjugate, failed_relations, intertwiner_space, is_simple_burnside,
    iso_by_criterion, random_invertible, Family, FamilySpec, Hints, Rep,
};
use crate::wire;

#[derive(Parser, Debug)]
#[command(name = "qweyl", version, about = "Exact computations in the 3-cyclic quantum Weyl algebra at roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Order of q² (at least 2)
    #[arg(long)]
    l: i64,
    /// Scalar literal in t = q², e.g. "1/2*t - 3"; random when omitted
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Seed for every random choice
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The field Q(q²): degree, cyclotomic polynomial, q² and its inverse
    FieldInfo {
        #[arg(long)]
        l: i64,
    },
    /// Check the commutation identities exactly
    VerifyIdentities {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Largest exponent tried (default 2l)
        #[arg(long)]
        a_max: Option<u32>,
    },
    /// PI degree by enumeration and by invariant factors
    Pideg {
        #[arg(long)]
        l: i64,
    },
    /// Check that (l,0,0), (0,l,0), (0,0,l), (1,1,1) generate the congruent triples
    SemigroupCheck {
        #[arg(long)]
        l: i64,
        /// Largest coordinate checked (default 3l)
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Matrices of a family module
    BuildModule {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        family: Option<String>,
        /// Parameter object, e.g. '{"mu1":"1","mu2":"t"}', or a whole family spec
        #[arg(long)]
        params: String,
        /// Transport the module along a random invertible matrix
        #[arg(long)]
        conjugate: bool,
    },
    /// Relations, simplicity and central scalars of a module
    CheckModule {
        /// Module JSON file, or - for stdin
        #[arg(long = "in")]
        input: String,
    },
    /// Identify the family and invariants of a simple module
    Classify {
        #[arg(long = "in")]
        input: String,
        /// An eigenvalue of z
        #[arg(long, allow_hyphen_values = true)]
        hint_z: Option<String>,
        /// An eigenvalue of g = xy - yx
        #[arg(long, allow_hyphen_values = true)]
        hint_g: Option<String>,
        /// An l-th root fixing mu1
        #[arg(long, allow_hyphen_values = true)]
        hint_mu1: Option<String>,
    },
    /// Compare the isomorphism criterion with the intertwiner computation
    Iso {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// '{"left": <family spec>, "right": <family spec>}'
        #[arg(long)]
        params: String,
    },
}

struct Outcome {
    json: Value,
    ok: bool,
    summary: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let (code, json, summary) = match execute(cli.command) {
        Ok(o) => (if o.ok { 0 } else { 1 }, o.json, o.summary),
        Err(Failure::Usage(m)) => (2, json!({ "error": m }), format!("error: {m}")),
        Err(Failure::Domain(m)) => (1, json!({ "error": m }), format!("error: {m}")),
    };
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("serialisable"));
    let _ = writeln!(err, "{summary}");
    code
}

fn field(l: i64) -> Res<Field> {
    Ok(FieldCtx::new(l)?)
}

fn literal(ctx: &Field, src: &str, what: &str) -> Res<CycNum> {
    parse_literal(ctx, src).map_err(|e| Failure::Usage(format!("--{what}: {e}")))
}

fn random_scalar(ctx: &Field, rng: &mut ChaCha8Rng) -> CycNum {
    let lin = &CycNum::zeta(ctx) * &CycNum::from_int(ctx, rng.gen_range(-2..=2));
    &CycNum::from_int(ctx, rng.gen_range(-3..=3)) + &lin
}

fn algebra_params(a: &AlgebraArgs) -> Res<(Params, ChaCha8Rng)> {
    let ctx = field(a.l)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut pick = |src: &Option<String>, what: &str| match src {
        Some(s) => literal(&ctx, s, what),
        None => Ok(random_scalar(&ctx, &mut rng)),
    };
    let alpha = pick(&a.alpha, "alpha")?;
    let beta = pick(&a.beta, "beta")?;
    let gamma = pick(&a.gamma, "gamma")?;
    Ok((Params::new(&ctx, alpha, beta, gamma)?, rng))
}

fn parse_json(src: &str, what: &str) -> Res<Value> {
    serde_json::from_str(src).map_err(|e| Failure::Usage(format!("{what}: invalid JSON: {e}")))
}

fn read_input(path: &str) -> Res<Value> {
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    parse_json(&text, path)
}

fn spec_arg(ctx: &Field, family: Option<&str>, params: &Value) -> Res<FamilySpec> {
    Ok(match family {
        Some(f) => wire::spec_params_from_json(ctx, f.parse::<Family>()?, params)?,
        None => wire::spec_from_json(ctx, params)?,
    })
}

fn execute(cmd: Command) -> Res<Outcome> {
    match cmd {
        Command::FieldInfo { l } => {
            let ctx = field(l)?;
            let phi: Vec<Value> = ctx.phi().iter().map(|r| json!(r.to_string())).collect();
            let json = json!({
                "l": l,
                "degree": ctx.degree(),
                "cyclotomic": phi,
                "q2": wire::cyc_to_json(&CycNum::zeta(&ctx)),
                "q2_inverse": wire::cyc_to_json(&CycNum::q2pow(&ctx, -1)),
            });
            Ok(Outcome { json, ok: true, summary: format!("Q(q^2) with q^2 of order {l} has degree {}", ctx.degree()) })
        }
        Command::VerifyIdentities { alg, a_max } => {
            let (params, _) = algebra_params(&alg)?;
            let a_max = a_max.unwrap_or(2 * params.l());
            let report = verify_identity_suite(&Algebra::new(params), a_max);
            let passed = report.checks.iter().filter(|c| c.pass).count();
            let mut summary = format!("{passed}/{} identity checks pass", report.checks.len());
            for c in report.failures() {
                summary.push_str(&format!("\n  FAIL {} {:?}", c.id, c.exponent));
            }
            Ok(Outcome { json: wire::identity_report_to_json(&report), ok: report.all_pass(), summary })
        }
        Command::Pideg { l } => {
            let r = pi_report(l)?;
            let summary = format!("l = {l}: brute force {}, invariant factors {}", r.pideg_bruteforce, r.pideg_factors);
            let ok = r.consistent();
            Ok(Outcome { json: serde_json::to_value(&r).expect("serialisable"), ok, summary })
        }
        Command::SemigroupCheck { l, bound } => {
            let bound = bound.unwrap_or(3 * l);
            let pass = semigroup_generators_check(l, bound)?;
            let json = json!({ "l": l, "bound": bound, "pass": pass });
            Ok(Outcome { json, ok: pass, summary: format!("semigroup check up to {bound}: {}", verdict(pass)) })
        }
        Command::BuildModule { alg, family, params, conjugate: conj } => {
            let (p, mut rng) = algebra_params(&alg)?;
            let spec = spec_arg(&p.ctx, family.as_deref(), &parse_json(&params, "--params")?)?;
            let mut rep = build_family(&spec, &p)?;
            if conj {
                let m = random_invertible(&p.ctx, rep.dim(), &mut rng);
                rep = conjugate(&rep, &m)?;
            }
            let summary = format!("{} module of dimension {}", spec.family(), rep.dim());
            Ok(Outcome { json: wire::rep_to_json(&rep), ok: true, summary })
        }
        Command::CheckModule { input } => {
            let rep = wire::rep_from_json(&read_input(&input)?)?;
            check_module(&rep)
        }
        Command::Classify { input, hint_z, hint_g, hint_mu1 } => {
            let rep = wire::rep_from_json(&read_input(&input)?)?;
            let ctx = rep.params.ctx.clone();
            let opt = |s: &Option<String>, what| s.as_deref().map(|s| literal(&ctx, s, what)).transpose();
            let hints = Hints {
                z_eigenvalue: opt(&hint_z, "hint-z")?,
                g_eigenvalue: opt(&hint_g, "hint-g")?,
                mu1_root: opt(&hint_mu1, "hint-mu1")?,
            };
            let c = classify(&rep, &hints)?;
            let summary = format!("{}{}", c.family, if c.spec.is_some() { "" } else { " (parameters up to l-th roots)" });
            Ok(Outcome { json: wire::classify_to_json(&c), ok: true, summary })
        }
        Command::Iso { alg, params } => {
            let (p, _) = algebra_params(&alg)?;
            let v = parse_json(&params, "--params")?;
            let get = |k: &str| v.get(k).ok_or_else(|| Failure::Usage(format!("--params needs {k:?}")));
            let left = wire::spec_from_json(&p.ctx, get("left")?)?;
            let right = wire::spec_from_json(&p.ctx, get("right")?)?;
            let (iso, reason) = iso_by_criterion(&left, &right, &p)?;
            let dim = intertwiner_space(&build_family(&left, &p)?, &build_family(&right, &p)?)?.len();
            let agree = iso == (dim > 0);
            let json = json!({
                "params": wire::params_to_json(&p),
                "criterion": iso,
                "reason": reason,
                "intertwiner_dim": dim,
                "agree": agree,
            });
            let summary = format!("criterion {iso}, intertwiner dimension {dim}: {}", if agree { "agree" } else { "DISAGREE" });
            Ok(Outcome { json, ok: agree, summary })
        }
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn check_module(rep: &Rep) -> Res<Outcome> {
    let failed = failed_relations(rep);
    let relations = failed.is_empty();
    let simple = is_simple_burnside(rep);
    let scalars = match central_scalars(rep) {
        Ok(cs) => json!({
            "x^l": wire::literal_json(&cs.x_l),
            "y^l": wire::literal_json(&cs.y_l),
            "z^l": wire::literal_json(&cs.z_l),
            "omega": wire::literal_json(&cs.omega),
        }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let json = json!({
        "params": wire::params_to_json(&rep.params),
        "dim": rep.dim(),
        "relations": relations,
        "failed_relations": failed,
        "simple": simple,
        "dim_at_most_l": rep.dim() <= rep.params.l() as usize,
        "central_scalars": scalars,
    });
    let summary = format!("dimension {}: relations {}, simple {}", rep.dim(), verdict(relations), verdict(simple));
    Ok(Outcome { json, ok: relations && simple, summary })
}
