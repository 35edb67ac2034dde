//! JSON encodings of the library's values.
//!
//! Field elements inside matrices and algebra elements are arrays of φ(l)
//! rational strings, lowest power of q² first. Scalars that a person is
//! likely to type (α, β, γ, family parameters) are written as literals in
//! the symbol `t = q²`.

use serde_json::{json, Map, Value};

use crate::algebra::{AlgElem, IdentityReport, Params};
use crate::cyclofield::{format_literal, parse_literal, CycNum, Field, FieldCtx, Rat};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::repmods::{Canonical, ClassifyResult, Family, FamilySpec, Rep};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { pos: 0, msg: msg.into() }
}

pub fn cyc_to_json(c: &CycNum) -> Value {
    Value::Array(c.coeffs().iter().map(|r| Value::String(r.to_string())).collect())
}

fn rat_from_json(v: &Value) -> Result<Rat> {
    let s = match v {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) if n.is_i64() => n.to_string(),
        _ => return Err(bad(format!("expected a rational string, got {v}"))),
    };
    s.parse::<Rat>().map_err(|_| bad(format!("malformed rational {s:?}")))
}

/// Reads a coefficient array, a literal string, or a plain integer.
pub fn cyc_from_json(ctx: &Field, v: &Value) -> Result<CycNum> {
    match v {
        Value::Array(items) => {
            let coeffs = items.iter().map(rat_from_json).collect::<Result<Vec<_>>>()?;
            CycNum::from_coeffs(ctx, coeffs)
        }
        Value::String(s) => parse_literal(ctx, s),
        Value::Number(n) => n
            .as_i64()
            .map(|n| CycNum::from_int(ctx, n))
            .ok_or_else(|| bad(format!("non-integer number {n}; write rationals as strings"))),
        _ => Err(bad(format!("expected a field element, got {v}"))),
    }
}

pub fn literal_json(c: &CycNum) -> Value {
    Value::String(format_literal(c))
}

pub fn mat_to_json(m: &Mat) -> Value {
    let entries: Vec<Value> = m.to_rows().iter().map(|r| Value::Array(r.iter().map(cyc_to_json).collect())).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|n| n as usize).ok_or_else(|| bad(format!("field {key:?} must be a non-negative integer")))
}

pub fn mat_from_json(ctx: &Field, v: &Value) -> Result<Mat> {
    let (rows, cols) = (usize_field(v, "rows")?, usize_field(v, "cols")?);
    let entries = field(v, "entries")?.as_array().ok_or_else(|| bad("entries must be an array"))?;
    if entries.len() != rows {
        return Err(bad(format!("expected {rows} rows, got {}", entries.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for row in entries {
        let row = row.as_array().ok_or_else(|| bad("each row must be an array"))?;
        if row.len() != cols {
            return Err(bad(format!("expected {cols} columns, got {}", row.len())));
        }
        out.push(row.iter().map(|e| cyc_from_json(ctx, e)).collect::<Result<Vec<_>>>()?);
    }
    if rows == 0 {
        return Ok(Mat::zeros(ctx, 0, cols));
    }
    Mat::from_rows(ctx, out)
}

pub fn alg_to_json(u: &AlgElem) -> Value {
    Value::Array(
        u.terms()
            .map(|(m, c)| json!({ "a": m.a, "b": m.b, "c": m.c, "coeff": cyc_to_json(c) }))
            .collect(),
    )
}

pub fn params_to_json(p: &Params) -> Value {
    json!({
        "l": p.l(),
        "alpha": literal_json(&p.alpha),
        "beta": literal_json(&p.beta),
        "gamma": literal_json(&p.gamma),
    })
}

/// Reads `l`, `alpha`, `beta`, `gamma` from an object.
pub fn params_from_json(v: &Value) -> Result<Params> {
    let l = field(v, "l")?.as_i64().ok_or_else(|| bad("l must be an integer"))?;
    let ctx = FieldCtx::new(l)?;
    let get = |k: &str| cyc_from_json(&ctx, field(v, k)?);
    Params::new(&ctx, get("alpha")?, get("beta")?, get("gamma")?)
}

pub fn identity_report_to_json(r: &IdentityReport) -> Value {
    let mut echo = params_to_json(&r.params);
    echo["a_max"] = json!(r.a_max);
    Value::Array(
        r.checks
            .iter()
            .map(|c| {
                let mut entry = json!({ "identity": c.id, "params": echo.clone(), "pass": c.pass });
                if let Some(n) = c.exponent {
                    entry["exponent"] = json!(n);
                }
                if let Some(w) = &c.witness {
                    entry["witness"] = alg_to_json(w);
                }
                entry
            })
            .collect(),
    )
}

pub fn rep_to_json(r: &Rep) -> Value {
    let mut v = params_to_json(&r.params);
    v["dim"] = json!(r.dim());
    v["X"] = mat_to_json(&r.x);
    v["Y"] = mat_to_json(&r.y);
    v["Z"] = mat_to_json(&r.z);
    v
}

pub fn rep_from_json(v: &Value) -> Result<Rep> {
    let params = params_from_json(v)?;
    let ctx = params.ctx.clone();
    let dim = usize_field(v, "dim")?;
    let x = mat_from_json(&ctx, field(v, "X")?)?;
    let y = mat_from_json(&ctx, field(v, "Y")?)?;
    let z = mat_from_json(&ctx, field(v, "Z")?)?;
    if x.rows() != dim {
        return Err(bad(format!("dim is {dim} but X has {} rows", x.rows())));
    }
    Rep::new(params, x, y, z)
}

fn named_literals<'a>(items: impl IntoIterator<Item = (&'a str, &'a CycNum)>) -> Value {
    Value::Object(items.into_iter().map(|(k, c)| (k.to_string(), literal_json(c))).collect::<Map<_, _>>())
}

pub fn spec_to_json(s: &FamilySpec) -> Value {
    json!({ "family": s.family().to_string(), "params": named_literals(s.named()) })
}

/// Reads the parameter object of a family, e.g. `{"mu1": "1", "mu2": "t"}`.
pub fn spec_params_from_json(ctx: &Field, family: Family, params: &Value) -> Result<FamilySpec> {
    let obj = params.as_object().ok_or_else(|| bad("params must be a JSON object"))?;
    if let Some(extra) = obj.keys().find(|k| !family.param_names().contains(&k.as_str())) {
        return Err(bad(format!("{family} has no parameter {extra:?}; expected {:?}", family.param_names())));
    }
    let mut err = None;
    let spec = FamilySpec::from_lookup(family, |name| {
        let v = obj.get(name)?;
        cyc_from_json(ctx, v).map_err(|e| err = Some(e)).ok()
    });
    match err {
        Some(e) => Err(e),
        None => spec,
    }
}

pub fn spec_from_json(ctx: &Field, v: &Value) -> Result<FamilySpec> {
    let family: Family = field(v, "family")?.as_str().ok_or_else(|| bad("family must be a string"))?.parse()?;
    spec_params_from_json(ctx, family, field(v, "params")?)
}

pub fn canonical_to_json(c: &Canonical) -> Value {
    named_literals(c.values.iter().map(|(k, v)| (*k, v)))
}

pub fn classify_to_json(c: &ClassifyResult) -> Value {
    json!({
        "family": c.family.to_string(),
        "params": c.spec.as_ref().map(|s| named_literals(s.named())),
        "canonical": canonical_to_json(&c.canonical),
        "scalars": named_literals(c.scalars.iter().map(|(k, v)| (*k, v))),
    })
}
