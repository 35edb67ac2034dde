//! Recognising the family and parameters of a simple module.
//!
//! The procedure splits on whether z acts invertibly. In the invertible case
//! the scalars of `f^l, e^l, ef` on a z-eigenline decide between M1, M2 and
//! M3; in the nilpotent case β, γ and the action of `g = xy - yx` decide
//! between M4, M5, M0, M6 and M7.
//!
//! Eigenvalues and l-th roots need not lie in the ground field, so they come
//! from [`Hints`]. Without a root hint the result still carries the
//! canonical invariants, which only involve `μ₁^l`.

use super::family::{m1_canonical, s_value};
use super::{
    build_family, canonical, central_scalars, check_relations, derived_operators, intertwiner_space,
    is_simple_burnside, Canonical, CentralScalars, Family, FamilySpec, Rep,
};
use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::linalg::Mat;

#[derive(Clone, Debug, Default)]
pub struct Hints {
    /// An eigenvalue of z (invertible branch).
    pub z_eigenvalue: Option<CycNum>,
    /// An eigenvalue of g (the M6 branch).
    pub g_eigenvalue: Option<CycNum>,
    /// An l-th root of the scalar that determines μ₁ (M1, M2, M6).
    pub mu1_root: Option<CycNum>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyResult {
    pub family: Family,
    /// Explicit parameters, present when every one of them was determined.
    pub spec: Option<FamilySpec>,
    pub canonical: Canonical,
    pub scalars: Vec<(&'static str, CycNum)>,
}

fn row_times(v: &[CycNum], m: &Mat) -> Vec<CycNum> {
    m.apply(v).expect("matching dimension")
}

fn is_zero_vec(v: &[CycNum]) -> bool {
    v.iter().all(CycNum::is_zero)
}

/// `c` with `v·M = c·v`, if `v` spans an invariant line.
fn line_scalar(v: &[CycNum], m: &Mat) -> Option<CycNum> {
    let w = row_times(v, m);
    let i = v.iter().position(|c| !c.is_zero())?;
    let c = (&w[i]).checked_div(&v[i]).ok()?;
    w.iter().zip(v).all(|(a, b)| *a == &c * b).then_some(c)
}

fn eigenvector(m: &Mat, lambda: &CycNum) -> Option<Vec<CycNum>> {
    let shifted = m.sub(&Mat::scalar(m.ctx(), m.rows(), lambda)).ok()?;
    shifted.kernel().into_iter().next()
}

fn read_line(v: &[CycNum], m: &Mat, what: &str) -> Result<CycNum> {
    line_scalar(v, m).ok_or_else(|| Error::NotSchurScalar(format!("{what} on the chosen eigenline")))
}

fn checked_root(root: Option<&CycNum>, target: &CycNum, l: u32) -> Result<Option<CycNum>> {
    match root {
        None => Ok(None),
        Some(r) if r.pow(l as i64)? == *target => Ok(Some(r.clone())),
        Some(r) => Err(Error::HintRejected(format!("({r})^{l} is not {target}"))),
    }
}

pub fn classify(r: &Rep, hints: &Hints) -> Result<ClassifyResult> {
    if !check_relations(r) {
        return Err(Error::RelationsViolated);
    }
    if !is_simple_burnside(r) {
        return Err(Error::NotSimple);
    }
    let cs = central_scalars(r)?;
    let result = if cs.z_l.is_zero() { nilpotent(r, &cs, hints)? } else { invertible(r, hints)? };

    // a fully determined answer must rebuild to an isomorphic module
    if let Some(spec) = &result.spec {
        if canonical(spec, &r.params)? != result.canonical {
            return Err(Error::Inconsistent("parameters disagree with canonical invariants".into()));
        }
        let rebuilt = build_family(spec, &r.params)?;
        if intertwiner_space(&rebuilt, r)?.is_empty() {
            return Err(Error::Inconsistent(format!("{} module with the recovered parameters is not isomorphic", result.family)));
        }
    }
    Ok(result)
}

fn z_eigenvector(r: &Rep, hints: &Hints) -> Result<(CycNum, Vec<CycNum>)> {
    if let Some(lambda) = &hints.z_eigenvalue {
        return eigenvector(&r.z, lambda)
            .map(|v| (lambda.clone(), v))
            .ok_or_else(|| Error::HintRejected(format!("{lambda} is not an eigenvalue of z")));
    }
    // without a hint, try the diagonal entries (exact when z is triangular)
    let mut tried: Vec<CycNum> = Vec::new();
    for i in 0..r.dim() {
        let lambda = r.z[(i, i)].clone();
        if lambda.is_zero() || tried.contains(&lambda) {
            continue;
        }
        if let Some(v) = eigenvector(&r.z, &lambda) {
            return Ok((lambda, v));
        }
        tried.push(lambda);
    }
    Err(Error::EigenvalueNotFound)
}

fn invertible(r: &Rep, hints: &Hints) -> Result<ClassifyResult> {
    let p = &r.params;
    let l = p.l();
    let der = derived_operators(r);
    let (eta4, v) = z_eigenvector(r, hints)?;
    let f_l = der.f.pow(l as u64)?;
    let e_l = der.e.pow(l as u64)?;
    let ef = der.e.mul(&der.f)?;
    let eta1 = read_line(&v, &f_l, "f^l")?;
    let eta2 = read_line(&v, &e_l, "e^l")?;
    let eta3 = read_line(&v, &ef, "ef")?;
    let mut scalars = vec![("eta1", eta1.clone()), ("eta2", eta2.clone()), ("eta3", eta3.clone()), ("eta4", eta4.clone())];

    if !eta1.is_zero() {
        let root = checked_root(hints.mu1_root.as_ref(), &eta1, l)?;
        let canonical = m1_canonical(p, eta1, &eta4, &eta3);
        let spec = root.map(|mu1| FamilySpec::M1 { mu1, mu2: eta4, mu3: eta3 });
        return Ok(ClassifyResult { family: Family::M1, spec, canonical, scalars });
    }

    // u = v·f^p, the last nonzero vector along the f-walk
    let mut u = v;
    let mut steps = 0u32;
    loop {
        let next = row_times(&u, &der.f);
        if is_zero_vec(&next) {
            break;
        }
        u = next;
        steps += 1;
        if steps >= l {
            return Err(Error::Inconsistent("f is not nilpotent although f^l vanishes on v".into()));
        }
    }
    let mu = &p.q2pow(steps as i64) * &eta4;
    scalars.push(("p", CycNum::from_int(&p.ctx, steps as i64)));

    if !eta2.is_zero() {
        let root = checked_root(hints.mu1_root.as_ref(), &eta2, l)?;
        let canonical = Canonical { family: Family::M2, values: vec![("mu1^l", eta2), ("mu2", mu.clone())] };
        let spec = root.map(|mu1| FamilySpec::M2 { mu1, mu2: mu });
        return Ok(ClassifyResult { family: Family::M2, spec, canonical, scalars });
    }

    // s = length of the e-walk from u
    let mut s = 0u32;
    let mut t = u;
    while !is_zero_vec(&t) {
        s += 1;
        if s > l {
            return Err(Error::Inconsistent("e is not nilpotent although e^l vanishes on v".into()));
        }
        t = row_times(&t, &der.e);
    }
    if s != s_value(p, &mu)? {
        return Err(Error::Inconsistent(format!("e-walk has length {s}, expected {}", s_value(p, &mu)?)));
    }
    scalars.push(("s", CycNum::from_int(&p.ctx, s as i64)));
    let spec = FamilySpec::M3 { mu };
    Ok(ClassifyResult { family: Family::M3, canonical: canonical(&spec, p)?, spec: Some(spec), scalars })
}

fn nilpotent(r: &Rep, cs: &CentralScalars, hints: &Hints) -> Result<ClassifyResult> {
    let p = &r.params;
    let l = p.l();
    let done = |spec: FamilySpec, scalars: Vec<(&'static str, CycNum)>| -> Result<ClassifyResult> {
        Ok(ClassifyResult { family: spec.family(), canonical: canonical(&spec, p)?, spec: Some(spec), scalars })
    };

    if !p.beta.is_zero() {
        let scalars = vec![("zeta1", cs.x_l.clone()), ("zeta2", cs.omega.clone())];
        return done(FamilySpec::M4 { mu1: cs.x_l.clone(), mu2: cs.omega.clone() }, scalars);
    }
    if !p.gamma.is_zero() {
        let scalars = vec![("zeta1", cs.y_l.clone()), ("zeta2", cs.omega.clone())];
        return done(FamilySpec::M5 { mu1: cs.y_l.clone(), mu2: cs.omega.clone() }, scalars);
    }
    if p.alpha.is_zero() {
        return Err(Error::Unsupported("modules of A(0,0,0) with nilpotent z".into()));
    }

    let g = derived_operators(r).g;
    if g.pow(r.dim() as u64)?.is_zero() {
        if r.dim() != 1 {
            return Err(Error::Inconsistent("g nilpotent on a module of dimension > 1".into()));
        }
        return done(FamilySpec::M0 { a: r.x[(0, 0)].clone() }, vec![("zeta1", cs.x_l.clone())]);
    }
    let mut scalars = vec![("zeta1", cs.x_l.clone()), ("zeta3", cs.y_l.clone())];
    if cs.x_l.is_zero() {
        return done(FamilySpec::M7 { mu: cs.y_l.clone() }, scalars);
    }

    let g_l = g.pow(l as u64)?.is_scalar().ok_or_else(|| Error::NotSchurScalar("g^l".into()))?;
    scalars.push(("zeta2^l", g_l.clone()));
    let mu2 = match &hints.g_eigenvalue {
        Some(lambda) if eigenvector(&g, lambda).is_some() => Some(lambda.clone()),
        Some(lambda) => return Err(Error::HintRejected(format!("{lambda} is not an eigenvalue of g"))),
        None => None,
    };
    let root = checked_root(hints.mu1_root.as_ref(), &cs.x_l, l)?;
    let canonical = Canonical { family: Family::M6, values: vec![("mu1^l", cs.x_l.clone()), ("mu2^l", g_l)] };
    let spec = root.zip(mu2).map(|(mu1, mu2)| FamilySpec::M6 { mu1, mu2 });
    Ok(ClassifyResult { family: Family::M6, spec, canonical, scalars })
}
