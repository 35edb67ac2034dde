//! The simple module families M0–M7 and their isomorphism criteria.

use std::fmt;
use std::str::FromStr;

use super::Rep;
use crate::algebra::Params;
use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::linalg::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    M0,
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    M7,
}

impl Family {
    pub const ALL: [Family; 8] =
        [Family::M0, Family::M1, Family::M2, Family::M3, Family::M4, Family::M5, Family::M6, Family::M7];

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::M0 => &["a"],
            Family::M1 => &["mu1", "mu2", "mu3"],
            Family::M3 | Family::M7 => &["mu"],
            _ => &["mu1", "mu2"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}", *self as u8)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown family {s:?}, expected M0..M7") })
    }
}

/// A family tag together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    M0 { a: CycNum },
    M1 { mu1: CycNum, mu2: CycNum, mu3: CycNum },
    M2 { mu1: CycNum, mu2: CycNum },
    M3 { mu: CycNum },
    M4 { mu1: CycNum, mu2: CycNum },
    M5 { mu1: CycNum, mu2: CycNum },
    M6 { mu1: CycNum, mu2: CycNum },
    M7 { mu: CycNum },
}

impl FamilySpec {
    pub fn family(&self) -> Family {
        match self {
            FamilySpec::M0 { .. } => Family::M0,
            FamilySpec::M1 { .. } => Family::M1,
            FamilySpec::M2 { .. } => Family::M2,
            FamilySpec::M3 { .. } => Family::M3,
            FamilySpec::M4 { .. } => Family::M4,
            FamilySpec::M5 { .. } => Family::M5,
            FamilySpec::M6 { .. } => Family::M6,
            FamilySpec::M7 { .. } => Family::M7,
        }
    }

    /// Parameters in the order of [`Family::param_names`].
    pub fn values(&self) -> Vec<&CycNum> {
        match self {
            FamilySpec::M0 { a } => vec![a],
            FamilySpec::M1 { mu1, mu2, mu3 } => vec![mu1, mu2, mu3],
            FamilySpec::M3 { mu } | FamilySpec::M7 { mu } => vec![mu],
            FamilySpec::M2 { mu1, mu2 }
            | FamilySpec::M4 { mu1, mu2 }
            | FamilySpec::M5 { mu1, mu2 }
            | FamilySpec::M6 { mu1, mu2 } => vec![mu1, mu2],
        }
    }

    pub fn named(&self) -> Vec<(&'static str, &CycNum)> {
        self.family().param_names().iter().copied().zip(self.values()).collect()
    }

    /// Builds a spec from a parameter lookup; every name must be present.
    pub fn from_lookup(family: Family, mut get: impl FnMut(&str) -> Option<CycNum>) -> Result<Self> {
        let mut take = |name: &str| {
            get(name).ok_or_else(|| Error::Domain(format!("{family} needs parameter {name}")))
        };
        Ok(match family {
            Family::M0 => FamilySpec::M0 { a: take("a")? },
            Family::M1 => FamilySpec::M1 { mu1: take("mu1")?, mu2: take("mu2")?, mu3: take("mu3")? },
            Family::M2 => FamilySpec::M2 { mu1: take("mu1")?, mu2: take("mu2")? },
            Family::M3 => FamilySpec::M3 { mu: take("mu")? },
            Family::M4 => FamilySpec::M4 { mu1: take("mu1")?, mu2: take("mu2")? },
            Family::M5 => FamilySpec::M5 { mu1: take("mu1")?, mu2: take("mu2")? },
            Family::M6 => FamilySpec::M6 { mu1: take("mu1")?, mu2: take("mu2")? },
            Family::M7 => FamilySpec::M7 { mu: take("mu")? },
        })
    }
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(what.to_string()))
    }
}

fn check_domain(spec: &FamilySpec, p: &Params) -> Result<()> {
    for (name, v) in spec.named() {
        if v.ctx().order() != p.l() {
            return Err(Error::FieldMismatch { left: p.l(), right: v.ctx().order() });
        }
        let nonzero = matches!(
            (spec.family(), name),
            (Family::M0, _) | (Family::M1, "mu1" | "mu2") | (Family::M2, _) | (Family::M3, _) | (Family::M6, _)
        );
        require(!nonzero || !v.is_zero(), &format!("{} requires {name} != 0", spec.family()))?;
    }
    match spec.family() {
        Family::M4 => require(!p.beta.is_zero(), "M4 requires beta != 0"),
        Family::M5 => {
            require(p.beta.is_zero(), "M5 requires beta = 0")?;
            require(!p.gamma.is_zero(), "M5 requires gamma != 0")
        }
        f @ (Family::M0 | Family::M6 | Family::M7) => {
            require(p.beta.is_zero(), &format!("{f} requires beta = 0"))?;
            require(p.gamma.is_zero(), &format!("{f} requires gamma = 0"))?;
            require(!p.alpha.is_zero(), &format!("{f} requires alpha != 0"))
        }
        _ => Ok(()),
    }
}

/// `F(k, μ) = α q^{-2k} μ² - βγ/(q²-1)`.
pub(crate) fn f_poly(p: &Params, k: i64, mu: &CycNum) -> CycNum {
    &(&(&p.alpha * &p.q2pow(-k)) * &(mu * mu)) - &(&(&p.beta * &p.gamma) * &p.inv_q2_minus_1())
}

/// Dimension of the family-M3 module with parameter `mu`.
pub fn s_value(p: &Params, mu: &CycNum) -> Result<u32> {
    require(!mu.is_zero(), "M3 requires mu != 0")?;
    let bg_zero = p.beta.is_zero() || p.gamma.is_zero();
    if p.alpha.is_zero() && bg_zero {
        return Ok(1);
    }
    if !p.alpha.is_zero() && !bg_zero {
        if let Some(k) = (1..=p.l()).find(|&k| f_poly(p, k as i64, mu).is_zero()) {
            return Ok(k);
        }
    }
    Ok(p.l())
}

/// Matrices of the family module; row k holds the image of the basis vector m_k.
pub fn build_family(spec: &FamilySpec, p: &Params) -> Result<Rep> {
    check_domain(spec, p)?;
    let ctx = &p.ctx;
    let l = p.l() as usize;
    let q = |k: i64| p.q2pow(k);
    let qint = |k: usize| CycNum::qint(ctx, k as i64);
    let qint_inv = |k: usize| CycNum::qint_inv(ctx, k as i64);
    let km = p.inv_q2_minus_1();
    let inv = |c: &CycNum| c.inv().expect("nonzero by domain check");
    let dim = match spec {
        FamilySpec::M0 { .. } => 1,
        FamilySpec::M3 { mu } => s_value(p, mu)? as usize,
        _ => l,
    };
    let (mut x, mut y, mut z) = (Mat::zeros(ctx, dim, dim), Mat::zeros(ctx, dim, dim), Mat::zeros(ctx, dim, dim));
    let up = |k: usize| (k + 1) % l;
    let down = |k: usize| (k + l - 1) % l;

    match spec {
        FamilySpec::M0 { a } => {
            x[(0, 0)] = a.clone();
            y[(0, 0)] = -(&(&p.alpha * &km) * &inv(a));
        }
        FamilySpec::M1 { mu1, mu2, mu3 } => {
            let (i1, i2) = (inv(mu1), inv(mu2));
            let bgq = &(&(&p.beta * &p.gamma) * &q(1)) * &km;
            for k in 0..l {
                let ki = k as i64;
                let bracket = &(&q(ki) * mu3)
                    - &(&qint(k) * &(&(&(&q(ki - 1) * &p.alpha) * &(mu2 * mu2)) - &bgq));
                x[(k, down(k))] += &(&(&(&i1 * &i2) * &q(1 - ki)) * &bracket);
                x[(k, k)] += &(&(&(&i2 * &p.beta) * &(&q(1) * &km)) * &q(-ki));
                y[(k, up(k))] += &(&(mu1 * &i2) * &q(-(ki + 1)));
                y[(k, k)] -= &(&(&(&i2 * &p.gamma) * &km) * &q(-ki));
                z[(k, k)] = &q(ki) * mu2;
            }
        }
        FamilySpec::M2 { mu1, mu2 } => {
            let (i1, i2) = (inv(mu1), inv(mu2));
            for k in 0..l {
                let ki = k as i64;
                x[(k, up(k))] += &(&(mu1 * &i2) * &q(ki + 1));
                x[(k, k)] += &(&(&(&p.beta * &i2) * &(&q(1) * &km)) * &q(ki));
                if k != 0 {
                    let c = &(&(&(&i1 * &i2) * &q(ki - 1)) * &qint_inv(k)) * &f_poly(p, ki, mu2);
                    y[(k, k - 1)] += &c;
                }
                y[(k, k)] -= &(&(&(&p.gamma * &i2) * &km) * &q(ki));
                z[(k, k)] = &q(-ki) * mu2;
            }
        }
        FamilySpec::M3 { mu } => {
            let im = inv(mu);
            for k in 0..dim {
                let ki = k as i64;
                if k + 1 != dim {
                    x[(k, k + 1)] = &im * &q(ki + 1);
                }
                x[(k, k)] = &(&(&p.beta * &im) * &km) * &q(ki + 1);
                if k != 0 {
                    y[(k, k - 1)] = &(&(&im * &q(ki - 1)) * &qint_inv(k)) * &f_poly(p, ki, mu);
                }
                y[(k, k)] = -(&(&(&p.gamma * &im) * &km) * &q(ki));
                z[(k, k)] = &q(-ki) * mu;
            }
        }
        FamilySpec::M4 { mu1, mu2 } => {
            let ib = inv(&p.beta);
            for k in 0..l {
                let ki = k as i64;
                let wrap = if k == l - 1 { mu1.clone() } else { CycNum::one(ctx) };
                x[(k, up(k))] = wrap.clone();
                y[(k, up(k))] += &(&(&(&p.gamma * &ib) * &q(ki)) * &wrap);
                y[(k, k)] -= &(&(&(mu2 * &ib) * &q(ki)) * &(&q(1) - &CycNum::one(ctx)));
                if k != 0 {
                    y[(k, k - 1)] += &(&qint(k) * &p.alpha);
                    z[(k, k - 1)] = &p.beta * &qint_inv(k);
                }
            }
        }
        FamilySpec::M5 { mu1, mu2 } => {
            let ig = inv(&p.gamma);
            for k in 0..l {
                let ki = k as i64;
                x[(k, k)] = &(&(mu2 * &ig) * &q(-ki)) * &(&q(1) - &CycNum::one(ctx));
                if k != 0 {
                    x[(k, k - 1)] = -(&(&q(-1) * &p.alpha) * &qint_inv(k));
                    z[(k, k - 1)] = &p.gamma * &qint(k);
                }
                y[(k, up(k))] = if k == l - 1 { mu1.clone() } else { CycNum::one(ctx) };
            }
        }
        FamilySpec::M6 { mu1, mu2 } => {
            let i1 = inv(mu1);
            for k in 0..l {
                x[(k, up(k))] = mu1.clone();
                y[(k, down(k))] = &(&i1 * &(&(&q(k as i64) * mu2) - &p.alpha)) * &km;
            }
        }
        FamilySpec::M7 { mu } => {
            for k in 0..l {
                if k != 0 {
                    x[(k, k - 1)] = -(&(&q(-1) * &p.alpha) * &qint_inv(k));
                }
                y[(k, up(k))] = if k == l - 1 { mu.clone() } else { CycNum::one(ctx) };
            }
        }
    }
    Rep::new(p.clone(), x, y, z)
}

/// The data an isomorphism class depends on, as named values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub family: Family,
    pub values: Vec<(&'static str, CycNum)>,
}

fn pow_l(p: &Params, c: &CycNum) -> CycNum {
    c.pow(p.l() as i64).expect("non-negative power")
}

/// The M1 pair `(μ₂, μ₃)` transported by `q^{2i}`; these are exactly the
/// pairs giving isomorphic modules for a fixed `μ₁^l`.
pub(crate) fn m1_orbit(p: &Params, mu2: &CycNum, mu3: &CycNum) -> Vec<(CycNum, CycNum)> {
    let km = p.inv_q2_minus_1();
    let bgq = &(&(&p.beta * &p.gamma) * &p.q2pow(1)) * &km;
    (0..p.l() as i64)
        .map(|i| {
            let qi = p.q2pow(i);
            let shift = &(&(&qi - &CycNum::one(&p.ctx)) * &km)
                * &(&bgq - &(&(&p.q2pow(i - 1) * &p.alpha) * &(mu2 * mu2)));
            (&qi * mu2, &(&qi * mu3) + &shift)
        })
        .collect()
}

pub(crate) fn m1_canonical(p: &Params, mu1_l: CycNum, mu2: &CycNum, mu3: &CycNum) -> Canonical {
    let (m2, m3) = m1_orbit(p, mu2, mu3).into_iter().min_by(|a, b| a.0.lex_cmp(&b.0)).expect("l >= 2");
    Canonical { family: Family::M1, values: vec![("mu1^l", mu1_l), ("mu2", m2), ("mu3", m3)] }
}

pub fn canonical(spec: &FamilySpec, p: &Params) -> Result<Canonical> {
    check_domain(spec, p)?;
    let family = spec.family();
    let values = match spec {
        FamilySpec::M0 { a } => vec![("a", a.clone())],
        FamilySpec::M1 { mu1, mu2, mu3 } => return Ok(m1_canonical(p, pow_l(p, mu1), mu2, mu3)),
        FamilySpec::M2 { mu1, mu2 } => vec![("mu1^l", pow_l(p, mu1)), ("mu2", mu2.clone())],
        FamilySpec::M3 { mu } => vec![("mu", mu.clone()), ("s", CycNum::from_int(&p.ctx, s_value(p, mu)? as i64))],
        FamilySpec::M4 { mu1, mu2 } | FamilySpec::M5 { mu1, mu2 } => vec![("mu1", mu1.clone()), ("mu2", mu2.clone())],
        FamilySpec::M6 { mu1, mu2 } => vec![("mu1^l", pow_l(p, mu1)), ("mu2^l", pow_l(p, mu2))],
        FamilySpec::M7 { mu } => vec![("mu", mu.clone())],
    };
    Ok(Canonical { family, values })
}

/// Decides isomorphism of two family modules from their parameters alone,
/// with a short reason.
pub fn iso_by_criterion(s1: &FamilySpec, s2: &FamilySpec, p: &Params) -> Result<(bool, String)> {
    check_domain(s1, p)?;
    check_domain(s2, p)?;
    if s1.family() != s2.family() {
        return Ok((false, format!("different families {} and {}", s1.family(), s2.family())));
    }
    let same_l = |a: &CycNum, b: &CycNum| pow_l(p, a) == pow_l(p, b);
    let verdict = match (s1, s2) {
        (FamilySpec::M0 { a }, FamilySpec::M0 { a: b }) => (a == b, "a = a'".to_string()),
        (FamilySpec::M1 { mu1, mu2, mu3 }, FamilySpec::M1 { mu1: n1, mu2: n2, mu3: n3 }) => {
            if !same_l(mu1, n1) {
                (false, "mu1^l differs".into())
            } else {
                match m1_orbit(p, n2, n3).iter().position(|(a, b)| a == mu2 && b == mu3) {
                    Some(i) => (true, format!("mu1^l agrees; (mu2, mu3) matches with i = {i}")),
                    None => (false, "no i relates (mu2, mu3) to (mu2', mu3')".into()),
                }
            }
        }
        (FamilySpec::M2 { mu1, mu2 }, FamilySpec::M2 { mu1: n1, mu2: n2 }) => {
            (same_l(mu1, n1) && mu2 == n2, "mu1^l = mu1'^l and mu2 = mu2'".into())
        }
        (FamilySpec::M3 { mu }, FamilySpec::M3 { mu: nu }) => {
            if s_value(p, mu)? != s_value(p, nu)? {
                (false, "dimensions differ".into())
            } else {
                (mu == nu, "mu = mu'".into())
            }
        }
        (FamilySpec::M4 { mu1, mu2 }, FamilySpec::M4 { mu1: n1, mu2: n2 })
        | (FamilySpec::M5 { mu1, mu2 }, FamilySpec::M5 { mu1: n1, mu2: n2 }) => {
            (mu1 == n1 && mu2 == n2, "mu1 = mu1' and mu2 = mu2'".into())
        }
        (FamilySpec::M6 { mu1, mu2 }, FamilySpec::M6 { mu1: n1, mu2: n2 }) => {
            let hit = (0..p.l() as i64).position(|i| *mu2 == &p.q2pow(i) * n2);
            match (same_l(mu1, n1), hit) {
                (true, Some(i)) => (true, format!("mu1^l agrees; mu2 = q^(2*{i}) mu2'")),
                (false, _) => (false, "mu1^l differs".into()),
                (true, None) => (false, "mu2 not in the q^2-orbit of mu2'".into()),
            }
        }
        (FamilySpec::M7 { mu }, FamilySpec::M7 { mu: nu }) => (mu == nu, "mu = mu'".into()),
        _ => unreachable!("families compared above"),
    };
    Ok(verdict)
}
