//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use qweyl::algebra::Params;
use qweyl::cyclofield::{CycNum, Field, Rat};
use qweyl::repmods::{Family, FamilySpec};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

/// A random element of Q(q²) with small numerators and denominators.
pub fn scalar(ctx: &Field, rng: &mut TestRng) -> CycNum {
    let coeffs = (0..ctx.degree())
        .map(|_| Rat::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into()))
        .collect();
    CycNum::from_coeffs(ctx, coeffs).unwrap()
}

pub fn nonzero(ctx: &Field, rng: &mut TestRng) -> CycNum {
    loop {
        let c = scalar(ctx, rng);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn q2(ctx: &Field, k: i64) -> CycNum {
    CycNum::q2pow(ctx, k)
}

/// Parameters suited to `family`; `variant` selects among the special cases
/// of M3 (generic, s < l via a root of F, α = βγ = 0).
pub fn params_for(ctx: &Field, family: Family, variant: usize, rng: &mut TestRng) -> Params {
    let zero = CycNum::zero(ctx);
    let (a, b, g) = match family {
        Family::M0 | Family::M6 | Family::M7 => (nonzero(ctx, rng), zero.clone(), zero),
        Family::M4 => (scalar(ctx, rng), nonzero(ctx, rng), scalar(ctx, rng)),
        Family::M5 => (scalar(ctx, rng), zero, nonzero(ctx, rng)),
        Family::M3 if variant % 3 == 2 => {
            let (b, g) = if rng.gen() { (scalar(ctx, rng), zero.clone()) } else { (zero.clone(), scalar(ctx, rng)) };
            (zero, b, g)
        }
        _ => (nonzero(ctx, rng), nonzero(ctx, rng), nonzero(ctx, rng)),
    };
    Params::new(ctx, a, b, g).unwrap()
}

/// An M3 spec whose dimension is `s`, made by solving F(s, μ) = 0 for γ.
pub fn m3_with_s(ctx: &Field, s: u32, rng: &mut TestRng) -> (Params, FamilySpec) {
    let (alpha, beta, mu) = (nonzero(ctx, rng), nonzero(ctx, rng), nonzero(ctx, rng));
    let one = CycNum::one(ctx);
    // γ = α μ² q^{-2s} (q² - 1) / β
    let gamma = &(&(&(&alpha * &(&mu * &mu)) * &q2(ctx, -(s as i64))) * &(&q2(ctx, 1) - &one)) * &beta.inv().unwrap();
    (Params::new(ctx, alpha, beta, gamma).unwrap(), FamilySpec::M3 { mu })
}

/// Random parameters of `family` valid over `p`.
pub fn spec_for(family: Family, p: &Params, rng: &mut TestRng) -> FamilySpec {
    let ctx = &p.ctx;
    let mut nz = || nonzero(ctx, rng);
    match family {
        Family::M0 => FamilySpec::M0 { a: nz() },
        Family::M1 => FamilySpec::M1 { mu1: nz(), mu2: nz(), mu3: scalar(ctx, rng) },
        Family::M2 => FamilySpec::M2 { mu1: nz(), mu2: nz() },
        Family::M3 => FamilySpec::M3 { mu: nz() },
        Family::M4 => FamilySpec::M4 { mu1: scalar(ctx, rng), mu2: scalar(ctx, rng) },
        Family::M5 => FamilySpec::M5 { mu1: scalar(ctx, rng), mu2: scalar(ctx, rng) },
        Family::M6 => FamilySpec::M6 { mu1: nz(), mu2: nz() },
        Family::M7 => FamilySpec::M7 { mu: scalar(ctx, rng) },
    }
}

/// One grid point of `family`; index `i` cycles through the M3 special cases.
pub fn family_point(ctx: &Field, family: Family, i: usize, rng: &mut TestRng) -> (Params, FamilySpec) {
    let l = ctx.order();
    if family == Family::M3 && i % 3 == 1 && l > 1 {
        let s = rng.gen_range(1..l);
        return m3_with_s(ctx, s, rng);
    }
    let p = params_for(ctx, family, i, rng);
    let spec = spec_for(family, &p, rng);
    (p, spec)
}

/// A spec isomorphic to `spec` by the parameter criterion, with the
/// parameters moved as far as the criterion allows.
pub fn iso_partner(spec: &FamilySpec, p: &Params, rng: &mut TestRng) -> FamilySpec {
    let ctx = &p.ctx;
    let l = ctx.order() as i64;
    let j = rng.gen_range(0..l);
    let i = rng.gen_range(0..l);
    match spec {
        FamilySpec::M1 { mu1, mu2, mu3 } => {
            // μ₂ = q^{2i} μ₂', μ₃ = q^{2i} μ₃' + [i] (βγq²/(q²-1) - q^{2i-2} α μ₂'²)
            let one = CycNum::one(ctx);
            let km = (&q2(ctx, 1) - &one).inv().unwrap();
            let qi = q2(ctx, i);
            let bgq = &(&(&p.beta * &p.gamma) * &q2(ctx, 1)) * &km;
            let shift = &(&(&qi - &one) * &km) * &(&bgq - &(&(&q2(ctx, i - 1) * &p.alpha) * &(mu2 * mu2)));
            FamilySpec::M1 { mu1: &q2(ctx, j) * mu1, mu2: &qi * mu2, mu3: &(&qi * mu3) + &shift }
        }
        FamilySpec::M2 { mu1, mu2 } => FamilySpec::M2 { mu1: &q2(ctx, j) * mu1, mu2: mu2.clone() },
        FamilySpec::M6 { mu1, mu2 } => FamilySpec::M6 { mu1: &q2(ctx, j) * mu1, mu2: &q2(ctx, i) * mu2 },
        other => other.clone(),
    }
}
