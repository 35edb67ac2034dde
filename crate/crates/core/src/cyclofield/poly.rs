//! Dense univariate polynomials over the rationals, lowest degree first.
//!
//! Only what the field construction needs: trimming, products, long division
//! and the extended Euclidean algorithm.

use num_traits::{One, Zero};

use super::Rat;

pub type Poly = Vec<Rat>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &Poly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

pub fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(db)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (i, bi) in b.iter().enumerate().take(db + 1) {
            rem[shift + i] -= &c * bi;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Returns `(g, s)` with `g = gcd(a, m)` (monic) and `s·a ≡ g (mod m)`.
pub fn ext_gcd(a: &Poly, m: &Poly) -> (Poly, Poly) {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rat::one()]);
    trim(&mut r1);
    while degree(&r1).is_some() {
        let (q, r) = div_rem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // normalise to a monic gcd
    if let Some(d) = degree(&r0) {
        let inv = r0[d].recip();
        for c in r0.iter_mut() {
            *c *= &inv;
        }
        for c in s0.iter_mut() {
            *c *= &inv;
        }
    }
    (r0, s0)
}
