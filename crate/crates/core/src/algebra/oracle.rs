//! Reference multiplication by single-step rewriting.
//!
//! Only the three defining relations are used, each as a rule on an adjacent
//! pair of generators:
//!
//! ```text
//! zx -> q²xz - q²β,   zy -> q⁻²yz - q⁻²γ,   yx -> q⁻²xy - q⁻²α
//! ```
//!
//! A product is normalised by appending the generators of the right factor
//! one at a time to an already normal word and bubbling the new generator
//! left, one rule application per step. Every step strictly lowers the number
//! of inversions, so the process terminates.

use super::{AlgElem, Mono, Params};
use crate::cyclofield::CycNum;

/// Normal form of `x^a y^b z^c · x`.
fn append_x(p: &Params, m: Mono) -> AlgElem {
    let ctx = &p.ctx;
    if m.c > 0 {
        // ... z^{c-1} (zx) = q² (... z^{c-1} x) z - q²β (... z^{c-1})
        let rest = Mono::new(m.a, m.b, m.c - 1);
        append_x(p, rest)
            .mul_z_pow(1)
            .scale(&p.q2pow(1))
            .sub(&AlgElem::term(rest, &p.q2pow(1) * &p.beta))
    } else if m.b > 0 {
        // ... y^{b-1} (yx) = q⁻² (... y^{b-1} x) y - q⁻²α (... y^{b-1})
        let rest = Mono::new(m.a, m.b - 1, 0);
        append_x(p, rest)
            .map_monos(|t| Mono::new(t.a, t.b + 1, t.c))
            .scale(&p.q2pow(-1))
            .sub(&AlgElem::term(rest, &p.q2pow(-1) * &p.alpha))
    } else {
        AlgElem::mono(ctx, Mono::new(m.a + 1, 0, 0))
    }
}

/// Normal form of `x^a y^b z^c · y`.
fn append_y(p: &Params, m: Mono) -> AlgElem {
    if m.c > 0 {
        // ... z^{c-1} (zy) = q⁻² (... z^{c-1} y) z - q⁻²γ (... z^{c-1})
        let rest = Mono::new(m.a, m.b, m.c - 1);
        append_y(p, rest)
            .mul_z_pow(1)
            .scale(&p.q2pow(-1))
            .sub(&AlgElem::term(rest, &p.q2pow(-1) * &p.gamma))
    } else {
        AlgElem::mono(&p.ctx, Mono::new(m.a, m.b + 1, 0))
    }
}

fn append(p: &Params, u: &AlgElem, gen: u8) -> AlgElem {
    let mut out = AlgElem::zero(&p.ctx);
    for (m, c) in u.terms() {
        let step = match gen {
            b'x' => append_x(p, *m),
            b'y' => append_y(p, *m),
            _ => AlgElem::mono(&p.ctx, Mono::new(m.a, m.b, m.c + 1)),
        };
        for (t, k) in step.terms() {
            out.add_term(*t, c * k);
        }
    }
    out
}

pub(super) fn rewrite_mul(p: &Params, m1: Mono, m2: Mono) -> AlgElem {
    let mut acc = AlgElem::term(m1, CycNum::one(&p.ctx));
    let word = std::iter::repeat(b'x')
        .take(m2.a as usize)
        .chain(std::iter::repeat(b'y').take(m2.b as usize))
        .chain(std::iter::repeat(b'z').take(m2.c as usize));
    for g in word {
        acc = append(p, &acc, g);
    }
    acc
}
