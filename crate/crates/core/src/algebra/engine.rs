use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{AlgElem, Mono, Params};
use crate::cyclofield::CycNum;

/// Normal form of a two-generator product `u^i v^j` rewritten as
/// `Σ κ · v^r u^s`: a list of `(r, s, κ)`.
type Table = Arc<Vec<(u32, u32, CycNum)>>;

/// The three ways two generators can appear out of order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Swap {
    /// `z^c x^a` into `x^i z^j`
    ZX,
    /// `z^c y^b` into `y^i z^j`
    ZY,
    /// `y^b x^a` into `x^i y^j`
    YX,
}

/// Multiplication engine for A(α, β, γ).
///
/// Products of monomials are reordered with the closed-form identities
///
/// ```text
/// z^a x = q^{2a} x z^a - q² [a]β z^{a-1}
/// z^a y = q^{-2a} y z^a - q⁻² [a]' γ z^{a-1}
/// y^a x = q^{-2a} x y^a - q⁻² [a]' α y^{a-1}
/// ```
///
/// where `[a] = (1-q^{2a})/(1-q²)` and `[a]' = (1-q^{-2a})/(1-q^{-2})`,
/// iterated over powers of the right-hand generator. Reordering tables are
/// memoised per engine.
pub struct Algebra {
    params: Params,
    cache: Mutex<HashMap<(Swap, u32, u32), Table>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra").field("params", &self.params).finish()
    }
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::new(self.params.clone())
    }
}

impl Algebra {
    pub fn new(params: Params) -> Self {
        Algebra { params, cache: Mutex::new(HashMap::new()) }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    fn ctx(&self) -> &crate::cyclofield::Field {
        &self.params.ctx
    }

    /// Coefficients `(lead, tail)` of `w^c u = lead · u w^c + tail · w^{c-1}`.
    fn swap_coeffs(&self, kind: Swap, c: u32) -> (CycNum, CycNum) {
        let p = &self.params;
        let c = c as i64;
        match kind {
            Swap::ZX => (p.q2pow(c), -(&(&p.q2pow(1) * &CycNum::qint(&p.ctx, c)) * &p.beta)),
            Swap::ZY => (p.q2pow(-c), -(&(&p.q2pow(-1) * &CycNum::qint_inv(&p.ctx, c)) * &p.gamma)),
            Swap::YX => (p.q2pow(-c), -(&(&p.q2pow(-1) * &CycNum::qint_inv(&p.ctx, c)) * &p.alpha)),
        }
    }

    /// `w^c u^a` with `(w, u)` determined by `kind`, as `Σ κ u^r w^s`.
    fn table(&self, kind: Swap, c: u32, a: u32) -> Table {
        if let Some(t) = self.cache.lock().expect("cache lock").get(&(kind, c, a)) {
            return t.clone();
        }
        let one = CycNum::one(self.ctx());
        let out: Vec<(u32, u32, CycNum)> = if c == 0 {
            vec![(a, 0, one)]
        } else if a == 0 {
            vec![(0, c, one)]
        } else {
            // w^c u^a = (w^c u) u^{a-1} = lead · u (w^c u^{a-1}) + tail · w^{c-1} u^{a-1}
            let (lead, tail) = self.swap_coeffs(kind, c);
            let mut acc: HashMap<(u32, u32), CycNum> = HashMap::new();
            for (r, s, k) in self.table(kind, c, a - 1).iter() {
                let e = acc.entry((r + 1, *s)).or_insert_with(|| CycNum::zero(self.ctx()));
                *e += &(&lead * k);
            }
            if !tail.is_zero() {
                for (r, s, k) in self.table(kind, c - 1, a - 1).iter() {
                    let e = acc.entry((*r, *s)).or_insert_with(|| CycNum::zero(self.ctx()));
                    *e += &(&tail * k);
                }
            }
            let mut v: Vec<_> = acc.into_iter().filter(|(_, k)| !k.is_zero()).map(|((r, s), k)| (r, s, k)).collect();
            v.sort_by_key(|(r, s, _)| (*r, *s));
            v
        };
        let t = Arc::new(out);
        self.cache.lock().expect("cache lock").insert((kind, c, a), t.clone());
        t
    }

    /// Normal form of `(x^{a₁}y^{b₁}z^{c₁})(x^{a₂}y^{b₂}z^{c₂})`: `z^{c₁}` moves
    /// past `x^{a₂}`, the resulting z-power past `y^{b₂}`, then `y^{b₁}` past
    /// the resulting x-power.
    pub fn mono_mul(&self, m1: Mono, m2: Mono) -> AlgElem {
        let mut out = AlgElem::zero(self.ctx());
        for (i, j, k1) in self.table(Swap::ZX, m1.c, m2.a).iter() {
            let yx = self.table(Swap::YX, m1.b, *i);
            let zy = self.table(Swap::ZY, *j, m2.b);
            for (i2, j2, k2) in yx.iter() {
                let k12 = k1 * k2;
                for (i3, j3, k3) in zy.iter() {
                    out.add_term(Mono::new(m1.a + i2, j2 + i3, j3 + m2.c), &k12 * k3);
                }
            }
        }
        out
    }

    pub fn mul(&self, u: &AlgElem, v: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero(self.ctx());
        for (m1, c1) in u.terms() {
            for (m2, c2) in v.terms() {
                let c = c1 * c2;
                for (m, k) in self.mono_mul(*m1, *m2).terms() {
                    out.add_term(*m, &c * k);
                }
            }
        }
        out
    }

    pub fn pow(&self, u: &AlgElem, k: u32) -> AlgElem {
        let mut acc = AlgElem::one(self.ctx());
        for _ in 0..k {
            acc = self.mul(&acc, u);
        }
        acc
    }

    /// `uv - vu`.
    pub fn commutator(&self, u: &AlgElem, v: &AlgElem) -> AlgElem {
        self.mul(u, v).sub(&self.mul(v, u))
    }

    /// Whether `u` commutes with each of x, y, z.
    pub fn is_central(&self, u: &AlgElem) -> bool {
        let ctx = self.ctx();
        [AlgElem::x(ctx), AlgElem::y(ctx), AlgElem::z(ctx)]
            .iter()
            .all(|g| self.commutator(u, g).is_zero())
    }

    /// Single-step rewriting oracle for [`Algebra::mono_mul`].
    pub fn rewrite_oracle_mul(&self, m1: Mono, m2: Mono) -> AlgElem {
        super::oracle::rewrite_mul(&self.params, m1, m2)
    }

    /// Ω = yxz + q⁻²γ/(q²-1)·x - q²β/(q²-1)·y + α/(q²-1)·z.
    pub fn omega(&self) -> AlgElem {
        let p = &self.params;
        let ctx = self.ctx();
        let k = p.inv_q2_minus_1();
        let yxz = self.mul(&self.mul(&AlgElem::y(ctx), &AlgElem::x(ctx)), &AlgElem::z(ctx));
        yxz.add(&AlgElem::x(ctx).scale(&(&(&p.q2pow(-1) * &p.gamma) * &k)))
            .sub(&AlgElem::y(ctx).scale(&(&(&p.q2pow(1) * &p.beta) * &k)))
            .add(&AlgElem::z(ctx).scale(&(&p.alpha * &k)))
    }

    /// d = yx + α/(q²-1).
    pub fn d_elem(&self) -> AlgElem {
        let p = &self.params;
        let ctx = self.ctx();
        self.mul(&AlgElem::y(ctx), &AlgElem::x(ctx)).add(&AlgElem::scalar(&(&p.alpha * &p.inv_q2_minus_1())))
    }

    /// e = xz - q²β/(q²-1).
    pub fn e_elem(&self) -> AlgElem {
        let p = &self.params;
        let ctx = self.ctx();
        let shift = &(&p.q2pow(1) * &p.beta) * &p.inv_q2_minus_1();
        self.mul(&AlgElem::x(ctx), &AlgElem::z(ctx)).sub(&AlgElem::scalar(&shift))
    }

    /// f = yz + γ/(q²-1).
    pub fn f_elem(&self) -> AlgElem {
        let p = &self.params;
        let ctx = self.ctx();
        self.mul(&AlgElem::y(ctx), &AlgElem::z(ctx)).add(&AlgElem::scalar(&(&p.gamma * &p.inv_q2_minus_1())))
    }

    /// g = xy - yx.
    pub fn g_elem(&self) -> AlgElem {
        let ctx = self.ctx();
        self.commutator(&AlgElem::x(ctx), &AlgElem::y(ctx))
    }
}
