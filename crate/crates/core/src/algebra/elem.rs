use std::collections::BTreeMap;
use std::fmt;

use crate::cyclofield::{CycNum, Field};

/// The PBW monomial `x^a y^b z^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Mono { a, b, c }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (g, e) in [("x", self.a), ("y", self.b), ("z", self.c)] {
            match e {
                0 => {}
                1 => parts.push(g.to_string()),
                _ => parts.push(format!("{g}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(""))
        }
    }
}

/// An element in normal form: a finite map from monomials to nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem {
    ctx: Field,
    terms: BTreeMap<Mono, CycNum>,
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl AlgElem {
    pub fn zero(ctx: &Field) -> Self {
        AlgElem { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Field) -> Self {
        Self::scalar(&CycNum::one(ctx))
    }

    pub fn scalar(c: &CycNum) -> Self {
        Self::term(Mono::ONE, c.clone())
    }

    pub fn mono(ctx: &Field, m: Mono) -> Self {
        Self::term(m, CycNum::one(ctx))
    }

    pub fn term(m: Mono, c: CycNum) -> Self {
        let mut e = Self::zero(c.ctx());
        e.add_term(m, c);
        e
    }

    pub fn x(ctx: &Field) -> Self {
        Self::mono(ctx, Mono::new(1, 0, 0))
    }

    pub fn y(ctx: &Field) -> Self {
        Self::mono(ctx, Mono::new(0, 1, 0))
    }

    pub fn z(ctx: &Field) -> Self {
        Self::mono(ctx, Mono::new(0, 0, 1))
    }

    pub fn ctx(&self) -> &Field {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> CycNum {
        self.terms.get(m).cloned().unwrap_or_else(|| CycNum::zero(&self.ctx))
    }

    /// Adds `c·m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Mono, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        let mut out = Self::zero(&self.ctx);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(*m, v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-CycNum::one(&self.ctx))
    }

    /// Right multiplication by `z^k`, which never needs reordering.
    pub fn mul_z_pow(&self, k: u32) -> Self {
        self.map_monos(|m| Mono::new(m.a, m.b, m.c + k))
    }

    /// Left multiplication by `x^k`, which never needs reordering.
    pub fn x_pow_mul(&self, k: u32) -> Self {
        self.map_monos(|m| Mono::new(m.a + k, m.b, m.c))
    }

    pub(crate) fn map_monos(&self, f: impl Fn(&Mono) -> Mono) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Largest total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }
}
