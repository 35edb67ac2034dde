//! Exact arithmetic in the cyclotomic field ℚ(ζ), where ζ is a primitive
//! `l`-th root of unity standing for q².
//!
//! Elements are stored densely as residues modulo the `l`-th cyclotomic
//! polynomial Φ_l, so equal values always have identical coefficient lists.

mod literal;
pub mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use poly::Poly;

pub use literal::{format_literal, parse_literal};

pub type Rat = num_rational::BigRational;

/// Largest supported order. Keeps the power tables and brute-force
/// enumerations small.
pub const MAX_ORDER: u32 = 64;

/// Shared description of ℚ(ζ_l).
#[derive(Debug)]
pub struct FieldCtx {
    l: u32,
    phi: Poly,
    degree: usize,
    /// `t^(degree + j) mod Φ_l` for `j < degree - 1`.
    reduction: Vec<Vec<Rat>>,
    /// `ζ^k` for `0 <= k < l`.
    powers: Vec<Vec<Rat>>,
}

pub type Field = Arc<FieldCtx>;

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.l == other.l
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds ℚ(ζ_l). Φ_l is obtained by dividing `t^l - 1` by Φ_d for every
    /// proper divisor `d` of `l`.
    pub fn new(l: i64) -> Result<Field> {
        if l < 2 || l > MAX_ORDER as i64 {
            return Err(Error::InvalidOrder(l));
        }
        let l = l as u32;
        let phi = cyclotomic_poly(l);
        let degree = phi.len() - 1;

        let mut reduction = Vec::new();
        // t^degree = -(phi_0 + ... + phi_{deg-1} t^{deg-1})
        let mut cur: Vec<Rat> = phi[..degree].iter().map(|c| -c).collect();
        for _ in 0..degree.saturating_sub(1) {
            reduction.push(cur.clone());
            cur = times_t(&cur, &phi);
        }

        let mut ctx = FieldCtx { l, phi, degree, reduction, powers: Vec::new() };
        let mut p = vec![Rat::zero(); degree];
        p[0] = Rat::one();
        for _ in 0..l {
            ctx.powers.push(p.clone());
            p = times_t(&p, &ctx.phi);
        }
        Ok(Arc::new(ctx))
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    /// Φ_l, lowest degree first (monic).
    pub fn phi(&self) -> &[Rat] {
        &self.phi
    }

    /// φ(l) = [ℚ(ζ_l) : ℚ].
    pub fn degree(&self) -> usize {
        self.degree
    }

    fn reduce_product(&self, prod: &[Rat]) -> Vec<Rat> {
        let d = self.degree;
        let mut out: Vec<Rat> = prod.iter().take(d).cloned().collect();
        out.resize(d, Rat::zero());
        for (j, c) in prod.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.reduction[j - d]) {
                *o += c * r;
            }
        }
        out
    }

    fn reduce_poly(&self, p: &[Rat]) -> Vec<Rat> {
        let (_, mut r) = poly::div_rem(&p.to_vec(), &self.phi);
        r.resize(self.degree, Rat::zero());
        r
    }
}

fn times_t(p: &[Rat], phi: &[Rat]) -> Vec<Rat> {
    let d = p.len();
    let top = p[d - 1].clone();
    let mut out = vec![Rat::zero(); d];
    for i in (1..d).rev() {
        out[i] = p[i - 1].clone();
    }
    if !top.is_zero() {
        for (o, c) in out.iter_mut().zip(phi) {
            *o -= &top * c;
        }
    }
    out
}

fn cyclotomic_poly(l: u32) -> Poly {
    let mut num: Poly = vec![Rat::zero(); l as usize + 1];
    num[0] = -Rat::one();
    num[l as usize] = Rat::one();
    for d in (1..l).filter(|d| l % d == 0) {
        let (q, r) = poly::div_rem(&num, &cyclotomic_poly(d));
        debug_assert!(r.is_empty());
        num = q;
    }
    num
}

/// An element of ℚ(ζ_l).
#[derive(Clone)]
pub struct CycNum {
    ctx: Field,
    coeffs: Vec<Rat>,
}

impl CycNum {
    pub fn zero(ctx: &Field) -> Self {
        CycNum { ctx: ctx.clone(), coeffs: vec![Rat::zero(); ctx.degree] }
    }

    pub fn one(ctx: &Field) -> Self {
        Self::from_rat(ctx, Rat::one())
    }

    pub fn from_int(ctx: &Field, n: i64) -> Self {
        Self::from_rat(ctx, Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_rat(ctx: &Field, r: Rat) -> Self {
        let mut z = Self::zero(ctx);
        z.coeffs[0] = r;
        z
    }

    /// Builds an element from an arbitrary-length polynomial in ζ, reducing
    /// modulo Φ_l.
    pub fn from_poly(ctx: &Field, p: &[Rat]) -> Self {
        CycNum { ctx: ctx.clone(), coeffs: ctx.reduce_poly(p) }
    }

    /// Builds an element from exactly φ(l) coefficients.
    pub fn from_coeffs(ctx: &Field, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != ctx.degree {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coefficients, got {}",
                ctx.degree,
                coeffs.len()
            )));
        }
        Ok(CycNum { ctx: ctx.clone(), coeffs })
    }

    /// ζ itself, i.e. q².
    pub fn zeta(ctx: &Field) -> Self {
        Self::q2pow(ctx, 1)
    }

    /// ζ^k = q^(2k) for any integer `k`.
    pub fn q2pow(ctx: &Field, k: i64) -> Self {
        let idx = k.rem_euclid(ctx.l as i64) as usize;
        CycNum { ctx: ctx.clone(), coeffs: ctx.powers[idx].clone() }
    }

    /// The quantum integer (1 - q^(2a)) / (1 - q²).
    pub fn qint(ctx: &Field, a: i64) -> Self {
        let one = Self::one(ctx);
        let num = &one - &Self::q2pow(ctx, a);
        let den = &one - &Self::zeta(ctx);
        &num * &den.inv().expect("1 - q^2 is nonzero for l >= 2")
    }

    /// The mirrored quantum integer (1 - q^(-2a)) / (1 - q^(-2)).
    pub fn qint_inv(ctx: &Field, a: i64) -> Self {
        let one = Self::one(ctx);
        let num = &one - &Self::q2pow(ctx, -a);
        let den = &one - &Self::q2pow(ctx, -1);
        &num * &den.inv().expect("1 - q^-2 is nonzero for l >= 2")
    }

    pub fn ctx(&self) -> &Field {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Returns the rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ctx.l == other.ctx.l {
            Ok(())
        } else {
            Err(Error::FieldMismatch { left: self.ctx.l, right: other.ctx.l })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycNum { ctx: self.ctx.clone(), coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycNum { ctx: self.ctx.clone(), coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let d = self.ctx.degree;
        let mut prod = vec![Rat::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(CycNum { ctx: self.ctx.clone(), coeffs: self.ctx.reduce_product(&prod) })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_l.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rat(&self.ctx, r.recip()));
        }
        let (g, s) = poly::ext_gcd(&self.coeffs, &self.ctx.phi);
        // Φ_l is irreducible, so any nonzero residue is coprime to it.
        debug_assert_eq!(g.len(), 1);
        Ok(Self::from_poly(&self.ctx, &s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Total order on coefficient lists (lowest degree first, rationals in
    /// their natural order). Used to pick canonical orbit representatives.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.coeffs.iter().cmp(other.coeffs.iter())
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.l == other.ctx.l && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[l={}]({})", self.ctx.l, format_literal(self))
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_literal(self))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("arithmetic across different cyclotomic fields")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
        impl $assign_tr<&CycNum> for CycNum {
            fn $assign(&mut self, rhs: &CycNum) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

forward_binop!(Add, add, checked_add, AddAssign, add_assign);
forward_binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, checked_mul, MulAssign, mul_assign);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(cs: &[i64]) -> Vec<Rat> {
        cs.iter().map(|&c| Rat::from_integer(c.into())).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(FieldCtx::new(2).unwrap().phi(), ints(&[1, 1]).as_slice());
        assert_eq!(FieldCtx::new(4).unwrap().phi(), ints(&[1, 0, 1]).as_slice());
        assert_eq!(FieldCtx::new(6).unwrap().phi(), ints(&[1, -1, 1]).as_slice());
        assert_eq!(FieldCtx::new(12).unwrap().degree(), 4);
        assert_eq!(FieldCtx::new(7).unwrap().degree(), 6);
    }

    #[test]
    fn rejects_small_orders() {
        assert_eq!(FieldCtx::new(1).unwrap_err(), Error::InvalidOrder(1));
        assert!(FieldCtx::new(0).is_err());
        assert!(FieldCtx::new(-3).is_err());
    }

    #[test]
    fn zeta_products() {
        for l in 2..=9 {
            let f = FieldCtx::new(l).unwrap();
            let z = CycNum::zeta(&f);
            assert!((&z * &CycNum::q2pow(&f, l - 1)).is_one());
            for k in 1..l {
                assert!(!CycNum::q2pow(&f, k).is_one());
            }
            assert!(z.pow(l).unwrap().is_one());
        }
        let f4 = FieldCtx::new(4).unwrap();
        let z = CycNum::zeta(&f4);
        assert_eq!(&z * &z, CycNum::from_int(&f4, -1));
        let f6 = FieldCtx::new(6).unwrap();
        let z = CycNum::zeta(&f6);
        assert_eq!(&z * &z, &z - &CycNum::one(&f6));
    }

    #[test]
    fn inverses() {
        let f4 = FieldCtx::new(4).unwrap();
        let z = CycNum::zeta(&f4);
        let one = CycNum::one(&f4);
        let half = Rat::new(1.into(), 2.into());
        let expected = (&one - &z).scale(&half);
        assert_eq!((&one + &z).inv().unwrap(), expected);
        assert_eq!(one.inv().unwrap(), one);
        assert_eq!(z.inv().unwrap(), CycNum::q2pow(&f4, 3));
        assert_eq!(CycNum::zero(&f4).inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn q2pow_and_qint() {
        let f2 = FieldCtx::new(2).unwrap();
        assert_eq!(CycNum::q2pow(&f2, 3), CycNum::from_int(&f2, -1));
        assert!(CycNum::q2pow(&f2, 0).is_one());
        let f5 = FieldCtx::new(5).unwrap();
        assert_eq!(CycNum::q2pow(&f5, -1), CycNum::q2pow(&f5, 4));
        assert!(CycNum::qint(&f5, 1).is_one());
        assert!(CycNum::qint(&f5, 5).is_zero());
        let f4 = FieldCtx::new(4).unwrap();
        assert_eq!(CycNum::qint(&f4, 2), &CycNum::one(&f4) + &CycNum::zeta(&f4));
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = CycNum::one(&FieldCtx::new(3).unwrap());
        let b = CycNum::one(&FieldCtx::new(4).unwrap());
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::FieldMismatch { left: 3, right: 4 });
        assert!(a.checked_mul(&b).is_err());
    }
}
