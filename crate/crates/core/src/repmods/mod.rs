//! Finite-dimensional right modules over A(α, β, γ) given by matrices.
//!
//! A module of dimension d is a triple of d×d matrices `X, Y, Z`; vectors are
//! rows and `v·x` is `v·X`, so the relation `xy = q²yx + α` reads
//! `X·Y = q²·Y·X + α·I`.

mod classify;
mod family;

pub use classify::{classify, ClassifyResult, Hints};
pub use family::{build_family, canonical, iso_by_criterion, s_value, Canonical, Family, FamilySpec};

use rand::Rng;

use crate::algebra::Params;
use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::linalg::{Mat, SpanBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    pub params: Params,
    pub x: Mat,
    pub y: Mat,
    pub z: Mat,
}

impl Rep {
    pub fn new(params: Params, x: Mat, y: Mat, z: Mat) -> Result<Self> {
        let d = x.rows();
        for m in [&x, &y, &z] {
            if !m.is_square() || m.rows() != d {
                return Err(Error::DimensionMismatch("X, Y, Z must be square of one size".into()));
            }
            if m.ctx().order() != params.l() {
                return Err(Error::FieldMismatch { left: params.l(), right: m.ctx().order() });
            }
        }
        if d == 0 {
            return Err(Error::DimensionMismatch("a module needs dimension at least 1".into()));
        }
        Ok(Rep { params, x, y, z })
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn generators(&self) -> [&Mat; 3] {
        [&self.x, &self.y, &self.z]
    }

    fn scalar(&self, c: &CycNum) -> Mat {
        Mat::scalar(&self.params.ctx, self.dim(), c)
    }

    /// Direct sum `self ⊕ other`, block diagonal.
    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        if self.params != other.params {
            return Err(Error::Domain("direct sum of modules over different algebras".into()));
        }
        let (d1, d2) = (self.dim(), other.dim());
        let ctx = &self.params.ctx;
        let block = |a: &Mat, b: &Mat| {
            let mut m = Mat::zeros(ctx, d1 + d2, d1 + d2);
            for i in 0..d1 {
                for j in 0..d1 {
                    m[(i, j)] = a[(i, j)].clone();
                }
            }
            for i in 0..d2 {
                for j in 0..d2 {
                    m[(d1 + i, d1 + j)] = b[(i, j)].clone();
                }
            }
            m
        };
        Rep::new(self.params.clone(), block(&self.x, &other.x), block(&self.y, &other.y), block(&self.z, &other.z))
    }
}

/// Names of the defining relations that fail on `r`.
pub fn failed_relations(r: &Rep) -> Vec<&'static str> {
    let p = &r.params;
    let q2 = p.q2pow(1);
    let qm2 = p.q2pow(-1);
    let lhs_rhs = [
        ("xy = q^2 yx + alpha", (&r.x, &r.y), (&r.y, &r.x), &q2, &p.alpha),
        ("xz = q^-2 zx + beta", (&r.x, &r.z), (&r.z, &r.x), &qm2, &p.beta),
        ("yz = q^2 zy + gamma", (&r.y, &r.z), (&r.z, &r.y), &q2, &p.gamma),
    ];
    let mut bad = Vec::new();
    for (name, (a, b), (c, d), factor, shift) in lhs_rhs {
        let lhs = a.mul(b).expect("square");
        let rhs = c.mul(d).expect("square").scale(factor).add(&r.scalar(shift)).expect("square");
        if lhs != rhs {
            bad.push(name);
        }
    }
    bad
}

pub fn check_relations(r: &Rep) -> bool {
    failed_relations(r).is_empty()
}

/// Matrices of e, f, d, g and Ω on a module.
#[derive(Clone, Debug)]
pub struct Derived {
    pub e: Mat,
    pub f: Mat,
    pub d: Mat,
    pub g: Mat,
    pub omega: Mat,
}

pub fn derived_operators(r: &Rep) -> Derived {
    let p = &r.params;
    let k = p.inv_q2_minus_1();
    let prod = |a: &Mat, b: &Mat| a.mul(b).expect("square");
    let sum = |a: Mat, b: &Mat| a.add(b).expect("square");

    let e = sum(prod(&r.x, &r.z), &r.scalar(&-(&(&p.q2pow(1) * &p.beta) * &k)));
    let f = sum(prod(&r.y, &r.z), &r.scalar(&(&p.gamma * &k)));
    let d = sum(prod(&r.y, &r.x), &r.scalar(&(&p.alpha * &k)));
    let g = prod(&r.x, &r.y).sub(&prod(&r.y, &r.x)).expect("square");
    let omega = sum(
        sum(prod(&r.z, &d), &r.x.scale(&(&p.gamma * &k))),
        &r.y.scale(&-(&p.beta * &k)),
    );
    Derived { e, f, d, g, omega }
}

/// Scalars by which the central elements `x^l, y^l, z^l, Ω` act.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralScalars {
    pub x_l: CycNum,
    pub y_l: CycNum,
    pub z_l: CycNum,
    pub omega: CycNum,
}

pub fn central_scalars(r: &Rep) -> Result<CentralScalars> {
    let l = r.params.l() as u64;
    let read = |m: Mat, name: &str| m.is_scalar().ok_or_else(|| Error::NotSchurScalar(name.into()));
    Ok(CentralScalars {
        x_l: read(r.x.pow(l)?, "x^l")?,
        y_l: read(r.y.pow(l)?, "y^l")?,
        z_l: read(r.z.pow(l)?, "z^l")?,
        omega: read(derived_operators(r).omega, "omega")?,
    })
}

/// Dimension of the algebra of matrices generated by `I, X, Y, Z`.
pub fn generated_algebra_dim(r: &Rep) -> usize {
    let d = r.dim();
    let ctx = &r.params.ctx;
    let mut basis = SpanBasis::new(ctx, d * d);
    let id = Mat::identity(ctx, d);
    basis.insert(id.entries()).expect("length d²");
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in r.generators() {
            let next = m.mul(g).expect("square");
            if basis.insert(next.entries()).expect("length d²") {
                if basis.dim() == d * d {
                    return d * d;
                }
                frontier.push(next);
            }
        }
    }
    basis.dim()
}

/// Simplicity by Burnside: the action generates the full matrix algebra.
pub fn is_simple_burnside(r: &Rep) -> bool {
    generated_algebra_dim(r) == r.dim() * r.dim()
}

/// Basis of the module maps `P` with `X₁P = PX₂`, `Y₁P = PY₂`, `Z₁P = PZ₂`.
pub fn intertwiner_space(r1: &Rep, r2: &Rep) -> Result<Vec<Mat>> {
    if r1.params != r2.params {
        return Err(Error::Domain("intertwiners between modules over different algebras".into()));
    }
    let ctx = &r1.params.ctx;
    let (d1, d2) = (r1.dim(), r2.dim());
    let unknowns = d1 * d2;
    // rows: unknowns P[a][b] at a*d2 + b; columns: one equation per (generator, i, j)
    let mut sys = Mat::zeros(ctx, unknowns, 3 * unknowns);
    for (g, (a1, a2)) in [(&r1.x, &r2.x), (&r1.y, &r2.y), (&r1.z, &r2.z)].into_iter().enumerate() {
        for i in 0..d1 {
            for j in 0..d2 {
                let eq = g * unknowns + i * d2 + j;
                for k in 0..d1 {
                    let c = &a1[(i, k)];
                    if !c.is_zero() {
                        sys[(k * d2 + j, eq)] += c;
                    }
                }
                for k in 0..d2 {
                    let c = &a2[(k, j)];
                    if !c.is_zero() {
                        sys[(i * d2 + k, eq)] -= c;
                    }
                }
            }
        }
    }
    Ok(sys
        .kernel()
        .into_iter()
        .map(|v| {
            let rows = v.chunks(d2).map(<[CycNum]>::to_vec).collect();
            Mat::from_rows(ctx, rows).expect("d1×d2")
        })
        .collect())
}

/// The module transported along `P`: every generator becomes `P⁻¹·M·P`.
pub fn conjugate(r: &Rep, p: &Mat) -> Result<Rep> {
    if !p.is_square() || p.rows() != r.dim() {
        return Err(Error::DimensionMismatch("conjugating matrix must be d×d".into()));
    }
    let inv = p.inverse()?;
    let t = |m: &Mat| inv.mul(m).and_then(|a| a.mul(p));
    Rep::new(r.params.clone(), t(&r.x)?, t(&r.y)?, t(&r.z)?)
}

/// A random invertible matrix with small integer entries.
pub fn random_invertible<R: Rng>(ctx: &crate::cyclofield::Field, n: usize, rng: &mut R) -> Mat {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| CycNum::from_int(ctx, rng.gen_range(-3..=3))).collect())
            .collect();
        let m = Mat::from_rows(ctx, rows).expect("n×n");
        if m.determinant_is_nonzero() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests;
