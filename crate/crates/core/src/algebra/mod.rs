//! The algebra A(α, β, γ) generated by x, y, z subject to
//!
//! ```text
//! xy = q²yx + α,   xz = q⁻²zx + β,   yz = q²zy + γ
//! ```
//!
//! Elements are kept in PBW normal form, i.e. as linear combinations of the
//! ordered monomials `x^a y^b z^c`.

mod elem;
mod engine;
pub mod identities;
mod oracle;

pub use elem::{AlgElem, Mono};
pub use engine::Algebra;
pub use identities::{verify_identity_suite, IdentityCheck, IdentityReport};

use crate::cyclofield::{CycNum, Field};
use crate::error::{Error, Result};

/// Structure constants α, β, γ together with the field they live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub ctx: Field,
    pub alpha: CycNum,
    pub beta: CycNum,
    pub gamma: CycNum,
}

impl Params {
    pub fn new(ctx: &Field, alpha: CycNum, beta: CycNum, gamma: CycNum) -> Result<Self> {
        for s in [&alpha, &beta, &gamma] {
            if s.ctx().order() != ctx.order() {
                return Err(Error::FieldMismatch { left: ctx.order(), right: s.ctx().order() });
            }
        }
        Ok(Params { ctx: ctx.clone(), alpha, beta, gamma })
    }

    pub fn from_ints(ctx: &Field, alpha: i64, beta: i64, gamma: i64) -> Self {
        Params {
            ctx: ctx.clone(),
            alpha: CycNum::from_int(ctx, alpha),
            beta: CycNum::from_int(ctx, beta),
            gamma: CycNum::from_int(ctx, gamma),
        }
    }

    /// The order `l` of q².
    pub fn l(&self) -> u32 {
        self.ctx.order()
    }

    pub fn q2pow(&self, k: i64) -> CycNum {
        CycNum::q2pow(&self.ctx, k)
    }

    /// 1 / (q² - 1), always defined since l ≥ 2.
    pub fn inv_q2_minus_1(&self) -> CycNum {
        (&self.q2pow(1) - &CycNum::one(&self.ctx)).inv().expect("q^2 != 1")
    }
}
