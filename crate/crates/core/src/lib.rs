pub mod algebra;
pub mod centerpi;
pub mod cli;
pub mod cyclofield;
pub mod error;
pub mod linalg;
pub mod repmods;
pub mod wire;

pub use cyclofield::{CycNum, Field, FieldCtx, Rat};
pub use error::{Error, Result};
pub use linalg::Mat;
