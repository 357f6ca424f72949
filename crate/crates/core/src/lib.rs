//! Internal groupoids in finite pointed sets and finite-dimensional `𝔽p`
//! vector spaces: strong homotopy pullbacks and kernels, `π0`/`π1`, six-term
//! exact sequences, functor classification and fibration replacement.

pub mod arrow;
pub mod brute;
pub mod category;
pub mod classify;
pub mod error;
pub mod exact;
pub mod finptset;
pub mod fixtures;
pub mod fpvect;
pub mod groupoid;
pub mod hlimits;
pub mod invariants;
pub mod linalg;

pub use category::{Category, Cone, Equation};
pub use error::{Error, Result};
pub use finptset::{FinPtSet, Limits, PtMap, PtSet};
pub use fpvect::{Dim, FpVect};
pub use groupoid::{Groupoid, InternalFunctor, InternalGroupoid, LawCheck, LawReport, NatTransformation};
pub use linalg::Matrix;
