//! Binary cyclic codes `B`, `M` and `C = B ∩ M` of length `2^m - 1`, the
//! minimum distance of `C`, and the weights of `C⊥` through genus-2 curves
//! over GF(2^m).

pub mod binpoly;
pub mod budget;
pub mod cache;
pub mod classify;
pub mod codes;
pub mod curves;
pub mod error;
pub mod gf2m;
pub mod numtheory;
pub mod report;

pub use budget::Budget;
pub use error::{Error, Result};
pub use gf2m::{FieldElem, FieldSpec};
