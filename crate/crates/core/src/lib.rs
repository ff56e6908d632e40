//! Exact jet modules and differential-operator filtrations for bimodules over
//! finite-dimensional associative algebras.
//!
//! Everything is computed with exact arithmetic over `Q` or `F_p`, so every
//! subspace comparison is a genuine set equality.

pub mod algebra;
pub mod bimodule;
pub mod catalog;
pub mod cli;
pub mod diffop;
pub mod hom;
pub mod jets;
pub mod linalg;
pub mod tensor;
