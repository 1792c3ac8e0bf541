//! Weight enumerators of recursively definable graph-state families as rational
//! generating functions.
//!
//! A family is described by a cut-and-glue recipe ([`family::FamilySpec`]). The
//! [`transfer`] module turns the recipe into a transfer matrix and an exact
//! generating function `W(x, y, z) = Σ_r W_r(x, y) z^r`, whose coefficients are the
//! weight enumerator polynomials of the members. [`analysis`] derives concentratable
//! entanglement, depolarizing fidelity and entanglement-criterion thresholds from it,
//! and [`oracle`] recomputes sector lengths by brute force for cross-checking.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod family;
pub mod oracle;
pub mod transfer;
