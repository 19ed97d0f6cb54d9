//! Exact computational toolkit for the exceptional Lie algebras and their
//! periodic extensions.
//!
//! * [`exact`]: rationals, dense and monomial (signed permutation) matrices,
//!   exact linear solving.
//! * [`roots`]: root systems by reflection closure.
//! * [`star`]: the a2 projection ("Magic Star") of a root system.
//! * [`clifford`]: real monomial gamma matrices, chirality, charge
//!   conjugation, Fierz residuals.
//! * [`ep`]: the graded algebras built from gamma bilinears, their
//!   Jacobiators and coefficient calibration.
//! * [`talg`]: special T-algebras, cubic norm, rank and entropy, plus an
//!   octonionic Jordan determinant oracle.

pub mod clifford;
pub mod ep;
mod error;
pub mod exact;
pub mod roots;
pub mod sample;
pub mod star;
pub mod talg;

pub use error::{Error, Result};
pub use exact::{DenseMatrix, LinearSolve, MonomialMatrix, Rational, SolveOutcome};
