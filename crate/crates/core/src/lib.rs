//! Orbit spaces of linear torus actions on odd spheres.
//!
//! A rank `r` torus acting linearly on `S^(2n-1)` is given by an `r x n`
//! integer weight matrix. Everything the quotient's homology depends on is
//! read off the column matroid of that matrix through its Tutte polynomial.

pub mod action;
pub mod checks;
pub mod classify;
pub mod error;
mod json;
pub mod matrix;
pub mod matroid;
pub mod topology;
pub mod tutte;

pub use classify::{classify, Classification, Verdict};
pub use topology::{poincare_quotient, QuotientSummary, ReducedHomology};
pub use action::{IsotropyGroup, TorusAction};
pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use matroid::{ElementSet, Flat, FlatLattice, Matroid, RepresentedMatroid};
pub use tutte::{tutte, tutte_oracle, BivariatePolynomial, UnivariatePolynomial};
