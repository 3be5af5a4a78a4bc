//! Exact-arithmetic invariants of finite-dimensional Lie algebras.
//!
//! Everything runs over the rationals: Cartan class of linear forms,
//! coadjoint orbit dimensions, the index, characteristic sequences,
//! central extensions by symplectic cocycles, quadratic deformations and
//! contraction limits, together with a catalog of reference algebras and a
//! small text format for defining algebras by brackets or Maurer-Cartan
//! equations.

pub mod cartan;
pub mod catalog;
pub mod charseq;
pub mod deform;
pub mod dsl;
pub mod forms;
pub mod laurent;
pub mod lie;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sample;
pub mod symbolic;

pub use lie::LieAlgebra;
pub use matrix::{Matrix, Subspace};
pub use rational::Rational;
