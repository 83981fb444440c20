//! Exact computations with finite-order automorphisms of simple Lie algebras.
//!
//! A torsion automorphism is named by its Kac diagram. From it the engine
//! builds the attached cyclic grading of the Chevalley table, the periodic
//! and parabolic contractions as explicit bracket tables, modular index
//! certificates, the arithmetic of basic-invariant degrees, and matrix
//! realizations for the classical families.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod arith;
pub mod error;
pub mod grading;
pub mod index;
pub mod kac;
pub mod chevalley;
pub mod classical;
pub mod contraction;
pub mod datum;
pub mod rootsystem;
pub mod suites;
pub mod table;

pub use error::{Error, Result};
