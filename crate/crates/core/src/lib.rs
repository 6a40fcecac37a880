//! Symbolic toolkit for compact quantum group coactions on noncommutative
//! spheres.
//!
//! The crate provides exact scalar arithmetic, noncommutative *-polynomials
//! with rewriting to normal form, presentations of the quantum spheres and of
//! the quantum group `SU_q(2)`, verification of coaction axioms, a bounded
//! classification search for coactions of a fixed linear shape, and checks of
//! invariant subalgebras.

pub mod classify;
pub mod coaction;
pub mod error;
pub mod hopf;
pub mod ideal;
pub mod invariants;
pub mod ncpoly;
pub mod presentation;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod syntax;
pub mod tensor;

pub use coaction::{CoactionSpec, Matrix};
pub use error::{Error, Result};
pub use ncpoly::{Element, Letter, RewriteRule, RewriteSystem, TermOrder, Word};
pub use presentation::{
    parse_presentation, parse_presentation_unchecked, preset_bl, preset_suq2, preset_vs, star_closure, Param,
    Presentation,
};
pub use report::{Check, Report, Status};
pub use scalar::{GaussRational, Rational, Scalar};
pub use tensor::TensorElement;
