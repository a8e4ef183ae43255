//! Exact computer algebra for hom-Lie algebras, their enveloping algebras and
//! the Kummer–Witt and Jackson families over cyclotomic fields.

// Index loops mirror the matrix and structure-constant formulas.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod cyclotomic;
pub mod linalg;
pub mod ncalg;
pub mod homlie;
pub mod findim;
pub mod algebras;
pub mod check;
pub mod commpoly;
pub mod centre;
pub mod modules;
pub mod ext;
pub mod report;
pub mod cli;

pub use cyclotomic::{q_int, CycElem, Rational};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use ncalg::{NcPoly, Presentation, RewriteSystem, Word};
