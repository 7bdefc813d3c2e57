//! Computational toolkit for silting and tilting theory over bound quiver
//! algebras: exact linear algebra over `F_p`, module categories, the
//! homotopy category of projectives, extended hearts, silting enumeration
//! and theorem verifiers.

pub mod algebra;
pub mod complex;
pub mod error;
pub mod linalg;
pub mod heart;
pub mod homotopy;
pub mod io;
pub mod repcat;
pub mod silting;
pub mod tiltcheck;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use linalg::Matrix;
