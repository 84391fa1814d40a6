//! Exact canonical forms of matrices over `Z`, `Q` and `Q[x]`.

pub mod cli;
pub mod determinant;
pub mod domain;
pub mod error;
pub mod hermite;
pub mod invariants;
pub mod matrix;
pub mod perm;
pub mod similarity;
pub mod smith;

pub use domain::{Elem, Polynomial, Ring};
pub use error::{Error, Result};
pub use matrix::{Axis, Matrix};
