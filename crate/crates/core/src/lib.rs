//! Gröbner–Shirshov bases for free commutative dialgebras.
//!
//! The crate provides exact rational arithmetic in the free commutative
//! dialgebra `Di[X]`, normal S-polynomials and remainders, completion to a
//! Gröbner–Shirshov basis, reduced bases, decision procedures built on
//! them, the lift of a commutative basis to the free associative dialgebra,
//! and an independent linear-algebra oracle used for verification.

pub mod algebra;
pub mod assoc;
pub mod cli;
pub mod completion;
pub mod composition;
pub mod decision;
pub mod error;
pub mod io;
pub mod oracle;
pub mod ordering;
pub mod presentation;
pub mod reduction;

pub use error::{Error, Result};
