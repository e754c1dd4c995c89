//! Exact constructions, verification and classification of graded-division
//! algebras and Galois extensions of rings over small finite fields.

pub mod error;
pub mod abgroup;
pub mod algebra;
pub mod cochain;
pub mod gf;
pub mod linalg;
pub mod par;
pub mod galois;
pub mod classify;
pub mod corpus;
pub mod io;
pub mod acceptance;
pub mod cli;

pub use error::{Error, Result};
