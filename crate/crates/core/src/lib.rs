//! Exact verification of identities in finite-dimensional ℤ₂-graded
//! (Hom-)nonassociative algebras given by structure constants.

pub mod builtin;
pub mod constructions;
pub mod error;
pub mod graded;
pub mod identity;
pub mod io;
pub mod operators;
pub mod report;
pub mod structures;
