//! Arithmetic classification of fake projective planes: certified
//! L-values, covolumes, discriminant bounds and the staged census.

pub mod arith;
pub mod bounds;
pub mod census;
pub mod datasets;
pub mod dyadic;
pub mod error;
pub mod ffpoly;
pub mod ladder;
pub mod lvalues;
pub mod real;
pub mod volume;
pub mod special;

pub use error::{Error, Result};
pub use real::CertifiedReal;
