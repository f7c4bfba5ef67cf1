//! Exact computer algebra for binary quintics.

pub mod cli;
pub mod error;
pub mod formparse;
pub mod galois;
pub mod invariants;
pub mod poly;
pub mod reduction;
pub mod rings;
pub mod templates;
pub mod transvect;

pub use error::{Error, Result};
