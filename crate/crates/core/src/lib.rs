pub mod chowcalc;
pub mod cli;
pub mod error;
pub mod linecone;
pub mod symkernel;
pub mod vfclasses;

pub use error::{Error, Result};
