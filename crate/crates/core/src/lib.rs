//! Exact enumeration and verification toolkit for matroids on small ground sets.

pub mod analysis;
pub mod bigcomb;
pub mod cli;
pub mod enumerate;
pub mod erection;
pub mod error;
pub mod matroid;
pub mod paving;

pub use error::{Error, Result};
