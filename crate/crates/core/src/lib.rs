//! Finite groups, their order spectra, and the perfect-order-subset (POS)
//! property.
//!
//! A finite group is a POS-group when, for every element order `d`, the
//! number of elements of order `d` divides the group order.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod feasibility;
pub mod groups;
pub mod numtheory;
pub mod spectra;
pub mod symmetric;

pub use error::{Error, Result};
