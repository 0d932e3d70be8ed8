//! Duplication signed graphs and the duplication corona products `⊛` and `⊚`.
//!
//! The crate builds the products, evaluates their edge and triad statistics
//! in closed form, verifies the product characteristic-polynomial identities
//! with exact integer arithmetic, and computes spectra, coronals, energies,
//! integrality and equienergetic families.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod exact;
pub mod format;
pub mod graph;
pub mod matrix;
pub mod products;
pub mod spectra;
pub mod structure;

pub use error::{Error, Result};
pub use exact::{Coronal, IntPolynomial};
pub use graph::{Balance, GraphMatrix, Marking, RegularityReport, Sign, SignedGraph};
pub use matrix::IntMatrix;
pub use products::{add_vertex_corona, duplication, vertex_corona, CoronaKind, ProductLayout};
pub use spectra::{EnergyReport, Spectrum};
