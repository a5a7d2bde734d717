//! Exact combinatorics of weight-interlacing strings for archimedean
//! Gan-Gross-Prasad pairs `U(n-1) ⊂ U(n)`.
//!
//! * [`weights`]: half-integers, infinitesimal characters, interlacing strings,
//!   tableaux and the nearby / block moves.
//! * [`discrete_series`]: Harish-Chandra codes, signatures, the endoscopic
//!   relabelling and coherent-cohomology degrees.
//! * [`recipe`]: the distinguished pair, root numbers, the `dist` map, its
//!   fibers and the wall graph.
//! * [`ledger`]: Selmer cells, Hodge-Tate weights, the critical strip,
//!   Greenberg-Wiles rank arithmetic and coherent/incoherent classification.
//! * [`oracles`]: compact branching and Blattner's formula, used to
//!   cross-check the recipe.
//! * [`cli`]: the command-line front end and its serialization.

pub mod cli;
pub mod discrete_series;
pub mod error;
pub mod ledger;
pub mod oracles;
pub mod recipe;
pub mod weights;

pub use error::{Error, Result};
