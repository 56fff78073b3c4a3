//! Exact lattice computations on resolution graphs of normal surface
//! singularities: multiplier-ideal jumping numbers and multiplicities,
//! topological and Hodge spectra, splice-quotient series and weighted
//! homogeneous (Seifert) spectra.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod catalog;
pub mod error;
pub mod formal;
pub mod io;
pub mod jumping;
pub mod lattice;
pub mod rational;
pub mod seifert;
pub mod spectrum;
pub mod splice;

pub use error::{Error, ErrorClass, Result};
pub use formal::JumpSpectrum;
pub use jumping::{H0Policy, JumpInput, ZeroMultiplicity};
pub use lattice::{IntersectionForm, QCycle, ResolutionGraph, Vertex};
pub use rational::Rational;
