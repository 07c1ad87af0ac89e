//! Spectral tools for signed graphs built around star complements.
//!
//! The crate computes exact eigenvalue multiplicities, star sets and star
//! complements, checks the reconstruction identity, enumerates star-complement
//! extensions, and produces machine-checkable certificates for upper bounds on
//! eigenvalue multiplicity in terms of the codimension of the eigenspace.

pub mod bounds;
mod clique;
pub mod constructions;
pub mod graph;
pub mod linalg;
pub mod spectra;
pub mod srg;
pub mod starcomp;

pub use graph::{GraphError, SignedGraph, VertexSet};
pub use linalg::{ExactMatrix, ExactScalar, Field, IntPolynomial, LinalgError};
pub use spectra::{EigenValue, EigenvalueDescriptor, SpectraError, SpectrumReport};
pub use starcomp::{GoodVector, StarPartition};
