//! Quasi-local stabilization of pure entangled states under Markovian
//! (Lindblad) dynamics.
//!
//! The crate decides whether a target pure state on a multipartite
//! register can be made the unique attractor of a quantum dynamical
//! semigroup whose Hamiltonian and noise operators act only on given
//! neighborhoods, synthesizes stabilizing controllers (randomized and
//! constructive), and verifies global asymptotic stability both
//! spectrally and through the dissipation-induced decomposition.
//!
//! Modules:
//! - [`tensor`]: multipartite Hilbert-space algebra (embeddings, partial
//!   traces, tolerance-aware subspace arithmetic);
//! - [`generator`]: Lindblad generators, superoperator matrices,
//!   standard form, invariance and fixed-point analysis;
//! - [`stability`]: decision procedures (dissipative quasi-local
//!   stabilizability test, dissipation-induced decomposition,
//!   necessary conditions, GHZ no-go);
//! - [`synthesis`]: randomized and constructive controller synthesis
//!   plus drift compensation;
//! - [`states`]: catalog of target states and explicit control fixtures;
//! - [`dynamics`]: time evolution and convergence reporting.
//!
//! Subsystems are indexed from zero throughout the library; subsystem 0
//! is the leftmost (most significant) tensor factor.

pub mod dynamics;
pub mod generator;
pub mod linalg;
pub mod stability;
pub mod states;
pub mod synthesis;
pub mod tensor;

/// Relative threshold below which singular/eigenvalues count as zero.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Relative threshold for the zero eigenvalue of a superoperator.
pub const SPECTRAL_TOL: f64 = 1e-8;

pub use generator::{LindbladGenerator, Liouvillian, QlTerm};
pub use tensor::{DensityOperator, MultipartiteSpace, NeighborhoodStructure, Subspace};
