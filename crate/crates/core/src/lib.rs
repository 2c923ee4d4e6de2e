//! Signless-Laplacian spectral conditions for k-path-coverability.
//!
//! The crate bundles everything needed to check, at desk scale, that graphs
//! with large Q-index and bounded minimum degree are covered by few disjoint
//! paths, and that the extremal family `B(n,k,δ) = K_δ ∨ (K_{n−2δ−k} ∪ ‾K_{δ+k})`
//! and its edge-deleted relatives are the only exceptions:
//!
//! * [`graph`] and [`graph6`]: dense bit-matrix graphs and their text format.
//! * [`spectral`]: Q-index and spectral radius with certified eigenvectors.
//! * [`closure`]: the Bondy–Chvátal k-closure.
//! * [`pathcover`]: exact and certified minimum path covers.
//! * [`extremal`]: the `B(n,k,δ)` family, its deletions and thresholds.
//! * [`verifier`]: per-graph classification and family-level checks.
//!
//! The spectral routines are generic over [`Scalar`] (`f32`/`f64`); the
//! `f64` instantiations used everywhere else are aliased below.

pub mod closure;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod pathcover;
pub mod scalar;
pub mod spectral;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{EdgeList, Graph};
pub use scalar::Scalar;

pub type SymMatrix64 = spectral::SymMatrix<f64>;
pub type SymMatrix32 = spectral::SymMatrix<f32>;
pub type SpectralResult64 = spectral::SpectralResult<f64>;
pub type SpectralResult32 = spectral::SpectralResult<f32>;
pub type SpectralConfig64 = spectral::SpectralConfig<f64>;
pub type SpectralConfig32 = spectral::SpectralConfig<f32>;
