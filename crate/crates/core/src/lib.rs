//! Systematic error-correcting codes for rank modulation.
//!
//! Codewords are permutations of `[n]`. A code is *systematic* when the
//! relative order of a fixed set of `k` information symbols ranges over all
//! of `S_k` exactly once across the codebook. Under Kendall's τ-metric the
//! information symbols are the values `1..=k`; under the ℓ∞-metric they are
//! the first `k` coordinates.
//!
//! - [`perm`]: permutations, distances, factoradic transform, ranking, balls.
//! - [`kendall`]: Kendall-metric constructions and their decoders.
//! - [`linf`]: ℓ∞-metric constructions, decoders and rates.
//! - [`bounds`]: ball sizes, packing and Gilbert–Varshamov style bounds.
//! - [`oracle`]: brute-force verification of built codebooks.

pub mod bounds;
pub mod code;
pub mod codebook;
pub mod combin;
mod error;
pub mod kendall;
pub mod linf;
pub mod oracle;
pub mod perm;

pub use code::{build_codebook, ConstructionId, SystematicCode};
pub use codebook::Codebook;
pub use error::{Error, Result};
pub use perm::{Factoradic, IndexSet, Metric, Permutation};
