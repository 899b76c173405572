//! Systematic codes under Kendall's τ-metric.
//!
//! Every construction here fixes the factoradic digits `2..=k` of a codeword
//! to those of the information permutation and appends redundancy digits.
//! Because `Φ(f|^{[k]})` is the length-`k` prefix of `Φ(f)`, the values
//! `1..=k` of the codeword then appear in the order of the information.

mod bch_lattice;
mod binary;
mod embed;
mod field;
mod golomb_welch;
mod gray;
mod greedy;
mod rho;

pub use bch_lattice::{lee_weight, BchLatticeCode};
pub use binary::BinaryCodeSpec;
pub use embed::{c4_find_params, ceil_log2, floor_log2, GrayEmbedSpec};
pub use field::{FieldContext, FieldElement};
pub use golomb_welch::{gw_syndrome, GolombWelchCode};
pub use gray::{gray_map, gray_unmap};
pub use greedy::{c5_greedy, GreedyCode};
pub use rho::{rho, rho_code_build, DecodeTrace, RhoCodeSpec};
