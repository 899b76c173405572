//! Systematic codes under the ℓ∞-metric, where the information symbols are
//! the first `k` coordinates.

mod concat;
mod rate;
mod spread;

pub use concat::{c7_info_len, inner_code_size, inner_rank, inner_unrank, ConcatCodeSpec};
pub use rate::{code_rate, log2_big};
pub use spread::SpreadCodeSpec;
