//! Permutation algebra: projections, distances, the factoradic transform,
//! lexicographic ranking and ball enumeration.

mod ball;
mod distance;
mod factoradic;
mod permutation;
mod ranking;

pub use ball::ball_enumerate;
pub use distance::{count_inversions, kendall_distance, l1_distance, linf_distance, Metric};
pub(crate) use distance::kendall_distance_with_inverse;
pub use factoradic::{phi, phi_inverse, phi_inverse_digits, Factoradic};
pub use permutation::{IndexSet, Permutation};
pub use ranking::{next_permutation, permutations, rank, unrank, unrank_u64, Permutations};
