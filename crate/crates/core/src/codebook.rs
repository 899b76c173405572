use crate::code::ConstructionId;
use crate::error::{invalid, Result};
use crate::perm::{Metric, Permutation};

/// An explicit list of codewords with the parameters they were built for.
///
/// Builders in this crate always produce `k!` distinct codewords ordered by
/// the lexicographic rank of their information permutation. A codebook read
/// back from disk may violate that; [`crate::oracle`] checks it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codebook {
    n: usize,
    k: usize,
    d_claimed: u64,
    metric: Metric,
    construction: ConstructionId,
    codewords: Vec<Permutation>,
}

impl Codebook {
    /// Checks only shape: `1 <= k <= n` and every codeword has length `n`.
    pub fn new(
        n: usize,
        k: usize,
        d_claimed: u64,
        metric: Metric,
        construction: ConstructionId,
        codewords: Vec<Permutation>,
    ) -> Result<Self> {
        if k == 0 || k > n {
            return invalid(format!("need 1 <= k <= n, got k = {k}, n = {n}"));
        }
        if let Some(bad) = codewords.iter().find(|c| c.len() != n) {
            return invalid(format!("codeword {bad} does not have length {n}"));
        }
        Ok(Self {
            n,
            k,
            d_claimed,
            metric,
            construction,
            codewords,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d_claimed(&self) -> u64 {
        self.d_claimed
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn construction(&self) -> ConstructionId {
        self.construction
    }

    pub fn codewords(&self) -> &[Permutation] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    /// Information permutation carried by `word`: `f|^{[k]}` for Kendall
    /// codes, `f|_{[k]}` for ℓ∞ codes.
    pub fn information_of(&self, word: &Permutation) -> Result<Permutation> {
        information(self.metric, word, self.k)
    }

    /// Replaces the claimed distance, e.g. with a measured one.
    pub fn with_d_claimed(mut self, d: u64) -> Self {
        self.d_claimed = d;
        self
    }
}

/// Information permutation under the systematic convention of `metric`.
pub fn information(metric: Metric, word: &Permutation, k: usize) -> Result<Permutation> {
    match metric {
        Metric::Kendall => word.project_values_prefix(k),
        Metric::Linf => word.project_coords_prefix(k),
    }
}
