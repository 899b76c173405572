use std::fmt;
use std::str::FromStr;

use crate::codebook::{information, Codebook};
use crate::error::{invalid, Error, Result};
use crate::perm::{permutations, Metric, Permutation};

/// Identifier of a code family, as written in codebook file headers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionId {
    /// `[k+2, k, 3]` code from two weighted-sum redundancy digits.
    C1,
    /// `[k+2, k, 3]` code embedded in the Golomb–Welch perfect ℓ1 code.
    C2,
    /// The weighted-sum code with `r` redundancy digits.
    Rho,
    /// `[n+1, k+1, 2t+2]` code from a p-ary BCH code via Construction A.
    C3,
    /// Binary Hamming-metric code lifted through Gray maps.
    C4,
    /// Greedy lexicographic search.
    C5,
    /// ℓ∞ code with information values spread `d` apart.
    C6,
    /// ℓ∞ concatenation with the residue code `f(i) ≡ i (mod d)`.
    C7,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 8] = [
        Self::C1,
        Self::C2,
        Self::Rho,
        Self::C3,
        Self::C4,
        Self::C5,
        Self::C6,
        Self::C7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::C1 => "c1",
            Self::C2 => "c2",
            Self::Rho => "rho",
            Self::C3 => "c3",
            Self::C4 => "c4",
            Self::C5 => "c5",
            Self::C6 => "c6",
            Self::C7 => "c7",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown construction {s:?}")))
    }
}

/// Common surface of every systematic code in the crate.
pub trait SystematicCode: Sync {
    fn construction(&self) -> ConstructionId;

    fn metric(&self) -> Metric;

    /// Codeword length `n`.
    fn length(&self) -> usize;

    /// Number of information symbols `k`.
    fn info_len(&self) -> usize;

    /// Minimum distance guaranteed by the construction.
    fn designed_distance(&self) -> u64;

    /// Radius within which [`SystematicCode::decode`] is guaranteed to succeed.
    fn decoding_radius(&self) -> u64 {
        self.designed_distance().saturating_sub(1) / 2
    }

    /// Maps an information permutation in `S_k` to its codeword in `S_n`.
    fn encode(&self, info: &Permutation) -> Result<Permutation>;

    /// Recovers the information permutation from a received word.
    fn decode(&self, received: &Permutation) -> Result<Permutation>;

    /// Construction-specific parameters, in a fixed order, for file headers.
    fn params(&self) -> Vec<(&'static str, String)>;

    /// Information permutation carried by a codeword.
    fn information(&self, word: &Permutation) -> Result<Permutation> {
        information(self.metric(), word, self.info_len())
    }
}

pub(crate) fn check_info(info: &Permutation, k: usize) -> Result<()> {
    if info.len() != k {
        return invalid(format!("information permutation has length {}, expected {k}", info.len()));
    }
    Ok(())
}

pub(crate) fn check_received(received: &Permutation, n: usize) -> Result<()> {
    if received.len() != n {
        return invalid(format!("received word has length {}, expected {n}", received.len()));
    }
    Ok(())
}

/// Encodes every information permutation of `S_k` in lexicographic order.
pub fn build_codebook(code: &dyn SystematicCode) -> Result<Codebook> {
    let codewords = permutations(code.info_len())
        .map(|info| code.encode(&info))
        .collect::<Result<Vec<_>>>()?;
    Codebook::new(
        code.length(),
        code.info_len(),
        code.designed_distance(),
        code.metric(),
        code.construction(),
        codewords,
    )
}
