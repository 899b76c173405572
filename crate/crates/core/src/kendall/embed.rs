//! Kendall codes from binary Hamming-metric codes.
//!
//! Factoradic digit `i` is written with a Gray code of width `⌈log₂ i⌉` on
//! information positions and `⌊log₂ i⌋` on redundancy positions. Adjacent
//! transpositions move one digit by one, and the Gray code changes at most
//! `|a - b|` bits when a digit moves from `a` to `b`, so Kendall distance
//! dominates the Hamming distance of the bit images.

use crate::code::{check_info, check_received, ConstructionId, SystematicCode};
use crate::error::{invalid, uncorrectable, Error, Result};
use crate::perm::{phi, phi_inverse, Factoradic, Metric, Permutation};

use super::binary::BinaryCodeSpec;
use super::gray::{gray_map, gray_unmap};

/// `⌈log₂ i⌉` for `i >= 1`.
pub fn ceil_log2(i: usize) -> u32 {
    usize::BITS - (i - 1).leading_zeros()
}

/// `⌊log₂ i⌋` for `i >= 1`.
pub fn floor_log2(i: usize) -> u32 {
    usize::BITS - 1 - i.leading_zeros()
}

/// A binary code matched to digit widths of `S_n` with `k` information symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayEmbedSpec {
    binary: BinaryCodeSpec,
    n: usize,
    k: usize,
}

impl GrayEmbedSpec {
    /// Shortens `binary` as little as possible so that its dimension equals
    /// `Σ_{i<=k} ⌈log₂ i⌉` and its redundancy `Σ_{k<i<=n} ⌊log₂ i⌋` for some
    /// `2 <= k <= n`.
    pub fn find(binary: &BinaryCodeSpec) -> Result<Self> {
        let redundancy = binary.redundancy();
        for s in 0..=binary.k_bits() {
            let target = binary.k_bits() - s;
            let Some(k) = info_symbols_for(target) else {
                continue;
            };
            if let Some(n) = length_for(k, redundancy) {
                return Ok(Self {
                    binary: binary.shorten(s)?,
                    n,
                    k,
                });
            }
        }
        Err(Error::InfeasibleParameters(format!(
            "no shortening of the {} code of dimension {} and redundancy {redundancy} matches digit widths",
            binary.name(),
            binary.k_bits(),
        )))
    }

    pub fn binary(&self) -> &BinaryCodeSpec {
        &self.binary
    }

    /// Digit width for 1-based factoradic position `i`.
    pub fn width(&self, i: usize) -> u32 {
        if i <= self.k {
            ceil_log2(i)
        } else {
            floor_log2(i)
        }
    }

    /// Concatenated Gray images of all digits, each clamped to its width.
    pub fn bit_image(&self, f: &Permutation) -> Result<Vec<bool>> {
        check_received(f, self.n)?;
        let digits = phi(f);
        let mut bits = Vec::with_capacity(self.binary.n_bits());
        for (idx, &v) in digits.digits().iter().enumerate() {
            let w = self.width(idx + 1);
            let clamped = (v as u64).min((1u64 << w) - 1);
            bits.extend(gray_map(clamped, w)?);
        }
        Ok(bits)
    }
}

/// Smallest `k >= 2` with `Σ_{i<=k} ⌈log₂ i⌉ = target`.
fn info_symbols_for(target: usize) -> Option<usize> {
    let mut sum = 0;
    for k in 1.. {
        sum += ceil_log2(k) as usize;
        if k >= 2 && sum == target {
            return Some(k);
        }
        if sum > target {
            return None;
        }
    }
    None
}

/// `n >= k` with `Σ_{k<i<=n} ⌊log₂ i⌋ = redundancy`.
fn length_for(k: usize, redundancy: usize) -> Option<usize> {
    let mut sum = 0;
    let mut n = k;
    while sum < redundancy {
        n += 1;
        sum += floor_log2(n) as usize;
    }
    (sum == redundancy).then_some(n)
}

/// Finds the Gray-embedding parameters for a binary code; see [`GrayEmbedSpec::find`].
pub fn c4_find_params(binary: &BinaryCodeSpec) -> Result<GrayEmbedSpec> {
    GrayEmbedSpec::find(binary)
}

impl SystematicCode for GrayEmbedSpec {
    fn construction(&self) -> ConstructionId {
        ConstructionId::C4
    }

    fn metric(&self) -> Metric {
        Metric::Kendall
    }

    fn length(&self) -> usize {
        self.n
    }

    fn info_len(&self) -> usize {
        self.k
    }

    fn designed_distance(&self) -> u64 {
        self.binary.d_min() as u64
    }

    fn encode(&self, info: &Permutation) -> Result<Permutation> {
        check_info(info, self.k)?;
        let mut digits = phi(info).into_digits();
        let mut bits = Vec::with_capacity(self.binary.k_bits());
        for (idx, &v) in digits.iter().enumerate() {
            bits.extend(gray_map(v as u64, ceil_log2(idx + 1))?);
        }
        let parity = self.binary.parity_bits(&bits)?;
        let mut rest = parity.as_slice();
        for i in self.k + 1..=self.n {
            let (chunk, tail) = rest.split_at(floor_log2(i) as usize);
            digits.push(gray_unmap(chunk) as usize);
            rest = tail;
        }
        Ok(phi_inverse(&Factoradic::new(digits)?))
    }

    fn decode(&self, received: &Permutation) -> Result<Permutation> {
        let bits = self.bit_image(received)?;
        let info_bits = self.binary.decode(&bits)?;
        let mut digits = Vec::with_capacity(self.k);
        let mut rest = info_bits.as_slice();
        for i in 1..=self.k {
            let (chunk, tail) = rest.split_at(ceil_log2(i) as usize);
            let v = gray_unmap(chunk) as usize;
            if v >= i {
                return uncorrectable(format!("decoded digit {i} = {v} exceeds its radix"));
            }
            digits.push(v);
            rest = tail;
        }
        Ok(phi_inverse(&Factoradic::new(digits)?))
    }

    fn params(&self) -> Vec<(&'static str, String)> {
        vec![
            ("binary", self.binary.name().to_string()),
            ("shorten", self.binary.shorten_count().to_string()),
        ]
    }
}

impl GrayEmbedSpec {
    /// Rebuilds the spec from a binary family name as written by [`SystematicCode::params`].
    pub fn from_binary_name(name: &str) -> Result<Self> {
        let (family, arg) = name
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("binary code {name:?} is not family:param")))?;
        let arg: usize = arg
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad binary code parameter in {name:?}")))?;
        let binary = match family {
            "hamming" => BinaryCodeSpec::hamming(arg)?,
            "repetition" => BinaryCodeSpec::repetition(arg)?,
            _ => return invalid(format!("unknown binary code family {family:?}")),
        };
        Self::find(&binary)
    }
}
