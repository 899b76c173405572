//! `[k+2, k, 3]` codes carved out of the Golomb–Welch perfect single-error
//! ℓ1 code `{x ∈ Z^{k+1} : Σ i·x_i ≡ 0 (mod 2k+3)}`.
//!
//! The trailing `k+1` factoradic digits of a codeword form a Golomb–Welch
//! codeword whose first `k-1` entries are the free information digits and
//! whose last two entries are `⌊s/3⌋` and `s mod 3`, where
//! `s = 2·Σ_{i<k} i·x_i mod (2k+3)`.

use crate::code::{check_info, check_received, ConstructionId, SystematicCode};
use crate::error::{invalid, uncorrectable, Result};
use crate::perm::{phi, phi_inverse, Factoradic, Metric, Permutation};

/// `Σ_i i·x_i mod (2k+3)` over the whole slice (so `s_m(x)` is
/// `gw_syndrome(&x[..m], k)`).
pub fn gw_syndrome(x: &[usize], k: usize) -> usize {
    let modulus = 2 * k + 3;
    x.iter()
        .enumerate()
        .fold(0, |acc, (i, &xi)| (acc + (i + 1) * (xi % modulus)) % modulus)
}

/// `[k+2, k, 3]` Golomb–Welch systematic code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GolombWelchCode {
    k: usize,
}

impl GolombWelchCode {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return invalid(format!("Golomb-Welch code needs k >= 2, got {k}"));
        }
        Ok(Self { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> usize {
        2 * self.k + 3
    }

    /// Trailing digit vector `(x_1, ..., x_{k+1})` for a given information permutation.
    pub fn trailing_digits(&self, info: &Permutation) -> Result<Vec<usize>> {
        check_info(info, self.k)?;
        let k = self.k;
        let mut x: Vec<usize> = phi(info).digits()[1..].to_vec();
        let doubled: Vec<usize> = x.iter().map(|&v| 2 * v).collect();
        let s = gw_syndrome(&doubled, k);
        x.push(s / 3);
        x.push(s % 3);
        Ok(x)
    }
}

impl SystematicCode for GolombWelchCode {
    fn construction(&self) -> ConstructionId {
        ConstructionId::C2
    }

    fn metric(&self) -> Metric {
        Metric::Kendall
    }

    fn length(&self) -> usize {
        self.k + 2
    }

    fn info_len(&self) -> usize {
        self.k
    }

    fn designed_distance(&self) -> u64 {
        3
    }

    fn encode(&self, info: &Permutation) -> Result<Permutation> {
        let mut digits = Vec::with_capacity(self.k + 2);
        digits.push(0);
        digits.extend(self.trailing_digits(info)?);
        Ok(phi_inverse(&Factoradic::new(digits)?))
    }

    fn decode(&self, received: &Permutation) -> Result<Permutation> {
        check_received(received, self.k + 2)?;
        let k = self.k;
        let modulus = self.modulus();
        let mut y: Vec<usize> = phi(received).digits()[1..].to_vec();
        let sigma = gw_syndrome(&y, k);
        // y[j - 1] is factoradic digit j + 1, with radix j + 1
        if (1..=k + 1).contains(&sigma) {
            let j = sigma;
            if y[j - 1] == 0 {
                return uncorrectable(format!("correction drives digit {} below 0", j + 1));
            }
            y[j - 1] -= 1;
        } else if sigma != 0 {
            let j = modulus - sigma;
            if y[j - 1] + 1 > j {
                return uncorrectable(format!("correction drives digit {} past its radix", j + 1));
            }
            y[j - 1] += 1;
        }
        let mut info_digits = vec![0];
        info_digits.extend_from_slice(&y[..k - 1]);
        Ok(phi_inverse(&Factoradic::new(info_digits)?))
    }

    fn params(&self) -> Vec<(&'static str, String)> {
        vec![("modulus", self.modulus().to_string())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn syndrome_examples() {
        assert_eq!(gw_syndrome(&[0, 0, 0], 2), 0);
        assert_eq!(gw_syndrome(&[1, 0, 2], 2), 0);
        assert_eq!(gw_syndrome(&[1, 0, 3], 2), 3);
    }

    #[test]
    fn encode_examples() {
        let code = GolombWelchCode::new(2).unwrap();
        assert_eq!(code.encode(&p(&[1, 2])).unwrap(), p(&[1, 2, 3, 4]));
        assert_eq!(code.encode(&p(&[2, 1])).unwrap(), p(&[2, 4, 1, 3]));
        let code = GolombWelchCode::new(5).unwrap();
        for info in permutations(5) {
            let word = code.encode(&info).unwrap();
            assert_eq!(word.project_values_prefix(5).unwrap(), info);
        }
        assert!(GolombWelchCode::new(1).is_err());
    }

    #[test]
    fn decode_examples() {
        let code = GolombWelchCode::new(2).unwrap();
        assert_eq!(code.decode(&p(&[2, 4, 1, 3])).unwrap(), p(&[2, 1]));
        assert_eq!(code.decode(&p(&[4, 2, 1, 3])).unwrap(), p(&[2, 1]));
        assert_eq!(code.decode(&p(&[1, 2, 3, 4])).unwrap(), p(&[1, 2]));
    }

    #[test]
    fn codewords_have_zero_syndrome() {
        for k in 2..=6 {
            let code = GolombWelchCode::new(k).unwrap();
            for info in permutations(k) {
                let x = code.trailing_digits(&info).unwrap();
                assert_eq!(gw_syndrome(&x, k), 0);
            }
        }
    }
}
