//! Weighted-sum redundancy codes.
//!
//! For an information permutation `f ∈ S_k` the `j`-th check digit is
//! `ρ_j(f) = Σ_i (2i-1)^j f(i) mod m` with `m ∈ {k, k+1}` prime. The codeword is
//! the permutation of `S_{k+r}` whose factoradic digits `k+1..=k+r` equal
//! `ρ_1(f), ..., ρ_r(f)` and whose first `k` digits are those of `f`. With
//! `r = 2` this is a single-error-correcting `[k+2, k, 3]` code.

use crate::code::{build_codebook, check_info, check_received, ConstructionId, SystematicCode};
use crate::codebook::Codebook;
use crate::error::{invalid, uncorrectable, Result};
use crate::perm::{kendall_distance, phi, phi_inverse, Factoradic, Metric, Permutation};

/// `ρ_j(f) = (Σ_{i=1}^{k} (2i-1)^j f(i)) mod m`.
pub fn rho(info: &Permutation, j: u32, m: usize) -> usize {
    let m = m as u64;
    info.entries()
        .iter()
        .enumerate()
        .map(|(idx, &v)| {
            let weight = pow_mod(2 * idx as u64 + 1, j, m);
            weight * (v as u64 % m) % m
        })
        .fold(0, |acc, t| (acc + t) % m) as usize
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u32, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Parameters `(k, r, m)` of a weighted-sum code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoCodeSpec {
    k: usize,
    r: usize,
    m: usize,
}

impl RhoCodeSpec {
    /// Picks `m = k` when `k` is prime, otherwise `m = k + 1` when that is prime.
    pub fn new(k: usize, r: usize) -> Result<Self> {
        let m = if is_prime(k) {
            k
        } else if is_prime(k + 1) {
            k + 1
        } else {
            return invalid(format!("neither {k} nor {} is prime", k + 1));
        };
        Self::with_modulus(k, r, m)
    }

    /// The `[k+2, k, 3]` single-error-correcting code.
    pub fn construction1(k: usize) -> Result<Self> {
        Self::new(k, 2)
    }

    pub fn with_modulus(k: usize, r: usize, m: usize) -> Result<Self> {
        if k == 0 {
            return invalid("k must be positive");
        }
        if !(m == k || m == k + 1) || !is_prime(m) {
            return invalid(format!("modulus {m} must be a prime in {{{k}, {}}}", k + 1));
        }
        if r == 2 && k < 3 {
            return invalid("the two-digit code needs k >= 3");
        }
        Ok(Self { k, r, m })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    /// The `r` check digits of `info`.
    pub fn check_digits(&self, info: &Permutation) -> Vec<usize> {
        (1..=self.r as u32).map(|j| rho(info, j, self.m)).collect()
    }

    /// Decodes and reports the intermediate quantities of the algebraic decoder.
    pub fn decode_traced(&self, received: &Permutation) -> Result<DecodeTrace> {
        check_received(received, self.k + self.r)?;
        let k = self.k;
        let observed = received.project_values_prefix(k)?;
        let reencoded = self.encode(&observed)?;
        let mut trace = DecodeTrace {
            observed_info: observed.clone(),
            reencoded: reencoded.clone(),
            received_checks: Vec::new(),
            reencoded_checks: Vec::new(),
            transposition: None,
            info: observed.clone(),
        };
        let dist = kendall_distance(&reencoded, received)?;
        if dist == 0 || (self.r >= 2 && dist <= 1) {
            return Ok(trace);
        }
        if self.r < 2 {
            return uncorrectable(format!("{received} is not a codeword"));
        }

        // One adjacent swap of two information values leaves the check digits
        // untouched, so they still hold ρ_j of the transmitted information.
        let got = phi(received);
        let exp = phi(&reencoded);
        trace.received_checks = vec![got.digit(k + 1), got.digit(k + 2)];
        trace.reencoded_checks = vec![exp.digit(k + 1), exp.digit(k + 2)];
        let m = self.m as u64;
        let delta1 = (got.digit(k + 1) as u64 + m - exp.digit(k + 1) as u64) % m;
        let delta2 = (got.digit(k + 2) as u64 + m - exp.digit(k + 2) as u64) % m;
        if delta1 == 0 {
            return uncorrectable("first check digit agrees but the word is not within distance 1");
        }
        // delta2 ≡ 4 i delta1 (mod m)
        let i = delta2 * pow_mod(4 * delta1 % m, (m - 2) as u32, m) % m;
        let i = i as usize;
        if i == 0 || i >= k {
            return uncorrectable(format!("recovered transposition index {i} outside [1, {}]", k - 1));
        }
        let corrected = observed.adjacent_transposition(i)?;
        if kendall_distance(&self.encode(&corrected)?, received)? > 1 {
            return uncorrectable("re-encoded correction is not within distance 1");
        }
        trace.transposition = Some(i);
        trace.info = corrected;
        Ok(trace)
    }
}

/// Intermediate values of [`RhoCodeSpec::decode_traced`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeTrace {
    /// `g|^{[k]}` of the received word.
    pub observed_info: Permutation,
    /// The codeword `ĝ` carrying `observed_info`.
    pub reencoded: Permutation,
    /// `Φ(g)_{k+1}, Φ(g)_{k+2}`; empty when no solve was needed.
    pub received_checks: Vec<usize>,
    /// `Φ(ĝ)_{k+1}, Φ(ĝ)_{k+2}`; empty when no solve was needed.
    pub reencoded_checks: Vec<usize>,
    /// Position `i` of the corrected information swap `(i, i+1)`.
    pub transposition: Option<usize>,
    /// Decoded information permutation.
    pub info: Permutation,
}

impl SystematicCode for RhoCodeSpec {
    fn construction(&self) -> ConstructionId {
        if self.r == 2 {
            ConstructionId::C1
        } else {
            ConstructionId::Rho
        }
    }

    fn metric(&self) -> Metric {
        Metric::Kendall
    }

    fn length(&self) -> usize {
        self.k + self.r
    }

    fn info_len(&self) -> usize {
        self.k
    }

    /// 3 once two check digits are present; larger `r` is measured, not claimed.
    fn designed_distance(&self) -> u64 {
        self.r.min(2) as u64 + 1
    }

    fn encode(&self, info: &Permutation) -> Result<Permutation> {
        check_info(info, self.k)?;
        let mut digits = phi(info).into_digits();
        // ρ_j < m <= k + 1 <= k + j, so each digit fits its radix
        digits.extend(self.check_digits(info));
        Ok(phi_inverse(&Factoradic::new(digits)?))
    }

    fn decode(&self, received: &Permutation) -> Result<Permutation> {
        Ok(self.decode_traced(received)?.info)
    }

    fn params(&self) -> Vec<(&'static str, String)> {
        vec![("r", self.r.to_string()), ("m", self.m.to_string())]
    }
}

/// Every codeword of the weighted-sum code, ordered by information rank.
pub fn rho_code_build(spec: &RhoCodeSpec) -> Result<Codebook> {
    build_codebook(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&p(&[4, 1, 3, 2]), 1, 5), 1);
        assert_eq!(rho(&p(&[4, 1, 3, 2]), 2, 5), 1);
        assert_eq!(rho(&p(&[4, 3, 1, 2]), 2, 5), 4);
    }

    #[test]
    fn modulus_choice() {
        assert_eq!(RhoCodeSpec::new(3, 2).unwrap().modulus(), 3);
        assert_eq!(RhoCodeSpec::new(4, 2).unwrap().modulus(), 5);
        assert_eq!(RhoCodeSpec::new(6, 2).unwrap().modulus(), 7);
        assert!(RhoCodeSpec::new(8, 2).is_err());
        assert!(RhoCodeSpec::new(2, 2).is_err());
        assert!(RhoCodeSpec::with_modulus(4, 2, 4).is_err());
        assert!(RhoCodeSpec::with_modulus(5, 2, 7).is_err());
    }

    #[test]
    fn encode_examples() {
        let spec = RhoCodeSpec::construction1(4).unwrap();
        assert_eq!(spec.encode(&p(&[4, 1, 3, 2])).unwrap(), p(&[4, 1, 3, 5, 6, 2]));
        assert_eq!(spec.encode(&p(&[4, 3, 1, 2])).unwrap(), p(&[4, 6, 3, 5, 1, 2]));
        let spec = RhoCodeSpec::construction1(3).unwrap();
        assert_eq!(spec.encode(&p(&[1, 2, 3])).unwrap(), p(&[1, 2, 4, 5, 3]));
        assert!(spec.encode(&p(&[1, 2])).is_err());
    }

    #[test]
    fn decode_examples() {
        let spec = RhoCodeSpec::construction1(4).unwrap();
        let trace = spec.decode_traced(&p(&[4, 3, 1, 5, 6, 2])).unwrap();
        assert_eq!(trace.info, p(&[4, 1, 3, 2]));
        assert_eq!(trace.transposition, Some(2));
        assert_eq!(trace.received_checks, vec![1, 1]);
        assert_eq!(trace.reencoded_checks, vec![2, 4]);
        assert_eq!(trace.reencoded, p(&[4, 6, 3, 5, 1, 2]));
        assert_eq!(spec.decode(&p(&[4, 1, 3, 5, 6, 2])).unwrap(), p(&[4, 1, 3, 2]));
        assert_eq!(spec.decode(&p(&[4, 1, 3, 6, 5, 2])).unwrap(), p(&[4, 1, 3, 2]));
    }

    #[test]
    fn word_beyond_radius_is_flagged() {
        // distance 3 from both [1,4,5,3,2,6] and [1,5,2,4,6,3]
        let spec = RhoCodeSpec::construction1(4).unwrap();
        let err = spec.decode(&p(&[1, 4, 2, 5, 6, 3])).unwrap_err();
        assert!(matches!(err, crate::Error::Uncorrectable(_)), "{err:?}");
    }

    #[test]
    fn single_swap_congruences() {
        // swapping positions i, i+1 with gap Δ moves ρ_1 by 2Δ and ρ_2 by 8iΔ
        for k in 3..=5 {
            let m = RhoCodeSpec::new(k, 2).unwrap().modulus() as i64;
            for f in permutations(k) {
                for i in 1..k {
                    let g = f.adjacent_transposition(i).unwrap();
                    let delta = f.apply(i + 1) as i64 - f.apply(i) as i64;
                    let d1 = rho(&f, 1, m as usize) as i64 - rho(&g, 1, m as usize) as i64;
                    let d2 = rho(&f, 2, m as usize) as i64 - rho(&g, 2, m as usize) as i64;
                    assert_eq!((d1 - 2 * delta).rem_euclid(m), 0);
                    assert_eq!((d2 - 8 * i as i64 * delta).rem_euclid(m), 0);
                }
            }
        }
    }

    #[test]
    fn r2_matches_construction1() {
        let spec = RhoCodeSpec::with_modulus(4, 2, 5).unwrap();
        let cb = rho_code_build(&spec).unwrap();
        assert_eq!(cb.len(), 24);
        let c1 = RhoCodeSpec::construction1(4).unwrap();
        for (info, word) in permutations(4).zip(cb.codewords()) {
            assert_eq!(&c1.encode(&info).unwrap(), word);
        }
    }

    #[test]
    fn larger_r_still_decodes_single_errors() {
        let spec = RhoCodeSpec::new(4, 6).unwrap();
        for info in permutations(4) {
            let word = spec.encode(&info).unwrap();
            for i in 1..word.len() {
                let bad = word.adjacent_transposition(i).unwrap();
                assert_eq!(spec.decode(&bad).unwrap(), info);
            }
        }
    }
}
