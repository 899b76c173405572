use num_traits::ToPrimitive;

use crate::code::{check_info, check_received, ConstructionId, SystematicCode};
use crate::codebook::Codebook;
use crate::combin::factorial_u64;
use crate::error::{invalid, Error, Result};
use crate::perm::{kendall_distance_with_inverse, permutations, rank, Metric, Permutation};

/// Greedy `[n, k, d]` Kendall code.
///
/// Scans `S_n` once in lexicographic order and keeps every permutation that
/// is at distance `>= d` from all kept ones and carries an information
/// permutation not seen yet. Restarting the scan after each acceptance would
/// pick the same words, since a rejected candidate can never become
/// admissible again. The codebook is returned in information-rank order.
pub fn c5_greedy(n: usize, k: usize, d: u64) -> Result<Codebook> {
    if k < 2 || k >= n {
        return invalid(format!("greedy search needs 2 <= k < n, got k = {k}, n = {n}"));
    }
    let target = factorial_u64(k)
        .and_then(|f| usize::try_from(f).ok())
        .filter(|&f| f <= 1 << 24)
        .ok_or_else(|| Error::InvalidArgument(format!("{k}! information classes is too many")))?;

    let mut slots: Vec<Option<Permutation>> = vec![None; target];
    let mut inverses: Vec<Permutation> = Vec::with_capacity(target);
    let mut found = 0;
    for f in permutations(n) {
        let slot = info_rank(&f, k);
        if slots[slot].is_some() {
            continue;
        }
        if inverses.iter().any(|g_inv| kendall_distance_with_inverse(&f, g_inv) < d) {
            continue;
        }
        inverses.push(f.inverse());
        slots[slot] = Some(f);
        found += 1;
        if found == target {
            break;
        }
    }
    if found < target {
        return Err(Error::ConstructionFailure(format!(
            "greedy search for an [{n}, {k}, {d}] code stopped after {found} of {target} codewords"
        )));
    }
    let codewords = slots.into_iter().map(|s| s.expect("all slots filled")).collect();
    Codebook::new(n, k, d, Metric::Kendall, ConstructionId::C5, codewords)
}

fn info_rank(f: &Permutation, k: usize) -> usize {
    let info = f.project_values_prefix(k).expect("k <= n");
    rank(&info).to_usize().expect("k! fits in usize")
}

/// A greedy codebook wrapped with table encoding and nearest-codeword decoding.
#[derive(Clone, Debug)]
pub struct GreedyCode {
    codebook: Codebook,
    inverses: Vec<Permutation>,
}

impl GreedyCode {
    pub fn new(n: usize, k: usize, d: u64) -> Result<Self> {
        Ok(Self::from_codebook(c5_greedy(n, k, d)?))
    }

    /// Wraps a codebook whose codewords are ordered by information rank.
    pub fn from_codebook(codebook: Codebook) -> Self {
        let inverses = codebook.codewords().iter().map(Permutation::inverse).collect();
        Self { codebook, inverses }
    }

    pub fn codebook(&self) -> &Codebook {
        &self.codebook
    }
}

impl SystematicCode for GreedyCode {
    fn construction(&self) -> ConstructionId {
        ConstructionId::C5
    }

    fn metric(&self) -> Metric {
        Metric::Kendall
    }

    fn length(&self) -> usize {
        self.codebook.n()
    }

    fn info_len(&self) -> usize {
        self.codebook.k()
    }

    fn designed_distance(&self) -> u64 {
        self.codebook.d_claimed()
    }

    fn encode(&self, info: &Permutation) -> Result<Permutation> {
        check_info(info, self.info_len())?;
        let idx = rank(info).to_usize().expect("k! fits in usize");
        Ok(self.codebook.codewords()[idx].clone())
    }

    /// Nearest codeword; ties go to the lowest information rank.
    fn decode(&self, received: &Permutation) -> Result<Permutation> {
        check_received(received, self.length())?;
        let (best, _) = self
            .inverses
            .iter()
            .enumerate()
            .map(|(i, g_inv)| (i, kendall_distance_with_inverse(received, g_inv)))
            .min_by_key(|&(i, dist)| (dist, i))
            .expect("codebook is nonempty");
        self.codebook.information_of(&self.codebook.codewords()[best])
    }

    fn params(&self) -> Vec<(&'static str, String)> {
        Vec::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn perfect_three_two_three() {
        let cb = c5_greedy(3, 2, 3).unwrap();
        assert_eq!(cb.codewords(), &[p(&[1, 2, 3]), p(&[3, 2, 1])]);
    }

    #[test]
    fn impossible_distance_fails() {
        assert!(matches!(c5_greedy(3, 2, 4), Err(Error::ConstructionFailure(_))));
        assert!(matches!(c5_greedy(3, 3, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn decode_round_trip() {
        let code = GreedyCode::new(5, 3, 3).unwrap();
        for (i, w) in code.codebook().codewords().iter().enumerate() {
            let info = code.codebook().information_of(w).unwrap();
            assert_eq!(rank(&info).to_usize().unwrap(), i);
            assert_eq!(code.encode(&info).unwrap(), *w);
            assert_eq!(code.decode(w).unwrap(), info);
        }
    }
}
