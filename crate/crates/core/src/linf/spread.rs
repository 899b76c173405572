use crate::code::{check_info, check_received, ConstructionId, SystematicCode};
use crate::error::{invalid, uncorrectable, Result};
use crate::perm::{Metric, Permutation};

/// ℓ∞ code whose first `k` coordinates hold the anchors `1, 1+d, ..., 1+(k-1)d`
/// in the order of the information permutation, with the remaining values
/// ascending in the tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadCodeSpec {
    n: usize,
    d: usize,
    k: usize,
}

impl SpreadCodeSpec {
    pub fn new(n: usize, d: usize, k: usize) -> Result<Self> {
        if d == 0 || n == 0 {
            return invalid("need n >= 1 and d >= 1");
        }
        let max_k = n.div_ceil(d);
        if k == 0 || k > max_k {
            return invalid(format!("need 1 <= k <= ceil(n/d) = {max_k}, got k = {k}"));
        }
        Ok(Self { n, d, k })
    }

    /// Uses the largest admissible `k = ⌈n/d⌉`.
    pub fn with_max_k(n: usize, d: usize) -> Result<Self> {
        Self::new(n, d, n.div_ceil(d.max(1)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn anchors(&self) -> Vec<usize> {
        (0..self.k).map(|j| 1 + j * self.d).collect()
    }

    /// 0-based index of the anchor nearest to `x`; `None` on a tie.
    fn nearest_anchor(&self, x: usize) -> Option<usize> {
        let (q, rem) = ((x - 1) / self.d, (x - 1) % self.d);
        let j = match (2 * rem).cmp(&self.d) {
            std::cmp::Ordering::Less => q,
            std::cmp::Ordering::Greater => q + 1,
            std::cmp::Ordering::Equal if q + 1 < self.k => return None,
            std::cmp::Ordering::Equal => q,
        };
        Some(j.min(self.k - 1))
    }
}

impl SystematicCode for SpreadCodeSpec {
    fn construction(&self) -> ConstructionId {
        ConstructionId::C6
    }

    fn metric(&self) -> Metric {
        Metric::Linf
    }

    fn length(&self) -> usize {
        self.n
    }

    fn info_len(&self) -> usize {
        self.k
    }

    fn designed_distance(&self) -> u64 {
        self.d as u64
    }

    fn encode(&self, info: &Permutation) -> Result<Permutation> {
        check_info(info, self.k)?;
        let mut used = vec![false; self.n + 1];
        let mut entries: Vec<usize> = info.entries().iter().map(|&v| 1 + (v - 1) * self.d).collect();
        for &a in &entries {
            used[a] = true;
        }
        entries.extend((1..=self.n).filter(|&v| !used[v]));
        Permutation::new(entries)
    }

    /// Rounds each information coordinate to its nearest anchor.
    fn decode(&self, received: &Permutation) -> Result<Permutation> {
        check_received(received, self.n)?;
        let mut seen = vec![false; self.k];
        let mut info = Vec::with_capacity(self.k);
        for (pos, &x) in received.entries()[..self.k].iter().enumerate() {
            let Some(j) = self.nearest_anchor(x) else {
                return uncorrectable(format!("value {x} at position {} is midway between anchors", pos + 1));
            };
            if std::mem::replace(&mut seen[j], true) {
                return uncorrectable(format!("two positions round to anchor {}", 1 + j * self.d));
            }
            info.push(j + 1);
        }
        Permutation::new(info)
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
    fn encode_examples() {
        let code = SpreadCodeSpec::new(6, 2, 3).unwrap();
        assert_eq!(code.anchors(), vec![1, 3, 5]);
        assert_eq!(code.encode(&p(&[1, 2, 3])).unwrap(), p(&[1, 3, 5, 2, 4, 6]));
        assert_eq!(code.encode(&p(&[2, 1, 3])).unwrap(), p(&[3, 1, 5, 2, 4, 6]));
        let code = SpreadCodeSpec::new(9, 3, 3).unwrap();
        assert_eq!(code.encode(&p(&[2, 1, 3])).unwrap(), p(&[4, 1, 7, 2, 3, 5, 6, 8, 9]));
        assert!(SpreadCodeSpec::new(6, 2, 4).is_err());
    }

    #[test]
    fn decode_examples() {
        let code = SpreadCodeSpec::new(9, 3, 3).unwrap();
        assert_eq!(code.decode(&p(&[5, 1, 7, 2, 3, 4, 6, 8, 9])).unwrap(), p(&[2, 1, 3]));
        let code = SpreadCodeSpec::new(6, 2, 3).unwrap();
        assert_eq!(code.decode(&p(&[3, 1, 5, 2, 4, 6])).unwrap(), p(&[2, 1, 3]));
        // 2 is midway between anchors 1 and 3
        assert!(code.decode(&p(&[2, 1, 5, 3, 4, 6])).is_err());
    }
}
