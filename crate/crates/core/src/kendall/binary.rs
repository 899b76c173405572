use std::collections::HashMap;

use crate::error::{invalid, uncorrectable, Result};

/// A systematic binary linear code `u ↦ (u | uP)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCodeSpec {
    name: String,
    /// `k_bits × (n_bits - k_bits)` parity part `P`.
    parity: Vec<Vec<bool>>,
    redundancy: usize,
    d_min: usize,
    shorten_count: usize,
}

impl BinaryCodeSpec {
    /// Builds a code from its parity part; `d_min` is taken on trust.
    pub fn new(name: impl Into<String>, parity: Vec<Vec<bool>>, redundancy: usize, d_min: usize) -> Result<Self> {
        if parity.iter().any(|row| row.len() != redundancy) {
            return invalid("every parity row must have one entry per redundancy bit");
        }
        if d_min == 0 {
            return invalid("minimum distance must be positive");
        }
        Ok(Self {
            name: name.into(),
            parity,
            redundancy,
            d_min,
            shorten_count: 0,
        })
    }

    /// Hamming code of length `2^r - 1`; information columns in increasing
    /// binary order, unit vectors as parity columns.
    pub fn hamming(r: usize) -> Result<Self> {
        if !(2..=16).contains(&r) {
            return invalid(format!("Hamming redundancy must lie in 2..=16, got {r}"));
        }
        let parity = (1u32..1 << r)
            .filter(|c| !c.is_power_of_two())
            .map(|c| (0..r).rev().map(|b| (c >> b) & 1 == 1).collect())
            .collect();
        Self::new(format!("hamming:{r}"), parity, r, 3)
    }

    /// Repetition code of length `n`.
    pub fn repetition(n: usize) -> Result<Self> {
        if n < 1 {
            return invalid("repetition length must be positive");
        }
        Self::new(format!("repetition:{n}"), vec![vec![true; n - 1]], n - 1, n)
    }

    /// Fixes the leading `s` information bits to zero and deletes them.
    pub fn shorten(&self, s: usize) -> Result<Self> {
        if s > self.k_bits() {
            return invalid(format!("cannot shorten {} information bits by {s}", self.k_bits()));
        }
        Ok(Self {
            name: self.name.clone(),
            parity: self.parity[s..].to_vec(),
            redundancy: self.redundancy,
            d_min: self.d_min,
            shorten_count: self.shorten_count + s,
        })
    }

    /// Family name such as `hamming:4`, without the shortening.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_bits(&self) -> usize {
        self.k_bits() + self.redundancy
    }

    pub fn k_bits(&self) -> usize {
        self.parity.len()
    }

    pub fn redundancy(&self) -> usize {
        self.redundancy
    }

    pub fn d_min(&self) -> usize {
        self.d_min
    }

    pub fn shorten_count(&self) -> usize {
        self.shorten_count
    }

    /// Parity bits `uP` of an information vector.
    pub fn parity_bits(&self, info: &[bool]) -> Result<Vec<bool>> {
        if info.len() != self.k_bits() {
            return invalid(format!("expected {} information bits, got {}", self.k_bits(), info.len()));
        }
        let mut out = vec![false; self.redundancy];
        for (row, _) in self.parity.iter().zip(info).filter(|(_, &b)| b) {
            for (o, &p) in out.iter_mut().zip(row) {
                *o ^= p;
            }
        }
        Ok(out)
    }

    pub fn encode(&self, info: &[bool]) -> Result<Vec<bool>> {
        let mut word = info.to_vec();
        word.extend(self.parity_bits(info)?);
        Ok(word)
    }

    /// `H r` for `H = [Pᵀ | I]`.
    pub fn syndrome(&self, word: &[bool]) -> Result<Vec<bool>> {
        if word.len() != self.n_bits() {
            return invalid(format!("expected {} bits, got {}", self.n_bits(), word.len()));
        }
        let (info, tail) = word.split_at(self.k_bits());
        let mut s = self.parity_bits(info)?;
        for (x, &t) in s.iter_mut().zip(tail) {
            *x ^= t;
        }
        Ok(s)
    }

    /// Corrects up to `⌊(d_min-1)/2⌋` bit errors by syndrome lookup and
    /// returns the information bits.
    pub fn decode(&self, word: &[bool]) -> Result<Vec<bool>> {
        let s = self.syndrome(word)?;
        let mut fixed = word.to_vec();
        if s.iter().any(|&b| b) {
            let table = self.syndrome_table();
            let Some(flips) = table.get(&s) else {
                return uncorrectable("syndrome matches no correctable error pattern");
            };
            for &i in flips {
                fixed[i] ^= true;
            }
        }
        fixed.truncate(self.k_bits());
        Ok(fixed)
    }

    /// Syndrome of every error pattern of weight `1..=⌊(d_min-1)/2⌋`.
    fn syndrome_table(&self) -> HashMap<Vec<bool>, Vec<usize>> {
        let t = (self.d_min - 1) / 2;
        let n = self.n_bits();
        let mut table = HashMap::new();
        let mut support = Vec::new();
        fn walk(
            spec: &BinaryCodeSpec,
            start: usize,
            left: usize,
            n: usize,
            support: &mut Vec<usize>,
            table: &mut HashMap<Vec<bool>, Vec<usize>>,
        ) {
            for i in start..n {
                support.push(i);
                let mut e = vec![false; n];
                for &j in support.iter() {
                    e[j] = true;
                }
                let s = spec.syndrome(&e).expect("length matches");
                table.entry(s).or_insert_with(|| support.clone());
                if left > 1 {
                    walk(spec, i + 1, left - 1, n, support, table);
                }
                support.pop();
            }
        }
        if t > 0 {
            walk(self, 0, t, n, &mut support, &mut table);
        }
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(v: u32, w: usize) -> Vec<bool> {
        (0..w).rev().map(|b| (v >> b) & 1 == 1).collect()
    }

    fn min_weight(code: &BinaryCodeSpec) -> usize {
        (1u32..1 << code.k_bits())
            .map(|u| code.encode(&bits(u, code.k_bits())).unwrap().iter().filter(|&&b| b).count())
            .min()
            .unwrap()
    }

    #[test]
    fn hamming_parameters() {
        let h = BinaryCodeSpec::hamming(4).unwrap();
        assert_eq!((h.n_bits(), h.k_bits(), h.d_min()), (15, 11, 3));
        assert_eq!(min_weight(&h), 3);
        let s = h.shorten(3).unwrap();
        assert_eq!((s.n_bits(), s.k_bits(), s.shorten_count()), (12, 8, 3));
        assert_eq!(min_weight(&s), 3);
        assert_eq!(min_weight(&BinaryCodeSpec::hamming(3).unwrap()), 3);
    }

    #[test]
    fn corrects_single_errors() {
        let h = BinaryCodeSpec::hamming(3).unwrap();
        for u in 0..16 {
            let info = bits(u, 4);
            let word = h.encode(&info).unwrap();
            assert_eq!(h.decode(&word).unwrap(), info);
            for i in 0..7 {
                let mut bad = word.clone();
                bad[i] ^= true;
                assert_eq!(h.decode(&bad).unwrap(), info);
            }
        }
    }

    #[test]
    fn repetition_corrects_one_of_three() {
        let r = BinaryCodeSpec::repetition(3).unwrap();
        assert_eq!(r.encode(&[true]).unwrap(), vec![true; 3]);
        assert_eq!(r.decode(&[true, false, false]).unwrap(), vec![false]);
        assert_eq!(r.decode(&[true, true, false]).unwrap(), vec![true]);
    }

    #[test]
    fn detects_beyond_radius() {
        // two errors in a length-4 repetition word are equidistant from both codewords
        let r = BinaryCodeSpec::repetition(4).unwrap();
        assert!(r.decode(&[true, true, false, false]).is_err());
    }
}
