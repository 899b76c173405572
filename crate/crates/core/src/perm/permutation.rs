use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// A permutation of `[n] = {1, ..., n}` in single-line notation.
///
/// Entries are 1-based: `entries()[i - 1]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Validates that `entries` is a bijection of `[n]` with `n >= 1`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return invalid("permutation must have length at least 1");
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return invalid(format!("entry {v} outside [1, {n}]"));
            }
            if seen[v] {
                return invalid(format!("entry {v} appears more than once"));
            }
            seen[v] = true;
        }
        Ok(Self { entries })
    }

    /// Caller guarantees `entries` is a bijection of `[n]`.
    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity of length 0");
        Self {
            entries: (1..=n).collect(),
        }
    }

    /// The reversal `[n, n-1, ..., 1]`.
    pub fn reversal(n: usize) -> Self {
        assert!(n >= 1, "reversal of length 0");
        Self {
            entries: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    /// `f(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// The permutation sending `f(i)` to `i`.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (pos, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Self { entries: inv }
    }

    /// Composition `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same_len(self, other)?;
        Ok(Self {
            entries: other.entries.iter().map(|&v| self.entries[v - 1]).collect(),
        })
    }

    /// Swaps the entries at 1-based positions `i` and `i + 1`.
    pub fn adjacent_transposition(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.len() {
            return invalid(format!(
                "adjacent transposition index {i} outside [1, {}]",
                self.len().saturating_sub(1)
            ));
        }
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Ok(Self { entries })
    }

    /// `f|_A`: keep the coordinates in `A`, then relabel to `[m]` keeping order.
    pub fn project_coords(&self, set: &IndexSet) -> Result<Self> {
        if set.ambient() != self.len() {
            return invalid(format!(
                "index set over [{}] applied to permutation of length {}",
                set.ambient(),
                self.len()
            ));
        }
        let kept: Vec<usize> = set.members().iter().map(|&a| self.entries[a - 1]).collect();
        Ok(relabel(&kept))
    }

    /// `f|^A = (f⁻¹|_A)⁻¹`: keep the values in `A`, then relabel to `[m]`.
    pub fn project_values(&self, set: &IndexSet) -> Result<Self> {
        if set.ambient() != self.len() {
            return invalid(format!(
                "index set over [{}] applied to permutation of length {}",
                set.ambient(),
                self.len()
            ));
        }
        let mut member = vec![false; self.len() + 1];
        for &a in set.members() {
            member[a] = true;
        }
        let kept: Vec<usize> = self.entries.iter().copied().filter(|&v| member[v]).collect();
        Ok(relabel(&kept))
    }

    /// `f|^{[k]}`: the relative order of the values `1..=k`.
    ///
    /// Values `1..=k` need no relabeling, so this is a plain filter.
    pub fn project_values_prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.len() {
            return invalid(format!("prefix length {k} outside [1, {}]", self.len()));
        }
        Ok(Self {
            entries: self.entries.iter().copied().filter(|&v| v <= k).collect(),
        })
    }

    /// `f|_{[k]}`: the relative order of the first `k` coordinates.
    pub fn project_coords_prefix(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.len() {
            return invalid(format!("prefix length {k} outside [1, {}]", self.len()));
        }
        Ok(relabel(&self.entries[..k]))
    }
}

/// Replaces distinct values by their ranks `1..=len`.
fn relabel(values: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut out = vec![0; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank + 1;
    }
    Permutation { entries: out }
}

pub(crate) fn check_same_len(f: &Permutation, g: &Permutation) -> Result<()> {
    if f.len() != g.len() {
        return invalid(format!("length mismatch: {} vs {}", f.len(), g.len()));
    }
    Ok(())
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

/// Space-separated single-line notation, e.g. `4 1 3 5 6 2`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.entries {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses whitespace- and/or comma-separated entries, optionally wrapped in brackets.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        let entries = trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("not an integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(entries)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        Permutation::new(entries)
    }
}

/// A nonempty, strictly increasing subset `{a_1 < ... < a_m}` of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    ambient: usize,
    members: Vec<usize>,
}

impl IndexSet {
    pub fn new(ambient: usize, members: Vec<usize>) -> Result<Self> {
        if members.is_empty() {
            return invalid("index set must be nonempty");
        }
        if let Some(&bad) = members.iter().find(|&&a| a == 0 || a > ambient) {
            return invalid(format!("member {bad} outside [1, {ambient}]"));
        }
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return invalid("index set members must be strictly increasing");
        }
        Ok(Self { ambient, members })
    }

    /// `[k]` as a subset of `[n]`.
    pub fn prefix(ambient: usize, k: usize) -> Result<Self> {
        Self::new(ambient, (1..=k).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!("4 1 3 3".parse::<Permutation>().is_err());
        assert!("4 1 x 2".parse::<Permutation>().is_err());
    }

    #[test]
    fn parse_and_display() {
        let f: Permutation = "[6, 1, 3, 5, 2, 4]".parse().unwrap();
        assert_eq!(f.entries(), &[6, 1, 3, 5, 2, 4]);
        assert_eq!(f.to_string(), "6 1 3 5 2 4");
        assert_eq!("6 1 3 5 2 4".parse::<Permutation>().unwrap(), f);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[1, 2, 3]).inverse(), p(&[1, 2, 3]));
        assert_eq!(p(&[2, 1]).inverse(), p(&[2, 1]));
        let f = p(&[6, 1, 3, 5, 2, 4]);
        assert_eq!(f.inverse(), p(&[2, 5, 3, 6, 4, 1]));
        assert_eq!(f.inverse().inverse(), f);
        assert_eq!(f.compose(&f.inverse()).unwrap(), Permutation::identity(6));
    }

    #[test]
    fn coordinate_projection() {
        let f = p(&[6, 1, 3, 5, 2, 4]);
        let a = IndexSet::new(6, vec![3, 5, 6]).unwrap();
        assert_eq!(f.project_coords(&a).unwrap(), p(&[2, 1, 3]));
        let a = IndexSet::new(4, vec![1, 2]).unwrap();
        assert_eq!(p(&[4, 3, 2, 1]).project_coords(&a).unwrap(), p(&[2, 1]));
        let a = IndexSet::new(5, vec![2, 4, 5]).unwrap();
        assert_eq!(Permutation::identity(5).project_coords(&a).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn value_projection() {
        let f = p(&[6, 1, 3, 5, 2, 4]);
        let a = IndexSet::new(6, vec![3, 5, 6]).unwrap();
        assert_eq!(f.project_values(&a).unwrap(), p(&[3, 1, 2]));
        // definition via the inverse
        assert_eq!(
            f.project_values(&a).unwrap(),
            f.inverse().project_coords(&a).unwrap().inverse()
        );
        let g = p(&[6, 1, 3, 2, 5, 4]);
        let a = IndexSet::prefix(6, 4).unwrap();
        assert_eq!(g.project_values(&a).unwrap(), p(&[1, 3, 2, 4]));
        assert_eq!(g.project_values_prefix(4).unwrap(), p(&[1, 3, 2, 4]));
        let a = IndexSet::new(5, vec![1, 4]).unwrap();
        assert_eq!(Permutation::identity(5).project_values(&a).unwrap(), Permutation::identity(2));
    }

    #[test]
    fn projection_rejects_mismatched_ambient() {
        let a = IndexSet::new(5, vec![1, 2]).unwrap();
        assert!(Permutation::identity(6).project_coords(&a).is_err());
        assert!(Permutation::identity(6).project_values(&a).is_err());
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(5, vec![]).is_err());
        assert!(IndexSet::new(5, vec![0, 2]).is_err());
        assert!(IndexSet::new(5, vec![2, 6]).is_err());
        assert!(IndexSet::new(5, vec![3, 2]).is_err());
        assert!(IndexSet::new(5, vec![2, 2]).is_err());
    }

    #[test]
    fn adjacent_transposition_bounds() {
        let f = p(&[1, 2, 3]);
        assert_eq!(f.adjacent_transposition(1).unwrap(), p(&[2, 1, 3]));
        assert!(f.adjacent_transposition(0).is_err());
        assert!(f.adjacent_transposition(3).is_err());
    }
}
