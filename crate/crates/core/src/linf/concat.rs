use num_bigint::BigUint;
use num_traits::Zero;

use crate::code::{check_info, check_received, ConstructionId, SystematicCode};
use crate::combin::factorial;
use crate::error::{invalid, uncorrectable, Result};
use crate::perm::{rank, unrank, Metric, Permutation};

/// Positions (equivalently values) of `[n]` congruent to `r` modulo `d`.
fn residue_class(n: usize, d: usize, r: usize) -> Vec<usize> {
    (r..=n).step_by(d).collect()
}

/// `|{c ∈ S_n : c(i) ≡ i (mod d)}|`, the product of the class factorials.
pub fn inner_code_size(n: usize, d: usize) -> BigUint {
    assert!(1 <= d && d <= n, "need 1 <= d <= n");
    let (q, r) = (n / d, n % d);
    factorial(q + 1).pow(r as u32) * factorial(q).pow((d - r) as u32)
}

/// Largest `k` with `k! <= inner_code_size(n, d)`.
pub fn c7_info_len(n: usize, d: usize) -> usize {
    let size = inner_code_size(n, d);
    let mut k = 1;
    let mut next = BigUint::from(2u32);
    while next <= size {
        k += 1;
        next *= k + 1;
    }
    k
}

/// Index of `c` among the residue-preserving permutations: mixed radix over
/// the classes `1..=d` (class 1 most significant), each ranked lexicographically.
pub fn inner_rank(c: &Permutation, d: usize) -> Result<BigUint> {
    let n = c.len();
    if d == 0 || d > n {
        return invalid(format!("need 1 <= d <= n, got d = {d}"));
    }
    let mut acc = BigUint::zero();
    for r in 1..=d {
        let class = residue_class(n, d, r);
        let mut local = Vec::with_capacity(class.len());
        for &pos in &class {
            let v = c.apply(pos);
            if v % d != pos % d {
                return invalid(format!("value {v} at position {pos} breaks the residue constraint"));
            }
            local.push((v - r) / d + 1);
        }
        acc = acc * factorial(class.len()) + rank(&Permutation::new(local)?);
    }
    Ok(acc)
}

/// Inverse of [`inner_rank`].
pub fn inner_unrank(i: &BigUint, n: usize, d: usize) -> Result<Permutation> {
    if d == 0 || d > n {
        return invalid(format!("need 1 <= d <= n, got d = {d}"));
    }
    if *i >= inner_code_size(n, d) {
        return invalid(format!("index {i} outside the inner code"));
    }
    let mut entries = vec![0; n];
    let mut rest = i.clone();
    for r in (1..=d).rev() {
        let class = residue_class(n, d, r);
        let radix = factorial(class.len());
        let digit = &rest % &radix;
        rest /= radix;
        let local = unrank(&digit, class.len())?;
        for (&pos, &j) in class.iter().zip(local.entries()) {
            entries[pos - 1] = class[j - 1];
        }
    }
    Permutation::new(entries)
}

/// ℓ∞ code `f″_i ‖ f′_i`: the information permutation (shifted above `n`)
/// followed by the `i`-th residue-preserving permutation of `[n]`, where `i`
/// is the information rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatCodeSpec {
    n: usize,
    d: usize,
    k: usize,
    inner_size: BigUint,
}

impl ConcatCodeSpec {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d == 0 || d > n {
            return invalid(format!("need 1 <= d <= n, got n = {n}, d = {d}"));
        }
        Ok(Self {
            n,
            d,
            k: c7_info_len(n, d),
            inner_size: inner_code_size(n, d),
        })
    }

    /// Inner length `n`; codewords have length `n + k`.
    pub fn inner_len(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn inner_size(&self) -> &BigUint {
        &self.inner_size
    }

    /// Nearest value of `[n]` congruent to `pos` modulo `d`; `None` on a tie.
    fn round_to_class(&self, pos: usize, v: usize) -> Option<usize> {
        let class = residue_class(self.n, self.d, (pos - 1) % self.d + 1);
        let mut best: Option<(usize, usize)> = None;
        let mut tied = false;
        for &c in &class {
            let dist = c.abs_diff(v);
            match best {
                Some((_, bd)) if dist > bd => {}
                Some((_, bd)) if dist == bd => tied = true,
                _ => {
                    best = Some((c, dist));
                    tied = false;
                }
            }
        }
        if tied {
            None
        } else {
            best.map(|(c, _)| c)
        }
    }
}

impl SystematicCode for ConcatCodeSpec {
    fn construction(&self) -> ConstructionId {
        ConstructionId::C7
    }

    fn metric(&self) -> Metric {
        Metric::Linf
    }

    fn length(&self) -> usize {
        self.n + self.k
    }

    fn info_len(&self) -> usize {
        self.k
    }

    fn designed_distance(&self) -> u64 {
        self.d as u64
    }

    fn encode(&self, info: &Permutation) -> Result<Permutation> {
        check_info(info, self.k)?;
        let suffix = inner_unrank(&rank(info), self.n, self.d)?;
        let mut entries: Vec<usize> = info.entries().iter().map(|&v| v + self.n).collect();
        entries.extend_from_slice(suffix.entries());
        Permutation::new(entries)
    }

    /// Reads only the suffix: rounds each entry into its residue class.
    fn decode(&self, received: &Permutation) -> Result<Permutation> {
        check_received(received, self.length())?;
        let mut suffix = Vec::with_capacity(self.n);
        for (j, &v) in received.entries()[self.k..].iter().enumerate() {
            match self.round_to_class(j + 1, v) {
                Some(c) => suffix.push(c),
                None => return uncorrectable(format!("value {v} at suffix position {} is a tie", j + 1)),
            }
        }
        let Ok(suffix) = Permutation::new(suffix) else {
            return uncorrectable("rounded suffix is not a permutation");
        };
        let i = inner_rank(&suffix, self.d)?;
        if i >= factorial(self.k) {
            return uncorrectable(format!("inner index {i} exceeds {}!", self.k));
        }
        unrank(&i, self.k)
    }

    fn params(&self) -> Vec<(&'static str, String)> {
        vec![("inner_n", self.n.to_string())]
    }
}

impl ConcatCodeSpec {
    /// `true` when `k! <= |C′| < (k+1)!`.
    pub fn info_len_is_maximal(&self) -> bool {
        let fk = factorial(self.k);
        fk <= self.inner_size && self.inner_size < fk * BigUint::from(self.k + 1)
    }
}
