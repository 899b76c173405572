//! `[n+1, k+1, 2t+2]` codes from p-ary BCH codes lifted to `Z^n`.
//!
//! The parity-check matrix has rows `1, α, α², ..., α^t` over `GF(p^m)`; each
//! entry is expanded to an `m`-column over `Z_p`, giving a `(t+1)m × n` matrix
//! `H` over `Z_p`. Its kernel has minimum Lee distance at least `2t+2` for
//! `t <= (p-3)/2`. Tiling `Z^n` with it (Construction A) gives the lattice
//! `{x ∈ Z^n : Hx ≡ 0 (mod p)}` with the same ℓ1 distance. A codeword's
//! factoradic is `(0 | u | uA mod p)` where `[I_k | A]` generates the kernel;
//! the information digits `u` are unrestricted integers, so every prefix of
//! `Z_{k+1}!` is completed exactly once.

use crate::code::{check_info, check_received, ConstructionId, SystematicCode};
use crate::error::{invalid, uncorrectable, Error, Result};
use crate::perm::{phi, phi_inverse, Factoradic, Metric, Permutation};

use super::field::{FieldContext, FieldElement};

/// A Construction-A lattice code over a BCH parity-check matrix.
#[derive(Clone, Debug)]
pub struct BchLatticeCode {
    field: FieldContext,
    t: usize,
    /// `α_1, ..., α_n` in systematic coordinate order.
    alphas: Vec<FieldElement>,
    /// `column_order[j]` is the index into the caller's α list of coordinate `j`.
    column_order: Vec<usize>,
    /// Row-reduced `H` over `Z_p`, `rank × n`, systematic coordinate order.
    parity: Vec<Vec<u32>>,
    /// `k × (n - k)` redundancy map: codeword is `(u | uA mod p)`.
    a: Vec<Vec<u32>>,
    /// Rank of the full `(t+1)m × n` expansion.
    rank: usize,
}

impl BchLatticeCode {
    /// Uses the first `n` nonzero field elements (by base-`p` index) as `α`s.
    pub fn new(p: u32, m: usize, t: usize, n: usize) -> Result<Self> {
        let field = FieldContext::new(p, m)?;
        check_parameters(&field, t, n)?;
        let alphas = (1..=n as u64)
            .map(|i| field.element(i))
            .collect::<Result<Vec<_>>>()?;
        Self::with_alphas(field, t, alphas)
    }

    /// Uses caller-chosen distinct nonzero `α`s; `n = alphas.len()`.
    pub fn with_alphas(field: FieldContext, t: usize, alphas: Vec<FieldElement>) -> Result<Self> {
        let n = alphas.len();
        check_parameters(&field, t, n)?;
        let mut indices: Vec<u64> = alphas.iter().map(|a| field.index_of(a)).collect();
        if alphas.iter().any(|a| a.coeffs().len() != field.degree()) || indices.contains(&0) {
            return invalid("alphas must be nonzero elements of the field");
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return invalid("alphas must be distinct");
        }

        let p = field.characteristic();
        let expanded = expand_parity_check(&field, t, &alphas);
        let (reduced, pivots) = reduce_right_to_left(expanded, p);
        let rank = pivots.len();
        let k = n - rank;
        if p as usize > k + 2 {
            return Err(Error::InfeasibleParameters(format!(
                "p = {p} exceeds k + 2 = {}, redundancy digits would overflow",
                k + 2
            )));
        }

        // Non-pivot columns become information coordinates, pivots redundancy.
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut column_order: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut pivot_cols: Vec<usize> = pivots.clone();
        pivot_cols.sort_unstable();
        column_order.extend(&pivot_cols);

        // Row i of the reduction reads x[pivots[i]] + Σ_free R[i][c] x[c] ≡ 0.
        let mut a = vec![vec![0u32; rank]; k];
        for (row, &pc) in reduced.iter().zip(&pivots) {
            let slot = pivot_cols.binary_search(&pc).expect("pivot is listed");
            for (info_idx, &c) in column_order[..k].iter().enumerate() {
                a[info_idx][slot] = (p - row[c]) % p;
            }
        }

        let parity = reduced
            .iter()
            .map(|row| column_order.iter().map(|&c| row[c]).collect())
            .collect();
        let alphas = column_order.iter().map(|&c| alphas[c].clone()).collect();
        Ok(Self {
            field,
            t,
            alphas,
            column_order,
            parity,
            a,
            rank,
        })
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// BCH length `n`; permutations have length `n + 1`.
    pub fn bch_length(&self) -> usize {
        self.alphas.len()
    }

    /// Dimension `k = n - rank H`; information permutations lie in `S_{k+1}`.
    pub fn dimension(&self) -> usize {
        self.alphas.len() - self.rank
    }

    /// `rank H = n - k`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn alphas(&self) -> &[FieldElement] {
        &self.alphas
    }

    pub fn column_order(&self) -> &[usize] {
        &self.column_order
    }

    /// Row-reduced parity-check matrix in systematic coordinate order.
    pub fn parity_check(&self) -> &[Vec<u32>] {
        &self.parity
    }

    /// The `k × (n-k)` matrix `A` of the generator `[I_k | A]`.
    pub fn redundancy_map(&self) -> &[Vec<u32>] {
        &self.a
    }

    /// `Hy mod p` for an integer vector of length `n`.
    pub fn syndrome(&self, y: &[usize]) -> Vec<u32> {
        let p = self.field.characteristic() as u64;
        self.parity
            .iter()
            .map(|row| {
                row.iter()
                    .zip(y)
                    .fold(0u64, |acc, (&h, &v)| (acc + h as u64 * (v as u64 % p)) % p) as u32
            })
            .collect()
    }

    /// `uA mod p` for an integer information vector of length `k`.
    pub fn redundancy(&self, u: &[usize]) -> Vec<usize> {
        let p = self.field.characteristic() as u64;
        (0..self.rank)
            .map(|j| {
                u.iter()
                    .zip(&self.a)
                    .fold(0u64, |acc, (&ui, row)| (acc + (ui as u64 % p) * row[j] as u64) % p)
                    as usize
            })
            .collect()
    }

    /// The p-ary codeword `(u | uA) mod p` of the BCH code itself.
    pub fn p_ary_codeword(&self, u: &[u32]) -> Vec<u32> {
        let widened: Vec<usize> = u.iter().map(|&x| x as usize).collect();
        let mut word = u.to_vec();
        word.extend(self.redundancy(&widened).into_iter().map(|x| x as u32));
        word
    }

    /// Encodes the information digits `u = (v_2, ..., v_{k+1})`.
    pub fn encode_digits(&self, u: &[usize]) -> Result<Permutation> {
        let k = self.dimension();
        if u.len() != k {
            return invalid(format!("expected {k} information digits, got {}", u.len()));
        }
        let mut digits = Vec::with_capacity(self.bch_length() + 1);
        digits.push(0);
        digits.extend_from_slice(u);
        digits.extend(self.redundancy(u));
        Ok(phi_inverse(&Factoradic::new(digits)?))
    }

    /// All signed error vectors of ℓ1 weight `1..=t`, as sparse `(index, value)` lists.
    fn error_patterns(&self) -> Vec<Vec<(usize, i64)>> {
        fn grow(
            start: usize,
            budget: usize,
            n: usize,
            current: &mut Vec<(usize, i64)>,
            out: &mut Vec<Vec<(usize, i64)>>,
        ) {
            for pos in start..n {
                for mag in 1..=budget {
                    for sign in [1i64, -1] {
                        current.push((pos, sign * mag as i64));
                        out.push(current.clone());
                        grow(pos + 1, budget - mag, n, current, out);
                        current.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        grow(0, self.t, self.bch_length(), &mut Vec::new(), &mut out);
        out
    }
}

fn check_parameters(field: &FieldContext, t: usize, n: usize) -> Result<()> {
    let p = field.characteristic() as usize;
    let m = field.degree();
    if t < 1 || 2 * t + 3 > p {
        return invalid(format!("need 1 <= t <= (p-3)/2, got t = {t}, p = {p}"));
    }
    let lower = p.pow(m as u32 - 1).max(p + t * m - 1);
    let upper = p.pow(m as u32) - 1;
    if n < lower || n > upper {
        return invalid(format!("need {lower} <= n <= {upper}, got n = {n}"));
    }
    Ok(())
}

/// Rows `α^j` for `j = 0..=t`, each expanded into `m` coefficient rows.
fn expand_parity_check(field: &FieldContext, t: usize, alphas: &[FieldElement]) -> Vec<Vec<u32>> {
    let m = field.degree();
    let mut rows = vec![vec![0u32; alphas.len()]; (t + 1) * m];
    for (col, alpha) in alphas.iter().enumerate() {
        let mut power = field.one();
        for j in 0..=t {
            for (c, &coeff) in power.coeffs().iter().enumerate() {
                rows[j * m + c][col] = coeff;
            }
            power = field.mul(&power, alpha);
        }
    }
    rows
}

/// Gauss–Jordan elimination over `Z_p`, choosing pivot columns from the right.
///
/// Returns the nonzero rows of the reduced matrix and the pivot column of
/// each; pivot column `pivots[i]` equals the unit vector `e_i`.
fn reduce_right_to_left(mut rows: Vec<Vec<u32>>, p: u32) -> (Vec<Vec<u32>>, Vec<usize>) {
    let p64 = p as u64;
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in (0..cols).rev() {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inverse_mod(rows[r][c] as u64, p64);
        for v in rows[r].iter_mut() {
            *v = (*v as u64 * inv % p64) as u32;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let factor = rows[i][c] as u64;
            for j in 0..cols {
                let sub = factor * rows[r][j] as u64 % p64;
                rows[i][j] = ((rows[i][j] as u64 + p64 - sub) % p64) as u32;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    super::rho::pow_mod(a, (p - 2) as u32, p)
}

/// Lee weight `Σ min(x_i, p - x_i)` of a vector over `Z_p`.
pub fn lee_weight(x: &[u32], p: u32) -> u64 {
    x.iter().map(|&v| (v % p).min(p - v % p) as u64).sum()
}

impl SystematicCode for BchLatticeCode {
    fn construction(&self) -> ConstructionId {
        ConstructionId::C3
    }

    fn metric(&self) -> Metric {
        Metric::Kendall
    }

    fn length(&self) -> usize {
        self.bch_length() + 1
    }

    fn info_len(&self) -> usize {
        self.dimension() + 1
    }

    fn designed_distance(&self) -> u64 {
        2 * self.t as u64 + 2
    }

    fn encode(&self, info: &Permutation) -> Result<Permutation> {
        check_info(info, self.info_len())?;
        let digits = phi(info);
        self.encode_digits(&digits.digits()[1..])
    }

    /// Bounded-distance search over all error vectors of ℓ1 weight `<= t`.
    fn decode(&self, received: &Permutation) -> Result<Permutation> {
        check_received(received, self.length())?;
        let y: Vec<usize> = phi(received).digits()[1..].to_vec();
        let p = self.field.characteristic() as i64;
        let target = self.syndrome(&y);
        let mut survivors: Vec<Vec<usize>> = Vec::new();
        if target.iter().all(|&s| s == 0) {
            survivors.push(y.clone());
        }
        for pattern in self.error_patterns() {
            // H e ≡ H y, and y - e stays inside the digit radices
            let fits = pattern.iter().all(|&(i, e)| {
                let z = y[i] as i64 - e;
                (0..=(i as i64 + 1)).contains(&z)
            });
            if !fits {
                continue;
            }
            let matches = self.parity.iter().zip(&target).all(|(row, &s)| {
                let he = pattern
                    .iter()
                    .fold(0i64, |acc, &(i, e)| acc + row[i] as i64 * e)
                    .rem_euclid(p);
                he == s as i64
            });
            if matches {
                let mut z = y.clone();
                for &(i, e) in &pattern {
                    z[i] = (z[i] as i64 - e) as usize;
                }
                survivors.push(z);
            }
        }
        match survivors.len() {
            0 => uncorrectable(format!("no codeword within distance {} of {received}", self.t)),
            1 => {
                let k = self.dimension();
                let mut info = vec![0];
                info.extend_from_slice(&survivors[0][..k]);
                Ok(phi_inverse(&Factoradic::new(info)?))
            }
            s => uncorrectable(format!("{s} codewords within distance {} of {received}", self.t)),
        }
    }

    fn params(&self) -> Vec<(&'static str, String)> {
        vec![
            ("p", self.field.characteristic().to_string()),
            ("m", self.field.degree().to_string()),
            ("t", self.t.to_string()),
            ("bch_n", self.bch_length().to_string()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;

    #[test]
    fn parameter_checks() {
        assert!(BchLatticeCode::new(3, 2, 1, 6).is_err()); // t <= (p-3)/2 = 0
        assert!(BchLatticeCode::new(5, 2, 1, 5).is_err()); // n >= p + tm - 1 = 6
        assert!(BchLatticeCode::new(5, 2, 1, 25).is_err()); // n <= p^m - 1
        assert!(BchLatticeCode::new(5, 2, 2, 9).is_err());
        assert!(BchLatticeCode::new(7, 2, 2, 12).is_ok());
    }

    #[test]
    fn rank_bound() {
        let code = BchLatticeCode::new(5, 2, 1, 9).unwrap();
        assert!(code.rank() <= 3);
        assert!(code.dimension() >= 6);
        let code = BchLatticeCode::new(5, 2, 1, 24).unwrap();
        assert!(code.rank() <= 3);
        let code = BchLatticeCode::new(7, 2, 2, 20).unwrap();
        assert!(code.rank() <= 5);
    }

    #[test]
    fn generator_lies_in_kernel() {
        let code = BchLatticeCode::new(5, 2, 1, 9).unwrap();
        let k = code.dimension();
        for i in 0..k {
            let mut u = vec![0u32; k];
            u[i] = 1;
            let word: Vec<usize> = code.p_ary_codeword(&u).into_iter().map(|x| x as usize).collect();
            assert!(code.syndrome(&word).iter().all(|&s| s == 0));
        }
    }

    #[test]
    fn column_order_is_a_permutation() {
        let code = BchLatticeCode::new(5, 2, 1, 9).unwrap();
        let mut seen = code.column_order().to_vec();
        seen.sort_unstable();
        assert_eq!(seen, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn encode_is_systematic_and_in_lattice() {
        let code = BchLatticeCode::new(5, 2, 1, 9).unwrap();
        let k1 = code.info_len();
        assert_eq!(code.encode(&Permutation::identity(k1)).unwrap(), Permutation::identity(10));
        for info in permutations(k1).step_by(37) {
            let word = code.encode(&info).unwrap();
            assert_eq!(word.project_values_prefix(k1).unwrap(), info);
            let digits = phi(&word);
            assert!(code.syndrome(&digits.digits()[1..]).iter().all(|&s| s == 0));
        }
    }

    #[test]
    fn decodes_single_adjacent_swaps() {
        let code = BchLatticeCode::new(5, 2, 1, 9).unwrap();
        for info in permutations(code.info_len()).step_by(101) {
            let word = code.encode(&info).unwrap();
            assert_eq!(code.decode(&word).unwrap(), info);
            for i in 1..word.len() {
                let bad = word.adjacent_transposition(i).unwrap();
                assert_eq!(code.decode(&bad).unwrap(), info);
            }
        }
    }

    #[test]
    fn lee_weights() {
        assert_eq!(lee_weight(&[0, 1, 4, 2, 3], 5), 0 + 1 + 1 + 2 + 2);
    }
}
