//! Arithmetic in `GF(p^m)` as polynomials over `Z_p` modulo a monic irreducible.

use crate::error::{invalid, Error, Result};

use super::rho::is_prime;

/// An element of `GF(p^m)`: coefficients `c_0, ..., c_{m-1}` of `Σ c_i x^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(Vec<u32>);

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }
}

/// The field `GF(p^m) = Z_p[x] / (modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldContext {
    p: u32,
    m: usize,
    /// Monic modulus, low degree first, length `m + 1`.
    modulus: Vec<u32>,
}

impl FieldContext {
    /// Uses the smallest monic irreducible of degree `m`, ordering candidates by
    /// `Σ_{i<m} c_i p^i`.
    pub fn new(p: u32, m: usize) -> Result<Self> {
        if !is_prime(p as usize) {
            return invalid(format!("characteristic {p} is not prime"));
        }
        if m < 2 {
            return invalid(format!("extension degree must be at least 2, got {m}"));
        }
        let count = (p as u64).checked_pow(m as u32).ok_or_else(|| {
            Error::InvalidArgument(format!("field of size {p}^{m} is too large"))
        })?;
        for code in 0..count {
            let mut poly = index_to_coeffs(code, p, m);
            poly.push(1);
            if is_irreducible(&poly, p) {
                return Ok(Self { p, m, modulus: poly });
            }
        }
        Err(Error::Internal(format!("no irreducible polynomial of degree {m} over Z_{p}")))
    }

    /// Uses an explicit monic modulus (low degree first, leading 1 included).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as usize) {
            return invalid(format!("characteristic {p} is not prime"));
        }
        let m = modulus.len().saturating_sub(1);
        if m < 2 || modulus[m] != 1 || modulus.iter().any(|&c| c >= p) {
            return invalid("modulus must be monic of degree >= 2 with coefficients in Z_p");
        }
        if !is_irreducible(&modulus, p) {
            return invalid("modulus polynomial is reducible");
        }
        Ok(Self { p, m, modulus })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.m])
    }

    pub fn one(&self) -> FieldElement {
        let mut c = vec![0; self.m];
        c[0] = 1;
        FieldElement(c)
    }

    /// Element with base-`p` digits of `index` as coefficients.
    pub fn element(&self, index: u64) -> Result<FieldElement> {
        if index >= self.order() {
            return invalid(format!("element index {index} outside field of order {}", self.order()));
        }
        Ok(FieldElement(index_to_coeffs(index, self.p, self.m)))
    }

    pub fn index_of(&self, a: &FieldElement) -> u64 {
        a.0.iter().rev().fold(0, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().zip(&b.0).map(|(&x, &y)| (x + y) % self.p).collect())
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.m - 1];
        for (i, &x) in a.0.iter().enumerate() {
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // x^m ≡ -Σ_{i<m} modulus_i x^i
        for deg in (self.m..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &c) in self.modulus[..self.m].iter().enumerate() {
                let t = lead * c as u64 % p;
                let slot = &mut prod[deg - self.m + i];
                *slot = (*slot + p - t) % p;
            }
        }
        FieldElement(prod[..self.m].iter().map(|&c| c as u32).collect())
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

fn index_to_coeffs(mut index: u64, p: u32, m: usize) -> Vec<u32> {
    let mut c = Vec::with_capacity(m);
    for _ in 0..m {
        c.push((index % p as u64) as u32);
        index /= p as u64;
    }
    c
}

/// Remainder of `a` modulo the monic `b` over `Z_p`; both low degree first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c as u64 % p) % p;
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut divisor = index_to_coeffs(code, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
