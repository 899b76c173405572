use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// `log₂ x` in double precision; `x` must be positive.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits in 64 bits") as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("fits in 64 bits");
    (top as f64).log2() + shift as f64
}

/// Rate `log₂(size) / n` of a code with `size` codewords of length `n`, in
/// double precision.
pub fn code_rate(size: &BigUint, n: usize) -> f64 {
    assert!(n > 0, "code length must be positive");
    log2_big(size) / n as f64
}
