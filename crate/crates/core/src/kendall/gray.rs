use crate::error::{invalid, Result};

/// Binary-reflected Gray code of `value` on `m` bits, most significant first.
pub fn gray_map(value: u64, m: u32) -> Result<Vec<bool>> {
    if m > 63 || value >> m != 0 {
        return invalid(format!("value {value} does not fit in {m} bits"));
    }
    let g = value ^ (value >> 1);
    Ok((0..m).rev().map(|b| (g >> b) & 1 == 1).collect())
}

/// Inverse of [`gray_map`].
pub fn gray_unmap(bits: &[bool]) -> u64 {
    let mut value = 0u64;
    let mut prev = false;
    for &b in bits {
        prev ^= b;
        value = (value << 1) | prev as u64;
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_bit_sequence() {
        let seq: Vec<Vec<bool>> = (0..4).map(|v| gray_map(v, 2).unwrap()).collect();
        assert_eq!(
            seq,
            vec![vec![false, false], vec![false, true], vec![true, true], vec![true, false]]
        );
        assert!(gray_map(0, 0).unwrap().is_empty());
        assert!(gray_map(4, 2).is_err());
        assert!(gray_map(1, 0).is_err());
    }

    #[test]
    fn round_trip() {
        for m in 0..=10 {
            for v in 0..(1u64 << m) {
                assert_eq!(gray_unmap(&gray_map(v, m).unwrap()), v);
            }
        }
    }

    #[test]
    fn neighbours_differ_in_one_bit() {
        for v in 0..255u64 {
            let a = gray_map(v, 8).unwrap();
            let b = gray_map(v + 1, 8).unwrap();
            assert_eq!(a.iter().zip(&b).filter(|(x, y)| x != y).count(), 1);
        }
    }
}
