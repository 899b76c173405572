use num_bigint::BigUint;
use num_traits::ToPrimitive;

use rmcodes::combin::factorial;
use rmcodes::linf::{c7_info_len, inner_code_size, inner_rank, inner_unrank, ConcatCodeSpec, SpreadCodeSpec};
use rmcodes::oracle::{check_systematic, exhaustive_decode_test, min_distance, nearest_codeword};
use rmcodes::perm::permutations;
use rmcodes::{build_codebook, Permutation, SystematicCode};

#[test]
fn spread_codes_meet_their_distance() {
    for (n, d) in [(5, 2), (7, 2), (8, 3), (10, 4), (9, 2)] {
        let code = SpreadCodeSpec::with_max_k(n, d).unwrap();
        let k = code.k();
        assert!(k <= 5);
        let cb = build_codebook(&code).unwrap();
        assert!(check_systematic(&cb));
        assert!(min_distance(&cb).unwrap() >= d as u64, "({n},{d})");
        for w in cb.codewords() {
            assert!(w.entries()[..k].iter().all(|&v| v % d == 1 % d));
            assert!(w.entries()[k..].windows(2).all(|x| x[0] < x[1]));
        }
        let rep = exhaustive_decode_test(&cb, |g| code.decode(g), code.decoding_radius());
        assert!(rep.decode_failures.is_empty(), "({n},{d}): {:?}", rep.decode_failures.first());
    }
}

#[test]
fn spread_decoder_agrees_with_nearest_codeword() {
    let code = SpreadCodeSpec::new(9, 3, 3).unwrap();
    let cb = build_codebook(&code).unwrap();
    for w in cb.codewords() {
        for g in rmcodes::oracle::linf_ball(w, 1) {
            let near = nearest_codeword(&g, &cb).unwrap();
            assert_eq!(code.decode(&g).unwrap(), cb.information_of(&near).unwrap());
        }
    }
}

#[test]
fn concat_codes_meet_their_distance() {
    for (n, d) in [(4, 2), (6, 3), (7, 3), (8, 2), (10, 5)] {
        let code = ConcatCodeSpec::new(n, d).unwrap();
        assert!(code.info_len_is_maximal());
        let k = code.k();
        let cb = build_codebook(&code).unwrap();
        assert!(check_systematic(&cb));
        assert!(min_distance(&cb).unwrap() >= d as u64, "({n},{d})");
        for w in cb.codewords() {
            assert!(w.entries()[k..].iter().enumerate().all(|(j, &v)| v % d == (j + 1) % d));
        }
        let rep = exhaustive_decode_test(&cb, |g| code.decode(g), code.decoding_radius());
        assert!(rep.decode_failures.is_empty(), "({n},{d})");
    }
}

#[test]
fn concat_decoder_ignores_the_prefix() {
    let code = ConcatCodeSpec::new(9, 3).unwrap();
    let n = 9;
    for info in permutations(code.k()).step_by(7) {
        let word = code.encode(&info).unwrap();
        // swap the prefix values n+1 and n+2: an ℓ∞ move of size 1
        let bumped: Vec<usize> = word
            .entries()
            .iter()
            .map(|&v| match v {
                v if v == n + 1 => n + 2,
                v if v == n + 2 => n + 1,
                v => v,
            })
            .collect();
        assert_eq!(code.decode(&Permutation::new(bumped).unwrap()).unwrap(), info);
    }
}

#[test]
fn inner_rank_is_a_bijection() {
    for (n, d) in [(5, 2), (6, 2), (7, 3), (8, 4)] {
        let size = inner_code_size(n, d).to_u64().unwrap();
        let members: Vec<Permutation> = permutations(n)
            .filter(|c| (1..=n).all(|i| c.apply(i) % d == i % d))
            .collect();
        assert_eq!(members.len() as u64, size);
        let mut ranks: Vec<u64> = members.iter().map(|c| inner_rank(c, d).unwrap().to_u64().unwrap()).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, (0..size).collect::<Vec<_>>());
        for i in 0..size {
            let c = inner_unrank(&BigUint::from(i), n, d).unwrap();
            assert_eq!(inner_rank(&c, d).unwrap(), BigUint::from(i));
        }
    }
}

#[test]
fn info_len_is_the_factorial_floor() {
    for n in 1..=40 {
        for d in 1..=n {
            let k = c7_info_len(n, d);
            let size = inner_code_size(n, d);
            assert!(factorial(k) <= size && size < factorial(k + 1), "({n},{d})");
        }
    }
}

#[test]
fn spread_optimal_k_is_ceiling() {
    for (n, d) in [(6, 2), (7, 2), (9, 3), (10, 3)] {
        assert_eq!(SpreadCodeSpec::with_max_k(n, d).unwrap().k(), n.div_ceil(d));
        assert!(SpreadCodeSpec::new(n, d, n.div_ceil(d) + 1).is_err());
    }
}

/// `k <= n / log₂log₂n` for `d = ⌈n/c⌉`. The bound is asymptotic; the last
/// small-`n` exception for each `c` is frozen here.
#[test]
fn concat_info_len_grows_slowly() {
    let ns: Vec<usize> = (4..=400).chain((401..=10_000).step_by(97)).chain([10_000]).collect();
    for (c, threshold) in [(2usize, 4usize), (3, 4), (4, 33), (8, 499)] {
        for &n in ns.iter().filter(|&&n| n >= threshold) {
            let k = c7_info_len(n, n.div_ceil(c));
            let bound = n as f64 / (n as f64).log2().log2();
            assert!(k as f64 <= bound, "c={c} n={n}: k={k} > {bound}");
        }
    }
    assert!(c7_info_len(32, 8) as f64 > 32.0 / 5f64.log2());
}
