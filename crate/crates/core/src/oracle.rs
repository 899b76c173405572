//! Brute-force checks of built codebooks: minimum distance, systematicity,
//! exhaustive decoding around every codeword and a nearest-codeword decoder.
//!
//! Sweeps can run on a dedicated thread pool. Results are aggregated in
//! codebook order, so they do not depend on the number of workers.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::code::ConstructionId;
use crate::codebook::Codebook;
use crate::combin::factorial_u64;
use crate::error::{invalid, Error, Result};
use crate::perm::{ball_enumerate, kendall_distance_with_inverse, linf_distance, Metric, Permutation};

fn with_workers<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if workers <= 1 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(job))
}

/// Exact minimum pairwise distance under the codebook's metric.
pub fn min_distance(cb: &Codebook) -> Result<u64> {
    min_distance_with_workers(cb, 1)
}

/// [`min_distance`] split across `workers` threads.
pub fn min_distance_with_workers(cb: &Codebook, workers: usize) -> Result<u64> {
    let words = cb.codewords();
    if words.len() < 2 {
        return invalid("minimum distance needs at least two codewords");
    }
    let row_min = |i: usize, inverses: &[Permutation]| -> u64 {
        let f = &words[i];
        words[i + 1..]
            .iter()
            .zip(&inverses[i + 1..])
            .map(|(g, g_inv)| match cb.metric() {
                Metric::Kendall => kendall_distance_with_inverse(f, g_inv),
                Metric::Linf => linf_distance(f, g).expect("equal lengths"),
            })
            .min()
            .unwrap_or(u64::MAX)
    };
    let inverses: Vec<Permutation> = match cb.metric() {
        Metric::Kendall => words.iter().map(Permutation::inverse).collect(),
        Metric::Linf => words.to_vec(),
    };
    let last = words.len() - 1;
    if workers <= 1 {
        return Ok((0..last).map(|i| row_min(i, &inverses)).min().expect("nonempty"));
    }
    with_workers(workers, || {
        (0..last)
            .into_par_iter()
            .map(|i| row_min(i, &inverses))
            .min()
            .expect("nonempty")
    })
}

/// `true` iff the information projections of the codewords are exactly
/// `S_k`, each once.
pub fn check_systematic(cb: &Codebook) -> bool {
    let Some(size) = factorial_u64(cb.k()) else {
        return false;
    };
    if cb.len() as u64 != size {
        return false;
    }
    let mut seen = HashSet::with_capacity(cb.len());
    cb.codewords()
        .iter()
        .all(|w| cb.information_of(w).is_ok_and(|info| seen.insert(info)))
}

/// All permutations within ℓ∞ distance `radius` of `center`, by
/// per-coordinate backtracking.
pub fn linf_ball(center: &Permutation, radius: u64) -> Vec<Permutation> {
    fn extend(
        center: &[usize],
        radius: usize,
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        let n = center.len();
        let pos = current.len();
        if pos == n {
            out.push(Permutation::new(current.clone()).expect("bijection by construction"));
            return;
        }
        let c = center[pos];
        let lo = c.saturating_sub(radius).max(1);
        let hi = (c + radius).min(n);
        for v in lo..=hi {
            if !used[v] {
                used[v] = true;
                current.push(v);
                extend(center, radius, used, current, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; center.len() + 1];
    extend(
        center.entries(),
        radius as usize,
        &mut used,
        &mut Vec::with_capacity(center.len()),
        &mut out,
    );
    out
}

/// Every word within `radius` of `center` under `metric`.
pub fn neighbourhood(center: &Permutation, radius: u64, metric: Metric) -> Vec<Permutation> {
    match metric {
        Metric::Kendall => ball_enumerate(center, radius, Metric::Kendall).into_iter().collect(),
        Metric::Linf => linf_ball(center, radius),
    }
}

/// A received word on which the decoder did not return the right information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeFailure {
    pub codeword: Permutation,
    pub received: Permutation,
    pub outcome: Result<Permutation>,
}

/// Outcome of the checks run on one codebook.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub construction: ConstructionId,
    pub metric: Metric,
    pub n: usize,
    pub k: usize,
    pub d_claimed: u64,
    pub size: usize,
    pub measured_min_distance: Option<u64>,
    pub systematic_ok: Option<bool>,
    pub decode_radius: Option<u64>,
    pub decode_trials: u64,
    pub decode_failures: Vec<DecodeFailure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn empty(cb: &Codebook) -> Self {
        Self {
            construction: cb.construction(),
            metric: cb.metric(),
            n: cb.n(),
            k: cb.k(),
            d_claimed: cb.d_claimed(),
            size: cb.len(),
            measured_min_distance: None,
            systematic_ok: None,
            decode_radius: None,
            decode_trials: 0,
            decode_failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn distance_ok(&self) -> Option<bool> {
        self.measured_min_distance.map(|d| d >= self.d_claimed)
    }

    pub fn decode_ok(&self) -> Option<bool> {
        self.decode_radius.map(|_| self.decode_failures.is_empty())
    }

    /// `true` when every check that ran passed.
    pub fn passed(&self) -> bool {
        [self.distance_ok(), self.systematic_ok, self.decode_ok()]
            .into_iter()
            .flatten()
            .all(|ok| ok)
    }
}

/// Which checks [`verify`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub distance: bool,
    pub systematic: bool,
    /// Radius for the exhaustive decode sweep; `None` skips it.
    pub decode: Option<u64>,
}

/// Feeds every word within `radius` of every codeword to `decoder` and
/// records each one that does not come back as the codeword's information.
pub fn exhaustive_decode_test<D>(cb: &Codebook, decoder: D, radius: u64) -> VerificationReport
where
    D: Fn(&Permutation) -> Result<Permutation> + Sync,
{
    exhaustive_decode_test_with_workers(cb, decoder, radius, 1).expect("sequential sweep cannot fail")
}

/// [`exhaustive_decode_test`] split across `workers` threads.
pub fn exhaustive_decode_test_with_workers<D>(
    cb: &Codebook,
    decoder: D,
    radius: u64,
    workers: usize,
) -> Result<VerificationReport>
where
    D: Fn(&Permutation) -> Result<Permutation> + Sync,
{
    let start = Instant::now();
    let sweep = |c: &Permutation| -> (u64, Vec<DecodeFailure>) {
        let Ok(expected) = cb.information_of(c) else {
            return (0, Vec::new());
        };
        let ball = neighbourhood(c, radius, cb.metric());
        let trials = ball.len() as u64;
        let failures = ball
            .into_iter()
            .filter_map(|g| {
                let outcome = decoder(&g);
                (outcome.as_ref() != Ok(&expected)).then(|| DecodeFailure {
                    codeword: c.clone(),
                    received: g,
                    outcome,
                })
            })
            .collect();
        (trials, failures)
    };
    let per_word: Vec<(u64, Vec<DecodeFailure>)> = if workers <= 1 {
        cb.codewords().iter().map(sweep).collect()
    } else {
        with_workers(workers, || cb.codewords().par_iter().map(sweep).collect())?
    };
    let mut report = VerificationReport::empty(cb);
    report.decode_radius = Some(radius);
    for (trials, failures) in per_word {
        report.decode_trials += trials;
        report.decode_failures.extend(failures);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs the selected checks on `cb`; `decoder` is required for the decode sweep.
pub fn verify<D>(cb: &Codebook, checks: Checks, decoder: Option<D>, workers: usize) -> Result<VerificationReport>
where
    D: Fn(&Permutation) -> Result<Permutation> + Sync,
{
    let start = Instant::now();
    let mut report = match (checks.decode, decoder) {
        (Some(radius), Some(dec)) => exhaustive_decode_test_with_workers(cb, dec, radius, workers)?,
        (Some(_), None) => return invalid("decode check requested without a decoder"),
        (None, _) => VerificationReport::empty(cb),
    };
    if checks.distance {
        report.measured_min_distance = Some(min_distance_with_workers(cb, workers)?);
    }
    if checks.systematic {
        report.systematic_ok = Some(check_systematic(cb));
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Codeword closest to `g`; ties go to the earliest codeword.
pub fn nearest_codeword(g: &Permutation, cb: &Codebook) -> Result<Permutation> {
    if g.len() != cb.n() {
        return invalid(format!("word has length {}, codebook length is {}", g.len(), cb.n()));
    }
    let mut best: Option<(u64, &Permutation)> = None;
    for c in cb.codewords() {
        let d = cb.metric().distance(g, c)?;
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, c));
        }
    }
    best.map(|(_, c)| c.clone())
        .ok_or_else(|| Error::InvalidArgument("codebook is empty".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn book(metric: Metric, k: usize, words: &[&[usize]]) -> Codebook {
        let n = words[0].len();
        Codebook::new(n, k, 1, metric, ConstructionId::C5, words.iter().map(|w| p(w)).collect()).unwrap()
    }

    #[test]
    fn perfect_code_distance() {
        let cb = book(Metric::Kendall, 2, &[&[1, 2, 3], &[3, 2, 1]]);
        assert_eq!(min_distance(&cb).unwrap(), 3);
        assert_eq!(min_distance_with_workers(&cb, 3).unwrap(), 3);
        assert!(check_systematic(&cb));
        let single = book(Metric::Kendall, 1, &[&[1, 2, 3]]);
        assert!(min_distance(&single).is_err());
    }

    #[test]
    fn systematic_checks() {
        assert!(check_systematic(&book(Metric::Kendall, 2, &[&[1, 2, 3], &[2, 1, 3]])));
        assert!(!check_systematic(&book(Metric::Kendall, 2, &[&[1, 2, 3], &[1, 3, 2]])));
        assert!(!check_systematic(&book(Metric::Kendall, 2, &[&[1, 2, 3]])));
        assert!(check_systematic(&book(Metric::Linf, 2, &[&[1, 3, 2], &[3, 1, 2]])));
    }

    #[test]
    fn linf_ball_matches_filter() {
        for center in [p(&[1, 2, 3, 4, 5]), p(&[3, 5, 1, 4, 2])] {
            for r in 0..3 {
                let mut fast = linf_ball(&center, r);
                fast.sort();
                let slow: Vec<_> = permutations(5)
                    .filter(|g| linf_distance(g, &center).unwrap() <= r)
                    .collect();
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn nearest_prefers_first_on_ties() {
        let cb = book(Metric::Kendall, 2, &[&[1, 2, 3], &[3, 2, 1]]);
        assert_eq!(nearest_codeword(&p(&[2, 1, 3]), &cb).unwrap(), p(&[1, 2, 3]));
        assert_eq!(nearest_codeword(&p(&[3, 1, 2]), &cb).unwrap(), p(&[3, 2, 1]));
        // [2,3,1] and [1,3,2] sit at distance 1 and 2 from either end
        assert_eq!(nearest_codeword(&p(&[2, 3, 1]), &cb).unwrap(), p(&[3, 2, 1]));
    }

    #[test]
    fn decode_sweep_counts_trials() {
        let cb = book(Metric::Kendall, 2, &[&[1, 2, 3], &[3, 2, 1]]);
        let decoder = |g: &Permutation| Ok(nearest_codeword(g, &cb)?.project_values_prefix(2).unwrap());
        let rep = exhaustive_decode_test(&cb, decoder, 1);
        assert_eq!(rep.decode_trials, 6);
        assert!(rep.decode_failures.is_empty());
        let rep = exhaustive_decode_test(&cb, |_: &Permutation| Ok(p(&[1, 2])), 0);
        assert_eq!(rep.decode_failures.len(), 1);
        assert!(!rep.passed());
    }
}
