//! Exhaustive search for maximal l1 segments.
//!
//! Scans all of `S_n`, counts every segment `[id, u]` with the subset DP,
//! and reports the exact maximum together with the full argmax set. No
//! symmetry pruning is applied: candidate invariances (inverse, reversal
//! conjugation) are unproven here, so correctness never depends on them.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::dumont::{self, DumontKind};
use crate::error::{Error, Result};
use crate::metric::{self, CountBackend};
use crate::perm::{for_each_word_with_first, Permutation};

/// Default cap for [`max_segment_search`]; 9! candidates run in seconds.
pub const DEFAULT_SEARCH_CAP: usize = 9;

/// Result of one exhaustive scan of `S_n`.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub n: usize,
    /// The exact maximum of the segment cardinality over all of `S_n`.
    pub max_cardinality: BigUint,
    /// Every permutation attaining the maximum, lexicographically sorted.
    pub argmax: Vec<Permutation>,
    /// Whether the half-rotation of size n is among the maximizers.
    pub wn_is_argmax: bool,
    pub elapsed: Duration,
}

/// One row of [`conjecture_check`].
#[derive(Debug, Clone)]
pub struct ConjectureRow {
    pub n: usize,
    /// Searched maximum over all of `S_n`.
    pub max_cardinality: BigUint,
    /// Segment cardinality at the half-rotation.
    pub expected: BigUint,
    /// The matching Genocchi value from the Dumont classes.
    pub genocchi: BigUint,
    pub wn_is_argmax: bool,
    /// All three values agree and the half-rotation attains the maximum.
    pub holds: bool,
}

/// Exhaustive maximal-segment search over `S_n` with the default cap.
pub fn max_segment_search(n: usize) -> Result<SearchReport> {
    max_segment_search_with_cap(n, DEFAULT_SEARCH_CAP)
}

/// [`max_segment_search`] with an explicit cap. Runtime grows as
/// `n! * 2^n * n`; n = 10 takes minutes, n = 11 hours.
pub fn max_segment_search_with_cap(n: usize, cap: usize) -> Result<SearchReport> {
    if n > cap {
        return Err(Error::SizeTooLarge { size: n, cap });
    }
    assert!(n >= 1, "search requires n >= 1");
    let started = Instant::now();

    // Shards by first entry, merged in index order: deterministic output
    // for any thread count. Within a shard the scan is lexicographic, so
    // the concatenated argmax list is globally sorted.
    let shards: Vec<(u128, Vec<Permutation>)> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut best = 0u128;
            let mut argmax: Vec<Permutation> = Vec::new();
            for_each_word_with_first(n, first, |word| {
                let count = metric::count_word_bitmask(word);
                if count > best {
                    best = count;
                    argmax.clear();
                    argmax.push(Permutation::from_word_unchecked(word.to_vec()));
                } else if count == best {
                    argmax.push(Permutation::from_word_unchecked(word.to_vec()));
                }
            });
            (best, argmax)
        })
        .collect();

    let max = shards.iter().map(|&(best, _)| best).max().unwrap();
    let mut argmax = Vec::new();
    for (best, shard_argmax) in shards {
        if best == max {
            argmax.extend(shard_argmax);
        }
    }
    let wn = Permutation::half_rotation(n);
    let wn_is_argmax = argmax.binary_search(&wn).is_ok();

    Ok(SearchReport {
        n,
        max_cardinality: BigUint::from(max),
        argmax,
        wn_is_argmax,
        elapsed: started.elapsed(),
    })
}

/// For each `n <= n_max`, searches `S_n` exhaustively and checks that the
/// maximum equals both the segment cardinality at the half-rotation and
/// the corresponding Genocchi value (first kind at odd n, medians at
/// even n).
pub fn conjecture_check(n_max: usize) -> Result<Vec<ConjectureRow>> {
    conjecture_check_with_cap(n_max, DEFAULT_SEARCH_CAP)
}

/// [`conjecture_check`] with an explicit search cap.
pub fn conjecture_check_with_cap(n_max: usize, cap: usize) -> Result<Vec<ConjectureRow>> {
    (1..=n_max)
        .map(|n| {
            let report = max_segment_search_with_cap(n, cap)?;
            let wn = Permutation::half_rotation(n);
            let expected = metric::count_segment(&wn, CountBackend::BitmaskDp)?.count;
            let (kind, size) = genocchi_counterpart(n);
            let genocchi = dumont::genocchi_value(kind, size)?;
            let holds = report.max_cardinality == expected
                && report.max_cardinality == genocchi
                && report.wn_is_argmax;
            Ok(ConjectureRow {
                n,
                max_cardinality: report.max_cardinality,
                expected,
                genocchi,
                wn_is_argmax: report.wn_is_argmax,
                holds,
            })
        })
        .collect()
}

/// The Dumont class whose cardinality matches the segment count at the
/// half-rotation of size n: first kind of size n+1 when n is odd, second
/// kind of size n+2 when n is even.
pub fn genocchi_counterpart(n: usize) -> (DumontKind, usize) {
    if n % 2 == 1 {
        (DumontKind::FirstKind, n + 1)
    } else {
        (DumontKind::SecondKind, n + 2)
    }
}
