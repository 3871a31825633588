//! The l1 (Spearman footrule) metric on symmetric groups and its
//! geodesic segments.
//!
//! The distance is `D(u, v) = sum_i |u(i) - v(i)|`, a right-invariant
//! metric. The segment `[id, u]` is the metric interval
//! `{ v | D(id, v) + D(v, u) = D(id, u) }`; it is characterized
//! coordinatewise by `min(i, u(i)) <= v(i) <= max(i, u(i))`, which is what
//! [`IntervalProfile`] stores. Counting a segment is therefore the
//! permanent of a 0/1 interval matrix, computed here by two independent
//! backends that cross-check each other.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::counting;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Hard cap for [`CountBackend::BitmaskDp`]. Memory grows as `2^n` and all
/// intermediate counts provably fit `u128` up to this width.
pub const MAX_BITMASK_N: usize = counting::MAX_BITMASK_WIDTH;

/// Hard cap for [`CountBackend::Backtracking`].
pub const MAX_BACKTRACK_N: usize = 12;

/// Default cap for [`enumerate_segment`].
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// The l1 distance `sum_i |u(i) - v(i)|`. Always an even number: every
/// unit of upward displacement is matched by a unit of downward
/// displacement somewhere else.
///
/// ```
/// use footrule::{metric, Permutation};
///
/// let id = Permutation::identity(4);
/// let u: Permutation = "3 4 1 2".parse().unwrap();
/// assert_eq!(metric::distance(&id, &u).unwrap(), 8);
/// ```
pub fn distance(u: &Permutation, v: &Permutation) -> Result<u64> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.word()
        .iter()
        .zip(v.word())
        .map(|(&a, &b)| a.abs_diff(b) as u64)
        .sum())
}

/// Per-position value intervals `[min(i, u(i)), max(i, u(i))]` for a fixed
/// endpoint `u`. A permutation `v` lies on a geodesic from the identity to
/// `u` exactly when every `v(i)` falls inside interval `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalProfile {
    intervals: Vec<(usize, usize)>,
}

impl IntervalProfile {
    /// The profile of the segment `[id, u]`.
    pub fn of(u: &Permutation) -> Self {
        let intervals = u
            .word()
            .iter()
            .enumerate()
            .map(|(k, &v)| ((k + 1).min(v), (k + 1).max(v)))
            .collect();
        IntervalProfile { intervals }
    }

    /// Number of positions.
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    /// Always false; profiles come from permutations of size at least 1.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The interval `(lo, hi)` at 1-indexed position `i`.
    pub fn interval(&self, i: usize) -> (usize, usize) {
        self.intervals[i - 1]
    }

    /// All intervals, in position order.
    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// Sum of interval widths; equals the distance from the identity to
    /// the generating permutation.
    pub fn total_width(&self) -> u64 {
        self.intervals
            .iter()
            .map(|&(lo, hi)| (hi - lo) as u64)
            .sum()
    }

    /// Whether `v` satisfies every interval. False when sizes differ.
    pub fn contains(&self, v: &Permutation) -> bool {
        v.len() == self.len() && self.contains_word(v.word())
    }

    pub(crate) fn contains_word(&self, word: &[usize]) -> bool {
        debug_assert_eq!(word.len(), self.len());
        self.intervals
            .iter()
            .zip(word)
            .all(|(&(lo, hi), &v)| lo <= v && v <= hi)
    }

    fn bounds(&self) -> (Vec<usize>, Vec<usize>) {
        let lo = self.intervals.iter().map(|&(lo, _)| lo).collect();
        let hi = self.intervals.iter().map(|&(_, hi)| hi).collect();
        (lo, hi)
    }
}

/// Exact counting backend for [`count_segment`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountBackend {
    /// Subset dynamic programming over used values; O(2^n * n) time,
    /// O(2^n) space, usable up to [`MAX_BITMASK_N`]. The default.
    BitmaskDp,
    /// Depth-first backtracking over positions; independent oracle,
    /// usable up to [`MAX_BACKTRACK_N`].
    Backtracking,
}

impl CountBackend {
    pub fn name(self) -> &'static str {
        match self {
            CountBackend::BitmaskDp => "dp",
            CountBackend::Backtracking => "bt",
        }
    }

    fn cap(self) -> usize {
        match self {
            CountBackend::BitmaskDp => MAX_BITMASK_N,
            CountBackend::Backtracking => MAX_BACKTRACK_N,
        }
    }
}

impl FromStr for CountBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" | "bitmask" | "bitmask-dp" => Ok(CountBackend::BitmaskDp),
            "bt" | "backtracking" => Ok(CountBackend::Backtracking),
            other => Err(Error::UnknownBackend(other.to_string())),
        }
    }
}

impl fmt::Display for CountBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact segment cardinality together with the backend that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub count: BigUint,
    pub backend: CountBackend,
}

/// Whether `v` lies in the segment `[id, u]`.
///
/// ```
/// use footrule::{metric, Permutation};
///
/// let u: Permutation = "2 3 1".parse().unwrap();
/// assert!(metric::in_segment(&"1 3 2".parse().unwrap(), &u).unwrap());
/// assert!(!metric::in_segment(&"2 1 3".parse().unwrap(), &u).unwrap());
/// ```
pub fn in_segment(v: &Permutation, u: &Permutation) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch {
            left: v.len(),
            right: u.len(),
        });
    }
    Ok(IntervalProfile::of(u).contains(v))
}

/// All members of `[id, u]` in lexicographic order. The list always
/// contains the identity and `u` itself.
pub fn enumerate_segment(u: &Permutation) -> Result<Vec<Permutation>> {
    enumerate_segment_with_cap(u, DEFAULT_ENUMERATION_CAP)
}

/// [`enumerate_segment`] with an explicit size cap.
pub fn enumerate_segment_with_cap(u: &Permutation, cap: usize) -> Result<Vec<Permutation>> {
    if u.len() > cap {
        return Err(Error::SizeTooLarge {
            size: u.len(),
            cap,
        });
    }
    let (lo, hi) = IntervalProfile::of(u).bounds();
    Ok(counting::enumerate(&lo, &hi)
        .into_iter()
        .map(Permutation::from_word_unchecked)
        .collect())
}

/// The exact cardinality of `[id, u]`.
pub fn count_segment(u: &Permutation, backend: CountBackend) -> Result<CountResult> {
    if u.len() > backend.cap() {
        return Err(Error::SizeTooLarge {
            size: u.len(),
            cap: backend.cap(),
        });
    }
    let (lo, hi) = IntervalProfile::of(u).bounds();
    let count = match backend {
        CountBackend::BitmaskDp => counting::bitmask_count(&lo, &hi),
        CountBackend::Backtracking => counting::backtrack_count(&lo, &hi),
    };
    Ok(CountResult {
        count: BigUint::from(count),
        backend,
    })
}

/// Fast path used by the exhaustive search: segment cardinality of the
/// permutation given as a bare word, via the subset DP.
pub(crate) fn count_word_bitmask(word: &[usize]) -> u128 {
    let n = word.len();
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for (k, &v) in word.iter().enumerate() {
        lo.push((k + 1).min(v));
        hi.push((k + 1).max(v));
    }
    counting::bitmask_count(&lo, &hi)
}

/// Whether `v` lies in the general segment `[w, u]`, reduced to a segment
/// at the identity by right-invariance: `v` is between `w` and `u` exactly
/// when `v . w^-1` is between `id` and `u . w^-1`.
pub fn in_segment_between(v: &Permutation, w: &Permutation, u: &Permutation) -> Result<bool> {
    let shift = w.inverse();
    in_segment(&v.compose(&shift)?, &u.compose(&shift)?)
}

/// The cardinality of the general segment `[w, u]`.
pub fn count_segment_between(
    w: &Permutation,
    u: &Permutation,
    backend: CountBackend,
) -> Result<CountResult> {
    count_segment(&u.compose(&w.inverse())?, backend)
}

/// All members of the general segment `[w, u]`, in lexicographic order.
pub fn enumerate_segment_between(w: &Permutation, u: &Permutation) -> Result<Vec<Permutation>> {
    let shift = w.inverse();
    let mut members: Vec<Permutation> = enumerate_segment(&u.compose(&shift)?)?
        .into_iter()
        .map(|x| x.compose(w).expect("sizes agree"))
        .collect();
    members.sort_unstable();
    Ok(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Membership by the metric equation only; the independent oracle for
    /// the interval characterization.
    fn metric_segment(u: &Permutation) -> Vec<Permutation> {
        let id = Permutation::identity(u.len());
        let total = distance(&id, u).unwrap();
        all_permutations(u.len())
            .filter(|v| {
                distance(&id, v).unwrap() + distance(v, u).unwrap() == total
            })
            .collect()
    }

    #[test]
    fn distance_examples() {
        let id3 = Permutation::identity(3);
        assert_eq!(distance(&id3, &id3).unwrap(), 0);
        assert_eq!(
            distance(&Permutation::identity(2), &p("2 1")).unwrap(),
            2
        );
        assert_eq!(
            distance(&Permutation::identity(4), &p("3 4 1 2")).unwrap(),
            8
        );
        assert_eq!(distance(&p("2 3 1"), &p("3 1 2")).unwrap(), 4);
    }

    #[test]
    fn distance_rejects_size_mismatch() {
        assert!(matches!(
            distance(&p("1 2"), &p("1 2 3")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn profile_examples() {
        let id = IntervalProfile::of(&Permutation::identity(4));
        assert_eq!(id.intervals(), &[(1, 1), (2, 2), (3, 3), (4, 4)]);
        assert_eq!(
            IntervalProfile::of(&p("2 3 1")).intervals(),
            &[(1, 2), (2, 3), (1, 3)]
        );
        assert_eq!(
            IntervalProfile::of(&p("3 4 1 2")).intervals(),
            &[(1, 3), (2, 4), (1, 3), (2, 4)]
        );
    }

    #[test]
    fn profile_width_equals_distance_from_identity() {
        for u in all_permutations(5) {
            let id = Permutation::identity(5);
            assert_eq!(
                IntervalProfile::of(&u).total_width(),
                distance(&id, &u).unwrap()
            );
        }
    }

    #[test]
    fn membership_examples() {
        assert!(in_segment(&p("1 3 2"), &p("2 3 1")).unwrap());
        assert!(!in_segment(&p("2 1 3"), &p("2 3 1")).unwrap());
        assert!(in_segment(&p("2 4 1 3"), &p("3 4 1 2")).unwrap());
    }

    #[test]
    fn membership_matches_metric_equation_up_to_s6() {
        for n in 1..=6 {
            let id = Permutation::identity(n);
            for u in all_permutations(n) {
                let total = distance(&id, &u).unwrap();
                for v in all_permutations(n) {
                    let by_metric =
                        distance(&id, &v).unwrap() + distance(&v, &u).unwrap() == total;
                    assert_eq!(in_segment(&v, &u).unwrap(), by_metric, "v = {v}, u = {u}");
                }
            }
        }
    }

    #[test]
    fn enumerate_small_segments() {
        assert_eq!(
            enumerate_segment(&p("2 3 1")).unwrap(),
            vec![p("1 2 3"), p("1 3 2"), p("2 3 1")]
        );
        assert_eq!(
            enumerate_segment(&Permutation::identity(6)).unwrap(),
            vec![Permutation::identity(6)]
        );
        let listed = enumerate_segment(&p("3 4 1 2")).unwrap();
        let expected: Vec<Permutation> = [
            "1 2 3 4", "1 3 2 4", "1 4 2 3", "1 4 3 2", "2 3 1 4", "2 4 1 3", "3 2 1 4",
            "3 4 1 2",
        ]
        .iter()
        .map(|s| p(s))
        .collect();
        assert_eq!(listed, expected);
    }

    #[test]
    fn enumerate_matches_metric_oracle_up_to_s5() {
        for n in 1..=5 {
            for u in all_permutations(n) {
                assert_eq!(enumerate_segment(&u).unwrap(), metric_segment(&u));
            }
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let u = Permutation::identity(13);
        assert!(matches!(
            enumerate_segment(&u),
            Err(Error::SizeTooLarge { size: 13, cap: 12 })
        ));
        assert!(enumerate_segment_with_cap(&u, 13).is_ok());
    }

    #[test]
    fn count_examples() {
        for backend in [CountBackend::BitmaskDp, CountBackend::Backtracking] {
            let r = count_segment(&Permutation::half_rotation(4), backend).unwrap();
            assert_eq!(r.count, BigUint::from(8u32));
            assert_eq!(r.backend, backend);
            assert_eq!(
                count_segment(&Permutation::half_rotation(5), backend)
                    .unwrap()
                    .count,
                BigUint::from(17u32)
            );
            assert_eq!(
                count_segment(&Permutation::identity(9), backend).unwrap().count,
                BigUint::from(1u32)
            );
        }
    }

    #[test]
    fn count_caps_are_enforced() {
        let u = Permutation::identity(13);
        assert!(count_segment(&u, CountBackend::BitmaskDp).is_ok());
        assert!(matches!(
            count_segment(&u, CountBackend::Backtracking),
            Err(Error::SizeTooLarge { size: 13, cap: 12 })
        ));
        let big = Permutation::identity(27);
        assert!(matches!(
            count_segment(&big, CountBackend::BitmaskDp),
            Err(Error::SizeTooLarge { size: 27, cap: 26 })
        ));
    }

    #[test]
    fn backend_parsing() {
        assert_eq!("dp".parse::<CountBackend>().unwrap(), CountBackend::BitmaskDp);
        assert_eq!(
            "bt".parse::<CountBackend>().unwrap(),
            CountBackend::Backtracking
        );
        assert!(matches!(
            "magic".parse::<CountBackend>(),
            Err(Error::UnknownBackend(_))
        ));
    }

    #[test]
    fn general_segment_reduces_by_right_invariance() {
        let w = p("2 3 1");
        let u = p("3 1 2");
        let members = enumerate_segment_between(&w, &u).unwrap();
        // Oracle: filter S_3 by the defining metric equation for [w, u].
        let expected: Vec<Permutation> = all_permutations(3)
            .filter(|v| {
                distance(&w, v).unwrap() + distance(v, &u).unwrap()
                    == distance(&w, &u).unwrap()
            })
            .collect();
        assert_eq!(members, expected);
        assert_eq!(
            count_segment_between(&w, &u, CountBackend::BitmaskDp)
                .unwrap()
                .count,
            BigUint::from(expected.len())
        );
        for v in all_permutations(3) {
            assert_eq!(
                in_segment_between(&v, &w, &u).unwrap(),
                expected.contains(&v)
            );
        }
    }

    #[test]
    fn endpoints_always_in_segment() {
        for u in all_permutations(5) {
            let id = Permutation::identity(5);
            assert!(in_segment(&id, &u).unwrap());
            assert!(in_segment(&u, &u).unwrap());
        }
    }
}
