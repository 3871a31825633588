//! Exact counting and enumeration of permutations constrained by
//! per-position value intervals.
//!
//! A constraint system assigns each position an inclusive value interval
//! `[lo[k], hi[k]]` (values 1-based, positions 0-based here). The number of
//! permutations respecting every interval is the permanent of the induced
//! 0/1 matrix. [`bitmask_count`] computes it by dynamic programming over
//! the set of used values; [`backtrack_count`] by depth-first search over
//! positions. The two are deliberately separate code paths so each can
//! serve as a cross-check of the other.

use std::ops::AddAssign;

/// Widest system the subset DP accepts. Bounded jointly by the `u32` masks
/// and by overflow safety: any count is at most `26! < 2^89`, which fits
/// comfortably in `u128`.
pub(crate) const MAX_BITMASK_WIDTH: usize = 26;

/// Bit k set for every value v with lo <= v <= hi, where k = v - 1.
#[inline]
fn value_range_mask(lo: usize, hi: usize) -> u32 {
    debug_assert!(1 <= lo && lo <= hi && hi <= 32);
    (((1u64 << hi) - (1u64 << (lo - 1))) & u32::MAX as u64) as u32
}

/// Permanent of the interval system via subset dynamic programming.
///
/// `dp[mask]` is the number of ways to fill the first `popcount(mask)`
/// positions using exactly the values in `mask`; processing masks in
/// increasing numeric order visits them in a valid topological order since
/// every transition sets a new bit. O(2^n * n) time, O(2^n) space.
pub(crate) fn bitmask_count(lo: &[usize], hi: &[usize]) -> u128 {
    let n = lo.len();
    assert!(n >= 1 && n <= MAX_BITMASK_WIDTH);
    // n! fits u64 up to n = 20; use the narrower accumulator when possible
    // to halve the table footprint.
    if n <= 20 {
        dp_count::<u64>(lo, hi) as u128
    } else {
        dp_count::<u128>(lo, hi)
    }
}

fn dp_count<T>(lo: &[usize], hi: &[usize]) -> T
where
    T: Copy + Default + PartialEq + AddAssign + From<u8>,
{
    let n = lo.len();
    let zero = T::default();
    let full: u32 = ((1u64 << n) - 1) as u32;
    let mut dp = vec![zero; 1usize << n];
    dp[0] = T::from(1u8);
    for mask in 0..full {
        let reached = dp[mask as usize];
        if reached == zero {
            continue;
        }
        let pos = mask.count_ones() as usize;
        let mut free = value_range_mask(lo[pos], hi[pos]) & !mask;
        while free != 0 {
            let bit = free & free.wrapping_neg();
            dp[(mask | bit) as usize] += reached;
            free ^= bit;
        }
    }
    dp[full as usize]
}

/// Permanent of the interval system via position-by-position backtracking.
/// Exponential in the worst case; kept as the independent oracle for
/// [`bitmask_count`].
pub(crate) fn backtrack_count(lo: &[usize], hi: &[usize]) -> u128 {
    fn descend(pos: usize, used: u32, lo: &[usize], hi: &[usize]) -> u128 {
        if pos == lo.len() {
            return 1;
        }
        let mut total = 0u128;
        for v in lo[pos]..=hi[pos] {
            let bit = 1u32 << (v - 1);
            if used & bit == 0 {
                total += descend(pos + 1, used | bit, lo, hi);
            }
        }
        total
    }
    let n = lo.len();
    assert!(n >= 1 && n <= 32);
    descend(0, 0, lo, hi)
}

/// All words satisfying the interval system, in lexicographic order.
/// Values are tried in ascending order at each position, which yields the
/// output already sorted.
pub(crate) fn enumerate(lo: &[usize], hi: &[usize]) -> Vec<Vec<usize>> {
    fn fill(
        pos: usize,
        lo: &[usize],
        hi: &[usize],
        used: &mut [bool],
        word: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == lo.len() {
            out.push(word.clone());
            return;
        }
        for v in lo[pos]..=hi[pos] {
            if !used[v] {
                used[v] = true;
                word.push(v);
                fill(pos + 1, lo, hi, used, word, out);
                word.pop();
                used[v] = false;
            }
        }
    }
    let n = lo.len();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fill(0, lo, hi, &mut used, &mut word, &mut out);
    out
}
