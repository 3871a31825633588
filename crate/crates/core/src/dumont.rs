//! Dumont permutation classes and the Genocchi values they count.
//!
//! A permutation `pi` of even size `2n` is a Dumont permutation of the
//! first kind when `pi(2i) <= 2i <= pi(2i-1)` for every `i`, and of the
//! second kind when the even-position inequality is strict,
//! `pi(2i) < 2i <= pi(2i-1)`. The class cardinalities are the Genocchi
//! numbers of the first kind (`G_{2n+2}` for size `2n`) and the Genocchi
//! medians (`H_{2n+1}`), which is how this crate defines those sequences.
//!
//! Both constraints are per-position value intervals, so enumeration is a
//! constrained backtracking over positions and counting is the same
//! subset DP used for segment cardinalities.

use num_bigint::BigUint;

use crate::counting;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap for [`enumerate_dumont`]; class sizes grow fast
/// (929569 members already at size 14).
pub const DEFAULT_DUMONT_CAP: usize = 14;

/// Cap for [`genocchi_value`], inherited from the subset DP width.
pub const MAX_GENOCCHI_SIZE: usize = counting::MAX_BITMASK_WIDTH;

/// Which of the two Dumont constraints applies at even positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumontKind {
    /// Weak bound `pi(2i) <= 2i`; cardinalities are Genocchi numbers of
    /// the first kind.
    FirstKind,
    /// Strict bound `pi(2i) < 2i`; cardinalities are Genocchi medians
    /// (numbers of the second kind).
    SecondKind,
}

impl DumontKind {
    pub fn name(self) -> &'static str {
        match self {
            DumontKind::FirstKind => "first",
            DumontKind::SecondKind => "second",
        }
    }

    /// Largest value admitted at the even position `pos`.
    fn even_position_max(self, pos: usize) -> usize {
        debug_assert!(pos % 2 == 0);
        match self {
            DumontKind::FirstKind => pos,
            DumontKind::SecondKind => pos - 1,
        }
    }
}

fn require_even(size: usize) -> Result<()> {
    if size % 2 != 0 {
        return Err(Error::OddSize(size));
    }
    Ok(())
}

/// The per-position value intervals equivalent to the class constraints:
/// odd positions `j` admit `[j+1, size]`, even positions `[1, j]` or
/// `[1, j-1]` depending on the kind.
fn class_bounds(kind: DumontKind, size: usize) -> (Vec<usize>, Vec<usize>) {
    let mut lo = Vec::with_capacity(size);
    let mut hi = Vec::with_capacity(size);
    for j in 1..=size {
        if j % 2 == 1 {
            lo.push(j + 1);
            hi.push(size);
        } else {
            lo.push(1);
            hi.push(kind.even_position_max(j));
        }
    }
    (lo, hi)
}

/// Whether `p` satisfies the kind's inequality at every index.
///
/// ```
/// use footrule::dumont::{is_dumont, DumontKind};
/// use footrule::Permutation;
///
/// let pi: Permutation = "2 1 4 3".parse().unwrap();
/// assert!(is_dumont(&pi, DumontKind::FirstKind).unwrap());
/// assert!(!is_dumont(&"1 2 3 4".parse().unwrap(), DumontKind::FirstKind).unwrap());
/// ```
pub fn is_dumont(p: &Permutation, kind: DumontKind) -> Result<bool> {
    require_even(p.len())?;
    Ok(word_is_dumont(p.word(), kind))
}

pub(crate) fn word_is_dumont(word: &[usize], kind: DumontKind) -> bool {
    debug_assert!(word.len() % 2 == 0);
    for i in 1..=word.len() / 2 {
        let at_odd = word[2 * i - 2];
        let at_even = word[2 * i - 1];
        if at_odd < 2 * i || at_even > kind.even_position_max(2 * i) {
            return false;
        }
    }
    true
}

/// All class members of the given even size, in lexicographic order.
/// Generated by constrained backtracking rather than filtering the full
/// symmetric group.
pub fn enumerate_dumont(kind: DumontKind, size: usize) -> Result<Vec<Permutation>> {
    enumerate_dumont_with_cap(kind, size, DEFAULT_DUMONT_CAP)
}

/// [`enumerate_dumont`] with an explicit size cap.
pub fn enumerate_dumont_with_cap(
    kind: DumontKind,
    size: usize,
    cap: usize,
) -> Result<Vec<Permutation>> {
    require_even(size)?;
    if size > cap {
        return Err(Error::SizeTooLarge { size, cap });
    }
    let (lo, hi) = class_bounds(kind, size);
    Ok(counting::enumerate(&lo, &hi)
        .into_iter()
        .map(Permutation::from_word_unchecked)
        .collect())
}

/// The exact class cardinality: `G_{size+2}` for the first kind,
/// `H_{size+1}` for the second. Counted by the subset DP over the interval
/// form of the constraints, so it reaches well past the enumeration cap.
pub fn genocchi_value(kind: DumontKind, size: usize) -> Result<BigUint> {
    require_even(size)?;
    if size > MAX_GENOCCHI_SIZE {
        return Err(Error::SizeTooLarge {
            size,
            cap: MAX_GENOCCHI_SIZE,
        });
    }
    let (lo, hi) = class_bounds(kind, size);
    Ok(BigUint::from(counting::bitmask_count(&lo, &hi)))
}
