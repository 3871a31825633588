//! Permutations in one-line notation and their group operations.
//!
//! A [`Permutation`] is a bijection `u` on `{1, ..., n}` stored as the word
//! `(u(1), ..., u(n))`. All public interfaces are 1-indexed, matching the
//! usual convention for one-line notation. Permutations are immutable
//! values; every operation is pure and thread-safe.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Ordering is lexicographic on the word, so sorted collections of
/// same-size permutations come out in one-line lexicographic order.
///
/// # Examples
///
/// ```
/// use footrule::Permutation;
///
/// let u: Permutation = "2 3 1".parse().unwrap();
/// assert_eq!(u.apply(1), 2);
/// assert_eq!(u.inverse().to_string(), "3 1 2");
/// ```
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of size `n`.
    ///
    /// Panics if `n == 0`; the empty permutation is not a value of this type.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation size must be at least 1");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its one-line word, validating that every
    /// value of `{1, ..., n}` appears exactly once.
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v < 1 || v > n {
                return Err(Error::NotAPermutation(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::NotAPermutation(format!("duplicate value {v}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// Wraps a word already known to be a permutation.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_word(word.clone()).is_ok());
        Permutation { word }
    }

    /// The number of permuted points.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Always false; a permutation has size at least 1.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The one-line word `(u(1), ..., u(n))`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The image `u(i)` of the 1-indexed point `i`.
    ///
    /// Panics if `i` is outside `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Functional composition: the result `r` satisfies `r(i) = p(q(i))`,
    /// so the right factor is applied first.
    ///
    /// # Examples
    ///
    /// ```
    /// use footrule::Permutation;
    ///
    /// let p: Permutation = "1 3 2".parse().unwrap();
    /// let q: Permutation = "3 1 2".parse().unwrap();
    /// assert_eq!(p.compose(&q).unwrap().to_string(), "2 1 3");
    /// ```
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let word = other.word.iter().map(|&v| self.word[v - 1]).collect();
        Ok(Permutation::from_word_unchecked(word))
    }

    /// The group inverse: `compose(p, inverse(p))` is the identity.
    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0usize; self.len()];
        for (k, &v) in self.word.iter().enumerate() {
            word[v - 1] = k + 1;
        }
        Permutation::from_word_unchecked(word)
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// The cyclic shift of values by `floor(n / 2)`: position `i` maps to
    /// `i + floor(n / 2)` wrapped into `1..=n`. In one-line notation this is
    /// `(m+1 ... 2m 1 ... m)` for `n = 2m` and `(m+1 ... 2m+1 1 ... m)` for
    /// `n = 2m+1`; it swaps the bottom block of positions onto the top block
    /// of values.
    ///
    /// # Examples
    ///
    /// ```
    /// use footrule::Permutation;
    ///
    /// assert_eq!(Permutation::half_rotation(4).to_string(), "3 4 1 2");
    /// assert_eq!(Permutation::half_rotation(5).to_string(), "3 4 5 1 2");
    /// ```
    pub fn half_rotation(n: usize) -> Self {
        assert!(n >= 1, "permutation size must be at least 1");
        let m = n / 2;
        let word = (m + 1..=n).chain(1..=m).collect();
        Permutation::from_word_unchecked(word)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses whitespace- or comma-separated values, or a compact digit
    /// string such as `3412` where each digit is one value (only possible
    /// when all values are single digits).
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let is_sep = |c: char| c.is_whitespace() || c == ',';
        let word: Vec<usize> = if text.contains(is_sep) {
            text.split(is_sep)
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::NotAPermutation(format!("invalid value `{tok}`")))
                })
                .collect::<Result<_>>()?
        } else if text.chars().all(|c| c.is_ascii_digit()) {
            text.chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect()
        } else {
            return Err(Error::NotAPermutation(format!("invalid value `{text}`")));
        };
        Permutation::from_word(word)
    }
}

impl fmt::Display for Permutation {
    /// Canonical output form: space-separated one-line word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Advances `word` to its lexicographic successor in place.
/// Returns false when `word` is already the last (descending) arrangement.
pub(crate) fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Iterator over all of `S_n` in lexicographic one-line order.
pub struct Permutations {
    word: Vec<usize>,
    done: bool,
}

/// All `n!` permutations of `{1, ..., n}`, lexicographically.
///
/// ```
/// use footrule::perm::all_permutations;
///
/// let words: Vec<String> = all_permutations(3).map(|p| p.to_string()).collect();
/// assert_eq!(words[0], "1 2 3");
/// assert_eq!(words[5], "3 2 1");
/// assert_eq!(words.len(), 6);
/// ```
pub fn all_permutations(n: usize) -> Permutations {
    assert!(n >= 1, "permutation size must be at least 1");
    Permutations {
        word: (1..=n).collect(),
        done: false,
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::from_word_unchecked(self.word.clone());
        if !next_permutation(&mut self.word) {
            self.done = true;
        }
        Some(out)
    }
}

/// Visits, in lexicographic order, every word of `S_n` whose first entry is
/// `first`. Used to shard full-group scans without allocating per item.
pub(crate) fn for_each_word_with_first(n: usize, first: usize, mut f: impl FnMut(&[usize])) {
    debug_assert!((1..=n).contains(&first));
    let mut word = Vec::with_capacity(n);
    word.push(first);
    word.extend((1..=n).filter(|&v| v != first));
    loop {
        f(&word);
        if !next_permutation(&mut word[1..]) {
            break;
        }
    }
}
