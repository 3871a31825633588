//! Bijections carrying l1 segments onto Dumont permutation classes.
//!
//! For the half-rotation endpoint `w_n` there is an explicit bijection
//! between the segment `[id, w_n]` and a Dumont class two points larger:
//! first-kind for odd `n = 2m+1`, second-kind for even `n = 2m`. The map
//! is `u -> embed(alpha . u^-1 . beta^-1)` for fixed conjugators `alpha`
//! and `beta` depending only on `m` and the parity, followed by a
//! size-increasing insertion ([`embed_odd`] or [`embed_even`]).
//!
//! [`verify_bijection`] checks the whole story exhaustively over all of
//! `S_n`: membership equivalence in both directions, injectivity, and
//! exact equality of the segment's image with the enumerated class.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::dumont::{self, DumontKind};
use crate::error::{Error, Result};
use crate::metric::IntervalProfile;
use crate::perm::{for_each_word_with_first, Permutation};

/// Default full-group budget for [`verify_bijection`]: 10!.
pub const DEFAULT_VERIFY_BUDGET: u64 = 3_628_800;

/// Cap on counterexamples retained verbatim in a report.
pub const MAX_COUNTEREXAMPLES: usize = 10;

/// Ambient-group parity selecting which bijection applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Ambient group `S_{2m+1}`, first-kind target class.
    Odd,
    /// Ambient group `S_{2m}`, second-kind target class.
    Even,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

/// The fixed conjugators `alpha` and `beta` for one parity and block size
/// `m`, together with the sizes they act on.
///
/// Odd case (size `2m+1`): `alpha` lists the odd values ascending then the
/// even values ascending; `beta` lists the even values, then `2m+1`, then
/// the remaining odd values.
///
/// Even case (size `2m`): `alpha` lists odd then even values; `beta` lists
/// the odd values from 3 up, then 1, then `2m`, then the even values up to
/// `2m-2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityContext {
    m: usize,
    parity: Parity,
    alpha: Permutation,
    beta: Permutation,
    beta_inv: Permutation,
}

impl ParityContext {
    /// Builds the context. `m >= 1` is required for the even case; the odd
    /// case also admits `m = 0`, where both conjugators degenerate to the
    /// identity of size 1.
    pub fn new(m: usize, parity: Parity) -> Result<Self> {
        let (alpha_word, beta_word): (Vec<usize>, Vec<usize>) = match parity {
            Parity::Odd => {
                let alpha = (1..=2 * m + 1)
                    .step_by(2)
                    .chain((2..=2 * m).step_by(2))
                    .collect();
                let beta = (2..=2 * m)
                    .step_by(2)
                    .chain(std::iter::once(2 * m + 1))
                    .chain((1..=2 * m).step_by(2).take(m))
                    .collect();
                (alpha, beta)
            }
            Parity::Even => {
                if m == 0 {
                    return Err(Error::InvalidM { m, parity: "even" });
                }
                let alpha = (1..2 * m)
                    .step_by(2)
                    .chain((2..=2 * m).step_by(2))
                    .collect();
                let beta = (3..2 * m)
                    .step_by(2)
                    .chain([1, 2 * m])
                    .chain((2..2 * m - 1).step_by(2))
                    .collect();
                (alpha, beta)
            }
        };
        let alpha = Permutation::from_word(alpha_word)?;
        let beta = Permutation::from_word(beta_word)?;
        let beta_inv = beta.inverse();
        Ok(ParityContext {
            m,
            parity,
            alpha,
            beta,
            beta_inv,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    /// Size of the ambient group: `2m+1` (odd) or `2m` (even).
    pub fn ambient_size(&self) -> usize {
        match self.parity {
            Parity::Odd => 2 * self.m + 1,
            Parity::Even => 2 * self.m,
        }
    }

    /// Size of the target class, always `2m + 2`.
    pub fn target_size(&self) -> usize {
        2 * self.m + 2
    }

    /// Which Dumont class the bijection lands in.
    pub fn dumont_kind(&self) -> DumontKind {
        match self.parity {
            Parity::Odd => DumontKind::FirstKind,
            Parity::Even => DumontKind::SecondKind,
        }
    }

    /// `alpha . u^-1 . beta^-1` evaluated on a bare word.
    fn conjugate_inverse_word(&self, word: &[usize]) -> Vec<usize> {
        let n = word.len();
        debug_assert_eq!(n, self.ambient_size());
        let mut uinv = vec![0usize; n];
        for (k, &v) in word.iter().enumerate() {
            uinv[v - 1] = k + 1;
        }
        let alpha = self.alpha.word();
        let beta_inv = self.beta_inv.word();
        (0..n).map(|k| alpha[uinv[beta_inv[k] - 1] - 1]).collect()
    }

    /// The full map on a bare word: conjugate, then embed.
    pub(crate) fn map_word(&self, word: &[usize]) -> Vec<usize> {
        let conjugated = self.conjugate_inverse_word(word);
        match self.parity {
            Parity::Odd => embed_odd_word(&conjugated),
            Parity::Even => embed_even_word(&conjugated),
        }
    }
}

/// Embeds `S_{2m+1}` into `S_{2m+2}` by inserting the new top value
/// `2m+2` just before the final entry:
/// `(u(1), ..., u(2m), 2m+2, u(2m+1))`.
///
/// ```
/// use footrule::bijections::embed_odd;
///
/// let u = "2 3 1".parse().unwrap();
/// assert_eq!(embed_odd(&u).unwrap().to_string(), "2 3 4 1");
/// ```
pub fn embed_odd(u: &Permutation) -> Result<Permutation> {
    if u.len() % 2 == 0 {
        return Err(Error::EvenSize(u.len()));
    }
    Ok(Permutation::from_word_unchecked(embed_odd_word(u.word())))
}

fn embed_odd_word(word: &[usize]) -> Vec<usize> {
    let n = word.len();
    let mut out = Vec::with_capacity(n + 1);
    out.extend_from_slice(&word[..n - 1]);
    out.push(n + 1);
    out.push(word[n - 1]);
    out
}

/// Embeds `S_{2m}` into `S_{2m+2}` by shifting all values up by one,
/// inserting 1 at position 2 and the new top value `2m+2` at position
/// `2m+1`: `(u(1)+1, 1, u(2)+1, ..., u(2m-1)+1, 2m+2, u(2m)+1)`.
///
/// ```
/// use footrule::bijections::embed_even;
///
/// let u = "2 4 1 3".parse().unwrap();
/// assert_eq!(embed_even(&u).unwrap().to_string(), "3 1 5 2 6 4");
/// ```
pub fn embed_even(u: &Permutation) -> Result<Permutation> {
    if u.len() % 2 == 1 {
        return Err(Error::OddSize(u.len()));
    }
    Ok(Permutation::from_word_unchecked(embed_even_word(u.word())))
}

fn embed_even_word(word: &[usize]) -> Vec<usize> {
    let n = word.len();
    let mut out = Vec::with_capacity(n + 2);
    out.push(word[0] + 1);
    out.push(1);
    for &v in &word[1..n - 1] {
        out.push(v + 1);
    }
    out.push(n + 2);
    out.push(word[n - 1] + 1);
    out
}

/// The odd-case map `u -> embed_odd(alpha . u^-1 . beta^-1)` from
/// `S_{2m+1}` into `S_{2m+2}`. Carries `[id, w_{2m+1}]` onto the
/// first-kind Dumont class.
pub fn dumont_map_odd(u: &Permutation) -> Result<Permutation> {
    if u.len() % 2 == 0 {
        return Err(Error::EvenSize(u.len()));
    }
    let ctx = ParityContext::new(u.len() / 2, Parity::Odd)?;
    Ok(Permutation::from_word_unchecked(ctx.map_word(u.word())))
}

/// The even-case map `u -> embed_even(alpha . u^-1 . beta^-1)` from
/// `S_{2m}` into `S_{2m+2}`. Carries `[id, w_{2m}]` onto the second-kind
/// Dumont class.
pub fn dumont_map_even(u: &Permutation) -> Result<Permutation> {
    if u.len() % 2 == 1 {
        return Err(Error::OddSize(u.len()));
    }
    let ctx = ParityContext::new(u.len() / 2, Parity::Even)?;
    Ok(Permutation::from_word_unchecked(ctx.map_word(u.word())))
}

/// Parity-dispatching front end: odd sizes go through [`dumont_map_odd`],
/// even sizes through [`dumont_map_even`].
pub fn dumont_map(u: &Permutation) -> Result<Permutation> {
    if u.len() % 2 == 1 {
        dumont_map_odd(u)
    } else {
        dumont_map_even(u)
    }
}

/// A witness that the membership equivalence failed at one permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub source: Permutation,
    pub image: Permutation,
    pub in_segment: bool,
    pub image_in_class: bool,
}

/// Outcome of a full-group verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub parity: Parity,
    pub m: usize,
    /// Size n of the ambient group that was scanned.
    pub ambient_size: usize,
    /// n!, the number of permutations scanned.
    pub group_size: u64,
    /// Members of `[id, w_n]` found during the scan.
    pub segment_size: u64,
    /// Members of the enumerated target Dumont class.
    pub class_size: u64,
    /// Total permutations where segment membership and class membership
    /// of the image disagreed.
    pub mismatches: u64,
    /// At most [`MAX_COUNTEREXAMPLES`] of the mismatches, verbatim.
    pub counterexamples: Vec<Counterexample>,
    /// Whether the map was injective on the whole ambient group.
    pub injective: bool,
    /// Whether the image of the segment equals the class exactly.
    pub image_matches_class: bool,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.injective && self.image_matches_class
    }
}

fn factorial_saturating(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| acc.saturating_mul(k))
}

/// Packs a word into a u64, 4 bits per entry; enough for sizes up to 16.
fn pack_word(word: &[usize]) -> u64 {
    debug_assert!(word.len() <= 16);
    word.iter()
        .enumerate()
        .fold(0u64, |acc, (k, &v)| acc | (((v - 1) as u64) << (4 * k)))
}

struct ShardScan {
    scanned: u64,
    mismatches: u64,
    counterexamples: Vec<Counterexample>,
    all_images: Vec<u64>,
    segment_images: Vec<u64>,
}

/// Exhaustively verifies, over the whole ambient group, that the parity's
/// map sends exactly the segment `[id, w_n]` onto the corresponding Dumont
/// class, and that it is injective. Uses the default budget of 10!.
pub fn verify_bijection(parity: Parity, m: usize) -> Result<VerificationReport> {
    verify_bijection_with_budget(parity, m, DEFAULT_VERIFY_BUDGET)
}

/// [`verify_bijection`] with an explicit budget on the ambient group size
/// (in permutations scanned, i.e. n! must not exceed it).
pub fn verify_bijection_with_budget(
    parity: Parity,
    m: usize,
    budget: u64,
) -> Result<VerificationReport> {
    let ctx = ParityContext::new(m, parity)?;
    let n = ctx.ambient_size();
    let group_size = factorial_saturating(n);
    if group_size > budget {
        let mut cap = 1usize;
        while factorial_saturating(cap + 1) <= budget {
            cap += 1;
        }
        return Err(Error::SizeTooLarge { size: n, cap });
    }
    let started = Instant::now();

    let kind = ctx.dumont_kind();
    let target = ctx.target_size();
    let class = dumont::enumerate_dumont_with_cap(kind, target, target)?;
    let profile = IntervalProfile::of(&Permutation::half_rotation(n));

    // Shard the group scan by first entry; shards are merged in index
    // order, so the result is identical for any thread count.
    let shards: Vec<ShardScan> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut scan = ShardScan {
                scanned: 0,
                mismatches: 0,
                counterexamples: Vec::new(),
                all_images: Vec::new(),
                segment_images: Vec::new(),
            };
            for_each_word_with_first(n, first, |word| {
                scan.scanned += 1;
                let image = ctx.map_word(word);
                let in_seg = profile.contains_word(word);
                let in_class = dumont::word_is_dumont(&image, kind);
                let packed = pack_word(&image);
                scan.all_images.push(packed);
                if in_seg {
                    scan.segment_images.push(packed);
                }
                if in_seg != in_class {
                    scan.mismatches += 1;
                    if scan.counterexamples.len() < MAX_COUNTEREXAMPLES {
                        scan.counterexamples.push(Counterexample {
                            source: Permutation::from_word_unchecked(word.to_vec()),
                            image: Permutation::from_word_unchecked(image.clone()),
                            in_segment: in_seg,
                            image_in_class: in_class,
                        });
                    }
                }
            });
            scan
        })
        .collect();

    let mut scanned = 0u64;
    let mut mismatches = 0u64;
    let mut counterexamples = Vec::new();
    let mut all_images = Vec::new();
    let mut segment_images = Vec::new();
    for shard in shards {
        scanned += shard.scanned;
        mismatches += shard.mismatches;
        for cx in shard.counterexamples {
            if counterexamples.len() < MAX_COUNTEREXAMPLES {
                counterexamples.push(cx);
            }
        }
        all_images.extend(shard.all_images);
        segment_images.extend(shard.segment_images);
    }
    debug_assert_eq!(scanned, group_size);

    all_images.sort_unstable();
    let injective = all_images.windows(2).all(|w| w[0] != w[1]);

    segment_images.sort_unstable();
    let mut class_packed: Vec<u64> = class.iter().map(|q| pack_word(q.word())).collect();
    class_packed.sort_unstable();
    let image_matches_class = segment_images == class_packed;

    Ok(VerificationReport {
        parity,
        m,
        ambient_size: n,
        group_size,
        segment_size: segment_images.len() as u64,
        class_size: class.len() as u64,
        mismatches,
        counterexamples,
        injective,
        image_matches_class,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::enumerate_segment;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn embed_odd_examples() {
        assert_eq!(embed_odd(&p("2 3 1")).unwrap(), p("2 3 4 1"));
        assert_eq!(embed_odd(&p("1")).unwrap(), p("2 1"));
        assert_eq!(embed_odd(&p("2 1 3")).unwrap(), p("2 1 4 3"));
        assert!(matches!(embed_odd(&p("2 1")), Err(Error::EvenSize(2))));
    }

    #[test]
    fn embed_even_examples() {
        assert_eq!(embed_even(&p("2 4 1 3")).unwrap(), p("3 1 5 2 6 4"));
        assert_eq!(embed_even(&p("2 1")).unwrap(), p("3 1 4 2"));
        assert_eq!(embed_even(&p("3 4 1 2")).unwrap(), p("4 1 5 2 6 3"));
        assert!(matches!(embed_even(&p("1")), Err(Error::OddSize(1))));
    }

    #[test]
    fn embeds_are_injective_and_land_two_sizes_up() {
        let mut images = Vec::new();
        for u in all_permutations(5) {
            let img = embed_odd(&u).unwrap();
            assert_eq!(img.len(), 6);
            assert_eq!(img.apply(5), 6);
            images.push(img);
        }
        images.sort_unstable();
        assert!(images.windows(2).all(|w| w[0] != w[1]));

        let mut images = Vec::new();
        for u in all_permutations(4) {
            let img = embed_even(&u).unwrap();
            assert_eq!(img.len(), 6);
            assert_eq!(img.apply(2), 1);
            assert_eq!(img.apply(5), 6);
            images.push(img);
        }
        images.sort_unstable();
        assert!(images.windows(2).all(|w| w[0] != w[1]));
    }

    #[test]
    fn context_examples() {
        let odd1 = ParityContext::new(1, Parity::Odd).unwrap();
        assert_eq!(odd1.alpha(), &p("1 3 2"));
        assert_eq!(odd1.beta(), &p("2 3 1"));
        assert_eq!(odd1.beta().inverse(), p("3 1 2"));

        let even2 = ParityContext::new(2, Parity::Even).unwrap();
        assert_eq!(even2.alpha(), &p("1 3 2 4"));
        assert_eq!(even2.beta(), &p("3 1 4 2"));
        assert_eq!(even2.beta().inverse(), p("2 4 1 3"));

        let odd2 = ParityContext::new(2, Parity::Odd).unwrap();
        assert_eq!(odd2.alpha(), &p("1 3 5 2 4"));
        assert_eq!(odd2.beta(), &p("2 4 5 1 3"));

        let odd0 = ParityContext::new(0, Parity::Odd).unwrap();
        assert_eq!(odd0.alpha(), &p("1"));
        assert_eq!(odd0.beta(), &p("1"));

        let even1 = ParityContext::new(1, Parity::Even).unwrap();
        assert_eq!(even1.alpha(), &p("1 2"));
        assert_eq!(even1.beta(), &p("1 2"));

        assert!(matches!(
            ParityContext::new(0, Parity::Even),
            Err(Error::InvalidM { m: 0, .. })
        ));
    }

    #[test]
    fn context_conjugators_are_valid_for_larger_m() {
        for m in 1..=8 {
            for parity in [Parity::Odd, Parity::Even] {
                let ctx = ParityContext::new(m, parity).unwrap();
                assert_eq!(ctx.alpha().len(), ctx.ambient_size());
                assert_eq!(ctx.beta().len(), ctx.ambient_size());
            }
        }
    }

    #[test]
    fn odd_map_small_segment() {
        assert_eq!(dumont_map_odd(&p("1 2 3")).unwrap(), p("2 1 4 3"));
        assert_eq!(dumont_map_odd(&p("1 3 2")).unwrap(), p("3 1 4 2"));
        assert_eq!(dumont_map_odd(&p("2 3 1")).unwrap(), p("3 2 4 1"));
    }

    #[test]
    fn even_map_small_segment() {
        assert_eq!(dumont_map_even(&p("1 2 3 4")).unwrap(), p("4 1 5 2 6 3"));
        assert_eq!(dumont_map_even(&p("3 4 1 2")).unwrap(), p("5 1 4 3 6 2"));
        assert_eq!(dumont_map_even(&p("2 4 1 3")).unwrap(), p("2 1 4 3 6 5"));
    }

    #[test]
    fn dispatch_selects_by_parity() {
        assert_eq!(dumont_map(&p("1")).unwrap(), p("2 1"));
        assert_eq!(dumont_map(&p("1 3 2")).unwrap(), p("3 1 4 2"));
        assert_eq!(dumont_map(&p("1 2 3 4")).unwrap(), p("4 1 5 2 6 3"));
    }

    #[test]
    fn even_map_covers_class_exactly() {
        let segment = enumerate_segment(&Permutation::half_rotation(4)).unwrap();
        let mut images: Vec<Permutation> = segment
            .iter()
            .map(|u| dumont_map_even(u).unwrap())
            .collect();
        images.sort_unstable();
        let class = dumont::enumerate_dumont(DumontKind::SecondKind, 6).unwrap();
        assert_eq!(images, class);
    }

    #[test]
    fn verify_small_cases_pass() {
        let r = verify_bijection(Parity::Odd, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.segment_size, 3);
        assert_eq!(r.class_size, 3);
        assert_eq!(r.group_size, 6);

        let r = verify_bijection(Parity::Even, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.segment_size, 8);
        assert_eq!(r.class_size, 8);

        let r = verify_bijection(Parity::Odd, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.segment_size, 1);

        let r = verify_bijection(Parity::Even, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.segment_size, 2);
    }

    #[test]
    fn verify_budget_is_enforced() {
        assert!(matches!(
            verify_bijection_with_budget(Parity::Odd, 4, 1000),
            Err(Error::SizeTooLarge { size: 9, .. })
        ));
    }

    #[test]
    fn proof_level_value_conditions() {
        // Odd case: for 1 <= i <= m, the image has a small value at
        // position 2i exactly when the value i sits, in u, on a position
        // from [1, i] or [m+2, m+i+1].
        let m = 2;
        for u in all_permutations(2 * m + 1) {
            let img = dumont_map_odd(&u).unwrap();
            let uinv = u.inverse();
            for i in 1..=m {
                let lhs = img.apply(2 * i) <= 2 * i;
                let pos = uinv.apply(i);
                let rhs = (1..=i).contains(&pos) || (m + 2..=m + i + 1).contains(&pos);
                assert_eq!(lhs, rhs, "u = {u}, i = {i}");
            }
        }
        // Even case: for 2 <= i <= m, strict smallness at position 2i
        // corresponds to the value i-1 sitting on [1, i-1] or [m+1, m+i-1].
        let m = 3;
        for u in all_permutations(2 * m) {
            let img = dumont_map_even(&u).unwrap();
            let uinv = u.inverse();
            for i in 2..=m {
                let lhs = img.apply(2 * i) < 2 * i;
                let pos = uinv.apply(i - 1);
                let rhs = (1..=i - 1).contains(&pos) || (m + 1..=m + i - 1).contains(&pos);
                assert_eq!(lhs, rhs, "u = {u}, i = {i}");
            }
        }
    }
}
