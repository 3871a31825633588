//! Exact combinatorics of l1 (Spearman footrule) segments in symmetric
//! groups.
//!
//! The toolkit covers:
//!
//! - [`perm`]: permutations in one-line notation with group operations,
//!   parsing, and the half-rotation family of endpoints;
//! - [`metric`]: the l1 distance, geodesic segment membership and
//!   enumeration, and exact segment counting with two independent
//!   backends (subset DP and backtracking);
//! - [`dumont`]: Dumont permutation classes of the first and second kind,
//!   whose cardinalities realize the Genocchi numbers and Genocchi
//!   medians;
//! - [`bijections`]: explicit maps carrying segments at half-rotation
//!   endpoints onto Dumont classes, with an exhaustive full-group
//!   verifier;
//! - [`search`]: exhaustive maximal-segment search over `S_n` checking
//!   that the half-rotation attains the maximum cardinality.
//!
//! All operations are pure; permutations are immutable values that can be
//! shared freely across threads. Counts are exact, never floating point.

pub mod bijections;
mod counting;
pub mod dumont;
pub mod error;
pub mod metric;
pub mod perm;
pub mod search;

pub use error::{Error, Result};
pub use perm::Permutation;
