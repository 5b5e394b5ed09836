//! Canonical longest single-arm-gapped palindromes (`w g u rev(u) rev(w)`).
//!
//! For every pivot of a string the crate reports the gapped palindromes whose
//! arms `|w| + |u|` are longest, preferring the longest inner palindrome
//! `u rev(u)`. Pivots split into two kinds: type-1 pivots, where the inner
//! palindrome is maximal, are handled by one of several interchangeable
//! backends ([`Backend`]); type-2 pivots always have `|w| = 1` and are
//! handled by [`type2`].
//!
//! ```
//! use sagp_core::{compute_report, Backend, Text};
//!
//! let text = Text::from_bytes(b"acacabaabca");
//! let report = compute_report(&text, Backend::SuffixTree).unwrap();
//! let quads: Vec<_> = report.entry(7).unwrap().sagps.iter().map(|s| s.quad()).collect();
//! assert_eq!(quads, vec![(7, 2, 1, 2), (7, 2, 3, 2)]);
//! ```

// index loops mirror the array notation of the algorithms
#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod error;
pub mod gen;
pub mod index;
pub mod oracle;
pub mod palindromes;
pub mod pipeline;
pub mod predsucc;
pub mod sagp;
pub mod suffix_tree;
pub mod text;
pub mod type1;
pub mod type2;

pub use error::{Result, SagpError};
pub use pipeline::{compute_report, compute_type1, Backend, Prepared};
pub use predsucc::PredSuccBackend;
pub use sagp::{canonical_order, validate_sagp, PivotEntry, PivotType, Sagp, SagpReport};
pub use text::Text;

/// Stand-in for `+inf` in position tables.
pub const INF: usize = usize::MAX;
