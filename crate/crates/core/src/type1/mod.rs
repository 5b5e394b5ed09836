//! Type-1 pivots: the inner palindrome is the maximal even palindrome at the
//! pivot, so only the outer arm `w` and the gap remain to be chosen.
//!
//! With `P = pals[i]` and `b = i - P + 1`, the arm `w` is the longest common
//! prefix of `T[i+P+1..]` and a reversed prefix `rev(T[..e])` with
//! `e <= b - 2`; the gap is `b - e - 1`. Every backend answers the same
//! question over the index of `T' = T $ rev(T) #`.

pub mod naive;
pub mod predsucc;
pub mod stree;
pub mod traverse;

use crate::error::Result;
use crate::index::{build_index, RmqTable, SuffixArrayIndex};
use crate::palindromes::PalsArray;
use crate::sagp::PivotType;
use crate::text::{AugmentedText, Text};

pub use naive::find_type1_naive;
pub use predsucc::{find_type1_predsucc, QueryStats};
pub use stree::{find_type1_stree, StreeStats};
pub use traverse::{find_type1_traverse, TraversalStats};

/// `T'` with its suffix array, LCP array and an RMQ over the LCP array.
#[derive(Debug, Clone)]
pub struct AugmentedIndex {
    pub aug: AugmentedText,
    pub idx: SuffixArrayIndex,
    pub rmq: RmqTable<i32>,
}

impl AugmentedIndex {
    pub fn new(text: &Text) -> Result<Self> {
        let aug = text.augmented();
        let idx = build_index(aug.as_slice())?;
        let rmq = idx.build_rmq();
        Ok(AugmentedIndex { aug, idx, rmq })
    }

    pub fn n(&self) -> usize {
        self.aug.n()
    }

    /// Rank of the reversed prefix `rev(T[..e])`, `1 <= e <= n`.
    #[inline]
    pub fn reversed_rank(&self, e: usize) -> usize {
        self.idx.isa(2 * self.n() + 2 - e)
    }

    /// Rank of the suffix `T[x..]`, `1 <= x <= n + 1`.
    #[inline]
    pub fn forward_rank(&self, x: usize) -> usize {
        self.idx.isa(x)
    }

    #[inline]
    pub fn lcp_ranks(&self, a: usize, b: usize) -> usize {
        self.idx.range_lcp_unchecked(&self.rmq, a, b)
    }
}

/// `(pivot, radius)` of every type-1 pivot, in increasing pivot order.
pub fn type1_pivots<'a>(
    pals: &'a PalsArray,
    kinds: &'a [PivotType],
) -> impl Iterator<Item = (usize, usize)> + 'a {
    kinds
        .iter()
        .enumerate()
        .filter(|(_, &k)| k == PivotType::Type1)
        .map(move |(i, _)| (i + 1, pals.radius(i + 1)))
}
