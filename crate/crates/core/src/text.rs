//! Input strings and the augmented string `T $ rev(T) #`.
//!
//! Positions are 1-based throughout the crate, matching the usual stringology
//! notation; slices are still 0-based, so `at(i)` reads `ranks[i - 1]`.

use crate::error::{Result, SagpError};

/// Rank of the `#` terminal of `T'` and `rev(T)#`.
pub const HASH: u32 = 0;
/// Rank of the `$` separator of `T'`.
pub const DOLLAR: u32 = 1;
/// Smallest rank given to a real symbol.
pub const FIRST_RANK: u32 = 2;

/// A validated input string with its symbols remapped to dense ranks.
///
/// Ranks preserve the order of the raw symbols and start at [`FIRST_RANK`],
/// leaving `0` and `1` free for the sentinels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    raw: Vec<u64>,
    ranks: Vec<u32>,
    sigma: usize,
}

impl Text {
    pub fn from_bytes(bytes: &[u8]) -> Self {
        let raw: Vec<u64> = bytes.iter().map(|&b| u64::from(b)).collect();
        Self::from_symbols(&raw)
    }

    pub fn from_symbols(symbols: &[u64]) -> Self {
        let mut alphabet = symbols.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let ranks = symbols
            .iter()
            .map(|s| {
                let r = alphabet.binary_search(s).expect("symbol taken from the input");
                r as u32 + FIRST_RANK
            })
            .collect();
        Text {
            raw: symbols.to_vec(),
            ranks,
            sigma: alphabet.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn raw(&self) -> &[u64] {
        &self.raw
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Rank of the symbol at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> u32 {
        self.ranks[i - 1]
    }

    /// Largest rank in use plus one; sizes per-symbol tables.
    pub fn rank_bound(&self) -> usize {
        self.sigma + FIRST_RANK as usize
    }

    pub fn augmented(&self) -> AugmentedText {
        AugmentedText::new(self)
    }

    /// `rev(T)` followed by `#`.
    pub fn reversed_terminated(&self) -> Vec<u32> {
        let mut seq: Vec<u32> = self.ranks.iter().rev().copied().collect();
        seq.push(HASH);
        seq
    }
}

/// `T' = T $ rev(T) #` as an integer sequence of length `2n + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedText {
    tprime: Vec<u32>,
    n: usize,
}

impl AugmentedText {
    pub fn new(text: &Text) -> Self {
        let n = text.len();
        let mut tprime = Vec::with_capacity(2 * n + 2);
        tprime.extend_from_slice(text.ranks());
        tprime.push(DOLLAR);
        tprime.extend(text.ranks().iter().rev());
        tprime.push(HASH);
        AugmentedText { tprime, n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.tprime.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.tprime
    }

    #[inline]
    pub fn at(&self, j: usize) -> u32 {
        self.tprime[j - 1]
    }

    /// Whether `j` lies in the `rev(T)` half, i.e. `n + 2 <= j <= 2n + 1`.
    #[inline]
    pub fn is_reversed(&self, j: usize) -> bool {
        j >= self.n + 2 && j <= 2 * self.n + 1
    }

    /// The end position in `T` of the reversed prefix that starts at `j` in `T'`.
    pub fn op(&self, j: usize) -> Result<usize> {
        op_map(self.n, j)
    }
}

/// `op(j) = 2n - j + 2` for `j` in the reversed half of `T'`.
pub fn op_map(n: usize, j: usize) -> Result<usize> {
    if j < n + 2 || j > 2 * n + 1 {
        return Err(SagpError::NotReversedPosition { pos: j, n });
    }
    Ok(2 * n + 2 - j)
}
