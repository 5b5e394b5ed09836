//! Suffix array, inverse suffix array, LCP array, RMQ and PLV/NLV.
//!
//! All arrays are 1-based: slot 0 is padding, ranks run over `1..=m` and
//! suffix start positions over `1..=m`, where `m` is the subject length.

mod rmq;
mod sais;

pub use rmq::RmqTable;

use crate::error::{Result, SagpError};

#[derive(Debug, Clone)]
pub struct SuffixArrayIndex {
    subject: Vec<u32>,
    sa: Vec<u32>,
    isa: Vec<u32>,
    lcp: Vec<i32>,
}

/// Builds SA (induced sorting), ISA and LCP (Kasai) for `seq`, whose last
/// symbol must be strictly smaller than every other symbol.
pub fn build_index(seq: &[u32]) -> Result<SuffixArrayIndex> {
    let m = seq.len();
    let Some((&last, body)) = seq.split_last() else {
        return Err(SagpError::EmptySequence);
    };
    if body.iter().any(|&c| c <= last) {
        return Err(SagpError::BadTerminal);
    }
    // shift so the terminal is 0
    let shifted: Vec<u32> = seq.iter().map(|&c| c - last).collect();
    let k = *shifted.iter().max().unwrap() as usize + 1;
    let sa0 = sais::sais(&shifted, k);

    let mut sa = vec![0u32; m + 1];
    let mut isa = vec![0u32; m + 1];
    for (r, &p) in sa0.iter().enumerate() {
        sa[r + 1] = p + 1;
        isa[p as usize + 1] = r as u32 + 1;
    }

    // Kasai: lcp[isa[p]] for p = 1, 2, ... drops by at most one per step
    let mut lcp = vec![0i32; m + 1];
    lcp[1] = -1;
    let mut h = 0usize;
    for p in 1..=m {
        let r = isa[p] as usize;
        if r > 1 {
            let q = sa[r - 1] as usize;
            while p + h <= m && q + h <= m && seq[p + h - 1] == seq[q + h - 1] {
                h += 1;
            }
            lcp[r] = h as i32;
            h = h.saturating_sub(1);
        } else {
            h = 0;
        }
    }

    Ok(SuffixArrayIndex {
        subject: seq.to_vec(),
        sa,
        isa,
        lcp,
    })
}

impl SuffixArrayIndex {
    pub fn len(&self) -> usize {
        self.subject.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subject.is_empty()
    }

    pub fn subject(&self) -> &[u32] {
        &self.subject
    }

    /// Start position of the suffix of the given rank.
    #[inline]
    pub fn sa(&self, rank: usize) -> usize {
        self.sa[rank] as usize
    }

    #[inline]
    pub fn isa(&self, pos: usize) -> usize {
        self.isa[pos] as usize
    }

    /// LCP of the suffixes ranked `rank - 1` and `rank`; `-1` at rank 1.
    #[inline]
    pub fn lcp(&self, rank: usize) -> i32 {
        self.lcp[rank]
    }

    /// Padded LCP array (slot 0 unused).
    pub fn lcp_array(&self) -> &[i32] {
        &self.lcp
    }

    pub fn suffix_len(&self, pos: usize) -> usize {
        self.len() - pos + 1
    }

    pub fn build_rmq(&self) -> RmqTable<i32> {
        RmqTable::new(&self.lcp)
    }

    /// LCP of the suffixes ranked `a` and `b`, without range checks.
    #[inline]
    pub fn range_lcp_unchecked(&self, rmq: &RmqTable<i32>, a: usize, b: usize) -> usize {
        if a == b {
            return self.suffix_len(self.sa(a));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        rmq.min(lo + 1, hi) as usize
    }
}

pub fn range_lcp(
    idx: &SuffixArrayIndex,
    rmq: &RmqTable<i32>,
    a: usize,
    b: usize,
) -> Result<usize> {
    let m = idx.len();
    for rank in [a, b] {
        if rank == 0 || rank > m {
            return Err(SagpError::RankOutOfRange { rank, len: m });
        }
    }
    Ok(idx.range_lcp_unchecked(rmq, a, b))
}

/// Previous / next SA entry holding a larger suffix start.
///
/// `-inf` is stored as `0` and `+inf` as `m + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlvNlv {
    plv: Vec<u32>,
    nlv: Vec<u32>,
}

impl PlvNlv {
    #[inline]
    pub fn plv(&self, rank: usize) -> usize {
        self.plv[rank] as usize
    }

    #[inline]
    pub fn nlv(&self, rank: usize) -> usize {
        self.nlv[rank] as usize
    }

    pub fn len(&self) -> usize {
        self.plv.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn build_plv_nlv(idx: &SuffixArrayIndex) -> PlvNlv {
    let m = idx.len();
    let mut plv = vec![0u32; m + 1];
    let mut nlv = vec![0u32; m + 1];
    let mut stack: Vec<usize> = Vec::new();
    for j in 1..=m {
        while stack.last().is_some_and(|&t| idx.sa(t) < idx.sa(j)) {
            stack.pop();
        }
        plv[j] = stack.last().copied().unwrap_or(0) as u32;
        stack.push(j);
    }
    stack.clear();
    for j in (1..=m).rev() {
        while stack.last().is_some_and(|&t| idx.sa(t) < idx.sa(j)) {
            stack.pop();
        }
        nlv[j] = stack.last().copied().unwrap_or(m + 1) as u32;
        stack.push(j);
    }
    PlvNlv { plv, nlv }
}

/// Marks a missing PLV (`-inf`) or NLV (`+inf`) in [`Neighbours`].
pub const NO_NEIGHBOUR: u32 = u32::MAX;

/// The PLV and NLV suffixes of one suffix, as start positions, with their
/// LCPs against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Neighbours {
    pub left: u32,
    pub left_lcp: u32,
    pub right: u32,
    pub right_lcp: u32,
}

/// [`Neighbours`] of every suffix, indexed by start position (slot 0 unused).
pub fn build_neighbours(idx: &SuffixArrayIndex) -> Vec<Neighbours> {
    neighbours_from_arrays(&idx.sa, &idx.lcp)
}

/// [`build_neighbours`] over raw 1-based `sa` and `lcp` arrays.
///
/// Both passes keep, per stack entry, the minimum LCP to the entry below it,
/// so no range-minimum structure is needed.
pub fn neighbours_from_arrays(sa: &[u32], lcp: &[i32]) -> Vec<Neighbours> {
    let m = sa.len() - 1;
    let empty = Neighbours {
        left: NO_NEIGHBOUR,
        left_lcp: 0,
        right: NO_NEIGHBOUR,
        right_lcp: 0,
    };
    let mut out = vec![empty; m + 1];
    // (rank, min lcp between this entry and the one below it)
    let mut stack: Vec<(usize, u32)> = Vec::new();
    for j in 1..=m {
        let mut run = if j > 1 { lcp[j] as u32 } else { 0 };
        while let Some(&(t, below)) = stack.last() {
            if sa[t] > sa[j] {
                break;
            }
            stack.pop();
            run = run.min(below);
        }
        if let Some(&(t, _)) = stack.last() {
            let slot = &mut out[sa[j] as usize];
            slot.left = sa[t];
            slot.left_lcp = run;
        }
        stack.push((j, run));
    }
    stack.clear();
    for j in (1..=m).rev() {
        let mut run = if j < m { lcp[j + 1] as u32 } else { 0 };
        while let Some(&(t, above)) = stack.last() {
            if sa[t] > sa[j] {
                break;
            }
            stack.pop();
            run = run.min(above);
        }
        if let Some(&(t, _)) = stack.last() {
            let slot = &mut out[sa[j] as usize];
            slot.right = sa[t];
            slot.right_lcp = run;
        }
        stack.push((j, run));
    }
    out
}

/// The SA and LCP arrays of the suffixes starting at `from..`, read off the
/// full arrays; positions are shifted so `from` becomes 1.
///
/// Correct whenever those suffixes compare exactly as they would on their own,
/// e.g. when the subject ends with a unique terminal.
pub fn restrict_to_tail(idx: &SuffixArrayIndex, from: usize) -> (Vec<u32>, Vec<i32>) {
    let m = idx.len();
    let mut sa = Vec::with_capacity(m + 2 - from);
    let mut lcp = Vec::with_capacity(m + 2 - from);
    sa.push(0);
    lcp.push(0);
    let mut run = i32::MAX;
    for r in 1..=m {
        run = run.min(idx.lcp[r]);
        let p = idx.sa[r] as usize;
        if p >= from {
            sa.push((p - from + 1) as u32);
            lcp.push(if sa.len() == 2 { -1 } else { run });
            run = i32::MAX;
        }
    }
    (sa, lcp)
}
