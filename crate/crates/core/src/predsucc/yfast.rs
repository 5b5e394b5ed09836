//! Y-fast trie: an x-fast trie over bucket representatives, with each bucket a
//! balanced search tree of O(log U) keys.
//!
//! Every level of the x-fast trie is a hash table from bit prefix to the
//! smallest and largest representative below it, so the longest matching
//! prefix is found by binary search over levels. A permanent bucket with
//! representative `0` (outside the key range) makes every key fall into some
//! bucket, which keeps inserts free of representative changes: a bucket only
//! ever splits, and its upper half gets a fresh representative.

use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use super::{check_universe, PredSucc};
use crate::error::Result;

#[derive(Debug, Clone)]
struct Bucket {
    keys: BTreeSet<u64>,
    prev: Option<u64>,
    next: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct YFastTrie {
    universe: usize,
    bits: u32,
    split_at: usize,
    len: usize,
    // levels[d]: d-bit prefix -> (min, max) representative in that subtree
    levels: Vec<FxHashMap<u64, (u64, u64)>>,
    buckets: FxHashMap<u64, Bucket>,
}

impl YFastTrie {
    pub fn bucket_count(&self) -> usize {
        self.buckets.len()
    }

    /// Prefix-table entries over all levels; proportional to `|S|`.
    pub fn trie_node_count(&self) -> usize {
        self.levels.iter().map(FxHashMap::len).sum()
    }

    #[inline]
    fn prefix(&self, x: u64, d: u32) -> u64 {
        if d == 0 {
            0
        } else {
            x >> (self.bits - d)
        }
    }

    /// Largest representative `<= x`; always exists thanks to representative 0.
    fn rep_at_or_below(&self, x: u64) -> u64 {
        let (mut lo, mut hi) = (0u32, self.bits);
        // invariant: prefix of length lo is present, every length > hi is absent
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.levels[mid as usize].contains_key(&self.prefix(x, mid)) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        if lo == self.bits {
            return x;
        }
        let (min, max) = self.levels[lo as usize][&self.prefix(x, lo)];
        let next_bit = (x >> (self.bits - lo - 1)) & 1;
        if next_bit == 1 {
            // only the 0-side child exists: everything below is smaller than x
            max
        } else {
            self.buckets[&min].prev.expect("representative 0 precedes every key")
        }
    }

    fn add_rep(&mut self, rep: u64, keys: BTreeSet<u64>) {
        let prev = self.rep_at_or_below(rep);
        let next = self.buckets[&prev].next;
        self.buckets.get_mut(&prev).unwrap().next = Some(rep);
        if let Some(nx) = next {
            self.buckets.get_mut(&nx).unwrap().prev = Some(rep);
        }
        self.buckets.insert(rep, Bucket { keys, prev: Some(prev), next });
        for d in 0..=self.bits {
            let p = self.prefix(rep, d);
            self.levels[d as usize]
                .entry(p)
                .and_modify(|(lo, hi)| {
                    *lo = (*lo).min(rep);
                    *hi = (*hi).max(rep);
                })
                .or_insert((rep, rep));
        }
    }
}

impl PredSucc for YFastTrie {
    fn with_universe(universe: usize) -> Self {
        let bits = (usize::BITS - universe.leading_zeros()).max(1);
        let mut levels = vec![FxHashMap::default(); bits as usize + 1];
        for level in &mut levels {
            level.insert(0, (0, 0));
        }
        let mut buckets = FxHashMap::default();
        buckets.insert(
            0,
            Bucket {
                keys: BTreeSet::new(),
                prev: None,
                next: None,
            },
        );
        YFastTrie {
            universe,
            bits,
            split_at: 2 * bits as usize,
            len: 0,
            levels,
            buckets,
        }
    }

    fn universe(&self) -> usize {
        self.universe
    }

    fn len(&self) -> usize {
        self.len
    }

    fn insert(&mut self, x: usize) -> Result<bool> {
        check_universe(x, self.universe)?;
        let x = x as u64;
        let rep = self.rep_at_or_below(x);
        let bucket = self.buckets.get_mut(&rep).unwrap();
        if !bucket.keys.insert(x) {
            return Ok(false);
        }
        self.len += 1;
        if bucket.keys.len() > self.split_at {
            let half = bucket.keys.len() / 2;
            let pivot = *bucket.keys.iter().nth(half).unwrap();
            let upper = bucket.keys.split_off(&pivot);
            self.add_rep(pivot, upper);
        }
        Ok(true)
    }

    fn predecessor(&self, x: usize) -> Result<Option<usize>> {
        check_universe(x, self.universe)?;
        let x = x as u64;
        let mut rep = Some(self.rep_at_or_below(x));
        while let Some(r) = rep {
            let b = &self.buckets[&r];
            if let Some(&k) = b.keys.range(..x).next_back() {
                return Ok(Some(k as usize));
            }
            rep = b.prev;
        }
        Ok(None)
    }

    fn successor(&self, x: usize) -> Result<Option<usize>> {
        check_universe(x, self.universe)?;
        let x = x as u64;
        let b = &self.buckets[&self.rep_at_or_below(x)];
        if let Some(&k) = b.keys.range(x + 1..).next() {
            return Ok(Some(k as usize));
        }
        // non-zero representatives are members of their own buckets
        Ok(b.next.map(|r| r as usize))
    }
}
