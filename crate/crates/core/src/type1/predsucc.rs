//! Keeps the ranks of usable reversed prefixes in a predecessor structure
//! over `[1, 2n + 2]`, inserting one rank per begin position.

use super::AugmentedIndex;
use crate::error::Result;
use crate::palindromes::PalBuckets;
use crate::predsucc::{OrderedSetBaseline, PredSucc, PredSuccBackend, VebTree, YFastTrie};
use crate::sagp::{PivotType, Sagp};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub queries: u64,
    pub inserts: u64,
    pub pivots_processed: u64,
    pub outputs: u64,
}

pub fn find_type1_predsucc(
    ai: &AugmentedIndex,
    buckets: &PalBuckets,
    kinds: &[PivotType],
    backend: PredSuccBackend,
) -> Result<(Vec<Sagp>, QueryStats)> {
    match backend {
        PredSuccBackend::Baseline => run::<OrderedSetBaseline>(ai, buckets, kinds),
        PredSuccBackend::Veb => run::<VebTree>(ai, buckets, kinds),
        PredSuccBackend::YFast => run::<YFastTrie>(ai, buckets, kinds),
    }
}

pub fn run<S: PredSucc>(
    ai: &AugmentedIndex,
    buckets: &PalBuckets,
    kinds: &[PivotType],
) -> Result<(Vec<Sagp>, QueryStats)> {
    let n = ai.n();
    let mut set = S::with_universe(ai.idx.len());
    let mut stats = QueryStats::default();
    let mut out = Vec::new();

    for b in 1..=n {
        if b >= 3 {
            set.insert(ai.reversed_rank(b - 2))?;
            stats.inserts += 1;
        }
        for &p in buckets.bucket(b) {
            let i = b + p - 1;
            if kinds[i - 1] != PivotType::Type1 {
                continue;
            }
            stats.pivots_processed += 1;
            let k = ai.forward_rank(i + p + 1);
            let pred = set.predecessor(k)?;
            let succ = set.successor(k)?;
            stats.queries += 2;
            let wp = pred.map_or(0, |r| ai.lcp_ranks(r, k));
            let wq = succ.map_or(0, |r| ai.lcp_ranks(r, k));
            let w = wp.max(wq);
            if w == 0 {
                continue;
            }
            let before = out.len();
            let emit = |rank: usize, out: &mut Vec<Sagp>| {
                let e = 2 * n + 2 - ai.idx.sa(rank);
                out.push(Sagp::new(i, w, b - e - 1, p, PivotType::Type1));
            };
            if wp == w {
                let mut cur = pred;
                while let Some(r) = cur.filter(|&r| ai.lcp_ranks(r, k) >= w) {
                    emit(r, &mut out);
                    cur = set.predecessor(r)?;
                    stats.queries += 1;
                }
            }
            if wq == w {
                let mut cur = succ;
                while let Some(r) = cur.filter(|&r| ai.lcp_ranks(r, k) >= w) {
                    emit(r, &mut out);
                    cur = set.successor(r)?;
                    stats.queries += 1;
                }
            }
            stats.outputs += (out.len() - before) as u64;
        }
    }
    Ok((out, stats))
}
