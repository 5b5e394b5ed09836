//! Scans the suffix array outwards from the rank of `T[i+P+1..]`, pivots
//! grouped by their begin position so the set of usable reversed prefixes
//! only depends on `b`.

use super::AugmentedIndex;
use crate::palindromes::PalBuckets;
use crate::sagp::{PivotType, Sagp};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TraversalStats {
    pub entries_scanned: u64,
    pub pivots_processed: u64,
    pub outputs: u64,
}

impl TraversalStats {
    pub fn entries_per_pivot(&self) -> f64 {
        if self.pivots_processed == 0 {
            0.0
        } else {
            self.entries_scanned as f64 / self.pivots_processed as f64
        }
    }

    pub fn entries_per_output(&self) -> f64 {
        if self.outputs == 0 {
            0.0
        } else {
            self.entries_scanned as f64 / self.outputs as f64
        }
    }
}

pub fn find_type1_traverse(
    ai: &AugmentedIndex,
    buckets: &PalBuckets,
    kinds: &[PivotType],
) -> (Vec<Sagp>, TraversalStats) {
    let n = ai.n();
    let m = ai.idx.len();
    let lcp = ai.idx.lcp_array();
    let mut stats = TraversalStats::default();
    let mut out = Vec::new();

    for b in 1..=n {
        // rev(T[..e]) starts at 2n + 2 - e; usable iff e <= b - 2
        let lo_pos = (2 * n + 4).saturating_sub(b);
        let active = |rank: usize| {
            let p = ai.idx.sa(rank);
            p >= lo_pos && p <= 2 * n + 1
        };
        for &p in buckets.bucket(b) {
            let i = b + p - 1;
            if kinds[i - 1] != PivotType::Type1 {
                continue;
            }
            stats.pivots_processed += 1;
            let k = ai.forward_rank(i + p + 1);

            let mut below = None;
            let (mut t, mut run) = (k, i32::MAX);
            while t > 1 {
                run = run.min(lcp[t]);
                t -= 1;
                stats.entries_scanned += 1;
                if active(t) {
                    below = Some((t, run));
                    break;
                }
            }
            let mut above = None;
            let (mut t, mut run) = (k, i32::MAX);
            while t < m {
                t += 1;
                run = run.min(lcp[t]);
                stats.entries_scanned += 1;
                if active(t) {
                    above = Some((t, run));
                    break;
                }
            }

            let w = below.map_or(0, |x| x.1).max(above.map_or(0, |x| x.1));
            if w <= 0 {
                continue;
            }
            let emit = |rank: usize, out: &mut Vec<Sagp>| {
                let e = 2 * n + 2 - ai.idx.sa(rank);
                out.push(Sagp::new(i, w as usize, b - e - 1, p, PivotType::Type1));
            };
            let before = out.len();
            if let Some((mut t, _)) = below.filter(|x| x.1 == w) {
                emit(t, &mut out);
                while t > 1 && lcp[t] >= w {
                    t -= 1;
                    stats.entries_scanned += 1;
                    if active(t) {
                        emit(t, &mut out);
                    }
                }
            }
            if let Some((mut t, _)) = above.filter(|x| x.1 == w) {
                emit(t, &mut out);
                while t < m && lcp[t + 1] >= w {
                    t += 1;
                    stats.entries_scanned += 1;
                    if active(t) {
                        emit(t, &mut out);
                    }
                }
            }
            stats.outputs += (out.len() - before) as u64;
        }
    }
    (out, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{build_tables, classify_pivots};
    use crate::palindromes::{compute_buckets, compute_pals};
    use crate::text::Text;
    use crate::type1::find_type1_naive;
    use proptest::prelude::*;

    fn both(s: &[u8]) -> (Vec<Sagp>, Vec<Sagp>, TraversalStats) {
        let t = Text::from_bytes(s);
        let pals = compute_pals(&t);
        let kinds = classify_pivots(&t, &pals, &build_tables(&t));
        let ai = AugmentedIndex::new(&t).unwrap();
        let mut a = find_type1_naive(&ai, &pals, &kinds);
        let (mut b, st) = find_type1_traverse(&ai, &compute_buckets(&pals), &kinds);
        a.sort();
        b.sort();
        (a, b, st)
    }

    #[test]
    fn example_and_stats() {
        let (a, b, st) = both(b"acacabaabca");
        assert_eq!(a, b);
        assert_eq!(st.outputs as usize, b.len());
        assert!(st.pivots_processed >= 1);
    }

    proptest! {
        #[test]
        fn agrees_with_naive(s in proptest::collection::vec(b'a'..b'd', 0..80)) {
            let (a, b, _) = both(&s);
            prop_assert_eq!(a, b);
        }
    }
}
