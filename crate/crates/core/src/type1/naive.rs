//! Tries every gap length with one LCP query each: O(n^2) in the worst case.

use super::{type1_pivots, AugmentedIndex};
use crate::palindromes::PalsArray;
use crate::sagp::{PivotType, Sagp};

pub fn find_type1_naive(ai: &AugmentedIndex, pals: &PalsArray, kinds: &[PivotType]) -> Vec<Sagp> {
    let mut out = Vec::new();
    let mut gaps = Vec::new();
    for (i, p) in type1_pivots(pals, kinds) {
        let k = ai.forward_rank(i + p + 1);
        let mut best = 0;
        gaps.clear();
        for g in 1..i - p {
            let w = ai.lcp_ranks(ai.reversed_rank(i - p - g), k);
            if w > best {
                best = w;
                gaps.clear();
            }
            if w == best && w > 0 {
                gaps.push(g);
            }
        }
        out.extend(gaps.iter().map(|&g| Sagp::new(i, best, g, p, PivotType::Type1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{build_tables, classify_pivots};
    use crate::palindromes::compute_pals;
    use crate::text::Text;

    #[test]
    fn acacabaabca_pivot_7() {
        let t = Text::from_bytes(b"acacabaabca");
        let pals = compute_pals(&t);
        let kinds = classify_pivots(&t, &pals, &build_tables(&t));
        let ai = AugmentedIndex::new(&t).unwrap();
        let mut got: Vec<_> = find_type1_naive(&ai, &pals, &kinds)
            .into_iter()
            .filter(|s| s.pivot == 7)
            .map(|s| s.quad())
            .collect();
        got.sort();
        assert_eq!(got, vec![(7, 2, 1, 2), (7, 2, 3, 2)]);
    }
}
