//! Canonical longest SAGPs for type-2 pivots.
//!
//! For a type-2 pivot every canonical longest SAGP has `|w| = 1`, so the
//! problem reduces to finding the leftmost `r` in the right half of `u` whose
//! symbol already occurred earlier in the text (`FindR`) and then listing all
//! earlier occurrences of that symbol through `NextPos`.

use crate::classify::ClassifyTables;
use crate::palindromes::PalsArray;
use crate::sagp::{PivotType, Sagp};
use crate::text::Text;
use crate::INF;

/// `FindR[t] = min { r >= t : T[l] = T[r] for some l < r }`, `INF` if none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FindRTable {
    findr: Vec<usize>,
}

impl FindRTable {
    pub fn from_values(findr: Vec<usize>) -> Self {
        FindRTable { findr }
    }

    #[inline]
    pub fn get(&self, t: usize) -> usize {
        self.findr[t - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.findr
    }

    /// `findR(t, i)`: the table value when it is `< i`, otherwise `INF`.
    #[inline]
    pub fn bounded(&self, t: usize, i: usize) -> usize {
        let r = self.get(t);
        if r < i {
            r
        } else {
            INF
        }
    }
}

/// Right-to-left scan combining `min_in` (repeats whose earlier copy is at or
/// after `t`) with `min_out` (symbols whose leftmost copy is before `t`).
pub fn build_findr(text: &Text, tables: &ClassifyTables) -> FindRTable {
    let n = text.len();
    let sigma = text.rank_bound();
    let mut occ1 = vec![INF; sigma];
    let mut occ2 = vec![INF; sigma];
    let mut findr = vec![INF; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut min_in = INF;
    for i in (1..=n).rev() {
        let c = text.at(i) as usize;
        occ2[c] = occ1[c];
        occ1[c] = i;
        min_in = min_in.min(occ2[c]);
        stack.push(i);
        while let Some(&top) = stack.last() {
            if tables.lmost_at(text, top) >= i {
                stack.pop();
            } else {
                break;
            }
        }
        let min_out = stack.last().copied().unwrap_or(INF);
        findr[i - 1] = min_in.min(min_out);
    }
    FindRTable { findr }
}

pub fn find_type2(
    text: &Text,
    pals: &PalsArray,
    kinds: &[PivotType],
    tables: &ClassifyTables,
    findr: &FindRTable,
) -> Vec<Sagp> {
    let mut out = Vec::new();
    for i in 1..=text.len() {
        if kinds[i - 1] != PivotType::Type2 {
            continue;
        }
        let p = pals.radius(i);
        if p == 0 {
            continue;
        }
        let r = findr.bounded(i - p + 1, i);
        if r == INF {
            continue;
        }
        let u_len = i - r;
        let mut l = tables.lmost_at(text, r);
        // the leftmost occurrence gives the longest gap; NextPos walks towards r
        while l < r {
            out.push(Sagp::new(i, 1, r - l, u_len, PivotType::Type2));
            l = tables.nextpos(l);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{build_tables, classify_pivots};
    use crate::oracle::{brute_force_findr, brute_force_sagps};
    use crate::palindromes::compute_pals;
    use proptest::prelude::*;

    fn run(s: &[u8]) -> (Text, Vec<PivotType>, Vec<Sagp>) {
        let t = Text::from_bytes(s);
        let pals = compute_pals(&t);
        let tab = build_tables(&t);
        let kinds = classify_pivots(&t, &pals, &tab);
        let f = build_findr(&t, &tab);
        let out = find_type2(&t, &pals, &kinds, &tab, &f);
        (t, kinds, out)
    }

    fn at_pivot(out: &[Sagp], i: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut v: Vec<_> = out.iter().filter(|s| s.pivot == i).map(Sagp::quad).collect();
        v.sort();
        v
    }

    #[test]
    fn appendix_findr() {
        let t = Text::from_bytes(b"dbbaacbcbad");
        let f = build_findr(&t, &build_tables(&t));
        assert_eq!(f.values(), &[3, 3, 3, 5, 5, 7, 7, 8, 9, 10, 11]);
    }

    #[test]
    fn distinct_symbols_have_no_findr() {
        let t = Text::from_bytes(b"abcdefg");
        let f = build_findr(&t, &build_tables(&t));
        assert!(f.values().iter().all(|&v| v == INF));
    }

    #[test]
    fn worked_examples() {
        let (_, _, out) = run(b"baaabaabaacbaabaabac");
        assert!(at_pivot(&out, 6).contains(&(6, 1, 1, 3)));

        let (_, _, out) = run(b"ccabcabbace");
        assert_eq!(at_pivot(&out, 7), vec![(7, 1, 3, 2), (7, 1, 4, 2)]);

        let (_, _, out) = run(b"aaaaa");
        assert_eq!(at_pivot(&out, 3), vec![(3, 1, 1, 1)]);
    }

    #[test]
    fn first_emitted_gap_is_the_longest() {
        let (_, _, out) = run(b"abacabadabacabaeabacaba");
        let mut i = 0;
        while i < out.len() {
            let p = out[i].pivot;
            let first = out[i].gap_len;
            while i < out.len() && out[i].pivot == p {
                assert!(out[i].gap_len <= first);
                i += 1;
            }
        }
    }

    proptest! {
        #[test]
        fn findr_matches_definition(s in proptest::collection::vec(0u8..5, 0..200)) {
            let t = Text::from_bytes(&s);
            prop_assert_eq!(build_findr(&t, &build_tables(&t)), brute_force_findr(&t).unwrap());
        }

        #[test]
        fn type2_matches_oracle(s in proptest::collection::vec(0u8..3, 0..48)) {
            let (t, kinds, out) = run(&s);
            let pals = compute_pals(&t);
            for x in &out {
                prop_assert_eq!(x.w_len, 1);
                prop_assert!(x.u_len < pals.radius(x.pivot));
            }
            let oracle = brute_force_sagps(&t).unwrap();
            let mut want: Vec<_> = oracle
                .sagps()
                .filter(|s| s.kind == PivotType::Type2)
                .map(Sagp::quad)
                .collect();
            want.sort();
            let mut got: Vec<_> = if t.len() < 5 { vec![] } else { out.iter().map(Sagp::quad).collect() };
            got.sort();
            prop_assert_eq!(got, want);
            if t.len() >= 5 {
                for (i, k) in kinds.iter().enumerate() {
                    prop_assert_eq!(*k, oracle.entry(i + 1).unwrap().kind);
                }
            }
        }
    }
}
