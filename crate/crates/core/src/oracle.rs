//! Brute-force reference implementations.
//!
//! Nothing here reuses fast-path code: palindromes, arm extensions and
//! `FindR` are all evaluated straight from their definitions by direct
//! symbol comparison.

use crate::error::{Result, SagpError};
use crate::palindromes::PalsArray;
use crate::sagp::{validate_sagp, PivotType, Sagp, SagpReport};
use crate::text::Text;
use crate::type2::FindRTable;
use crate::INF;

pub const DEFAULT_ORACLE_BOUND: usize = 2000;

fn guard(text: &Text, bound: usize) -> Result<()> {
    if text.len() > bound {
        return Err(SagpError::OracleBound {
            len: text.len(),
            bound,
        });
    }
    Ok(())
}

/// `(arm, |u|, [(|w|, |g|)])` of the best candidates so far.
type Best = (usize, usize, Vec<(usize, usize)>);

pub fn brute_force_sagps(text: &Text) -> Result<SagpReport> {
    brute_force_sagps_bounded(text, DEFAULT_ORACLE_BOUND)
}

/// Enumerates every `(i, |w|, |g|, |u|)` and keeps, per pivot, the longest
/// arms and among those the longest `u`.
pub fn brute_force_sagps_bounded(text: &Text, bound: usize) -> Result<SagpReport> {
    guard(text, bound)?;
    let n = text.len();
    let t = |i: usize| text.at(i);
    let mut kinds = Vec::with_capacity(n);
    let mut out = Vec::new();

    for i in 1..=n {
        let mut max_u = 0;
        while max_u < i && i + max_u < n && t(i - max_u) == t(i + max_u + 1) {
            max_u += 1;
        }

        let mut best: Option<Best> = None;
        let mut has_full_u = false;
        for u in 1..=max_u {
            // w ends at e = i - u - g >= 1
            for g in 1..(i - u) {
                let e = i - u - g;
                let mut w = 0;
                while w < e && i + u + w < n && t(e - w) == t(i + u + w + 1) {
                    w += 1;
                }
                if w == 0 {
                    continue;
                }
                if u == max_u {
                    has_full_u = true;
                }
                let key = (w + u, u);
                match &mut best {
                    Some((arm, bu, list)) if (*arm, *bu) == key => list.push((w, g)),
                    Some((arm, bu, _)) if (*arm, *bu) > key => {}
                    _ => best = Some((key.0, key.1, vec![(w, g)])),
                }
            }
        }

        let kind = if has_full_u {
            PivotType::Type1
        } else {
            PivotType::Type2
        };
        kinds.push(kind);
        if let Some((_, u, list)) = best {
            for (w, g) in list {
                let s = Sagp::new(i, w, g, u, kind);
                debug_assert!(validate_sagp(text, &s));
                out.push(s);
            }
        }
    }
    Ok(SagpReport::assemble(n, &kinds, out))
}

/// Maximal even radius at every left-center by expanding from scratch.
pub fn brute_force_pals(text: &Text) -> Result<PalsArray> {
    guard(text, DEFAULT_ORACLE_BOUND)?;
    let n = text.len();
    let radii = (1..=n)
        .map(|i| {
            let mut r = 0;
            while r < i && i + r < n && text.at(i - r) == text.at(i + r + 1) {
                r += 1;
            }
            r
        })
        .collect();
    Ok(PalsArray::from_radii(radii))
}

/// `FindR[t] = min { r >= t : T[l] = T[r] for some l < r }` by double loop.
pub fn brute_force_findr(text: &Text) -> Result<FindRTable> {
    guard(text, DEFAULT_ORACLE_BOUND)?;
    let n = text.len();
    let repeats: Vec<bool> = (1..=n)
        .map(|r| (1..r).any(|l| text.at(l) == text.at(r)))
        .collect();
    let findr = (1..=n)
        .map(|t| (t..=n).find(|&r| repeats[r - 1]).unwrap_or(INF))
        .collect();
    Ok(FindRTable::from_values(findr))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quads(r: &SagpReport, pivot: usize) -> Vec<(usize, usize, usize, usize)> {
        r.entry(pivot).unwrap().sagps.iter().map(Sagp::quad).collect()
    }

    #[test]
    fn worked_example_pivots() {
        let t = Text::from_bytes(b"baaabaabaacbaabaabac");
        let r = brute_force_sagps(&t).unwrap();
        assert_eq!(r.entry(13).unwrap().kind, PivotType::Type1);
        assert_eq!(quads(&r, 13), vec![(13, 4, 1, 2), (13, 4, 4, 2)]);
        assert_eq!(r.entry(6).unwrap().kind, PivotType::Type2);
        assert!(quads(&r, 6).contains(&(6, 1, 1, 3)));
    }

    #[test]
    fn canonical_beats_longest_noncanonical() {
        let t = Text::from_bytes(b"ccabcabbace");
        let r = brute_force_sagps(&t).unwrap();
        let e = r.entry(7).unwrap();
        assert!(e.sagps.iter().all(|s| s.u_len == 2 && s.w_len == 1));
        assert_eq!(quads(&r, 7), vec![(7, 1, 3, 2), (7, 1, 4, 2)]);
    }

    #[test]
    fn no_sagps_in_distinct_string() {
        let r = brute_force_sagps(&Text::from_bytes(b"abcd")).unwrap();
        assert_eq!(r.sagps().count(), 0);
        let r = brute_force_sagps(&Text::from_bytes(b"abcdefg")).unwrap();
        assert_eq!(r.sagps().count(), 0);
    }

    #[test]
    fn unary_string() {
        let r = brute_force_sagps(&Text::from_bytes(b"aaaaa")).unwrap();
        assert_eq!(r.entry(3).unwrap().kind, PivotType::Type2);
        assert_eq!(quads(&r, 3), vec![(3, 1, 1, 1)]);
    }

    #[test]
    fn findr_table() {
        let f = brute_force_findr(&Text::from_bytes(b"dbbaacbcbad")).unwrap();
        assert_eq!(f.values(), &[3, 3, 3, 5, 5, 7, 7, 8, 9, 10, 11]);
        let f = brute_force_findr(&Text::from_bytes(b"abcd")).unwrap();
        assert!(f.values().iter().all(|&v| v == INF));
    }

    #[test]
    fn pals_by_expansion() {
        let p = brute_force_pals(&Text::from_bytes(b"abcd")).unwrap();
        assert!(p.radii().iter().all(|&r| r == 0));
        let p = brute_force_pals(&Text::from_bytes(b"acacabaabca")).unwrap();
        assert_eq!(p.radius(7), 2);
    }

    #[test]
    fn bound_is_enforced() {
        let t = Text::from_bytes(&[b'a'; 30]);
        assert!(matches!(
            brute_force_sagps_bounded(&t, 10),
            Err(SagpError::OracleBound { len: 30, bound: 10 })
        ));
    }
}
