//! The quadruple representation of a gapped palindrome and per-pivot reports.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::text::Text;

/// Shortest possible `w g u rev(u) rev(w)`.
pub const MIN_SAGP_LEN: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PivotType {
    /// `u rev(u)` of every canonical longest SAGP is the maximal palindrome at the pivot.
    Type1,
    Type2,
}

impl PivotType {
    pub fn code(self) -> u8 {
        match self {
            PivotType::Type1 => 1,
            PivotType::Type2 => 2,
        }
    }
}

impl fmt::Display for PivotType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// `w g u rev(u) rev(w)` with pivot `i` = the last position of `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sagp {
    pub pivot: usize,
    pub w_len: usize,
    pub gap_len: usize,
    pub u_len: usize,
    pub kind: PivotType,
}

impl Sagp {
    pub fn new(pivot: usize, w_len: usize, gap_len: usize, u_len: usize, kind: PivotType) -> Self {
        Sagp {
            pivot,
            w_len,
            gap_len,
            u_len,
            kind,
        }
    }

    pub fn quad(&self) -> (usize, usize, usize, usize) {
        (self.pivot, self.w_len, self.gap_len, self.u_len)
    }

    pub fn arm_len(&self) -> usize {
        self.w_len + self.u_len
    }

    /// First position of `w`; may be non-positive for malformed quadruples.
    pub fn start(&self) -> isize {
        self.pivot as isize - (self.u_len + self.gap_len + self.w_len) as isize + 1
    }

    /// Last position of `rev(w)`.
    pub fn end(&self) -> usize {
        self.pivot + self.u_len + self.w_len
    }
}

impl PartialOrd for Sagp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Sagp {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_order(self, other).then(self.kind.cmp(&other.kind))
    }
}

/// Output order shared by every backend: pivot, then gap, then `|w|`, then `|u|`.
pub fn canonical_order(a: &Sagp, b: &Sagp) -> Ordering {
    (a.pivot, a.gap_len, a.w_len, a.u_len).cmp(&(b.pivot, b.gap_len, b.w_len, b.u_len))
}

/// Whether the quadruple describes an occurrence of `w g u rev(u) rev(w)` in `text`.
pub fn validate_sagp(text: &Text, s: &Sagp) -> bool {
    let n = text.len();
    if s.w_len == 0 || s.gap_len == 0 || s.u_len == 0 || s.pivot == 0 || s.pivot > n {
        return false;
    }
    let start = s.start();
    if start < 1 || s.end() > n {
        return false;
    }
    let start = start as usize;
    let i = s.pivot;
    let inner = (1..=s.u_len).all(|j| text.at(i - j + 1) == text.at(i + j));
    // w = T[start .. start + |w| - 1], rev(w) = T[i + |u| + 1 .. i + |u| + |w|]
    let outer = (0..s.w_len).all(|j| text.at(start + j) == text.at(i + s.u_len + s.w_len - j));
    inner && outer
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PivotEntry {
    pub kind: PivotType,
    /// Sorted by [`canonical_order`]; all share `w_len` and `u_len`.
    pub sagps: Vec<Sagp>,
}

/// Canonical longest SAGPs for every pivot of a string.
///
/// Strings shorter than [`MIN_SAGP_LEN`] give a report with no entries;
/// otherwise there is one entry per pivot `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SagpReport {
    n: usize,
    entries: Vec<PivotEntry>,
}

impl SagpReport {
    /// Groups `sagps` under the given pivot classification (`kinds[i - 1]` for pivot `i`).
    pub fn assemble(n: usize, kinds: &[PivotType], mut sagps: Vec<Sagp>) -> Self {
        if n < MIN_SAGP_LEN {
            return SagpReport {
                n,
                entries: Vec::new(),
            };
        }
        assert_eq!(kinds.len(), n, "one kind per pivot");
        sagps.sort_unstable_by(canonical_order);
        let mut entries: Vec<PivotEntry> = kinds
            .iter()
            .map(|&kind| PivotEntry {
                kind,
                sagps: Vec::new(),
            })
            .collect();
        for s in sagps {
            entries[s.pivot - 1].sagps.push(s);
        }
        SagpReport { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[PivotEntry] {
        &self.entries
    }

    pub fn entry(&self, pivot: usize) -> Option<&PivotEntry> {
        pivot.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    pub fn sagps(&self) -> impl Iterator<Item = &Sagp> {
        self.entries.iter().flat_map(|e| e.sagps.iter())
    }

    pub fn occ1(&self) -> usize {
        self.count(PivotType::Type1)
    }

    pub fn occ2(&self) -> usize {
        self.count(PivotType::Type2)
    }

    fn count(&self, kind: PivotType) -> usize {
        self.entries
            .iter()
            .filter(|e| e.kind == kind)
            .map(|e| e.sagps.len())
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(pivot: usize, w: usize, g: usize, u: usize) -> Sagp {
        Sagp::new(pivot, w, g, u, PivotType::Type1)
    }

    #[test]
    fn validate_examples() {
        let t = Text::from_bytes(b"baaabaabaacbaabaabac");
        assert!(validate_sagp(&t, &q(13, 4, 4, 2)));
        assert!(validate_sagp(&t, &q(13, 4, 1, 2)));
        assert!(validate_sagp(&t, &q(6, 1, 1, 3)));
        let t = Text::from_bytes(b"ccabcabbace");
        assert!(validate_sagp(&t, &q(7, 2, 3, 1)));
        assert!(validate_sagp(&t, &q(7, 1, 3, 2)));
        let t = Text::from_bytes(b"abcd");
        assert!(!validate_sagp(&t, &q(2, 1, 1, 1)));
    }

    #[test]
    fn validate_rejects_out_of_bounds_without_panicking() {
        let t = Text::from_bytes(b"aabaa");
        assert!(!validate_sagp(&t, &q(0, 1, 1, 1)));
        assert!(!validate_sagp(&t, &q(3, 1, 5, 1)));
        assert!(!validate_sagp(&t, &q(3, 9, 1, 1)));
        assert!(!validate_sagp(&t, &q(9, 1, 1, 1)));
        assert!(!validate_sagp(&t, &q(3, 1, 0, 1)));
        assert!(!validate_sagp(&Text::from_bytes(b""), &q(1, 1, 1, 1)));
    }

    #[test]
    fn canonical_order_examples() {
        assert_eq!(canonical_order(&q(13, 4, 1, 2), &q(13, 4, 4, 2)), Ordering::Less);
        assert_eq!(canonical_order(&q(6, 1, 1, 3), &q(13, 4, 1, 2)), Ordering::Less);
        assert_eq!(canonical_order(&q(7, 2, 3, 2), &q(7, 2, 3, 2)), Ordering::Equal);
    }

    #[test]
    fn short_strings_give_empty_reports() {
        let r = SagpReport::assemble(4, &[PivotType::Type2; 4], vec![]);
        assert!(r.entries().is_empty());
        assert_eq!(r.occ1() + r.occ2(), 0);
    }

    #[test]
    fn assemble_groups_and_counts() {
        let mut kinds = vec![PivotType::Type2; 6];
        kinds[2] = PivotType::Type1;
        let r = SagpReport::assemble(
            6,
            &kinds,
            vec![q(3, 1, 2, 1), q(3, 1, 1, 1), Sagp::new(5, 1, 1, 1, PivotType::Type2)],
        );
        assert_eq!(r.occ1(), 2);
        assert_eq!(r.occ2(), 1);
        assert_eq!(r.entry(3).unwrap().sagps[0].gap_len, 1);
        assert!(r.entry(0).is_none());
        assert!(r.entry(7).is_none());
    }
}
