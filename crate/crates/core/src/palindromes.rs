//! Maximal even palindromes and their begin-position buckets.

use crate::text::Text;

/// `radius(i)` is the radius of the maximal even palindrome `T[i-r+1 .. i+r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalsArray {
    radii: Vec<usize>,
}

impl PalsArray {
    pub fn from_radii(radii: Vec<usize>) -> Self {
        PalsArray { radii }
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    #[inline]
    pub fn radius(&self, i: usize) -> usize {
        self.radii[i - 1]
    }

    pub fn radii(&self) -> &[usize] {
        &self.radii
    }
}

/// Even-center Manacher: each expansion either reuses a mirrored radius or
/// pushes the rightmost palindrome boundary further, so the total work is O(n).
pub fn compute_pals(text: &Text) -> PalsArray {
    let s = text.ranks();
    let n = s.len();
    // d[c]: radius of the even palindrome whose right half starts at 0-based c
    let mut d = vec![0usize; n];
    let (mut lo, mut hi) = (0usize, 0usize); // rightmost palindrome s[lo..hi]
    for c in 1..n {
        let mut k = if c < hi {
            d[lo + hi - c].min(hi - c)
        } else {
            0
        };
        while c + k < n && k < c && s[c + k] == s[c - k - 1] {
            k += 1;
        }
        d[c] = k;
        if c + k > hi {
            lo = c - k;
            hi = c + k;
        }
    }
    // left-center i (1-based) has its right half starting at 0-based i
    let mut radii = vec![0; n];
    radii[..n.saturating_sub(1)].copy_from_slice(&d[1.min(n)..]);
    PalsArray { radii }
}

/// Maximal even palindromes grouped by begin position, stored as CSR.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalBuckets {
    offsets: Vec<usize>,
    radii: Vec<usize>,
}

impl PalBuckets {
    /// Radii of maximal palindromes beginning at 1-based position `b`.
    pub fn bucket(&self, b: usize) -> &[usize] {
        &self.radii[self.offsets[b - 1]..self.offsets[b]]
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn total(&self) -> usize {
        self.radii.len()
    }
}

pub fn compute_buckets(pals: &PalsArray) -> PalBuckets {
    let n = pals.len();
    let mut offsets = vec![0usize; n + 1];
    for i in 1..=n {
        let r = pals.radius(i);
        if r > 0 {
            offsets[i - r + 1] += 1;
        }
    }
    for b in 1..=n {
        offsets[b] += offsets[b - 1];
    }
    let mut fill = offsets.clone();
    let mut radii = vec![0; offsets[n]];
    for i in 1..=n {
        let r = pals.radius(i);
        if r > 0 {
            let b = i - r + 1;
            radii[fill[b - 1]] = r;
            fill[b - 1] += 1;
        }
    }
    PalBuckets { offsets, radii }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_pals;
    use proptest::prelude::*;

    #[test]
    fn worked_examples() {
        let p = compute_pals(&Text::from_bytes(b"acacabaabca"));
        assert_eq!(p.radius(7), 2);
        assert_eq!(p.radius(11), 0);
        let p = compute_pals(&Text::from_bytes(b"baaabaabaacbaabaabac"));
        assert_eq!(p.radius(13), 2);
        assert_eq!(p.radius(6), 4);
        let p = compute_pals(&Text::from_bytes(b"abcd"));
        assert_eq!(p.radii(), &[0, 0, 0, 0]);
        assert!(compute_pals(&Text::from_bytes(b"")).is_empty());
        assert_eq!(compute_pals(&Text::from_bytes(b"a")).radii(), &[0]);
        assert_eq!(compute_pals(&Text::from_bytes(b"aaaa")).radii(), &[1, 2, 1, 0]);
    }

    #[test]
    fn buckets_example() {
        let p = compute_pals(&Text::from_bytes(b"acacabaabca"));
        let u = compute_buckets(&p);
        for b in 1..=11 {
            if b == 6 {
                assert_eq!(u.bucket(b), &[2]);
            } else {
                assert!(u.bucket(b).is_empty(), "bucket {b}");
            }
        }
        let u = compute_buckets(&PalsArray::from_radii(vec![0; 5]));
        assert_eq!(u.total(), 0);
    }

    #[test]
    fn exhaustive_small_ternary() {
        for n in 0..=9u32 {
            for code in 0..3usize.pow(n) {
                let mut c = code;
                let s: Vec<u8> = (0..n)
                    .map(|_| {
                        let x = b'a' + (c % 3) as u8;
                        c /= 3;
                        x
                    })
                    .collect();
                let t = Text::from_bytes(&s);
                assert_eq!(compute_pals(&t), brute_force_pals(&t).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn matches_expansion(s in proptest::collection::vec(0u8..3, 0..300)) {
            let t = Text::from_bytes(&s);
            prop_assert_eq!(compute_pals(&t), brute_force_pals(&t).unwrap());
        }

        #[test]
        fn buckets_are_lossless(s in proptest::collection::vec(0u8..2, 0..200)) {
            let t = Text::from_bytes(&s);
            let p = compute_pals(&t);
            let u = compute_buckets(&p);
            let mut rebuilt = vec![0; p.len()];
            for b in 1..=u.len() {
                for &r in u.bucket(b) {
                    prop_assert_eq!(p.radius(b + r - 1), r);
                    rebuilt[b + r - 2] = r;
                }
            }
            prop_assert_eq!(rebuilt.as_slice(), p.radii());
            prop_assert_eq!(u.total(), p.radii().iter().filter(|&&r| r > 0).count());
        }
    }
}
