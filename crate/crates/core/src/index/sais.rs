//! Suffix array by induced sorting over an integer alphabet.
//!
//! Input must end with a unique `0`; the returned array is 0-based.

const EMPTY: u32 = u32::MAX;

/// `k` is an exclusive bound on the symbol values.
pub(crate) fn sais(s: &[u32], k: usize) -> Vec<u32> {
    let n = s.len();
    let mut sa = vec![EMPTY; n];
    if n == 0 {
        return sa;
    }
    if n == 1 {
        sa[0] = 0;
        return sa;
    }

    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];
    // symbol and type in one word: induction then reads one cell per step
    let tagged: Vec<u32> = s.iter().zip(&stype).map(|(&c, &t)| (c << 1) | u32::from(t)).collect();

    let mut heads = vec![0u32; k + 1];
    for &c in s {
        heads[c as usize + 1] += 1;
    }
    for c in 1..=k {
        heads[c] += heads[c - 1];
    }
    // bucket of c spans heads[c] .. heads[c + 1]
    let buckets = heads;

    let mut tails = buckets[1..].to_vec();
    for i in 1..n {
        if is_lms(i) {
            let c = s[i] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = i as u32;
        }
    }
    induce(&tagged, &buckets, &mut sa);

    // sorted LMS positions to the front
    let mut m = 0;
    for i in 0..n {
        let p = sa[i] as usize;
        if is_lms(p) {
            sa[m] = p as u32;
            m += 1;
        }
    }
    sa[m..].fill(EMPTY);

    let same_substring = |a: usize, b: usize| -> bool {
        let mut d = 0;
        loop {
            if s[a + d] != s[b + d] || stype[a + d] != stype[b + d] {
                return false;
            }
            if d > 0 && (is_lms(a + d) || is_lms(b + d)) {
                return is_lms(a + d) && is_lms(b + d);
            }
            d += 1;
        }
    };

    let mut names = 0u32;
    let mut prev: Option<usize> = None;
    for i in 0..m {
        let p = sa[i] as usize;
        if prev.is_none_or(|q| !same_substring(q, p)) {
            names += 1;
            prev = Some(p);
        }
        sa[m + p / 2] = names - 1;
    }
    let mut j = n;
    for i in (m..n).rev() {
        if sa[i] != EMPTY {
            j -= 1;
            sa[j] = sa[i];
        }
    }

    let reduced: Vec<u32> = sa[n - m..].to_vec();
    let reduced_sa = if (names as usize) < m {
        sais(&reduced, names as usize)
    } else {
        let mut r = vec![0u32; m];
        for (i, &c) in reduced.iter().enumerate() {
            r[c as usize] = i as u32;
        }
        r
    };

    let lms_positions: Vec<u32> = (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
    sa.fill(EMPTY);
    let mut tails = buckets[1..].to_vec();
    for &r in reduced_sa.iter().rev() {
        let p = lms_positions[r as usize];
        let c = s[p as usize] as usize;
        tails[c] -= 1;
        sa[tails[c] as usize] = p;
    }
    induce(&tagged, &buckets, &mut sa);
    sa
}

fn induce(tagged: &[u32], buckets: &[u32], sa: &mut [u32]) {
    let n = tagged.len();
    let mut heads = buckets[..buckets.len() - 1].to_vec();
    for i in 0..n {
        let p = sa[i];
        if p != EMPTY && p > 0 {
            let x = tagged[p as usize - 1];
            if x & 1 == 0 {
                let c = (x >> 1) as usize;
                sa[heads[c] as usize] = p - 1;
                heads[c] += 1;
            }
        }
    }
    let mut tails = buckets[1..].to_vec();
    for i in (0..n).rev() {
        let p = sa[i];
        if p != EMPTY && p > 0 {
            let x = tagged[p as usize - 1];
            if x & 1 == 1 {
                let c = (x >> 1) as usize;
                tails[c] -= 1;
                sa[tails[c] as usize] = p - 1;
            }
        }
    }
}
