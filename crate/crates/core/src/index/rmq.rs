//! Range-minimum queries in O(1) time and O(n) words.
//!
//! The array is cut into blocks of 64. Inside a block, `masks[i]` records the
//! monotone stack of candidate minima for ranges ending at `i`, one bit per
//! in-block offset; the minimum of `[lo, i]` is the lowest stack bit at or
//! above `lo`. A sparse table over block minima covers whole blocks.
//! Ties resolve to the leftmost position.

const B: usize = 64;

#[derive(Debug, Clone)]
pub struct RmqTable<T> {
    values: Vec<T>,
    masks: Vec<u64>,
    // levels[j][k] = argmin over blocks k .. k + 2^j
    levels: Vec<Vec<u32>>,
}

impl<T: Copy + Ord> RmqTable<T> {
    pub fn new(values: &[T]) -> Self {
        let n = values.len();
        let mut masks = vec![0u64; n];
        let mut block_min = Vec::with_capacity(n.div_ceil(B));
        for start in (0..n).step_by(B) {
            let end = (start + B).min(n);
            let mut cur = 0u64;
            for i in start..end {
                while cur != 0 {
                    let top = start + 63 - cur.leading_zeros() as usize;
                    if values[top] > values[i] {
                        cur &= !(1u64 << (top - start));
                    } else {
                        break;
                    }
                }
                cur |= 1u64 << (i - start);
                masks[i] = cur;
            }
            block_min.push((start + masks[end - 1].trailing_zeros() as usize) as u32);
        }

        let blocks = block_min.len();
        let mut levels = vec![block_min];
        let mut width = 1;
        while 2 * width <= blocks {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=blocks - 2 * width)
                .map(|k| pick(values, prev[k], prev[k + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        RmqTable {
            values: values.to_vec(),
            masks,
            levels,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    #[inline]
    fn in_block(&self, lo: usize, hi: usize) -> usize {
        let start = hi - hi % B;
        let m = self.masks[hi] & (!0u64 << (lo - start));
        start + m.trailing_zeros() as usize
    }

    /// Index of a minimum of `values[lo ..= hi]`.
    #[inline]
    pub fn query(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi && hi < self.values.len());
        let (bl, bh) = (lo / B, hi / B);
        if bl == bh {
            return self.in_block(lo, hi);
        }
        let mut best = self.in_block(lo, bl * B + B - 1) as u32;
        if bl + 1 < bh {
            let (a, b) = (bl + 1, bh - 1);
            let k = (usize::BITS - 1 - (b - a + 1).leading_zeros()) as usize;
            let mid = pick(&self.values, self.levels[k][a], self.levels[k][b + 1 - (1 << k)]);
            best = pick(&self.values, best, mid);
        }
        pick(&self.values, best, self.in_block(bh * B, hi) as u32) as usize
    }

    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> T {
        self.values[self.query(lo, hi)]
    }
}

/// The left argument wins ties; callers pass the leftmost candidate first.
#[inline]
fn pick<T: Ord>(values: &[T], a: u32, b: u32) -> u32 {
    if values[b as usize] < values[a as usize] {
        b
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(v: &[i32]) {
        let t = RmqTable::new(v);
        for lo in 0..v.len() {
            for hi in lo..v.len() {
                let want = (lo..=hi).min_by_key(|&i| (v[i], i)).unwrap();
                assert_eq!(t.query(lo, hi), want, "[{lo}, {hi}]");
            }
        }
    }

    proptest! {
        #[test]
        fn every_range_matches_scan(v in proptest::collection::vec(-5i32..20, 1..80)) {
            check(&v);
        }

        #[test]
        fn spans_many_blocks(v in proptest::collection::vec(0i32..4, 100..400)) {
            check(&v);
        }
    }

    #[test]
    fn single_element() {
        let t = RmqTable::new(&[7u32]);
        assert_eq!(t.query(0, 0), 0);
        assert_eq!(t.min(0, 0), 7);
    }

    #[test]
    fn monotone_runs() {
        let up: Vec<i32> = (0..300).collect();
        let down: Vec<i32> = (0..300).rev().collect();
        check(&up);
        check(&down);
        check(&[3; 200]);
    }
}
