//! van Emde Boas tree over a power-of-two universe.
//!
//! The minimum of every inner node is kept out of its clusters, so each
//! operation recurses into at most one child of size `sqrt(U)`. Nodes of
//! universe 2 are plain bit flags. Clusters are allocated on first insert.

use super::{check_universe, PredSucc};
use crate::error::Result;

#[derive(Debug, Clone)]
enum Node {
    /// Universe {0, 1}; bit `k` set iff `k` is present.
    Leaf(u8),
    Inner(Box<Inner>),
}

#[derive(Debug, Clone)]
struct Inner {
    low_bits: u32,
    min: Option<u64>,
    max: Option<u64>,
    summary: Node,
    clusters: Vec<Option<Node>>,
}

impl Node {
    fn new(bits: u32) -> Node {
        if bits <= 1 {
            return Node::Leaf(0);
        }
        let high_bits = bits / 2;
        let low_bits = bits - high_bits;
        Node::Inner(Box::new(Inner {
            low_bits,
            min: None,
            max: None,
            summary: Node::new(high_bits),
            clusters: vec![None; 1 << high_bits],
        }))
    }

    fn min(&self) -> Option<u64> {
        match self {
            Node::Leaf(f) => match f {
                0 => None,
                f if f & 1 == 1 => Some(0),
                _ => Some(1),
            },
            Node::Inner(n) => n.min,
        }
    }

    fn max(&self) -> Option<u64> {
        match self {
            Node::Leaf(f) => match f {
                0 => None,
                f if f & 2 == 2 => Some(1),
                _ => Some(0),
            },
            Node::Inner(n) => n.max,
        }
    }

    fn insert(&mut self, x: u64) -> bool {
        match self {
            Node::Leaf(f) => {
                let bit = 1u8 << x;
                let added = *f & bit == 0;
                *f |= bit;
                added
            }
            Node::Inner(n) => n.insert(x),
        }
    }

    fn successor(&self, x: u64) -> Option<u64> {
        match self {
            Node::Leaf(f) => (x == 0 && f & 2 == 2).then_some(1),
            Node::Inner(n) => n.successor(x),
        }
    }

    fn predecessor(&self, x: u64) -> Option<u64> {
        match self {
            Node::Leaf(f) => (x == 1 && f & 1 == 1).then_some(0),
            Node::Inner(n) => n.predecessor(x),
        }
    }

    fn count_nodes(&self) -> usize {
        match self {
            Node::Leaf(_) => 1,
            Node::Inner(n) => {
                1 + n.summary.count_nodes()
                    + n.clusters
                        .iter()
                        .flatten()
                        .map(Node::count_nodes)
                        .sum::<usize>()
            }
        }
    }
}

impl Inner {
    #[inline]
    fn high(&self, x: u64) -> usize {
        (x >> self.low_bits) as usize
    }

    #[inline]
    fn low(&self, x: u64) -> u64 {
        x & ((1 << self.low_bits) - 1)
    }

    #[inline]
    fn join(&self, high: usize, low: u64) -> u64 {
        ((high as u64) << self.low_bits) | low
    }

    fn insert(&mut self, mut x: u64) -> bool {
        let Some(min) = self.min else {
            self.min = Some(x);
            self.max = Some(x);
            return true;
        };
        if x == min {
            return false;
        }
        if x < min {
            self.min = Some(x);
            x = min;
        }
        let (h, l) = (self.high(x), self.low(x));
        let low_bits = self.low_bits;
        let cluster = self.clusters[h].get_or_insert_with(|| Node::new(low_bits));
        if cluster.min().is_none() {
            self.summary.insert(h as u64);
        }
        let added = cluster.insert(l);
        if self.max.is_none_or(|m| x > m) {
            self.max = Some(x);
        }
        added
    }

    fn successor(&self, x: u64) -> Option<u64> {
        let min = self.min?;
        if x < min {
            return Some(min);
        }
        let (h, l) = (self.high(x), self.low(x));
        if let Some(c) = &self.clusters[h] {
            if c.max().is_some_and(|m| l < m) {
                return c.successor(l).map(|s| self.join(h, s));
            }
        }
        let next = self.summary.successor(h as u64)? as usize;
        let c = self.clusters[next].as_ref().expect("summary lists allocated clusters");
        c.min().map(|m| self.join(next, m))
    }

    fn predecessor(&self, x: u64) -> Option<u64> {
        let max = self.max?;
        if x > max {
            return Some(max);
        }
        let (h, l) = (self.high(x), self.low(x));
        if let Some(c) = &self.clusters[h] {
            if c.min().is_some_and(|m| l > m) {
                return c.predecessor(l).map(|p| self.join(h, p));
            }
        }
        match self.summary.predecessor(h as u64) {
            Some(prev) => {
                let prev = prev as usize;
                let c = self.clusters[prev].as_ref().expect("summary lists allocated clusters");
                c.max().map(|m| self.join(prev, m))
            }
            None => self.min.filter(|&m| x > m),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VebTree {
    universe: usize,
    len: usize,
    root: Node,
}

impl VebTree {
    /// Allocated nodes, summaries included; grows with the universe, not the set.
    pub fn node_count(&self) -> usize {
        self.root.count_nodes()
    }
}

impl PredSucc for VebTree {
    fn with_universe(universe: usize) -> Self {
        // keys 0..=universe, rounded up to a power of two, at least 2
        let bits = (universe + 1).next_power_of_two().trailing_zeros().max(1);
        VebTree {
            universe,
            len: 0,
            root: Node::new(bits),
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
        let added = self.root.insert(x as u64);
        self.len += usize::from(added);
        Ok(added)
    }

    fn predecessor(&self, x: usize) -> Result<Option<usize>> {
        check_universe(x, self.universe)?;
        Ok(self.root.predecessor(x as u64).map(|v| v as usize))
    }

    fn successor(&self, x: usize) -> Result<Option<usize>> {
        check_universe(x, self.universe)?;
        Ok(self.root.successor(x as u64).map(|v| v as usize))
    }
}
