//! Suffix-tree backend.
//!
//! A first pass walks begin positions downwards over the suffix tree of `T'`.
//! A node is marked at `b` once its subtree holds a reversed prefix ending at
//! `e <= b - 2`; the nearest marked ancestor of the leaf `T[i+P+1..]` then has
//! string depth `|w|`. Marks only disappear as `b` decreases, so the queries
//! are answered offline with a union-find.
//!
//! A second pass walks `b` upwards and grows the suffix tree of `rev(T)#`
//! one suffix at a time; all gaps of a pivot are the leaves below one node.

use crate::error::{Result, SagpError};
use crate::index::{
    build_index, build_neighbours, neighbours_from_arrays, restrict_to_tail, Neighbours,
    SuffixArrayIndex, NO_NEIGHBOUR,
};
use crate::palindromes::PalBuckets;
use crate::sagp::{PivotType, Sagp};
use crate::suffix_tree::{SuffixTree, NONE};
use crate::text::Text;

pub const NEVER: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StreeStats {
    pub tree_nodes: u64,
    pub pivots_processed: u64,
    pub climb_steps: u64,
    pub leaves_listed: u64,
    pub outputs: u64,
}

/// Per node of the `T'` tree: the first `b` at which it is marked, and the
/// `T'` position of the reversed leaf responsible for it.
#[derive(Debug, Clone)]
pub struct MarkState {
    mark_time: Vec<u32>,
    witness: Vec<u32>,
}

impl MarkState {
    pub fn compute(tree: &SuffixTree, n: usize) -> Self {
        let nodes = tree.node_count();
        let mut mark_time = vec![NEVER; nodes];
        let mut witness = vec![NONE; nodes];
        for &v in tree.postorder() {
            if let Some(j) = tree.leaf_pos(v) {
                if j >= n + 2 && j <= 2 * n + 1 {
                    mark_time[v as usize] = (2 * n + 2 - j + 2) as u32;
                    witness[v as usize] = j as u32;
                }
            }
            if let Some(p) = tree.parent(v) {
                if mark_time[v as usize] < mark_time[p as usize] {
                    mark_time[p as usize] = mark_time[v as usize];
                    witness[p as usize] = witness[v as usize];
                }
            }
        }
        MarkState { mark_time, witness }
    }

    #[inline]
    pub fn is_marked(&self, v: u32, b: usize) -> bool {
        self.mark_time[v as usize] as usize <= b
    }

    #[inline]
    pub fn witness(&self, v: u32) -> usize {
        self.witness[v as usize] as usize
    }

    pub fn mark_times(&self) -> &[u32] {
        &self.mark_time
    }
}

/// The `T'` suffix tree cut down to what the first pass reads, with the
/// marks of [`MarkState`] folded in during construction. Node ids match
/// [`build_tree_from_index`].
#[derive(Debug, Clone)]
pub struct MarkedTree {
    parent: Vec<u32>,
    depth: Vec<u32>,
    leaf_by_rank: Vec<u32>,
    mark_time: Vec<u32>,
    witness: Vec<u32>,
}

impl MarkedTree {
    pub fn new(idx: &SuffixArrayIndex, n: usize) -> Self {
        let m = idx.len();
        let mut t = MarkedTree {
            parent: Vec::with_capacity(2 * m),
            depth: Vec::with_capacity(2 * m),
            leaf_by_rank: vec![NONE; m + 1],
            mark_time: Vec::with_capacity(2 * m),
            witness: Vec::with_capacity(2 * m),
        };
        let root = t.node(0, NEVER, NONE);
        let mut stack = vec![root];
        for r in 1..=m {
            let l = if r == 1 { 0 } else { idx.lcp(r) as u32 };
            while t.depth[*stack.last().unwrap() as usize] > l {
                let v = stack.pop().unwrap();
                let top = *stack.last().unwrap();
                if t.depth[top as usize] >= l {
                    t.attach(top, v);
                } else {
                    let u = t.node(l, NEVER, NONE);
                    t.attach(u, v);
                    stack.push(u);
                }
            }
            let pos = idx.sa(r);
            let leaf = if (n + 2..=2 * n + 1).contains(&pos) {
                t.node((m - pos + 1) as u32, (2 * n + 4 - pos) as u32, pos as u32)
            } else {
                t.node((m - pos + 1) as u32, NEVER, NONE)
            };
            t.leaf_by_rank[r] = leaf;
            stack.push(leaf);
        }
        while stack.len() > 1 {
            let v = stack.pop().unwrap();
            t.attach(*stack.last().unwrap(), v);
        }
        t
    }

    fn node(&mut self, depth: u32, mark: u32, witness: u32) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(NONE);
        self.depth.push(depth);
        self.mark_time.push(mark);
        self.witness.push(witness);
        id
    }

    // v is complete when attached, so its mark is final
    fn attach(&mut self, p: u32, v: u32) {
        let (p, v) = (p as usize, v as usize);
        self.parent[v] = p as u32;
        if self.mark_time[v] < self.mark_time[p] {
            self.mark_time[p] = self.mark_time[v];
            self.witness[p] = self.witness[v];
        }
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn depth(&self, v: u32) -> usize {
        self.depth[v as usize] as usize
    }

    #[inline]
    pub fn leaf_at_rank(&self, rank: usize) -> u32 {
        self.leaf_by_rank[rank]
    }

    #[inline]
    pub fn witness(&self, v: u32) -> usize {
        self.witness[v as usize] as usize
    }
}

/// Nearest marked ancestor by walking up; the reference for [`OfflineNma`].
pub fn nma_query_naive(tree: &SuffixTree, marks: &MarkState, leaf: u32, b: usize) -> Option<u32> {
    let mut v = leaf;
    loop {
        if marks.is_marked(v, b) {
            return Some(v);
        }
        v = tree.parent(v)?;
    }
}

/// Nearest-marked-ancestor queries for non-increasing `b`.
///
/// Each set of the union-find is a connected subtree whose root is its only
/// marked node. Unmarking `v` hangs its set below the set of its parent, so
/// the representative of a set is always its marked top.
#[derive(Debug)]
pub struct OfflineNma<'a> {
    parent: &'a [u32],
    mark_time: &'a [u32],
    dsu: Vec<u32>,
    // nodes grouped by mark time, CSR over 0..=start+1
    offsets: Vec<u32>,
    by_time: Vec<u32>,
    current: usize,
}

impl<'a> OfflineNma<'a> {
    /// Starts at `b = start`. `parent` uses [`NONE`] for the root.
    pub fn new(parent: &'a [u32], mark_time: &'a [u32], start: usize) -> Self {
        let nodes = parent.len();
        let limit = start + 1;
        let slot = |t: u32| (t as usize).min(limit);
        let mut offsets = vec![0u32; limit + 2];
        for &t in mark_time {
            offsets[slot(t) + 1] += 1;
        }
        for s in 1..offsets.len() {
            offsets[s] += offsets[s - 1];
        }
        let mut fill = offsets.clone();
        let mut by_time = vec![0u32; nodes];
        for (v, &t) in mark_time.iter().enumerate() {
            by_time[fill[slot(t)] as usize] = v as u32;
            fill[slot(t)] += 1;
        }
        let mut nma = OfflineNma {
            parent,
            mark_time,
            dsu: (0..nodes as u32).collect(),
            offsets,
            by_time,
            current: limit,
        };
        nma.advance_to(start);
        nma
    }

    fn find(&mut self, mut v: u32) -> u32 {
        let mut root = v;
        while self.dsu[root as usize] != root {
            root = self.dsu[root as usize];
        }
        while self.dsu[v as usize] != root {
            let next = self.dsu[v as usize];
            self.dsu[v as usize] = root;
            v = next;
        }
        root
    }

    /// Unmarks every node whose mark time exceeds `b`.
    pub fn advance_to(&mut self, b: usize) {
        assert!(b <= self.current, "offline queries need non-increasing b");
        for t in (b + 1..=self.current).rev() {
            for idx in self.offsets[t] as usize..self.offsets[t + 1] as usize {
                let v = self.by_time[idx] as usize;
                let p = self.parent[v];
                if p != NONE {
                    // v is still the root of its own set here
                    self.dsu[v] = p;
                }
            }
        }
        self.current = b;
    }

    pub fn query(&mut self, leaf: u32) -> Option<u32> {
        let v = self.find(leaf);
        (self.mark_time[v as usize] as usize <= self.current).then_some(v)
    }
}

/// Suffix tree of `rev(T)#` holding only the suffixes starting at `k..=n+1`,
/// grown by prepending one suffix at a time.
#[derive(Debug, Clone)]
pub struct GrowingTree {
    m: usize,
    nodes: Vec<GNode>,
    leaf_of: Vec<u32>,
    smallest: usize,
    climb_steps: u64,
}

#[derive(Debug, Clone, Copy)]
#[repr(align(32))]
struct GNode {
    parent: u32,
    depth: u32,
    first_child: u32,
    last_child: u32,
    prev_sib: u32,
    next_sib: u32,
    leaf_pos: u32,
}

/// Lexicographic neighbours of every suffix of `rev(T)#`; each new leaf
/// hangs off the path to one of them.
#[derive(Debug)]
pub struct ReverseIndex {
    neighbours: Vec<Neighbours>,
}

impl ReverseIndex {
    pub fn new(text: &Text) -> Result<Self> {
        let idx = build_index(&text.reversed_terminated())?;
        Ok(ReverseIndex {
            neighbours: build_neighbours(&idx),
        })
    }

    /// Same table read off the index of `T' = T $ rev(T) #`, whose suffixes
    /// from `n + 2` on are exactly the suffixes of `rev(T)#`.
    pub fn from_augmented(idx: &SuffixArrayIndex, n: usize) -> Self {
        let (sa, lcp) = restrict_to_tail(idx, n + 2);
        ReverseIndex {
            neighbours: neighbours_from_arrays(&sa, &lcp),
        }
    }
}

impl GrowingTree {
    /// Root plus the leaf of the lone terminal, `m = n + 1`.
    pub fn new(m: usize) -> Self {
        let mut g = GrowingTree {
            m,
            nodes: Vec::with_capacity(2 * m),
            leaf_of: vec![NONE; m + 1],
            smallest: m,
            climb_steps: 0,
        };
        let root = g.add_node(0, NONE);
        let leaf = g.add_node(1, m as u32);
        g.leaf_of[m] = leaf;
        g.link(root, leaf, NONE, NONE);
        g
    }

    pub fn root(&self) -> u32 {
        0
    }

    /// Smallest suffix start currently in the tree.
    pub fn smallest(&self) -> usize {
        self.smallest
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn climb_steps(&self) -> u64 {
        self.climb_steps
    }

    #[inline]
    fn node(&self, v: u32) -> &GNode {
        &self.nodes[v as usize]
    }

    #[inline]
    fn node_mut(&mut self, v: u32) -> &mut GNode {
        &mut self.nodes[v as usize]
    }

    fn add_node(&mut self, depth: u32, pos: u32) -> u32 {
        let id = self.nodes.len() as u32;
        self.nodes.push(GNode {
            parent: NONE,
            depth,
            first_child: NONE,
            last_child: NONE,
            prev_sib: NONE,
            next_sib: NONE,
            leaf_pos: pos,
        });
        id
    }

    /// Places `v` under `p` between siblings `before` and `after` (NONE = list end).
    fn link(&mut self, p: u32, v: u32, before: u32, after: u32) {
        let x = self.node_mut(v);
        x.parent = p;
        x.prev_sib = before;
        x.next_sib = after;
        match before {
            NONE => self.node_mut(p).first_child = v,
            b => self.node_mut(b).next_sib = v,
        }
        match after {
            NONE => self.node_mut(p).last_child = v,
            a => self.node_mut(a).prev_sib = v,
        }
    }

    /// Puts a new node of string depth `d` between `c` and its shallower parent.
    fn split_above(&mut self, c: u32, d: u32) {
        let GNode {
            parent,
            prev_sib,
            next_sib,
            ..
        } = *self.node(c);
        let u = self.add_node(d, NONE);
        self.link(parent, u, prev_sib, next_sib);
        let x = self.node_mut(u);
        x.first_child = c;
        x.last_child = c;
        let y = self.node_mut(c);
        y.parent = u;
        y.prev_sib = NONE;
        y.next_sib = NONE;
    }

    /// Prepends the suffix starting at `k = smallest() - 1`.
    pub fn insert(&mut self, k: usize, rev: &ReverseIndex) -> Result<()> {
        if k + 1 != self.smallest || k == 0 {
            return Err(SagpError::TreeState {
                expected: self.smallest.saturating_sub(1),
                actual: k,
            });
        }
        let nb = rev.neighbours[k];
        // the terminal suffix is smallest and starts after k, so a PLV always exists
        let (anchor, d, after_anchor) = if nb.right != NO_NEIGHBOUR && nb.right_lcp > nb.left_lcp {
            (self.leaf_of[nb.right as usize], nb.right_lcp, false)
        } else {
            (self.leaf_of[nb.left as usize], nb.left_lcp, true)
        };
        let mut c = anchor;
        let mut p = self.node(c).parent;
        while self.node(p).depth > d {
            c = p;
            p = self.node(c).parent;
            self.climb_steps += 1;
        }
        if self.node(p).depth < d {
            self.split_above(c, d);
            p = self.node(c).parent;
        }
        let leaf = self.add_node((self.m - k + 1) as u32, k as u32);
        self.leaf_of[k] = leaf;
        if after_anchor {
            let after = self.node(c).next_sib;
            self.link(p, leaf, c, after);
        } else {
            let before = self.node(c).prev_sib;
            self.link(p, leaf, before, c);
        }
        self.smallest = k;
        Ok(())
    }

    /// Shallowest ancestor of the leaf of `pos` with string depth at least `w`.
    pub fn locus(&self, pos: usize, w: usize) -> u32 {
        let mut c = self.leaf_of[pos];
        loop {
            let p = self.node(c).parent;
            if p == NONE || (self.node(p).depth as usize) < w {
                return c;
            }
            c = p;
        }
    }

    /// Appends the leaf positions below `v` to `out`, left to right.
    pub fn leaves_below(&self, v: u32, out: &mut Vec<usize>) {
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            let node = self.node(x);
            if node.leaf_pos != NONE {
                out.push(node.leaf_pos as usize);
                continue;
            }
            let mut c = node.last_child;
            while c != NONE {
                stack.push(c);
                c = self.node(c).prev_sib;
            }
        }
    }

    /// Same format as [`SuffixTree::preorder_signature`].
    pub fn preorder_signature(&self) -> Vec<(usize, Option<usize>, usize)> {
        let mut out = Vec::new();
        let mut stack = vec![self.root()];
        while let Some(v) = stack.pop() {
            let mut kids = Vec::new();
            let mut c = self.node(v).first_child;
            while c != NONE {
                kids.push(c);
                c = self.node(c).next_sib;
            }
            let node = self.node(v);
            out.push((
                node.depth as usize,
                (node.leaf_pos != NONE).then_some(node.leaf_pos as usize),
                kids.len(),
            ));
            stack.extend(kids.into_iter().rev());
        }
        out
    }
}

struct Pending {
    pivot: usize,
    radius: usize,
    b: usize,
    w: usize,
    // position in rev(T) of a reversed prefix reaching w
    witness: usize,
}

pub fn find_type1_stree(
    text: &Text,
    idx: &SuffixArrayIndex,
    buckets: &PalBuckets,
    kinds: &[PivotType],
) -> Result<(Vec<Sagp>, StreeStats)> {
    let n = text.len();
    let mut stats = StreeStats::default();
    let mut pending = Vec::new();
    let rev = ReverseIndex::from_augmented(idx, n);
    {
        let tree = MarkedTree::new(idx, n);
        stats.tree_nodes = tree.node_count() as u64;
        let mut nma = OfflineNma::new(&tree.parent, &tree.mark_time, n);
        for b in (1..=n).rev() {
            nma.advance_to(b);
            for &p in buckets.bucket(b) {
                let i = b + p - 1;
                if kinds[i - 1] != PivotType::Type1 {
                    continue;
                }
                stats.pivots_processed += 1;
                let Some(v) = nma.query(tree.leaf_at_rank(idx.isa(i + p + 1))) else {
                    continue;
                };
                let w = tree.depth(v);
                if w == 0 {
                    continue;
                }
                pending.push(Pending {
                    pivot: i,
                    radius: p,
                    b,
                    w,
                    witness: tree.witness(v) - (n + 1),
                });
            }
        }
    }

    let mut grow = GrowingTree::new(n + 1);
    let mut out = Vec::new();
    let mut leaves = Vec::new();
    for q in pending.iter().rev() {
        // the tree must hold every end e <= b - 2, i.e. starts k >= n - b + 3
        let need = (n + 3).saturating_sub(q.b).max(1);
        while grow.smallest() > need {
            grow.insert(grow.smallest() - 1, &rev)?;
        }
        let v = grow.locus(q.witness, q.w);
        leaves.clear();
        grow.leaves_below(v, &mut leaves);
        stats.leaves_listed += leaves.len() as u64;
        for &k in leaves.iter().filter(|&&k| k <= n) {
            let e = n - k + 1;
            out.push(Sagp::new(q.pivot, q.w, q.b - e - 1, q.radius, PivotType::Type1));
        }
    }
    stats.climb_steps = grow.climb_steps();
    stats.outputs = out.len() as u64;
    Ok((out, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{build_tables, classify_pivots};
    use crate::palindromes::{compute_buckets, compute_pals};
    use crate::suffix_tree::build_tree_from_index;
    use crate::type1::{find_type1_naive, AugmentedIndex};
    use proptest::prelude::*;

    fn check(s: &[u8]) {
        let t = Text::from_bytes(s);
        let pals = compute_pals(&t);
        let kinds = classify_pivots(&t, &pals, &build_tables(&t));
        let ai = AugmentedIndex::new(&t).unwrap();
        let mut want = find_type1_naive(&ai, &pals, &kinds);
        want.sort();
        let (mut got, st) = find_type1_stree(&t, &ai.idx, &compute_buckets(&pals), &kinds).unwrap();
        got.sort();
        assert_eq!(got, want);
        assert_eq!(st.outputs as usize, got.len());
    }

    /// Suffix tree of `rev(T)[k..n]#` built from scratch, positions shifted back.
    fn fresh_signature(t: &Text, k: usize) -> Vec<(usize, Option<usize>, usize)> {
        let full = t.reversed_terminated();
        let idx = build_index(&full[k - 1..]).unwrap();
        build_tree_from_index(&idx).preorder_signature(k - 1)
    }

    fn check_growth(s: &[u8]) {
        let t = Text::from_bytes(s);
        let rev = ReverseIndex::new(&t).unwrap();
        let aug = build_index(t.augmented().as_slice()).unwrap();
        assert_eq!(rev.neighbours, ReverseIndex::from_augmented(&aug, t.len()).neighbours);
        let m = t.len() + 1;
        let mut g = GrowingTree::new(m);
        assert_eq!(g.preorder_signature(), fresh_signature(&t, m));
        for k in (1..m).rev() {
            g.insert(k, &rev).unwrap();
            assert_eq!(g.preorder_signature(), fresh_signature(&t, k), "k = {k}");
        }
        assert!(g.insert(5, &rev).is_err());
    }

    #[test]
    fn growing_tree_examples() {
        check_growth(b"");
        check_growth(b"a");
        check_growth(b"acacabaabca");
        check_growth(b"aaaaaaa");
        check_growth(b"abababab");
    }

    #[test]
    fn backend_examples() {
        check(b"acacabaabca");
        check(b"ccabcabbace");
        check(b"aaaaaaaaaa");
        check(b"");
    }

    #[test]
    fn offline_matches_walk() {
        let t = Text::from_bytes(b"abaababaabaababaababa");
        let ai = AugmentedIndex::new(&t).unwrap();
        let tree = build_tree_from_index(&ai.idx);
        let marks = MarkState::compute(&tree, t.len());
        let mut nma = OfflineNma::new(tree.parents(), marks.mark_times(), t.len());
        for b in (1..=t.len()).rev() {
            nma.advance_to(b);
            for r in 1..=ai.idx.len() {
                let leaf = tree.leaf_at_rank(r);
                assert_eq!(nma.query(leaf), nma_query_naive(&tree, &marks, leaf, b));
            }
        }
    }

    fn check_marked_tree(s: &[u8]) {
        let t = Text::from_bytes(s);
        let idx = build_index(t.augmented().as_slice()).unwrap();
        let full = build_tree_from_index(&idx);
        let marks = MarkState::compute(&full, t.len());
        let lean = MarkedTree::new(&idx, t.len());
        assert_eq!(lean.parent, full.parents());
        assert_eq!(lean.mark_time, marks.mark_times());
        for v in 0..full.node_count() as u32 {
            assert_eq!(lean.depth(v), full.depth(v));
            if marks.mark_times()[v as usize] != NEVER {
                assert_eq!(lean.witness(v), marks.witness(v));
            }
        }
        for r in 1..=idx.len() {
            assert_eq!(lean.leaf_at_rank(r), full.leaf_at_rank(r));
        }
    }

    proptest! {
        #[test]
        fn marked_tree_matches_full_tree(s in proptest::collection::vec(b'a'..b'd', 0..60)) {
            check_marked_tree(&s);
        }

        #[test]
        fn agrees_with_naive(s in proptest::collection::vec(b'a'..b'd', 0..80)) {
            check(&s);
        }

        #[test]
        fn growth_is_isomorphic(s in proptest::collection::vec(b'a'..b'c', 0..30)) {
            check_growth(&s);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn growth_is_isomorphic_long(s in proptest::collection::vec(b'a'..b'e', 150..=200)) {
            check_growth(&s);
        }
    }
}
