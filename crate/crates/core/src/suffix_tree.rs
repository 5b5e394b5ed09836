//! Suffix trees built bottom-up from a suffix array and its LCP array, plus
//! constant-time LCA through an Euler tour.

use crate::index::{RmqTable, SuffixArrayIndex};

pub const NONE: u32 = u32::MAX;

/// Static suffix tree; node ids are dense, edges are implied by string depths.
///
/// The label of the edge into `v` is `subject[pos + depth(parent) .. pos + depth(v)]`
/// for any leaf position `pos` below `v`.
#[derive(Debug, Clone)]
pub struct SuffixTree {
    parent: Vec<u32>,
    depth: Vec<u32>,
    first_child: Vec<u32>,
    next_sibling: Vec<u32>,
    leaf_pos: Vec<u32>,
    // SA rank -> leaf node
    leaf_by_rank: Vec<u32>,
    postorder: Vec<u32>,
    root: u32,
}

/// Builds the tree in one left-to-right pass over the suffix array, keeping
/// the rightmost root-to-leaf path on a stack.
pub fn build_tree_from_index(idx: &SuffixArrayIndex) -> SuffixTree {
    let m = idx.len();
    let cap = 2 * m + 1;
    let mut t = SuffixTree {
        parent: Vec::with_capacity(cap),
        depth: Vec::with_capacity(cap),
        first_child: Vec::with_capacity(cap),
        next_sibling: Vec::with_capacity(cap),
        leaf_pos: Vec::with_capacity(cap),
        leaf_by_rank: vec![NONE; m + 1],
        postorder: Vec::with_capacity(cap),
        root: 0,
    };
    let mut last_child: Vec<u32> = Vec::with_capacity(cap);

    let new_node = |t: &mut SuffixTree, last_child: &mut Vec<u32>, depth: u32, pos: u32| {
        let id = t.parent.len() as u32;
        t.parent.push(NONE);
        t.depth.push(depth);
        t.first_child.push(NONE);
        t.next_sibling.push(NONE);
        t.leaf_pos.push(pos);
        last_child.push(NONE);
        id
    };
    let attach = |t: &mut SuffixTree, last_child: &mut [u32], p: u32, v: u32| {
        t.parent[v as usize] = p;
        match last_child[p as usize] {
            NONE => t.first_child[p as usize] = v,
            prev => t.next_sibling[prev as usize] = v,
        }
        last_child[p as usize] = v;
        t.postorder.push(v);
    };

    let root = new_node(&mut t, &mut last_child, 0, NONE);
    let mut stack = vec![root];
    for r in 1..=m {
        let l = if r == 1 { 0 } else { idx.lcp(r) as u32 };
        while t.depth[*stack.last().unwrap() as usize] > l {
            let v = stack.pop().unwrap();
            let top = *stack.last().unwrap();
            if t.depth[top as usize] >= l {
                attach(&mut t, &mut last_child, top, v);
            } else {
                let u = new_node(&mut t, &mut last_child, l, NONE);
                attach(&mut t, &mut last_child, u, v);
                stack.push(u);
            }
        }
        let pos = idx.sa(r);
        let leaf = new_node(&mut t, &mut last_child, (m - pos + 1) as u32, pos as u32);
        t.leaf_by_rank[r] = leaf;
        stack.push(leaf);
    }
    while stack.len() > 1 {
        let v = stack.pop().unwrap();
        attach(&mut t, &mut last_child, *stack.last().unwrap(), v);
    }
    t.postorder.push(root);
    t
}

impl SuffixTree {
    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn parent(&self, v: u32) -> Option<u32> {
        match self.parent[v as usize] {
            NONE => None,
            p => Some(p),
        }
    }

    /// Parent of every node, [`NONE`] for the root.
    pub fn parents(&self) -> &[u32] {
        &self.parent
    }

    #[inline]
    pub fn depth(&self, v: u32) -> usize {
        self.depth[v as usize] as usize
    }

    #[inline]
    pub fn leaf_pos(&self, v: u32) -> Option<usize> {
        match self.leaf_pos[v as usize] {
            NONE => None,
            p => Some(p as usize),
        }
    }

    /// Leaf of the suffix with SA rank `rank`.
    #[inline]
    pub fn leaf_at_rank(&self, rank: usize) -> u32 {
        self.leaf_by_rank[rank]
    }

    /// Children of `v`, left to right.
    pub fn children(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        let mut c = self.first_child[v as usize];
        std::iter::from_fn(move || {
            if c == NONE {
                return None;
            }
            let out = c;
            c = self.next_sibling[c as usize];
            Some(out)
        })
    }

    /// Every node after all of its descendants; the root is last.
    pub fn postorder(&self) -> &[u32] {
        &self.postorder
    }

    /// Leaf positions in left-to-right order.
    pub fn leaves_in_order(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            if let Some(p) = self.leaf_pos(v) {
                out.push(p);
            }
            let kids: Vec<u32> = self.children(v).collect();
            stack.extend(kids.into_iter().rev());
        }
        out
    }

    /// Preorder `(string depth, leaf position, child count)`; two trees over
    /// the same subject with equal signatures are identical, labels included.
    pub fn preorder_signature(&self, pos_offset: usize) -> Vec<(usize, Option<usize>, usize)> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            let kids: Vec<u32> = self.children(v).collect();
            out.push((
                self.depth(v),
                self.leaf_pos(v).map(|p| p + pos_offset),
                kids.len(),
            ));
            stack.extend(kids.into_iter().rev());
        }
        out
    }
}

/// LCA by range-minimum over tree depths along an Euler tour.
#[derive(Debug, Clone)]
pub struct Lca {
    euler: Vec<u32>,
    first: Vec<u32>,
    rmq: RmqTable<u32>,
}

impl Lca {
    pub fn new(tree: &SuffixTree) -> Self {
        let nodes = tree.node_count();
        let mut euler = Vec::with_capacity(2 * nodes);
        let mut levels = Vec::with_capacity(2 * nodes);
        let mut first = vec![0u32; nodes];
        // (node, level, next child to visit)
        let mut stack: Vec<(u32, u32, u32)> = vec![(tree.root, 0, tree.first_child[tree.root as usize])];
        first[tree.root as usize] = 0;
        euler.push(tree.root);
        levels.push(0);
        while let Some(&mut (_, level, ref mut next)) = stack.last_mut() {
            if *next == NONE {
                stack.pop();
                if let Some(&(p, plevel, _)) = stack.last() {
                    euler.push(p);
                    levels.push(plevel);
                }
                continue;
            }
            let c = *next;
            *next = tree.next_sibling[c as usize];
            first[c as usize] = euler.len() as u32;
            euler.push(c);
            levels.push(level + 1);
            stack.push((c, level + 1, tree.first_child[c as usize]));
        }
        Lca {
            euler,
            first,
            rmq: RmqTable::new(&levels),
        }
    }

    #[inline]
    pub fn lca(&self, u: u32, v: u32) -> u32 {
        let (a, b) = (self.first[u as usize] as usize, self.first[v as usize] as usize);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        self.euler[self.rmq.query(lo, hi)]
    }
}
