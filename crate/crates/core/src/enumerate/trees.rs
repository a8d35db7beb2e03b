//! Catalog of rooted trees, one per root-preserving isomorphism class.
//!
//! Identifiers are positions in the catalog sorted by canonical level
//! sequence, so comparing identifiers compares codes.

use std::collections::BTreeSet;

use crate::canon::{canonical_code, combine_children};
use crate::families::RootedTree;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEntry {
    pub level: Vec<u8>,
    pub order: u8,
    pub height: u8,
    pub diameter: u8,
    /// `parents[v - 1]` is the parent of preorder vertex `v`.
    pub parents: Vec<u8>,
}

impl TreeEntry {
    fn from_level(level: Vec<u8>) -> Self {
        let n = level.len();
        let mut parents = Vec::with_capacity(n - 1);
        let mut stack: Vec<u8> = vec![0];
        for (v, &l) in level.iter().enumerate().skip(1) {
            stack.truncate(l as usize);
            parents.push(stack[l as usize - 1]);
            stack.push(v as u8);
        }
        // heights bottom-up; diameter from the two deepest branches
        let mut best = vec![(0u8, 0u8); n];
        let mut diameter = 0;
        for v in (1..n).rev() {
            let p = parents[v - 1] as usize;
            let h = best[v].0 + 1;
            if h > best[p].0 {
                best[p] = (h, best[p].0);
            } else if h > best[p].1 {
                best[p].1 = h;
            }
        }
        for &(a, b) in &best {
            diameter = diameter.max(a + b);
        }
        TreeEntry {
            order: n as u8,
            height: level.iter().copied().max().unwrap_or(0),
            diameter,
            parents,
            level,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TreeCatalog {
    entries: Vec<TreeEntry>,
    by_order: Vec<Vec<u32>>,
}

impl TreeCatalog {
    /// All rooted trees with at most `max_order` vertices.
    pub fn up_to(max_order: usize) -> Self {
        let mut sorted: Vec<Vec<u8>> = Vec::new();
        for k in 1..=max_order {
            let mut positions: Vec<Vec<usize>> = vec![Vec::new(); k];
            for (p, s) in sorted.iter().enumerate() {
                positions[s.len()].push(p);
            }
            let mut fresh = Vec::new();
            let mut chosen = Vec::new();
            grow(&sorted, &positions, k - 1, usize::MAX, &mut chosen, &mut fresh);
            sorted.extend(fresh);
            sorted.sort_unstable();
        }
        let entries: Vec<TreeEntry> = sorted.into_iter().map(TreeEntry::from_level).collect();
        let mut by_order = vec![Vec::new(); max_order + 1];
        for (id, e) in entries.iter().enumerate() {
            by_order[e.order as usize].push(id as u32);
        }
        TreeCatalog { entries, by_order }
    }

    pub fn max_order(&self) -> usize {
        self.by_order.len() - 1
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, id: u32) -> &TreeEntry {
        &self.entries[id as usize]
    }

    /// Identifiers of the trees with exactly `order` vertices, ascending.
    pub fn ids_of_order(&self, order: usize) -> &[u32] {
        self.by_order.get(order).map_or(&[], Vec::as_slice)
    }

    pub fn rooted_tree(&self, id: u32) -> RootedTree {
        RootedTree::from_level_sequence(&self.entry(id).level).expect("catalog sequences are valid")
    }
}

/// Multisets of child subtrees with total order `remaining`, chosen in
/// non-increasing catalog position so each multiset appears once.
fn grow(
    sorted: &[Vec<u8>],
    positions: &[Vec<usize>],
    remaining: usize,
    max_pos: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<u8>>,
) {
    if remaining == 0 {
        out.push(combine_children(chosen.iter().map(|&p| sorted[p].as_slice()).collect()));
        return;
    }
    for order in 1..=remaining {
        let list = &positions[order];
        let end = list.partition_point(|&p| p <= max_pos);
        for &p in &list[..end] {
            chosen.push(p);
            grow(sorted, positions, remaining - order, p, chosen, out);
            chosen.pop();
        }
    }
}

/// One representative per rooted isomorphism class of order `n`, in
/// canonical-code order.
pub fn rooted_trees(n: usize) -> Vec<RootedTree> {
    if n == 0 {
        return Vec::new();
    }
    let catalog = TreeCatalog::up_to(n);
    catalog.ids_of_order(n).iter().map(|&id| catalog.rooted_tree(id)).collect()
}

/// One representative per isomorphism class of trees of order `n`.
pub fn free_trees(n: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    rooted_trees(n)
        .into_iter()
        .map(|t| t.graph().clone())
        .filter(|g| seen.insert(canonical_code(g).expect("trees always have a code")))
        .collect()
}
