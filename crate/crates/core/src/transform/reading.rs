//! Structural readings of rooted trees: brooms, caterpillars and the
//! backbone through a deepest vertex.

use crate::families::RootedTree;
use crate::graph::Vertex;

/// Parent, depth and children of every vertex, with the root at depth 0.
pub(crate) struct Layout {
    pub parent: Vec<Option<Vertex>>,
    pub depth: Vec<usize>,
    pub children: Vec<Vec<Vertex>>,
}

pub(crate) fn layout(tree: &RootedTree) -> Layout {
    let g = tree.graph();
    let n = g.n();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut children = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut queue = vec![tree.root()];
    seen[tree.root()] = true;
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                depth[y] = depth[x] + 1;
                children[x].push(y);
                queue.push(y);
            }
        }
    }
    Layout { parent, depth, children }
}

/// A tree read as `P^p_{c_1,c_2}`: bare paths of at least two edges hanging
/// from the root, and leaf children counted as pendants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BroomReading {
    pub chains: Vec<usize>,
    pub pendants: Vec<Vertex>,
}

/// `None` unless the tree is a broom with at most two long arms.
pub(crate) fn broom_reading(tree: &RootedTree) -> Option<BroomReading> {
    let lay = layout(tree);
    let mut chains = Vec::new();
    let mut pendants = Vec::new();
    for &c in &lay.children[tree.root()] {
        if lay.children[c].is_empty() {
            pendants.push(c);
            continue;
        }
        let mut len = 1;
        let mut at = c;
        while lay.children[at].len() == 1 {
            at = lay.children[at][0];
            len += 1;
        }
        if !lay.children[at].is_empty() {
            return None;
        }
        chains.push(len);
    }
    (chains.len() <= 2).then_some(BroomReading { chains, pendants })
}

/// True for `S_k` rooted at its center (including `S_1`).
pub(crate) fn is_root_star(tree: &RootedTree) -> bool {
    tree.height() <= 1
}

/// `u_0 .. u_l` where `u_0` is the smallest deepest vertex and `u_l` the root.
pub(crate) fn deepest_path(tree: &RootedTree, lay: &Layout) -> Vec<Vertex> {
    let deepest = (0..tree.order()).max_by_key(|&v| (lay.depth[v], std::cmp::Reverse(v))).unwrap_or(tree.root());
    let mut path = vec![deepest];
    let mut at = deepest;
    while let Some(p) = lay.parent[at] {
        path.push(p);
        at = p;
    }
    path
}

/// For each backbone position `j`, the number of non-backbone vertices whose
/// nearest backbone vertex is `u_j` (that is, `|V(H_j)| - 1`).
pub(crate) fn branch_sizes(tree: &RootedTree, lay: &Layout, backbone: &[Vertex]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; tree.order()];
    for (j, &u) in backbone.iter().enumerate() {
        pos[u] = j;
    }
    let mut sizes = vec![0; backbone.len()];
    for v in 0..tree.order() {
        if pos[v] != usize::MAX {
            continue;
        }
        let mut at = v;
        while pos[at] == usize::MAX {
            at = lay.parent[at].expect("non-root vertex has a parent");
        }
        sizes[pos[at]] += 1;
    }
    sizes
}

/// A tree read as the caterpillar `P(0, a_1, .., a_l)` rooted at `u_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CaterpillarReading {
    pub backbone: Vec<Vertex>,
    pub pendants: Vec<Vec<Vertex>>,
}

impl CaterpillarReading {
    pub fn counts(&self) -> Vec<usize> {
        self.pendants.iter().map(Vec::len).collect()
    }
}

pub(crate) fn caterpillar_reading(tree: &RootedTree) -> Option<CaterpillarReading> {
    let lay = layout(tree);
    let backbone = deepest_path(tree, &lay);
    let mut pos = vec![usize::MAX; tree.order()];
    for (j, &u) in backbone.iter().enumerate() {
        pos[u] = j;
    }
    let mut pendants = vec![Vec::new(); backbone.len()];
    for v in 0..tree.order() {
        if pos[v] != usize::MAX {
            continue;
        }
        let p = lay.parent[v]?;
        if pos[p] == usize::MAX || !lay.children[v].is_empty() {
            return None;
        }
        pendants[pos[p]].push(v);
    }
    Some(CaterpillarReading { backbone, pendants })
}
