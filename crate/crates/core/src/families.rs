//! Rooted trees, cycle-with-trees specifications, and the named graph
//! families built from them.
//!
//! Naming follows the usual conventions: `P_k` and `S_k` have `k` vertices;
//! a path is rooted at an end and a star at its center. The broom
//! `P^i_{k1,k2}` joins paths of `k1` and `k2` edges and `i` pendant vertices
//! at a common root.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{self, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::index::hanging_trees;

/// A tree with a distinguished root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    tree: Graph,
    root: Vertex,
    level_code: Vec<u8>,
}

impl RootedTree {
    pub fn new(tree: Graph, root: Vertex) -> Result<Self> {
        if !tree.is_tree() {
            return Err(Error::InvalidSpec(format!("{} vertices and {} edges is not a tree", tree.n(), tree.m())));
        }
        if root >= tree.n() {
            return Err(Error::VertexOutOfRange { vertex: root, n: tree.n() });
        }
        let level_code = canon::rooted_level_sequence(&tree, root, &vec![false; tree.n()]);
        Ok(RootedTree { tree, root, level_code })
    }

    /// Builds the tree whose vertex `v > 0` hangs from `parents[v - 1]`;
    /// vertex 0 is the root.
    pub fn from_parents(parents: &[Vertex]) -> Result<Self> {
        let n = parents.len() + 1;
        let mut edges = Vec::with_capacity(parents.len());
        for (i, &p) in parents.iter().enumerate() {
            if p > i {
                return Err(Error::InvalidSpec(format!("parent {p} of vertex {} is not earlier", i + 1)));
            }
            edges.push((p, i + 1));
        }
        RootedTree::new(Graph::from_edges_unchecked(n, edges), 0)
    }

    /// Inverse of [`RootedTree::level_code`] (any valid level sequence is
    /// accepted, canonical or not).
    pub fn from_level_sequence(seq: &[u8]) -> Result<Self> {
        if seq.first() != Some(&0) {
            return Err(Error::Parse("level sequence must start with 0".into()));
        }
        let mut stack: Vec<Vertex> = vec![0];
        let mut parents = Vec::with_capacity(seq.len() - 1);
        for (v, &level) in seq.iter().enumerate().skip(1) {
            let level = level as usize;
            if level == 0 || level > stack.len() {
                return Err(Error::Parse(format!("level {level} at position {v} does not continue the sequence")));
            }
            stack.truncate(level);
            parents.push(stack[level - 1]);
            stack.push(v);
        }
        RootedTree::from_parents(&parents)
    }

    /// The single-vertex tree `S_1`.
    pub fn trivial() -> Self {
        RootedTree::from_parents(&[]).expect("trivial tree")
    }

    pub fn graph(&self) -> &Graph {
        &self.tree
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn level_code(&self) -> &[u8] {
        &self.level_code
    }

    pub fn order(&self) -> usize {
        self.tree.n()
    }

    pub fn size(&self) -> usize {
        self.tree.m()
    }

    pub fn height(&self) -> usize {
        self.level_code.iter().copied().max().unwrap_or(0) as usize
    }

    /// Identifies the roots of all trees into one new root.
    pub fn glue(trees: &[RootedTree]) -> RootedTree {
        let mut b = TreeBuilder::new();
        for t in trees {
            b.graft(0, t);
        }
        b.finish()
    }
}

/// Incremental construction of rooted trees; the root is vertex 0.
#[derive(Debug)]
struct TreeBuilder {
    n: usize,
    edges: Vec<Edge>,
}

impl TreeBuilder {
    fn new() -> Self {
        TreeBuilder { n: 1, edges: Vec::new() }
    }

    fn child(&mut self, parent: Vertex) -> Vertex {
        let v = self.n;
        self.n += 1;
        self.edges.push((parent, v));
        v
    }

    /// Hangs a path with `len` edges below `from` and returns its far end.
    fn path(&mut self, from: Vertex, len: usize) -> Vertex {
        (0..len).fold(from, |at, _| self.child(at))
    }

    fn pendants(&mut self, at: Vertex, count: usize) {
        for _ in 0..count {
            self.child(at);
        }
    }

    /// Copies `tree` below `at`, identifying its root with `at`.
    fn graft(&mut self, at: Vertex, tree: &RootedTree) {
        let g = tree.graph();
        let mut map = vec![usize::MAX; g.n()];
        map[tree.root()] = at;
        let mut queue = vec![tree.root()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &y in g.neighbors(x) {
                if map[y] == usize::MAX {
                    map[y] = self.child(map[x]);
                    queue.push(y);
                }
            }
        }
    }

    fn finish(self) -> RootedTree {
        RootedTree::new(Graph::from_edges_unchecked(self.n, self.edges), 0).expect("builder makes trees")
    }
}

/// `P^i_{k1,k2}` rooted at the common vertex.
pub fn broom(k1: usize, k2: usize, i: usize) -> RootedTree {
    let mut b = TreeBuilder::new();
    b.path(0, k1);
    b.path(0, k2);
    b.pendants(0, i);
    b.finish()
}

/// `P_n` rooted at an end.
pub fn path(n: usize) -> Result<RootedTree> {
    if n == 0 {
        return Err(Error::BadParams("path needs at least one vertex".into()));
    }
    Ok(broom(n - 1, 0, 0))
}

/// `S_n` rooted at its center.
pub fn star(n: usize) -> Result<RootedTree> {
    if n == 0 {
        return Err(Error::BadParams("star needs at least one vertex".into()));
    }
    Ok(broom(0, 0, n - 1))
}

/// Backbone `u_0 .. u_l` with `a[j]` pendants at `u_j`, rooted at `u_l`.
pub fn caterpillar(a: &[usize]) -> Result<RootedTree> {
    let Some((&last, rest)) = a.split_last() else {
        return Err(Error::BadParams("caterpillar needs a backbone of at least one vertex".into()));
    };
    let mut b = TreeBuilder::new();
    b.pendants(0, last);
    let mut at = 0;
    for &count in rest.iter().rev() {
        at = b.child(at);
        b.pendants(at, count);
    }
    Ok(b.finish())
}

/// The tree of order `n` and diameter `d` with all extra vertices pendant at
/// the middle of a diametral path, rooted there.
pub fn t_ndd(n: usize, d: usize) -> Result<RootedTree> {
    if d < 2 || d + 2 > n {
        return Err(Error::BadParams(format!("t_ndd needs 2 <= d <= n-2, got n={n} d={d}")));
    }
    Ok(broom(d / 2, d - d / 2, n - d - 1))
}

/// `C_g(T_1, ..., T_g)`: a cycle `v_1 .. v_g` with `T_i` rooted at `v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicyclicSpec {
    trees: Vec<RootedTree>,
}

impl UnicyclicSpec {
    pub fn new(trees: Vec<RootedTree>) -> Result<Self> {
        if trees.len() < 3 {
            return Err(Error::InvalidSpec(format!("cycle length {} is below 3", trees.len())));
        }
        if trees.len() > u8::MAX as usize {
            return Err(Error::InvalidSpec(format!("cycle length {} is too long", trees.len())));
        }
        Ok(UnicyclicSpec { trees })
    }

    /// Reads a unicyclic graph back into cycle-with-trees form. The cycle
    /// starts at its smallest vertex.
    pub fn from_graph(graph: &Graph) -> Result<Self> {
        let cycle = graph.unique_cycle()?;
        let trees = hanging_trees(graph, cycle.vertices())
            .into_iter()
            .map(|t| RootedTree::new(t, 0))
            .collect::<Result<Vec<_>>>()?;
        UnicyclicSpec::new(trees)
    }

    pub fn g(&self) -> usize {
        self.trees.len()
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    pub fn order(&self) -> usize {
        self.trees.iter().map(RootedTree::order).sum()
    }

    /// Cycle vertex `v_{i+1}` is vertex `i`; tree vertices follow in tree
    /// order. The second component maps each tree's vertices into the graph.
    pub fn assemble_mapped(&self) -> (Graph, Vec<Vec<Vertex>>) {
        let g = self.g();
        let mut edges: Vec<Edge> = (0..g).map(|i| (i, (i + 1) % g)).collect();
        let mut next = g;
        let mut maps = Vec::with_capacity(g);
        for (i, t) in self.trees.iter().enumerate() {
            let mut map = vec![0; t.order()];
            for (v, slot) in map.iter_mut().enumerate() {
                if v == t.root() {
                    *slot = i;
                } else {
                    *slot = next;
                    next += 1;
                }
            }
            edges.extend(t.graph().edges().iter().map(|&(x, y)| (map[x], map[y])));
            maps.push(map);
        }
        (Graph::from_edges_unchecked(next, edges), maps)
    }

    pub fn assemble(&self) -> Graph {
        self.assemble_mapped().0
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let seqs: Vec<&[u8]> = self.trees.iter().map(RootedTree::level_code).collect();
        let ordered = canon::dihedral_minimal(&seqs);
        CanonicalCode::unicyclic_from_sequences(self.g(), ordered)
    }
}

fn unicyclic(trees: Vec<RootedTree>) -> Graph {
    UnicyclicSpec::new(trees).expect("family specs have cycle length >= 3").assemble()
}

fn s1() -> RootedTree {
    RootedTree::trivial()
}

/// The four girth-3 families compared in the diameter-preserving moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum G3Variant {
    /// `C_3(P^a_{l1}, P_{l2+1}, S_1)`
    V11,
    /// `C_3(P_{l1+1}, P_{l2+1}, S_{a+1})`
    V12,
    /// `C_3(P^{a-1}_{l1,l2+1}, S_1, S_1)`
    V21,
    /// `C_3(P^0_{l1,l2+1}, S_a, S_1)`
    V22,
}

impl G3Variant {
    pub const ALL: [G3Variant; 4] = [G3Variant::V11, G3Variant::V12, G3Variant::V21, G3Variant::V22];

    fn code(self) -> u8 {
        match self {
            G3Variant::V11 => 11,
            G3Variant::V12 => 12,
            G3Variant::V21 => 21,
            G3Variant::V22 => 22,
        }
    }

    fn from_code(code: u8) -> Result<Self> {
        G3Variant::ALL
            .into_iter()
            .find(|v| v.code() == code)
            .ok_or_else(|| Error::BadParams(format!("unknown g3 variant {code}")))
    }
}

/// Graph of order `l1 + l2 + a + 3`.
pub fn g3_family(variant: G3Variant, l1: usize, l2: usize, a: usize) -> Result<Graph> {
    let trees = match variant {
        G3Variant::V11 => vec![broom(l1, 0, a), path(l2 + 1)?, s1()],
        G3Variant::V12 => vec![path(l1 + 1)?, path(l2 + 1)?, star(a + 1)?],
        G3Variant::V21 | G3Variant::V22 if a == 0 => {
            return Err(Error::BadParams(format!("g3 variant {} needs a >= 1", variant.code())));
        }
        G3Variant::V21 => vec![broom(l1, l2 + 1, a - 1), s1(), s1()],
        G3Variant::V22 => vec![broom(l1, l2 + 1, 0), star(a)?, s1()],
    };
    Ok(unicyclic(trees))
}

/// Parameters of the girth-4 families: a path of `l1` edges and a tree
/// `T*` (path `w_0 .. w_{l2}` rooted at `w_{l2}`, with `b` pendants at
/// `w_i`) are placed on the cycle `v_1 v_2 v_3 v_4`, and `a` pendants are
/// added at `v_k`.
///
/// * shape 1: both glued at `v_1` (with `b = 0` this is the broom
///   `P^0_{l1,l2}`);
/// * shape 2: path at `v_1`, `T*` at `v_2`;
/// * shape 3: path at `v_1`, `T*` at `v_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct G4Params {
    pub shape: u8,
    pub k: u8,
    pub l1: usize,
    pub l2: usize,
    pub a: usize,
    pub b: usize,
    pub i: usize,
}

impl G4Params {
    pub fn new(shape: u8, k: u8, l1: usize, l2: usize, a: usize, b: usize, i: usize) -> Result<Self> {
        if !(1..=3).contains(&shape) {
            return Err(Error::BadParams(format!("g4 shape must be 1, 2 or 3, got {shape}")));
        }
        if !(1..=4).contains(&k) {
            return Err(Error::BadParams(format!("g4 pendant position k must be in 1..=4, got {k}")));
        }
        let i = if b == 0 {
            0
        } else if (1..=l2).contains(&i) {
            i
        } else {
            return Err(Error::BadParams(format!("g4 needs 1 <= i <= l2 when b > 0, got i={i} l2={l2}")));
        };
        Ok(G4Params { shape, k, l1, l2, a, b, i })
    }

    /// Form without `T*` pendants.
    pub fn plain(shape: u8, k: u8, l1: usize, l2: usize, a: usize) -> Result<Self> {
        G4Params::new(shape, k, l1, l2, a, 0, 0)
    }

    pub fn order(&self) -> usize {
        self.l1 + self.l2 + self.a + self.b + 4
    }

    pub fn build(&self) -> Graph {
        let p = broom(self.l1, 0, 0);
        let mut tb = TreeBuilder::new();
        // root is w_{l2}; walking down reaches w_{l2-1}, ..., w_0
        let mut w = 0;
        for step in 0..=self.l2 {
            let index = self.l2 - step;
            if self.b > 0 && index == self.i {
                tb.pendants(w, self.b);
            }
            if index > 0 {
                w = tb.child(w);
            }
        }
        let t_star = tb.finish();
        let mut trees = vec![s1(), s1(), s1(), s1()];
        match self.shape {
            1 => trees[0] = RootedTree::glue(&[p, t_star]),
            2 => {
                trees[0] = p;
                trees[1] = t_star;
            }
            _ => {
                trees[0] = p;
                trees[2] = t_star;
            }
        }
        let k = self.k as usize - 1;
        trees[k] = RootedTree::glue(&[trees[k].clone(), star(self.a + 1).expect("nonempty")]);
        unicyclic(trees)
    }
}

pub fn g4_family(shape: u8, k: u8, l1: usize, l2: usize, a: usize, b: usize, i: usize) -> Result<Graph> {
    Ok(G4Params::new(shape, k, l1, l2, a, b, i)?.build())
}

/// The graph claimed to minimise the revised edge Szeged index over
/// unicyclic graphs of order `n > 15` and diameter `d`.
pub fn extremal(n: usize, d: usize) -> Result<Graph> {
    if n <= 15 {
        return Err(Error::BadParams(format!("extremal graphs are stated for n > 15, got n={n}")));
    }
    extremal_shape(n, d)
}

/// The same construction as [`extremal`] without the order threshold, for
/// comparison against searches at small orders.
pub fn extremal_shape(n: usize, d: usize) -> Result<Graph> {
    if d < 3 || d + 2 > n {
        return Err(Error::BadParams(format!("extremal needs 3 <= d <= n-2, got n={n} d={d}")));
    }
    let trees = if d == n - 2 {
        vec![path((d - 1).div_ceil(2) + 1)?, path((d - 1) / 2 + 1)?, s1()]
    } else if d == n - 3 {
        vec![broom(d / 2, d - d / 2, n - d - 3), s1(), s1()]
    } else if d >= 6 {
        vec![broom(d / 2, d - d / 2, n - d - 4), s1(), s1(), s1()]
    } else if d >= 4 {
        vec![broom(d - 2, 0, n - d - 2), s1(), s1(), s1()]
    } else {
        vec![star(n - 3)?, s1(), s1(), s1()]
    };
    Ok(unicyclic(trees))
}

/// A named family member, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    Path { n: usize },
    Star { n: usize },
    Cycle { n: usize },
    Broom { k1: usize, k2: usize, i: usize },
    Caterpillar { a: Vec<usize> },
    TNdd { n: usize, d: usize },
    G3 { variant: G3Variant, l1: usize, l2: usize, a: usize },
    G4(G4Params),
    Extremal { n: usize, d: usize },
}

impl FamilyParams {
    pub fn build(&self) -> Result<Graph> {
        Ok(match self {
            FamilyParams::Path { n } => path(*n)?.graph().clone(),
            FamilyParams::Star { n } => star(*n)?.graph().clone(),
            FamilyParams::Cycle { n } => {
                if *n < 3 {
                    return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
                }
                unicyclic(vec![s1(); *n])
            }
            FamilyParams::Broom { k1, k2, i } => broom(*k1, *k2, *i).graph().clone(),
            FamilyParams::Caterpillar { a } => caterpillar(a)?.graph().clone(),
            FamilyParams::TNdd { n, d } => t_ndd(*n, *d)?.graph().clone(),
            FamilyParams::G3 { variant, l1, l2, a } => g3_family(*variant, *l1, *l2, *a)?,
            FamilyParams::G4(p) => G4Params::new(p.shape, p.k, p.l1, p.l2, p.a, p.b, p.i)?.build(),
            FamilyParams::Extremal { n, d } => extremal(*n, *d)?,
        })
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Path { n } => write!(f, "path n={n}"),
            FamilyParams::Star { n } => write!(f, "star n={n}"),
            FamilyParams::Cycle { n } => write!(f, "cycle n={n}"),
            FamilyParams::Broom { k1, k2, i } => write!(f, "broom k1={k1} k2={k2} i={i}"),
            FamilyParams::Caterpillar { a } => {
                let list: Vec<String> = a.iter().map(usize::to_string).collect();
                write!(f, "caterpillar a={}", list.join(","))
            }
            FamilyParams::TNdd { n, d } => write!(f, "t_ndd n={n} d={d}"),
            FamilyParams::G3 { variant, l1, l2, a } => {
                write!(f, "g3 variant={} l1={l1} l2={l2} a={a}", variant.code())
            }
            FamilyParams::G4(p) => write!(
                f,
                "g4 variant={}{} l1={} l2={} a={} b={} i={}",
                p.shape, p.k, p.l1, p.l2, p.a, p.b, p.i
            ),
            FamilyParams::Extremal { n, d } => write!(f, "extremal n={n} d={d}"),
        }
    }
}

impl FromStr for FamilyParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let name = words.next().ok_or_else(|| Error::Parse("empty family spec".into()))?;
        let mut pairs = Vec::new();
        for word in words {
            let (k, v) = word
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {word:?}")))?;
            pairs.push((k, v));
        }
        let raw = |key: &str| -> Result<&str> {
            pairs
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::Parse(format!("{name}: missing {key}=")))
        };
        let num = |key: &str| -> Result<usize> {
            let v = raw(key)?;
            v.parse().map_err(|_| Error::Parse(format!("{name}: {key}={v:?} is not a non-negative integer")))
        };
        let opt = |key: &str| -> Result<usize> {
            if pairs.iter().any(|(k, _)| *k == key) {
                num(key)
            } else {
                Ok(0)
            }
        };
        let allowed: &[&str] = match name {
            "path" | "star" | "cycle" => &["n"],
            "broom" => &["k1", "k2", "i"],
            "caterpillar" => &["a"],
            "t_ndd" | "extremal" => &["n", "d"],
            "g3" => &["variant", "l1", "l2", "a"],
            "g4" => &["variant", "l1", "l2", "a", "b", "i"],
            _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
        };
        if let Some((k, _)) = pairs.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(Error::Parse(format!("{name}: unexpected key {k:?}")));
        }
        Ok(match name {
            "path" => FamilyParams::Path { n: num("n")? },
            "star" => FamilyParams::Star { n: num("n")? },
            "cycle" => FamilyParams::Cycle { n: num("n")? },
            "broom" => FamilyParams::Broom { k1: num("k1")?, k2: opt("k2")?, i: opt("i")? },
            "caterpillar" => FamilyParams::Caterpillar {
                a: raw("a")?
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("caterpillar: bad entry {x:?}"))))
                    .collect::<Result<_>>()?,
            },
            "t_ndd" => FamilyParams::TNdd { n: num("n")?, d: num("d")? },
            "extremal" => FamilyParams::Extremal { n: num("n")?, d: num("d")? },
            "g3" => FamilyParams::G3 {
                variant: G3Variant::from_code(num("variant")?.try_into().unwrap_or(0))?,
                l1: num("l1")?,
                l2: num("l2")?,
                a: num("a")?,
            },
            _ => {
                let v = num("variant")?;
                let (shape, k) = ((v / 10) as u8, (v % 10) as u8);
                if v >= 100 {
                    return Err(Error::BadParams(format!("g4 variant {v} is not two digits")));
                }
                FamilyParams::G4(G4Params::new(shape, k, num("l1")?, num("l2")?, opt("a")?, opt("b")?, opt("i")?)?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    #[test]
    fn brooms() {
        let s5 = broom(0, 0, 4);
        assert_eq!(s5.order(), 5);
        assert_eq!(s5.graph().degree(s5.root()), 4);
        let p4 = broom(3, 0, 0);
        assert_eq!(p4.graph().diameter(), 3);
        assert_eq!(p4.graph().degree(p4.root()), 1);
        let b = broom(2, 3, 1);
        assert_eq!((b.order(), b.graph().degree(b.root())), (7, 3));
    }

    #[test]
    fn caterpillars() {
        assert_eq!(caterpillar(&[0, 0, 0]).unwrap().level_code(), path(3).unwrap().level_code());
        let c = caterpillar(&[0, 2, 0]).unwrap();
        assert_eq!(c.order(), 5);
        assert_eq!((0..5).map(|v| c.graph().degree(v)).max(), Some(4));
        assert_eq!(caterpillar(&[0, 0, 3]).unwrap().level_code(), broom(2, 0, 3).level_code());
    }

    #[test]
    fn t_ndd_examples() {
        let t = t_ndd(8, 4).unwrap();
        assert_eq!((t.order(), t.graph().diameter()), (8, 4));
        assert_eq!(t.graph().degree(t.root()), 5);
        assert_eq!(t_ndd(4, 2).unwrap().level_code(), star(4).unwrap().level_code());
        assert!(t_ndd(4, 3).is_err());
    }

    #[test]
    fn level_sequence_round_trip() {
        let t = broom(2, 3, 1);
        let back = RootedTree::from_level_sequence(t.level_code()).unwrap();
        assert_eq!(back.level_code(), t.level_code());
        assert!(RootedTree::from_level_sequence(&[0, 2]).is_err());
        assert!(RootedTree::from_level_sequence(&[1]).is_err());
    }

    #[test]
    fn assembly() {
        let c3 = UnicyclicSpec::new(vec![s1(), s1(), s1()]).unwrap().assemble();
        assert_eq!((c3.n(), c3.m()), (3, 3));
        let spec = UnicyclicSpec::new(vec![path(3).unwrap(), s1(), s1(), s1()]).unwrap();
        let g = spec.assemble();
        assert_eq!((g.n(), g.unique_cycle().unwrap().g()), (6, 4));
        let spec = UnicyclicSpec::new(vec![t_ndd(6, 4).unwrap(), s1(), s1()]).unwrap();
        assert_eq!(spec.order(), 8);
        assert_eq!(spec.canonical_code(), canonical_code(&spec.assemble()).unwrap());
        let back = UnicyclicSpec::from_graph(&spec.assemble()).unwrap();
        assert_eq!(back.canonical_code(), spec.canonical_code());
        assert!(UnicyclicSpec::new(vec![s1(), s1()]).is_err());
    }

    #[test]
    fn g3_examples() {
        for (l1, a) in [(0, 1), (2, 3), (4, 1)] {
            let x = g3_family(G3Variant::V11, l1, 0, a).unwrap();
            let y = g3_family(G3Variant::V21, l1, 0, a).unwrap();
            assert_eq!(canonical_code(&x).unwrap(), canonical_code(&y).unwrap());
        }
        let g = g3_family(G3Variant::V12, 1, 1, 1).unwrap();
        assert_eq!((g.n(), g.unique_cycle().unwrap().g()), (6, 3));
        let g = g3_family(G3Variant::V21, 2, 3, 1).unwrap();
        assert_eq!(g.diameter(), 6);
        assert!(g3_family(G3Variant::V22, 1, 1, 0).is_err());
        for v in G3Variant::ALL {
            assert_eq!(g3_family(v, 2, 3, 4).unwrap().n(), 2 + 3 + 4 + 3);
        }
    }

    #[test]
    fn g4_examples() {
        let g = g4_family(1, 1, 2, 3, 4, 0, 0).unwrap();
        assert_eq!(g.n(), 2 + 3 + 4 + 4);
        let g = g4_family(3, 2, 0, 7, 0, 0, 0).unwrap();
        assert_eq!((g.n(), g.diameter()), (11, 9));
        let g = g4_family(2, 1, 3, 3, 0, 2, 3).unwrap();
        assert_eq!((g.n(), g.unique_cycle().unwrap().g()), (12, 4));
        assert!(g4_family(2, 1, 3, 3, 0, 2, 0).is_err());
        assert!(g4_family(2, 5, 3, 3, 0, 0, 0).is_err());
        // b = 0 ignores i
        assert_eq!(G4Params::new(3, 1, 1, 2, 0, 0, 7).unwrap().i, 0);
        // pendants at w_{l2} sit on the root
        let at_root = g4_family(3, 2, 0, 3, 0, 2, 3).unwrap();
        let broom_at_v1 = UnicyclicSpec::new(vec![broom(3, 0, 2), s1(), s1(), s1()]).unwrap().assemble();
        assert_eq!(canonical_code(&at_root).unwrap(), canonical_code(&broom_at_v1).unwrap());
    }

    #[test]
    fn extremal_shapes() {
        for n in 16..=20 {
            for d in 3..=n - 2 {
                let g = extremal(n, d).unwrap();
                assert_eq!((g.n(), g.diameter()), (n, d), "n={n} d={d}");
                let girth = g.unique_cycle().unwrap().g();
                assert_eq!(girth, if d + 3 >= n { 3 } else { 4 }, "n={n} d={d}");
            }
        }
        assert!(extremal(15, 5).is_err());
        assert!(extremal(16, 15).is_err());
        assert!(extremal(16, 2).is_err());
        let e = extremal(16, 14).unwrap();
        let want = UnicyclicSpec::new(vec![path(8).unwrap(), path(7).unwrap(), s1()]).unwrap().assemble();
        assert_eq!(canonical_code(&e).unwrap(), canonical_code(&want).unwrap());
        let e = extremal(20, 8).unwrap();
        let want = UnicyclicSpec::new(vec![broom(4, 4, 8), s1(), s1(), s1()]).unwrap().assemble();
        assert_eq!(canonical_code(&e).unwrap(), canonical_code(&want).unwrap());
    }

    #[test]
    fn params_round_trip() {
        for text in [
            "extremal n=16 d=7",
            "g4 variant=32 l1=0 l2=5 a=0 b=3 i=3",
            "g3 variant=21 l1=2 l2=3 a=1",
            "path n=4",
            "star n=5",
            "cycle n=6",
            "broom k1=2 k2=3 i=1",
            "caterpillar a=0,2,0",
            "t_ndd n=8 d=4",
        ] {
            let p: FamilyParams = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
            assert!(p.build().is_ok(), "{text}");
            let json = serde_json::to_string(&p).unwrap();
            assert_eq!(serde_json::from_str::<FamilyParams>(&json).unwrap(), p);
        }
        assert!("g4 variant=52 l1=0 l2=1".parse::<FamilyParams>().is_err());
        assert!("path".parse::<FamilyParams>().is_err());
        assert!("path n=x".parse::<FamilyParams>().is_err());
        assert!("path n=3 q=1".parse::<FamilyParams>().is_err());
        assert!("blob n=3".parse::<FamilyParams>().is_err());
    }
}
