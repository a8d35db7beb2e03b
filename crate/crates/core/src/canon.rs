//! Canonical codes.
//!
//! * Rooted trees: the canonical level sequence (preorder depths with
//!   subtrees visited in non-increasing lexicographic order of their own
//!   level sequences). Every sequence starts with its single `0`, so a
//!   concatenation of sequences is unambiguous.
//! * Free trees: level sequence at the center, or the ordered pair of
//!   halves for bicentral trees.
//! * Unicyclic graphs: girth plus the dihedrally minimal rotation of the
//!   rooted-tree level sequences hanging from the cycle.
//! * Anything else up to [`MAX_GENERAL_ORDER`] vertices: colour refinement
//!   with individualisation, minimising the adjacency bit string.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const MAX_GENERAL_ORDER: usize = 10;

const TAG_TREE: u8 = b'T';
const TAG_UNICYCLIC: u8 = b'U';
const TAG_GENERAL: u8 = b'G';

/// Byte string identifying an isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    pub(crate) fn unicyclic_from_sequences<'a>(g: usize, seqs: impl IntoIterator<Item = &'a [u8]>) -> Self {
        let mut bytes = vec![TAG_UNICYCLIC, g as u8];
        for s in seqs {
            bytes.extend_from_slice(s);
        }
        CanonicalCode(bytes)
    }

    /// Lowercase hex, used in reports.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(hex: &str) -> Result<Self> {
        if hex.len() % 2 != 0 {
            return Err(Error::Parse(format!("odd-length hex code {hex:?}")));
        }
        (0..hex.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&hex[i..i + 2], 16).map_err(|_| Error::Parse(format!("bad hex code {hex:?}"))))
            .collect::<Result<Vec<u8>>>()
            .map(CanonicalCode)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical level sequence of the tree hanging from `root`, not entering
/// vertices marked in `blocked`.
pub fn rooted_level_sequence(graph: &Graph, root: Vertex, blocked: &[bool]) -> Vec<u8> {
    fn walk(graph: &Graph, v: Vertex, parent: Vertex, blocked: &[bool]) -> Vec<u8> {
        let mut children: Vec<Vec<u8>> = graph
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent && !blocked[w])
            .map(|&w| walk(graph, w, v, blocked))
            .collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut seq = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        seq.push(0);
        for child in children {
            seq.extend(child.into_iter().map(|d| d + 1));
        }
        seq
    }
    walk(graph, root, usize::MAX, blocked)
}

/// Canonical sequence of a rooted tree assembled from child sequences.
pub fn combine_children(mut children: Vec<&[u8]>) -> Vec<u8> {
    children.sort_unstable_by(|a, b| b.cmp(a));
    let mut seq = vec![0];
    for child in children {
        seq.extend(child.iter().map(|d| d + 1));
    }
    seq
}

/// Start index and direction of the lexicographically smallest reading of
/// `items` as a necklace under rotation and reflection. `reversed` means the
/// reading walks backwards from `start`.
pub fn min_dihedral_reading<T: Ord>(items: &[T]) -> (usize, bool) {
    let g = items.len();
    let at = |start: usize, reversed: bool, k: usize| {
        if reversed {
            &items[(start + g - k % g) % g]
        } else {
            &items[(start + k) % g]
        }
    };
    let mut best = (0, false);
    for start in 0..g {
        for reversed in [false, true] {
            if (start, reversed) == best {
                continue;
            }
            let ord = (0..g)
                .map(|k| at(start, reversed, k).cmp(at(best.0, best.1, k)))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal);
            if ord == Ordering::Less {
                best = (start, reversed);
            }
        }
    }
    best
}

/// Whether `items` read forwards from position 0 is already the minimal
/// dihedral reading.
pub fn is_dihedral_minimal<T: Ord>(items: &[T]) -> bool {
    let g = items.len();
    let first = &items[0];
    for start in 0..g {
        if items[start] != *first {
            if items[start] < *first {
                return false;
            }
            continue;
        }
        for reversed in [false, true] {
            if start == 0 && !reversed {
                continue;
            }
            for k in 0..g {
                let idx = if reversed { (start + g - k) % g } else { (start + k) % g };
                match items[idx].cmp(&items[k]) {
                    Ordering::Less => return false,
                    Ordering::Greater => break,
                    Ordering::Equal => {}
                }
            }
        }
    }
    true
}

/// Reorders `items` into the minimal dihedral reading.
pub fn dihedral_minimal<T: Ord + Clone>(items: &[T]) -> Vec<T> {
    let g = items.len();
    let (start, reversed) = min_dihedral_reading(items);
    (0..g)
        .map(|k| if reversed { items[(start + g - k) % g].clone() } else { items[(start + k) % g].clone() })
        .collect()
}

fn tree_centers(graph: &Graph) -> Vec<Vertex> {
    let n = graph.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
        }
        for &v in &layer {
            for &w in graph.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn tree_code(graph: &Graph) -> CanonicalCode {
    let n = graph.n();
    let mut blocked = vec![false; n];
    let centers = tree_centers(graph);
    let mut bytes = vec![TAG_TREE];
    match centers.as_slice() {
        [c] => {
            bytes.push(1);
            bytes.extend(rooted_level_sequence(graph, *c, &blocked));
        }
        [a, b] => {
            bytes.push(2);
            blocked[*b] = true;
            let sa = rooted_level_sequence(graph, *a, &blocked);
            blocked[*b] = false;
            blocked[*a] = true;
            let sb = rooted_level_sequence(graph, *b, &blocked);
            let (lo, hi) = if sa <= sb { (sa, sb) } else { (sb, sa) };
            bytes.extend(lo);
            bytes.extend(hi);
        }
        _ => unreachable!("a tree has one or two centers"),
    }
    CanonicalCode(bytes)
}

/// Level sequences of the trees hanging from each cycle vertex, in cycle
/// order.
pub fn hanging_tree_sequences(graph: &Graph, cycle: &[Vertex]) -> Vec<Vec<u8>> {
    let mut blocked = vec![false; graph.n()];
    for &v in cycle {
        blocked[v] = true;
    }
    cycle
        .iter()
        .map(|&v| {
            blocked[v] = false;
            let s = rooted_level_sequence(graph, v, &blocked);
            blocked[v] = true;
            s
        })
        .collect()
}

fn unicyclic_code(graph: &Graph) -> Result<CanonicalCode> {
    let cycle = graph.unique_cycle()?;
    let seqs = hanging_tree_sequences(graph, cycle.vertices());
    let ordered = dihedral_minimal(&seqs);
    Ok(CanonicalCode::unicyclic_from_sequences(cycle.g(), ordered.iter().map(Vec::as_slice)))
}

/// Isomorphism-complete code for trees, unicyclic graphs and general graphs
/// up to [`MAX_GENERAL_ORDER`] vertices.
pub fn canonical_code(graph: &Graph) -> Result<CanonicalCode> {
    if graph.is_tree() {
        Ok(tree_code(graph))
    } else if graph.is_unicyclic() {
        unicyclic_code(graph)
    } else if graph.n() <= MAX_GENERAL_ORDER {
        Ok(general_code(graph))
    } else {
        Err(Error::TooLarge { n: graph.n(), max: MAX_GENERAL_ORDER })
    }
}

/// Upper-triangle adjacency bits (column-major, most significant first)
/// under the ordering `order[position] = vertex`.
pub(crate) fn adjacency_bits(graph: &Graph, order: &[Vertex]) -> u64 {
    let n = order.len();
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            bits = bits << 1 | graph.has_edge(order[i], order[j]) as u64;
        }
    }
    bits
}

fn refine(graph: &Graph, colors: &mut Vec<u32>) {
    let n = graph.n();
    let mut classes = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = graph.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let new: Vec<u32> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present") as u32)
            .collect();
        *colors = new;
        if distinct.len() == classes {
            return;
        }
        classes = distinct.len();
    }
}

fn general_code(graph: &Graph) -> CanonicalCode {
    fn search(graph: &Graph, mut colors: Vec<u32>, best: &mut Option<u64>) {
        refine(graph, &mut colors);
        let n = graph.n();
        // smallest colour whose cell is not a singleton
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        match (0..n).find(|&c| counts[c] > 1) {
            None => {
                let mut order = vec![0; n];
                for (v, &c) in colors.iter().enumerate() {
                    order[c as usize] = v;
                }
                let bits = adjacency_bits(graph, &order);
                if best.map_or(true, |b| bits < b) {
                    *best = Some(bits);
                }
            }
            Some(cell) => {
                for v in (0..n).filter(|&v| colors[v] as usize == cell) {
                    let individualised: Vec<u32> = colors
                        .iter()
                        .enumerate()
                        .map(|(w, &c)| 2 * c + u32::from(!(w == v || c as usize != cell)))
                        .collect();
                    search(graph, individualised, best);
                }
            }
        }
    }
    let n = graph.n();
    let mut best = None;
    search(graph, vec![0; n], &mut best);
    let mut bytes = vec![TAG_GENERAL, n as u8];
    bytes.extend(best.expect("at least one leaf").to_be_bytes());
    CanonicalCode(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let a = g(4, &[(0, 1), (1, 2), (2, 3)]);
        // 2-0-3-1
        let b = g(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
    }

    #[test]
    fn triangles_agree() {
        let a = g(3, &[(0, 1), (1, 2), (0, 2)]);
        let b = g(3, &[(2, 1), (0, 2), (1, 0)]);
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let s4 = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(canonical_code(&p4).unwrap(), canonical_code(&s4).unwrap());
    }

    #[test]
    fn level_sequences_order_children_descending() {
        // root 0 with a leaf child and a child that has its own child
        let t = g(4, &[(0, 1), (0, 2), (2, 3)]);
        let seq = rooted_level_sequence(&t, 0, &[false; 4]);
        assert_eq!(seq, vec![0, 1, 2, 1]);
        assert_eq!(combine_children(vec![&[0], &[0, 1]]), vec![0, 1, 2, 1]);
    }

    #[test]
    fn centers() {
        assert_eq!(tree_centers(&g(4, &[(0, 1), (1, 2), (2, 3)])), vec![1, 2]);
        assert_eq!(tree_centers(&g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])), vec![2]);
        assert_eq!(tree_centers(&g(1, &[])), vec![0]);
        assert_eq!(tree_centers(&g(2, &[(0, 1)])), vec![0, 1]);
        assert_eq!(tree_centers(&g(4, &[(0, 1), (0, 2), (0, 3)])), vec![0]);
    }

    #[test]
    fn dihedral_minimum() {
        assert_eq!(dihedral_minimal(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(dihedral_minimal(&[3, 2, 1]), vec![1, 2, 3]);
        assert_eq!(dihedral_minimal(&[2, 1, 1, 3]), vec![1, 1, 2, 3]);
        assert!(is_dihedral_minimal(&[1, 1, 2, 3]));
        assert!(!is_dihedral_minimal(&[1, 3, 2, 1]));
        assert!(is_dihedral_minimal(&[1, 2, 1, 2]));
        assert!(!is_dihedral_minimal(&[1, 2, 2, 1, 1]));
        for v in [[1, 2, 3, 1, 2], [1, 1, 1, 2, 1], [0, 5, 0, 4, 0]] {
            assert_eq!(is_dihedral_minimal(&v), dihedral_minimal(&v) == v.to_vec(), "{v:?}");
        }
    }

    #[test]
    fn general_graphs() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let k4b = k4.relabeled(&[3, 1, 0, 2]);
        assert_eq!(canonical_code(&k4).unwrap(), canonical_code(&k4b).unwrap());
        // C4 plus chord vs K4 minus nothing
        let diamond = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let paw_plus = g(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (1, 3)]);
        assert_eq!(canonical_code(&diamond).unwrap(), canonical_code(&paw_plus).unwrap());
        assert_ne!(canonical_code(&diamond).unwrap(), canonical_code(&k4).unwrap());
    }

    #[test]
    fn too_large_general_graph() {
        let n = 11;
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.push((0, 5));
        let big = g(n, &edges);
        assert!(matches!(canonical_code(&big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn hex_round_trip() {
        let code = canonical_code(&g(3, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        assert_eq!(CanonicalCode::from_hex(&code.to_hex()).unwrap(), code);
    }
}
