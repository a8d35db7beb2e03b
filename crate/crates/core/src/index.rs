//! Distance-based indices and the unicyclic decomposition identities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::UnicyclicSpec;
use crate::graph::{cycle_distance, DistanceMatrix, Edge, Graph, Vertex};
use crate::q4::Q4;

/// Vertices strictly closer to `u`, strictly closer to `v`, and equidistant,
/// for the edge `uv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    pub n_u: usize,
    pub n_v: usize,
    pub n_0: usize,
}

/// Edge counts for `e = uv`; `e` itself is counted in `m_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePartition {
    pub m_u: usize,
    pub m_v: usize,
    pub m_0: usize,
}

fn check_edge(graph: &Graph, e: Edge) -> Result<()> {
    graph.edge_index(e.0, e.1).map(|_| ())
}

pub fn vertex_partition(graph: &Graph, e: Edge, dm: &DistanceMatrix) -> Result<VertexPartition> {
    check_edge(graph, e)?;
    let (u, v) = e;
    let (ru, rv) = (dm.row(u), dm.row(v));
    let mut p = VertexPartition { n_u: 0, n_v: 0, n_0: 0 };
    for w in 0..graph.n() {
        match ru[w].cmp(&rv[w]) {
            std::cmp::Ordering::Less => p.n_u += 1,
            std::cmp::Ordering::Greater => p.n_v += 1,
            std::cmp::Ordering::Equal => p.n_0 += 1,
        }
    }
    Ok(p)
}

pub fn edge_partition(graph: &Graph, e: Edge, dm: &DistanceMatrix) -> Result<EdgePartition> {
    check_edge(graph, e)?;
    let (u, v) = e;
    let (ru, rv) = (dm.row(u), dm.row(v));
    let mut p = EdgePartition { m_u: 0, m_v: 0, m_0: 0 };
    for &(x, y) in graph.edges() {
        let du = ru[x].min(ru[y]);
        let dv = rv[x].min(rv[y]);
        match du.cmp(&dv) {
            std::cmp::Ordering::Less => p.m_u += 1,
            std::cmp::Ordering::Greater => p.m_v += 1,
            std::cmp::Ordering::Equal => p.m_0 += 1,
        }
    }
    Ok(p)
}

/// All seven index values of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSuite {
    #[serde(rename = "W")]
    pub wiener: i64,
    #[serde(rename = "W_e_min")]
    pub edge_wiener_min: i64,
    #[serde(rename = "W_e_line")]
    pub edge_wiener_line: i64,
    #[serde(rename = "Sz")]
    pub szeged: Q4,
    #[serde(rename = "Sz_star")]
    pub revised_szeged: Q4,
    #[serde(rename = "Sz_e")]
    pub edge_szeged: i64,
    #[serde(rename = "Sz_e_star")]
    pub revised_edge_szeged: Q4,
}

pub fn index_suite(graph: &Graph) -> IndexSuite {
    index_suite_with(graph, &graph.distances())
}

pub fn index_suite_with(graph: &Graph, dm: &DistanceMatrix) -> IndexSuite {
    let n = graph.n();
    let m = graph.m();
    let wiener = dm.transmissions().iter().sum::<u64>() as i64 / 2;

    let edges = graph.edges();
    let mut edge_wiener_min = 0i64;
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            edge_wiener_min += dm.edge_to_edge(e, f) as i64;
        }
    }
    let pairs = (m * m.saturating_sub(1) / 2) as i64;

    let mut szeged = Q4::ZERO;
    let mut revised_szeged = Q4::ZERO;
    let mut edge_szeged = 0i64;
    let mut revised_edge_szeged = Q4::ZERO;
    for &e in edges {
        let vp = vertex_partition(graph, e, dm).expect("edge of graph");
        let ep = edge_partition(graph, e, dm).expect("edge of graph");
        szeged += Q4::from_int((vp.n_u * vp.n_v) as i64);
        revised_szeged += Q4::product_of_halves((2 * vp.n_u + vp.n_0) as i64, (2 * vp.n_v + vp.n_0) as i64);
        edge_szeged += (ep.m_u * ep.m_v) as i64;
        revised_edge_szeged += Q4::product_of_halves((2 * ep.m_u + ep.m_0) as i64, (2 * ep.m_v + ep.m_0) as i64);
    }
    debug_assert!(n > 0);
    IndexSuite {
        wiener,
        edge_wiener_min,
        edge_wiener_line: edge_wiener_min + pairs,
        szeged,
        revised_szeged,
        edge_szeged,
        revised_edge_szeged,
    }
}

/// `m³/4 − ¼ Σ (m_x − m_y)²`, using only the per-edge differences.
pub fn sz_e_star_closed_form(graph: &Graph) -> Q4 {
    let dm = graph.distances();
    let m = graph.m() as i64;
    let squares: i64 = graph
        .edges()
        .iter()
        .map(|&e| {
            let p = edge_partition(graph, e, &dm).expect("edge of graph");
            let diff = p.m_u as i64 - p.m_v as i64;
            diff * diff
        })
        .sum();
    Q4::from_quarters(m * m * m - squares)
}

/// Revised edge Szeged index in quarters, computed without building a
/// [`DistanceMatrix`]. `dist` is scratch space of at least `n * n` entries.
pub(crate) fn revised_edge_szeged_quarters(n: usize, edges: &[Edge], adjacency: &[Vec<Vertex>], dist: &mut Vec<u8>) -> i64 {
    dist.clear();
    dist.resize(n * n, u8::MAX);
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &y in &adjacency[x] {
                if row[y] == u8::MAX {
                    row[y] = row[x] + 1;
                    queue.push(y);
                }
            }
        }
    }
    let mut total = 0i64;
    for &(u, v) in edges {
        let (ru, rv) = (&dist[u * n..(u + 1) * n], &dist[v * n..(v + 1) * n]);
        let (mut mu, mut mv, mut m0) = (0i64, 0i64, 0i64);
        for &(x, y) in edges {
            let du = ru[x].min(ru[y]);
            let dv = rv[x].min(rv[y]);
            if du < dv {
                mu += 1;
            } else if dv < du {
                mv += 1;
            } else {
                m0 += 1;
            }
        }
        total += (2 * mu + m0) * (2 * mv + m0);
    }
    total
}

/// Which of the seven indices a report refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexKind {
    #[serde(rename = "W")]
    Wiener,
    #[serde(rename = "W_e_min")]
    EdgeWienerMin,
    #[serde(rename = "W_e_line")]
    EdgeWienerLine,
    #[serde(rename = "Sz")]
    Szeged,
    #[serde(rename = "Sz_star")]
    RevisedSzeged,
    #[serde(rename = "Sz_e")]
    EdgeSzeged,
    #[serde(rename = "Sz_e_star")]
    RevisedEdgeSzeged,
}

impl IndexKind {
    pub const ALL: [IndexKind; 7] = [
        IndexKind::Wiener,
        IndexKind::EdgeWienerMin,
        IndexKind::EdgeWienerLine,
        IndexKind::Szeged,
        IndexKind::RevisedSzeged,
        IndexKind::EdgeSzeged,
        IndexKind::RevisedEdgeSzeged,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Wiener => "W",
            IndexKind::EdgeWienerMin => "W_e_min",
            IndexKind::EdgeWienerLine => "W_e_line",
            IndexKind::Szeged => "Sz",
            IndexKind::RevisedSzeged => "Sz_star",
            IndexKind::EdgeSzeged => "Sz_e",
            IndexKind::RevisedEdgeSzeged => "Sz_e_star",
        }
    }

    pub fn of(self, suite: &IndexSuite) -> Q4 {
        match self {
            IndexKind::Wiener => Q4::from_int(suite.wiener),
            IndexKind::EdgeWienerMin => Q4::from_int(suite.edge_wiener_min),
            IndexKind::EdgeWienerLine => Q4::from_int(suite.edge_wiener_line),
            IndexKind::Szeged => suite.szeged,
            IndexKind::RevisedSzeged => suite.revised_szeged,
            IndexKind::EdgeSzeged => Q4::from_int(suite.edge_szeged),
            IndexKind::RevisedEdgeSzeged => suite.revised_edge_szeged,
        }
    }

    pub fn evaluate(self, graph: &Graph) -> Q4 {
        self.of(&index_suite(graph))
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown index {s:?}")))
    }
}

/// Several independent computations of the edge Szeged quantities of a
/// unicyclic graph. Every field computing the same quantity must agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub g: usize,
    pub delta_g: u8,
    pub tree_edges: Vec<usize>,
    pub root_transmissions: Vec<u64>,
    /// Sz*_e from the definition.
    #[serde(with = "crate::q4::with_decimal")]
    pub direct: Q4,
    /// Sz*_e from the edge Szeged index and the tree sizes.
    #[serde(with = "crate::q4::with_decimal")]
    pub from_edge_szeged: Q4,
    /// Sz*_e from the Szeged index and root transmissions.
    #[serde(with = "crate::q4::with_decimal")]
    pub from_szeged: Q4,
    /// Sz*_e from `s1 + s2` pushed through the edge Szeged route.
    #[serde(with = "crate::q4::with_decimal")]
    pub from_edge_sums: Q4,
    /// Sz_e from the definition.
    pub edge_szeged_direct: i64,
    /// Sz_e from the Szeged index and root transmissions.
    pub edge_szeged_from_szeged: i64,
    /// Σ m_u m_v over tree edges, from tree-local data.
    pub s1: i64,
    /// Σ m_u m_v over cycle edges, from cycle distances and tree sizes.
    pub s2: i64,
}

impl DecompositionReport {
    pub fn agrees(&self) -> bool {
        self.direct == self.from_edge_szeged
            && self.direct == self.from_szeged
            && self.direct == self.from_edge_sums
            && self.edge_szeged_direct == self.edge_szeged_from_szeged
            && self.edge_szeged_direct == self.s1 + self.s2
    }
}

/// The tree hanging from each cycle vertex, as its own graph rooted at 0,
/// in cycle order.
pub(crate) fn hanging_trees(graph: &Graph, cycle: &[Vertex]) -> Vec<Graph> {
    let n = graph.n();
    let mut on_cycle = vec![false; n];
    for &v in cycle {
        on_cycle[v] = true;
    }
    let mut local = vec![usize::MAX; n];
    cycle
        .iter()
        .map(|&root| {
            let mut order = vec![root];
            local[root] = 0;
            let mut edges = Vec::new();
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                for &y in graph.neighbors(x) {
                    if on_cycle[y] || local[y] != usize::MAX {
                        continue;
                    }
                    local[y] = order.len();
                    order.push(y);
                    edges.push((local[x], local[y]));
                }
            }
            for &v in &order {
                local[v] = usize::MAX;
            }
            Graph::from_edges_unchecked(order.len(), edges)
        })
        .collect()
}

/// `Sz*_e − Sz_e` in quarters for a unicyclic graph with the given girth and
/// tree edge counts.
fn revised_correction_quarters(n: i64, g: i64, tree_edges: &[usize]) -> i64 {
    let odd = g % 2 == 1;
    let squares: i64 = tree_edges.iter().map(|&e| (e * e) as i64).sum();
    let mut q = n * (2 * n - 1) + (2 * n - 3) * g;
    if odd {
        q += g * (5 - 4 * n) + 2 * (n * n - n) - squares;
    }
    q
}

pub fn decompose_unicyclic(spec: &UnicyclicSpec) -> Result<DecompositionReport> {
    decompose_graph(&spec.assemble())
}

pub fn decompose_graph(graph: &Graph) -> Result<DecompositionReport> {
    let cycle = graph.unique_cycle()?;
    let cyc = cycle.vertices();
    let g = cyc.len();
    let n = graph.n();
    let odd = g % 2 == 1;
    let trees = hanging_trees(graph, cyc);
    let tree_edges: Vec<usize> = trees.iter().map(Graph::m).collect();
    let tree_dms: Vec<DistanceMatrix> = trees.iter().map(Graph::distances).collect();
    let root_transmissions: Vec<u64> = tree_dms.iter().map(|dm| dm.transmission(0)).collect();

    let suite = index_suite(graph);
    let (ni, gi) = (n as i64, g as i64);
    let sum_d: i64 = root_transmissions.iter().map(|&d| d as i64).sum();
    let correction = revised_correction_quarters(ni, gi, &tree_edges);

    let from_edge_szeged = Q4::from_quarters(4 * suite.edge_szeged + correction);

    let szeged = suite.szeged.to_integer().expect("Szeged index is an integer");
    let edge_szeged_from_szeged = szeged + sum_d - ni * ni + if odd { ni * gi } else { gi };

    let squares: i64 = tree_edges.iter().map(|&e| (e * e) as i64).sum();
    let mut from_szeged_q = 4 * szeged + 4 * sum_d - (2 * ni + 1) * (ni - gi);
    if odd {
        from_szeged_q += gi + 2 * (ni * ni - ni) - squares;
    }

    let mut s1 = 0i64;
    for (t, dm) in trees.iter().zip(&tree_dms) {
        let e = t.m() as i64;
        let we_min = index_suite_with(t, dm).edge_wiener_min;
        s1 += we_min + (ni - e) * dm.transmission(0) as i64 - e * (ni - e);
    }

    let x = (gi - 2 + 1) / 2; // ceil((g-2)/2)
    let delta = odd as i64;
    let mut s2 = gi * x * x + x * gi * (ni - gi) - delta * x * (ni - gi);
    for i in 0..g {
        for j in 0..g {
            s2 += (tree_edges[i] * tree_edges[j] * cycle_distance(g, i, j)) as i64;
        }
    }
    if odd {
        for i in 0..g {
            for j in i + 1..g {
                s2 -= (tree_edges[i] * tree_edges[j]) as i64;
            }
        }
    }

    Ok(DecompositionReport {
        n,
        g,
        delta_g: odd as u8,
        tree_edges,
        root_transmissions,
        direct: suite.revised_edge_szeged,
        from_edge_szeged,
        from_szeged: Q4::from_quarters(from_szeged_q),
        from_edge_sums: Q4::from_quarters(4 * (s1 + s2) + correction),
        edge_szeged_direct: suite.edge_szeged,
        edge_szeged_from_szeged,
        s1,
        s2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &edges)
    }

    #[test]
    fn partitions() {
        let c3 = cycle(3);
        let dm = c3.distances();
        assert_eq!(vertex_partition(&c3, (0, 1), &dm).unwrap(), VertexPartition { n_u: 1, n_v: 1, n_0: 1 });
        assert_eq!(edge_partition(&c3, (0, 1), &dm).unwrap(), EdgePartition { m_u: 1, m_v: 1, m_0: 1 });
        let c4 = cycle(4);
        let dm = c4.distances();
        assert_eq!(vertex_partition(&c4, (0, 1), &dm).unwrap(), VertexPartition { n_u: 2, n_v: 2, n_0: 0 });
        assert_eq!(edge_partition(&c4, (0, 1), &dm).unwrap(), EdgePartition { m_u: 1, m_v: 1, m_0: 2 });
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let dm = p3.distances();
        assert_eq!(vertex_partition(&p3, (0, 1), &dm).unwrap(), VertexPartition { n_u: 1, n_v: 2, n_0: 0 });
        assert!(matches!(vertex_partition(&p3, (0, 2), &dm), Err(Error::EdgeNotFound(0, 2))));
    }

    #[test]
    fn small_suites() {
        let s = index_suite(&cycle(3));
        assert_eq!((s.szeged, s.revised_szeged), (Q4::from_int(3), Q4::from_quarters(27)));
        assert_eq!((s.edge_szeged, s.revised_edge_szeged, s.wiener), (3, Q4::from_quarters(27), 3));

        let s = index_suite(&cycle(4));
        assert_eq!((s.szeged, s.revised_szeged), (Q4::from_int(16), Q4::from_int(16)));
        assert_eq!((s.edge_szeged, s.revised_edge_szeged, s.wiener), (4, Q4::from_int(16), 8));

        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let s = index_suite(&p4);
        assert_eq!((s.wiener, s.edge_wiener_min, s.edge_wiener_line), (10, 1, 4));
        assert_eq!((s.edge_szeged, s.revised_edge_szeged), (1, Q4::from_quarters(19)));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(sz_e_star_closed_form(&cycle(3)), Q4::from_quarters(27));
        assert_eq!(sz_e_star_closed_form(&g(4, &[(0, 1), (1, 2), (2, 3)])), Q4::from_quarters(19));
        assert_eq!(sz_e_star_closed_form(&cycle(5)), Q4::from_quarters(125));
    }

    #[test]
    fn fast_path_matches_suite() {
        for graph in [cycle(3), cycle(6), g(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])] {
            let adjacency: Vec<Vec<usize>> = (0..graph.n()).map(|v| graph.neighbors(v).to_vec()).collect();
            let q = revised_edge_szeged_quarters(graph.n(), graph.edges(), &adjacency, &mut Vec::new());
            assert_eq!(Q4::from_quarters(q), index_suite(&graph).revised_edge_szeged);
        }
    }

    #[test]
    fn decomposition_triangle() {
        let r = decompose_graph(&cycle(3)).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.direct, Q4::from_quarters(27));
        assert_eq!(r.edge_szeged_direct, 3);
    }

    #[test]
    fn tree_edge_sum_uses_min_convention() {
        // C3 with a path of two edges hanging from one cycle vertex
        let graph = g(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]);
        let r = decompose_graph(&graph).unwrap();
        assert_eq!(r.s1, 3);
        assert!(r.agrees(), "{r:?}");
    }

    #[test]
    fn index_kind_names_round_trip() {
        for k in IndexKind::ALL {
            assert_eq!(k.name().parse::<IndexKind>().unwrap(), k);
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{}\"", k.name()));
        }
    }
}
