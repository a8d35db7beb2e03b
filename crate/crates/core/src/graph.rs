//! Simple connected undirected graphs, BFS distances and unique-cycle
//! extraction.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

/// Immutable simple connected graph on vertices `0..n`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted, so an edge
/// has the same identity in every derived structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Validates and builds a graph. Rejects loops, parallel edges and
    /// disconnected inputs, naming the offending element.
    pub fn new(n: usize, edges: &[Edge]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelEdge(w[0].0, w[0].1));
        }
        let graph = Self::from_sorted_edges(n, canonical);
        if let Some(v) = graph.first_unreachable() {
            return Err(Error::Disconnected(v));
        }
        Ok(graph)
    }

    /// Builds without validation. Callers guarantee a simple connected graph.
    pub(crate) fn from_edges_unchecked(n: usize, mut edges: Vec<Edge>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        let graph = Self::from_sorted_edges(n, edges);
        debug_assert!(graph.first_unreachable().is_none());
        graph
    }

    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    fn first_unreachable(&self) -> Option<Vertex> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Result<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).map_err(|_| Error::EdgeNotFound(u, v))
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n
    }

    pub fn is_unicyclic(&self) -> bool {
        self.m() == self.n
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges_unchecked(self.n, edges)
    }

    /// All-pairs BFS distances.
    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::compute(self)
    }

    pub fn diameter(&self) -> usize {
        self.distances().diameter()
    }

    /// The unique cycle of a unicyclic graph.
    pub fn unique_cycle(&self) -> Result<CycleInfo> {
        match self.m().cmp(&self.n) {
            std::cmp::Ordering::Less => return Err(Error::NoCycle),
            std::cmp::Ordering::Greater => {
                return Err(Error::NotUnicyclic { n: self.n, edges: self.m() })
            }
            std::cmp::Ordering::Equal => {}
        }
        // Peel leaves; what survives is the cycle.
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut leaves: Vec<Vertex> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        while let Some(v) = leaves.pop() {
            removed[v] = true;
            for &w in &self.adjacency[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        leaves.push(w);
                    }
                }
            }
        }
        let on_cycle = |v: Vertex| !removed[v];
        // Walk from the smallest cycle vertex towards its smaller cycle neighbour.
        let start = (0..self.n).find(|&v| on_cycle(v)).ok_or(Error::NoCycle)?;
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adjacency[cur]
                .iter()
                .copied()
                .find(|&w| on_cycle(w) && w != prev)
                .expect("cycle vertex has two cycle neighbours");
            if next == start {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        Ok(CycleInfo { vertices: cycle })
    }
}

/// Exact BFS distances together with diameter and transmissions `D(v|G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    diameter: usize,
    transmissions: Vec<u64>,
}

impl DistanceMatrix {
    fn compute(graph: &Graph) -> Self {
        let n = graph.n();
        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for source in 0..n {
            let row = &mut dist[source * n..(source + 1) * n];
            row[source] = 0;
            queue.clear();
            queue.push_back(source);
            while let Some(v) = queue.pop_front() {
                let next = row[v] + 1;
                for &w in graph.neighbors(v) {
                    if row[w] == u32::MAX {
                        row[w] = next;
                        queue.push_back(w);
                    }
                }
            }
        }
        let diameter = dist.iter().copied().max().unwrap_or(0) as usize;
        let transmissions = dist
            .chunks_exact(n)
            .map(|row| row.iter().map(|&d| d as u64).sum())
            .collect();
        DistanceMatrix { n, dist, diameter, transmissions }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[u * self.n + v] as usize
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn transmissions(&self) -> &[u64] {
        &self.transmissions
    }

    /// `D(v|G)`, the sum of distances from `v`.
    pub fn transmission(&self, v: Vertex) -> u64 {
        self.transmissions[v]
    }

    /// Distance from an edge to a vertex: the nearer endpoint counts.
    #[inline]
    pub fn edge_to_vertex(&self, e: Edge, w: Vertex) -> usize {
        self.get(e.0, w).min(self.get(e.1, w))
    }

    /// Distance between two edges: minimum over the four endpoint pairs.
    pub fn edge_to_edge(&self, e: Edge, f: Edge) -> usize {
        self.edge_to_vertex(f, e.0).min(self.edge_to_vertex(f, e.1))
    }
}

/// The unique cycle `v_1 v_2 ... v_g v_1` of a unicyclic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleInfo {
    vertices: Vec<Vertex>,
}

impl CycleInfo {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Cycle length, the girth of a unicyclic graph.
    pub fn g(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let g = self.g();
        (0..g).map(move |i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % g]);
            (a.min(b), a.max(b))
        })
    }
}

/// Distance between positions `i` and `j` (any base) on a cycle of length `g`.
#[inline]
pub fn cycle_distance(g: usize, i: usize, j: usize) -> usize {
    let diff = i.abs_diff(j) % g;
    diff.min(g - diff)
}

/// `(d(v_2,v_j) - d(v_1,v_j) + 1, d(v_g,v_j) - d(v_1,v_j) + 1)` on `C_g`,
/// with vertices numbered from 1.
pub fn cycle_distance_deltas(g: usize, j: usize) -> Result<(i64, i64)> {
    if g < 3 {
        return Err(Error::IndexOutOfRange { index: g, reason: "cycle length must be at least 3".into() });
    }
    if !(2..g).contains(&j) {
        return Err(Error::IndexOutOfRange { index: j, reason: format!("need 2 <= j <= {}", g - 1) });
    }
    let d = |a: usize, b: usize| cycle_distance(g, a, b) as i64;
    Ok((d(2, j) - d(1, j) + 1, d(g, j) - d(1, j) + 1))
}
