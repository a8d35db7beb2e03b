//! Isomorph-free generation of unicyclic graphs as necklaces of rooted
//! trees.
//!
//! A graph `C_g(T_1, ..., T_g)` is emitted exactly once: as the sequence of
//! catalog identifiers that is lexicographically smallest among all its
//! rotations and reflections. Work is split into blocks by girth and by the
//! order of the first tree.

use serde::{Deserialize, Serialize};

use super::trees::TreeCatalog;
use crate::canon::{is_dihedral_minimal, CanonicalCode};
use crate::error::{Error, Result};
use crate::families::UnicyclicSpec;
use crate::graph::{cycle_distance, Edge, Graph, Vertex};

/// Which unicyclic graphs to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationTask {
    pub n: usize,
    pub d: Option<usize>,
    pub g: Option<usize>,
}

impl GenerationTask {
    pub fn all(n: usize) -> Self {
        GenerationTask { n, d: None, g: None }
    }

    pub fn with_diameter(n: usize, d: usize) -> Self {
        GenerationTask { n, d: Some(d), g: None }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::BadParams(format!("unicyclic graphs need n >= 3, got {}", self.n)));
        }
        if let Some(d) = self.d {
            let valid = d >= 1 && (d + 2 <= self.n || (self.n == 3 && d == 1));
            if !valid {
                return Err(Error::BadParams(format!("diameter {d} outside 1..=n-2 for n={}", self.n)));
            }
        }
        if let Some(g) = self.g {
            if g < 3 || g > self.n {
                return Err(Error::BadParams(format!("girth {g} outside 3..=n for n={}", self.n)));
            }
        }
        Ok(())
    }
}

/// A unit of parallel work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub g: usize,
    /// Order of the first tree of the necklace.
    pub first_order: usize,
}

pub fn blocks(n: usize, girth: Option<usize>) -> Vec<Block> {
    let mut out = Vec::new();
    for g in 3..=n {
        if girth.is_some_and(|want| want != g) {
            continue;
        }
        for first_order in 1..=n - g + 1 {
            out.push(Block { g, first_order });
        }
    }
    out
}

/// A generated necklace. Borrowed from the generator; copy out what you
/// need.
pub struct Necklace<'a> {
    pub catalog: &'a TreeCatalog,
    pub ids: &'a [u32],
    pub diameter: usize,
}

impl Necklace<'_> {
    pub fn g(&self) -> usize {
        self.ids.len()
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        CanonicalCode::unicyclic_from_sequences(
            self.g(),
            self.ids.iter().map(|&id| self.catalog.entry(id).level.as_slice()),
        )
    }

    pub fn spec(&self) -> UnicyclicSpec {
        UnicyclicSpec::new(self.ids.iter().map(|&id| self.catalog.rooted_tree(id)).collect())
            .expect("generated necklaces have g >= 3")
    }

    /// Fills `edges` and `adjacency` with the assembled graph, using the same
    /// vertex layout as [`UnicyclicSpec::assemble`]. Returns the order.
    pub fn assemble_into(&self, edges: &mut Vec<Edge>, adjacency: &mut Vec<Vec<Vertex>>) -> usize {
        let g = self.g();
        edges.clear();
        edges.extend((0..g).map(|i| (i, (i + 1) % g)));
        let mut next = g;
        let mut local = Vec::new();
        for (i, &id) in self.ids.iter().enumerate() {
            let entry = self.catalog.entry(id);
            local.clear();
            local.push(i);
            for &p in &entry.parents {
                local.push(next);
                edges.push((local[p as usize], next));
                next += 1;
            }
        }
        for list in adjacency.iter_mut() {
            list.clear();
        }
        adjacency.resize_with(next.max(adjacency.len()), Vec::new);
        adjacency.truncate(next);
        for &(u, v) in edges.iter() {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        next
    }

    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut adjacency = Vec::new();
        let n = self.assemble_into(&mut edges, &mut adjacency);
        Graph::from_edges_unchecked(n, edges)
    }
}

/// Calls `visit` once per unicyclic graph of order `n` in `block` whose
/// diameter is at most `max_diameter` (pass `n` for no limit). The diameter
/// is computed exactly from tree heights and cycle distances.
pub fn for_each_in_block(
    catalog: &TreeCatalog,
    n: usize,
    block: Block,
    max_diameter: usize,
    mut visit: impl FnMut(&Necklace<'_>),
) {
    let g = block.g;
    assert!(catalog.max_order() + g >= n + 1, "catalog too small for n={n}, g={g}");
    let mut ids = vec![0u32; g];
    let mut heights = vec![0usize; g];
    for &first in catalog.ids_of_order(block.first_order) {
        let e = catalog.entry(first);
        ids[0] = first;
        heights[0] = e.height as usize;
        if e.diameter as usize > max_diameter || (g / 2).max(e.height as usize) > max_diameter {
            continue;
        }
        let state = Fill { catalog, g, max_diameter };
        state.fill(1, n - block.first_order, e.diameter as usize, &mut ids, &mut heights, &mut visit);
    }
}

struct Fill<'a> {
    catalog: &'a TreeCatalog,
    g: usize,
    max_diameter: usize,
}

impl Fill<'_> {
    fn fill(
        &self,
        pos: usize,
        remaining: usize,
        diameter: usize,
        ids: &mut [u32],
        heights: &mut [usize],
        visit: &mut impl FnMut(&Necklace<'_>),
    ) {
        let g = self.g;
        if pos == g {
            if is_dihedral_minimal(ids) {
                let diameter = diameter.max(g / 2);
                visit(&Necklace { catalog: self.catalog, ids, diameter });
            }
            return;
        }
        let slots_after = g - pos - 1;
        let lo = if slots_after == 0 { remaining } else { 1 };
        let hi = remaining - slots_after;
        for order in lo..=hi {
            let list = self.catalog.ids_of_order(order);
            let start = list.partition_point(|&id| id < ids[0]);
            for &id in &list[start..] {
                let e = self.catalog.entry(id);
                let h = e.height as usize;
                let mut d = diameter.max(e.diameter as usize);
                for i in 0..pos {
                    d = d.max(heights[i] + h + cycle_distance(g, i, pos));
                }
                if d > self.max_diameter {
                    continue;
                }
                ids[pos] = id;
                heights[pos] = h;
                self.fill(pos + 1, remaining - order, d, ids, heights, visit);
            }
        }
    }
}

/// All unicyclic graphs matching `task`, one per isomorphism class, ordered
/// by block and then by necklace.
pub fn unicyclic_graphs(task: GenerationTask) -> Result<impl Iterator<Item = (UnicyclicSpec, Graph)>> {
    task.validate()?;
    let n = task.n;
    let catalog = TreeCatalog::up_to(n - 2);
    let mut out = Vec::new();
    for block in blocks(n, task.g) {
        for_each_in_block(&catalog, n, block, task.d.unwrap_or(n), |nk| {
            if task.d.is_none_or(|d| d == nk.diameter) {
                out.push((nk.spec(), nk.graph()));
            }
        });
    }
    Ok(out.into_iter())
}

/// Number of unicyclic graphs of order `n`, by girth-independent count.
pub fn count_unicyclic(n: usize) -> u64 {
    let catalog = TreeCatalog::up_to(n.saturating_sub(2).max(1));
    let mut count = 0;
    for block in blocks(n, None) {
        for_each_in_block(&catalog, n, block, n, |_| count += 1);
    }
    count
}
