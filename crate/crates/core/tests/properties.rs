//! Randomised invariants. Proptest runs from a fixed seed so failures
//! reproduce; the hand-rolled samplers use fixed ChaCha seeds.

mod common;

use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use szeged_core::index::{edge_partition, vertex_partition};
use szeged_core::transform::sample::{draw_many, random_tree, REWRITES};
use szeged_core::{
    canonical_code, from_edge_list, from_graph6, index_suite, to_edge_list, to_graph6, Graph, RootedTree, UnicyclicSpec,
};

const PROPTEST_SEED: u64 = 0x5eed_2025;

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(PROPTEST_SEED), failure_persistence: None, ..Config::default() }
}

fn tree_edges(parents: &[Index]) -> Vec<(usize, usize)> {
    parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect()
}

/// A tree from `parents` plus one extra edge, if the endpoints are distinct
/// and not already adjacent.
fn unicyclic(parents: &[Index], a: Index, b: Index) -> Option<Graph> {
    let n = parents.len() + 1;
    let mut edges = tree_edges(parents);
    let (x, y) = (a.index(n), b.index(n));
    let e = (x.min(y), x.max(y));
    if x == y || edges.iter().any(|&(p, c)| (p.min(c), p.max(c)) == e) {
        return None;
    }
    edges.push(e);
    Some(Graph::new(n, &edges).unwrap())
}

fn permutation(n: usize, keys: &[Index]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for (i, k) in keys.iter().enumerate().take(n) {
        let j = k.index(n - i) + i;
        perm.swap(i, j);
    }
    perm
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn relabelling_preserves_codes_and_indices(
        parents in prop::collection::vec(any::<Index>(), 2..16),
        a in any::<Index>(),
        b in any::<Index>(),
        keys in prop::collection::vec(any::<Index>(), 17),
    ) {
        let Some(g) = unicyclic(&parents, a, b) else { return Ok(()) };
        let h = g.relabeled(&permutation(g.n(), &keys));
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        prop_assert_eq!(index_suite(&g), index_suite(&h));
        prop_assert_eq!(g.diameter(), h.diameter());
    }

    #[test]
    fn text_formats_round_trip(
        parents in prop::collection::vec(any::<Index>(), 0..70),
        a in any::<Index>(),
        b in any::<Index>(),
    ) {
        let g = unicyclic(&parents, a, b)
            .unwrap_or_else(|| Graph::new(parents.len() + 1, &tree_edges(&parents)).unwrap());
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&from_edge_list(&to_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn partitions_cover_every_vertex_and_edge(
        parents in prop::collection::vec(any::<Index>(), 1..14),
        extra in prop::collection::vec((any::<Index>(), any::<Index>()), 0..4),
    ) {
        let n = parents.len() + 1;
        let mut edges = tree_edges(&parents);
        for (a, b) in extra {
            let (x, y) = (a.index(n), b.index(n));
            let e = (x.min(y), x.max(y));
            if x != y && !edges.iter().any(|&(p, c)| (p.min(c), p.max(c)) == e) {
                edges.push(e);
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let dm = g.distances();
        for &e in g.edges() {
            let vp = vertex_partition(&g, e, &dm).unwrap();
            let ep = edge_partition(&g, e, &dm).unwrap();
            prop_assert_eq!(vp.n_u + vp.n_v + vp.n_0, n);
            prop_assert_eq!(ep.m_u + ep.m_v + ep.m_0, g.m());
            prop_assert!(ep.m_0 >= 1);
        }
        // distances: symmetric, zero diagonal, adjacency iff 1, triangle inequality
        for u in 0..n {
            prop_assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
        let v = common::values(n, &edges);
        let s = index_suite(&g);
        prop_assert_eq!(
            (s.wiener, s.edge_wiener_min, s.edge_wiener_line, s.edge_szeged),
            (v.wiener, v.edge_wiener_min, v.edge_wiener_line, v.edge_szeged)
        );
        prop_assert_eq!(s.szeged.quarters(), 4 * v.szeged);
        prop_assert_eq!(s.revised_szeged.quarters(), v.revised_szeged_q);
        prop_assert_eq!(s.revised_edge_szeged.quarters(), v.revised_edge_szeged_q);
    }

    #[test]
    fn bipartite_graphs_have_equal_szeged_and_revised_szeged(
        parents in prop::collection::vec(any::<Index>(), 1..16),
        a in any::<Index>(),
        b in any::<Index>(),
        close_cycle in any::<bool>(),
    ) {
        let n = parents.len() + 1;
        let g = if close_cycle {
            let Some(g) = unicyclic(&parents, a, b) else { return Ok(()) };
            if g.unique_cycle().unwrap().g() % 2 == 1 {
                return Ok(());
            }
            g
        } else {
            Graph::new(n, &tree_edges(&parents)).unwrap()
        };
        let s = index_suite(&g);
        prop_assert_eq!(s.szeged, s.revised_szeged);
    }
}

fn attach(base: &Graph, at: usize, tree: &RootedTree) -> Graph {
    let n = base.n();
    let t = tree.graph();
    // tree vertex r goes to `at`; the others follow the base vertices
    let mut map = vec![0; t.n()];
    let mut next = n;
    for (v, slot) in map.iter_mut().enumerate() {
        if v == tree.root() {
            *slot = at;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = base.edges().to_vec();
    edges.extend(t.edges().iter().map(|&(x, y)| (map[x], map[y])));
    Graph::new(next, &edges).unwrap()
}

/// Two different attachments with the same number of edges leave the sum
/// of `m_u m_v` over the edges of the base graph unchanged.
#[test]
fn gluing_is_local() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    let mut instances = 0;
    while instances < 250 {
        let order = rng.gen_range(2..10);
        let base_tree = random_tree(&mut rng, order);
        let base = if rng.gen_bool(0.5) {
            let g = rng.gen_range(3..7);
            let mut trees = vec![base_tree];
            for _ in 1..g {
                let order = rng.gen_range(1..4);
                trees.push(random_tree(&mut rng, order));
            }
            UnicyclicSpec::new(trees).unwrap().assemble()
        } else {
            base_tree.graph().clone()
        };
        let size = rng.gen_range(1..8);
        let first = random_tree(&mut rng, size + 1);
        let second = random_tree(&mut rng, size + 1);
        if first.level_code() == second.level_code() {
            continue;
        }
        let at = rng.gen_range(0..base.n());
        let sums: Vec<usize> = [first, second]
            .iter()
            .map(|t| {
                let g = attach(&base, at, t);
                let dm = g.distances();
                base.edges()
                    .iter()
                    .map(|&e| {
                        let p = edge_partition(&g, e, &dm).unwrap();
                        p.m_u * p.m_v
                    })
                    .sum()
            })
            .collect();
        assert_eq!(sums[0], sums[1], "base {} at {at}", to_graph6(&base));
        instances += 1;
    }
}

#[test]
fn rewrites_keep_the_order() {
    for name in REWRITES {
        for inst in draw_many(name, 200, 7).unwrap() {
            let applied = inst.build().unwrap();
            let (before, after) = (&applied.before, &applied.after);
            assert_eq!(before.n(), after.n(), "{}", inst.describe());
            assert_eq!(before.m(), after.m(), "{}", inst.describe());
            if name == "contract_cycle" {
                let (g0, g1) = (before.unique_cycle().unwrap().g(), after.unique_cycle().unwrap().g());
                assert_eq!(g1 + 2, g0, "{}", inst.describe());
            }
        }
    }
}
