//! Seeded random instances of every rewrite and pair check, drawn inside
//! the parameter ranges each prediction is stated for.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply, Applied, MergeDirection, PairCheck, Rewrite, TransformReport};
use crate::error::{Error, Result};
use crate::families::{broom, caterpillar, star, RootedTree, UnicyclicSpec};
use crate::index::IndexKind;

/// A rewrite together with the graph it acts on, or a pair check.
#[derive(Clone, Debug)]
pub enum Instance {
    Rewrite { spec: UnicyclicSpec, rewrite: Rewrite },
    Pair(PairCheck),
}

impl Instance {
    pub fn name(&self) -> &'static str {
        match self {
            Instance::Rewrite { rewrite, .. } => rewrite.name(),
            Instance::Pair(p) => p.name(),
        }
    }

    pub fn build(&self) -> Result<Applied> {
        match self {
            Instance::Rewrite { spec, rewrite } => apply(spec, rewrite),
            Instance::Pair(p) => p.build(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Instance::Rewrite { rewrite, .. } => rewrite.to_string(),
            Instance::Pair(p) => p.to_string(),
        }
    }

    /// Checks against every index the prediction is stated for.
    pub fn check_all(&self) -> Result<Vec<TransformReport>> {
        let applied = self.build()?;
        applied.indices.iter().map(|&k| applied.report(self.describe(), k)).collect()
    }

    pub fn check(&self, index: IndexKind) -> Result<TransformReport> {
        self.build()?.report(self.describe(), index)
    }
}

pub const REWRITES: [&str; 9] = [
    "star_collapse",
    "reroot_balanced",
    "flatten_caterpillar",
    "shift_pendants",
    "merge_stars",
    "contract_cycle",
    "endblock_shift",
    "rotate_path",
    "c4_consolidate",
];

pub const PAIRS: [&str; 20] = [
    "c3_path_to_broom",
    "c3_balance_paths",
    "g3_pendants_on_path",
    "g3_split_pendants",
    "g3_path_vs_broom",
    "g4_pendant_position",
    "g4_shape2_balance",
    "g4_shape2_to_shape1",
    "g4_shape2_root_pendants",
    "g4_shape3_balance",
    "g4_shape3_to_shape2",
    "tail_pendant",
    "central_pendant",
    "longest_diameter",
    "second_diameter",
    "mid_diameter",
    "pendant_path_vs_broom",
    "pendant_position_d4",
    "pendant_position_d5",
    "diameter_three",
];

/// Uniform random recursive tree: vertex `i` hangs from a uniform earlier vertex.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, order: usize) -> RootedTree {
    let parents: Vec<usize> = (1..order.max(1)).map(|i| rng.gen_range(0..i)).collect();
    RootedTree::from_parents(&parents).expect("parents precede children")
}

fn random_trees<R: Rng + ?Sized>(rng: &mut R, count: usize, max_order: usize) -> Vec<RootedTree> {
    (0..count).map(|_| {
        let order = rng.gen_range(1..=max_order);
        random_tree(rng, order)
    }).collect()
}

/// Places `fixed[j]` at cycle position `at + j` (1-based, wrapping) and
/// fills the rest with random trees.
fn spec_with<R: Rng + ?Sized>(rng: &mut R, g: usize, at: usize, fixed: Vec<RootedTree>, max_order: usize) -> UnicyclicSpec {
    let mut trees = random_trees(rng, g, max_order);
    for (j, t) in fixed.into_iter().enumerate() {
        trees[(at - 1 + j) % g] = t;
    }
    UnicyclicSpec::new(trees).expect("g >= 3")
}

fn pendants_star(count: usize) -> RootedTree {
    star(count + 1).expect("nonempty")
}

fn draw_rewrite<R: Rng + ?Sized>(name: &str, rng: &mut R) -> Result<Instance> {
    let (spec, rewrite) = match name {
        "star_collapse" | "flatten_caterpillar" | "endblock_shift" => {
            let g = rng.gen_range(3..=6);
            let at = rng.gen_range(1..=g);
            let spec = UnicyclicSpec::new(random_trees(rng, g, 7))?;
            let rewrite = match name {
                "star_collapse" => Rewrite::StarCollapse { at },
                "flatten_caterpillar" => Rewrite::FlattenCaterpillar { at },
                _ => Rewrite::EndblockShift { at },
            };
            (spec, rewrite)
        }
        "reroot_balanced" => {
            let g = rng.gen_range(3..=6);
            let at = rng.gen_range(1..=g);
            let t1 = loop {
                let order = rng.gen_range(4..=10);
                let t = random_tree(rng, order);
                let d = t.graph().diameter();
                if d >= 2 && d + 2 <= order {
                    break t;
                }
            };
            (spec_with(rng, g, at, vec![t1], 5), Rewrite::RerootBalanced { at })
        }
        "shift_pendants" => {
            let g = rng.gen_range(3..=6);
            let at = rng.gen_range(1..=g);
            let l = rng.gen_range(2..=6);
            let mut a: Vec<usize> = (0..=l).map(|j| if j == 0 { 0 } else { rng.gen_range(0..=3) }).collect();
            let k = rng.gen_range(1..l);
            let backward = rng.gen_bool(0.5);
            let moved = if backward { k + 1 } else { k };
            a[moved] = a[moved].max(1);
            (spec_with(rng, g, at, vec![caterpillar(&a)?], 5), Rewrite::ShiftPendants { at, k, backward })
        }
        "merge_stars" => {
            let g = rng.gen_range(3..=7);
            let mut positions: Vec<usize> = (1..=g).collect();
            positions.shuffle(rng);
            let (k, l) = (positions[0], positions[1]);
            let mut trees = random_trees(rng, g, 5);
            for p in [k, l] {
                trees[p - 1] = broom(rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen_range(1..=4));
            }
            let direction = *[MergeDirection::Auto, MergeDirection::IntoK, MergeDirection::IntoL].choose(rng).unwrap();
            (UnicyclicSpec::new(trees)?, Rewrite::MergeStars { k, l, direction })
        }
        "contract_cycle" => {
            let g = rng.gen_range(5..=8);
            let at = rng.gen_range(1..=g);
            let case = rng.gen_range(1..=3u8);
            let mut trees = random_trees(rng, g, 5);
            let pendants = |rng: &mut R| pendants_star(rng.gen_range(0..=3));
            match case {
                1 => {
                    trees[0] = broom(rng.gen_range(1..=4), rng.gen_range(0..=3), rng.gen_range(0..=3));
                    trees[1] = pendants(rng);
                    trees[g - 1] = RootedTree::trivial();
                }
                2 => {
                    trees[0] = pendants(rng);
                    trees[1] = broom(rng.gen_range(1..=4), 0, rng.gen_range(0..=3));
                    trees[g - 1] = pendants(rng);
                }
                _ => {
                    let l1 = rng.gen_range(1..=4);
                    trees[0] = broom(l1, 0, rng.gen_range(0..=3));
                    trees[1] = pendants(rng);
                    trees[g - 1] = pendants(rng);
                    // the middle trees must carry at least l1 edges
                    let extra = rng.gen_range(0..=2);
                    trees[2] = RootedTree::glue(&[trees[2].clone(), broom(l1 + extra, 0, 0)]);
                }
            }
            trees.rotate_right(at - 1);
            (UnicyclicSpec::new(trees)?, Rewrite::ContractCycle { at, case })
        }
        "rotate_path" => {
            let at = rng.gen_range(1..=3);
            let l1 = rng.gen_range(0..=4);
            let t1 = broom(l1, 0, rng.gen_range(0..=3));
            let t2 = pendants_star(rng.gen_range(0..=3));
            let l2 = l1 + rng.gen_range(1..=4);
            let mut counts = vec![0; l2 + 1];
            if l2 >= 2 {
                counts[l2 - rng.gen_range(1..l2)] = rng.gen_range(0..=3);
            }
            let t3 = caterpillar(&counts)?;
            (spec_with(rng, 3, at, vec![t1, t2, t3], 1), Rewrite::RotatePath { at, l1 })
        }
        "c4_consolidate" => {
            let at = rng.gen_range(1..=4);
            let case = rng.gen_range(1..=3u8);
            let mut trees = random_trees(rng, 4, 6);
            if case == 3 {
                trees[3] = RootedTree::trivial();
            }
            trees.rotate_right(at - 1);
            (UnicyclicSpec::new(trees)?, Rewrite::C4Consolidate { at, case })
        }
        other => return Err(Error::BadParams(format!("no sampler for {other:?}"))),
    };
    Ok(Instance::Rewrite { spec, rewrite })
}

fn draw_pair<R: Rng + ?Sized>(name: &str, rng: &mut R) -> Result<PairCheck> {
    use PairCheck::*;
    let mut r = |lo: usize, hi: usize| rng.gen_range(lo..=hi);
    Ok(match name {
        "c3_path_to_broom" | "c3_balance_paths" => {
            let l1 = r(0, 8);
            let (l2, a) = (l1 + r(3, 10), r(0, 8));
            if name == "c3_path_to_broom" {
                C3PathToBroom { l1, l2, a }
            } else {
                C3BalancePaths { l1, l2, a }
            }
        }
        "g3_pendants_on_path" => G3PendantsOnPath { l1: r(0, 8), l2: r(0, 8), a: r(1, 8) },
        "g3_split_pendants" => G3SplitPendants { l1: r(0, 8), l2: r(0, 8), a: r(1, 8) },
        "g3_path_vs_broom" => loop {
            let (l1, a) = (r(1, 8), r(1, 8));
            let l2 = l1 + r(0, 2);
            if a + l1 + l2 > 10 {
                break G3PathVsBroom { l1, l2, a };
            }
        },
        "g4_pendant_position" => {
            let shape = r(1, 3) as u8;
            let a = r(1, 6);
            match shape {
                1 => {
                    let l1 = r(0, 6);
                    let l2 = (l1 + r(0, 6)).max(1);
                    G4PendantPosition { shape, k: r(2, 3) as u8, l1, l2, a, b: 0, i: 0 }
                }
                2 => {
                    let l1 = r(1, 6);
                    let l2 = l1 + r(0, 6);
                    let b = r(0, 4);
                    let i = if b > 0 { r(1, l2) } else { 0 };
                    G4PendantPosition { shape, k: r(3, 4) as u8, l1, l2, a, b, i }
                }
                _ => {
                    let l1 = r(0, 6);
                    let l2 = (l1 + r(0, 6)).max(1);
                    let b = r(0, 4);
                    let i = if b > 0 { r(1, l2) } else { 0 };
                    G4PendantPosition { shape, k: 1, l1, l2, a, b, i }
                }
            }
        }
        "g4_shape2_balance" => loop {
            let l1 = r(0, 6);
            let l2 = (l1 + r(0, 6)).max(2);
            let (a, b) = (r(0, 5), r(0, 5));
            let i = r(1, l2 - 1);
            if l2 >= l1 + 2 || a + b > 0 {
                break G4Shape2Balance { l1, l2, a, b, i };
            }
        },
        "g4_shape2_to_shape1" | "g4_shape3_to_shape2" => loop {
            let l1 = if name == "g4_shape2_to_shape1" { r(0, 6) } else { r(1, 6) };
            let l2 = (l1 + r(0, 6)).max(1);
            let (a, b) = (r(1, 6), r(0, 6));
            let i = r(1, l2);
            if a + b + l1 + l2 + 4 >= 14 {
                break if name == "g4_shape2_to_shape1" {
                    G4Shape2ToShape1 { l1, l2, a, b, i }
                } else {
                    G4Shape3ToShape2 { l1, l2, a, b, i }
                };
            }
        },
        "g4_shape2_root_pendants" => loop {
            let l1 = r(1, 6);
            let (l2, b) = (l1 + r(0, 6), r(1, 8));
            if b + l1 + l2 + 4 >= 14 {
                break G4Shape2RootPendants { l1, l2, b };
            }
        },
        "g4_shape3_balance" => {
            let l1 = r(1, 6);
            let l2 = (l1 + r(0, 6)).max(2);
            G4Shape3Balance { l1, l2, a: r(0, 5), b: r(0, 5), i: r(1, l2 - 1) }
        }
        "tail_pendant" => TailPendant { d: r(11, 36) },
        "central_pendant" => CentralPendant { d: r(12, 36) },
        "longest_diameter" => LongestDiameter { n: r(16, 40) },
        "second_diameter" => SecondDiameter { n: r(15, 40) },
        "mid_diameter" | "pendant_path_vs_broom" => {
            let n = r(16, 36);
            let d = r(4, n - 4);
            if name == "mid_diameter" {
                MidDiameter { n, d }
            } else {
                PendantPathVsBroom { n, d }
            }
        }
        "pendant_position_d4" => PendantPositionD4 { n: r(16, 40) },
        "pendant_position_d5" => PendantPositionD5 { n: r(16, 40), i: r(1, 3) },
        "diameter_three" => DiameterThree { n: r(16, 40) },
        other => return Err(Error::BadParams(format!("no sampler for {other:?}"))),
    })
}

/// One random instance of the named rewrite or pair check.
pub fn draw<R: Rng + ?Sized>(name: &str, rng: &mut R) -> Result<Instance> {
    if REWRITES.contains(&name) {
        draw_rewrite(name, rng)
    } else {
        draw_pair(name, rng).map(Instance::Pair)
    }
}

/// `count` instances from a ChaCha stream seeded with `seed`; the same
/// arguments always give the same instances.
pub fn draw_many(name: &str, count: usize, seed: u64) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| draw(name, &mut rng)).collect()
}
