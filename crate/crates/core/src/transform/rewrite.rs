//! Rewrites of an arbitrary `C_g(T_1, .., T_g)`.
//!
//! Cycle positions are 1-based: `at = 1` means `v_1`. Rewrites that act
//! "at `v_1`" take an `at` position and first rotate the cycle so that
//! `v_at` becomes `v_1`; the `before` graph of the result is that rotated
//! assembly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::reading::{branch_sizes, broom_reading, caterpillar_reading, deepest_path, is_root_star, layout};
use super::{rewire, Applied, Prediction, TransformReport, Words};
use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::families::{broom, caterpillar, star, t_ndd, RootedTree, UnicyclicSpec};
use crate::graph::{cycle_distance, Edge, Graph, Vertex};
use crate::index::IndexKind;

const EDGE_BOTH: &[IndexKind] = &[IndexKind::EdgeSzeged, IndexKind::RevisedEdgeSzeged];
const REVISED: &[IndexKind] = &[IndexKind::RevisedEdgeSzeged];
const EDGE: &[IndexKind] = &[IndexKind::EdgeSzeged];

/// Which tree receives the pendants in [`Rewrite::MergeStars`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MergeDirection {
    /// Pick by comparing `2N_l + δ|V(T_l)|/2` with `2N_k + δ|V(T_k)|/2`;
    /// ties go to `T_k`.
    #[default]
    Auto,
    IntoK,
    IntoL,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rewrite", rename_all = "snake_case")]
pub enum Rewrite {
    /// `T_1` becomes the star of the same order centered at `v_1`.
    StarCollapse { at: usize },
    /// `T_1` of diameter `d` becomes `T_{n_1,d,⌊d/2⌋}` rooted at the middle
    /// of its long path.
    RerootBalanced { at: usize },
    /// Branches along the path from a deepest vertex to `v_1` are flattened
    /// into pendants at their attachment points.
    FlattenCaterpillar { at: usize },
    /// `T_1 = P(0, a_1, .., a_l)`: pendants at `u_k` move to `u_{k+1}`
    /// (forward) or those at `u_{k+1}` move to `u_k` (backward).
    ShiftPendants {
        at: usize,
        k: usize,
        #[serde(default)]
        backward: bool,
    },
    /// Brooms at `v_k` and `v_l`: the root pendants of one move to the other.
    MergeStars {
        k: usize,
        l: usize,
        #[serde(default)]
        direction: MergeDirection,
    },
    /// `g >= 5`: drop `v_2` and `v_g` from the cycle and absorb `T_2`, `T_g`
    /// into `T_1`, in one of three configurations.
    ContractCycle { at: usize, case: u8 },
    /// Every tree neighbour of `v_2 .. v_g` is re-attached to `v_1`.
    EndblockShift { at: usize },
    /// On `C_3`: the vertex `v_3` swaps places with its tree neighbour and
    /// moves to the end of the path in `T_1`.
    RotatePath { at: usize, l1: usize },
    /// On `C_4`: trees are merged into `T_1` (case 1: all; case 2: `T_3`
    /// and `T_4`; case 3: `T_2` and `T_4`).
    C4Consolidate { at: usize, case: u8 },
}

impl Rewrite {
    pub fn name(&self) -> &'static str {
        match self {
            Rewrite::StarCollapse { .. } => "star_collapse",
            Rewrite::RerootBalanced { .. } => "reroot_balanced",
            Rewrite::FlattenCaterpillar { .. } => "flatten_caterpillar",
            Rewrite::ShiftPendants { .. } => "shift_pendants",
            Rewrite::MergeStars { .. } => "merge_stars",
            Rewrite::ContractCycle { .. } => "contract_cycle",
            Rewrite::EndblockShift { .. } => "endblock_shift",
            Rewrite::RotatePath { .. } => "rotate_path",
            Rewrite::C4Consolidate { .. } => "c4_consolidate",
        }
    }
}

impl fmt::Display for Rewrite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            Rewrite::StarCollapse { at }
            | Rewrite::RerootBalanced { at }
            | Rewrite::FlattenCaterpillar { at }
            | Rewrite::EndblockShift { at } => write!(f, "{name} at={at}"),
            Rewrite::ShiftPendants { at, k, backward } => {
                write!(f, "{name} at={at} k={k}{}", if *backward { " backward" } else { "" })
            }
            Rewrite::MergeStars { k, l, direction } => {
                let dir = match direction {
                    MergeDirection::Auto => "auto",
                    MergeDirection::IntoK => "into_k",
                    MergeDirection::IntoL => "into_l",
                };
                write!(f, "{name} k={k} l={l} direction={dir}")
            }
            Rewrite::ContractCycle { at, case } | Rewrite::C4Consolidate { at, case } => {
                write!(f, "{name} at={at} case={case}")
            }
            Rewrite::RotatePath { at, l1 } => write!(f, "{name} at={at} l1={l1}"),
        }
    }
}

impl FromStr for Rewrite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w = Words::parse(s)?;
        let at = || w.num_or("at", Some(1));
        let case = || -> Result<u8> {
            let c = w.num("case")?;
            u8::try_from(c).map_err(|_| Error::Parse(format!("{}: case={c} out of range", w.name)))
        };
        Ok(match w.name {
            "star_collapse" | "reroot_balanced" | "flatten_caterpillar" | "endblock_shift" => {
                w.only(&["at"])?;
                let at = at()?;
                match w.name {
                    "star_collapse" => Rewrite::StarCollapse { at },
                    "reroot_balanced" => Rewrite::RerootBalanced { at },
                    "flatten_caterpillar" => Rewrite::FlattenCaterpillar { at },
                    _ => Rewrite::EndblockShift { at },
                }
            }
            "shift_pendants" => {
                w.only(&["at", "k", "backward"])?;
                Rewrite::ShiftPendants { at: at()?, k: w.num("k")?, backward: w.flag("backward")? }
            }
            "merge_stars" => {
                w.only(&["k", "l", "direction"])?;
                let direction = match w.text("direction").unwrap_or("auto") {
                    "auto" => MergeDirection::Auto,
                    "into_k" => MergeDirection::IntoK,
                    "into_l" => MergeDirection::IntoL,
                    other => return Err(Error::Parse(format!("merge_stars: unknown direction {other:?}"))),
                };
                Rewrite::MergeStars { k: w.num("k")?, l: w.num("l")?, direction }
            }
            "contract_cycle" => {
                w.only(&["at", "case"])?;
                Rewrite::ContractCycle { at: at()?, case: case()? }
            }
            "c4_consolidate" => {
                w.only(&["at", "case"])?;
                Rewrite::C4Consolidate { at: at()?, case: case()? }
            }
            "rotate_path" => {
                w.only(&["at", "l1"])?;
                Rewrite::RotatePath { at: at()?, l1: w.num("l1")? }
            }
            other => return Err(Error::Parse(format!("unknown rewrite {other:?}"))),
        })
    }
}

fn violated(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

fn position(spec: &UnicyclicSpec, at: usize, what: &str) -> Result<usize> {
    if at == 0 || at > spec.g() {
        return Err(violated(format!("{what}={at} is not a cycle position 1..={}", spec.g())));
    }
    Ok(at - 1)
}

fn rotated(spec: &UnicyclicSpec, at: usize) -> Result<UnicyclicSpec> {
    let i = position(spec, at, "at")?;
    let trees = spec.trees();
    UnicyclicSpec::new(trees[i..].iter().chain(&trees[..i]).cloned().collect())
}

fn replaced(spec: &UnicyclicSpec, i: usize, tree: RootedTree) -> UnicyclicSpec {
    let mut trees = spec.trees().to_vec();
    trees[i] = tree;
    UnicyclicSpec::new(trees).expect("same cycle length")
}

fn with_pendants(tree: &RootedTree, count: usize) -> RootedTree {
    RootedTree::glue(&[tree.clone(), star(count + 1).expect("nonempty")])
}

fn same_graph(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// Edges of the component of `graph - blocked` containing `start`.
fn component_edges(graph: &Graph, start: Vertex, blocked: &[Vertex]) -> usize {
    let mut seen = vec![false; graph.n()];
    for &b in blocked {
        seen[b] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    let mut inside = vec![false; graph.n()];
    inside[start] = true;
    while let Some(x) = stack.pop() {
        for &y in graph.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                inside[y] = true;
                stack.push(y);
            }
        }
    }
    graph.edges().iter().filter(|&&(x, y)| inside[x] && inside[y]).count()
}

fn tree_swap(spec: &UnicyclicSpec, tree: RootedTree, indices: &'static [IndexKind], strict: bool) -> Result<Applied> {
    let after = replaced(spec, 0, tree);
    let equal = spec.canonical_code() == after.canonical_code();
    Ok(Applied {
        before: spec.assemble(),
        after: after.assemble(),
        prediction: if strict { Prediction::decrease_unless(false) } else { Prediction::decrease_unless(equal) },
        indices,
    })
}

/// Runs a rewrite on `spec` and attaches the predicted change.
pub fn apply(spec: &UnicyclicSpec, rewrite: &Rewrite) -> Result<Applied> {
    match *rewrite {
        Rewrite::StarCollapse { at } => {
            let s = rotated(spec, at)?;
            let n1 = s.trees()[0].order();
            tree_swap(&s, star(n1)?, EDGE_BOTH, false)
        }
        Rewrite::RerootBalanced { at } => {
            let s = rotated(spec, at)?;
            let t1 = &s.trees()[0];
            let (n1, d) = (t1.order(), t1.graph().diameter());
            if d < 2 || d + 2 > n1 {
                return Err(violated(format!("T_1 has order {n1} and diameter {d}; needs 2 <= d <= n_1 - 2")));
            }
            tree_swap(&s, t_ndd(n1, d)?, EDGE_BOTH, false)
        }
        Rewrite::FlattenCaterpillar { at } => {
            let s = rotated(spec, at)?;
            let t1 = &s.trees()[0];
            let lay = layout(t1);
            let backbone = deepest_path(t1, &lay);
            let sizes = branch_sizes(t1, &lay, &backbone);
            tree_swap(&s, caterpillar(&sizes)?, EDGE_BOTH, false)
        }
        Rewrite::ShiftPendants { at, k, backward } => shift_pendants(&rotated(spec, at)?, k, backward),
        Rewrite::MergeStars { k, l, direction } => merge_stars(spec, k, l, direction),
        Rewrite::ContractCycle { at, case } => contract_cycle(&rotated(spec, at)?, case),
        Rewrite::EndblockShift { at } => {
            let s = rotated(spec, at)?;
            let before = s.assemble();
            let g = s.g();
            let mut remove = Vec::new();
            let mut add = Vec::new();
            for v in 1..g {
                for &w in before.neighbors(v) {
                    if w >= g {
                        remove.push((v, w));
                        add.push((0, w));
                    }
                }
            }
            let after = rewire(&before, &remove, &add)?;
            let equal = same_graph(&before, &after)?;
            Ok(Applied { before, after, prediction: Prediction::decrease_unless(equal), indices: EDGE })
        }
        Rewrite::RotatePath { at, l1 } => rotate_path(&rotated(spec, at)?, l1),
        Rewrite::C4Consolidate { at, case } => c4_consolidate(&rotated(spec, at)?, case),
    }
}

pub fn apply_to_graph(graph: &Graph, rewrite: &Rewrite) -> Result<Applied> {
    apply(&UnicyclicSpec::from_graph(graph)?, rewrite)
}

/// Applies the rewrite and recomputes `index` on both sides.
pub fn check(spec: &UnicyclicSpec, rewrite: &Rewrite, index: IndexKind) -> Result<TransformReport> {
    apply(spec, rewrite)?.report(rewrite.to_string(), index)
}

pub fn check_graph(graph: &Graph, rewrite: &Rewrite, index: IndexKind) -> Result<TransformReport> {
    check(&UnicyclicSpec::from_graph(graph)?, rewrite, index)
}

fn shift_pendants(s: &UnicyclicSpec, k: usize, backward: bool) -> Result<Applied> {
    let t1 = &s.trees()[0];
    let reading = caterpillar_reading(t1)
        .ok_or_else(|| violated("T_1 is not a caterpillar P(0, a_1, .., a_l) rooted at u_l"))?;
    let l = reading.backbone.len() - 1;
    if k == 0 || k + 1 > l {
        return Err(violated(format!("k={k} outside 1..=l-1 for a backbone of length l={l}")));
    }
    let a = reading.counts();
    let (graph, maps) = s.assemble_mapped();
    let map = &maps[0];
    let u = |j: usize| map[reading.backbone[j]];
    let x = component_edges(&graph, u(k - 1), &[u(k), u(k + 1)]) as i64 + 1;
    let (ak, ak1) = (a[k] as i64, a[k + 1] as i64);
    let y = graph.m() as i64 - x - ak - ak1 - 1;
    let (from, to, moved, delta) = if backward {
        if ak1 == 0 {
            return Err(violated(format!("backward shift needs a_{} > 0", k + 1)));
        }
        (u(k + 1), u(k), &reading.pendants[k + 1], ak1 * (x + ak - y))
    } else {
        if ak == 0 {
            return Err(violated(format!("forward shift needs a_{k} > 0")));
        }
        (u(k), u(k + 1), &reading.pendants[k], ak * (y + ak1 - x))
    };
    let remove: Vec<Edge> = moved.iter().map(|&p| (from, map[p])).collect();
    let add: Vec<Edge> = moved.iter().map(|&p| (to, map[p])).collect();
    let after = rewire(&graph, &remove, &add)?;
    Ok(Applied { before: graph, after, prediction: Prediction::exact_quarters(4 * delta), indices: EDGE_BOTH })
}

fn merge_stars(s: &UnicyclicSpec, k: usize, l: usize, direction: MergeDirection) -> Result<Applied> {
    let (ki, li) = (position(s, k, "k")?, position(s, l, "l")?);
    if ki == li {
        return Err(violated("k and l must differ"));
    }
    let trees = s.trees();
    let read = |i: usize| {
        broom_reading(&trees[i])
            .filter(|r| !r.pendants.is_empty())
            .ok_or_else(|| violated(format!("T_{} is not a broom P^a_{{x,y}} with a > 0", i + 1)))
    };
    let (rk, rl) = (read(ki)?, read(li)?);
    let g = s.g();
    let delta_g = (g % 2) as i64;
    let n_of = |i: usize| -> i64 {
        (0..g).filter(|&j| j != i).map(|j| (trees[j].order() * cycle_distance(g, i, j)) as i64).sum()
    };
    let (nk, nl) = (n_of(ki), n_of(li));
    let (vk, vl) = (trees[ki].order() as i64, trees[li].order() as i64);
    let d = cycle_distance(g, ki, li) as i64;
    let into_k = match direction {
        MergeDirection::Auto => 4 * nl + delta_g * vl >= 4 * nk + delta_g * vk,
        MergeDirection::IntoK => true,
        MergeDirection::IntoL => false,
    };
    // quarters of b^2(2d - δ/2) + b(2N_src + δ|V_src|/2) - b(2N_dst + δ|V_dst|/2)
    let (src, dst, moved, n_src, v_src, n_dst, v_dst) =
        if into_k { (li, ki, &rl.pendants, nl, vl, nk, vk) } else { (ki, li, &rk.pendants, nk, vk, nl, vl) };
    let b = moved.len() as i64;
    let delta = b * b * (8 * d - 2 * delta_g) + b * (8 * n_src + 2 * delta_g * v_src) - b * (8 * n_dst + 2 * delta_g * v_dst);
    let (graph, maps) = s.assemble_mapped();
    let remove: Vec<Edge> = moved.iter().map(|&p| (src, maps[src][p])).collect();
    let add: Vec<Edge> = moved.iter().map(|&p| (dst, maps[src][p])).collect();
    let after = rewire(&graph, &remove, &add)?;
    Ok(Applied { before: graph, after, prediction: Prediction::exact_quarters(delta), indices: REVISED })
}

fn contract_cycle(s: &UnicyclicSpec, case: u8) -> Result<Applied> {
    let g = s.g();
    if g < 5 {
        return Err(violated(format!("cycle contraction needs g >= 5, got {g}")));
    }
    let t = s.trees();
    let (t1, t2, tg) = (&t[0], &t[1], &t[g - 1]);
    let star_at = |tree: &RootedTree, name: &str| -> Result<usize> {
        if is_root_star(tree) {
            Ok(tree.size())
        } else {
            Err(violated(format!("{name} is not a star centered at its root")))
        }
    };
    let one_arm = |tree: &RootedTree, name: &str| {
        broom_reading(tree)
            .filter(|r| r.chains.len() <= 1 && tree.size() >= 1)
            .ok_or_else(|| violated(format!("{name} is not P^a_l with l >= 1")))
    };
    let new1 = match case {
        1 => {
            if broom_reading(t1).is_none() || t1.size() == 0 {
                return Err(violated("T_1 is not P^a_{l1,l2} with l1 >= 1"));
            }
            let a2 = star_at(t2, "T_2")?;
            if tg.order() != 1 {
                return Err(violated("T_g is not trivial"));
            }
            with_pendants(t1, a2 + 2)
        }
        2 => {
            let a1 = star_at(t1, "T_1")?;
            one_arm(t2, "T_2")?;
            let ag = star_at(tg, "T_g")?;
            with_pendants(t2, a1 + ag + 2)
        }
        3 => {
            let r = one_arm(t1, "T_1")?;
            let (l1, a1) = match r.chains.first() {
                Some(&len) => (len, r.pendants.len()),
                None => (1, r.pendants.len() - 1),
            };
            let a2 = star_at(t2, "T_2")?;
            let ag = star_at(tg, "T_g")?;
            let rest: usize = t[2..g - 1].iter().map(RootedTree::size).sum();
            if rest < l1 {
                return Err(violated(format!("|E(T_3)| + .. + |E(T_(g-1))| = {rest} is below l1 = {l1}")));
            }
            broom(l1 + 1, 0, a1 + a2 + ag + 1)
        }
        other => return Err(Error::BadParams(format!("contract_cycle case must be 1, 2 or 3, got {other}"))),
    };
    let mut trees = vec![new1];
    trees.extend(t[2..g - 1].iter().cloned());
    let after = UnicyclicSpec::new(trees)?;
    Ok(Applied {
        before: s.assemble(),
        after: after.assemble(),
        prediction: Prediction::decrease_unless(false),
        indices: EDGE_BOTH,
    })
}

fn rotate_path(s: &UnicyclicSpec, l1: usize) -> Result<Applied> {
    if s.g() != 3 {
        return Err(violated(format!("path rotation needs g = 3, got {}", s.g())));
    }
    let t = s.trees();
    let (t1, t2, t3) = (&t[0], &t[1], &t[2]);
    if t1.size() < l1 || broom(l1, 0, t1.size() - l1).level_code() != t1.level_code() {
        return Err(violated(format!("T_1 is not a path of length l1={l1} with pendants at v_1")));
    }
    let a = (t1.size() - l1) as i64;
    if !is_root_star(t2) {
        return Err(violated("T_2 is not a star centered at v_2"));
    }
    let b = t2.size() as i64;
    let r3 = caterpillar_reading(t3).ok_or_else(|| violated("T_3 is not a path with pendants"))?;
    let l2 = r3.backbone.len() - 1;
    if l2 < l1 + 1 {
        return Err(violated(format!("needs l2 >= l1 + 1, got l1={l1} l2={l2}")));
    }
    let counts = r3.counts();
    let loaded: Vec<usize> = (0..=l2).filter(|&j| counts[j] > 0).collect();
    if loaded.len() > 1 || loaded.first().is_some_and(|&j| j == 0 || j == l2) {
        return Err(violated("T_3 must carry its pendants at a single inner path vertex w_i, 0 < i < l2"));
    }
    let c = counts.iter().sum::<usize>() as i64;
    let (graph, maps) = s.assemble_mapped();
    let w_prev = maps[2][r3.backbone[l2 - 1]];
    let u0 = if l1 == 0 {
        0
    } else {
        let lay = layout(t1);
        let v = (0..t1.order()).find(|&v| lay.depth[v] == l1).expect("T_1 reaches depth l1");
        maps[0][v]
    };
    let after = rewire(&graph, &[(2, w_prev), (2, 0), (2, 1)], &[(w_prev, 0), (w_prev, 1), (2, u0)])?;
    let (l1, l2) = (l1 as i64, l2 as i64);
    // quarters of (b + 3/2)(c + l2 - l1 - 1) + (a/2)(1 + 2c + 2l2 - 2l1)
    let delta = 2 * (2 * b + 3) * (c + l2 - l1 - 1) + 2 * a * (1 + 2 * c + 2 * l2 - 2 * l1);
    Ok(Applied { before: graph, after, prediction: Prediction::exact_quarters(delta), indices: REVISED })
}

fn c4_consolidate(s: &UnicyclicSpec, case: u8) -> Result<Applied> {
    if s.g() != 4 {
        return Err(violated(format!("consolidation needs g = 4, got {}", s.g())));
    }
    let t = s.trees();
    let m: Vec<i64> = t.iter().map(|x| x.size() as i64).collect();
    let (m1, m2, m3, m4) = (m[0], m[1], m[2], m[3]);
    let s1 = RootedTree::trivial;
    let (trees, delta) = match case {
        1 => (
            vec![RootedTree::glue(t), s1(), s1(), s1()],
            2 * ((m1 + m2) * (m3 + m4) + (m1 + m4) * (m2 + m3)),
        ),
        2 => (
            vec![RootedTree::glue(&[t[0].clone(), t[2].clone(), t[3].clone()]), t[1].clone(), s1(), s1()],
            4 * m1 * m3 + 2 * m4 * (m1 + m2 + m3),
        ),
        3 => {
            if m4 != 0 {
                return Err(violated("case 3 needs T_4 trivial"));
            }
            (
                vec![RootedTree::glue(&[t[0].clone(), t[1].clone(), t[3].clone()]), s1(), t[2].clone(), s1()],
                2 * m2 * (m1 - m3),
            )
        }
        other => return Err(Error::BadParams(format!("c4_consolidate case must be 1, 2 or 3, got {other}"))),
    };
    Ok(Applied {
        before: s.assemble(),
        after: UnicyclicSpec::new(trees)?.assemble(),
        prediction: Prediction::exact_quarters(4 * delta),
        indices: EDGE_BOTH,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::path;
    use crate::q4::Q4;

    fn spec(trees: Vec<RootedTree>) -> UnicyclicSpec {
        UnicyclicSpec::new(trees).unwrap()
    }

    fn s1() -> RootedTree {
        RootedTree::trivial()
    }

    fn agrees_on_all(sp: &UnicyclicSpec, r: &Rewrite) -> Q4 {
        let applied = apply(sp, r).unwrap();
        assert_eq!(applied.before.n(), applied.after.n());
        let mut delta = None;
        for &kind in applied.indices {
            let rep = applied.report(r.to_string(), kind).unwrap();
            assert!(rep.agrees, "{r} on {kind}: {rep:?}");
            delta = Some(rep.actual_delta);
        }
        delta.unwrap()
    }

    #[test]
    fn star_collapse_on_a_rooted_path() {
        let sp = spec(vec![path(3).unwrap(), s1(), s1(), s1()]);
        let applied = apply(&sp, &Rewrite::StarCollapse { at: 1 }).unwrap();
        assert_eq!(applied.prediction, Prediction::decrease_unless(false));
        assert!(agrees_on_all(&sp, &Rewrite::StarCollapse { at: 1 }) > Q4::ZERO);
        let sp = spec(vec![star(3).unwrap(), s1(), s1(), s1()]);
        assert_eq!(agrees_on_all(&sp, &Rewrite::StarCollapse { at: 1 }), Q4::ZERO);
    }

    #[test]
    fn shift_forward_example() {
        // C_3(P(0, 2, 0, 0), S_1, S_1): |E| = 8, X_1 = 1, Y_1 = 8 - 1 - 2 - 0 - 1 = 4,
        // so a_1 (Y_1 + a_2 - X_1) = 2 * 3
        let t1 = caterpillar(&[0, 2, 0, 0]).unwrap();
        let sp = spec(vec![t1, s1(), s1()]);
        let applied = apply(&sp, &Rewrite::ShiftPendants { at: 1, k: 1, backward: false }).unwrap();
        assert_eq!(applied.prediction, Prediction::exact_quarters(4 * 6));
        agrees_on_all(&sp, &Rewrite::ShiftPendants { at: 1, k: 1, backward: false });
        let err = apply(&sp, &Rewrite::ShiftPendants { at: 1, k: 2, backward: false }).unwrap_err();
        assert_eq!(err.kind(), "PreconditionViolated");
    }

    #[test]
    fn every_rewrite_agrees_on_a_sample() {
        let cases: Vec<(UnicyclicSpec, Rewrite)> = vec![
            (spec(vec![caterpillar(&[0, 1, 2]).unwrap(), s1(), s1()]), Rewrite::RerootBalanced { at: 1 }),
            (
                spec(vec![RootedTree::glue(&[broom(3, 0, 0), broom(2, 0, 1)]), path(2).unwrap(), s1(), s1()]),
                Rewrite::FlattenCaterpillar { at: 1 },
            ),
            (
                spec(vec![caterpillar(&[0, 1, 3, 2]).unwrap(), s1(), path(3).unwrap()]),
                Rewrite::ShiftPendants { at: 1, k: 2, backward: true },
            ),
            (
                spec(vec![broom(2, 0, 2), s1(), broom(1, 3, 3), s1(), s1()]),
                Rewrite::MergeStars { k: 1, l: 3, direction: MergeDirection::Auto },
            ),
            (
                spec(vec![broom(2, 1, 1), star(3).unwrap(), s1(), path(2).unwrap(), s1()]),
                Rewrite::ContractCycle { at: 1, case: 1 },
            ),
            (spec(vec![star(2).unwrap(), broom(2, 0, 1), path(2).unwrap(), s1(), star(2).unwrap()]), Rewrite::ContractCycle { at: 1, case: 2 }),
            (
                spec(vec![broom(2, 0, 1), star(2).unwrap(), path(3).unwrap(), s1(), s1(), star(3).unwrap()]),
                Rewrite::ContractCycle { at: 1, case: 3 },
            ),
            (spec(vec![path(2).unwrap(), s1(), path(3).unwrap(), s1()]), Rewrite::EndblockShift { at: 1 }),
            (spec(vec![broom(1, 0, 2), star(3).unwrap(), caterpillar(&[0, 2, 0, 0]).unwrap()]), Rewrite::RotatePath { at: 1, l1: 1 }),
            (spec(vec![path(2).unwrap(), path(3).unwrap(), star(3).unwrap(), path(2).unwrap()]), Rewrite::C4Consolidate { at: 1, case: 1 }),
            (spec(vec![path(2).unwrap(), path(3).unwrap(), star(3).unwrap(), path(2).unwrap()]), Rewrite::C4Consolidate { at: 1, case: 2 }),
            (spec(vec![path(4).unwrap(), path(3).unwrap(), star(4).unwrap(), s1()]), Rewrite::C4Consolidate { at: 1, case: 3 }),
        ];
        for (sp, r) in &cases {
            agrees_on_all(sp, r);
            let reparsed: Rewrite = r.to_string().parse().unwrap();
            assert_eq!(&reparsed, r);
        }
    }

    #[test]
    fn consolidate_equal_sides_is_neutral() {
        let sp = spec(vec![path(3).unwrap(), star(3).unwrap(), broom(1, 0, 1), s1()]);
        let applied = apply(&sp, &Rewrite::C4Consolidate { at: 1, case: 3 }).unwrap();
        assert_eq!(applied.prediction, Prediction::exact_quarters(0));
        assert_eq!(agrees_on_all(&sp, &Rewrite::C4Consolidate { at: 1, case: 3 }), Q4::ZERO);
    }

    #[test]
    fn contraction_drops_girth_by_two() {
        let sp = spec(vec![broom(2, 0, 1), star(2).unwrap(), s1(), path(3).unwrap(), s1()]);
        let applied = apply(&sp, &Rewrite::ContractCycle { at: 1, case: 1 }).unwrap();
        assert_eq!(applied.before.unique_cycle().unwrap().g(), 5);
        assert_eq!(applied.after.unique_cycle().unwrap().g(), 3);
        assert_eq!((applied.before.n(), applied.before.m()), (applied.after.n(), applied.after.m()));
    }

    #[test]
    fn rejects_wrong_index_and_shapes() {
        let sp = spec(vec![broom(2, 0, 2), s1(), star(2).unwrap()]);
        let applied = apply(&sp, &Rewrite::MergeStars { k: 1, l: 3, direction: MergeDirection::IntoK }).unwrap();
        assert!(applied.report("m".into(), IndexKind::EdgeSzeged).is_err());
        assert!(apply(&sp, &Rewrite::ContractCycle { at: 1, case: 1 }).is_err());
        assert!(apply(&sp, &Rewrite::C4Consolidate { at: 1, case: 1 }).is_err());
        assert!(apply(&sp, &Rewrite::StarCollapse { at: 4 }).is_err());
        assert!(apply(&sp, &Rewrite::MergeStars { k: 1, l: 2, direction: MergeDirection::Auto }).is_err());
    }
}
