//! Exhaustive checks of the exact identities behind the index engine, run
//! over every tree and unicyclic graph of the requested orders.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{free_trees, unicyclic_graphs, GenerationTask};
use crate::error::{Error, Result};
use crate::graph::{cycle_distance_deltas, Graph};
use crate::graph6::to_graph6;
use crate::index::{decompose_graph, index_suite, sz_e_star_closed_form};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// `Sz*_e = m³/4 − ¼ Σ (m_x − m_y)²` on trees and unicyclic graphs.
    EdgeSquareSum,
    /// Every route of [`crate::index::DecompositionReport`] agrees.
    Decomposition,
    /// `W_e_line(T) = W(T) − n(n−1)/2` and `Sz_e(T) = W_e_min(T)` on trees.
    TreeEdgeWiener,
    /// `Sz_e(G) > W_e_min(G)` on unicyclic graphs.
    EdgeSzegedGap,
    /// Cycle distance differences against the case table, `g = n`.
    CycleTable,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::EdgeSquareSum, Suite::Decomposition, Suite::TreeEdgeWiener, Suite::EdgeSzegedGap, Suite::CycleTable];

    pub fn name(self) -> &'static str {
        match self {
            Suite::EdgeSquareSum => "edge_square_sum",
            Suite::Decomposition => "decomposition",
            Suite::TreeEdgeWiener => "tree_edge_wiener",
            Suite::EdgeSzegedGap => "edge_szeged_gap",
            Suite::CycleTable => "cycle_table",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub suite: Suite,
    pub n: usize,
    /// `tree`, `unicyclic` or `cycle`
    pub class: String,
    pub checked: u64,
    pub failures: u64,
    /// graph6 of the first failing graph in enumeration order
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub rows: Vec<SuiteRow>,
    pub pass: bool,
}

impl IdentityReport {
    pub fn counterexample(&self) -> Option<&SuiteRow> {
        self.rows.iter().find(|r| r.failures > 0)
    }
}

/// The case table for `(d(v_2,v_j) − d(v_1,v_j) + 1, d(v_g,v_j) − d(v_1,v_j) + 1)`,
/// written out without computing distances.
pub fn cycle_delta_table(g: usize, j: usize) -> (i64, i64) {
    if g % 2 == 0 {
        if j <= g / 2 {
            (0, 2)
        } else if j == g / 2 + 1 {
            (0, 0)
        } else {
            (2, 0)
        }
    } else if j <= (g - 1) / 2 {
        (0, 2)
    } else if j == (g + 1) / 2 {
        (0, 1)
    } else if j == (g + 3) / 2 {
        (1, 0)
    } else {
        (2, 0)
    }
}

fn graph_check(suite: Suite, g: &Graph) -> Result<bool> {
    Ok(match suite {
        Suite::EdgeSquareSum => sz_e_star_closed_form(g) == index_suite(g).revised_edge_szeged,
        Suite::Decomposition => decompose_graph(g)?.agrees(),
        Suite::TreeEdgeWiener => {
            let s = index_suite(g);
            let n = g.n() as i64;
            s.edge_wiener_line == s.wiener - n * (n - 1) / 2 && s.edge_szeged == s.edge_wiener_min
        }
        Suite::EdgeSzegedGap => {
            let s = index_suite(g);
            s.edge_szeged > s.edge_wiener_min
        }
        Suite::CycleTable => unreachable!("cycle table has no graph input"),
    })
}

fn row_over(suite: Suite, n: usize, class: &str, graphs: &[Graph]) -> Result<SuiteRow> {
    let verdicts = graphs.par_iter().map(|g| graph_check(suite, g)).collect::<Result<Vec<bool>>>()?;
    let failures = verdicts.iter().filter(|ok| !**ok).count() as u64;
    let counterexample = verdicts.iter().position(|ok| !ok).map(|i| to_graph6(&graphs[i]));
    Ok(SuiteRow { suite, n, class: class.into(), checked: graphs.len() as u64, failures, counterexample })
}

fn cycle_row(g: usize) -> Result<SuiteRow> {
    let mut failures = 0;
    let mut counterexample = None;
    for j in 2..g {
        if cycle_distance_deltas(g, j)? != cycle_delta_table(g, j) {
            failures += 1;
            counterexample.get_or_insert_with(|| format!("g={g} j={j}"));
        }
    }
    Ok(SuiteRow { suite: Suite::CycleTable, n: g, class: "cycle".into(), checked: (g - 2) as u64, failures, counterexample })
}

fn unicyclic(n: usize) -> Result<Vec<Graph>> {
    Ok(unicyclic_graphs(GenerationTask::all(n))?.map(|(_, g)| g).collect())
}

/// Runs each suite for every order in `orders` (orders below 3 are skipped
/// for graphs with a cycle, below 1 for trees).
pub fn verify_identities(orders: std::ops::RangeInclusive<usize>, suites: &[Suite], workers: Option<usize>) -> Result<IdentityReport> {
    let work = || -> Result<Vec<SuiteRow>> {
        let mut rows = Vec::new();
        for n in orders.clone() {
            let trees = suites
                .iter()
                .any(|s| matches!(s, Suite::EdgeSquareSum | Suite::TreeEdgeWiener))
                .then(|| if n >= 1 { free_trees(n) } else { Vec::new() });
            let cyclic = if n >= 3 && suites.iter().any(|s| matches!(s, Suite::EdgeSquareSum | Suite::Decomposition | Suite::EdgeSzegedGap)) {
                Some(unicyclic(n)?)
            } else {
                None
            };
            for &suite in suites {
                match suite {
                    Suite::EdgeSquareSum => {
                        if let Some(t) = &trees {
                            rows.push(row_over(suite, n, "tree", t)?);
                        }
                        if let Some(u) = &cyclic {
                            rows.push(row_over(suite, n, "unicyclic", u)?);
                        }
                    }
                    Suite::TreeEdgeWiener => {
                        if let Some(t) = &trees {
                            rows.push(row_over(suite, n, "tree", t)?);
                        }
                    }
                    Suite::Decomposition | Suite::EdgeSzegedGap => {
                        if let Some(u) = &cyclic {
                            rows.push(row_over(suite, n, "unicyclic", u)?);
                        }
                    }
                    Suite::CycleTable => {
                        if n >= 3 {
                            rows.push(cycle_row(n)?);
                        }
                    }
                }
            }
        }
        Ok(rows)
    };
    let rows = match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    let pass = rows.iter().all(|r| r.failures == 0);
    Ok(IdentityReport { rows, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_pass() {
        let r = verify_identities(1..=7, &Suite::ALL, Some(2)).unwrap();
        assert!(r.pass, "{:?}", r.counterexample());
        let tree6 = r.rows.iter().find(|r| r.suite == Suite::TreeEdgeWiener && r.n == 6).unwrap();
        assert_eq!(tree6.checked, 6);
        let uni6 = r.rows.iter().find(|r| r.suite == Suite::Decomposition && r.n == 6).unwrap();
        assert_eq!(uni6.checked, 13);
        assert!(r.rows.iter().all(|r| r.n >= 3 || r.class == "tree"));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("no_such_suite".parse::<Suite>().is_err());
    }

    #[test]
    fn table_examples() {
        assert_eq!(cycle_delta_table(6, 2), (0, 2));
        assert_eq!(cycle_delta_table(6, 4), (0, 0));
        assert_eq!(cycle_delta_table(5, 3), (0, 1));
        assert_eq!(cycle_delta_table(5, 4), (1, 0));
    }
}
