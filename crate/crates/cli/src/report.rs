use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use szeged_core::enumerate::{SearchReport, VerificationReport};
use szeged_core::q4::with_decimal;
use szeged_core::{DecompositionReport, IdentityReport, IndexKind, IndexSuite, Q4, TransformReport};

use crate::args::Format;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexValues {
    #[serde(rename = "W", with = "with_decimal")]
    pub wiener: Q4,
    #[serde(rename = "W_e_min", with = "with_decimal")]
    pub edge_wiener_min: Q4,
    #[serde(rename = "W_e_line", with = "with_decimal")]
    pub edge_wiener_line: Q4,
    #[serde(rename = "Sz", with = "with_decimal")]
    pub szeged: Q4,
    #[serde(rename = "Sz_star", with = "with_decimal")]
    pub revised_szeged: Q4,
    #[serde(rename = "Sz_e", with = "with_decimal")]
    pub edge_szeged: Q4,
    #[serde(rename = "Sz_e_star", with = "with_decimal")]
    pub revised_edge_szeged: Q4,
}

impl IndexValues {
    pub fn new(suite: &IndexSuite) -> Self {
        let v = |k: IndexKind| k.of(suite);
        IndexValues {
            wiener: v(IndexKind::Wiener),
            edge_wiener_min: v(IndexKind::EdgeWienerMin),
            edge_wiener_line: v(IndexKind::EdgeWienerLine),
            szeged: v(IndexKind::Szeged),
            revised_szeged: v(IndexKind::RevisedSzeged),
            edge_szeged: v(IndexKind::EdgeSzeged),
            revised_edge_szeged: v(IndexKind::RevisedEdgeSzeged),
        }
    }

    fn pairs(&self) -> [(IndexKind, Q4); 7] {
        [
            (IndexKind::Wiener, self.wiener),
            (IndexKind::EdgeWienerMin, self.edge_wiener_min),
            (IndexKind::EdgeWienerLine, self.edge_wiener_line),
            (IndexKind::Szeged, self.szeged),
            (IndexKind::RevisedSzeged, self.revised_szeged),
            (IndexKind::EdgeSzeged, self.edge_szeged),
            (IndexKind::RevisedEdgeSzeged, self.revised_edge_szeged),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub diameter: usize,
    pub girth: Option<usize>,
    pub indices: IndexValues,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub diameter: usize,
    pub girth: Option<usize>,
}

/// Outcome of the randomized runs of one rewrite or pair check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormulaRow {
    pub check: String,
    pub instances: usize,
    /// One per instance and stated index.
    pub reports: usize,
    pub disagreements: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_disagreement: Option<TransformReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormulaReport {
    pub seed: u64,
    pub draws: usize,
    pub rows: Vec<FormulaRow>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    pub graph6: String,
    pub agrees: bool,
    pub report: DecompositionReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionBatch {
    pub entries: Vec<DecompositionEntry>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Report {
    Index(IndexReport),
    Family(FamilyReport),
    Transform(TransformReport),
    Search(SearchReport),
    Extremal(VerificationReport),
    Identities(IdentityReport),
    Formulas(FormulaReport),
    Decompositions(DecompositionBatch),
}

/// A failed check: what went wrong and a graph showing it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub counterexample: Option<String>,
}

fn q(v: Q4) -> [String; 2] {
    [v.to_string(), v.to_f64().to_string()]
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

impl Report {
    /// The first failed check, if any. Reports that check nothing never fail.
    pub fn failure(&self) -> Option<Failure> {
        let fail = |message: String, counterexample: Option<String>| {
            Some(Failure { kind: "VerificationFailed".into(), message, counterexample })
        };
        match self {
            Report::Index(_) | Report::Family(_) | Report::Search(_) => None,
            Report::Transform(t) => (!t.agrees).then(|| Failure {
                kind: "VerificationFailed".into(),
                message: format!("{}: predicted {}, recomputed {}", t.name, t.predicted, t.actual_delta),
                counterexample: Some(t.before.clone()),
            }),
            Report::Extremal(v) => match v.counterexample() {
                Some((d, g6)) if !v.pass => fail(format!("n={} d={d}: minimisers differ from the prediction", v.n), Some(g6)),
                _ if !v.pass => fail(format!("n={}: girth-4 minimisers at d={} differ from the expected set", v.n, v.bipartite.d), None),
                _ => None,
            },
            Report::Identities(r) => r.counterexample().and_then(|row| {
                fail(format!("{} n={} ({}): {} of {} failed", row.suite, row.n, row.class, row.failures, row.checked), row.counterexample.clone())
            }),
            Report::Formulas(r) => r.rows.iter().find(|row| row.disagreements > 0).and_then(|row| {
                let first = row.first_disagreement.as_ref();
                fail(
                    format!("{}: {} of {} reports disagree (first: {})", row.check, row.disagreements, row.reports, first.map_or("", |t| t.name.as_str())),
                    first.map(|t| t.before.clone()),
                )
            }),
            Report::Decompositions(b) => b.entries.iter().find(|e| !e.agrees).and_then(|e| {
                fail(format!("decomposition routes disagree on {}", e.graph6), Some(e.graph6.clone()))
            }),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = match self {
                    Report::Index(r) => serde_json::to_string_pretty(r),
                    Report::Family(r) => serde_json::to_string_pretty(r),
                    Report::Transform(r) => serde_json::to_string_pretty(r),
                    Report::Search(r) => serde_json::to_string_pretty(r),
                    Report::Extremal(r) => serde_json::to_string_pretty(r),
                    Report::Identities(r) => serde_json::to_string_pretty(r),
                    Report::Formulas(r) => serde_json::to_string_pretty(r),
                    Report::Decompositions(r) => serde_json::to_string_pretty(r),
                }
                .expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Report::Index(r) => csv_table(
                &["graph6", "n", "m", "diameter", "girth", "index", "exact", "decimal"],
                r.indices
                    .pairs()
                    .into_iter()
                    .map(|(k, v)| {
                        let [e, d] = q(v);
                        vec![r.graph6.clone(), r.n.to_string(), r.m.to_string(), r.diameter.to_string(), opt(&r.girth), k.to_string(), e, d]
                    })
                    .collect(),
            ),
            Report::Family(r) => csv_table(
                &["family", "graph6", "order", "size", "diameter", "girth"],
                vec![vec![r.family.clone(), r.graph6.clone(), r.order.to_string(), r.size.to_string(), r.diameter.to_string(), opt(&r.girth)]],
            ),
            Report::Transform(t) => csv_table(
                &["name", "before", "after", "order", "index", "value_before", "value_after", "actual_delta", "actual_delta_decimal", "predicted", "agrees"],
                vec![vec![
                    t.name.clone(),
                    t.before.clone(),
                    t.after.clone(),
                    t.order.to_string(),
                    t.index.to_string(),
                    t.value_before.to_string(),
                    t.value_after.to_string(),
                    t.actual_delta.to_string(),
                    t.actual_delta.to_f64().to_string(),
                    t.predicted.to_string(),
                    t.agrees.to_string(),
                ]],
            ),
            Report::Search(r) => {
                let [e, d] = q(r.minimum);
                csv_table(
                    &["n", "d", "index", "minimum", "minimum_decimal", "examined", "code", "graph6", "girth"],
                    r.minimizers
                        .iter()
                        .map(|m| {
                            vec![
                                r.n.to_string(),
                                r.d.to_string(),
                                r.index.to_string(),
                                e.clone(),
                                d.clone(),
                                r.examined.to_string(),
                                m.code.clone(),
                                m.graph6.clone(),
                                m.girth.to_string(),
                            ]
                        })
                        .collect(),
                )
            }
            Report::Extremal(v) => csv_table(
                &["n", "d", "predicted_graph6", "predicted_value", "minimum", "minimizers", "examined", "contains_predicted", "unique", "girths_ok", "pass"],
                v.rows
                    .iter()
                    .map(|r| {
                        vec![
                            v.n.to_string(),
                            r.d.to_string(),
                            r.predicted_graph6.clone(),
                            r.predicted_value.to_string(),
                            r.minimum.to_string(),
                            r.minimizers.iter().map(|m| m.graph6.as_str()).collect::<Vec<_>>().join(" "),
                            r.examined.to_string(),
                            r.contains_predicted.to_string(),
                            r.unique.to_string(),
                            r.girths_ok.to_string(),
                            r.pass.to_string(),
                        ]
                    })
                    .collect(),
            ),
            Report::Identities(r) => csv_table(
                &["suite", "n", "class", "checked", "failures", "counterexample"],
                r.rows
                    .iter()
                    .map(|row| {
                        vec![row.suite.to_string(), row.n.to_string(), row.class.clone(), row.checked.to_string(), row.failures.to_string(), opt(&row.counterexample)]
                    })
                    .collect(),
            ),
            Report::Formulas(r) => csv_table(
                &["check", "instances", "reports", "disagreements", "first_disagreement"],
                r.rows
                    .iter()
                    .map(|row| {
                        vec![
                            row.check.clone(),
                            row.instances.to_string(),
                            row.reports.to_string(),
                            row.disagreements.to_string(),
                            row.first_disagreement.as_ref().map(|t| t.name.clone()).unwrap_or_default(),
                        ]
                    })
                    .collect(),
            ),
            Report::Decompositions(b) => csv_table(
                &["graph6", "n", "g", "direct", "from_edge_szeged", "from_szeged", "from_edge_sums", "edge_szeged_direct", "edge_szeged_from_szeged", "s1", "s2", "agrees"],
                b.entries
                    .iter()
                    .map(|e| {
                        let r = &e.report;
                        vec![
                            e.graph6.clone(),
                            r.n.to_string(),
                            r.g.to_string(),
                            r.direct.to_string(),
                            r.from_edge_szeged.to_string(),
                            r.from_szeged.to_string(),
                            r.from_edge_sums.to_string(),
                            r.edge_szeged_direct.to_string(),
                            r.edge_szeged_from_szeged.to_string(),
                            r.s1.to_string(),
                            r.s2.to_string(),
                            e.agrees.to_string(),
                        ]
                    })
                    .collect(),
            ),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Index(r) => {
                writeln!(s, "{}", r.graph6).unwrap();
                writeln!(s, "n={} m={} diameter={} girth={}", r.n, r.m, r.diameter, r.girth.map_or("-".into(), |g| g.to_string())).unwrap();
                for (k, v) in r.indices.pairs() {
                    writeln!(s, "{k} = {v} ({})", v.to_f64()).unwrap();
                }
            }
            Report::Family(r) => {
                writeln!(s, "{}", r.graph6).unwrap();
                writeln!(s, "order={} diameter={} girth={}", r.order, r.diameter, r.girth.map_or("-".into(), |g| g.to_string())).unwrap();
            }
            Report::Transform(t) => {
                writeln!(s, "{} on {}", t.name, t.before).unwrap();
                writeln!(s, "after {}", t.after).unwrap();
                writeln!(s, "{}: {} -> {}", t.index, t.value_before, t.value_after).unwrap();
                writeln!(s, "delta {} predicted {} {}", t.actual_delta, t.predicted, if t.agrees { "agrees" } else { "DISAGREES" }).unwrap();
            }
            Report::Search(r) => {
                writeln!(s, "n={} d={} {} minimum {} over {} graphs", r.n, r.d, r.index, r.minimum, r.examined).unwrap();
                for m in &r.minimizers {
                    writeln!(s, "  {} girth={}", m.graph6, m.girth).unwrap();
                }
            }
            Report::Extremal(v) => {
                for r in &v.rows {
                    writeln!(
                        s,
                        "n={} d={:<3} predicted {} min {} minimisers={} {}",
                        v.n,
                        r.d,
                        r.predicted_value,
                        r.minimum,
                        r.minimizers.len(),
                        if r.pass { "ok" } else { "MISMATCH" }
                    )
                    .unwrap();
                }
                writeln!(s, "girth-4 check at d={}: {}", v.bipartite.d, if v.bipartite.pass { "ok" } else { "MISMATCH" }).unwrap();
                writeln!(s, "{}", if v.pass { "pass" } else { "FAIL" }).unwrap();
            }
            Report::Identities(r) => {
                for row in &r.rows {
                    writeln!(s, "{:<18} n={:<3} {:<10} {} checked, {} failed", row.suite.name(), row.n, row.class, row.checked, row.failures).unwrap();
                }
                writeln!(s, "{}", if r.pass { "pass" } else { "FAIL" }).unwrap();
            }
            Report::Formulas(r) => {
                for row in &r.rows {
                    writeln!(s, "{:<26} {} draws, {} of {} reports disagree", row.check, row.instances, row.disagreements, row.reports).unwrap();
                }
                writeln!(s, "{}", if r.pass { "pass" } else { "FAIL" }).unwrap();
            }
            Report::Decompositions(b) => {
                for e in &b.entries {
                    writeln!(s, "{} Sz*_e={} Sz_e={} {}", e.graph6, e.report.direct, e.report.edge_szeged_direct, if e.agrees { "ok" } else { "MISMATCH" })
                        .unwrap();
                }
                writeln!(s, "{}", if b.pass { "pass" } else { "FAIL" }).unwrap();
            }
        }
        s
    }
}
