//! Index-decreasing rewrites of unicyclic graphs and comparisons between
//! named family members, each carrying a predicted change (an exact value or
//! a sign) that is checked against recomputation.
//!
//! Throughout, the reported delta is `value(before) - value(after)`.

mod pairs;
mod reading;
mod rewrite;
pub mod sample;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::graph6::to_graph6;
use crate::index::IndexKind;
use crate::q4::{with_decimal, Q4};

pub use pairs::PairCheck;
pub use rewrite::{apply, apply_to_graph, check, check_graph, MergeDirection, Rewrite};

/// What a check claims about `value(before) - value(after)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Prediction {
    Exact {
        #[serde(with = "with_decimal")]
        delta: Q4,
    },
    Sign {
        sign: SignClaim,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignClaim {
    Positive,
    Zero,
    NonNegative,
}

impl Prediction {
    pub fn exact_quarters(quarters: i64) -> Self {
        Prediction::Exact { delta: Q4::from_quarters(quarters) }
    }

    /// Strict decrease, or no change exactly when `equal` holds.
    pub fn decrease_unless(equal: bool) -> Self {
        Prediction::Sign { sign: if equal { SignClaim::Zero } else { SignClaim::Positive } }
    }

    pub fn agrees(&self, actual: Q4) -> bool {
        match *self {
            Prediction::Exact { delta } => delta == actual,
            Prediction::Sign { sign: SignClaim::Positive } => actual > Q4::ZERO,
            Prediction::Sign { sign: SignClaim::Zero } => actual == Q4::ZERO,
            Prediction::Sign { sign: SignClaim::NonNegative } => actual >= Q4::ZERO,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Exact { delta } => write!(f, "{delta}"),
            Prediction::Sign { sign: SignClaim::Positive } => f.write_str("> 0"),
            Prediction::Sign { sign: SignClaim::Zero } => f.write_str("= 0"),
            Prediction::Sign { sign: SignClaim::NonNegative } => f.write_str(">= 0"),
        }
    }
}

/// A graph before and after a move, with the claimed change.
#[derive(Clone, Debug)]
pub struct Applied {
    pub before: Graph,
    pub after: Graph,
    pub prediction: Prediction,
    /// Indices the prediction is stated for.
    pub indices: &'static [IndexKind],
}

impl Applied {
    pub fn report(&self, name: String, index: IndexKind) -> Result<TransformReport> {
        if !self.indices.contains(&index) {
            let names: Vec<&str> = self.indices.iter().map(|k| k.name()).collect();
            return Err(Error::BadParams(format!("{name} predicts {} only, not {index}", names.join(", "))));
        }
        let value_before = index.evaluate(&self.before);
        let value_after = index.evaluate(&self.after);
        let actual_delta = value_before - value_after;
        Ok(TransformReport {
            name,
            before: to_graph6(&self.before),
            after: to_graph6(&self.after),
            order: self.before.n(),
            index,
            value_before,
            value_after,
            actual_delta,
            predicted: self.prediction,
            agrees: self.prediction.agrees(actual_delta),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformReport {
    pub name: String,
    /// graph6 of the input graph
    pub before: String,
    /// graph6 of the rewritten graph
    pub after: String,
    pub order: usize,
    pub index: IndexKind,
    #[serde(with = "with_decimal")]
    pub value_before: Q4,
    #[serde(with = "with_decimal")]
    pub value_after: Q4,
    #[serde(with = "with_decimal")]
    pub actual_delta: Q4,
    pub predicted: Prediction,
    pub agrees: bool,
}

/// Edge surgery: drops `remove` (each must be present) and adds `add`.
fn rewire(graph: &Graph, remove: &[Edge], add: &[Edge]) -> Result<Graph> {
    let norm = |(a, b): Edge| (a.min(b), a.max(b));
    let mut edges: Vec<Edge> = graph.edges().to_vec();
    for &e in remove {
        let e = norm(e);
        let pos = edges.iter().position(|&f| f == e).ok_or(Error::EdgeNotFound(e.0, e.1))?;
        edges.swap_remove(pos);
    }
    edges.extend(add.iter().map(|&e| norm(e)));
    Graph::new(graph.n(), &edges)
}

/// `name key=value ... flag` command-line syntax shared by rewrites and
/// pair checks.
struct Words<'a> {
    name: &'a str,
    pairs: Vec<(&'a str, Option<&'a str>)>,
}

impl<'a> Words<'a> {
    fn parse(s: &'a str) -> Result<Self> {
        let mut it = s.split_whitespace();
        let name = it.next().ok_or_else(|| Error::Parse("empty description".into()))?;
        let pairs = it
            .map(|w| match w.split_once('=') {
                Some((k, v)) => (k, Some(v)),
                None => (w, None),
            })
            .collect();
        Ok(Words { name, pairs })
    }

    fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.pairs.iter().find(|(k, _)| !allowed.contains(k)) {
            Some((k, _)) => Err(Error::Parse(format!("{}: unexpected key {k:?}", self.name))),
            None => Ok(()),
        }
    }

    fn get(&self, key: &str) -> Option<Option<&'a str>> {
        self.pairs.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
    }

    fn num_or(&self, key: &str, default: Option<usize>) -> Result<usize> {
        match self.get(key) {
            Some(Some(v)) => {
                v.parse().map_err(|_| Error::Parse(format!("{}: {key}={v:?} is not a non-negative integer", self.name)))
            }
            Some(None) => Err(Error::Parse(format!("{}: {key} needs a value", self.name))),
            None => default.ok_or_else(|| Error::Parse(format!("{}: missing {key}=", self.name))),
        }
    }

    fn num(&self, key: &str) -> Result<usize> {
        self.num_or(key, None)
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.get(key) {
            None => Ok(false),
            Some(None) | Some(Some("true")) => Ok(true),
            Some(Some("false")) => Ok(false),
            Some(Some(v)) => Err(Error::Parse(format!("{}: {key}={v:?} is not a boolean", self.name))),
        }
    }

    fn text(&self, key: &str) -> Option<&'a str> {
        self.get(key).flatten()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_claims() {
        let q = Q4::from_quarters;
        assert!(Prediction::decrease_unless(false).agrees(q(1)));
        assert!(!Prediction::decrease_unless(false).agrees(q(0)));
        assert!(Prediction::decrease_unless(true).agrees(q(0)));
        assert!(Prediction::Sign { sign: SignClaim::NonNegative }.agrees(q(0)));
        assert!(!Prediction::exact_quarters(5).agrees(q(4)));
    }

    #[test]
    fn prediction_json() {
        let p = Prediction::exact_quarters(-95);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"kind":"exact","delta":{"exact":"-95/4","decimal":-23.75}}"#);
        assert_eq!(serde_json::from_str::<Prediction>(&json).unwrap(), p);
    }

    #[test]
    fn words() {
        let w = Words::parse("shift_pendants at=2 k=1 backward").unwrap();
        assert_eq!((w.name, w.num("k").unwrap(), w.num_or("at", Some(1)).unwrap()), ("shift_pendants", 1, 2));
        assert!(w.flag("backward").unwrap());
        assert!(w.only(&["at", "k"]).is_err());
        assert!(w.num("l").is_err());
    }
}
