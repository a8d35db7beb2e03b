//! The `szeged` command: argument parsing, dispatch to `szeged-core`, and
//! report rendering. All file and terminal I/O happens here.

pub mod args;
pub mod report;

use std::io::Read;

use serde::Serialize;
use szeged_core::enumerate::{compare_with_extremal, minimize_index_with, unicyclic_graphs, verify_theorem1, GenerationTask, SearchOptions};
use szeged_core::transform::sample::{draw_many, PAIRS, REWRITES};
use szeged_core::{
    check, decompose_graph, from_edge_list, from_graph6, index_suite, to_graph6, verify_identities, Error, FamilyParams,
    Graph, IndexKind, PairCheck, Result, Rewrite, Suite, UnicyclicSpec,
};

use args::{Cli, Command, Input, Limit};
use report::{
    DecompositionBatch, DecompositionEntry, FamilyReport, FormulaReport, FormulaRow, IndexReport, IndexValues, Report,
};

pub use args::Format;
pub use report::Failure;

/// Machine-readable error object written to standard error.
#[derive(Debug, Serialize)]
pub struct ErrorObject {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl From<&Error> for ErrorObject {
    fn from(e: &Error) -> Self {
        ErrorObject { kind: e.kind().into(), message: e.to_string(), counterexample: None }
    }
}

impl From<Failure> for ErrorObject {
    fn from(f: Failure) -> Self {
        ErrorObject { kind: f.kind, message: f.message, counterexample: f.counterexample }
    }
}

fn read_graph(input: &Input) -> Result<Graph> {
    if let Some(g6) = &input.graph6 {
        return from_graph6(g6);
    }
    if let Some(path) = &input.edges {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        } else {
            std::fs::read_to_string(path)?
        };
        return from_edge_list(&text);
    }
    if let Some(spec) = &input.family {
        return spec.parse::<FamilyParams>()?.build();
    }
    Err(Error::Parse("no input graph: give --graph6, --edges or --family".into()))
}

fn guard(limit: Limit, n: usize) -> Result<()> {
    if n > limit.limit_n {
        return Err(Error::BadParams(format!(
            "exhaustive enumeration at n={n} exceeds --limit-n {}; raise --limit-n to run it",
            limit.limit_n
        )));
    }
    Ok(())
}

fn girth(g: &Graph) -> Option<usize> {
    g.unique_cycle().ok().map(|c| c.g())
}

fn formulas(checks: &[String], draws: usize, seed: u64) -> Result<FormulaReport> {
    let all: Vec<&str> = REWRITES.iter().chain(PAIRS.iter()).copied().collect();
    let names: Vec<&str> = if checks.is_empty() {
        all.clone()
    } else {
        checks.iter().map(String::as_str).collect()
    };
    let mut rows = Vec::new();
    for name in names {
        if !all.contains(&name) {
            return Err(Error::Parse(format!("unknown check {name:?}")));
        }
        let instances = draw_many(name, draws, seed)?;
        let mut reports = 0;
        let mut disagreements = 0;
        let mut first_disagreement = None;
        for inst in &instances {
            for r in inst.check_all()? {
                reports += 1;
                if !r.agrees {
                    disagreements += 1;
                    first_disagreement.get_or_insert(r);
                }
            }
        }
        rows.push(FormulaRow { check: name.into(), instances: instances.len(), reports, disagreements, first_disagreement });
    }
    let pass = rows.iter().all(|r| r.disagreements == 0);
    Ok(FormulaReport { seed, draws, rows, pass })
}

/// Runs one parsed command and returns its report.
pub fn execute(cli: &Cli) -> Result<Report> {
    let workers = cli.workers;
    Ok(match &cli.command {
        Command::Index { input } => {
            let g = read_graph(input)?;
            Report::Index(IndexReport {
                graph6: to_graph6(&g),
                n: g.n(),
                m: g.m(),
                diameter: g.diameter(),
                girth: girth(&g),
                indices: IndexValues::new(&index_suite(&g)),
            })
        }
        Command::Family { spec } => {
            let params: FamilyParams = spec.parse()?;
            let g = params.build()?;
            Report::Family(FamilyReport {
                family: params.to_string(),
                graph6: to_graph6(&g),
                order: g.n(),
                size: g.m(),
                diameter: g.diameter(),
                girth: girth(&g),
            })
        }
        Command::Transform { input, rewrite, pair, index } => {
            let index: IndexKind = index.parse()?;
            match (rewrite, pair) {
                (Some(r), None) => {
                    let r: Rewrite = r.parse()?;
                    let spec = UnicyclicSpec::from_graph(&read_graph(input)?)?;
                    Report::Transform(check(&spec, &r, index)?)
                }
                (None, Some(p)) => {
                    if input.is_given() {
                        return Err(Error::Parse("--pair builds both graphs itself and takes no input graph".into()));
                    }
                    Report::Transform(p.parse::<PairCheck>()?.check(index)?)
                }
                _ => return Err(Error::Parse("give exactly one of --rewrite or --pair".into())),
            }
        }
        Command::Search { n, d, index, girth, checkpoint, limit } => {
            guard(*limit, *n)?;
            let opts = SearchOptions { workers, checkpoint: checkpoint.clone(), girth: *girth };
            Report::Search(minimize_index_with(*n, *d, index.parse()?, &opts)?.deterministic())
        }
        Command::Verify { mode, n, below_threshold, min_n, max_n, suites, draws, checks, checkpoint, limit } => {
            if mode.theorem1 {
                let n = n.ok_or_else(|| Error::Parse("--theorem1 needs --n".into()))?;
                guard(*limit, n)?;
                let opts = SearchOptions { workers, checkpoint: checkpoint.clone(), girth: None };
                let report = if *below_threshold { compare_with_extremal(n, &opts)? } else { verify_theorem1(n, &opts)? };
                Report::Extremal(report)
            } else if mode.identities {
                guard(*limit, *max_n)?;
                let suites: Vec<Suite> = if suites.is_empty() {
                    Suite::ALL.to_vec()
                } else {
                    suites.iter().map(|s| s.parse()).collect::<Result<_>>()?
                };
                Report::Identities(verify_identities(*min_n..=*max_n, &suites, workers)?)
            } else {
                Report::Formulas(formulas(checks, *draws, cli.seed)?)
            }
        }
        Command::Identities { input, n, limit } => {
            let graphs: Vec<Graph> = match n {
                Some(n) => {
                    guard(*limit, *n)?;
                    unicyclic_graphs(GenerationTask::all(*n))?.map(|(_, g)| g).collect()
                }
                None => vec![read_graph(input)?],
            };
            let entries = graphs
                .iter()
                .map(|g| {
                    let report = decompose_graph(g)?;
                    Ok(DecompositionEntry { graph6: to_graph6(g), agrees: report.agrees(), report })
                })
                .collect::<Result<Vec<_>>>()?;
            let pass = entries.iter().all(|e| e.agrees);
            Report::Decompositions(DecompositionBatch { entries, pass })
        }
    })
}

/// Exit status: 0 when every requested check passed, 1 on a failed check,
/// 2 on any error.
pub struct Outcome {
    pub status: i32,
    pub stdout: Option<String>,
    pub stderr: Option<String>,
}

fn error_json(obj: &ErrorObject) -> String {
    serde_json::to_string(obj).expect("error objects serialize") + "\n"
}

/// Runs the command and writes the report to `--output` when given; the
/// caller prints whatever lands in the outcome.
pub fn run(cli: &Cli) -> Outcome {
    let report = match execute(cli) {
        Ok(r) => r,
        Err(e) => return Outcome { status: 2, stdout: None, stderr: Some(error_json(&(&e).into())) },
    };
    let body = report.render(cli.format);
    let stdout = match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                let e = Error::from(e);
                return Outcome { status: 2, stdout: None, stderr: Some(error_json(&(&e).into())) };
            }
            None
        }
        None => Some(body),
    };
    match report.failure() {
        Some(f) => Outcome { status: 1, stdout, stderr: Some(error_json(&f.into())) },
        None => Outcome { status: 0, stdout, stderr: None },
    }
}
