//! Batch front end for the GVZ oracles: builds or ingests groups, runs the
//! analysis and writes JSON / CSV reports.

pub mod app;
pub mod corpus;
pub mod report;
pub mod source;

use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gvz_core::analysis::{analyze, OracleReport};
use gvz_core::group::{GroupError, Limits};
use rayon::prelude::*;
use thiserror::Error;

pub use corpus::{Config, CorpusEntry, CorpusSpec};
pub use report::{GroupReport, RunReport};
pub use source::Source;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Group { path: String, source: GroupError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("corpus is empty: no group satisfies the filters")]
    EmptyCorpus,
}

impl CliError {
    pub(crate) fn group(path: &Path, source: GroupError) -> CliError {
        CliError::Group {
            path: path.display().to_string(),
            source,
        }
    }
}

/// Outcome of analysing one corpus member.
pub struct Analysed {
    pub entry: CorpusEntry,
    pub order: usize,
    pub result: Result<OracleReport, String>,
    pub elapsed: Duration,
}

fn analyse_one(entry: &CorpusEntry, limits: &Limits) -> Result<Analysed, CliError> {
    let group = entry.load(limits)?;
    if let Some(expected) = entry.order {
        assert_eq!(group.order(), expected, "{}: family order mismatch", entry.name);
    }
    let order = group.order();
    let start = Instant::now();
    let result = analyze(Arc::new(group)).map_err(|e| e.to_string());
    Ok(Analysed {
        entry: entry.clone(),
        order,
        result,
        elapsed: start.elapsed(),
    })
}

/// Analyses every entry, on `threads` worker threads when given. Results
/// are in entry order. Load errors (bad files) abort the run.
pub fn analyse_entries(
    entries: &[CorpusEntry],
    limits: &Limits,
    threads: Option<usize>,
) -> Result<Vec<Analysed>, CliError> {
    match threads {
        Some(k) if k > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| CliError::Input(format!("cannot start {k} worker threads: {e}")))?;
            pool.install(|| entries.par_iter().map(|e| analyse_one(e, limits)).collect())
        }
        _ => entries.iter().map(|e| analyse_one(e, limits)).collect(),
    }
}

pub fn build_report(analysed: &[Analysed], timings: bool) -> RunReport {
    let groups = analysed
        .iter()
        .map(|a| {
            let ms = timings.then_some(a.elapsed.as_millis() as u64);
            match &a.result {
                Ok(r) => GroupReport::from_oracle(r, ms),
                Err(e) => GroupReport::from_error(a.entry.name.clone(), a.order, e.clone(), ms),
            }
        })
        .collect();
    RunReport::new(groups)
}
