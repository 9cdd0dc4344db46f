use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gvz_core::character::CharacterTable;
use gvz_core::group::{Limits, DEFAULT_ORDER_CAP};

use crate::corpus::{split_list, Config, CorpusEntry, CorpusSpec};
use crate::report::render_group;
use crate::source::Source;
use crate::{analyse_entries, build_report, CliError, EXIT_FAILURE, EXIT_INPUT, EXIT_OK};

#[derive(Debug, Parser)]
#[command(
    name = "gvz",
    version,
    about = "Decide whether finite groups are GVZ groups, four independent ways"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyse one group and print its verdicts.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Print the JSON report to stdout instead of the text summary.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timings: bool,
    },
    /// Analyse a corpus of groups.
    Corpus(CorpusArgs),
    /// Print the exact character table.
    Table {
        #[command(flatten)]
        source: SourceArgs,
    },
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Multiplication-table file (or permutation file with --perms).
    pub path: Option<PathBuf>,
    /// Family spec such as `dihedral:16` or `quaternion:8 x cyclic:3`.
    #[arg(long, conflicts_with = "path")]
    pub family: Option<String>,
    /// Read PATH as a permutation-generator file.
    #[arg(long, requires = "path")]
    pub perms: bool,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
}

impl SourceArgs {
    fn source(&self) -> Result<Source, CliError> {
        match (&self.family, &self.path) {
            (Some(f), _) => Ok(Source::Family(f.clone())),
            (None, Some(p)) if self.perms => Ok(Source::PermutationFile(p.clone())),
            (None, Some(p)) => Ok(Source::TableFile(p.clone())),
            (None, None) => Err(CliError::Input("give a table file or --family name:params".into())),
        }
    }

    fn limits(&self) -> Limits {
        Limits {
            order_cap: self.order_cap,
            ..Limits::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Comma-separated family ids (cyclic, abelian, dihedral, quaternion,
    /// semidihedral, extraspecial, symmetric, alternating, heisenberg,
    /// products).
    #[arg(long, value_delimiter = ',')]
    pub families: Option<Vec<String>>,
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Write the per-group CSV summary here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    pub parallel: Option<usize>,
    /// Leave per-group timings out of the JSON so runs compare byte for byte.
    #[arg(long)]
    pub no_timings: bool,
    /// `key = value` settings file; flags win over it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Extra multiplication-table files to include.
    #[arg(long = "table")]
    pub tables: Vec<PathBuf>,
    /// Extra permutation-generator files to include.
    #[arg(long = "perms")]
    pub perms: Vec<PathBuf>,
    #[arg(long)]
    pub order_cap: Option<usize>,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze {
            source,
            json,
            no_timings,
        } => cmd_analyze(&source, json, !no_timings, out),
        Command::Corpus(args) => cmd_corpus(&args, out, err),
        Command::Table { source } => cmd_table(&source, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn io_error(path: &str, e: std::io::Error) -> CliError {
    CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    }
}

fn cmd_analyze(args: &SourceArgs, json: bool, timings: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let source = args.source()?;
    let limits = args.limits();
    let group = source.load(&limits)?;
    let entry = CorpusEntry {
        name: group.name().to_string(),
        order: Some(group.order()),
        source,
    };
    let analysed = analyse_entries(&[entry], &limits, None)?;
    let report = build_report(&analysed, timings);
    let text = if json {
        report.to_json()
    } else {
        render_group(&report.groups[0])
    };
    out.write_all(text.as_bytes()).map_err(|e| io_error("stdout", e))?;
    Ok(if report.success() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_table(args: &SourceArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let group = args.source()?.load(&args.limits())?;
    let name = group.name().to_string();
    let table =
        CharacterTable::compute(std::sync::Arc::new(group)).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
    writeln!(out, "# {name}").map_err(|e| io_error("stdout", e))?;
    out.write_all(table.dump().as_bytes())
        .map_err(|e| io_error("stdout", e))?;
    Ok(EXIT_OK)
}

/// Merges the config file (if any) under the command-line flags.
pub fn corpus_spec(args: &CorpusArgs) -> Result<(CorpusSpec, Limits, Option<usize>), CliError> {
    let cfg = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| io_error(&path.display().to_string(), e))?;
            Config::parse(&text)?
        }
        None => Config::default(),
    };
    let mut spec = CorpusSpec::default();
    if let Some(m) = args.max_order.or(cfg.max_order) {
        spec.max_order = m;
    }
    spec.families = args
        .families
        .as_ref()
        .map(|f| f.iter().flat_map(|s| split_list(s)).collect())
        .or(cfg.families);
    let tables = if args.tables.is_empty() {
        &cfg.tables
    } else {
        &args.tables
    };
    let perms = if args.perms.is_empty() { &cfg.perms } else { &args.perms };
    spec.ingest_paths.extend(tables.iter().cloned().map(Source::TableFile));
    spec.ingest_paths
        .extend(perms.iter().cloned().map(Source::PermutationFile));
    let limits = Limits {
        order_cap: args.order_cap.or(cfg.order_cap).unwrap_or(DEFAULT_ORDER_CAP),
        ..Limits::default()
    };
    Ok((spec, limits, args.parallel.or(cfg.parallel)))
}

fn cmd_corpus(args: &CorpusArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (spec, limits, parallel) = corpus_spec(args)?;
    let entries = spec.resolve()?;
    let analysed = analyse_entries(&entries, &limits, parallel)?;
    let report = build_report(&analysed, !args.no_timings);

    let json_to_stdout = args.json.as_deref() == Some(std::path::Path::new("-"));
    match &args.json {
        Some(_) if json_to_stdout => out
            .write_all(report.to_json().as_bytes())
            .map_err(|e| io_error("stdout", e))?,
        Some(path) => fs::write(path, report.to_json()).map_err(|e| io_error(&path.display().to_string(), e))?,
        None => {}
    }
    if let Some(path) = &args.csv {
        let name = path.display().to_string();
        let file = fs::File::create(path).map_err(|e| io_error(&name, e))?;
        report.write_csv(file).map_err(|e| CliError::Io {
            path: name,
            message: e.to_string(),
        })?;
    }
    let summary: &mut dyn Write = if json_to_stdout { err } else { out };
    summary
        .write_all(report.summary_table().as_bytes())
        .map_err(|e| io_error("stdout", e))?;
    Ok(if report.success() { EXIT_OK } else { EXIT_FAILURE })
}
