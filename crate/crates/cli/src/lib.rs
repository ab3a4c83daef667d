//! The `wordrep` command line: word-representability checks, bounded word
//! search, obstruction mining, catalog verification, fixture replay, and
//! count reporting over split graphs.
//!
//! [`run`] is the whole interface — `main` feeds it `argv` and the two
//! standard streams, tests feed it vectors and buffers. Exit codes follow
//! one convention everywhere: 0 the property holds, 1 it does not, 2 the
//! invocation or its input is unusable.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use wordrep_core::catalog::{
    find_witness, load_builtin, load_mined, save_mined, Catalog, CatalogParams,
    Provenance, BUILTIN_NAMES,
};
use wordrep_core::graph::{
    contains_induced, decode_graph6, encode_graph6, split_partition, SplitGraph,
};
use wordrep_core::miner::{
    counts_report, mine_minimal, replay_proof_fixtures, verify_main_theorem,
    MinerReport, MiningParams,
};
use wordrep_core::semitrans::{check_labeling, decide_split_counted};
use wordrep_core::words::{alternates, find_word, represents, Word};

use format::GraphFormat;

/// A failure that ends the invocation with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed input file, located to the byte.
    #[error("{file}:{line}:{byte}: {msg}")]
    Malformed {
        file: String,
        line: usize,
        byte: usize,
        msg: String,
    },
    /// A usage problem that is not tied to a file position.
    #[error("{0}")]
    Input(String),
    /// An unreadable or unwritable file.
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Failure writing to the output stream.
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
    /// Failure serializing a report.
    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),
    /// An error surfaced by the library (bad bounds, bad arguments).
    #[error(transparent)]
    Core(#[from] wordrep_core::Error),
}

#[derive(Parser)]
#[command(
    name = "wordrep",
    version,
    about = "Word-representability of split graphs: checks, words, mining, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide word-representability of a split graph; prints a labeling
    /// certificate or a refutation.
    Check {
        /// Graph file to check.
        graphfile: PathBuf,
        /// Input encoding.
        #[arg(long, value_enum, default_value = "split")]
        format: GraphFormat,
        /// Emit the result as one JSON object.
        #[arg(long)]
        json: bool,
        /// Witness catalog consulted on a NO answer.
        #[arg(long, env = "WORDREP_CATALOG")]
        catalog: Option<PathBuf>,
    },
    /// Test whether a word represents a graph.
    Represents {
        /// The word, as whitespace-separated vertex names.
        word: String,
        /// Graph file the word is checked against.
        graphfile: PathBuf,
        /// Input encoding.
        #[arg(long, value_enum, default_value = "split")]
        format: GraphFormat,
    },
    /// Search for a representing word under an occurrence cap.
    Findword {
        /// Graph file to represent.
        graphfile: PathBuf,
        /// Input encoding.
        #[arg(long, value_enum, default_value = "split")]
        format: GraphFormat,
        /// Most occurrences allowed per letter.
        #[arg(long = "max-occ", default_value_t = 2)]
        max_occ: usize,
    },
    /// Mine minimal non-word-representable split graphs within bounds.
    Mine {
        /// Largest independent-set size searched.
        #[arg(long = "e-max")]
        e_max: usize,
        /// Largest clique size searched.
        #[arg(long = "k-max")]
        k_max: usize,
        /// Write the mined graphs as a witness catalog.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for the decision phase.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Grow the independent side adaptively instead of sweeping every
        /// size up to the bound.
        #[arg(long)]
        adaptive: bool,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check "representable iff no catalog witness" over the enumerated
    /// corpus.
    Verify {
        /// Largest clique size swept.
        #[arg(long = "k-max")]
        k_max: usize,
        /// Witness catalog produced by `mine`.
        #[arg(long, env = "WORDREP_CATALOG")]
        catalog: Option<PathBuf>,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Re-run recorded labeling and containment fixtures.
    Replay {
        /// Fixture file to replay.
        #[arg(long)]
        fixtures: PathBuf,
        /// Catalog for resolving containment claims.
        #[arg(long, env = "WORDREP_CATALOG")]
        catalog: Option<PathBuf>,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Inspect builtin and mined witness entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Compare minimal-graph counts across the reference mining runs.
    Counts {
        /// Directory of JSON mining reports (one per file).
        #[arg(long)]
        reports: PathBuf,
        /// Emit the table as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One line per entry: origin, name, graph6.
    List {
        /// Mined catalog to include alongside the builtins.
        #[arg(long, env = "WORDREP_CATALOG")]
        catalog: Option<PathBuf>,
    },
    /// Full detail for one entry.
    Show {
        /// Entry name, e.g. B1 or D1 or M3.
        name: String,
        /// Mined catalog searched after the builtins.
        #[arg(long, env = "WORDREP_CATALOG")]
        catalog: Option<PathBuf>,
    },
}

/// Parses `argv`, executes the subcommand, and returns the exit code,
/// reporting on `out` and diagnosing on `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        // The consumer hung up (e.g. piped into `head`); there is nobody
        // left to diagnose to, and nothing went wrong on our side.
        Err(e) if e.is_broken_pipe() => 0,
        Err(e) => {
            let _ = writeln!(err, "wordrep: {e}");
            2
        }
    }
}

impl CliError {
    fn is_broken_pipe(&self) -> bool {
        use std::io::ErrorKind;
        match self {
            CliError::Output(e) => e.kind() == ErrorKind::BrokenPipe,
            CliError::Io { source, .. } => source.kind() == ErrorKind::BrokenPipe,
            CliError::Serde(e) => e.io_error_kind() == Some(ErrorKind::BrokenPipe),
            _ => false,
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Check {
            graphfile,
            format,
            json,
            catalog,
        } => check(&graphfile, format, json, catalog.as_deref(), out),
        Command::Represents {
            word,
            graphfile,
            format,
        } => represents_cmd(&word, &graphfile, format, out),
        Command::Findword {
            graphfile,
            format,
            max_occ,
        } => findword(&graphfile, format, max_occ, out),
        Command::Mine {
            e_max,
            k_max,
            out: out_path,
            workers,
            adaptive,
            json,
        } => mine(e_max, k_max, out_path.as_deref(), workers, adaptive, json, out),
        Command::Verify {
            k_max,
            catalog,
            json,
        } => verify(k_max, catalog.as_deref(), json, out),
        Command::Replay {
            fixtures,
            catalog,
            json,
        } => replay(&fixtures, catalog.as_deref(), json, out),
        Command::Catalog { action } => match action {
            CatalogAction::List { catalog } => {
                catalog_list(catalog.as_deref(), out)
            }
            CatalogAction::Show { name, catalog } => {
                catalog_show(&name, catalog.as_deref(), out)
            }
        },
        Command::Counts { reports, json } => counts(&reports, json, out),
    }
}

fn load_catalog(path: Option<&Path>) -> Result<Option<Catalog>, CliError> {
    path.map(load_mined).transpose().map_err(CliError::from)
}

fn load_split_graph(
    path: &Path,
    format: GraphFormat,
) -> Result<SplitGraph, CliError> {
    match format {
        GraphFormat::Split => format::load_split(path),
        GraphFormat::Graph6 => {
            let g = format::load_graph6(path)?;
            split_partition(&g).ok_or_else(|| {
                CliError::Input(format!(
                    "{}: the graph is not a split graph",
                    path.display()
                ))
            })
        }
    }
}

/// The `check` result in its stable JSON shape.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckReport {
    answer: &'static str,
    /// Certificate: clique names from position 1 to position k.
    k_order: Option<Vec<String>>,
    witness: Option<CheckWitness>,
    note: Option<String>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckWitness {
    name: String,
    embedding: String,
}

fn check(
    graphfile: &Path,
    format: GraphFormat,
    json: bool,
    catalog: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let split = load_split_graph(graphfile, format)?;
    let catalog = load_catalog(catalog)?;
    let (labeling, tried) = decide_split_counted(&split)?;

    if let Some(l) = labeling {
        if !check_labeling(&split, &l)? {
            return Err(CliError::Input(
                "internal: the labeling certificate failed re-validation"
                    .to_string(),
            ));
        }
        let names = l.names(&split);
        if json {
            let report = CheckReport {
                answer: "yes",
                k_order: Some(names),
                witness: None,
                note: None,
            };
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        } else {
            writeln!(out, "YES")?;
            writeln!(
                out,
                "K order (position 1 to {}): {}",
                names.len(),
                names.join(" ")
            )?;
        }
        return Ok(0);
    }

    // Re-validate any witness before printing it: the catalog hit must
    // still embed when searched directly.
    let witness = catalog.as_ref().and_then(|c| {
        find_witness(split.graph(), c).and_then(|(entry, _)| {
            contains_induced(split.graph(), &entry.graph)
                .map(|emb| (entry, emb))
        })
    });
    let note = match (&witness, &catalog) {
        (Some(_), _) => None,
        (None, Some(_)) => Some(format!(
            "exhaustive labeling search ({tried} clique orders tried); no catalog witness found"
        )),
        (None, None) => Some(format!(
            "exhaustive labeling search ({tried} clique orders tried); no witness catalog loaded"
        )),
    };
    if json {
        let report = CheckReport {
            answer: "no",
            k_order: None,
            witness: witness.as_ref().map(|(entry, emb)| CheckWitness {
                name: entry.name.clone(),
                embedding: emb.describe(&entry.graph, split.graph()),
            }),
            note: note.clone(),
        };
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "NO")?;
        if let Some((entry, emb)) = &witness {
            writeln!(out, "witness: {}", entry.name)?;
            writeln!(
                out,
                "embedding: {}",
                emb.describe(&entry.graph, split.graph())
            )?;
        }
        if let Some(note) = &note {
            writeln!(out, "note: {note}")?;
        }
    }
    Ok(1)
}

fn represents_cmd(
    word: &str,
    graphfile: &Path,
    format: GraphFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = format::load_graph(graphfile, format)?;
    let w = Word::parse(word, &g)?;
    if represents(&w, &g)? {
        writeln!(out, "YES")?;
        return Ok(0);
    }
    // Name the first disagreeing pair so the NO is actionable.
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let alt = alternates(&w, x, y)?;
            if alt != g.has_edge(x, y) {
                let (xn, yn) = (g.name(x), g.name(y));
                let reason = if alt {
                    format!("{xn} and {yn} alternate but are not adjacent")
                } else {
                    format!("{xn} and {yn} are adjacent but do not alternate")
                };
                writeln!(out, "NO: {reason}")?;
                return Ok(1);
            }
        }
    }
    writeln!(out, "NO")?;
    Ok(1)
}

fn findword(
    graphfile: &Path,
    format: GraphFormat,
    max_occ: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = format::load_graph(graphfile, format)?;
    match find_word(&g, max_occ)? {
        Some(w) => {
            if !represents(&w, &g)? {
                return Err(CliError::Input(
                    "internal: the word certificate failed re-validation"
                        .to_string(),
                ));
            }
            writeln!(out, "{}", w.display(&g))?;
            Ok(0)
        }
        None => {
            writeln!(out, "UNKNOWN within cap {max_occ}")?;
            Ok(1)
        }
    }
}

fn mine(
    e_max: usize,
    k_max: usize,
    out_path: Option<&Path>,
    workers: usize,
    adaptive: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let params = if adaptive {
        MiningParams::incremental(e_max, k_max)
    } else {
        MiningParams::exhaustive(e_max, k_max)
    };
    let report = mine_minimal(&params, workers)?;
    if let Some(path) = out_path {
        let graphs: Vec<_> = report
            .minimal_found
            .iter()
            .map(|m| decode_graph6(&m.graph6))
            .collect::<Result<_, _>>()?;
        let catalog_params = CatalogParams {
            e_max,
            k_max,
            mode: if adaptive { "incremental" } else { "exhaustive" }
                .to_string(),
        };
        save_mined(path, &catalog_params, &graphs)?;
    }
    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(
            out,
            "{} minimal non-word-representable graph(s)",
            report.minimal_found.len()
        )?;
        for m in &report.minimal_found {
            writeln!(out, "  {}  |E| = {}, |K| = {}", m.graph6, m.e, m.k)?;
        }
        writeln!(
            out,
            "classes enumerated: {}, representable: {}",
            report.total_enumerated, report.representable
        )?;
        writeln!(out, "note: {}", report.bounds_note)?;
    }
    Ok(0)
}

fn verify(
    k_max: usize,
    catalog: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let path = catalog.ok_or_else(|| {
        CliError::Input(
            "no catalog given; pass --catalog or set WORDREP_CATALOG"
                .to_string(),
        )
    })?;
    let report = verify_main_theorem(k_max, path, 1)?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(if report.verdict == "verified" { 0 } else { 1 })
}

fn replay(
    fixtures: &Path,
    catalog: Option<&Path>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let catalog = load_catalog(catalog)?;
    let report = replay_proof_fixtures(fixtures, catalog.as_ref())?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(if report.all_passed { 0 } else { 1 })
}

fn catalog_list(
    catalog: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    for name in BUILTIN_NAMES {
        let entry = load_builtin(name)?;
        writeln!(out, "builtin {} {}", entry.name, encode_graph6(&entry.graph))?;
    }
    if let Some(catalog) = load_catalog(catalog)? {
        for entry in catalog.entries() {
            writeln!(out, "mined {} {}", entry.name, encode_graph6(&entry.graph))?;
        }
    }
    Ok(0)
}

fn catalog_show(
    name: &str,
    catalog: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let entry = match load_builtin(name) {
        Ok(entry) => entry,
        Err(_) => match load_catalog(catalog)? {
            Some(catalog) => catalog.get(name)?.clone(),
            None => {
                return Err(CliError::Input(format!(
                    "unknown builtin {name:?} and no mined catalog loaded"
                )))
            }
        },
    };
    let origin = match entry.provenance {
        Provenance::Builtin => "builtin",
        Provenance::Mined => "mined",
    };
    writeln!(out, "name: {}", entry.name)?;
    writeln!(out, "origin: {} — {}", origin, entry.source_note)?;
    writeln!(out, "graph6: {}", encode_graph6(&entry.graph))?;
    match split_partition(&entry.graph) {
        Some(split) => write!(out, "{}", format::render_split(&split))?,
        None => {
            for v in 0..entry.graph.n() {
                let nbrs: Vec<&str> = (0..entry.graph.n())
                    .filter(|&u| entry.graph.has_edge(v, u))
                    .map(|u| entry.graph.name(u))
                    .collect();
                writeln!(out, "{}: {}", entry.graph.name(v), nbrs.join(" "))?;
            }
        }
    }
    Ok(0)
}

fn counts(
    reports_dir: &Path,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(reports_dir)
        .map_err(|source| CliError::Io {
            path: reports_dir.display().to_string(),
            source,
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    let mut reports: Vec<MinerReport> = Vec::with_capacity(paths.len());
    for path in &paths {
        let text =
            std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
        let report =
            serde_json::from_str(&text).map_err(|e| CliError::Malformed {
                file: path.display().to_string(),
                line: e.line(),
                byte: e.column(),
                msg: format!("not a mining report: {e}"),
            })?;
        reports.push(report);
    }
    let table = counts_report(&reports)?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&table)?)?;
    } else {
        writeln!(out, "{table}")?;
    }
    Ok(0)
}
