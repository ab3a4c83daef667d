//! Graph files for the command line: the line-based split format and
//! single-line graph6 files.
//!
//! The split format names the two sides and then lists each independent
//! vertex's clique neighbors, one line per vertex:
//!
//! ```text
//! E: a b c d
//! K: 1 2 3 4 5 6
//! a: 1 3 5
//! b: 1 2
//! c: 3 4
//! d: 5 6
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. An independent
//! vertex without an adjacency line is isolated. Malformed input reports
//! the file, the 1-based line, and the 1-based byte within that line.

use std::collections::BTreeMap;
use std::path::Path;

use wordrep_core::graph::{decode_graph6, Graph, SplitGraph};

use crate::CliError;

/// How a graph file is encoded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    /// The line-based `E:`/`K:`/adjacency format above.
    Split,
    /// One graph6 line.
    Graph6,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn malformed(file: &Path, line: usize, byte: usize, msg: String) -> CliError {
    CliError::Malformed {
        file: file.display().to_string(),
        line,
        byte,
        msg,
    }
}

/// Whitespace-separated tokens of `line` with their 0-based byte offsets.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

/// Loads and parses a split-format file.
pub fn load_split(path: &Path) -> Result<SplitGraph, CliError> {
    let text = read(path)?;
    parse_split(path, &text)
}

fn parse_split(file: &Path, text: &str) -> Result<SplitGraph, CliError> {
    // (line number, byte offset of the head token, head, byte offset of
    // the tail, tail) for every meaningful line.
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let colon = line.find(':').ok_or_else(|| {
            malformed(
                file,
                line_no,
                line.len() + 1,
                "expected ':' after the vertex or side name".to_string(),
            )
        })?;
        let head_tokens = tokens(&line[..colon]);
        let (head_at, head) = match head_tokens.as_slice() {
            [one] => *one,
            [] => {
                return Err(malformed(
                    file,
                    line_no,
                    1,
                    "missing name before ':'".to_string(),
                ))
            }
            [_, (at, tok), ..] => {
                return Err(malformed(
                    file,
                    line_no,
                    at + 1,
                    format!("unexpected second token {tok:?} before ':'"),
                ))
            }
        };
        rows.push((line_no, head_at + 1, head, colon + 1, &line[colon + 1..]));
    }

    let side = |rows: &[(usize, usize, &str, usize, &str)],
                at: usize,
                want: &str|
     -> Result<(usize, Vec<String>), CliError> {
        let &(line_no, head_at, head, tail_at, tail) =
            rows.get(at).ok_or_else(|| {
                malformed(file, 1, 1, format!("missing the {want:?} line"))
            })?;
        if head != want {
            return Err(malformed(
                file,
                line_no,
                head_at,
                format!("expected the {want:?} line here, found {head:?}"),
            ));
        }
        let mut names = Vec::new();
        for (tok_at, tok) in tokens(tail) {
            if names.iter().any(|n| n == tok) {
                return Err(malformed(
                    file,
                    line_no,
                    tail_at + tok_at + 1,
                    format!("duplicate vertex name {tok:?}"),
                ));
            }
            names.push(tok.to_string());
        }
        Ok((line_no, names))
    };

    let (_, e_names) = side(&rows, 0, "E")?;
    let (k_line, k_names) = side(&rows, 1, "K")?;
    if k_names.is_empty() {
        return Err(malformed(
            file,
            k_line,
            1,
            "the clique side must not be empty".to_string(),
        ));
    }
    if let Some(shared) = k_names.iter().find(|n| e_names.contains(n)) {
        return Err(malformed(
            file,
            k_line,
            1,
            format!("vertex {shared:?} appears on both sides"),
        ));
    }

    let k = k_names.len();
    let k_index: BTreeMap<&str, usize> = k_names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let e_index: BTreeMap<&str, usize> = e_names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), k + i))
        .collect();

    let names: Vec<String> =
        k_names.iter().chain(e_names.iter()).cloned().collect();
    let mut graph = Graph::with_names(names)?;
    for u in 0..k {
        for v in u + 1..k {
            graph.add_edge(u, v)?;
        }
    }

    let mut described = vec![false; e_names.len()];
    for &(line_no, head_at, head, tail_at, tail) in &rows[2..] {
        let &e_id = e_index.get(head).ok_or_else(|| {
            let msg = if k_index.contains_key(head) {
                format!("{head:?} is a clique vertex; adjacency lines describe independent vertices")
            } else {
                format!("unknown independent vertex {head:?}")
            };
            malformed(file, line_no, head_at, msg)
        })?;
        if std::mem::replace(&mut described[e_id - k], true) {
            return Err(malformed(
                file,
                line_no,
                head_at,
                format!("vertex {head:?} already has an adjacency line"),
            ));
        }
        for (tok_at, tok) in tokens(tail) {
            let &k_id = k_index.get(tok).ok_or_else(|| {
                let msg = if e_index.contains_key(tok) {
                    format!("{tok:?} is independent; neighbors must be clique vertices")
                } else {
                    format!("unknown clique vertex {tok:?}")
                };
                malformed(file, line_no, tail_at + tok_at + 1, msg)
            })?;
            if graph.has_edge(e_id, k_id) {
                return Err(malformed(
                    file,
                    line_no,
                    tail_at + tok_at + 1,
                    format!("duplicate neighbor {tok:?}"),
                ));
            }
            graph.add_edge(e_id, k_id)?;
        }
    }

    let n = graph.n();
    Ok(SplitGraph::new(graph, (0..k).collect(), (k..n).collect())?)
}

/// Loads the first meaningful line of a graph6 file.
pub fn load_graph6(path: &Path) -> Result<Graph, CliError> {
    let text = read(path)?;
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        return decode_graph6(trimmed)
            .map_err(|e| malformed(path, idx + 1, 1, e.to_string()));
    }
    Err(malformed(path, 1, 1, "no graph6 line found".to_string()))
}

/// Loads a plain graph in either format.
pub fn load_graph(path: &Path, format: GraphFormat) -> Result<Graph, CliError> {
    match format {
        GraphFormat::Split => Ok(load_split(path)?.graph().clone()),
        GraphFormat::Graph6 => load_graph6(path),
    }
}

/// Renders a split graph back into the line-based format.
pub fn render_split(s: &SplitGraph) -> String {
    let g = s.graph();
    let mut text = String::from("E:");
    for &v in s.indep_verts() {
        text.push(' ');
        text.push_str(g.name(v));
    }
    text.push_str("\nK:");
    for &u in s.clique_verts() {
        text.push(' ');
        text.push_str(g.name(u));
    }
    text.push('\n');
    for &v in s.indep_verts() {
        text.push_str(g.name(v));
        text.push(':');
        for &u in s.clique_verts() {
            if g.has_edge(v, u) {
                text.push(' ');
                text.push_str(g.name(u));
            }
        }
        text.push('\n');
    }
    text
}
