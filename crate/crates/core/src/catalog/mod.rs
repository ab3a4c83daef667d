//! The witness catalog: builtin reference graphs, persisted mining
//! results, and induced-witness lookup.
//!
//! Four graphs ship builtin: the three minimal split graphs that are not
//! comparability graphs (`B1`, the triangle with a pendant at each corner;
//! `B2`, the triangle with an independent vertex astride each edge; `B3`,
//! their seven-vertex sibling) and `D1`, the ten-vertex split graph that is
//! not word-representable. A mined catalog is a checksummed file of
//! graph6 lines produced by the miner; entries are (re)named
//! deterministically at load time, and [`find_witness`] reports the first
//! catalog entry occurring as an induced subgraph of a given graph.

use crate::error::{Error, Result};
use crate::graph::{
    contains_induced, decode_graph6, encode_graph6, is_isomorphic,
    Embedding, Graph,
};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::Path;

/// Where a catalog entry came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Builtin,
    Mined,
}

/// One witness graph with its identity and origin.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub provenance: Provenance,
    pub source_note: String,
}

/// Names accepted by [`load_builtin`], in listing order.
pub const BUILTIN_NAMES: [&str; 4] = ["B1", "B2", "B3", "D1"];

/// Returns a builtin graph by name (`B1`, `B2`, `B3`, or `D1`).
pub fn load_builtin(name: &str) -> Result<CatalogEntry> {
    let (graph, note) = match name {
        "B1" => (b1(), "triangle with a pendant vertex at each corner"),
        "B2" => (b2(), "triangle with a vertex astride each edge"),
        "B3" => (b3(), "seven-vertex non-comparability split graph"),
        "D1" => (d1(), "ten-vertex split graph that is not word-representable"),
        _ => {
            return Err(Error::UnknownName {
                name: name.to_string(),
                known: BUILTIN_NAMES.join(", "),
            })
        }
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        graph,
        provenance: Provenance::Builtin,
        source_note: note.to_string(),
    })
}

/// The three builtin obstructions whose absence characterizes split
/// comparability graphs.
pub fn builtin_obstructions() -> Vec<Graph> {
    vec![b1(), b2(), b3()]
}

fn named(names: &[&str], edges: &[(usize, usize)]) -> Graph {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let mut g = Graph::with_names(names).expect("builtin names are valid");
    for &(u, v) in edges {
        g.add_edge(u, v).expect("builtin edges are valid");
    }
    g
}

fn b1() -> Graph {
    // Clique {c, d, e}; pendants a-c, b-d, f-e.
    named(
        &["a", "b", "c", "d", "e", "f"],
        &[(0, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)],
    )
}

fn b2() -> Graph {
    // Clique {b, d, e}; a astride {b, d}, c astride {b, e}, f astride
    // {d, e}.
    named(
        &["a", "b", "c", "d", "e", "f"],
        &[
            (0, 1),
            (1, 2),
            (0, 3),
            (3, 5),
            (5, 4),
            (4, 2),
            (3, 4),
            (3, 1),
            (1, 4),
        ],
    )
}

fn b3() -> Graph {
    // Clique {c, d, f}; pendants a-c, b-d; e astride {c, f}, g astride
    // {d, f}.
    named(
        &["a", "b", "c", "d", "e", "f", "g"],
        &[
            (4, 5),
            (5, 6),
            (4, 2),
            (2, 5),
            (5, 3),
            (3, 6),
            (2, 3),
            (1, 3),
            (0, 2),
        ],
    )
}

fn d1() -> Graph {
    // Clique 1..6; independent a: {1,3,5}, b: {1,2}, c: {3,4}, d: {5,6}.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            edges.push((u, v));
        }
    }
    edges.extend([
        (6, 0),
        (6, 2),
        (6, 4),
        (7, 0),
        (7, 1),
        (8, 2),
        (8, 3),
        (9, 4),
        (9, 5),
    ]);
    named(
        &["1", "2", "3", "4", "5", "6", "a", "b", "c", "d"],
        &edges,
    )
}

/// Mining parameters recorded in a catalog header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogParams {
    pub e_max: usize,
    pub k_max: usize,
    pub mode: String,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct CatalogHeader {
    version: u32,
    params: CatalogParams,
    count: usize,
    checksum: String,
}

const CATALOG_VERSION: u32 = 1;

fn payload_checksum(lines: &[String]) -> String {
    let mut hasher = Sha256::new();
    for line in lines {
        hasher.update(line.as_bytes());
        hasher.update(b"\n");
    }
    format!("{:x}", hasher.finalize())
}

/// Writes a mined catalog: a JSON header line, then one graph6 line per
/// graph, in the order given (the miner emits canonical-key order). The
/// header carries a checksum over the graph6 payload so that edits or
/// truncations are caught at load time.
pub fn save_mined(
    path: &Path,
    params: &CatalogParams,
    graphs: &[Graph],
) -> Result<()> {
    let lines: Vec<String> = graphs.iter().map(encode_graph6).collect();
    let header = CatalogHeader {
        version: CATALOG_VERSION,
        params: params.clone(),
        count: lines.len(),
        checksum: payload_checksum(&lines),
    };
    let mut text = serde_json::to_string(&header)?;
    text.push('\n');
    for line in &lines {
        text.push_str(line);
        text.push('\n');
    }
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// A loaded witness catalog.
#[derive(Clone, Debug)]
pub struct Catalog {
    params: CatalogParams,
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Entries in witness-scan order: the entry matching the builtin `D1`
    /// first (when present), then mined entries `M1`, `M2`, ... in file
    /// order.
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn params(&self) -> &CatalogParams {
        &self.params
    }

    /// Looks an entry up by name.
    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownName {
                name: name.to_string(),
                known: self
                    .entries
                    .iter()
                    .map(|e| e.name.as_str())
                    .collect::<Vec<_>>()
                    .join(", "),
            })
    }
}

/// Loads a mined catalog, verifying the header checksum and count.
/// Entries are named at load: a graph isomorphic to the builtin `D1` is
/// named `D1`; the rest become `M1`, `M2`, ... in file order.
pub fn load_mined(path: &Path) -> Result<Catalog> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines();
    let header_line = lines.next().ok_or_else(|| {
        Error::Integrity(format!("{}: empty catalog file", path.display()))
    })?;
    let header: CatalogHeader = serde_json::from_str(header_line)?;
    if header.version != CATALOG_VERSION {
        return Err(Error::Integrity(format!(
            "{}: unsupported catalog version {}",
            path.display(),
            header.version
        )));
    }
    let payload: Vec<String> = lines.map(|l| l.to_string()).collect();
    if payload.len() != header.count {
        return Err(Error::Integrity(format!(
            "{}: header says {} graphs, file has {}",
            path.display(),
            header.count,
            payload.len()
        )));
    }
    if payload_checksum(&payload) != header.checksum {
        return Err(Error::Integrity(format!(
            "{}: catalog payload does not match its checksum",
            path.display()
        )));
    }
    let reference = d1();
    let mut entries = Vec::with_capacity(payload.len());
    let mut mined_index = 0usize;
    for (i, line) in payload.iter().enumerate() {
        let graph = decode_graph6(line).map_err(|e| {
            Error::Integrity(format!(
                "{}: line {}: {}",
                path.display(),
                i + 2,
                e
            ))
        })?;
        let entry = if is_isomorphic(&graph, &reference) {
            CatalogEntry {
                name: "D1".to_string(),
                graph,
                provenance: Provenance::Mined,
                source_note: "mined; matches the builtin D1".to_string(),
            }
        } else {
            mined_index += 1;
            CatalogEntry {
                name: format!("M{mined_index}"),
                graph,
                provenance: Provenance::Mined,
                source_note: "mined minimal non-representable split graph"
                    .to_string(),
            }
        };
        entries.push(entry);
    }
    // Witness-scan order: D1 first, then M1, M2, ... (file order).
    entries.sort_by_key(|e| (e.name != "D1", e.name.len(), e.name.clone()));
    Ok(Catalog {
        params: header.params,
        entries,
    })
}

/// Scans the catalog in entry order and returns the first entry induced in
/// `g`, along with the embedding that proves it.
pub fn find_witness<'c>(
    g: &Graph,
    catalog: &'c Catalog,
) -> Option<(&'c CatalogEntry, Embedding)> {
    catalog
        .entries
        .iter()
        .find_map(|e| contains_induced(g, &e.graph).map(|emb| (e, emb)))
}
