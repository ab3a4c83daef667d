//! Split graphs: certified clique/independent-set partitions, reduction,
//! and canonical keys for isomorph rejection.
//!
//! The convention throughout is that the clique side of the partition is
//! *maximal*: no independent-set vertex is adjacent to every clique vertex.
//! All decision procedures in this crate assume that convention.

use super::{bits, low_bits, Graph};
use crate::error::{Error, Result};
use crate::perm::next_permutation;

/// A graph together with a certified partition into a clique `K` and an
/// independent set `E`, with `K` maximal.
///
/// Both vertex lists are kept in ascending id order; all invariants are
/// validated at construction, so holders of a `SplitGraph` may rely on them.
#[derive(Clone, PartialEq, Eq)]
pub struct SplitGraph {
    graph: Graph,
    clique: Vec<usize>,
    indep: Vec<usize>,
}

impl std::fmt::Debug for SplitGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = |vs: &[usize]| {
            vs.iter()
                .map(|&v| self.graph.name(v).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "SplitGraph(K={{{}}}, E={{{}}}, {:?})",
            names(&self.clique),
            names(&self.indep),
            self.graph
        )
    }
}

impl SplitGraph {
    /// Certifies a split partition. The structural invariants — the two
    /// sides partition the vertex set, `clique` is complete, `indep` is
    /// edgeless — are hard errors. Maximality is repaired rather than
    /// rejected: any independent vertex adjacent to all of the clique is
    /// promoted into the clique (repeatedly, until the convention holds).
    pub fn new(
        graph: Graph,
        clique: Vec<usize>,
        indep: Vec<usize>,
    ) -> Result<SplitGraph> {
        let mut clique = clique;
        let mut indep = indep;
        clique.sort_unstable();
        indep.sort_unstable();

        if clique.iter().chain(&indep).any(|&v| v >= graph.n()) {
            return Err(Error::InvalidArgument(format!(
                "partition references a vertex id outside 0..{}",
                graph.n()
            )));
        }
        let cmask = mask_of(&clique);
        let imask = mask_of(&indep);
        if clique.len() + indep.len() != graph.n()
            || cmask & imask != 0
            || cmask | imask != low_bits(graph.n())
            || cmask.count_ones() as usize != clique.len()
            || imask.count_ones() as usize != indep.len()
        {
            return Err(Error::InvalidArgument(
                "clique and independent set must partition the vertices"
                    .to_string(),
            ));
        }
        for &u in &clique {
            if graph.adj_mask(u) & cmask != cmask & !(1 << u) {
                return Err(Error::InvalidArgument(format!(
                    "clique side is not complete: vertex {} misses a clique neighbor",
                    graph.name(u)
                )));
            }
        }
        for &v in &indep {
            if graph.adj_mask(v) & imask != 0 {
                return Err(Error::InvalidArgument(format!(
                    "independent side has an internal edge at vertex {}",
                    graph.name(v)
                )));
            }
        }

        // Maximality repair: a vertex adjacent to all of K belongs in K.
        let mut cmask = cmask;
        loop {
            let promote = indep
                .iter()
                .position(|&v| graph.adj_mask(v) & cmask == cmask);
            match promote {
                Some(idx) => {
                    let v = indep.remove(idx);
                    cmask |= 1 << v;
                    let pos = clique.partition_point(|&u| u < v);
                    clique.insert(pos, v);
                }
                None => break,
            }
        }
        Ok(SplitGraph {
            graph,
            clique,
            indep,
        })
    }

    /// Builds the split graph over a complete clique `1..=k` plus one
    /// independent vertex per entry of `columns`, where each column is a
    /// bitmask over clique *indices* `0..k`. Vertex ids: clique `0..k`,
    /// then independent vertices in column order.
    pub fn from_columns(
        k: usize,
        columns: &[u64],
        clique_names: Option<&[String]>,
        e_names: Option<&[String]>,
    ) -> Result<SplitGraph> {
        let e = columns.len();
        let names: Vec<String> = match (clique_names, e_names) {
            (Some(kn), Some(en)) => {
                if kn.len() != k || en.len() != e {
                    return Err(Error::InvalidArgument(
                        "name lists must match the clique and column counts"
                            .to_string(),
                    ));
                }
                kn.iter().chain(en.iter()).cloned().collect()
            }
            (None, None) => (1..=k)
                .map(|i| i.to_string())
                .chain((0..e).map(e_vertex_name))
                .collect(),
            _ => {
                return Err(Error::InvalidArgument(
                    "provide both name lists or neither".to_string(),
                ))
            }
        };
        let mut graph = Graph::with_names(names)?;
        for u in 0..k {
            for v in u + 1..k {
                graph.add_edge(u, v)?;
            }
        }
        for (x, &col) in columns.iter().enumerate() {
            if col & !low_bits(k) != 0 {
                return Err(Error::InvalidArgument(format!(
                    "column {x} references clique indices outside 0..{k}"
                )));
            }
            for u in bits(col) {
                graph.add_edge(u, k + x)?;
            }
        }
        SplitGraph::new(graph, (0..k).collect(), (k..k + e).collect())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Clique vertex ids, ascending.
    pub fn clique_verts(&self) -> &[usize] {
        &self.clique
    }

    /// Independent-set vertex ids, ascending.
    pub fn indep_verts(&self) -> &[usize] {
        &self.indep
    }

    pub fn k(&self) -> usize {
        self.clique.len()
    }

    pub fn e_size(&self) -> usize {
        self.indep.len()
    }

    pub fn clique_mask(&self) -> u64 {
        mask_of(&self.clique)
    }

    pub fn indep_mask(&self) -> u64 {
        mask_of(&self.indep)
    }

    pub fn is_clique_vertex(&self, v: usize) -> bool {
        self.clique_mask() >> v & 1 == 1
    }

    /// Number of independent-set neighbors of `v` (any vertex).
    pub fn e_degree(&self, v: usize) -> usize {
        (self.graph.adj_mask(v) & self.indep_mask()).count_ones() as usize
    }

    /// One bitmask per clique vertex (in clique order): which independent
    /// vertices (as indices into `indep_verts`) it is adjacent to.
    pub fn rows(&self) -> Vec<u64> {
        self.clique
            .iter()
            .map(|&u| {
                let mut row = 0u64;
                for (x, &v) in self.indep.iter().enumerate() {
                    if self.graph.has_edge(u, v) {
                        row |= 1 << x;
                    }
                }
                row
            })
            .collect()
    }

    /// One bitmask per independent vertex (in indep order): which clique
    /// vertices (as indices into `clique_verts`) it is adjacent to.
    pub fn columns(&self) -> Vec<u64> {
        self.indep
            .iter()
            .map(|&v| {
                let mut col = 0u64;
                for (i, &u) in self.clique.iter().enumerate() {
                    if self.graph.has_edge(u, v) {
                        col |= 1 << i;
                    }
                }
                col
            })
            .collect()
    }

    /// Deletes a vertex and re-derives the partition from scratch.
    ///
    /// Deleting from a split graph always leaves a split graph, but deleting
    /// a clique vertex can make the old clique non-maximal, so patching the
    /// existing partition would be unsound.
    pub fn delete_repartitioned(&self, v: usize) -> SplitGraph {
        split_partition(&self.graph.delete_vertex(v))
            .expect("vertex deletion preserves being a split graph")
    }
}

/// Default independent-vertex names: a, b, ..., z, e26, e27, ...
fn e_vertex_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("e{i}")
    }
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Finds a maximal-clique split partition of `g`, or `None` when `g` is not
/// a split graph.
///
/// Procedure: sort vertices by degree (descending, ids breaking ties), take
/// the largest prefix length `m` with `d_i >= i-1`, and accept iff the
/// degree-sequence identity `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i` holds;
/// the prefix is then the clique. Maximality is enforced afterwards by
/// promoting any independent vertex adjacent to all of the clique.
/// Deterministic by construction.
pub fn split_partition(g: &Graph) -> Option<SplitGraph> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg = |i: usize| g.degree(order[i]);

    let mut m = 0;
    while m < n && deg(m) >= m {
        m += 1;
    }
    let head: usize = (0..m).map(deg).sum();
    let tail: usize = (m..n).map(deg).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    SplitGraph::new(g.clone(), order[..m].to_vec(), order[m..].to_vec()).ok()
}

/// True when `s` carries no reducible structure: every independent vertex
/// has degree at least 2, no two independent vertices share a neighborhood,
/// and no two clique vertices share an independent-side neighborhood (in
/// particular at most one clique vertex has no independent neighbors).
pub fn is_reduced(s: &SplitGraph) -> bool {
    let cols = s.columns();
    let rows = s.rows();
    cols.iter().all(|c| c.count_ones() >= 2)
        && all_distinct(&cols)
        && all_distinct(&rows)
}

fn all_distinct(masks: &[u64]) -> bool {
    let mut sorted = masks.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Repeatedly strips representability-neutral structure: independent
/// vertices of degree 0 or 1, twin independent vertices (equal
/// neighborhoods), and twin clique vertices (equal independent-side
/// neighborhoods), re-deriving the partition after every deletion.
///
/// The result is reduced ([`is_reduced`]) and word-representable iff the
/// input is. An already-reduced input is returned unchanged.
pub fn reduce(s: &SplitGraph) -> SplitGraph {
    let mut cur = s.clone();
    loop {
        let victim = reduction_victim(&cur);
        match victim {
            Some(v) => cur = cur.delete_repartitioned(v),
            None => return cur,
        }
    }
}

/// The lowest-id vertex removable by a reduction rule, if any.
fn reduction_victim(s: &SplitGraph) -> Option<usize> {
    let cols = s.columns();
    let rows = s.rows();
    // Degree-0/1 independent vertices.
    if let Some(x) = (0..cols.len()).find(|&x| cols[x].count_ones() < 2) {
        return Some(s.indep_verts()[x]);
    }
    // Twins: keep the first of each duplicate pair, drop the second.
    for x in 0..cols.len() {
        for y in x + 1..cols.len() {
            if cols[x] == cols[y] {
                return Some(s.indep_verts()[y]);
            }
        }
    }
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i] == rows[j] {
                return Some(s.clique_verts()[j]);
            }
        }
    }
    None
}

/// Isomorphism key for reduced split graphs: equal keys iff the underlying
/// graphs are isomorphic.
///
/// The key fixes `(|E|, |K|)` and a matrix canonicalized over vertex
/// relabelings of whichever side is smaller: the sorted clique-row masks
/// minimized over permutations of the independent side when `|E| <= |K|`,
/// otherwise the sorted column masks minimized over permutations of the
/// clique. In reduced form both sides have pairwise-distinct neighborhoods,
/// which makes either minimized matrix a complete invariant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    e: usize,
    k: usize,
    mat: Vec<u64>,
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e{}k{}", self.e, self.k)?;
        for m in &self.mat {
            write!(f, ":{m:x}")?;
        }
        Ok(())
    }
}

/// Guard on the factorial minimization inside [`canonical_key`].
pub const KEY_SIDE_LIMIT: usize = 8;

/// Computes the canonical key of a *reduced* split graph; rejects
/// non-reduced input (twins or low-degree independent vertices would make
/// equal keys diverge from isomorphism).
pub fn canonical_key(s: &SplitGraph) -> Result<CanonicalKey> {
    if !is_reduced(s) {
        return Err(Error::InvalidArgument(
            "canonical_key requires a reduced split graph".to_string(),
        ));
    }
    let side = s.e_size().min(s.k());
    if side > KEY_SIDE_LIMIT {
        return Err(Error::Capacity {
            what: "canonical-key minimization side",
            got: side,
            limit: KEY_SIDE_LIMIT,
        });
    }
    Ok(canonical_key_unchecked(s))
}

/// Same computation as [`canonical_key`] without the reduced-form check.
///
/// The miner needs keys on intermediate graphs (duplicate clique rows are
/// legitimate mid-enumeration); on those, equal keys still imply isomorphic
/// graphs, and the miner only relies on that direction plus equality on the
/// reduced graphs it reports.
pub(crate) fn canonical_key_unchecked(s: &SplitGraph) -> CanonicalKey {
    canonical_key_from_columns(s.k(), &s.columns())
}

/// Same key computed straight from column masks, without materializing a
/// graph. The enumeration loop calls this once per candidate family, so
/// only one representative per isomorphism class is ever built.
pub(crate) fn canonical_key_from_columns(k: usize, cols: &[u64]) -> CanonicalKey {
    let e = cols.len();
    let mat = if e <= k {
        let rows: Vec<u64> = (0..k)
            .map(|r| {
                cols.iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &c)| acc | ((c >> r) & 1) << j)
            })
            .collect();
        minimized_matrix(&rows, e)
    } else {
        minimized_matrix(cols, k)
    };
    CanonicalKey { e, k, mat }
}

/// Minimum over all permutations of the `width` mask bits of the sorted
/// mask vector.
fn minimized_matrix(masks: &[u64], width: usize) -> Vec<u64> {
    let mut perm: Vec<usize> = (0..width).collect();
    let mut best: Option<Vec<u64>> = None;
    loop {
        let mut cand: Vec<u64> = masks
            .iter()
            .map(|&m| bits(m).fold(0u64, |acc, b| acc | 1 << perm[b]))
            .collect();
        cand.sort_unstable();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
        if !next_permutation(&mut perm) {
            return best.unwrap();
        }
    }
}
