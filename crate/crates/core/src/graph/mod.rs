//! Undirected simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which keeps the
//! hot inner loops of the orientation checks and the miner branch-free.
//! Vertices are dense indices `0..n`; every graph also carries display
//! names so parsed inputs keep their original labels.

mod graph6;
mod split;

pub use graph6::{decode_graph6, encode_graph6};
pub use split::{
    canonical_key, is_reduced, reduce, split_partition, CanonicalKey,
    SplitGraph, KEY_SIDE_LIMIT,
};
pub(crate) use split::canonical_key_from_columns;

use crate::error::{Error, Result};

/// Hard upper bound on vertex count, fixed by the `u64` adjacency masks.
pub const MAX_VERTICES: usize = 64;

/// An undirected simple graph with named vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    names: Vec<String>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}-{}", self.names[u], self.names[v])?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// An edgeless graph on `n` vertices named `0..n`.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                got: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            names: (0..n).map(|i| i.to_string()).collect(),
        })
    }

    /// An edgeless graph whose vertices carry the given display names.
    /// Names must be nonempty and pairwise distinct.
    pub fn with_names<S: Into<String>>(names: Vec<S>) -> Result<Graph> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut g = Graph::new(names.len())?;
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "vertex {i} has an empty name"
                )));
            }
            if names[..i].contains(a) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate vertex name {a:?}"
                )));
            }
        }
        g.names = names;
        Ok(g)
    }

    /// Builds a graph from an edge list over vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of the vertex with the given display name.
    pub fn vertex_by_name(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownName {
                name: name.to_string(),
                known: self.names.join(", "),
            })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.adj[u] >> (u + 1) << (u + 1)).map(move |v| (u, v))
        })
    }

    /// The subgraph induced by the masked vertices, in ascending id order.
    /// Names are carried over.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & low_bits(self.n)).collect();
        let mut g = Graph {
            n: keep.len(),
            adj: vec![0; keep.len()],
            names: keep.iter().map(|&v| self.names[v].clone()).collect(),
        };
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// The graph with vertex `v` deleted (remaining ids shift down).
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(low_bits(self.n) & !(1 << v))
    }

    /// Number of triangles through each vertex; cheap isomorphism invariant.
    pub fn triangle_counts(&self) -> Vec<usize> {
        (0..self.n)
            .map(|v| {
                bits(self.adj[v])
                    .map(|u| (self.adj[v] & self.adj[u]).count_ones() as usize)
                    .sum::<usize>()
                    / 2
            })
            .collect()
    }
}

/// Iterates over the set bit positions of a mask, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Mask with the lowest `n` bits set.
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A vertex map witnessing that one graph occurs inside another as an
/// induced subgraph: `map[p]` is the host vertex playing pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Renders the map using the two graphs' vertex names.
    pub fn describe(&self, pattern: &Graph, host: &Graph) -> String {
        self.map
            .iter()
            .enumerate()
            .map(|(p, &h)| format!("{}->{}", pattern.name(p), host.name(h)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Searches for `pattern` as an *induced* subgraph of `host`.
///
/// Pattern vertices are assigned in id order and host candidates are tried
/// in ascending id order, so the returned embedding is the lexicographically
/// least one. Deterministic; returns `None` when no embedding exists.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n > host.n {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.n);
    let mut used: u64 = 0;
    if extend_embedding(host, pattern, &mut map, &mut used) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn extend_embedding(
    host: &Graph,
    pattern: &Graph,
    map: &mut Vec<usize>,
    used: &mut u64,
) -> bool {
    let p = map.len();
    if p == pattern.n {
        return true;
    }
    for h in 0..host.n {
        if *used >> h & 1 == 1 || host.degree(h) < pattern.degree(p) {
            continue;
        }
        // Induced means adjacency must match exactly against every vertex
        // already placed, edges and non-edges alike.
        let ok = (0..p)
            .all(|q| pattern.has_edge(q, p) == host.has_edge(map[q], h));
        if !ok {
            continue;
        }
        map.push(h);
        *used |= 1 << h;
        if extend_embedding(host, pattern, map, used) {
            return true;
        }
        map.pop();
        *used &= !(1 << h);
    }
    false
}

/// Tests whether two graphs are isomorphic.
///
/// Quick invariant rejections (order, size, degree and triangle profiles)
/// followed by a backtracking search for an exact adjacency-preserving
/// bijection.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n != h.n || g.edge_count() != h.edge_count() {
        return false;
    }
    let profile = |x: &Graph| {
        let tri = x.triangle_counts();
        let mut p: Vec<(usize, usize)> =
            (0..x.n).map(|v| (x.degree(v), tri[v])).collect();
        p.sort_unstable();
        p
    };
    if profile(g) != profile(h) {
        return false;
    }
    // Same order and an exact-match embedding is exactly an isomorphism.
    contains_induced(h, g).is_some()
}
