//! Transitive orientations (comparability graphs) and the shortcut
//! word-representability test through a universal vertex.
//!
//! A graph is a *comparability graph* when its edges can be oriented
//! transitively (`a -> b` and `b -> c` force the edge `a -> c`). For a
//! graph with a universal vertex, word-representability is equivalent to
//! the rest of the graph being a comparability graph, which gives a cheap
//! independent oracle for such inputs. Split comparability graphs are also
//! recognized structurally, by the absence of three small induced
//! obstructions.

use crate::catalog::builtin_obstructions;
use crate::error::{Error, Result};
use crate::graph::{bits, contains_induced, Graph, SplitGraph};
use crate::semitrans::orient::Orientation;

/// Vertex-count guard for the transitive-orientation search.
pub const COMPARABILITY_VERTEX_LIMIT: usize = 9;

/// Complete search for a transitive orientation. `None` proves none
/// exists. Deterministic: edges are branched in ascending `(u, v)` order,
/// with `u -> v` attempted before `v -> u`.
pub fn is_comparability(g: &Graph) -> Result<Option<Orientation>> {
    let n = g.n();
    if n > COMPARABILITY_VERTEX_LIMIT {
        return Err(Error::Capacity {
            what: "comparability-search vertex count",
            got: n,
            limit: COMPARABILITY_VERTEX_LIMIT,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let partial = Partial {
        out: vec![0; n],
        assigned: vec![0; n],
    };
    Ok(search(g, &edges, partial)
        .map(|p| arcs_from_out(g, &p.out))
        .map(|arcs| {
            Orientation::from_arcs(g.clone(), &arcs)
                .expect("search assigns every edge exactly once")
        }))
}

#[derive(Clone)]
struct Partial {
    /// Directions chosen so far.
    out: Vec<u64>,
    /// `assigned[u]` has bit `v` when edge `{u, v}` is directed.
    assigned: Vec<u64>,
}

impl Partial {
    /// Directs `a -> b`, queueing the new arc; false on conflict with an
    /// existing choice.
    fn orient(&mut self, a: usize, b: usize, queue: &mut Vec<(usize, usize)>) -> bool {
        if self.assigned[a] >> b & 1 == 1 {
            return self.out[a] >> b & 1 == 1;
        }
        self.assigned[a] |= 1 << b;
        self.assigned[b] |= 1 << a;
        self.out[a] |= 1 << b;
        queue.push((a, b));
        true
    }
}

/// Exhausts the consequences of the queued arcs. Each arc `a -> b` forces:
/// existing arcs compose transitively (`b -> c` demands `a -> c`, and
/// `c -> a` demands `c -> b`, both failing outright when the needed edge is
/// absent), and a neighbor of one endpoint that is nonadjacent to the other
/// has only one viable direction left.
fn propagate(g: &Graph, p: &mut Partial, queue: &mut Vec<(usize, usize)>) -> bool {
    while let Some((a, b)) = queue.pop() {
        // Compositions through b and into a.
        for c in bits(p.out[b]) {
            if !g.has_edge(a, c) || !p.orient(a, c, queue) {
                return false;
            }
        }
        for c in bits(g.adj_mask(a) & !p.out[a]) {
            if p.assigned[a] >> c & 1 == 1 {
                // c -> a is chosen; it must extend to c -> b.
                if !g.has_edge(c, b) || !p.orient(c, b, queue) {
                    return false;
                }
            }
        }
        // Nonadjacency forcing: c adjacent to b but not to a cannot take
        // b -> c (that would demand the absent edge a -> c), so c -> b;
        // symmetrically, c adjacent to a but not to b must take a -> c.
        for c in bits(g.adj_mask(b) & !g.adj_mask(a)) {
            if c != a && !p.orient(c, b, queue) {
                return false;
            }
        }
        for c in bits(g.adj_mask(a) & !g.adj_mask(b)) {
            if c != b && !p.orient(a, c, queue) {
                return false;
            }
        }
    }
    true
}

fn search(g: &Graph, edges: &[(usize, usize)], p: Partial) -> Option<Partial> {
    let next = edges
        .iter()
        .find(|&&(u, v)| p.assigned[u] >> v & 1 == 0);
    let (u, v) = match next {
        Some(&e) => e,
        None => return fully_transitive(&p).then_some(p),
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut branch = p.clone();
        let mut queue = Vec::new();
        if branch.orient(a, b, &mut queue)
            && propagate(g, &mut branch, &mut queue)
        {
            if let Some(done) = search(g, edges, branch) {
                return Some(done);
            }
        }
    }
    None
}

/// Full transitivity audit of a complete assignment: every two-step path
/// `a -> b -> c` must close with `a -> c`.
fn fully_transitive(p: &Partial) -> bool {
    (0..p.out.len())
        .all(|a| bits(p.out[a]).all(|b| p.out[b] & !p.out[a] == 0))
}

fn arcs_from_out(g: &Graph, out: &[u64]) -> Vec<(usize, usize)> {
    (0..g.n())
        .flat_map(|u| bits(out[u]).map(move |v| (u, v)))
        .collect()
}

/// Structural recognition of split comparability graphs: none of the three
/// builtin obstruction graphs occurs as an induced subgraph.
pub fn is_split_comparability(s: &SplitGraph) -> bool {
    builtin_obstructions()
        .iter()
        .all(|b| contains_induced(s.graph(), b).is_none())
}

/// Word-representability through a universal vertex: if `g` has a vertex
/// adjacent to everything else (ties broken by smallest id), `g` is
/// word-representable iff the rest is a comparability graph. Returns
/// `None` when no universal vertex exists (the reduction does not apply).
pub fn wr_via_universal(g: &Graph) -> Result<Option<bool>> {
    let n = g.n();
    let universal = (0..n).find(|&v| g.degree(v) == n - 1);
    match universal {
        None => Ok(None),
        Some(v) => {
            let rest = g.delete_vertex(v);
            Ok(Some(is_comparability(&rest)?.is_some()))
        }
    }
}
