//! Clique labelings and the word-representability decision for split
//! graphs.
//!
//! A split graph is word-representable exactly when its clique can be
//! ordered `p_1, ..., p_k` so that, viewed through positions, every
//! independent-set neighborhood is a block — an interval `[a, b]` or a
//! wrapped prefix-suffix `[1, a] ∪ [b, k]` — and the blocks avoid two
//! pairwise conflicts: an interval may not span a wrapped block's gap, and
//! two wrapped blocks may not nest. [`decide_split`] searches the clique
//! orderings for such a labeling; a returned labeling is a certificate that
//! [`check_labeling`] re-validates independently.

use crate::error::{Error, Result};
use crate::graph::SplitGraph;
use crate::perm::next_permutation;

/// An ordering of the clique vertices; `order[p]` is the vertex placed at
/// position `p + 1` (positions are 1-based throughout).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueLabeling {
    order: Vec<usize>,
}

impl CliqueLabeling {
    pub fn new(order: Vec<usize>) -> CliqueLabeling {
        CliqueLabeling { order }
    }

    /// The clique vertices from position 1 to position k.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The ordered vertex names, for display and serialization.
    pub fn names(&self, s: &SplitGraph) -> Vec<String> {
        self.order
            .iter()
            .map(|&v| s.graph().name(v).to_string())
            .collect()
    }
}

/// How one independent vertex's neighborhood sits in the position order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Block {
    /// No neighbors; conflicts vacuously with nothing.
    Empty,
    /// Positions `a..=b` (possibly a single position).
    Interval { a: usize, b: usize },
    /// Positions `1..=a` and `b..=k`, with a nonempty gap between.
    Wrapped { a: usize, b: usize },
}

/// Why a labeling fails, in terms of the vertices involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelingViolation {
    /// `vertex`'s neighborhood is neither an interval nor a prefix-suffix
    /// of the positions.
    NeighborhoodNotBlock { vertex: usize },
    /// `interval_vertex`'s interval starts inside `wrapped_vertex`'s prefix
    /// and ends inside its suffix, spanning the gap.
    IntervalSpansGap {
        interval_vertex: usize,
        wrapped_vertex: usize,
    },
    /// Two prefix-suffix neighborhoods nest instead of crossing: one's
    /// prefix runs into the other's suffix.
    WrappedBlocksNested { first: usize, second: usize },
}

impl std::fmt::Display for LabelingViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LabelingViolation::NeighborhoodNotBlock { vertex } => write!(
                f,
                "neighborhood of vertex {vertex} is neither an interval \
                 nor a prefix-suffix of the clique positions"
            ),
            LabelingViolation::IntervalSpansGap {
                interval_vertex,
                wrapped_vertex,
            } => write!(
                f,
                "interval neighborhood of vertex {interval_vertex} spans \
                 the gap of vertex {wrapped_vertex}'s prefix-suffix"
            ),
            LabelingViolation::WrappedBlocksNested { first, second } => {
                write!(
                    f,
                    "prefix-suffix neighborhoods of vertices {first} and \
                     {second} nest instead of crossing"
                )
            }
        }
    }
}

/// True iff the labeling satisfies all block and conflict conditions.
/// `l` must order exactly the clique vertices; anything else is an error.
pub fn check_labeling(s: &SplitGraph, l: &CliqueLabeling) -> Result<bool> {
    Ok(labeling_violation(s, l)?.is_none())
}

/// Like [`check_labeling`], but reports the first violation found, scanning
/// independent vertices in ascending id order.
pub fn labeling_violation(
    s: &SplitGraph,
    l: &CliqueLabeling,
) -> Result<Option<LabelingViolation>> {
    let k = s.k();
    if l.order.len() != k {
        return Err(Error::InvalidArgument(format!(
            "labeling has {} positions for a clique of size {k}",
            l.order.len()
        )));
    }
    let mut seen = 0u64;
    for &v in &l.order {
        if !s.is_clique_vertex(v) || seen >> v & 1 == 1 {
            return Err(Error::InvalidArgument(format!(
                "labeling is not a bijection onto the clique (vertex {v})"
            )));
        }
        seen |= 1 << v;
    }
    Ok(violation_for_order(s, &l.order))
}

/// Violation scan against an order already known to be a clique bijection.
fn violation_for_order(
    s: &SplitGraph,
    order: &[usize],
) -> Option<LabelingViolation> {
    let k = order.len();
    let indep = s.indep_verts();
    let mut blocks = Vec::with_capacity(indep.len());
    for &v in indep {
        match classify_block(position_mask(s, order, v), k) {
            Some(b) => blocks.push((v, b)),
            None => {
                return Some(LabelingViolation::NeighborhoodNotBlock {
                    vertex: v,
                })
            }
        }
    }
    for (i, &(x, bx)) in blocks.iter().enumerate() {
        for &(y, by) in &blocks[i + 1..] {
            if let Some(v) = pair_violation(x, bx, y, by) {
                return Some(v);
            }
        }
    }
    None
}

/// Mask (bit `p` for position `p + 1`) of `v`'s neighbors under `order`.
fn position_mask(s: &SplitGraph, order: &[usize], v: usize) -> u64 {
    let adj = s.graph().adj_mask(v);
    order
        .iter()
        .enumerate()
        .filter(|&(_, &u)| adj >> u & 1 == 1)
        .fold(0, |m, (p, _)| m | 1 << p)
}

/// Classifies a position mask as a block, or `None` when it is neither an
/// interval nor a prefix-suffix. The two readings never overlap: a mask
/// containing both endpoints that is contiguous is the full interval
/// `[1, k]`, and a genuine prefix-suffix has a nonempty gap.
fn classify_block(mask: u64, k: usize) -> Option<Block> {
    if mask == 0 {
        return Some(Block::Empty);
    }
    let lo = mask.trailing_zeros() as usize;
    let hi = 63 - mask.leading_zeros() as usize;
    if mask == run_mask(lo, hi) {
        return Some(Block::Interval { a: lo + 1, b: hi + 1 });
    }
    // Not contiguous: the only remaining block shape needs both position 1
    // and position k present, a maximal initial run `1..=a`, and a maximal
    // final run `b..=k` accounting for everything.
    if lo != 0 || hi != k - 1 {
        return None;
    }
    let a = (!mask).trailing_zeros() as usize; // initial run length
    let suffix_len = (!mask << (64 - k)).leading_zeros() as usize;
    let b = k - suffix_len + 1;
    (mask == run_mask(0, a - 1) | run_mask(b - 1, k - 1))
        .then_some(Block::Wrapped { a, b })
}

/// Mask with bits `lo..=hi` set.
fn run_mask(lo: usize, hi: usize) -> u64 {
    debug_assert!(lo <= hi && hi < 64);
    (u128::from(u64::MAX) >> (63 - (hi - lo)) << lo) as u64
}

/// The pairwise conflict rules between two blocks.
fn pair_violation(
    x: usize,
    bx: Block,
    y: usize,
    by: Block,
) -> Option<LabelingViolation> {
    match (bx, by) {
        (Block::Interval { a: a1, b: b1 }, Block::Wrapped { a: a2, b: b2 }) => {
            (a1 <= a2 && b1 >= b2).then_some(
                LabelingViolation::IntervalSpansGap {
                    interval_vertex: x,
                    wrapped_vertex: y,
                },
            )
        }
        (Block::Wrapped { a: a2, b: b2 }, Block::Interval { a: a1, b: b1 }) => {
            (a1 <= a2 && b1 >= b2).then_some(
                LabelingViolation::IntervalSpansGap {
                    interval_vertex: y,
                    wrapped_vertex: x,
                },
            )
        }
        (Block::Wrapped { a: a1, b: b1 }, Block::Wrapped { a: a2, b: b2 }) => {
            (a2 >= b1 || a1 >= b2).then_some(
                LabelingViolation::WrappedBlocksNested {
                    first: x,
                    second: y,
                },
            )
        }
        _ => None,
    }
}

/// Clique-size guard for the labeling search.
pub const DECIDE_SPLIT_CLIQUE_LIMIT: usize = 9;

/// Searches all clique orderings (lexicographic over vertex ids, skipping
/// each ordering's reversal by requiring the position-1 vertex id to be
/// smaller than the position-k vertex id) and returns the first labeling
/// with no violation. `None` is a proof that no labeling works, hence that
/// the split graph is not word-representable.
pub fn decide_split(s: &SplitGraph) -> Result<Option<CliqueLabeling>> {
    Ok(decide_split_counted(s)?.0)
}

/// [`decide_split`] plus the number of orderings actually checked, for
/// search-effort reporting.
pub fn decide_split_counted(
    s: &SplitGraph,
) -> Result<(Option<CliqueLabeling>, u64)> {
    let k = s.k();
    if k > DECIDE_SPLIT_CLIQUE_LIMIT {
        return Err(Error::Capacity {
            what: "clique size in labeling search",
            got: k,
            limit: DECIDE_SPLIT_CLIQUE_LIMIT,
        });
    }
    let mut order = s.clique_verts().to_vec();
    order.sort_unstable();
    let mut tried = 0u64;
    loop {
        // A labeling and its reversal violate the same conditions (blocks
        // reverse to blocks, conflicts to conflicts), so only the
        // representative with the smaller first vertex id is checked.
        if k < 2 || order[0] < order[k - 1] {
            tried += 1;
            if violation_for_order(s, &order).is_none() {
                return Ok((Some(CliqueLabeling { order }), tried));
            }
        }
        if !next_permutation(&mut order) {
            return Ok((None, tried));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{split_partition, Graph};

    /// The ten-vertex split graph with clique 1..6 (ids 0..5) and
    /// independent vertices a, b, c, d (ids 6..9) with neighborhoods
    /// a: {1,3,5}, b: {1,2}, c: {3,4}, d: {5,6}.
    fn d1() -> SplitGraph {
        let names: Vec<String> = ["1", "2", "3", "4", "5", "6", "a", "b", "c", "d"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut g = Graph::with_names(names).unwrap();
        for u in 0..6 {
            for v in u + 1..6 {
                g.add_edge(u, v).unwrap();
            }
        }
        for (e, nbrs) in [(6, [0, 2, 4].as_slice()), (7, &[0, 1]), (8, &[2, 3]), (9, &[4, 5])] {
            for &u in nbrs {
                g.add_edge(e, u).unwrap();
            }
        }
        split_partition(&g).unwrap()
    }

    #[test]
    fn block_classification() {
        // k = 6; positions as bitmasks.
        let k = 6;
        assert_eq!(classify_block(0, k), Some(Block::Empty));
        assert_eq!(
            classify_block(0b000100, k),
            Some(Block::Interval { a: 3, b: 3 })
        );
        assert_eq!(
            classify_block(0b011110, k),
            Some(Block::Interval { a: 2, b: 5 })
        );
        assert_eq!(
            classify_block(0b111111, k),
            Some(Block::Interval { a: 1, b: 6 })
        );
        // {1,2} ∪ {5,6}: prefix a = 2, suffix b = 5.
        assert_eq!(
            classify_block(0b110011, k),
            Some(Block::Wrapped { a: 2, b: 5 })
        );
        // {1} ∪ {6}.
        assert_eq!(
            classify_block(0b100001, k),
            Some(Block::Wrapped { a: 1, b: 6 })
        );
        // {1,3}: gap but no suffix reaching k.
        assert_eq!(classify_block(0b000101, k), None);
        // {2,3,5,6}: suffix fine, but the low run does not start at 1.
        assert_eq!(classify_block(0b110110, k), None);
        // {1,2,4,6}: starts and ends right but the middle is ragged.
        assert_eq!(classify_block(0b101011, k), None);
    }

    #[test]
    fn identity_labeling_of_the_ten_vertex_example_fails_on_a() {
        let s = d1();
        let l = CliqueLabeling::new(vec![0, 1, 2, 3, 4, 5]);
        // a's neighborhood {1,3,5} sits at positions {1,3,5}: not a block.
        assert_eq!(
            labeling_violation(&s, &l).unwrap(),
            Some(LabelingViolation::NeighborhoodNotBlock { vertex: 6 })
        );
        assert!(!check_labeling(&s, &l).unwrap());
    }

    #[test]
    fn ten_vertex_example_has_no_labeling_and_the_count_is_full() {
        let (found, tried) = decide_split_counted(&d1()).unwrap();
        assert_eq!(found, None);
        // 6! = 720 orderings, halved by skipping reversals.
        assert_eq!(tried, 360);
    }

    #[test]
    fn deleting_any_vertex_of_the_ten_vertex_example_makes_it_labelable() {
        let s = d1();
        for v in 0..10 {
            let t = s.delete_repartitioned(v);
            let l = decide_split(&t).unwrap();
            assert!(
                l.is_some(),
                "deleting vertex {v} should leave a labelable graph"
            );
            // The returned labeling is a valid certificate.
            assert!(check_labeling(&t, &l.unwrap()).unwrap());
        }
    }

    #[test]
    fn wrapped_blocks_must_cross() {
        // Clique of 4, two wrapped vertices: x on {1} ∪ {3,4},
        // y on {1,2} ∪ {4}. x's prefix ends at 1 < y's suffix start 4 and
        // y's prefix ends at 2 < x's suffix start 3: crossing, no conflict.
        let mut g = Graph::new(6).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                g.add_edge(u, v).unwrap();
            }
        }
        for u in [0, 2, 3] {
            g.add_edge(4, u).unwrap();
        }
        for u in [0, 1, 3] {
            g.add_edge(5, u).unwrap();
        }
        let s = split_partition(&g).unwrap();
        let l = CliqueLabeling::new(vec![0, 1, 2, 3]);
        assert_eq!(labeling_violation(&s, &l).unwrap(), None);

        // Nesting needs one vertex's prefix to reach the other's suffix.
        // Clique of 5: x on {1,2,3} ∪ {5} (a1 = 3, b1 = 5) against
        // y on {1} ∪ {3,4,5} (a2 = 1, b2 = 3): a1 >= b2, so x's prefix
        // runs into y's suffix.
        let mut g2 = Graph::new(7).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                g2.add_edge(u, v).unwrap();
            }
        }
        for u in [0, 1, 2, 4] {
            g2.add_edge(5, u).unwrap();
        }
        for u in [0, 2, 3, 4] {
            g2.add_edge(6, u).unwrap();
        }
        let s2 = split_partition(&g2).unwrap();
        let l2 = CliqueLabeling::new(vec![0, 1, 2, 3, 4]);
        assert_eq!(
            labeling_violation(&s2, &l2).unwrap(),
            Some(LabelingViolation::WrappedBlocksNested { first: 5, second: 6 })
        );
    }

    #[test]
    fn interval_spanning_a_gap_is_rejected() {
        // Clique of 4; x wraps {1} ∪ {4}; y is the interval {2,3}: the
        // interval sits inside the gap, so there is no conflict.
        let mut g = Graph::new(6).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                g.add_edge(u, v).unwrap();
            }
        }
        for u in [0, 3] {
            g.add_edge(4, u).unwrap();
        }
        for u in [1, 2] {
            g.add_edge(5, u).unwrap();
        }
        let s = split_partition(&g).unwrap();
        let l = CliqueLabeling::new(vec![0, 1, 2, 3]);
        assert_eq!(labeling_violation(&s, &l).unwrap(), None);

        // Clique of 5; x wraps {1,2} ∪ {5}; z is the interval {2,...,5}:
        // it starts inside x's prefix and ends inside its suffix.
        let mut g2 = Graph::new(7).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                g2.add_edge(u, v).unwrap();
            }
        }
        for u in [0, 1, 4] {
            g2.add_edge(5, u).unwrap();
        }
        for u in [1, 2, 3, 4] {
            g2.add_edge(6, u).unwrap();
        }
        let s2 = split_partition(&g2).unwrap();
        let l2 = CliqueLabeling::new(vec![0, 1, 2, 3, 4]);
        assert_eq!(
            labeling_violation(&s2, &l2).unwrap(),
            Some(LabelingViolation::IntervalSpansGap {
                interval_vertex: 6,
                wrapped_vertex: 5
            })
        );
        // Another ordering does work for this graph (it pulls the wrap's
        // two runs together), so the decision is still positive.
        assert!(decide_split(&s2).unwrap().is_some());
    }

    #[test]
    fn labeling_input_validation() {
        let s = d1();
        // Wrong length.
        let short = CliqueLabeling::new(vec![0, 1, 2]);
        assert!(check_labeling(&s, &short).is_err());
        // Repeats.
        let dup = CliqueLabeling::new(vec![0, 0, 1, 2, 3, 4]);
        assert!(check_labeling(&s, &dup).is_err());
        // Contains an independent vertex.
        let wrong = CliqueLabeling::new(vec![0, 1, 2, 3, 4, 6]);
        assert!(check_labeling(&s, &wrong).is_err());
    }

    #[test]
    fn small_cliques_are_always_labelable() {
        // Any split graph with clique size <= 3 admits a labeling: every
        // subset of up to 3 positions is an interval or a wrap.
        let mut g = Graph::new(6).unwrap();
        for u in 0..3 {
            for v in u + 1..3 {
                g.add_edge(u, v).unwrap();
            }
        }
        g.add_edge(3, 0).unwrap();
        g.add_edge(3, 2).unwrap();
        g.add_edge(4, 1).unwrap();
        g.add_edge(4, 2).unwrap();
        g.add_edge(5, 0).unwrap();
        let s = split_partition(&g).unwrap();
        assert!(decide_split(&s).unwrap().is_some());
    }

    #[test]
    fn decision_guard_is_enforced() {
        let mut g = Graph::new(10).unwrap();
        for u in 0..10 {
            for v in u + 1..10 {
                g.add_edge(u, v).unwrap();
            }
        }
        let s = split_partition(&g).unwrap();
        assert!(matches!(
            decide_split(&s),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn certificate_vertex_order_and_names_round_trip() {
        let s = d1();
        let t = s.delete_repartitioned(6); // drop a
        let l = decide_split(&t).unwrap().unwrap();
        assert!(check_labeling(&t, &l).unwrap());
        // With a gone, the clique 1..6 in natural order works: b, c, d
        // occupy the intervals {1,2}, {3,4}, {5,6}.
        assert_eq!(l.names(&t), vec!["1", "2", "3", "4", "5", "6"]);
    }
}
