//! Search for minimal non-word-representable split graphs.
//!
//! The miner enumerates split graphs in reduced-candidate form up to given
//! bounds, decides each one with the clique-labeling procedure, and keeps
//! exactly the graphs that fail while every single-vertex deletion
//! succeeds. Minimality is machine-checked on every reported graph: the
//! report carries, per graph, the exhausted labeling count (the evidence
//! that no labeling exists) and one labeling certificate per deletion.
//!
//! Two growth modes are offered. *Exhaustive* walks every level `|E| = 0,
//! 1, …, eMax` outright. *Incremental* grows, per clique size, only the
//! word-representable families by one independent vertex at a time —
//! a failing extension is a minimality candidate — and stops early once
//! two consecutive sizes contribute nothing new. Incremental search is
//! complete for minimal graphs: deleting an independent vertex of a
//! minimal graph leaves a representable graph, so every minimal graph is
//! one extension away from a representable family on the frontier. (After
//! the maximality repair the stored clique is always a maximum clique, and
//! any two maximum-clique partitions of a split graph differ by swapping a
//! pair of false twins — an automorphism — so extending the stored clique
//! of one representative per isomorphism class covers every class.)

mod enumerate;
mod replay;
mod verify;

pub use replay::{replay_proof_fixtures, FixtureOutcome, ReplayReport};
pub use verify::{counts_report, verify_main_theorem, CountsTable, VerifyReport};

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_key_from_columns, encode_graph6, CanonicalKey, SplitGraph};
use crate::semitrans::{decide_split, decide_split_counted};

/// How `mine_minimal` traverses the search space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthMode {
    /// Every level `|E| = 0..=eMax` is enumerated outright.
    #[default]
    Exhaustive,
    /// Only representable families are extended, one vertex at a time,
    /// with an adaptive stop after two fruitless sizes.
    Incremental,
}

/// Bounds and switches for one mining run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MiningParams {
    /// Largest independent-set size to search (exhaustive) or the hard
    /// cap on the adaptive growth (incremental).
    pub e_max: usize,
    /// Largest clique size to search.
    pub k_max: usize,
    /// Whether one clique vertex may have an empty E-neighborhood.
    #[serde(default = "default_true")]
    pub allow_empty_clique_vertex: bool,
    /// Traversal strategy.
    #[serde(default)]
    pub growth_mode: GrowthMode,
}

fn default_true() -> bool {
    true
}

impl MiningParams {
    /// Exhaustive-mode parameters with the default switches.
    pub fn exhaustive(e_max: usize, k_max: usize) -> MiningParams {
        MiningParams {
            e_max,
            k_max,
            allow_empty_clique_vertex: true,
            growth_mode: GrowthMode::Exhaustive,
        }
    }

    /// Incremental-mode parameters with the default switches.
    pub fn incremental(e_max: usize, k_max: usize) -> MiningParams {
        MiningParams {
            growth_mode: GrowthMode::Incremental,
            ..MiningParams::exhaustive(e_max, k_max)
        }
    }
}

/// One labeling certificate for a single-vertex deletion of a minimal
/// graph: the deleted vertex and a passing clique order of the remainder.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DeletionCertificate {
    /// Name of the deleted vertex in the minimal graph.
    pub deleted: String,
    /// Clique vertex names of the deletion, highest label first, that
    /// pass the labeling check after the partition is re-derived.
    pub k_order: Vec<String>,
}

/// One minimal non-representable graph together with its evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalEntry {
    /// graph6 encoding of the graph.
    pub graph6: String,
    /// Independent-set size.
    pub e: usize,
    /// Clique size.
    pub k: usize,
    /// Canonical isomorphism key, printable form.
    pub canonical_key: String,
    /// Number of clique orders exhausted while failing to label the graph.
    pub labelings_tried: u64,
    /// One passing labeling per single-vertex deletion.
    pub deletions: Vec<DeletionCertificate>,
}

/// Outcome of one mining run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MinerReport {
    /// The bounds and switches the run used.
    pub params_used: MiningParams,
    /// Isomorphism classes examined (after deduplication).
    pub total_enumerated: u64,
    /// Classes that admit a labeling.
    pub representable: u64,
    /// Minimal non-representable graphs, in canonical-key order.
    pub minimal_found: Vec<MinimalEntry>,
    /// Human-readable statement of the searched bounds. Results beyond
    /// these bounds are explicitly not claimed.
    pub bounds_note: String,
    /// Wall-clock duration; excluded from serialized reports so that the
    /// emitted bytes are identical across runs and worker counts.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Enumerates one representative per isomorphism class at exactly level
/// `|E| = eMax` over all clique sizes up to `kMax`, in canonical-key
/// order.
///
/// # Errors
///
/// [`Error::Capacity`] when the bounds exceed the exhaustive guard.
pub fn enumerate_reduced(params: &MiningParams) -> Result<Vec<SplitGraph>> {
    check_exhaustive_bounds(params)?;
    enumerate::enumerate_exact_level(
        params.e_max,
        params.k_max,
        params.allow_empty_clique_vertex,
    )
}

/// Mines every minimal non-word-representable split graph within the
/// given bounds, using `workers` threads for the bulk phases.
///
/// The serialized report is byte-identical for any worker count.
///
/// # Errors
///
/// [`Error::Capacity`] when the bounds exceed the mode's guard, or any
/// error propagated from graph construction.
pub fn mine_minimal(params: &MiningParams, workers: usize) -> Result<MinerReport> {
    let started = Instant::now();
    let workers = workers.max(1);
    let mut miner = Miner {
        workers,
        allow_empty_row: params.allow_empty_clique_vertex,
        total: 0,
        representable: 0,
        minimal: BTreeMap::new(),
    };
    let bounds_note = match params.growth_mode {
        GrowthMode::Exhaustive => {
            check_exhaustive_bounds(params)?;
            for e in 0..=params.e_max {
                let classes = miner.level_classes(e, 1..=params.k_max)?;
                miner.decide_level(classes)?;
            }
            format!(
                "exhaustive search of |E| <= {}, |K| <= {}; completeness beyond these bounds is not claimed",
                params.e_max, params.k_max
            )
        }
        GrowthMode::Incremental => {
            check_incremental_bounds(params)?;
            let mut deepest = 0;
            for k in 1..=params.k_max {
                deepest = deepest.max(miner.grow_clique_size(k, params.e_max)?);
            }
            format!(
                "incremental search of |K| <= {}, |E| grown adaptively to {} (cap {}); completeness beyond these bounds is not claimed",
                params.k_max, deepest, params.e_max
            )
        }
    };
    Ok(MinerReport {
        params_used: params.clone(),
        total_enumerated: miner.total,
        representable: miner.representable,
        minimal_found: miner.minimal.into_values().collect(),
        bounds_note,
        elapsed: started.elapsed(),
    })
}

/// Exhaustive enumeration stays cheap up to `|E| <= 6, |K| <= 8`; small
/// cliques tolerate deeper independent sets (`|K| <= 4, |E| <= 10`).
fn check_exhaustive_bounds(params: &MiningParams) -> Result<()> {
    if params.k_max == 0 {
        return Err(Error::InvalidArgument("kMax must be at least 1".into()));
    }
    if params.k_max <= 4 {
        capacity("miner eMax (exhaustive, small cliques)", params.e_max, 10)
    } else if params.k_max <= 8 {
        capacity("miner eMax (exhaustive)", params.e_max, 6)
    } else {
        capacity("miner kMax (exhaustive)", params.k_max, 8)
    }
}

/// Incremental growth only prunes enough for small cliques.
fn check_incremental_bounds(params: &MiningParams) -> Result<()> {
    if params.k_max == 0 {
        return Err(Error::InvalidArgument("kMax must be at least 1".into()));
    }
    capacity("miner kMax (incremental)", params.k_max, 5)?;
    capacity("miner eMax (incremental)", params.e_max, 25)
}

fn capacity(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        return Err(Error::Capacity { what, got, limit });
    }
    Ok(())
}

/// Shared state of one mining run.
struct Miner {
    workers: usize,
    allow_empty_row: bool,
    total: u64,
    representable: u64,
    minimal: BTreeMap<CanonicalKey, MinimalEntry>,
}

impl Miner {
    /// Collects the isomorphism classes of level `e` over a clique-size
    /// range. The family walk streams through a per-candidate key check,
    /// so memory stays proportional to the class count, not the raw
    /// family count.
    fn level_classes(
        &self,
        e: usize,
        k_range: std::ops::RangeInclusive<usize>,
    ) -> Result<BTreeMap<CanonicalKey, SplitGraph>> {
        let mut classes = BTreeMap::new();
        for k in k_range {
            enumerate::level_for_k(e, k, self.allow_empty_row, &mut classes)?;
        }
        Ok(classes)
    }

    /// Decides every class of one level and records the minimal ones.
    /// Returns the representable survivors in deterministic order.
    fn decide_level(
        &mut self,
        classes: BTreeMap<CanonicalKey, SplitGraph>,
    ) -> Result<Vec<(CanonicalKey, SplitGraph)>> {
        let items: Vec<(CanonicalKey, SplitGraph)> = classes.into_iter().collect();
        self.total += items.len() as u64;
        let decided = parallel_map(&items, self.workers, |(_, s)| decide_split_counted(s));
        let mut survivors = Vec::new();
        for ((key, s), outcome) in items.into_iter().zip(decided) {
            let (labeling, tried) = outcome?;
            if labeling.is_some() {
                self.representable += 1;
                survivors.push((key, s));
            } else if let Some(deletions) = minimality_certificates(&s)? {
                let entry = MinimalEntry {
                    graph6: encode_graph6(s.graph()),
                    e: s.e_size(),
                    k: s.k(),
                    canonical_key: key.to_string(),
                    labelings_tried: tried,
                    deletions,
                };
                self.minimal.entry(key).or_insert(entry);
            }
        }
        Ok(survivors)
    }

    /// Incremental growth for one clique size: starting from the bare
    /// clique, repeatedly extend every representable family by one more
    /// admissible column. Stops once two consecutive sizes yield no new
    /// minimal graph (sizes one and two never do — every split graph with
    /// so few independent vertices is representable — so growth always
    /// reaches at least size four). Returns the deepest size examined.
    fn grow_clique_size(&mut self, k: usize, e_cap: usize) -> Result<usize> {
        let pool = enumerate::column_pool(k);
        let base = self.level_classes(0, k..=k)?;
        let mut frontier: Vec<SplitGraph> = self
            .decide_level(base)?
            .into_iter()
            .map(|(_, s)| s)
            .collect();
        let mut last_hit = 2;
        let mut deepest = 0;
        for e in 1..=e_cap {
            if frontier.is_empty() || e > last_hit + 2 {
                break;
            }
            deepest = e;
            let mut pending: BTreeMap<CanonicalKey, Vec<u64>> = BTreeMap::new();
            for s in &frontier {
                let cols = s.columns();
                for &c in &pool {
                    if !cols.contains(&c) {
                        let mut next = cols.clone();
                        next.push(c);
                        let key = canonical_key_from_columns(k, &next);
                        pending.entry(key).or_insert(next);
                    }
                }
            }
            let mut classes = BTreeMap::new();
            for (key, cols) in pending {
                let s = SplitGraph::from_columns(k, &cols, None, None)?;
                classes.insert(key, s);
            }
            let before = self.minimal.len();
            frontier = self
                .decide_level(classes)?
                .into_iter()
                .map(|(_, s)| s)
                .collect();
            if self.minimal.len() > before {
                last_hit = e;
            }
        }
        Ok(deepest)
    }
}

/// Certifies minimality: every single-vertex deletion, re-partitioned
/// from scratch, must admit a labeling. Returns `None` when some deletion
/// is itself non-representable (the graph is not minimal).
fn minimality_certificates(s: &SplitGraph) -> Result<Option<Vec<DeletionCertificate>>> {
    let n = s.graph().n();
    let mut certs = Vec::with_capacity(n);
    for v in 0..n {
        let rest = s.delete_repartitioned(v);
        match decide_split(&rest)? {
            Some(labeling) => certs.push(DeletionCertificate {
                deleted: s.graph().name(v).to_string(),
                k_order: labeling.names(&rest),
            }),
            None => return Ok(None),
        }
    }
    Ok(Some(certs))
}

/// Applies `f` to every item on `workers` threads, preserving input
/// order in the output. Falls back to a plain map when one worker
/// suffices.
pub(crate) fn parallel_map<T, U, F>(items: &[T], workers: usize, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let workers = workers.max(1).min(items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let mut indexed: Vec<(usize, U)> = Vec::with_capacity(items.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                scope.spawn(move || {
                    items
                        .iter()
                        .enumerate()
                        .skip(w)
                        .step_by(workers)
                        .map(|(i, t)| (i, f(t)))
                        .collect::<Vec<(usize, U)>>()
                })
            })
            .collect();
        for handle in handles {
            indexed.extend(handle.join().expect("worker thread panicked"));
        }
    });
    indexed.sort_by_key(|&(i, _)| i);
    indexed.into_iter().map(|(_, u)| u).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::decode_graph6;
    use crate::semitrans::exists_semitransitive;

    #[test]
    fn parallel_map_preserves_order() {
        let items: Vec<usize> = (0..101).collect();
        let doubled = parallel_map(&items, 4, |&x| x * 2);
        assert_eq!(doubled, (0..101).map(|x| x * 2).collect::<Vec<_>>());
        assert_eq!(parallel_map(&items, 1, |&x| x + 1)[100], 101);
    }

    #[test]
    fn bounds_guards_reject_oversized_runs() {
        let err = mine_minimal(&MiningParams::exhaustive(7, 6), 1).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
        let err = mine_minimal(&MiningParams::exhaustive(4, 9), 1).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
        let err = mine_minimal(&MiningParams::incremental(4, 6), 1).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
        assert!(enumerate_reduced(&MiningParams::exhaustive(11, 4)).is_err());
    }

    #[test]
    fn tiny_bounds_have_no_minimal_graphs() {
        // Everything on a clique of at most three vertices is
        // representable, no matter how deep the independent side goes.
        let report = mine_minimal(&MiningParams::exhaustive(6, 3), 1).unwrap();
        assert!(report.minimal_found.is_empty());
        assert_eq!(report.representable, report.total_enumerated);

        let report = mine_minimal(&MiningParams::exhaustive(2, 5), 1).unwrap();
        assert!(report.minimal_found.is_empty());
    }

    #[test]
    fn exact_level_enumeration_counts() {
        let reps = enumerate_reduced(&MiningParams::exhaustive(1, 3)).unwrap();
        assert_eq!(reps.len(), 1);
        let reps = enumerate_reduced(&MiningParams::exhaustive(2, 3)).unwrap();
        assert_eq!(reps.len(), 1);
        let reps = enumerate_reduced(&MiningParams::exhaustive(0, 5)).unwrap();
        assert_eq!(reps.len(), 5);
        assert!(reps.iter().all(|s| s.e_size() == 0));
    }

    #[test]
    fn small_clique_mining_agrees_across_modes_and_workers() {
        let exhaustive = mine_minimal(&MiningParams::exhaustive(6, 4), 1).unwrap();
        let incremental = mine_minimal(&MiningParams::incremental(8, 4), 1).unwrap();
        let threaded = mine_minimal(&MiningParams::exhaustive(6, 4), 4).unwrap();

        let keys = |r: &MinerReport| -> Vec<String> {
            r.minimal_found
                .iter()
                .map(|m| m.canonical_key.clone())
                .collect()
        };
        assert_eq!(keys(&exhaustive), keys(&incremental));
        assert_eq!(keys(&exhaustive), keys(&threaded));
        assert_eq!(
            serde_json::to_string(&exhaustive).unwrap(),
            serde_json::to_string(&threaded).unwrap()
        );
        assert!(exhaustive.bounds_note.contains("|E| <= 6"));
    }

    #[test]
    fn minimal_entries_carry_checkable_evidence() {
        let report = mine_minimal(&MiningParams::exhaustive(4, 5), 1).unwrap();
        assert!(!report.minimal_found.is_empty());
        for entry in &report.minimal_found {
            let g = decode_graph6(&entry.graph6).unwrap();
            assert_eq!(g.n(), entry.e + entry.k);
            assert!(entry.labelings_tried > 0);
            assert_eq!(entry.deletions.len(), g.n());
            // The small ones admit a full orientation-search cross-check.
            if g.n() <= 9 {
                assert!(exists_semitransitive(&g).unwrap().is_none());
            }
        }
    }
}
