//! Cross-validation of the labeling decision against the witness catalog,
//! and the summary count comparison across the four reference runs.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::{find_witness, load_mined};
use crate::error::{Error, Result};
use crate::graph::encode_graph6;
use crate::semitrans::decide_split;

use super::{enumerate, parallel_map, GrowthMode, MinerReport};

/// Largest clique size the verification sweep accepts.
pub const VERIFY_CLIQUE_LIMIT: usize = 7;

/// The verification corpus is every reduced-candidate split graph with at
/// most this many independent vertices.
const VERIFY_E_MAX: usize = 4;

/// One graph on which the two oracles disagree, with the full evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyCounterexample {
    /// graph6 encoding of the offending graph.
    pub graph6: String,
    /// Whether the labeling search succeeded.
    pub representable: bool,
    /// The passing clique order, when one exists.
    pub labeling: Option<Vec<String>>,
    /// The catalog entry found inside the graph, when one is.
    pub witness: Option<String>,
}

/// Outcome of one verification sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    /// Clique bound of the sweep.
    pub k_max: usize,
    /// Independent-set bound of the sweep.
    pub e_max: usize,
    /// Number of entries in the witness catalog used.
    pub catalog_entries: usize,
    /// Isomorphism classes checked.
    pub total_checked: u64,
    /// Graphs where labeling success and witness absence disagree.
    pub counterexamples: Vec<VerifyCounterexample>,
    /// `"verified"` exactly when no counterexample was found.
    pub verdict: String,
    /// Human-readable statement of the searched bounds.
    pub bounds_note: String,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(
            f,
            "checked {} split graphs with |E| <= {}, |K| <= {} against {} catalog entries",
            self.total_checked, self.e_max, self.k_max, self.catalog_entries
        )?;
        writeln!(f, "counterexamples: {}", self.counterexamples.len())?;
        for c in &self.counterexamples {
            writeln!(
                f,
                "  {} representable={} witness={}",
                c.graph6,
                c.representable,
                c.witness.as_deref().unwrap_or("-")
            )?;
        }
        write!(f, "note: {}", self.bounds_note)
    }
}

/// Checks, over every reduced-candidate split graph with `|E| <= 4` and
/// `|K| <= k_max`, that the labeling decision succeeds exactly when no
/// catalog entry embeds into the graph. `workers` threads share the
/// per-graph work; the report is identical for any worker count.
///
/// # Errors
///
/// [`Error::Dependency`] when the catalog file is missing (mine first),
/// [`Error::Capacity`] when `k_max` exceeds [`VERIFY_CLIQUE_LIMIT`].
pub fn verify_main_theorem(
    k_max: usize,
    catalog_path: &Path,
    workers: usize,
) -> Result<VerifyReport> {
    if k_max > VERIFY_CLIQUE_LIMIT {
        return Err(Error::Capacity {
            what: "verification clique bound",
            got: k_max,
            limit: VERIFY_CLIQUE_LIMIT,
        });
    }
    if !catalog_path.exists() {
        return Err(Error::Dependency(format!(
            "witness catalog not found at {}; run mining first",
            catalog_path.display()
        )));
    }
    let catalog = load_mined(catalog_path)?;
    let mut total = 0u64;
    let mut counterexamples = Vec::new();
    for e in 0..=VERIFY_E_MAX {
        for k in 1..=k_max {
            let mut classes = BTreeMap::new();
            enumerate::level_for_k(e, k, true, &mut classes)?;
            total += classes.len() as u64;
            let reps: Vec<_> = classes.into_values().collect();
            let checked = parallel_map(&reps, workers, |s| -> Result<Option<VerifyCounterexample>> {
                let labeling = decide_split(s)?;
                let witness = find_witness(s.graph(), &catalog);
                if labeling.is_some() == witness.is_none() {
                    return Ok(None);
                }
                Ok(Some(VerifyCounterexample {
                    graph6: encode_graph6(s.graph()),
                    representable: labeling.is_some(),
                    labeling: labeling.map(|l| l.names(s)),
                    witness: witness.map(|(entry, _)| entry.name.clone()),
                }))
            });
            for item in checked {
                if let Some(c) = item? {
                    counterexamples.push(c);
                }
            }
        }
    }
    let verdict = if counterexamples.is_empty() {
        "verified"
    } else {
        "refuted"
    };
    Ok(VerifyReport {
        k_max,
        e_max: VERIFY_E_MAX,
        catalog_entries: catalog.entries().len(),
        total_checked: total,
        counterexamples,
        verdict: verdict.to_string(),
        bounds_note: format!(
            "searched |E| <= {VERIFY_E_MAX}, |K| <= {k_max}; completeness beyond these bounds is not claimed"
        ),
    })
}

/// One row of the count comparison: minimal graphs found under an
/// independent-set bound versus under a clique bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CountsRow {
    pub e_bound: usize,
    pub e_count: usize,
    pub k_bound: usize,
    pub k_count: usize,
    /// Absolute difference between the two counts.
    pub difference: usize,
}

/// The two-row comparison table of the four reference mining runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CountsTable {
    pub rows: Vec<CountsRow>,
    /// Reminder of which bounded searches produced the numbers.
    pub bounds_note: String,
}

impl fmt::Display for CountsTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(
                f,
                "|E| <= {}: {:>3}    |K| <= {}: {:>3}    difference: {}",
                row.e_bound, row.e_count, row.k_bound, row.k_count, row.difference
            )?;
        }
        write!(f, "note: {}", self.bounds_note)
    }
}

/// Builds the 2x2 comparison of minimal-graph counts from the four
/// reference runs: independent-side bounds 3 and 4 against clique-side
/// bounds 4 and 5.
///
/// # Errors
///
/// [`Error::Dependency`] naming the first reference run that is missing
/// from `reports`.
pub fn counts_report(reports: &[MinerReport]) -> Result<CountsTable> {
    let count_of = |desc: &str, pred: &dyn Fn(&MinerReport) -> bool| -> Result<usize> {
        reports
            .iter()
            .find(|r| pred(r))
            .map(|r| r.minimal_found.len())
            .ok_or_else(|| Error::Dependency(format!("counts need a completed {desc} mining run")))
    };
    let e3 = count_of("|E| <= 3 (kMax >= 6)", &|r| {
        r.params_used.growth_mode == GrowthMode::Exhaustive
            && r.params_used.e_max == 3
            && r.params_used.k_max >= 6
    })?;
    let e4 = count_of("|E| <= 4 (kMax >= 7)", &|r| {
        r.params_used.growth_mode == GrowthMode::Exhaustive
            && r.params_used.e_max == 4
            && r.params_used.k_max >= 7
    })?;
    let k4 = count_of("|K| <= 4 (eMax >= 8)", &|r| {
        r.params_used.k_max == 4 && r.params_used.e_max >= 8
    })?;
    let k5 = count_of("|K| <= 5 (incremental)", &|r| {
        r.params_used.growth_mode == GrowthMode::Incremental && r.params_used.k_max == 5
    })?;
    Ok(CountsTable {
        rows: vec![
            CountsRow {
                e_bound: 3,
                e_count: e3,
                k_bound: 4,
                k_count: k4,
                difference: e3.abs_diff(k4),
            },
            CountsRow {
                e_bound: 4,
                e_count: e4,
                k_bound: 5,
                k_count: k5,
                difference: e4.abs_diff(k5),
            },
        ],
        bounds_note: "counts come from bounded searches; completeness beyond the stated bounds is not claimed".to_string(),
    })
}
