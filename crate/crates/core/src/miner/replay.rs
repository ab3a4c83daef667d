//! Replay of recorded labeling fixtures against the checker and the
//! witness catalog.
//!
//! A fixture file is a JSON list of cases. Each case carries a split
//! graph given as its clique vertices with their independent-side
//! neighborhoods, plus either a clique order expected to pass the
//! labeling check verbatim, or a claim that some catalog entry embeds
//! into the graph. Claimed witness names are treated as opaque labels:
//! the replay checks that one consistent, injective label-to-entry
//! assignment explains every claim, with two special cases — `D1` must
//! resolve to the catalog entry of that exact name, and `any` accepts an
//! arbitrary witness without joining the assignment.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::graph::{contains_induced, SplitGraph};
use crate::semitrans::{decide_split, labeling_violation, CliqueLabeling};

/// One clique vertex of a fixture graph: its name and the names of its
/// independent-side neighbors.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct FixtureVertex {
    vertex: String,
    adj: Vec<String>,
}

/// What a fixture asserts about its graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Expected {
    /// `{"containsWitness": "<label>"}`.
    #[serde(rename_all = "camelCase")]
    Witness { contains_witness: String },
    /// The literal string `"pass"`.
    Literal(String),
}

/// One recorded case.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct Fixture {
    case_id: String,
    graph: Vec<FixtureVertex>,
    #[serde(default)]
    k_order: Vec<String>,
    #[serde(default)]
    e_order: Vec<String>,
    expected: Expected,
}

/// Result of one fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FixtureOutcome {
    pub case_id: String,
    pub ok: bool,
    /// What happened: `labeling passes`, a violation description, or the
    /// embedded witness names.
    pub detail: String,
}

/// Outcome of a full replay run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReplayReport {
    pub outcomes: Vec<FixtureOutcome>,
    /// Number of clique orders re-validated.
    pub labeling_checks: usize,
    /// Number of containment claims checked.
    pub witness_checks: usize,
    /// The injective label-to-entry assignment found, sorted by label.
    pub witness_labels: Vec<(String, String)>,
    /// Whether such an assignment exists.
    pub label_consistency: bool,
    /// True exactly when every fixture passed and the labels are
    /// consistent.
    pub all_passed: bool,
}

impl fmt::Display for ReplayReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} fixtures: {} labeling checks, {} witness checks, {}",
            self.outcomes.len(),
            self.labeling_checks,
            self.witness_checks,
            if self.all_passed { "all passed" } else { "FAILURES" }
        )?;
        for o in self.outcomes.iter().filter(|o| !o.ok) {
            writeln!(f, "  FAIL {}: {}", o.case_id, o.detail)?;
        }
        if !self.label_consistency {
            writeln!(f, "  FAIL witness labels admit no consistent assignment")?;
        }
        for (label, entry) in &self.witness_labels {
            writeln!(f, "  label {label} -> {entry}")?;
        }
        Ok(())
    }
}

/// Replays every fixture in the file. Labeling fixtures re-run the
/// recorded clique order through the checker; witness fixtures confirm
/// that the graph is non-representable and embeds a catalog entry, and
/// that the claimed labels admit one consistent assignment overall.
///
/// # Errors
///
/// I/O and JSON problems, malformed fixtures (unknown vertex names,
/// inconsistent `eOrder`), and [`Error::Dependency`] when a witness claim
/// appears but no catalog was supplied. A fixture whose *check* fails is
/// not an error; it is reported as a failed outcome.
pub fn replay_proof_fixtures(path: &Path, catalog: Option<&Catalog>) -> Result<ReplayReport> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let fixtures: Vec<Fixture> = serde_json::from_str(&text)?;
    let mut outcomes = Vec::with_capacity(fixtures.len());
    let mut labeling_checks = 0;
    let mut witness_checks = 0;
    // label -> set of entry names that embed in *every* fixture claiming it
    let mut label_candidates: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for fixture in &fixtures {
        let s = fixture_graph(fixture)?;
        let outcome = match &fixture.expected {
            Expected::Literal(word) if word == "pass" => {
                labeling_checks += 1;
                check_pass_fixture(fixture, &s)?
            }
            Expected::Literal(word) => {
                return Err(Error::InvalidArgument(format!(
                    "fixture {}: expected must be \"pass\" or a containsWitness claim, got {word:?}",
                    fixture.case_id
                )));
            }
            Expected::Witness { contains_witness } => {
                witness_checks += 1;
                let catalog = catalog.ok_or_else(|| {
                    Error::Dependency(format!(
                        "fixture {} claims a witness but no catalog was supplied",
                        fixture.case_id
                    ))
                })?;
                check_witness_fixture(fixture, &s, contains_witness, catalog, &mut label_candidates)?
            }
        };
        outcomes.push(outcome);
    }
    let (witness_labels, label_consistency) = assign_labels(&label_candidates);
    let all_passed = outcomes.iter().all(|o| o.ok) && label_consistency;
    Ok(ReplayReport {
        outcomes,
        labeling_checks,
        witness_checks,
        witness_labels,
        label_consistency,
        all_passed,
    })
}

/// Builds the split graph of one fixture: the listed vertices form the
/// clique, their `adj` names the independent side.
fn fixture_graph(fixture: &Fixture) -> Result<SplitGraph> {
    let k = fixture.graph.len();
    let clique_names: Vec<String> = fixture.graph.iter().map(|v| v.vertex.clone()).collect();
    // Independent vertices in eOrder when given, else first appearance.
    let mut e_names: Vec<String> = fixture.e_order.clone();
    for v in &fixture.graph {
        for name in &v.adj {
            if !e_names.contains(name) {
                if !fixture.e_order.is_empty() {
                    return Err(Error::InvalidArgument(format!(
                        "fixture {}: neighbor {name:?} is missing from eOrder",
                        fixture.case_id
                    )));
                }
                e_names.push(name.clone());
            }
        }
    }
    let mut columns = vec![0u64; e_names.len()];
    for (row, v) in fixture.graph.iter().enumerate() {
        for name in &v.adj {
            let col = e_names.iter().position(|n| n == name).expect("collected above");
            columns[col] |= 1 << row;
        }
    }
    if let Some(unused) = columns.iter().position(|&c| c == 0) {
        return Err(Error::InvalidArgument(format!(
            "fixture {}: eOrder vertex {:?} has no neighbors",
            fixture.case_id, e_names[unused]
        )));
    }
    SplitGraph::from_columns(k, &columns, Some(&clique_names), Some(&e_names))
}

/// Re-runs a recorded clique order through the labeling checker. The
/// fixture lists the order from highest label to lowest; positions run
/// the other way.
fn check_pass_fixture(fixture: &Fixture, s: &SplitGraph) -> Result<FixtureOutcome> {
    let mut order = Vec::with_capacity(fixture.k_order.len());
    for name in fixture.k_order.iter().rev() {
        order.push(s.graph().vertex_by_name(name)?);
    }
    let labeling = CliqueLabeling::new(order);
    let outcome = match labeling_violation(s, &labeling)? {
        None => FixtureOutcome {
            case_id: fixture.case_id.clone(),
            ok: true,
            detail: "recorded clique order passes".to_string(),
        },
        Some(violation) => FixtureOutcome {
            case_id: fixture.case_id.clone(),
            ok: false,
            detail: violation.to_string(),
        },
    };
    Ok(outcome)
}

/// Confirms a containment claim: the graph must embed at least one
/// catalog entry and must itself be non-representable. Candidate entries
/// for the claimed label are intersected across fixtures.
fn check_witness_fixture(
    fixture: &Fixture,
    s: &SplitGraph,
    label: &str,
    catalog: &Catalog,
    label_candidates: &mut BTreeMap<String, BTreeSet<String>>,
) -> Result<FixtureOutcome> {
    let embedded: BTreeSet<String> = catalog
        .entries()
        .iter()
        .filter(|e| contains_induced(s.graph(), &e.graph).is_some())
        .map(|e| e.name.clone())
        .collect();
    let fail = |detail: String| FixtureOutcome {
        case_id: fixture.case_id.clone(),
        ok: false,
        detail,
    };
    if embedded.is_empty() {
        return Ok(fail("no catalog entry embeds into the graph".to_string()));
    }
    if decide_split(s)?.is_some() {
        return Ok(fail(
            "a labeling exists although the graph should contain a witness".to_string(),
        ));
    }
    if label != "any" {
        label_candidates
            .entry(label.to_string())
            .and_modify(|set| {
                *set = set.intersection(&embedded).cloned().collect();
            })
            .or_insert_with(|| embedded.clone());
    }
    Ok(FixtureOutcome {
        case_id: fixture.case_id.clone(),
        ok: true,
        detail: format!("embeds: {}", embedded.into_iter().collect::<Vec<_>>().join(", ")),
    })
}

/// Finds an injective assignment of claimed labels to catalog entries,
/// each label drawing from the intersection of its fixtures' embedded
/// sets; the label `D1` is pinned to the entry `D1`.
fn assign_labels(
    candidates: &BTreeMap<String, BTreeSet<String>>,
) -> (Vec<(String, String)>, bool) {
    let mut pending: Vec<(&String, Vec<&String>)> = candidates
        .iter()
        .map(|(label, set)| {
            let cands: Vec<&String> = set
                .iter()
                .filter(|name| label != "D1" || *name == "D1")
                .collect();
            (label, cands)
        })
        .collect();
    // Scarcest label first keeps the backtracking shallow.
    pending.sort_by_key(|(_, cands)| cands.len());
    let mut used: BTreeSet<&String> = BTreeSet::new();
    let mut chosen: Vec<(String, String)> = Vec::with_capacity(pending.len());
    let ok = assign_rec(&pending, 0, &mut used, &mut chosen);
    chosen.sort();
    (if ok { chosen } else { Vec::new() }, ok)
}

fn assign_rec<'a>(
    pending: &[(&String, Vec<&'a String>)],
    at: usize,
    used: &mut BTreeSet<&'a String>,
    chosen: &mut Vec<(String, String)>,
) -> bool {
    let Some((label, cands)) = pending.get(at) else {
        return true;
    };
    for &cand in cands {
        if used.insert(cand) {
            chosen.push(((*label).clone(), cand.clone()));
            if assign_rec(pending, at + 1, used, chosen) {
                return true;
            }
            chosen.pop();
            used.remove(cand);
        }
    }
    false
}
