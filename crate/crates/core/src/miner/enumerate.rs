//! Isomorph-free enumeration of candidate split graphs, one exact
//! independent-set size at a time.
//!
//! A *level* `(e, k)` holds the split graphs built from a `k`-clique plus
//! `e` independent vertices with pairwise-distinct neighborhoods, each
//! adjacent to at least two but not all clique vertices. Clique vertices
//! may share E-neighborhoods, and at most one clique vertex may have an
//! empty one (none when `allow_empty_row` is off); anything the miner
//! reports as minimal is later re-checked to be in fully reduced form, so
//! the looser level constraints only add candidates, never lose any.
//!
//! Every level is generated through whichever of two equivalent views is
//! cheaper to walk exhaustively:
//!
//! * **column view** — `e`-subsets of the pool of admissible neighborhood
//!   masks over the clique;
//! * **row view** — non-decreasing length-`k` sequences of clique-vertex
//!   neighborhoods over the `e` independent vertices.
//!
//! Both views visit at least one representative of every isomorphism
//! class; duplicates are collapsed by the canonical key computed from the
//! raw columns, so the surviving set is identical (and identically
//! ordered) either way.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::{canonical_key_from_columns, CanonicalKey, SplitGraph};

/// All admissible E-vertex neighborhoods over a `k`-clique: masks with at
/// least two bits (degree-two floor) and at most `k - 1` (an all-clique
/// neighbor would be absorbed into the clique).
pub(crate) fn column_pool(k: usize) -> Vec<u64> {
    (1u64..(1u64 << k))
        .filter(|m| {
            let ones = m.count_ones() as usize;
            ones >= 2 && ones < k
        })
        .collect()
}

/// Walks the raw column families of level `(e, k)`: every family is a
/// strictly increasing choice of `e` pool masks whose union leaves at most
/// one clique vertex uncovered (zero when `allow_empty_row` is off).
/// Families are visited one at a time and never materialized in bulk —
/// large levels run into the millions.
///
/// Level `(0, k)` is the bare clique, represented by the empty family.
pub(crate) fn level_families_visit(
    e: usize,
    k: usize,
    allow_empty_row: bool,
    visit: &mut dyn FnMut(&[u64]),
) {
    if e == 0 {
        visit(&[]);
        return;
    }
    let pool = column_pool(k);
    if pool.len() < e {
        return;
    }
    let column_subsets = binom(pool.len(), e);
    let row_multisets = binom((1usize << e) + k - 1, k);
    if column_subsets <= row_multisets {
        let mut cols = Vec::with_capacity(e);
        columns_rec(e, k, allow_empty_row, &pool, 0, &mut cols, visit);
    } else {
        let mut rows = Vec::with_capacity(k);
        rows_rec(e, k, allow_empty_row, &mut rows, visit);
    }
}

/// Inserts every isomorphism class of level `(e, k)` into `out`, first
/// representative wins. Keys are computed from the raw columns during the
/// walk; only one graph per new class is ever constructed.
pub(crate) fn level_for_k(
    e: usize,
    k: usize,
    allow_empty_row: bool,
    out: &mut BTreeMap<CanonicalKey, SplitGraph>,
) -> Result<()> {
    let mut pending: BTreeMap<CanonicalKey, Vec<u64>> = BTreeMap::new();
    level_families_visit(e, k, allow_empty_row, &mut |cols| {
        let key = canonical_key_from_columns(k, cols);
        if !out.contains_key(&key) {
            pending.entry(key).or_insert_with(|| cols.to_vec());
        }
    });
    for (key, cols) in pending {
        let s = SplitGraph::from_columns(k, &cols, None, None)?;
        out.insert(key, s);
    }
    Ok(())
}

/// One representative per isomorphism class at exactly level `e`, over all
/// feasible clique sizes up to `k_max`, in canonical-key order.
///
/// Callers are expected to have checked capacity; this walks whatever it
/// is given.
pub(crate) fn enumerate_exact_level(
    e: usize,
    k_max: usize,
    allow_empty_row: bool,
) -> Result<Vec<SplitGraph>> {
    let mut out = BTreeMap::new();
    // Degree-two columns need at least three clique vertices to stay
    // below the absorb-into-clique threshold.
    let k_lo = if e == 0 { 1 } else { 3 };
    for k in k_lo..=k_max {
        level_for_k(e, k, allow_empty_row, &mut out)?;
    }
    Ok(out.into_values().collect())
}

/// Binomial coefficient, saturating; only used to pick the cheaper view.
fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return usize::MAX,
        };
    }
    acc
}

/// Depth-first over strictly increasing column choices from `pool[from..]`.
fn columns_rec(
    e: usize,
    k: usize,
    allow_empty_row: bool,
    pool: &[u64],
    from: usize,
    cols: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]),
) {
    if cols.len() == e {
        let covered: u64 = cols.iter().fold(0, |m, &c| m | c);
        if k - covered.count_ones() as usize <= usize::from(allow_empty_row) {
            visit(cols);
        }
        return;
    }
    let needed = e - cols.len();
    for i in from..=pool.len().saturating_sub(needed) {
        cols.push(pool[i]);
        columns_rec(e, k, allow_empty_row, pool, i + 1, cols, visit);
        cols.pop();
    }
}

/// Depth-first over non-decreasing length-`k` sequences of row masks.
/// At most the first row may be empty, which enforces the empty-row limit
/// directly during generation.
fn rows_rec(
    e: usize,
    k: usize,
    allow_empty_row: bool,
    rows: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]),
) {
    if rows.len() == k {
        if let Some(cols) = columns_of(rows, k, e) {
            visit(&cols);
        }
        return;
    }
    let lo = match rows.last() {
        Some(&prev) => prev.max(1),
        None => u64::from(!allow_empty_row),
    };
    for m in lo..(1u64 << e) {
        rows.push(m);
        rows_rec(e, k, allow_empty_row, rows, visit);
        rows.pop();
    }
}

/// Transposes a row assignment back into columns and validates the
/// column-side constraints: pairwise-distinct masks of weight two to
/// `k - 1`. Returns `None` when the assignment is not a level member.
fn columns_of(rows: &[u64], k: usize, e: usize) -> Option<Vec<u64>> {
    let mut cols = vec![0u64; e];
    for (r, &mask) in rows.iter().enumerate() {
        for (c, col) in cols.iter_mut().enumerate() {
            if mask >> c & 1 == 1 {
                *col |= 1 << r;
            }
        }
    }
    for (i, &c) in cols.iter().enumerate() {
        let ones = c.count_ones() as usize;
        if ones < 2 || ones >= k {
            return None;
        }
        if cols[..i].contains(&c) {
            return None;
        }
    }
    Some(cols)
}
