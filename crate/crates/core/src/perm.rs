//! Lexicographic permutation stepping.
//!
//! The decision procedures promise deterministic, enumeration-order-first
//! certificates, so everything that walks permutations shares this one
//! stepper instead of collecting all `n!` arrangements up front.

/// Advances `a` in place to its next lexicographic permutation.
/// Returns false (leaving `a` reversed back to sorted-descending input's
/// successor semantics untouched) when `a` is already the last permutation.
pub(crate) fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
