#![forbid(unsafe_code)]
//! Deciding word-representability of split graphs.
//!
//! A word `w` over the vertex set of a graph *represents* the graph when
//! two vertices are adjacent exactly if their occurrences strictly
//! alternate in `w`; a graph is word-representable iff it admits a
//! semi-transitive orientation. For split graphs (clique `K` plus
//! independent set `E`) the existence question reduces to finding a clique
//! labeling `1..k` under which every `E`-neighborhood is an interval or a
//! prefix-suffix block subject to pairwise compatibility rules.
//!
//! The crate provides:
//! - [`graph`]: graphs, split partitions, isomorphism, induced-subgraph
//!   search, canonical keys, graph6 I/O;
//! - [`words`]: alternation semantics, representation checking, and a
//!   bounded search for representing words;
//! - [`semitrans`]: the orientation-level oracles and the clique-labeling
//!   decision procedure, which must always agree;
//! - [`catalog`]: built-in obstruction graphs and persistence for mined
//!   ones, plus witness search;
//! - [`miner`]: isomorph-free enumeration of reduced split graphs and
//!   mining of minimal non-word-representable ones, with replay of the
//!   recorded proof orderings.

pub mod catalog;
pub mod error;
pub mod graph;
pub mod miner;
pub mod semitrans;
pub mod words;
mod perm;

pub use error::{Error, Result};
