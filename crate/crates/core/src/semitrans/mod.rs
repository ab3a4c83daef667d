//! Semi-transitive orientations and the split-graph decision procedures.
//!
//! A graph is word-representable exactly when it admits a semi-transitive
//! orientation. This module provides three independent routes to that
//! property for split graphs, which the test suite plays against each
//! other:
//!
//! - the literal orientation checker and the exhaustive existence search
//!   ([`is_semitransitive_orientation`], [`exists_semitransitive`]);
//! - the clique-labeling characterization ([`decide_split`],
//!   [`check_labeling`]), whose certificates are plain clique orderings;
//! - the orientation-shape validator ([`validate_split_orientation`]) and,
//!   for graphs with a universal vertex, the comparability reduction
//!   ([`wr_via_universal`]).

mod comparability;
mod labeling;
mod orient;

pub use comparability::{
    is_comparability, is_split_comparability, wr_via_universal,
    COMPARABILITY_VERTEX_LIMIT,
};
pub use labeling::{
    check_labeling, decide_split, decide_split_counted, labeling_violation,
    CliqueLabeling, LabelingViolation, DECIDE_SPLIT_CLIQUE_LIMIT,
};
pub use orient::{
    check_type_c_constraints, classify_vertex, clique_is_transitive,
    exists_semitransitive, is_semitransitive_orientation, Orientation,
    ShapeViolation, validate_split_orientation, VertexType,
    EXISTS_SEMI_TRANSITIVE_VERTEX_LIMIT, SEMI_TRANSITIVE_VERTEX_LIMIT,
};
