//! Skolem-type sequences, distance labelings of graphs, and realization of
//! prescribed distance sets.
//!
//! The crate has four areas:
//!
//! - [`graph`] and [`family`]: validated connected graphs, BFS all-pairs
//!   distances, the named graph families, and JSON/DOT serialization.
//! - [`sequences`]: Skolem, hooked Skolem, extended Skolem, and Langford
//!   sequences — existence, deterministic generation, verification, and the
//!   identification with path labelings.
//! - [`labelings`], [`lambda`], [`construct`]: the distance-labeling
//!   verifier, the exact labeling-length solver, and closed forms with
//!   matching constructions for the graph families.
//! - [`delta`]: realizing a set of distances as the label classes of some
//!   graph — explicit constructions, a necessary-condition filter, and
//!   bounded exhaustive search.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here can be called concurrently. Searches are
//! deterministic: the same inputs always yield the same witness.

pub mod construct;
pub mod delta;
pub mod error;
pub mod family;
pub mod graph;
pub mod labelings;
pub mod lambda;
pub mod sequences;

pub use construct::{
    ConstructionRoute, FamilyLabeling, construct_family_labeling, lambda_closed_form,
};
pub use delta::{
    Construction, DeltaSequence, DeltaSet, FilterVerdict, FreedomOutcome, RealizationCertificate,
    SearchOptions, delta_filter, delta_freedom, delta_search, realize_caterpillar,
    realize_dense_degree2, realize_gap_set, realize_regular, smallest_feasible_order,
};
pub use error::Error;
pub use family::FamilySpec;
pub use graph::{DistanceMatrix, Graph};
pub use labelings::{
    LabelSetKind, Labeling, VerificationReport, proper_diameter_check, verify_labeling,
};
pub use lambda::lambda_exact;
pub use sequences::{
    DEFAULT_NODE_BUDGET, ExistenceVerdict, Sequence, SequenceKind, SequenceReport, extended_skolem,
    generate_hooked_skolem, generate_langford, langford_exhaustive, langford_exists,
    sequence_to_path_labeling, tight_langford, verify_sequence,
};
