//! Distance spectral radius of connected graphs.
//!
//! - [`graph`], [`structure`], [`canon`], [`graph6`]: graphs, cut structure,
//!   canonical keys and the graph6 text format.
//! - [`spectrum`]: distance matrices and certified Perron brackets.
//! - [`transforms`]: graph families, graft shifting, edge relocation and
//!   block-clique closure.
//! - [`enumerate`]: connected graphs up to isomorphism.
//! - [`verify`]: executable checks producing [`VerificationReport`]s.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod json;
pub mod spectrum;
pub mod structure;
pub mod transforms;
pub mod verify;

pub use canon::{canonical_key, isomorphic};
pub use enumerate::{connected_graphs, filtered_graphs, EnumFilter};
pub use error::{Error, Result};
pub use graph::Graph;
pub use spectrum::{
    certified_compare, perron, spectral_radius, DistanceMatrix, PerronOptions, PerronResult,
    Relation, SpectralOrdering,
};
pub use structure::{BlockDecomposition, PendantPath};
pub use transforms::{GraftSite, RelocationSpec};
pub use verify::{Outcome, Theorem, VerificationReport, VerifyOptions};
