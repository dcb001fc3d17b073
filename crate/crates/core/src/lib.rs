//! Finite ternary groupoids and ternary groups presented as Cayley cubes.
//!
//! A ternary groupoid of order `n` is a map `[xyz]: G³ → G` on `G = {0, …, n−1}`,
//! stored here as a dense cube of table entries. The crate provides:
//!
//! - exhaustive property checks (associativity, cancellativity, σ-commutativity,
//!   mediality, identities, idempotents) with counterexample witnesses,
//! - the ternary-group test via skew elements and the translation identities,
//! - constructions relating ternary and binary groups: derived cubes, retracts,
//!   the automorphism-twisted decomposition of a ternary group over its retract,
//!   binary covering groups, and pair (bi-element) structures on `G × G`,
//! - left/right/middle matrix representations by pairs of elements, pair-class
//!   partitions, γ-families, and block decomposition of commuting families,
//! - enumeration of all ternary groups of order ≤ 6 up to isomorphism,
//! - plain-text cube/table formats and JSON reports used by the `tgc` binary.

pub mod binary;
pub mod constructions;
pub mod cube;
pub mod enumeration;
pub mod error;
pub mod examples;
pub mod format;
pub mod matrix;
pub mod props;
pub mod reps;

pub use binary::BinaryTable;
pub use cube::{CayleyCube, Permutation3, SkewMap};
pub use error::Error;
pub use matrix::Matrix;
pub use props::PropertyReport;
pub use reps::{RepKind, Representation};
