//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong when building or analysing cubes and tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Raw table length does not match the declared order.
    #[error("table has {got} entries but order {order} needs {need}")]
    SizeMismatch {
        order: usize,
        got: usize,
        need: usize,
    },

    /// A table entry falls outside the carrier `0..order`.
    #[error("entry at flat index {index} is {value}, outside 0..{order}")]
    ClosureViolation {
        index: usize,
        value: usize,
        order: usize,
    },

    /// The operation is only supported up to a fixed order.
    #[error("order {order} exceeds the supported bound {max} for this operation")]
    OrderTooLarge { order: usize, max: usize },

    /// An argument referred to an element outside the carrier.
    #[error("element {element} is outside the carrier 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },

    /// The cube fails the ternary-group test.
    #[error("cube is not a ternary group: {0}")]
    NotATernaryGroup(#[from] TernaryGroupFailure),

    /// A binary table expected to be a group is not one.
    #[error("binary table is not a group: {reason}")]
    NotAGroup { reason: String },

    /// No built-in cube goes by this name.
    #[error("unknown example {name:?} (expected one of {known})")]
    UnknownExample { name: String, known: String },

    /// A representation violated one of its defining laws.
    #[error("representation violates {law} at tuple {tuple:?}")]
    RepresentationViolation { law: &'static str, tuple: Vec<usize> },

    /// The two binary representations handed to the middle-representation
    /// builder do not commute entrywise.
    #[error("binary representations do not commute at ({x}, {y})")]
    NonCommutingPair { x: usize, y: usize },

    /// The pair classes of this cube cannot be indexed by single carrier labels.
    #[error("pair classes do not factor through single labels: {reason}")]
    NotLabelable { reason: String },

    /// A numerical bound pinned by the decomposition contract was exceeded.
    #[error("{what} exceeded tolerance: {value:.3e} > {limit:.0e}")]
    ToleranceFailure {
        what: &'static str,
        value: OrderedF64,
        limit: OrderedF64,
    },

    /// A self-verifying construction failed its own re-check. This indicates a
    /// bug in this crate, not in the caller's input.
    #[error("internal verification failed: {0}")]
    InternalVerificationFailure(String),

    /// A text file did not parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Why a cube failed the ternary-group test. Every variant carries the tuple
/// that witnesses the failure.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum TernaryGroupFailure {
    /// Some grouping of `[[xyz]uv]` disagrees with another.
    NotAssociative { tuple: [usize; 5] },
    /// `[xxz] = x` has no solution `z`.
    SkewMissing { x: usize },
    /// `[xxz] = x` has more than one solution.
    SkewNotUnique { x: usize, z1: usize, z2: usize },
    /// One of the translation identities `[y x x̄] = y` or `[x x̄ y] = y` fails.
    TranslationIdentity { x: usize, y: usize, side: Side },
}

impl std::error::Error for TernaryGroupFailure {}

/// Which translation identity failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `[y x x̄] ≠ y`
    Right,
    /// `[x x̄ y] ≠ y`
    Left,
}

impl std::fmt::Display for TernaryGroupFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NotAssociative { tuple } => {
                write!(f, "not associative at (x,y,z,u,v) = {tuple:?}")
            }
            Self::SkewMissing { x } => write!(f, "[{x} {x} z] = {x} has no solution"),
            Self::SkewNotUnique { x, z1, z2 } => {
                write!(f, "[{x} {x} z] = {x} solved by both {z1} and {z2}")
            }
            Self::TranslationIdentity { x, y, side } => match side {
                Side::Right => write!(f, "[{y} {x} skew({x})] ≠ {y}"),
                Side::Left => write!(f, "[{x} skew({x}) {y}] ≠ {y}"),
            },
        }
    }
}

/// An `f64` wrapper so error variants can stay `Eq`/`Hash`-friendly while still
/// reporting the offending magnitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderedF64(pub f64);

impl Eq for OrderedF64 {}

impl std::fmt::Display for OrderedF64 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::fmt::LowerExp for OrderedF64 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::LowerExp::fmt(&self.0, f)
    }
}

impl From<f64> for OrderedF64 {
    fn from(v: f64) -> Self {
        Self(v)
    }
}
