//! Error types shared across the crate.

use thiserror::Error;

/// Rejections raised while constructing a space. All input validation
/// happens at construction; queries can then assume a well-formed space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid element name {name:?} (names are nonempty, contain no whitespace and no '#')")]
    InvalidElementName { name: String },
    #[error("duplicate element name {name:?}")]
    DuplicateElementName { name: String },
    #[error("unknown element {name:?} in delta member")]
    UnknownElementInDelta { name: String },
    #[error("element {name:?} listed twice within one delta member")]
    DuplicateElementWithinMember { name: String },
    #[error("delta member of size {size} is below the minimum circuit size {min}")]
    MemberTooSmall { size: usize, min: usize },
}

/// Rejections raised by queries over a constructed space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("element index {index} does not belong to a space with {space_size} elements")]
    ForeignElement { index: usize, space_size: usize },
    #[error("unknown element name {name:?}")]
    UnknownElement { name: String },
    #[error("the starting set is dependent")]
    DependentStart,
    #[error("the starting set is not contained in the search universe")]
    NotContained,
    #[error("ground set of size {size} exceeds the enumeration cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("ground set of size {size} exceeds the exhaustive-check cap {cap}")]
    TooLargeForExhaustive { size: usize, cap: usize },
    #[error("the given set is not a basis")]
    NotABasis,
    #[error("the given set is dependent")]
    NotIndependent,
    #[error("malformed certificate: {reason}")]
    MalformedCertificate { reason: &'static str },
    #[error("chain members at positions {first} and {second} are incomparable")]
    NotAChain { first: usize, second: usize },
    #[error("chain member at position {index} is dependent")]
    DependentMember { index: usize },
}

/// Rejections raised by the instance generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("self-loop at vertex {vertex:?}")]
    SelfLoop { vertex: String },
    #[error("duplicate edge {a:?}-{b:?}")]
    DuplicateEdge { a: String, b: String },
    #[error("edge endpoint {vertex:?} is not a declared vertex")]
    UnknownEndpoint { vertex: String },
    #[error("duplicate vector {label}")]
    DuplicateVector { label: String },
    #[error("vector component out of range in {label} (components are bounded by 10^6)")]
    ComponentOutOfRange { label: String },
    #[error("instance size {size} exceeds the cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("parameter {name} must be positive")]
    ZeroParameter { name: &'static str },
    #[error("max circuit size must be at least 2, got {got}")]
    MaxCircuitSizeTooSmall { got: usize },
    #[error("{requested} circuits requested but only {available} exist")]
    InfeasibleCount { requested: usize, available: usize },
    #[error(transparent)]
    Build(#[from] BuildError),
}
