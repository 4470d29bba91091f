use thiserror::Error;

use crate::bitset::BitSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid generator parameters: {0}")]
    InvalidParameter(String),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 strings for more than 62 vertices are not supported")]
    UnsupportedSize,
    #[error("truncated graph6 body: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 body: expected {expected} data bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("non-zero padding bits in the final graph6 byte")]
    NonZeroPadding,
    #[error("graph has {0} vertices; graph6 output supports at most 62")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex has no facets")]
    Empty,
    #[error("empty face given as a facet")]
    EmptyFacet,
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("facet {inner} is contained in facet {outer}")]
    NotAntichain { inner: BitSet, outer: BitSet },
    #[error("duplicate facet {0}")]
    DuplicateFacet(BitSet),
    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(usize),
    #[error("facet list line {line}: {message}")]
    Format { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShellingError {
    #[error("order is not a permutation of the facets: {0}")]
    NotAPermutation(String),
    #[error("step {step}: facet {facet} meets its predecessors in a non-pure complex generated by {generators:?}")]
    FailingStep {
        /// 1-based position in the order.
        step: usize,
        facet: BitSet,
        generators: Vec<BitSet>,
    },
    #[error("free degree accounting disagrees at step {step}: incremental {incremental}, direct {direct}")]
    FreeDegreeMismatch {
        step: usize,
        incremental: i64,
        direct: i64,
    },
    #[error("structural facet bound needs s <= floor(r/2)+1 and s <= n (got n={n}, r={r}, s={s})")]
    OutOfRegime { n: u64, r: u64, s: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("complex is not pure")]
    NotPure,
    #[error("facet size {found} does not match requested size {expected}")]
    WrongFacetSize { expected: usize, found: usize },
    #[error("degree bound r = {0} must be a positive even integer")]
    OddDegree(u32),
    #[error("step {step} is a structural facet")]
    StructuralFacet { step: usize },
    #[error("first two facets meet in {found} vertices, expected r/2 = {expected}")]
    BadRoot { expected: usize, found: usize },
    #[error("tree has {found} non-root nodes, expected {expected}")]
    NodeCount { expected: usize, found: usize },
    #[error("a K_m tree needs at least two facets")]
    TooFewFacets,
    #[error(transparent)]
    Shelling(#[from] ShellingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search would examine about {estimate} candidate graphs, over the budget of {budget}")]
    BudgetExceeded { estimate: u64, budget: u64 },
    #[error("canonical labeling supports at most {max} vertices (got {n})")]
    TooManyVertices { n: usize, max: usize },
    #[error("invalid search parameters: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Shelling(#[from] ShellingError),
}
