use thiserror::Error;

/// Errors surfaced by graph construction, codecs, and the counting engines.
///
/// Contract violations that indicate a caller bug (e.g. a vertex index past
/// the graph order) panic instead; everything reachable from user input is
/// a variant here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the {max}-vertex limit", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("combined order {0} of the join exceeds the {max}-vertex limit", max = crate::graph::MAX_VERTICES)]
    JoinTooLarge(usize),

    #[error("adjacency is not symmetric at ({0},{1})")]
    AsymmetricAdjacency(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency row {0} has bits at or above the graph order")]
    StrayBits(usize),

    #[error("graph6: input is empty")]
    Graph6Empty,

    #[error("graph6: long form (order above 62) is not supported")]
    Graph6LongForm,

    #[error("graph6: byte {byte:#04x} at position {pos} outside the printable range 63..=126")]
    Graph6BadChar { byte: u8, pos: usize },

    #[error("graph6: expected {expected} bytes for order {order}, got {got}")]
    Graph6BadLength {
        order: usize,
        expected: usize,
        got: usize,
    },

    #[error("graph6: nonzero padding bits after the adjacency triangle")]
    Graph6TrailingBits,

    #[error("graph6: encoding supports order at most 62, got {0}")]
    Graph6EncodeTooLarge(usize),

    #[error("partition spec must be a nonempty list of positive part sizes")]
    EmptyPartition,

    #[error("partition part sizes must be at least 1")]
    ZeroPart,

    #[error("matching parameter t must be 0 or 1, got {0}")]
    BadMatchingParam(u32),

    #[error("parameter t={t} out of range 0..={max} for r={r}")]
    BadJoinCount { r: u32, t: u32, max: u32 },

    #[error("r must be at least 2 for the matched-clique join family, got {0}")]
    BadClassCount(u32),

    #[error("order {0} exceeds the brute-force budget of {max} vertices", max = crate::dompoly::BRUTE_FORCE_LIMIT)]
    BruteForceBudget(usize),

    #[error("join factor on {0} vertices exceeds the brute-force budget of {max}", max = crate::dompoly::BRUTE_FORCE_LIMIT)]
    FactorTooLarge(usize),

    #[error("C({n},{k}) = {count} exceeds the family materialization budget of 10^7")]
    FamilyTooLarge { n: usize, k: usize, count: String },

    #[error("coefficient vector is not the domination polynomial of a nonempty graph")]
    NotAGraphPolynomial,

    #[error("shadow of a family of empty sets is undefined")]
    ShadowUndefined,

    #[error("family must be nonempty")]
    EmptyFamily,

    #[error("set of size {got} in a {expected}-uniform family")]
    NonUniformFamily { expected: usize, got: usize },

    #[error("set member {0} lies outside the ground set")]
    SetOutOfRange(usize),

    #[error("built-in enumeration is limited to order 7, got {0}")]
    EnumerationBudget(usize),

    #[error("corpus generation is limited to order 9, got {0}")]
    CorpusBudget(usize),

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("corpus line {line}: expected order {expected}, found order {got}")]
    MixedOrders {
        line: usize,
        expected: usize,
        got: usize,
    },

    #[error("corpus line {line}: {source}")]
    CorpusDecode {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("corpus order {corpus} does not match graph order {graph}")]
    OrderMismatch { corpus: usize, graph: usize },

    #[error("claim precondition not met: {0}")]
    ClaimPrecondition(String),

    #[error("construction expression: {0}")]
    Expression(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
