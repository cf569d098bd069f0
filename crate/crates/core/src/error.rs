use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("probability {name} = {value} is outside [0, 1]")]
    ProbabilityOutOfRange { name: &'static str, value: f64 },

    #[error("q = 1/(1-p) is undefined at p = 1")]
    UndefinedQ,

    #[error("vertex set over {set} vertices used with a graph on {graph} vertices")]
    UniverseMismatch { set: usize, graph: usize },

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    // edge-list parsing
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },

    #[error("line {line}: malformed edge, expected \"u v\"")]
    MalformedEdge { line: usize },

    #[error("line {line}: vertex index {index} out of range for n = {n}")]
    IndexOutOfRange { line: usize, index: usize, n: usize },

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoopLine { line: usize, vertex: usize },

    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdgeLine { line: usize, u: usize, v: usize },

    #[error("header declares {declared} edges but {found} were read")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("i/o error: {0}")]
    Io(String),

    // solvers
    #[error("brute force is limited to n <= {limit}, got n = {n}")]
    TooLargeForBruteForce { n: usize, limit: usize },

    #[error("alteration prefix size r = {r} exceeds n = {n}")]
    PrefixOutOfRange { r: usize, n: usize },

    // analytics
    #[error("d = np = {d} must exceed 1 for the critical size to exist (sparse regime needs d -> infinity)")]
    DegreeTooSmall { d: f64 },

    #[error("q = {q} exceeds n = {n}: very dense regime, the closed form does not apply")]
    VeryDense { q: f64, n: usize },

    #[error("n ln q <= ln^2 n: closed form r̂ is not positive for n = {n}, p = {p}")]
    ClosedFormUndefined { n: usize, p: f64 },

    #[error("set size {r} out of range for n = {n}")]
    SizeOutOfRange { r: usize, n: usize },

    #[error("variance terms need r <= n/2, got r = {r}, n = {n}")]
    VarianceDomain { r: usize, n: usize },

    #[error("intersection size s = {s} exceeds r = {r}")]
    IntersectionOutOfRange { s: usize, r: usize },

    #[error("both expectations are zero; their ratio is undefined")]
    ZeroOverZero,

    #[error("expected count of dominating sets of size {r} is zero")]
    ZeroExpectation { r: usize },

    #[error("Talagrand bound needs b < n, got b = {b}, n = {n}")]
    CertificateSize { b: f64, n: usize },

    #[error("t = {0} must be non-negative")]
    NegativeDeviation(f64),

    #[error("crucial-edge law needs 1 <= r <= n, got r = {r}, n = {n}")]
    CrucialSize { r: usize, n: usize },

    #[error("n must be at least {min}, got {n}")]
    TooFewVertices { n: usize, min: usize },

    // experiments
    #[error("experiment needs at least one trial")]
    NoTrials,

    #[error("config for {kind} experiment is invalid: {reason}")]
    InvalidConfig { kind: &'static str, reason: String },

    #[error("conditioning event has probability {probability:e}, below the rejection-sampling floor {floor:e}")]
    Infeasible { probability: f64, floor: f64 },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn check_probability(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::ProbabilityOutOfRange { name, value })
    }
}
