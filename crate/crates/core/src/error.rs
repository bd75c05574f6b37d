use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("columns do not lie on an affine hyperplane avoiding the origin")]
    NotAConfiguration,
    #[error("columns {0} and {1} coincide")]
    RepeatedColumns(usize, usize),
    #[error("empty input")]
    EmptyInput,
    #[error("point {0} occurs more than once")]
    DuplicatePoint(usize),
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("a Cayley sum needs at least two polytopes")]
    TooFewPolytopes,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("binomial {0} is not homogeneous")]
    NonHomogeneousInput(usize),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("conformance failure in clause {clause}: {element}")]
    ConformanceFailure { clause: String, element: String },
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not connected")]
    NotConnected,
    #[error("odd cycle enumeration exceeded the budget of {0} cycles")]
    CycleBudgetExceeded(usize),
    #[error("Groebner basis computation stopped after {0} S-pair reductions")]
    GroebnerBudgetExceeded(usize),
    #[error("hypothesis not met: {0}")]
    HypothesisFailed(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("too many variables ({0}) for this operation")]
    TooManyVariables(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
