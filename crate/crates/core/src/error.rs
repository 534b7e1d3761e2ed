use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("coefficient not in field: {0}")]
    CoefficientNotInField(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("zero polynomial where a nonzero one is required: {0}")]
    ZeroPolynomial(&'static str),

    #[error("cannot eliminate graded variable {0:?}; only auxiliary variables may be eliminated")]
    NotAuxiliary(String),

    #[error("auxiliary variables are not allowed here: {0}")]
    AuxiliaryVariables(String),

    #[error("inhomogeneous generator {0}")]
    NotHomogeneous(String),

    #[error("non-monomial generator {0}")]
    NotMonomial(String),

    #[error("coordinate change degenerate in characteristic 2")]
    DegenerateInCharacteristicTwo,

    #[error("ring map is not an invertible linear change of coordinates: {0}")]
    NotInvertible(String),

    #[error("ring map arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("graph error: {0}")]
    Graph(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("desk-scale exceeded: {0}")]
    DeskScaleExceeded(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error("{0}")]
    Usage(String),
}
