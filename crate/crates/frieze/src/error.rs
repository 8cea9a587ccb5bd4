use crate::exact::NodeIdx;
use std::fmt;

/// Location attached to a propagation or validation failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pos {
    /// A frieze node, integer or half-integer.
    Node(NodeIdx),
    /// A 0-based position in path initial data.
    Path(usize),
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pos::Node(n) => write!(f, "node {n}"),
            Pos::Path(k) => write!(f, "path position {k}"),
        }
    }
}

fn at(p: &Option<Pos>) -> String {
    match p {
        Some(p) => format!(" at {p}"),
        None => String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative input")]
    NegativeInput,
    #[error("zero pivot{}", at(.0))]
    ZeroPivot(Option<Pos>),
    #[error("Heron equation violated{}", at(.0))]
    HeronViolation(Option<Pos>),
    #[error("triangulation order does not match polygon order")]
    OrderMismatch,
    #[error("anchor edge is not a perfect rational square")]
    NotPerfectSquare,
    #[error("diamond does not satisfy the lifting conditions")]
    ConditionViolated,
    #[error("vanishing Heron quantity{}", at(.0))]
    NonGenericH(Option<Pos>),
    #[error("pair is not a diagonal of the cycle")]
    NotADiagonal,
    #[error("diagonal already belongs to the triangulation")]
    InTriangulation,
    #[error("invalid vertex triple")]
    InvalidTriple,
    #[error("edge is not a diagonal of the triangulation")]
    NotInTriangulation,
    #[error("triangulation is not thin")]
    NotThin,
    #[error("triangulation is not in trimmed normal form")]
    NotNormalized,
    #[error("vertex out of range")]
    InvalidVertex,
    #[error("frieze order must be at least 4")]
    OrderTooSmall,
    #[error("window too narrow for the requested operation")]
    WindowTooNarrow,
    #[error("input frieze is not coherent")]
    IncoherentInput,
    #[error("linear coefficient of the coherence equation vanished")]
    Degenerate,
    #[error("invalid expansion target")]
    InvalidTarget,
    #[error("index out of range")]
    IndexRange,
    #[error("expansion has non-integer coefficients")]
    NonIntegral,
    #[error("measurement symbol missing: {0}")]
    MissingSymbol(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("float reconstruction failed its self-check")]
    FloatSelfCheck,
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl Error {
    /// Stable machine-readable kind, used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NegativeInput => "NegativeInput",
            Error::ZeroPivot(_) => "ZeroPivot",
            Error::HeronViolation(_) => "HeronViolation",
            Error::OrderMismatch => "OrderMismatch",
            Error::NotPerfectSquare => "NotPerfectSquare",
            Error::ConditionViolated => "ConditionViolated",
            Error::NonGenericH(_) => "NonGenericH",
            Error::NotADiagonal => "NotADiagonal",
            Error::InTriangulation => "InTriangulation",
            Error::InvalidTriple => "InvalidTriple",
            Error::NotInTriangulation => "NotInTriangulation",
            Error::NotThin => "NotThin",
            Error::NotNormalized => "NotNormalized",
            Error::InvalidVertex => "InvalidVertex",
            Error::OrderTooSmall => "OrderTooSmall",
            Error::WindowTooNarrow => "WindowTooNarrow",
            Error::IncoherentInput => "IncoherentInput",
            Error::Degenerate => "Degenerate",
            Error::InvalidTarget => "InvalidTarget",
            Error::IndexRange => "IndexRange",
            Error::NonIntegral => "NonIntegral",
            Error::MissingSymbol(_) => "MissingSymbol",
            Error::MalformedInput(_) => "MalformedInput",
            Error::FloatSelfCheck => "FloatSelfCheck",
            Error::Internal(_) => "Internal",
        }
    }

    /// Position payload, if the error carries one.
    pub fn position(&self) -> Option<Pos> {
        match self {
            Error::ZeroPivot(p)
            | Error::HeronViolation(p)
            | Error::NonGenericH(p) => *p,
            _ => None,
        }
    }
}
