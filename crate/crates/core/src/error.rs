use thiserror::Error;

/// Errors raised by group construction and slice-ring computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("{0}")]
    NotContained(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("not a slice: {0}")]
    NotASlice(String),

    #[error("operands belong to different groups or slice tables")]
    GroupMismatch,

    #[error("map is not equivariant at element {element}, point {point}")]
    NonEquivariant { element: usize, point: usize },

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("map is not a group isomorphism: {0}")]
    NotIsomorphism(String),

    #[error("mark matrix is singular at class {0}")]
    SingularMarkMatrix(usize),

    #[error("formula and oracle disagree for {op}: {detail}")]
    OracleMismatch { op: &'static str, detail: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("group not found in universe: {0}")]
    NotInUniverse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
