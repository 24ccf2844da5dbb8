use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a Leibniz algebra: {0} violating basis triple(s)")]
    NotLeibniz(usize),
    #[error("not a Lie algebra: {0}")]
    NotLie(String),
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("splitting precondition fails: {0}")]
    SplitPrecondition(String),
    #[error("invalid representation: {0}")]
    Representation(String),
    #[error("not a derivation: {0}")]
    NotDerivation(String),
    #[error("D^2 != 0: {0}")]
    NotSquareZero(String),
    #[error("dialgebra axiom failure: {0}")]
    Dialgebra(String),
    #[error("group axiom failure: {0}")]
    Group(String),
    #[error("not a digroup: {0}")]
    NotDigroup(String),
    #[error("invalid group action: {0}")]
    Action(String),
    #[error("singular matrix")]
    Singular,
    #[error("size cap exceeded: {0}")]
    Cap(String),
    #[error("model invariant failure: {0}")]
    Model(String),
    #[error("not matrix-realizable: {0}")]
    NotRealizable(String),
    #[error("structure theorem breach: {0}")]
    Invariant(String),
    #[error("unknown built-in {0:?}")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
