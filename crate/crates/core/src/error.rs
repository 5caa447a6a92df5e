use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown preset `{0}` (expected jacobson-dg, jacobson-dg:<odd degree>, leavitt:<loops>, quiver-example1)")]
    UnknownPreset(String),
    #[error("unknown field `{0}` (expected gf2 or q)")]
    UnknownField(String),
    #[error("unknown generator `{name}` for preset {preset}")]
    UnknownGenerator { name: String, preset: String },
    #[error("arity mismatch in {op}: {left:?} vs {right:?}")]
    ArityMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("the arity of `0` cannot be inferred here")]
    UnknownArity,
    #[error("term limit exceeded: {count} terms (limit {limit}, set ARCDIAG_MAX_TERMS to raise it)")]
    TermLimit { count: usize, limit: usize },
    #[error("scalar {0} has no image in GF(2)")]
    NotInField(String),
    #[error("operation requires preset {expected}, got {got}")]
    PresetMismatch { expected: &'static str, got: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("Grothendieck ring collapses: the relation forces 1 = 0")]
    Collapse,
    #[error("the class is not determined: {0}")]
    Undetermined(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
