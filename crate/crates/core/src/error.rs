use thiserror::Error;

/// Errors produced by the zero-sum toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be at least 2, got {0}")]
    OrderTooSmall(u64),
    #[error("group order {order} exceeds the dense representation cap {cap}")]
    OrderTooLarge { order: u64, cap: u32 },
    #[error("malformed sequence text at term {term:?}: {reason}")]
    Parse { term: String, reason: String },
    #[error("residue {residue} out of range for Z_{order}")]
    ResidueOutOfRange { residue: u64, order: u32 },
    #[error("{0} is not a unit of Z_{1}")]
    NotAUnit(u32, u32),
    #[error("element {0} is not in the support of the sequence")]
    NotInSupport(u32),
    #[error("split parts {x} + {y} do not sum to {target} in Z_{order}")]
    BadSplit {
        target: u32,
        x: u32,
        y: u32,
        order: u32,
    },
    #[error("element {element} lies outside the subgroup generated by {generator}")]
    OutsideSubgroup { element: u32, generator: u32 },
    #[error("the zero element does not generate a nontrivial subgroup")]
    ZeroGenerator,
    #[error("index is undefined: the support generates the trivial group")]
    TrivialSupport,
    #[error("the unsplittability criterion needs prime order, Z_{0} is composite")]
    CompositeOrder(u32),
    #[error("sequence is not a minimal zero-sum sequence")]
    NotMinimalZeroSum,
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
    #[error("n = {n} exceeds the desk cap {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error("elements belong to different groups (Z_{0} vs Z_{1})")]
    GroupMismatch(u32, u32),
}

pub type Result<T> = std::result::Result<T, Error>;
