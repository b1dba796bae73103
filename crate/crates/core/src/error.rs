use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed shape: {0}")]
    Shape(String),

    #[error("tableau entries must be positive integers")]
    NonPositiveEntry,

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("row {row} is not a removable corner")]
    InvalidCorner { row: usize },

    #[error("arrays have different lengths ({left} and {right} columns)")]
    LengthMismatch { left: usize, right: usize },

    #[error("content sums to {content} but the shape has {cells} cells")]
    ContentSizeMismatch { content: usize, cells: usize },

    #[error("array violates the c-array conditions")]
    NotCArray,

    #[error("tableau is not a semistandard tableau of double shape")]
    NotDTableau,

    #[error("array is not multilinear on 1..=2m")]
    NotMultilinear,

    #[error("some symbol occurs more than twice")]
    MultiplicityTooLarge,

    #[error("arrays use different label sets")]
    MixedLabelSets,

    #[error("generator counts differ ({left} and {right})")]
    GeneratorMismatch { left: u32, right: u32 },

    #[error("at most 64 Grassmann generators are supported, got {0}")]
    TooManyGenerators(u32),

    #[error("generator index {index} out of range for {generators} generators")]
    GeneratorOutOfRange { index: u32, generators: u32 },

    #[error("matrix entries violate the parity constraints")]
    Parity,

    #[error("variable x{0} has no assigned value")]
    Unassigned(u32),

    #[error("value assigned to x{0} has nonzero supertrace")]
    NonzeroSupertrace(u32),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
