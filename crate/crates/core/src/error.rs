use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element does not belong to the group {group}: {detail}")]
    DescriptorMismatch { group: String, detail: String },

    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("cayley table has {rows} rows but {names} names were given")]
    DimensionMismatch { rows: usize, names: usize },

    #[error("cayley table does not define a group: {0}")]
    NotAGroup(crate::groups::CayleyViolation),

    #[error("malformed element literal {text:?}: {reason}")]
    MalformedElement { text: String, reason: String },

    #[error("residue {value} is out of range for cyclic group of order {order}")]
    ResidueOutOfRange { value: String, order: u64 },

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("coefficient field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("invalid coefficient {text:?}: {reason}")]
    InvalidCoefficient { text: String, reason: String },

    #[error("syntax error at position {pos}: {reason}")]
    Syntax { pos: usize, reason: String },

    #[error("the empty word is not allowed here")]
    EmptyWord,

    #[error("empty degree sequence")]
    EmptySequence,

    #[error("identity decision requires a tuple with pairwise distinct entries")]
    NonDistinctTuple,

    #[error("polynomial is not multihomogeneous")]
    NotMultihomogeneous,

    #[error("the words have no common nonzero entry in their generic evaluations")]
    NoMatchingEntry,

    #[error("rewrite step rejected: {0}")]
    InvalidStep(String),

    #[error("no permutation relates the two words at the given position")]
    NoPermutation,

    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
