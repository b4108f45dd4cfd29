use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a subgroup of the ambient group")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group order {order} exceeds the bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("size {size} exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("element {element} out of range for carrier of size {size}")]
    OutOfRange { element: usize, size: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid operation table: {0}")]
    InvalidTable(String),

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("not a lattice: elements {0} and {1} have no unique {2}")]
    NotALattice(usize, usize, &'static str),

    #[error("trivial group has no simplicity verdict")]
    TrivialGroup,

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
