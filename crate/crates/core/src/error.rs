use thiserror::Error;

/// Errors raised by the lattice, transform and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("classes live in different Picard lattices")]
    LatticeMismatch,

    #[error("expected {expected} coordinates, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("Picard lattice must have rank at least 1")]
    EmptyLattice,

    #[error("Gram matrix is not square (row {row} has {len} entries, rank is {rank})")]
    NotSquare { row: usize, len: usize, rank: usize },

    #[error("Gram matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("diagonal entry {i} is odd; K3 Picard lattices are even")]
    OddDiagonal { i: usize },

    #[error(
        "signature is ({positive}, {negative}) with {zero} null directions; expected (1, rank-1)"
    )]
    Signature {
        positive: usize,
        negative: usize,
        zero: usize,
    },

    #[error("orthogonal complement of the polarization is not negative definite")]
    IndefiniteComplement,

    #[error("surface is not reflexive: {}", .0.join("; "))]
    NotReflexive(Vec<String>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("WIT index must be 0, 1 or 2, got {0}")]
    WitIndex(i64),

    #[error("product iota ∪ iota is outside the modeled cohomology")]
    UnsupportedProduct,

    #[error("expected an integral class, found a fractional coefficient in {0}")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
