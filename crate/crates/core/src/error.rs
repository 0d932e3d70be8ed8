use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("matrix is not symmetric (entry ({row},{col}))")]
    NotSymmetric { row: usize, col: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("first factor must be degree-regular")]
    NotRegular,

    #[error("graph is not co-regular")]
    NotCoRegular,

    #[error("net degree {0} is not an adjacency eigenvalue")]
    NetDegreeNotEigenvalue(i64),

    #[error("first factor must be balanced")]
    Unbalanced,

    #[error("graph is not a star K(1,n) with n >= 1")]
    NotAStar,

    #[error("switching witness failed: {0}")]
    WitnessMismatch(String),

    #[error("inputs not admissible: {0:?}")]
    NotAdmissible(Vec<crate::spectra::Inadmissible>),
}

pub type Result<T> = std::result::Result<T, Error>;
