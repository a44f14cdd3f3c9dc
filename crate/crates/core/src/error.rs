use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),
    #[error("cell {cell} would enter the filtration before its face {face}")]
    FiltrationViolation { cell: usize, face: usize },
    #[error("face {0} of the inserted cell is not present")]
    MissingFace(String),
    #[error("cell kind does not match the complex: {0}")]
    MixedCellKinds(String),
    #[error("non-finite filtration value {0}")]
    NonFiniteFiltration(f64),
    #[error("no value given for vertex {0}")]
    MissingVertexValue(String),
    #[error("no value given for top cell {0}")]
    MissingTopCellValue(String),
    #[error("complex is not sorted in filtration order (column {0})")]
    UnsortedComplex(usize),
    #[error("distance matrix is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("distance matrix is not symmetric at ({i}, {j})")]
    AsymmetricMatrix { i: usize, j: usize },
    #[error("distance matrix has a negative or non-finite entry at ({i}, {j})")]
    NegativeEntry { i: usize, j: usize },
    #[error("distance matrix has a nonzero diagonal entry at {0}")]
    NonZeroDiagonal(usize),
    #[error("point cloud is ragged: point {index} has {len} coordinates, expected {dim}")]
    RaggedPointCloud { index: usize, len: usize, dim: usize },
    #[error("point cloud is empty")]
    EmptyPointCloud,
    #[error("bitmap has {actual} values but its extents require {expected}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("bandwidth must be positive and finite, got {0}")]
    BadBandwidth(f64),
    #[error("window of {window} samples exceeds series length {len}")]
    WindowTooLarge { window: usize, len: usize },
    #[error("edge ({0}, {1}) references an unknown vertex")]
    DanglingEdge(u32, u32),
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("essential classes cannot be matched ({left} vs {right}) without a cutoff")]
    MixedEssential { left: usize, right: usize },
    #[error("interval ({0}, {1}) must satisfy birth < death")]
    BadInterval(f64, f64),
    #[error("input sequence is empty")]
    EmptyInput,
    #[error("exponent must be >= 1, got {0}")]
    BadExponent(f64),
    #[error("samples must have equal sizes ({0} vs {1})")]
    UnequalSampleSizes(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
