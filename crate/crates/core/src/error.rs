use thiserror::Error;

use crate::young::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("box outside diagram: {0}")]
    BoxOutsideDiagram(Cell),

    #[error("box {0} is not removable")]
    NotRemovable(Cell),

    #[error("theorem requires N ≥ 2")]
    TooFewBoxes,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("state dimension {d}^{n} exceeds the cap of {cap} amplitudes")]
    CapExceeded { d: usize, n: usize, cap: usize },

    #[error("closed form unavailable: tableau is neither row- nor column-ordered")]
    ClosedFormUnavailable,

    #[error("tableau is not column-ordered")]
    NotColumnOrdered,

    #[error("repeated frame indices in {0:?}")]
    RepeatedIndices(Vec<usize>),

    #[error("frame has {have} vectors but {need} are required")]
    InsufficientFrame { have: usize, need: usize },

    #[error("vectors are not orthonormal (max deviation {0:.3e})")]
    NotOrthonormal(f64),

    #[error("empty basis")]
    EmptyBasis,

    #[error("state lies outside the subspace (projection residual {0:.3e})")]
    OutsideSpan(f64),

    #[error("invalid reduced-density-matrix request: {0}")]
    InvalidKeepSet(String),

    #[error("the sector is empty: d = {d} is below the column height {height}")]
    EmptySector { d: usize, height: usize },

    #[error("degenerate construction: {0}")]
    Degenerate(String),

    #[error("malformed state json: {0}")]
    StateJson(String),
}
