use crate::label::Label;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("entry table is {rows}x{cols} but {expected} labels were given")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("first label must be the basepoint s")]
    MissingBasepoint,
    #[error("duplicate label {0}")]
    DuplicateLabel(Label),
    #[error("unknown label {0}")]
    UnknownLabel(Label),
    #[error("operation not defined for the basepoint s")]
    BasepointNotAllowed,
    #[error("not skew-symmetric at ({row}, {col}): {a} != -({b})")]
    NotSkewSymmetric {
        row: Label,
        col: Label,
        a: i64,
        b: i64,
    },
    #[error("nonzero diagonal entry {value} at {label}")]
    NonzeroDiagonal { label: Label, value: i64 },
    #[error("entry {value} at ({row}, {col}) is outside the ring {ring}")]
    ValueOutOfRing {
        row: Label,
        col: Label,
        value: i64,
        ring: crate::ring::Ring,
    },
    #[error("wrong row length {got}, expected {expected}")]
    RowLength { got: usize, expected: usize },
    #[error("element {label} is {class:?}, not removable as {wanted}")]
    NotRemovable {
        label: Label,
        class: crate::matrix::ElementClass,
        wanted: &'static str,
    },
    #[error("elements {a} and {b} are not complementary")]
    NotComplementary { a: Label, b: Label },
    #[error("rings differ: {0} vs {1}")]
    RingMismatch(crate::ring::Ring, crate::ring::Ring),
    #[error("gauss code: {0}")]
    GaussCode(String),
    #[error("matrix document: {0}")]
    MatrixDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
