//! Exact-arithmetic implementation of Turaev based matrices for virtual and
//! flat knots: homology moves and reduction to primitive form, stable
//! partitions and tribes, the stable / reduced parity functors and the
//! reduced stable parity, together with a Gauss-code front end that builds
//! the based matrix of a diagram through its Carter surface.

// indexed loops are the clearer idiom for the dense matrix code throughout
#![allow(clippy::needless_range_loop)]

pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod io;
pub mod iso;
pub mod label;
pub mod linalg;
pub mod matrix;
pub mod parity;
pub mod pipeline;
pub mod partition;
pub mod random;
pub mod ring;
pub mod tribes;

pub use error::{Error, Result};
pub use label::Label;
pub use matrix::{BasedMatrix, ElementClass, MoveKind, ReductionTrace, Victims};
pub use ring::Ring;
