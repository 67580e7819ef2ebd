//! Exact linear algebra: reduced row echelon form and kernels over F2, and
//! Hermite / Smith normal forms over the integers with arbitrary-precision
//! entries.

pub mod f2;
pub mod zint;
