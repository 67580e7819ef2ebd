//! Hand-entered reference matrices used by the test suites and available to
//! library users for experimentation.

use crate::matrix::BasedMatrix;
use crate::ring::Ring;

/// A flat Gauss code whose Z2 based matrix is [`flat_figure_matrix`].
pub const FLAT_FIGURE_CODE: &str = "1-2-3+2-1-3+";

/// The 4x4 Z2 matrix of the three-crossing flat knot diagram.
pub fn flat_figure_matrix() -> BasedMatrix {
    BasedMatrix::from_named(
        &["s", "1", "2", "3"],
        Ring::Z2,
        vec![
            vec![0, 1, 1, 0],
            vec![1, 0, 0, 0],
            vec![1, 0, 0, 1],
            vec![0, 0, 1, 0],
        ],
    )
    .unwrap()
}

/// The 9x9 Z2 matrix `B` of the stable-partition worked example.
pub fn example_matrix_b() -> BasedMatrix {
    BasedMatrix::from_named(
        &["s", "1", "2", "3", "4", "5", "6", "7", "8"],
        Ring::Z2,
        vec![
            vec![0, 0, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 1, 0, 1, 1, 0, 0],
            vec![0, 1, 1, 0, 0, 0, 1, 1, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 1, 0],
            vec![0, 1, 1, 0, 0, 0, 0, 0, 1],
            vec![0, 1, 1, 1, 1, 0, 0, 0, 1],
            vec![0, 0, 0, 1, 1, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 1, 1, 1, 0],
        ],
    )
    .unwrap()
}

/// The primitive 3x3 matrix on `{s, 7, 8}` homologous to `B`.
pub fn example_matrix_b_primitive() -> BasedMatrix {
    BasedMatrix::from_named(
        &["s", "7", "8"],
        Ring::Z2,
        vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0]],
    )
    .unwrap()
}

/// The primitive 3x3 matrix `(\{s, x, y\}, s, b)` of the monodromy remark.
pub fn remark_primitive_matrix() -> BasedMatrix {
    BasedMatrix::from_named(
        &["s", "x", "y"],
        Ring::Z2,
        vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0]],
    )
    .unwrap()
}

/// Based matrix of knot 4.1 from Green's table (ring Z).
pub fn knot_4_1() -> BasedMatrix {
    BasedMatrix::from_named(
        &["s", "1", "2", "3", "4"],
        Ring::Z,
        vec![
            vec![0, 1, -1, 1, -1],
            vec![-1, 0, -1, 0, 0],
            vec![1, 1, 0, 0, 0],
            vec![-1, 0, 0, 0, -1],
            vec![1, 0, 0, 1, 0],
        ],
    )
    .unwrap()
}

/// Based matrix of knot 4.9 (ring Z).
pub fn knot_4_9() -> BasedMatrix {
    BasedMatrix::from_named(
        &["s", "1", "2", "3", "4"],
        Ring::Z,
        vec![
            vec![0, 1, 0, 0, -1],
            vec![-1, 0, -1, -1, 0],
            vec![0, 1, 0, -1, -1],
            vec![0, 1, 1, 0, -1],
            vec![1, 0, 1, 1, 0],
        ],
    )
    .unwrap()
}

/// Based matrix of knot 4.13 (ring Z).
pub fn knot_4_13() -> BasedMatrix {
    BasedMatrix::from_named(
        &["s", "1", "2", "3", "4"],
        Ring::Z,
        vec![
            vec![0, -1, 0, 0, 1],
            vec![1, 0, 1, 1, 1],
            vec![0, -1, 0, 0, 0],
            vec![0, -1, 0, 0, 0],
            vec![-1, -1, 0, 0, 0],
        ],
    )
    .unwrap()
}

/// Based matrix of knot 4.85 (ring Z).
pub fn knot_4_85() -> BasedMatrix {
    BasedMatrix::from_named(
        &["s", "1", "2", "3", "4"],
        Ring::Z,
        vec![
            vec![0, 2, -2, -2, 2],
            vec![-2, 0, -2, -1, 0],
            vec![2, 2, 0, 0, 3],
            vec![2, 1, 0, 0, 2],
            vec![-2, 0, -3, -2, 0],
        ],
    )
    .unwrap()
}
