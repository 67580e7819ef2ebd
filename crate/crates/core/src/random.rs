//! Seeded generation of random based matrices and random homology moves,
//! used by property tests and the fuzz command. All randomness flows from an
//! explicit u64 seed for reproducibility.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::label::Label;
use crate::matrix::{BasedMatrix, MoveKind};
use crate::ring::Ring;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random ring value: uniform in {0,1} over Z2, uniform in [-2,2] over Z.
pub fn random_value(ring: Ring, rng: &mut ChaCha8Rng) -> i64 {
    match ring {
        Ring::Z2 => rng.gen_range(0..=1),
        Ring::Z => rng.gen_range(-2..=2),
    }
}

/// A random based matrix on `{s, 1, ..., interior}`: random upper triangle,
/// mirrored to skew-symmetry, zero diagonal.
pub fn random_matrix(ring: Ring, interior: usize, rng: &mut ChaCha8Rng) -> BasedMatrix {
    let n = interior + 1;
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = random_value(ring, rng);
            entries[i][j] = v;
            entries[j][i] = ring.neg(v);
        }
    }
    let mut labels = vec![Label::S];
    labels.extend((1..=interior).map(|k| Label::named(k.to_string())));
    BasedMatrix::new(labels, ring, entries).expect("random construction is valid")
}

/// Apply one random move of type M1, M2 or M3 with fresh reserved labels.
/// Returns the extended matrix and the move kind applied.
pub fn random_move(t: &BasedMatrix, rng: &mut ChaCha8Rng) -> (BasedMatrix, MoveKind) {
    let fresh1 = t.fresh_label();
    match rng.gen_range(0..3) {
        0 => (t.apply_m1(fresh1).unwrap(), MoveKind::M1),
        1 => (t.apply_m2(fresh1).unwrap(), MoveKind::M2),
        _ => {
            let fresh2 = match fresh1 {
                Label::Fresh(k) => Label::Fresh(k + 1),
                _ => unreachable!(),
            };
            let row1: Vec<i64> = (0..t.size()).map(|_| random_value(t.ring(), rng)).collect();
            (t.apply_m3(fresh1, fresh2, &row1).unwrap(), MoveKind::M3)
        }
    }
}

/// A random walk of `moves` forward moves starting from `t`.
pub fn random_walk(t: &BasedMatrix, moves: usize, rng: &mut ChaCha8Rng) -> BasedMatrix {
    let mut current = t.clone();
    for _ in 0..moves {
        current = random_move(&current, rng).0;
    }
    current
}
