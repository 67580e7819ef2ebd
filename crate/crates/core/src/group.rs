//! Canonical presentations of finitely generated abelian quotients
//! `R^n / <relations>` with a deterministic coordinate convention, so that
//! parity values computed in different runs (or printed in reports) are
//! directly comparable.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::linalg::{f2, zint};
use crate::ring::Ring;

/// A quotient of `R^n` by a relation lattice, in canonical coordinates.
///
/// Over Z2 the quotient is an F2 vector space: relations are kept in reduced
/// row echelon form and a class is represented by the values of its reduced
/// vector at the non-pivot columns, in ascending column order.
///
/// Over Z the relations are diagonalized by a Smith normal form `D = U A V`
/// acting on ambient coordinates through `y = U x`; coordinates with
/// invariant factor 1 are dropped, free coordinates (factor 0) come first and
/// torsion coordinates follow, reduced to least nonnegative residues.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CanonicalAbelianGroup {
    ring: Ring,
    ambient: usize,
    /// One modulus per output coordinate: 0 for a free coordinate, d >= 2
    /// for a torsion coordinate of order d.
    moduli: Vec<i64>,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
enum Repr {
    F2 {
        basis: Vec<Vec<i64>>,
        pivots: Vec<usize>,
        free: Vec<usize>,
    },
    Z {
        /// The row transform `U` of the Smith normal form.
        transform: Vec<Vec<i64>>,
        /// Indices into `y = U x` retained as output, aligned with `moduli`.
        output_rows: Vec<usize>,
    },
}

/// The quotient of `R^ambient` by the span of `relations`.
pub fn quotient_group(
    ring: Ring,
    ambient: usize,
    relations: &[Vec<i64>],
) -> CanonicalAbelianGroup {
    assert!(relations.iter().all(|r| r.len() == ambient));
    match ring {
        Ring::Z2 => {
            let (basis, pivots) = f2::rref(relations);
            let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
            let moduli = vec![2; free.len()];
            CanonicalAbelianGroup {
                ring,
                ambient,
                moduli,
                repr: Repr::F2 {
                    basis,
                    pivots,
                    free,
                },
            }
        }
        Ring::Z => {
            // relations as columns: the lattice is the column span, and the
            // row transform U diagonalizes it in the coordinates y = U x
            let cols = relations.len();
            let m: zint::Mat = (0..ambient)
                .map(|i| relations.iter().map(|r| BigInt::from(r[i])).collect())
                .collect();
            let snf = zint::smith(&m, ambient, cols);
            let factor = |i: usize| -> i64 {
                snf.diag
                    .get(i)
                    .map_or(0, |d| i64::try_from(d).expect("invariant factor exceeds i64"))
            };
            let mut output_rows = Vec::new();
            let mut moduli = Vec::new();
            for i in 0..ambient {
                if factor(i) == 0 {
                    output_rows.push(i);
                    moduli.push(0);
                }
            }
            for i in 0..ambient {
                if factor(i) > 1 {
                    output_rows.push(i);
                    moduli.push(factor(i));
                }
            }
            let transform = zint::to_i64(&snf.u);
            CanonicalAbelianGroup {
                ring,
                ambient,
                moduli,
                repr: Repr::Z {
                    transform,
                    output_rows,
                },
            }
        }
    }
}

impl CanonicalAbelianGroup {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    /// Number of output coordinates.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|&&d| d == 0).count()
    }

    /// Nontrivial invariant factors, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<i64> {
        self.moduli.iter().copied().filter(|&d| d != 0).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.is_empty()
    }

    /// Canonical coordinates of the class of an ambient vector.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        match &self.repr {
            Repr::F2 {
                basis,
                pivots,
                free,
            } => {
                let r = f2::reduce(basis, pivots, v);
                free.iter().map(|&c| r[c]).collect()
            }
            Repr::Z {
                transform,
                output_rows,
            } => {
                let y: Vec<i64> = transform
                    .iter()
                    .map(|row| {
                        row.iter()
                            .zip(v)
                            .map(|(a, b)| {
                                a.checked_mul(*b).expect("coordinate overflow")
                            })
                            .fold(0i64, |acc, x| acc.checked_add(x).expect("coordinate overflow"))
                    })
                    .collect();
                output_rows
                    .iter()
                    .zip(&self.moduli)
                    .map(|(&i, &d)| if d == 0 { y[i] } else { y[i].rem_euclid(d) })
                    .collect()
            }
        }
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.moduli.len()]
    }

    pub fn is_zero(&self, coords: &[i64]) -> bool {
        coords.iter().all(|&x| x == 0)
    }

    /// Addition of canonical coordinate vectors.
    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.moduli
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&d, (&x, &y))| {
                let s = x.checked_add(y).expect("coordinate overflow");
                if d == 0 {
                    s
                } else {
                    s.rem_euclid(d)
                }
            })
            .collect()
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        self.moduli
            .iter()
            .zip(a)
            .map(|(&d, &x)| if d == 0 { -x } else { (-x).rem_euclid(d) })
            .collect()
    }
}

impl std::fmt::Display for CanonicalAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let free = self.free_rank();
        match free {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        // group equal torsion factors into powers
        let torsion = self.invariant_factors();
        let mut i = 0;
        while i < torsion.len() {
            let d = torsion[i];
            let mut k = 0;
            while i < torsion.len() && torsion[i] == d {
                k += 1;
                i += 1;
            }
            if k == 1 {
                parts.push(format!("Z_{d}"));
            } else {
                parts.push(format!("Z_{d}^{k}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}
