//! Partitions of the ground set with `{s}` always a singleton block, the
//! annulator of a partition, the derived partition, and the stable-partition
//! fixpoint.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::linalg::{f2, zint};
use crate::matrix::BasedMatrix;
use crate::ring::Ring;

/// A partition of `G` into disjoint blocks covering it, kept in canonical
/// form: each block sorted, blocks ordered by their smallest member, so the
/// `{s}` block always comes first.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<Label>>,
}

impl Partition {
    pub fn new(mut blocks: Vec<Vec<Label>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by(|a, b| a[0].cmp(&b[0]));
        Partition { blocks }
    }

    /// All singletons.
    pub fn discrete(labels: &[Label]) -> Self {
        Self::new(labels.iter().map(|l| vec![l.clone()]).collect())
    }

    pub fn blocks(&self) -> &[Vec<Label>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, l: &Label) -> Option<&[Label]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(l).is_ok())
            .map(|b| b.as_slice())
    }

    pub fn has_singleton_basepoint(&self) -> bool {
        self.block_of(&Label::S).is_some_and(|b| b.len() == 1)
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.blocks.iter().flatten()
    }

    /// Whether every block of `coarser` is a union of blocks of `self`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.blocks.iter().all(|b| {
            coarser
                .block_of(&b[0])
                .is_some_and(|cb| b.iter().all(|l| cb.contains(l)))
        })
    }

    /// Restriction to a label subset, dropping emptied blocks.
    pub fn restrict(&self, keep: &[Label]) -> Partition {
        Partition::new(
            self.blocks
                .iter()
                .map(|b| {
                    b.iter()
                        .filter(|l| keep.contains(l))
                        .cloned()
                        .collect::<Vec<_>>()
                })
                .collect(),
        )
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{{{}}}",
                b.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
            )?;
        }
        write!(f, "}}")
    }
}

/// The exact solution set of the annulator condition, as a canonical basis
/// over the interior coordinates: reduced row echelon form over Z2, Hermite
/// normal form over Z.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AnnulatorModule {
    pub ring: Ring,
    /// Coordinate order: the interior labels of the matrix, in matrix order.
    pub coordinates: Vec<Label>,
    pub basis: Vec<Vec<i64>>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl AnnulatorModule {
    pub fn ambient_dimension(&self) -> usize {
        self.coordinates.len()
    }

    /// Membership of an integer vector over the interior coordinates.
    pub fn contains(&self, v: &[i64]) -> bool {
        match self.ring {
            Ring::Z2 => f2::contains(&self.basis, &self.pivots, v),
            Ring::Z => {
                let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
                zint::lattice_contains(&zint::from_i64(&self.basis), &big)
            }
        }
    }

    /// Whether every basis vector of `self` lies in `other`.
    pub fn subset_of(&self, other: &AnnulatorModule) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    fn from_generators(ring: Ring, coordinates: Vec<Label>, gens: Vec<Vec<i64>>) -> Self {
        match ring {
            Ring::Z2 => {
                let (basis, pivots) = f2::rref(&gens);
                AnnulatorModule {
                    ring,
                    coordinates,
                    basis,
                    pivots,
                }
            }
            Ring::Z => {
                let basis = zint::to_i64(&zint::hnf_basis(&zint::from_i64(&gens)));
                AnnulatorModule {
                    ring,
                    coordinates,
                    basis,
                    pivots: Vec::new(),
                }
            }
        }
    }
}

/// The annulator of a partition: all interior vectors `v` such that
/// `b(v, χ_C) = k b(s, χ_C)` holds for every block `C` with one common `k`.
pub fn annulator(t: &BasedMatrix, p: &Partition) -> Result<AnnulatorModule> {
    check_partition(t, p)?;
    let interior: Vec<Label> = t.interior().to_vec();
    let n = interior.len();
    // stacked system over variables (v, k): rows are the interior pairing
    // rows against block characteristic vectors, plus the s-row for -k
    let mut stacked: Vec<Vec<i64>> = Vec::with_capacity(n + 1);
    for g in &interior {
        let row: Vec<i64> = p
            .blocks()
            .iter()
            .map(|c| t.pair_with_block(g, c).unwrap())
            .collect();
        stacked.push(row);
    }
    stacked.push(
        p.blocks()
            .iter()
            .map(|c| t.pair_with_block(&Label::S, c).unwrap())
            .collect(),
    );
    let gens: Vec<Vec<i64>> = match t.ring() {
        Ring::Z2 => f2::left_kernel(&stacked)
            .into_iter()
            .map(|v| v[..n].to_vec())
            .collect(),
        Ring::Z => {
            let kern = zint::left_kernel(&zint::from_i64(&stacked));
            kern.into_iter()
                .map(|v| {
                    v[..n]
                        .iter()
                        .map(|x| i64::try_from(x).expect("kernel entry exceeds i64"))
                        .collect()
                })
                .collect()
        }
    };
    Ok(AnnulatorModule::from_generators(t.ring(), interior, gens))
}

fn check_partition(t: &BasedMatrix, p: &Partition) -> Result<()> {
    if !p.has_singleton_basepoint() {
        return Err(Error::MissingBasepoint);
    }
    let mut labels: Vec<Label> = p.labels().cloned().collect();
    labels.sort();
    let mut expected: Vec<Label> = t.labels().to_vec();
    expected.sort();
    if labels != expected {
        return Err(Error::UnknownLabel(
            labels
                .iter()
                .find(|l| !t.contains_label(l))
                .cloned()
                .unwrap_or(Label::S),
        ));
    }
    Ok(())
}

/// The discrete partition of the matrix ground set.
pub fn discrete_partition(t: &BasedMatrix) -> Partition {
    Partition::discrete(t.labels())
}

/// One derivation step: `{s}` plus the classes of the relation
/// `g1 ~ g2 <=> g1 - g2 in Ann(p) or g1 + g2 in Ann(p)`.
pub fn derive(t: &BasedMatrix, p: &Partition) -> Result<Partition> {
    let ann = annulator(t, p)?;
    let interior = t.interior();
    let n = interior.len();
    let related = |i: usize, j: usize| -> bool {
        let mut diff = vec![0i64; n];
        diff[i] = 1;
        diff[j] = t.ring().normalize(diff[j] - 1);
        if i == j || ann.contains(&diff) {
            return true;
        }
        let mut sum = vec![0i64; n];
        sum[i] = 1;
        sum[j] = t.ring().normalize(sum[j] + 1);
        ann.contains(&sum)
    };
    // the relation is transitive because Ann is a subgroup; assert rather
    // than silently taking the generated closure
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| related(i, j)).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            debug_assert_eq!(adj[i][j], adj[j][i]);
            if adj[i][j] {
                for k in 0..n {
                    assert!(
                        !adj[j][k] || adj[i][k],
                        "derived relation is not transitive at {i},{j},{k}"
                    );
                }
            }
        }
    }
    let mut blocks: Vec<Vec<Label>> = vec![vec![Label::S]];
    let mut assigned = vec![false; n];
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let mut block = Vec::new();
        for j in 0..n {
            if adj[i][j] {
                block.push(interior[j].clone());
                assigned[j] = true;
            }
        }
        blocks.push(block);
    }
    Ok(Partition::new(blocks))
}

/// The fixpoint of derivation starting from the discrete partition, together
/// with the number of strict derivation steps taken.
pub fn stable_partition(t: &BasedMatrix) -> (Partition, usize) {
    let mut current = discrete_partition(t);
    let mut steps = 0;
    loop {
        let next = derive(t, &current).expect("discrete chain stays valid");
        if next == current {
            return (current, steps);
        }
        debug_assert!(next.len() < current.len(), "derivation must coarsen");
        current = next;
        steps += 1;
        assert!(steps <= t.size(), "stable partition failed to converge");
    }
}
