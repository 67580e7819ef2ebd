//! Batch processing and the fuzz engine. Batches run data-parallel with
//! rayon when the `parallel` feature is enabled and sequentially otherwise;
//! every randomized job derives an independent per-item seed from the master
//! seed, so the two modes produce identical results.

use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::iso::{automorphisms, is_isomorphic};
use crate::label::Label;
use crate::matrix::{BasedMatrix, ReductionTrace};
use crate::parity::{parity_matrix_report, reduced_parity, ParityAssignment};
use crate::partition::{stable_partition, Partition};
use crate::random;
use crate::ring::Ring;
use crate::tribes::{tag_tribes, TribeTags};

/// Map a batch, preserving input order.
#[cfg(feature = "parallel")]
pub fn batch_map<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

/// Map a batch, preserving input order.
#[cfg(not(feature = "parallel"))]
pub fn batch_map<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    F: Fn(I) -> O,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential batch map, kept available for comparison benchmarks.
pub fn batch_map_sequential<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    F: Fn(I) -> O,
{
    items.into_iter().map(f).collect()
}

/// Per-item seed derived from a master seed (splitmix64 step).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master
        .wrapping_add(0x9e3779b97f4a7c15)
        .wrapping_add(index.wrapping_mul(0xbf58476d1ce4e5b9));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Everything the matrix pipeline computes for one based matrix.
#[derive(Clone, Debug)]
pub struct MatrixSummary {
    pub matrix: BasedMatrix,
    pub primitive: BasedMatrix,
    pub trace: ReductionTrace,
    pub stable_partition: Partition,
    pub strict_steps: usize,
    pub tribes: TribeTags,
    pub automorphism_count: usize,
    pub parity: ParityAssignment,
    pub report: String,
}

pub fn summarize_matrix(t: &BasedMatrix) -> MatrixSummary {
    let (primitive, trace) = t.reduce_to_primitive();
    let (partition, strict_steps) = stable_partition(t);
    let tribes = tag_tribes(t);
    let automorphism_count = automorphisms(&primitive).len();
    let parity = reduced_parity(t);
    let report = parity_matrix_report(t);
    MatrixSummary {
        matrix: t.clone(),
        primitive,
        trace,
        stable_partition: partition,
        strict_steps,
        tribes,
        automorphism_count,
        parity,
        report,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FuzzParams {
    pub ring: Ring,
    pub count: usize,
    pub max_size: usize,
    pub moves: usize,
    pub seed: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FuzzFailure {
    pub index: usize,
    pub seed: u64,
    pub message: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FuzzReport {
    pub params: FuzzParams,
    pub checked: usize,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generate seeded random matrices, apply random move walks, and assert the
/// homology invariants: stable-partition restriction, zero-tribe
/// equivariance, reduction confluence up to isomorphism, and transported
/// reduced-parity equality.
pub fn fuzz(params: FuzzParams) -> FuzzReport {
    let cases: Vec<(usize, u64)> = (0..params.count)
        .map(|i| (i, derive_seed(params.seed, i as u64)))
        .collect();
    let failures: Vec<FuzzFailure> = batch_map(cases, |(index, seed)| {
        fuzz_case(params.ring, params.max_size, params.moves, seed)
            .err()
            .map(|message| FuzzFailure {
                index,
                seed,
                message,
            })
    })
    .into_iter()
    .flatten()
    .collect();
    FuzzReport {
        params,
        checked: params.count,
        failures,
    }
}

fn fuzz_case(ring: Ring, max_size: usize, moves: usize, seed: u64) -> Result<(), String> {
    use rand::Rng;
    let mut rng = random::rng(seed);
    let size = rng.gen_range(0..=max_size);
    let t = random::random_matrix(ring, size, &mut rng);
    let t2 = random::random_walk(&t, moves, &mut rng);

    let (stable, _) = stable_partition(&t);
    let (stable2, _) = stable_partition(&t2);
    if stable2.restrict(t.labels()) != stable {
        return Err(format!(
            "stable partition not restricted: {stable2} on G gives {}, expected {stable}",
            stable2.restrict(t.labels())
        ));
    }

    let tags = tag_tribes(&t);
    let tags2 = tag_tribes(&t2);
    let restricted_zero: Option<Vec<Label>> = tags2.zero_block.as_ref().and_then(|z| {
        let r: Vec<Label> = z.iter().filter(|l| t.contains_label(l)).cloned().collect();
        (!r.is_empty()).then_some(r)
    });
    if restricted_zero != tags.zero_block {
        return Err(format!(
            "zero tribe not equivariant: {restricted_zero:?} vs {:?}",
            tags.zero_block
        ));
    }

    let (p1, _) = t.reduce_to_primitive();
    let (p2, _) = t2.reduce_to_primitive();
    if is_isomorphic(&p1, &p2).is_none() {
        return Err("primitive forms of homologous matrices are not isomorphic".into());
    }

    let parity = reduced_parity(&t);
    let parity2 = reduced_parity(&t2);
    if parity.group != parity2.group {
        return Err(format!(
            "reduced parity group changed: {} vs {}",
            parity.group, parity2.group
        ));
    }
    for g in t.interior() {
        if parity.value_of(g) != parity2.value_of(g) {
            return Err(format!(
                "reduced parity of {g} changed: {:?} vs {:?}",
                parity.value_of(g),
                parity2.value_of(g)
            ));
        }
    }
    Ok(())
}
