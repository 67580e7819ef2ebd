//! Distinguished tribes of the stable partition: primitive tribes, the zero
//! tribe, automorphism-coarsened tribes, and transport of tribes along
//! reduction traces.

use serde::{Deserialize, Serialize};

use crate::iso::Isomorphism;
use crate::label::Label;
use crate::matrix::{BasedMatrix, ReductionTrace};
use crate::partition::{stable_partition, Partition};

/// The stable partition of a matrix with its primitive blocks and zero block
/// marked.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TribeTags {
    pub partition: Partition,
    /// Blocks meeting the survivor set of a reduction to primitive form;
    /// `{s}` is always primitive.
    pub primitive_blocks: Vec<Vec<Label>>,
    /// The block collecting every element that is annihilating or core in
    /// some homologous matrix, when nonempty.
    pub zero_block: Option<Vec<Label>>,
}

impl TribeTags {
    pub fn is_primitive_block(&self, block: &[Label]) -> bool {
        self.primitive_blocks.iter().any(|b| b == block)
    }

    /// Whether the zero tribe exists and is itself a primitive tribe.
    pub fn zero_block_is_primitive(&self) -> bool {
        self.zero_block
            .as_ref()
            .is_some_and(|z| self.is_primitive_block(z))
    }
}

/// Bijection between the primitive blocks of two homologous matrices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TribeCorrespondence {
    pub pairs: Vec<(Vec<Label>, Vec<Label>)>,
}

impl TribeCorrespondence {
    pub fn image_of(&self, block: &[Label]) -> Option<&[Label]> {
        self.pairs
            .iter()
            .find(|(from, _)| from == block)
            .map(|(_, to)| to.as_slice())
    }
}

/// Stable partition plus tribe tags. The zero block is computed by adjoining
/// a fresh annihilating element and intersecting its stable block with `G`,
/// which is exact by the tribal-system property.
pub fn tag_tribes(t: &BasedMatrix) -> TribeTags {
    let (partition, _) = stable_partition(t);
    let (_, trace) = t.reduce_to_primitive();
    let removed = trace.removed_labels();
    let primitive_blocks: Vec<Vec<Label>> = partition
        .blocks()
        .iter()
        .filter(|b| b.iter().any(|l| !removed.contains(l)))
        .cloned()
        .collect();

    let fresh = t.fresh_label();
    let extended = t.apply_m1(fresh.clone()).expect("fresh label");
    let (extended_partition, _) = stable_partition(&extended);
    let zero_block: Vec<Label> = extended_partition
        .block_of(&fresh)
        .expect("fresh element has a block")
        .iter()
        .filter(|l| **l != fresh)
        .cloned()
        .collect();
    let zero_block = if zero_block.is_empty() {
        None
    } else {
        debug_assert!(partition.blocks().contains(&zero_block));
        Some(zero_block)
    };

    TribeTags {
        partition,
        primitive_blocks,
        zero_block,
    }
}

/// The finest coarsening of the stable partition of a primitive matrix in
/// which every automorphism fixes every block setwise. Computed by merging
/// the block of `g` with the block of `phi(g)` for every generator, to
/// closure.
pub fn aut_coarsening(t_prim: &BasedMatrix, auts: &[Isomorphism]) -> Partition {
    let (stable, _) = stable_partition(t_prim);
    let blocks = stable.blocks();
    let block_index = |l: &Label| blocks.iter().position(|b| b.contains(l)).unwrap();

    // union-find over block indices
    let mut parent: Vec<usize> = (0..blocks.len()).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for phi in auts {
        for g in t_prim.labels() {
            let a = find(&mut parent, block_index(g));
            let b = find(&mut parent, block_index(&phi.apply(g)));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut merged: Vec<Vec<Label>> = vec![Vec::new(); blocks.len()];
    for (i, b) in blocks.iter().enumerate() {
        let r = find(&mut parent, i);
        merged[r].extend(b.iter().cloned());
    }
    Partition::new(merged)
}

/// Map each primitive block `C` of the stable partition of `t` to the block
/// `C ∩ G•` of the reduced matrix, where `G•` is the survivor set of the
/// trace. Panics if a primitive block loses all members, which would
/// contradict primitive-tribe invariance.
pub fn transport_tribes(t: &BasedMatrix, trace: &ReductionTrace) -> TribeCorrespondence {
    let removed = trace.removed_labels();
    let survivors: Vec<Label> = t
        .labels()
        .iter()
        .filter(|l| !removed.contains(l))
        .cloned()
        .collect();
    let tags = tag_tribes(t);
    let reduced = trace.replay(t).expect("trace replays on its source");
    let (reduced_partition, _) = stable_partition(&reduced);

    let pairs = tags
        .primitive_blocks
        .iter()
        .map(|c| {
            let image: Vec<Label> = c
                .iter()
                .filter(|l| survivors.contains(l))
                .cloned()
                .collect();
            assert!(
                !image.is_empty(),
                "primitive tribe {c:?} lost all members under reduction"
            );
            assert!(
                reduced_partition.blocks().contains(&image),
                "transported tribe {image:?} is not a stable block of the reduction"
            );
            (c.clone(), image)
        })
        .collect();
    TribeCorrespondence { pairs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::automorphisms;
    use crate::ring::Ring;

    fn named(ls: &[&str]) -> Vec<Label> {
        ls.iter().map(|l| Label::named(*l)).collect()
    }

    #[test]
    fn tags_of_example_b() {
        let b = fixtures::example_matrix_b();
        let tags = tag_tribes(&b);
        assert_eq!(
            tags.primitive_blocks,
            vec![vec![Label::S], named(&["5", "6", "7"]), named(&["8"])]
        );
        assert_eq!(tags.zero_block, Some(named(&["3", "4"])));
        assert!(!tags.zero_block_is_primitive());
    }

    #[test]
    fn tags_of_flat_figure() {
        let t = fixtures::flat_figure_matrix();
        let tags = tag_tribes(&t);
        assert_eq!(tags.primitive_blocks.len(), 4);
        assert_eq!(tags.zero_block, None);
    }

    #[test]
    fn tags_of_zero_matrix() {
        let t = BasedMatrix::from_named(&["s", "a"], Ring::Z2, vec![vec![0; 2]; 2]).unwrap();
        let tags = tag_tribes(&t);
        assert_eq!(tags.primitive_blocks, vec![vec![Label::S]]);
        assert_eq!(tags.zero_block, Some(named(&["a"])));
    }

    #[test]
    fn aut_coarsening_of_knot_4_1() {
        let t = fixtures::knot_4_1();
        let auts = automorphisms(&t);
        let coarse = aut_coarsening(&t, &auts);
        let mut non_s: Vec<Vec<Label>> = coarse
            .blocks()
            .iter()
            .filter(|b| b[0] != Label::S)
            .cloned()
            .collect();
        non_s.sort();
        assert_eq!(non_s, vec![named(&["1", "3"]), named(&["2", "4"])]);
    }

    #[test]
    fn aut_coarsening_of_primitive_b() {
        let t = fixtures::example_matrix_b_primitive();
        let coarse = aut_coarsening(&t, &automorphisms(&t));
        assert_eq!(
            coarse.blocks(),
            &[vec![Label::S], named(&["7", "8"])]
        );
    }

    #[test]
    fn aut_coarsening_trivial_aut() {
        let t = fixtures::flat_figure_matrix();
        let coarse = aut_coarsening(&t, &automorphisms(&t));
        let (stable, _) = stable_partition(&t);
        assert_eq!(coarse, stable);
    }

    #[test]
    fn transport_of_example_b() {
        let b = fixtures::example_matrix_b();
        let (_, trace) = b.reduce_to_primitive();
        let corr = transport_tribes(&b, &trace);
        assert_eq!(corr.image_of(&[Label::S]).unwrap(), &[Label::S]);
        assert_eq!(
            corr.image_of(&named(&["5", "6", "7"])).unwrap(),
            named(&["7"]).as_slice()
        );
        assert_eq!(
            corr.image_of(&named(&["8"])).unwrap(),
            named(&["8"]).as_slice()
        );
    }

    #[test]
    fn transport_on_primitive_is_identity() {
        let t = fixtures::flat_figure_matrix();
        let (_, trace) = t.reduce_to_primitive();
        let corr = transport_tribes(&t, &trace);
        for (from, to) in &corr.pairs {
            assert_eq!(from, to);
        }
    }

    #[test]
    fn transport_unchanged_by_m1_extension() {
        let b = fixtures::example_matrix_b();
        let ext = b.apply_m1(Label::named("9")).unwrap();
        let (_, trace_b) = b.reduce_to_primitive();
        let (_, trace_e) = ext.reduce_to_primitive();
        let corr_b = transport_tribes(&b, &trace_b);
        let corr_e = transport_tribes(&ext, &trace_e);
        // the extension only adds an annihilating element, which lands in the
        // zero tribe; primitive-tribe images agree after restriction to G
        for (from, to) in &corr_b.pairs {
            let image = corr_e
                .pairs
                .iter()
                .find(|(f, _)| f.iter().filter(|l| b.contains_label(l)).cloned().collect::<Vec<_>>() == *from)
                .map(|(_, t)| t.clone());
            assert_eq!(image.as_deref(), Some(to.as_slice()));
        }
    }
}
