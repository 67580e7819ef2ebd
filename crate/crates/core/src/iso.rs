//! Basepoint-fixing isomorphism and automorphism search, by backtracking with
//! cheap per-element pruning. Instances of interest are small (|G| <= 9).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::label::Label;
use crate::matrix::BasedMatrix;

/// A pairing-preserving bijection between two label sets, fixing `s`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Isomorphism {
    pub mapping: BTreeMap<Label, Label>,
}

impl Isomorphism {
    pub fn identity(t: &BasedMatrix) -> Self {
        Isomorphism {
            mapping: t.labels().iter().map(|l| (l.clone(), l.clone())).collect(),
        }
    }

    pub fn apply(&self, l: &Label) -> Label {
        self.mapping[l].clone()
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().all(|(a, b)| a == b)
    }

    pub fn inverse(&self) -> Self {
        Isomorphism {
            mapping: self.mapping.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// `self` after `other`: the map `g -> self(other(g))`.
    pub fn compose(&self, other: &Isomorphism) -> Self {
        Isomorphism {
            mapping: other
                .mapping
                .iter()
                .map(|(a, b)| (a.clone(), self.apply(b)))
                .collect(),
        }
    }

    /// Cycle notation over the moved labels, e.g. `(1 3)(2 4)`.
    pub fn cycle_notation(&self) -> String {
        let mut seen: Vec<&Label> = Vec::new();
        let mut out = String::new();
        for start in self.mapping.keys() {
            if seen.contains(&start) || self.mapping[start] == *start {
                continue;
            }
            let mut cycle = vec![start];
            let mut cur = &self.mapping[start];
            while cur != start {
                cycle.push(cur);
                cur = &self.mapping[cur];
            }
            seen.extend(cycle.iter().copied());
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

/// Sorted multiset of row values plus the basepoint pairing; preserved by any
/// basepoint-fixing isomorphism.
fn element_signature(t: &BasedMatrix, i: usize) -> (i64, Vec<i64>) {
    let n = t.size();
    let mut row: Vec<i64> = (0..n).map(|j| t.value_at(i, j)).collect();
    row.sort();
    (t.value_at(i, 0), row)
}

fn search(
    t1: &BasedMatrix,
    t2: &BasedMatrix,
    all: bool,
    found: &mut Vec<Vec<usize>>,
) {
    let n = t1.size();
    if n != t2.size() || t1.ring() != t2.ring() {
        return;
    }
    let sig1: Vec<_> = (0..n).map(|i| element_signature(t1, i)).collect();
    let sig2: Vec<_> = (0..n).map(|i| element_signature(t2, i)).collect();
    // map[i] = image index in t2 of element i of t1; basepoint fixed
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;

    #[allow(clippy::too_many_arguments)]
    fn extend(
        t1: &BasedMatrix,
        t2: &BasedMatrix,
        sig1: &[(i64, Vec<i64>)],
        sig2: &[(i64, Vec<i64>)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        all: bool,
        found: &mut Vec<Vec<usize>>,
    ) -> bool {
        let n = t1.size();
        if depth == n {
            found.push(map.clone());
            return !all;
        }
        for cand in 1..n {
            if used[cand] || sig1[depth] != sig2[cand] {
                continue;
            }
            let ok = (0..depth).all(|j| {
                t2.value_at(cand, map[j]) == t1.value_at(depth, j)
            });
            if !ok {
                continue;
            }
            map[depth] = cand;
            used[cand] = true;
            if extend(t1, t2, sig1, sig2, map, used, depth + 1, all, found) {
                return true;
            }
            used[cand] = false;
            map[depth] = usize::MAX;
        }
        false
    }

    extend(t1, t2, &sig1, &sig2, &mut map, &mut used, 1, all, found);
}

fn to_isomorphism(t1: &BasedMatrix, t2: &BasedMatrix, map: &[usize]) -> Isomorphism {
    Isomorphism {
        mapping: map
            .iter()
            .enumerate()
            .map(|(i, &j)| (t1.labels()[i].clone(), t2.labels()[j].clone()))
            .collect(),
    }
}

/// A basepoint-fixing pairing-preserving bijection between the two matrices,
/// if one exists.
pub fn is_isomorphic(t1: &BasedMatrix, t2: &BasedMatrix) -> Option<Isomorphism> {
    let mut found = Vec::new();
    search(t1, t2, false, &mut found);
    found.first().map(|m| to_isomorphism(t1, t2, m))
}

/// The full automorphism group as a list, identity included.
pub fn automorphisms(t: &BasedMatrix) -> Vec<Isomorphism> {
    let mut found = Vec::new();
    search(t, t, true, &mut found);
    let mut auts: Vec<Isomorphism> = found.iter().map(|m| to_isomorphism(t, t, m)).collect();
    auts.sort_by_key(|a| a.mapping.values().cloned().collect::<Vec<_>>());
    auts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_on_self() {
        let t = fixtures::example_matrix_b();
        let iso = is_isomorphic(&t, &t).unwrap();
        // the pruned search may find any automorphism; composing with its
        // inverse must give the identity
        assert!(iso.compose(&iso.inverse()).is_identity());
    }

    #[test]
    fn different_matrices_not_isomorphic() {
        let a = fixtures::knot_4_9();
        let b = fixtures::knot_4_85();
        assert!(is_isomorphic(&a, &b).is_none());
    }

    #[test]
    fn knot_4_1_automorphisms() {
        let auts = automorphisms(&fixtures::knot_4_1());
        assert_eq!(auts.len(), 2);
        let nontrivial = auts.iter().find(|a| !a.is_identity()).unwrap();
        assert_eq!(nontrivial.cycle_notation(), "(1 3)(2 4)");
    }

    #[test]
    fn primitive_b_automorphisms_swap_7_8() {
        let auts = automorphisms(&fixtures::example_matrix_b_primitive());
        assert_eq!(auts.len(), 2);
        let nontrivial = auts.iter().find(|a| !a.is_identity()).unwrap();
        assert_eq!(nontrivial.cycle_notation(), "(7 8)");
    }

    #[test]
    fn flat_figure_automorphisms_trivial() {
        let auts = automorphisms(&fixtures::flat_figure_matrix());
        assert_eq!(auts.len(), 1);
        assert!(auts[0].is_identity());
    }

    #[test]
    fn group_closure() {
        let auts = automorphisms(&fixtures::knot_4_13());
        assert_eq!(auts.len(), 2);
        for a in &auts {
            for b in &auts {
                let c = a.compose(b);
                assert!(auts.contains(&c));
            }
            assert!(auts.contains(&a.inverse()));
        }
    }
}
