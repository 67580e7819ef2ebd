//! The based-matrix value type: a finite ground set with basepoint `s` and a
//! skew-symmetric pairing, the element classification, the three homology
//! moves with their inverses, and reduction to primitive form.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::ring::Ring;

/// A triple `(G, s, b)`: ordered ground set with distinguished basepoint `s`
/// (always the first label) and a skew-symmetric pairing with zero diagonal.
///
/// Values are immutable after construction; every operation returns a new
/// matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct BasedMatrix {
    ring: Ring,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    entries: Vec<Vec<i64>>,
}

/// Classification of a non-basepoint element by its pairing row.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementClass {
    /// `b(g, h) = 0` for all `h`.
    Annihilating,
    /// `b(g, h) = b(s, h)` for all `h`.
    Core,
    /// Neither of the above.
    Generic,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MoveKind {
    M1,
    M2,
    M3,
}

/// Labels removed by one inverse move.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Victims {
    One(Label),
    Pair(Label, Label),
}

impl Victims {
    pub fn pair(a: Label, b: Label) -> Self {
        if a <= b {
            Victims::Pair(a, b)
        } else {
            Victims::Pair(b, a)
        }
    }

    pub fn labels(&self) -> Vec<&Label> {
        match self {
            Victims::One(a) => vec![a],
            Victims::Pair(a, b) => vec![a, b],
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: MoveKind,
    pub removed: Victims,
}

/// Ordered log of inverse moves taken while reducing a matrix. Replaying the
/// trace on the source matrix reproduces the reduced matrix.
#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All labels removed over the whole trace.
    pub fn removed_labels(&self) -> Vec<Label> {
        self.steps
            .iter()
            .flat_map(|s| s.removed.labels().into_iter().cloned())
            .collect()
    }

    /// Apply the logged removals, in order, to `source`.
    pub fn replay(&self, source: &BasedMatrix) -> Result<BasedMatrix> {
        let mut t = source.clone();
        for step in &self.steps {
            t = t.remove_element(&step.removed)?;
        }
        Ok(t)
    }
}

impl BasedMatrix {
    /// Validated constructor. The first label must be `s`, the table square,
    /// skew-symmetric, with zero diagonal and entries inside the ring.
    pub fn new(labels: Vec<Label>, ring: Ring, entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = labels.len();
        if labels.first() != Some(&Label::S) {
            return Err(Error::MissingBasepoint);
        }
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch {
                rows: entries.len(),
                cols: entries.first().map_or(0, |r| r.len()),
                expected: n,
            });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = entries[i][j];
                if !ring.contains(v) {
                    return Err(Error::ValueOutOfRing {
                        row: labels[i].clone(),
                        col: labels[j].clone(),
                        value: v,
                        ring,
                    });
                }
                if i == j && v != 0 {
                    return Err(Error::NonzeroDiagonal {
                        label: labels[i].clone(),
                        value: v,
                    });
                }
                if ring.add(v, entries[j][i]) != 0 {
                    return Err(Error::NotSkewSymmetric {
                        row: labels[i].clone(),
                        col: labels[j].clone(),
                        a: v,
                        b: entries[j][i],
                    });
                }
            }
        }
        Ok(BasedMatrix {
            ring,
            labels,
            index,
            entries,
        })
    }

    /// Build from string label names (`"s"` must come first).
    pub fn from_named(names: &[&str], ring: Ring, entries: Vec<Vec<i64>>) -> Result<Self> {
        let labels = names.iter().map(|n| Label::named(*n)).collect();
        Self::new(labels, ring, entries)
    }

    /// The trivial based matrix `(0)` on `{s}` alone.
    pub fn trivial(ring: Ring) -> Self {
        Self::new(vec![Label::S], ring, vec![vec![0]]).unwrap()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Non-basepoint labels, in matrix order.
    pub fn interior(&self) -> &[Label] {
        &self.labels[1..]
    }

    pub fn contains_label(&self, l: &Label) -> bool {
        self.index.contains_key(l)
    }

    pub fn index_of(&self, l: &Label) -> Result<usize> {
        self.index
            .get(l)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(l.clone()))
    }

    pub fn value(&self, g: &Label, h: &Label) -> Result<i64> {
        Ok(self.entries[self.index_of(g)?][self.index_of(h)?])
    }

    pub fn value_at(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn row(&self, g: &Label) -> Result<&[i64]> {
        Ok(&self.entries[self.index_of(g)?])
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// A label from the reserved namespace, unused in this matrix.
    pub fn fresh_label(&self) -> Label {
        let next = self
            .labels
            .iter()
            .filter_map(|l| match l {
                Label::Fresh(k) => Some(k + 1),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        Label::Fresh(next)
    }

    /// `b(g, χ_C)` for a set of labels `C`.
    pub fn pair_with_block(&self, g: &Label, block: &[Label]) -> Result<i64> {
        let gi = self.index_of(g)?;
        let mut acc = 0;
        for h in block {
            acc = self.ring.add(acc, self.entries[gi][self.index_of(h)?]);
        }
        Ok(acc)
    }

    pub fn classify_element(&self, g: &Label) -> Result<ElementClass> {
        let gi = self.index_of(g)?;
        if gi == 0 {
            return Err(Error::BasepointNotAllowed);
        }
        let row = &self.entries[gi];
        if row.iter().all(|&v| v == 0) {
            return Ok(ElementClass::Annihilating);
        }
        if row == &self.entries[0] {
            return Ok(ElementClass::Core);
        }
        Ok(ElementClass::Generic)
    }

    /// All unordered pairs `{g1, g2}` of interior elements with
    /// `b(g1, h) + b(g2, h) = b(s, h)` for every `h`.
    pub fn complementary_pairs(&self) -> Vec<(Label, Label)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 1..n {
            for j in (i + 1)..n {
                let complementary = (0..n).all(|k| {
                    self.ring.add(self.entries[i][k], self.entries[j][k]) == self.entries[0][k]
                });
                if complementary {
                    out.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        out
    }

    pub fn is_complementary_pair(&self, a: &Label, b: &Label) -> Result<bool> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        if i == 0 || j == 0 {
            return Err(Error::BasepointNotAllowed);
        }
        Ok(i != j
            && (0..self.size()).all(|k| {
                self.ring.add(self.entries[i][k], self.entries[j][k]) == self.entries[0][k]
            }))
    }

    fn check_fresh(&self, l: &Label) -> Result<()> {
        if self.contains_label(l) {
            Err(Error::DuplicateLabel(l.clone()))
        } else {
            Ok(())
        }
    }

    /// M1: adjoin an annihilating element.
    pub fn apply_m1(&self, fresh: Label) -> Result<BasedMatrix> {
        self.check_fresh(&fresh)?;
        let n = self.size();
        let mut labels = self.labels.clone();
        labels.push(fresh);
        let mut entries = self.entries.clone();
        for row in entries.iter_mut() {
            row.push(0);
        }
        entries.push(vec![0; n + 1]);
        Self::new(labels, self.ring, entries)
    }

    /// M2: adjoin a core element, whose row duplicates the `s` row.
    pub fn apply_m2(&self, fresh: Label) -> Result<BasedMatrix> {
        self.check_fresh(&fresh)?;
        let mut labels = self.labels.clone();
        labels.push(fresh);
        let mut entries = self.entries.clone();
        let mut new_row: Vec<i64> = self.entries[0].clone();
        // b(g, s) = b(s, s) = 0 already; the new diagonal entry is forced to 0
        // by b(g, g) = b(s, g) together with skew-symmetry of the extension.
        new_row.push(0);
        for (i, row) in entries.iter_mut().enumerate() {
            row.push(self.ring.neg(new_row[i]));
        }
        entries.push(new_row);
        Self::new(labels, self.ring, entries)
    }

    /// M3: adjoin a complementary pair. `row1` lists `b(fresh1, h)` over the
    /// existing labels, `s` first; everything else is forced by the sum rule
    /// `b(g, h) + b(g', h) = b(s, h)`.
    pub fn apply_m3(&self, fresh1: Label, fresh2: Label, row1: &[i64]) -> Result<BasedMatrix> {
        self.check_fresh(&fresh1)?;
        self.check_fresh(&fresh2)?;
        if fresh1 == fresh2 {
            return Err(Error::DuplicateLabel(fresh2));
        }
        let n = self.size();
        if row1.len() != n {
            return Err(Error::RowLength {
                got: row1.len(),
                expected: n,
            });
        }
        for &v in row1 {
            if !self.ring.contains(v) {
                return Err(Error::ValueOutOfRing {
                    row: fresh1.clone(),
                    col: Label::S,
                    value: v,
                    ring: self.ring,
                });
            }
        }
        let ring = self.ring;
        let mut labels = self.labels.clone();
        labels.push(fresh1);
        labels.push(fresh2);
        // row of fresh2 over the old labels: b(s, h) - row1(h)
        let row2: Vec<i64> = (0..n)
            .map(|k| ring.sub(self.entries[0][k], row1[k]))
            .collect();
        // Setting h = s in the sum rule forces b(fresh2, s) = -b(fresh1, s),
        // and h = fresh2 forces b(fresh1, fresh2) = b(fresh1, s) = row1(s).
        let cross = row1[0];
        let mut entries = self.entries.clone();
        for (i, row) in entries.iter_mut().enumerate() {
            row.push(ring.neg(row1[i]));
            row.push(ring.neg(row2[i]));
        }
        let mut full1 = row1.to_vec();
        full1.push(0);
        full1.push(cross);
        let mut full2 = row2;
        full2.push(ring.neg(cross));
        full2.push(0);
        entries.push(full1);
        entries.push(full2);
        Self::new(labels, ring, entries)
    }

    /// Inverse move: drop an annihilating element, a core element, or a
    /// complementary pair, keeping the submatrix on the survivors.
    pub fn remove_element(&self, victims: &Victims) -> Result<BasedMatrix> {
        let drop: Vec<usize> = match victims {
            Victims::One(g) => {
                let class = self.classify_element(g)?;
                if class == ElementClass::Generic {
                    return Err(Error::NotRemovable {
                        label: g.clone(),
                        class,
                        wanted: "annihilating or core",
                    });
                }
                vec![self.index_of(g)?]
            }
            Victims::Pair(a, b) => {
                if !self.is_complementary_pair(a, b)? {
                    return Err(Error::NotComplementary {
                        a: a.clone(),
                        b: b.clone(),
                    });
                }
                vec![self.index_of(a)?, self.index_of(b)?]
            }
        };
        let keep: Vec<usize> = (0..self.size()).filter(|i| !drop.contains(i)).collect();
        self.submatrix(&keep)
    }

    fn submatrix(&self, keep: &[usize]) -> Result<BasedMatrix> {
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let entries = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        Self::new(labels, self.ring, entries)
    }

    /// No annihilating, core, or complementary elements.
    pub fn is_primitive(&self) -> bool {
        self.interior()
            .iter()
            .all(|g| self.classify_element(g).unwrap() == ElementClass::Generic)
            && self.complementary_pairs().is_empty()
    }

    /// Reduce to primitive form with a deterministic scan order: repeatedly
    /// remove the first annihilating element, else the first core element,
    /// else the lexicographically smallest complementary pair.
    pub fn reduce_to_primitive(&self) -> (BasedMatrix, ReductionTrace) {
        let mut current = self.clone();
        let mut trace = ReductionTrace::default();
        loop {
            let victim = current.next_reduction_step();
            match victim {
                Some(step) => {
                    current = current.remove_element(&step.removed).expect("valid victim");
                    trace.steps.push(step);
                }
                None => return (current, trace),
            }
        }
    }

    fn next_reduction_step(&self) -> Option<TraceStep> {
        let mut order: Vec<&Label> = self.interior().iter().collect();
        order.sort();
        for g in &order {
            if self.classify_element(g).unwrap() == ElementClass::Annihilating {
                return Some(TraceStep {
                    kind: MoveKind::M1,
                    removed: Victims::One((*g).clone()),
                });
            }
        }
        for g in &order {
            if self.classify_element(g).unwrap() == ElementClass::Core {
                return Some(TraceStep {
                    kind: MoveKind::M2,
                    removed: Victims::One((*g).clone()),
                });
            }
        }
        let mut pairs = self.complementary_pairs();
        pairs.sort_by(|(a1, b1), (a2, b2)| {
            let (x1, y1) = if a1 <= b1 { (a1, b1) } else { (b1, a1) };
            let (x2, y2) = if a2 <= b2 { (a2, b2) } else { (b2, a2) };
            (x1, y1).cmp(&(x2, y2))
        });
        pairs.into_iter().next().map(|(a, b)| TraceStep {
            kind: MoveKind::M3,
            removed: Victims::pair(a, b),
        })
    }
}

impl std::fmt::Debug for BasedMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BasedMatrix[{}] {:?}", self.ring, self.labels)?;
        for row in &self.entries {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn fig_matrix() -> BasedMatrix {
        fixtures::flat_figure_matrix()
    }

    #[test]
    fn new_validates_flat_figure_table() {
        let t = fig_matrix();
        assert_eq!(t.size(), 4);
        assert_eq!(t.value(&Label::S, &Label::named("1")).unwrap(), 1);
    }

    #[test]
    fn trivial_matrix() {
        let t = BasedMatrix::trivial(Ring::Z);
        assert_eq!(t.size(), 1);
        assert!(t.is_primitive());
    }

    #[test]
    fn rejects_non_skew() {
        let err = BasedMatrix::from_named(
            &["s", "1", "2"],
            Ring::Z,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotSkewSymmetric { .. }));
    }

    #[test]
    fn rejects_nonzero_diagonal() {
        let err = BasedMatrix::from_named(
            &["s", "1"],
            Ring::Z2,
            vec![vec![0, 0], vec![0, 1]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonzeroDiagonal { .. }));
    }

    #[test]
    fn rejects_out_of_ring() {
        let err = BasedMatrix::from_named(
            &["s", "1"],
            Ring::Z2,
            vec![vec![0, 2], vec![-2, 0]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ValueOutOfRing { .. }));
    }

    #[test]
    fn classify_fig_element() {
        let t = fig_matrix();
        assert_eq!(
            t.classify_element(&Label::named("1")).unwrap(),
            ElementClass::Generic
        );
        assert!(t.classify_element(&Label::S).is_err());
        assert!(t.classify_element(&Label::named("9")).is_err());
    }

    #[test]
    fn zero_matrix_classes() {
        let t = BasedMatrix::from_named(
            &["s", "a", "b"],
            Ring::Z,
            vec![vec![0; 3], vec![0; 3], vec![0; 3]],
        )
        .unwrap();
        assert_eq!(
            t.classify_element(&Label::named("a")).unwrap(),
            ElementClass::Annihilating
        );
        let pairs = t.complementary_pairs();
        assert_eq!(pairs, vec![(Label::named("a"), Label::named("b"))]);
    }

    #[test]
    fn fig_matrix_is_primitive() {
        let t = fig_matrix();
        assert!(t.complementary_pairs().is_empty());
        assert!(t.is_primitive());
        let (p, trace) = t.reduce_to_primitive();
        assert_eq!(p, t);
        assert!(trace.is_empty());
    }

    #[test]
    fn m1_round_trip() {
        let t = fig_matrix();
        let fresh = Label::named("4");
        let t2 = t.apply_m1(fresh.clone()).unwrap();
        assert_eq!(t2.size(), 5);
        assert!(t2.row(&fresh).unwrap().iter().all(|&v| v == 0));
        assert_eq!(
            t2.classify_element(&fresh).unwrap(),
            ElementClass::Annihilating
        );
        let back = t2.remove_element(&Victims::One(fresh)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn m1_on_trivial() {
        let t = BasedMatrix::trivial(Ring::Z2);
        let t2 = t.apply_m1(Label::named("a")).unwrap();
        assert_eq!(t2.rows(), &[vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn m2_duplicates_s_row() {
        let t = fig_matrix();
        let fresh = Label::named("4");
        let t2 = t.apply_m2(fresh.clone()).unwrap();
        let row = t2.row(&fresh).unwrap();
        assert_eq!(&row[..4], &[0, 1, 1, 0]);
        assert_eq!(t2.classify_element(&fresh).unwrap(), ElementClass::Core);
        let back = t2.remove_element(&Victims::One(fresh)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn m2_on_trivial_gives_zero() {
        let t = BasedMatrix::trivial(Ring::Z2);
        let t2 = t.apply_m2(Label::named("a")).unwrap();
        assert_eq!(t2.rows(), &[vec![0, 0], vec![0, 0]]);
        // core with zero s-row is also annihilating; annihilating is reported
        assert_eq!(
            t2.classify_element(&Label::named("a")).unwrap(),
            ElementClass::Annihilating
        );
    }

    #[test]
    fn m3_reproduces_remark_matrix() {
        // §2.1 remark: replacing x by u in B via an M3 with row1 = row of x.
        let b = fixtures::remark_primitive_matrix();
        let x_row = b.row(&Label::named("x")).unwrap().to_vec();
        let t2 = b
            .apply_m3(Label::named("p"), Label::named("u"), &x_row)
            .unwrap();
        let expected = BasedMatrix::from_named(
            &["s", "x", "y", "p", "u"],
            Ring::Z2,
            vec![
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 0],
                vec![0, 1, 0, 1, 1],
                vec![0, 0, 1, 0, 0],
                vec![0, 0, 1, 0, 0],
            ],
        )
        .unwrap();
        // same pairing up to label order
        for g in expected.labels() {
            for h in expected.labels() {
                assert_eq!(t2.value(g, h).unwrap(), expected.value(g, h).unwrap());
            }
        }
        assert!(t2
            .is_complementary_pair(&Label::named("p"), &Label::named("u"))
            .unwrap());
        let back = t2
            .remove_element(&Victims::pair(Label::named("p"), Label::named("u")))
            .unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn m3_zero_row_degenerates() {
        let t = fig_matrix();
        let row = vec![0; t.size()];
        let t2 = t
            .apply_m3(Label::named("4"), Label::named("5"), &row)
            .unwrap();
        assert_eq!(
            t2.classify_element(&Label::named("4")).unwrap(),
            ElementClass::Annihilating
        );
        assert_eq!(
            t2.classify_element(&Label::named("5")).unwrap(),
            ElementClass::Core
        );
        assert!(t2
            .complementary_pairs()
            .contains(&(Label::named("4"), Label::named("5"))));
    }

    #[test]
    fn removing_generic_fails() {
        let t = fig_matrix();
        let err = t.remove_element(&Victims::One(Label::named("1"))).unwrap_err();
        assert!(matches!(err, Error::NotRemovable { .. }));
    }

    #[test]
    fn reduce_zero_matrix() {
        let t = BasedMatrix::from_named(
            &["s", "a", "b", "c"],
            Ring::Z,
            vec![vec![0; 4]; 4],
        )
        .unwrap();
        let (p, trace) = t.reduce_to_primitive();
        assert_eq!(p, BasedMatrix::trivial(Ring::Z));
        assert_eq!(trace.steps.len(), 3);
        assert!(trace.steps.iter().all(|s| s.kind == MoveKind::M1));
        assert_eq!(trace.replay(&t).unwrap(), p);
    }

    #[test]
    fn reduce_example_b() {
        let b = fixtures::example_matrix_b();
        let (p, trace) = b.reduce_to_primitive();
        assert_eq!(p, fixtures::example_matrix_b_primitive());
        assert_eq!(trace.replay(&b).unwrap(), p);
        assert!(p.is_primitive());
    }

    #[test]
    fn example_b_complementary_pair() {
        let b = fixtures::example_matrix_b();
        let pairs = b.complementary_pairs();
        assert!(pairs.contains(&(Label::named("1"), Label::named("2"))));
    }
}
