//! The parity maps on based matrices: Gaussian parity, the stable parity
//! functor, the hat and reduced parity functors, and the reduced parity
//! obtained after coarsening by the automorphism group of the primitive
//! form. Includes the axiom checker (P0)-(P3) and the appendix-style parity
//! matrix report.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::{quotient_group, CanonicalAbelianGroup};
use crate::iso::automorphisms;
use crate::label::Label;
use crate::linalg::{f2, zint};
use crate::matrix::{BasedMatrix, ElementClass, MoveKind};
use crate::partition::{annulator, stable_partition, Partition};
use crate::random;
use crate::ring::Ring;
use crate::tribes::{aut_coarsening, tag_tribes};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityKind {
    Gaussian,
    Stable,
    Hat,
    ReducedFunctor,
    Reduced,
}

/// A parity map together with its canonically presented coefficient group.
///
/// `columns` name the ambient coordinates (single elements for Gaussian and
/// the stable functor, tribe classes with `{s}` first otherwise); `ambient`
/// holds the raw coordinate vectors before quotienting, `values` their
/// canonical coset coordinates. The basepoint value is 0 by definition and
/// is not stored.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ParityAssignment {
    pub kind: ParityKind,
    pub ring: Ring,
    pub group: CanonicalAbelianGroup,
    pub columns: Vec<Vec<Label>>,
    pub relations: Vec<Vec<i64>>,
    pub elements: Vec<Label>,
    pub ambient: Vec<Vec<i64>>,
    pub values: Vec<Vec<i64>>,
}

impl ParityAssignment {
    pub fn value_of(&self, g: &Label) -> Option<&[i64]> {
        if *g == Label::S {
            // values(s) = 0 by definition; the zero is not stored
            return None;
        }
        self.elements
            .iter()
            .position(|l| l == g)
            .map(|i| self.values[i].as_slice())
    }

    pub fn ambient_of(&self, g: &Label) -> Option<&[i64]> {
        self.elements
            .iter()
            .position(|l| l == g)
            .map(|i| self.ambient[i].as_slice())
    }

    pub fn column_legend(&self) -> Vec<String> {
        self.columns
            .iter()
            .map(|c| {
                if c.len() == 1 {
                    c[0].to_string()
                } else {
                    format!(
                        "{{{}}}",
                        c.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
                    )
                }
            })
            .collect()
    }
}

fn assignment_from_classes(
    kind: ParityKind,
    t: &BasedMatrix,
    classes: Vec<Vec<Label>>,
    floor_correct: bool,
) -> ParityAssignment {
    let ring = t.ring();
    let b_s: Vec<i64> = classes
        .iter()
        .map(|c| t.pair_with_block(&Label::S, c).unwrap())
        .collect();
    let group = quotient_group(ring, classes.len(), std::slice::from_ref(&b_s));
    let elements: Vec<Label> = t.interior().to_vec();
    let ambient: Vec<Vec<i64>> = elements
        .iter()
        .map(|g| {
            let bgs = t.value(g, &Label::S).unwrap();
            classes
                .iter()
                .map(|c| {
                    let v = t.pair_with_block(g, c).unwrap();
                    if floor_correct {
                        ring.normalize(v - (c.len() / 2) as i64 * bgs)
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    let values = ambient.iter().map(|v| group.reduce(v)).collect();
    ParityAssignment {
        kind,
        ring,
        group,
        columns: classes,
        relations: vec![b_s],
        elements,
        ambient,
        values,
    }
}

/// `p(g) = b(g, s)` with coefficients in the ring itself.
pub fn gaussian_parity(t: &BasedMatrix) -> ParityAssignment {
    let ring = t.ring();
    let group = quotient_group(ring, 1, &[]);
    let elements: Vec<Label> = t.interior().to_vec();
    let ambient: Vec<Vec<i64>> = elements
        .iter()
        .map(|g| vec![t.value(g, &Label::S).unwrap()])
        .collect();
    let values = ambient.iter().map(|v| group.reduce(v)).collect();
    ParityAssignment {
        kind: ParityKind::Gaussian,
        ring,
        group,
        columns: vec![vec![Label::S]],
        relations: Vec::new(),
        elements,
        ambient,
        values,
    }
}

/// `P^st(g) = [e_g]` in `A^st = R[G°] / Ann(𝔠_∞)`.
pub fn stable_parity_functor(t: &BasedMatrix) -> ParityAssignment {
    let (stable, _) = stable_partition(t);
    let ann = annulator(t, &stable).expect("stable partition is valid");
    let elements: Vec<Label> = t.interior().to_vec();
    let n = elements.len();
    let group = quotient_group(t.ring(), n, &ann.basis);
    let ambient: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            e
        })
        .collect();
    let values = ambient.iter().map(|v| group.reduce(v)).collect();
    ParityAssignment {
        kind: ParityKind::Stable,
        ring: t.ring(),
        group,
        columns: elements.iter().map(|l| vec![l.clone()]).collect(),
        relations: ann.basis,
        elements,
        ambient,
        values,
    }
}

/// The hat functor over all blocks of `p`: ambient coordinates indexed by
/// blocks, quotient by `b̂(s)`, values `P̂(g) = Σ b(g,χ_C)·C`.
pub fn hat_parity_functor(t: &BasedMatrix, p: &Partition) -> Result<ParityAssignment> {
    // validate through the annulator's partition check
    annulator(t, p)?;
    Ok(assignment_from_classes(
        ParityKind::Hat,
        t,
        p.blocks().to_vec(),
        false,
    ))
}

/// Primitive tribes minus the zero tribe, ordered `{s}` first.
fn reduced_functor_classes(t: &BasedMatrix) -> Vec<Vec<Label>> {
    let tags = tag_tribes(t);
    tags.primitive_blocks
        .iter()
        .filter(|c| tags.zero_block.as_deref() != Some(c.as_slice()))
        .cloned()
        .collect()
}

/// The reduced parity functor: coordinates over `𝔠(T)*_prim`, values with
/// the `⌊|C|/2⌋·b(g,s)` correction, quotient by `b̃(s)`.
pub fn reduced_parity_functor(t: &BasedMatrix) -> ParityAssignment {
    assignment_from_classes(ParityKind::ReducedFunctor, t, reduced_functor_classes(t), true)
}

/// The bar classes of `t`: primitive tribes merged according to the
/// automorphism coarsening of the primitive form, lifted back through the
/// tribe correspondence, with the class containing a primitive zero tribe
/// dropped.
fn bar_classes(t: &BasedMatrix) -> Vec<Vec<Label>> {
    let (t_red, _) = t.reduce_to_primitive();
    let auts = automorphisms(&t_red);
    let coarse = aut_coarsening(&t_red, &auts);
    let tags = tag_tribes(t);

    let mut lifted: Vec<Vec<Label>> = vec![Vec::new(); coarse.len()];
    for c in &tags.primitive_blocks {
        let survivor = c
            .iter()
            .find(|l| t_red.contains_label(l))
            .expect("primitive tribe meets the survivor set");
        let bi = coarse
            .blocks()
            .iter()
            .position(|b| b.contains(survivor))
            .expect("survivor lies in a coarse block");
        lifted[bi].extend(c.iter().cloned());
    }
    let mut classes: Vec<Vec<Label>> = lifted.into_iter().filter(|c| !c.is_empty()).collect();
    for c in classes.iter_mut() {
        c.sort();
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    if let Some(zero) = &tags.zero_block {
        if tags.is_primitive_block(zero) {
            classes.retain(|c| !c.contains(&zero[0]));
        }
    }
    classes
}

/// The reduced parity `p̄`: Eq.-(9) values over the bar classes, quotient by
/// `b̄(s)`.
pub fn reduced_parity(t: &BasedMatrix) -> ParityAssignment {
    assignment_from_classes(ParityKind::Reduced, t, bar_classes(t), true)
}

pub fn compute_parity(t: &BasedMatrix, kind: ParityKind) -> ParityAssignment {
    match kind {
        ParityKind::Gaussian => gaussian_parity(t),
        ParityKind::Stable => stable_parity_functor(t),
        ParityKind::Hat => {
            let (p, _) = stable_partition(t);
            hat_parity_functor(t, &p).expect("stable partition is valid")
        }
        ParityKind::ReducedFunctor => reduced_parity_functor(t),
        ParityKind::Reduced => reduced_parity(t),
    }
}

/// The appendix-style parity matrix: columns are the bar classes with `{s}`
/// first, the first row is `b̄(s)`, the remaining rows the Eq.-(9) values of
/// the interior elements. The `s` column reproduces the Gaussian (index)
/// parity.
pub fn parity_matrix_report(t: &BasedMatrix) -> String {
    let p = reduced_parity(t);
    let legend = p.column_legend();
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    rows.push((
        "b(s)".to_string(),
        p.relations[0].iter().map(|v| v.to_string()).collect(),
    ));
    for (g, amb) in p.elements.iter().zip(&p.ambient) {
        rows.push((g.to_string(), amb.iter().map(|v| v.to_string()).collect()));
    }
    let mut widths: Vec<usize> = legend.iter().map(|l| l.len()).collect();
    for (_, cells) in &rows {
        for (w, c) in widths.iter_mut().zip(cells) {
            *w = (*w).max(c.len());
        }
    }
    let name_w = rows
        .iter()
        .map(|(n, _)| n.len())
        .max()
        .unwrap_or(0)
        .max(4);
    let mut out = String::new();
    out.push_str(&format!("group: {}\n", p.group));
    out.push_str(&format!("{:>name_w$}", ""));
    for (&w, l) in widths.iter().zip(&legend) {
        out.push_str(&format!("  {l:>w$}"));
    }
    out.push('\n');
    for (name, cells) in &rows {
        out.push_str(&format!("{name:>name_w$}"));
        for (&w, c) in widths.iter().zip(cells) {
            out.push_str(&format!("  {c:>w$}"));
        }
        out.push('\n');
    }
    out
}

/// Outcome of checking the parity axioms on a single matrix.
#[derive(Clone, Default, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ViolationReport {
    pub violations: Vec<String>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.violations.is_empty() {
            write!(f, "no violations")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Check axioms (P1)-(P3) exhaustively and (P0) by applying `moves` seeded
/// random moves and comparing values through the induced correspondence.
pub fn verify_parity_axioms(
    t: &BasedMatrix,
    kind: ParityKind,
    moves: usize,
    seed: u64,
) -> ViolationReport {
    let mut report = ViolationReport::default();
    let p = compute_parity(t, kind);
    check_static_axioms(t, &p, &mut report);

    let mut rng = random::rng(seed);
    let mut current = t.clone();
    let mut current_p = p;
    for step in 0..moves {
        let (next, move_kind) = random::random_move(&current, &mut rng);
        let next_p = compute_parity(&next, kind);
        check_p0(
            &current, &current_p, &next_p, move_kind, step, &mut report,
        );
        current = next;
        current_p = next_p;
    }
    report
}

fn check_static_axioms(t: &BasedMatrix, p: &ParityAssignment, report: &mut ViolationReport) {
    let group = &p.group;
    // P1: annihilating and core elements have zero parity
    for g in t.interior() {
        let class = t.classify_element(g).unwrap();
        if class != ElementClass::Generic {
            let v = p.value_of(g).unwrap();
            if !group.is_zero(v) {
                report
                    .violations
                    .push(format!("P1: {class:?} element {g} has nonzero value {v:?}"));
            }
        }
    }
    // P2: complementary pairs sum to zero
    for (g1, g2) in t.complementary_pairs() {
        let sum = group.add(p.value_of(&g1).unwrap(), p.value_of(&g2).unwrap());
        if !group.is_zero(&sum) {
            report.violations.push(format!(
                "P2: complementary pair {{{g1},{g2}}} sums to {sum:?}"
            ));
        }
    }
    // P3: triples with b(g1,h)+b(g2,h)+b(g3,h)=b(s,h) for all h sum to zero
    let interior = t.interior();
    let n = interior.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let triple_row = |h: usize| {
                    let r = t.ring();
                    r.add(
                        r.add(t.value_at(i + 1, h), t.value_at(j + 1, h)),
                        t.value_at(k + 1, h),
                    )
                };
                if (0..t.size()).all(|h| triple_row(h) == t.value_at(0, h)) {
                    let sum = group.add(
                        &group.add(
                            p.value_of(&interior[i]).unwrap(),
                            p.value_of(&interior[j]).unwrap(),
                        ),
                        p.value_of(&interior[k]).unwrap(),
                    );
                    if !group.is_zero(&sum) {
                        report.violations.push(format!(
                            "P3: triple {{{},{},{}}} sums to {sum:?}",
                            interior[i], interior[j], interior[k]
                        ));
                    }
                }
            }
        }
    }
}

fn check_p0(
    t: &BasedMatrix,
    p: &ParityAssignment,
    p2: &ParityAssignment,
    move_kind: MoveKind,
    step: usize,
    report: &mut ViolationReport,
) {
    match p.kind {
        ParityKind::Gaussian => {
            for g in t.interior() {
                if p.value_of(g) != p2.value_of(g) {
                    report.violations.push(format!(
                        "P0: step {step} {move_kind:?}: Gaussian value of {g} changed"
                    ));
                }
            }
        }
        ParityKind::Stable => check_p0_stable(t, p, p2, move_kind, step, report),
        _ => check_p0_classes(t, p, p2, move_kind, step, report),
    }
}

/// (P0) for the stable functor: the induced map `e_g → e_g` must be a
/// monomorphism, which holds iff `Ann(𝔠_∞(T')) ∩ R[G°] = Ann(𝔠_∞(T))`.
/// The old interior coordinates are a prefix of the new ones.
fn check_p0_stable(
    t: &BasedMatrix,
    p: &ParityAssignment,
    p2: &ParityAssignment,
    move_kind: MoveKind,
    step: usize,
    report: &mut ViolationReport,
) {
    let n = t.interior().len();
    let restricted = match t.ring() {
        Ring::Z2 => restrict_span_f2(&p2.relations, n),
        Ring::Z => restrict_span_z(&p2.relations, n),
    };
    if restricted != p.relations {
        report.violations.push(format!(
            "P0: step {step} {move_kind:?}: stable annulator restriction mismatch: {restricted:?} vs {:?}",
            p.relations
        ));
    }
}

/// Vectors of `span(basis)` supported on the first `n` coordinates,
/// restricted to those coordinates and canonicalized (rref).
fn restrict_span_f2(basis: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let extra: Vec<Vec<i64>> = basis.iter().map(|r| r[n..].to_vec()).collect();
    let xs = f2::left_kernel(&extra);
    let combos: Vec<Vec<i64>> = xs
        .iter()
        .map(|x| {
            let mut v = vec![0i64; n];
            for (xi, row) in x.iter().zip(basis) {
                if *xi == 1 {
                    for (a, b) in v.iter_mut().zip(row) {
                        *a = (*a + b) % 2;
                    }
                }
            }
            v
        })
        .collect();
    f2::rref(&combos).0
}

/// Same over Z: lattice vectors with zero tail, via the left kernel of the
/// tail block.
fn restrict_span_z(basis: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let big = zint::from_i64(basis);
    let extra: zint::Mat = big.iter().map(|r| r[n..].to_vec()).collect();
    let xs = zint::left_kernel(&extra);
    let combos: zint::Mat = xs
        .iter()
        .map(|x| {
            (0..n)
                .map(|c| x.iter().zip(&big).map(|(xi, row)| xi * &row[c]).sum())
                .collect()
        })
        .collect();
    zint::to_i64(&zint::hnf_basis(&combos))
}

/// (P0) for the class-indexed parities: classes of `T'` restrict to classes
/// of `T` by intersection with `G`; relation vectors and ambient values must
/// agree through the correspondence, with the hat functor's `l·λ_s`
/// adjustment on the class absorbing the new elements.
fn check_p0_classes(
    t: &BasedMatrix,
    p: &ParityAssignment,
    p2: &ParityAssignment,
    move_kind: MoveKind,
    step: usize,
    report: &mut ViolationReport,
) {
    let hat = p.kind == ParityKind::Hat;
    let l = match move_kind {
        MoveKind::M1 => 0,
        MoveKind::M2 | MoveKind::M3 => 1,
    };
    // map each new column to the old column with the same intersection
    let mut correspondence: Vec<Option<usize>> = Vec::with_capacity(p2.columns.len());
    let mut matched = vec![false; p.columns.len()];
    for c2 in &p2.columns {
        let restricted: Vec<Label> = c2
            .iter()
            .filter(|lbl| t.contains_label(lbl))
            .cloned()
            .collect();
        if restricted.is_empty() {
            correspondence.push(None);
            continue;
        }
        match p.columns.iter().position(|c| *c == restricted) {
            Some(i) => {
                matched[i] = true;
                correspondence.push(Some(i));
            }
            None => {
                report.violations.push(format!(
                    "P0: step {step} {move_kind:?}: class {restricted:?} of T' has no counterpart"
                ));
                return;
            }
        }
    }
    if matched.iter().any(|m| !m) {
        report.violations.push(format!(
            "P0: step {step} {move_kind:?}: some classes of T are not hit by the correspondence"
        ));
        return;
    }
    let grows = |c2: &Vec<Label>| c2.iter().any(|lbl| !t.contains_label(lbl));
    // relation vectors transport without change: b'(s,χ_C') = b(s,χ_C)
    for (ci, c2) in correspondence.iter().zip(&p2.columns) {
        let got = p2.relations[0][p2.columns.iter().position(|c| c == c2).unwrap()];
        let want = match ci {
            Some(i) => p.relations[0][*i],
            None => 0,
        };
        if got != want {
            report.violations.push(format!(
                "P0: step {step} {move_kind:?}: relation entry at {c2:?} is {got}, expected {want}"
            ));
        }
    }
    // ambient values transport exactly (hat: plus l·b(g,s) on the class
    // containing the new elements)
    for g in t.interior() {
        let old = p.ambient_of(g).unwrap();
        let new = p2.ambient_of(g).unwrap();
        let bgs = t.value(g, &Label::S).unwrap();
        for (j, c2) in p2.columns.iter().enumerate() {
            let mut want = match correspondence[j] {
                Some(i) => old[i],
                None => 0,
            };
            if hat && grows(c2) {
                want = t.ring().add(want, t.ring().normalize(l * bgs));
            }
            if new[j] != want {
                report.violations.push(format!(
                    "P0: step {step} {move_kind:?}: value of {g} at class {c2:?} is {}, expected {want}",
                    new[j]
                ));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn named(ls: &[&str]) -> Vec<Label> {
        ls.iter().map(|l| Label::named(*l)).collect()
    }

    #[test]
    fn gaussian_of_knot_4_13() {
        let t = fixtures::knot_4_13();
        let p = gaussian_parity(&t);
        let vals: Vec<i64> = t
            .interior()
            .iter()
            .map(|g| p.value_of(g).unwrap()[0])
            .collect();
        assert_eq!(vals, vec![1, 0, 0, -1]);
        assert_eq!(p.group.to_string(), "Z");
    }

    #[test]
    fn stable_functor_of_example_b() {
        let b = fixtures::example_matrix_b();
        let p = stable_parity_functor(&b);
        assert_eq!(p.group.to_string(), "Z_2^3");
        let v = |l: &str| p.value_of(&Label::named(l)).unwrap().to_vec();
        assert_eq!(v("1"), vec![1, 0, 0]);
        assert_eq!(v("2"), vec![1, 0, 0]);
        assert_eq!(v("3"), vec![0, 0, 0]);
        assert_eq!(v("4"), vec![0, 0, 0]);
        assert_eq!(v("5"), vec![0, 1, 0]);
        assert_eq!(v("6"), vec![0, 1, 0]);
        assert_eq!(v("7"), vec![0, 1, 0]);
        assert_eq!(v("8"), vec![0, 0, 1]);
    }

    #[test]
    fn hat_functor_on_flat_figure() {
        let t = fixtures::flat_figure_matrix();
        let (p, _) = stable_partition(&t);
        let hat = hat_parity_functor(&t, &p).unwrap();
        assert_eq!(hat.relations[0], vec![0, 1, 1, 0]);
        assert_eq!(hat.group.to_string(), "Z_2^3");
        // P̂(s) = 0: the s ambient row is exactly the relation; complementary
        // identity checked at the interior level instead
        let report = verify_parity_axioms(&t, ParityKind::Hat, 0, 0);
        assert!(report.is_empty(), "{report}");
    }

    #[test]
    fn reduced_functor_of_example_b() {
        let b = fixtures::example_matrix_b();
        let p = reduced_parity_functor(&b);
        assert_eq!(
            p.columns,
            vec![vec![Label::S], named(&["5", "6", "7"]), named(&["8"])]
        );
        assert_eq!(p.relations[0], vec![0, 0, 0]);
        assert_eq!(p.group.to_string(), "Z_2^3");
        let v = |l: &str| p.value_of(&Label::named(l)).unwrap().to_vec();
        for l in ["1", "2", "3", "4"] {
            assert_eq!(v(l), vec![0, 0, 0]);
        }
        for l in ["5", "6", "7"] {
            assert_eq!(v(l), vec![0, 0, 1]);
        }
        assert_eq!(v("8"), vec![0, 1, 0]);
    }

    #[test]
    fn reduced_functor_of_knot_4_9() {
        let t = fixtures::knot_4_9();
        let p = reduced_parity_functor(&t);
        assert_eq!(
            p.columns,
            vec![vec![Label::S], named(&["1", "4"]), named(&["2"]), named(&["3"])]
        );
        assert_eq!(p.relations[0], vec![0, 0, 0, 0]);
        assert_eq!(
            p.ambient,
            vec![
                vec![-1, 1, -1, -1],
                vec![0, 0, 0, -1],
                vec![0, 0, 1, 0],
                vec![1, -1, 1, 1],
            ]
        );
        assert_eq!(p.group.to_string(), "Z^4");
    }

    #[test]
    fn reduced_parity_of_flat_figure() {
        let t = fixtures::flat_figure_matrix();
        let p = reduced_parity(&t);
        assert_eq!(
            p.columns,
            vec![vec![Label::S], named(&["1"]), named(&["2"]), named(&["3"])]
        );
        assert_eq!(p.relations[0], vec![0, 1, 1, 0]);
        assert_eq!(p.group.to_string(), "Z_2^3");
        let v = |l: &str| p.value_of(&Label::named(l)).unwrap().to_vec();
        assert_eq!(v("1"), vec![1, 0, 0]);
        assert_eq!(v("2"), vec![1, 0, 1]);
        assert_eq!(v("3"), vec![0, 1, 0]);
    }

    #[test]
    fn reduced_parity_of_example_b() {
        let b = fixtures::example_matrix_b();
        let p = reduced_parity(&b);
        assert_eq!(
            p.columns,
            vec![vec![Label::S], named(&["5", "6", "7", "8"])]
        );
        assert_eq!(p.group.to_string(), "Z_2^2");
        let v = |l: &str| p.value_of(&Label::named(l)).unwrap().to_vec();
        for l in ["1", "2", "3", "4"] {
            assert_eq!(v(l), vec![0, 0]);
        }
        for l in ["5", "6", "7", "8"] {
            assert_eq!(v(l), vec![0, 1]);
        }
    }

    #[test]
    fn reduced_parity_of_knot_4_1() {
        let t = fixtures::knot_4_1();
        let p = reduced_parity(&t);
        assert_eq!(
            p.columns,
            vec![vec![Label::S], named(&["1", "3"]), named(&["2", "4"])]
        );
        assert_eq!(p.relations[0], vec![0, 2, -2]);
        assert_eq!(
            p.ambient,
            vec![
                vec![-1, 1, 0],
                vec![1, 0, -1],
                vec![-1, 1, 0],
                vec![1, 0, -1],
            ]
        );
        assert_eq!(p.group.free_rank(), 2);
        assert_eq!(p.group.invariant_factors(), vec![2]);
    }

    #[test]
    fn reduced_parity_of_knot_4_13() {
        let t = fixtures::knot_4_13();
        let p = reduced_parity(&t);
        assert_eq!(
            p.columns,
            vec![vec![Label::S], named(&["1"]), named(&["2", "3"]), named(&["4"])]
        );
        assert_eq!(p.relations[0], vec![0, -1, 0, 1]);
        assert_eq!(
            p.ambient,
            vec![
                vec![1, 0, 1, 1],
                vec![0, -1, 0, 0],
                vec![0, -1, 0, 0],
                vec![-1, -1, 1, 0],
            ]
        );
        assert_eq!(p.group.to_string(), "Z^3");
    }

    #[test]
    fn reduced_parity_of_knot_4_85() {
        let t = fixtures::knot_4_85();
        let p = reduced_parity(&t);
        assert_eq!(p.columns.len(), 5);
        assert_eq!(p.relations[0], vec![0, 2, -2, -2, 2]);
        // singleton tribes: the parity matrix coincides with the based matrix
        for (g, amb) in p.elements.iter().zip(&p.ambient) {
            assert_eq!(amb.as_slice(), t.row(g).unwrap());
        }
        assert_eq!(p.group.free_rank(), 4);
        assert_eq!(p.group.invariant_factors(), vec![2]);
    }

    #[test]
    fn report_of_knot_4_1() {
        let report = parity_matrix_report(&fixtures::knot_4_1());
        assert!(report.contains("group: Z^2 + Z_2"));
        assert!(report.contains("{1,3}"));
        assert!(report.contains("b(s)"));
    }

    #[test]
    fn axioms_hold_on_fixtures() {
        for (t, moves) in [
            (fixtures::flat_figure_matrix(), 6),
            (fixtures::example_matrix_b(), 4),
            (fixtures::knot_4_1(), 4),
            (fixtures::knot_4_13(), 4),
        ] {
            for kind in [
                ParityKind::Gaussian,
                ParityKind::Stable,
                ParityKind::Hat,
                ParityKind::ReducedFunctor,
                ParityKind::Reduced,
            ] {
                let report = verify_parity_axioms(&t, kind, moves, 9);
                assert!(report.is_empty(), "{kind:?}: {report}");
            }
        }
    }

    #[test]
    fn corrupted_assignment_is_caught() {
        let t = fixtures::example_matrix_b();
        let mut p = reduced_parity(&t);
        // flip one value: P2/P3 must notice
        p.values[0] = p.group.add(&p.values[0], &[1, 0]);
        let mut report = ViolationReport::default();
        check_static_axioms(&t, &p, &mut report);
        assert!(!report.is_empty());
    }
}
