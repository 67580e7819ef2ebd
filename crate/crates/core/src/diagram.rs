//! Gauss-code diagrams: parsing, the Carter surface as a ribbon graph, the
//! homology intersection form of the capped surface, and the based matrix of
//! a virtual or flat knot diagram.
//!
//! Darts are numbered `2k` (tail) and `2k + 1` (head) for arc `k`, which runs
//! from pass `k` to pass `k + 1` around the unicursal component. The left
//! half of a crossing is the loop from its second passage back to its first.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso::automorphisms;
use crate::label::Label;
use crate::linalg::zint;
use crate::matrix::{BasedMatrix, ReductionTrace};
use crate::parity::{parity_matrix_report, reduced_parity, ParityAssignment};
use crate::partition::{stable_partition, Partition};
use crate::ring::Ring;
use crate::tribes::{tag_tribes, TribeTags};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PassRole {
    Over,
    Under,
    Flat,
}

/// One passage through a crossing.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Pass {
    pub crossing: u32,
    pub role: PassRole,
    pub sign: i64,
}

/// A validated signed Gauss code of one unicursal component. Virtual mode
/// carries over/under markers on every pass; flat mode carries none.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GaussCode {
    passes: Vec<Pass>,
    crossings: Vec<u32>,
    virtual_mode: bool,
}

impl GaussCode {
    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    /// Crossing ids, ascending.
    pub fn crossings(&self) -> &[u32] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_virtual(&self) -> bool {
        self.virtual_mode
    }

    /// Positions of the first and second passage of a crossing.
    pub fn positions_of(&self, crossing: u32) -> (usize, usize) {
        let mut it = self
            .passes
            .iter()
            .enumerate()
            .filter(|(_, p)| p.crossing == crossing)
            .map(|(i, _)| i);
        (it.next().expect("known crossing"), it.next().expect("two passes"))
    }

    /// The local (flat) sign of a crossing, oriented by passage order: the
    /// sign of det(t1, t2) for the tangents of the first and second passage.
    /// A written virtual sign is the writhe, oriented by (over, under), so it
    /// flips when the first passage goes under.
    pub fn sign_of(&self, crossing: u32) -> i64 {
        let first = self
            .passes
            .iter()
            .find(|p| p.crossing == crossing)
            .expect("known crossing");
        match first.role {
            PassRole::Under => -first.sign,
            _ => first.sign,
        }
    }

    /// The same diagram with the basepoint moved `shift` passes forward.
    /// In flat mode a crossing whose passages straddle the new basepoint
    /// swaps passage order, which negates its stored local sign.
    pub fn rotate(&self, shift: usize) -> GaussCode {
        let n = self.passes.len();
        let shift = shift % n;
        let mut flipped = Vec::new();
        if !self.virtual_mode {
            for &c in &self.crossings {
                let (i, j) = self.positions_of(c);
                if i < shift && shift <= j {
                    flipped.push(c);
                }
            }
        }
        let passes = (0..n)
            .map(|i| {
                let mut p = self.passes[(i + shift) % n].clone();
                if flipped.contains(&p.crossing) {
                    p.sign = -p.sign;
                }
                p
            })
            .collect();
        GaussCode {
            passes,
            crossings: self.crossings.clone(),
            virtual_mode: self.virtual_mode,
        }
    }
}

impl std::fmt::Display for GaussCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for p in &self.passes {
            let role = match p.role {
                PassRole::Over => "O",
                PassRole::Under => "U",
                PassRole::Flat => "",
            };
            let sign = if p.sign >= 0 { '+' } else { '-' };
            write!(f, "{role}{}{sign}", p.crossing)?;
        }
        Ok(())
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::GaussCode(msg.into())
}

/// Parse a code like `O1+O2+U1+U2+` (virtual) or `1+2+1-2-` (flat).
/// Separators (whitespace, commas) between passes are allowed.
pub fn parse_gauss_code(text: &str) -> Result<GaussCode> {
    let mut passes = Vec::new();
    let mut chars = text.chars().peekable();
    loop {
        while chars.peek().is_some_and(|c| c.is_whitespace() || *c == ',') {
            chars.next();
        }
        let Some(&c) = chars.peek() else { break };
        let role = match c {
            'O' | 'o' => {
                chars.next();
                PassRole::Over
            }
            'U' | 'u' => {
                chars.next();
                PassRole::Under
            }
            _ => PassRole::Flat,
        };
        let mut digits = String::new();
        while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
            digits.push(chars.next().unwrap());
        }
        if digits.is_empty() {
            return Err(bad(format!(
                "expected a crossing number at `{}`",
                chars.collect::<String>()
            )));
        }
        let crossing: u32 = digits
            .parse()
            .map_err(|_| bad(format!("crossing number `{digits}` out of range")))?;
        if crossing == 0 {
            return Err(bad("crossing numbers start at 1"));
        }
        let sign = match chars.next() {
            Some('+') => 1,
            Some('-') => -1,
            other => {
                return Err(bad(format!(
                    "expected + or - after crossing {crossing}, found {other:?}"
                )))
            }
        };
        passes.push(Pass {
            crossing,
            role,
            sign,
        });
    }
    if passes.is_empty() {
        return Err(bad("empty code"));
    }

    let marked = passes.iter().filter(|p| p.role != PassRole::Flat).count();
    if marked != 0 && marked != passes.len() {
        return Err(bad("passes must be all O/U-marked or all unmarked"));
    }
    let virtual_mode = marked != 0;

    let mut seen: BTreeMap<u32, Vec<&Pass>> = BTreeMap::new();
    for p in &passes {
        seen.entry(p.crossing).or_default().push(p);
    }
    for (c, occ) in &seen {
        if occ.len() != 2 {
            return Err(bad(format!(
                "crossing {c} appears {} time(s), expected 2",
                occ.len()
            )));
        }
        if occ[0].sign != occ[1].sign {
            return Err(bad(format!("crossing {c} has mismatched signs")));
        }
        if virtual_mode && occ[0].role == occ[1].role {
            let r = if occ[0].role == PassRole::Over { "over" } else { "under" };
            return Err(bad(format!("crossing {c} passes {r} twice")));
        }
    }
    let crossings = seen.keys().copied().collect();
    Ok(GaussCode {
        passes,
        crossings,
        virtual_mode,
    })
}

/// The Carter surface of a code, as a ribbon graph: one disk per crossing
/// with its four arc-ends in the cyclic order fixed by the flat sign, bands
/// along the arcs, boundary circles capped off.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RotationSystem {
    vertex_count: usize,
    /// Counterclockwise dart order at each vertex.
    rotations: Vec<Vec<usize>>,
    /// Boundary faces as dart sequences (orbit of sigma after alpha).
    faces: Vec<Vec<usize>>,
    genus: usize,
}

impl RotationSystem {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        2 * self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn genus(&self) -> usize {
        self.genus
    }
}

fn alpha(d: usize) -> usize {
    d ^ 1
}

pub fn carter_surface(code: &GaussCode) -> RotationSystem {
    let n = code.crossing_count();
    let m = 2 * n; // passes and arcs
    let head_at = |pos: usize| 2 * ((pos + m - 1) % m) + 1;
    let tail_at = |pos: usize| 2 * pos;

    let mut rotations = Vec::with_capacity(n);
    for &c in code.crossings() {
        let (p1, p2) = code.positions_of(c);
        let (in1, out1) = (head_at(p1), tail_at(p1));
        let (in2, out2) = (head_at(p2), tail_at(p2));
        rotations.push(if code.sign_of(c) > 0 {
            vec![in1, in2, out1, out2]
        } else {
            vec![in1, out2, out1, in2]
        });
    }

    // next dart counterclockwise at the shared vertex
    let mut sigma = vec![0usize; 2 * m];
    for rot in &rotations {
        for (i, &d) in rot.iter().enumerate() {
            sigma[d] = rot[(i + 1) % rot.len()];
        }
    }

    // faces are the orbits of d -> sigma(alpha(d))
    let mut faces = Vec::new();
    let mut visited = vec![false; 2 * m];
    for start in 0..2 * m {
        if visited[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !visited[d] {
            visited[d] = true;
            face.push(d);
            d = sigma[alpha(d)];
        }
        faces.push(face);
    }

    // V - E + F = 2 - 2g on the connected capped surface
    let chi = n as i64 - m as i64 + faces.len() as i64;
    assert!(chi <= 2 && chi % 2 == 0, "Euler characteristic {chi}");
    let genus = ((2 - chi) / 2) as usize;
    RotationSystem {
        vertex_count: n,
        rotations,
        faces,
        genus,
    }
}

/// First homology of the capped Carter surface with its intersection form.
///
/// Built by contracting a spanning tree to a one-vertex rotation word; the
/// surviving arcs become loops, pairs of loops intersect once per linked
/// occurrence pair in the word, and capping imposes one relation per face.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyForm {
    /// Arc ids of the loops surviving tree contraction, ascending.
    loops: Vec<usize>,
    /// Signed intersection numbers of the loop representatives.
    pairing: Vec<Vec<i64>>,
    /// Row transform diagonalizing the face relations on loop coordinates.
    transform: Vec<Vec<i64>>,
    /// Rows of `transform` carrying the free (homology) coordinates.
    free_rows: Vec<usize>,
    /// Intersection matrix on the homology basis; unimodular of rank 2g.
    intersection: Vec<Vec<i64>>,
}

impl HomologyForm {
    pub fn rank(&self) -> usize {
        self.free_rows.len()
    }

    pub fn intersection_matrix(&self) -> &[Vec<i64>] {
        &self.intersection
    }

    fn to_loops(&self, edge_cycle: &[i64]) -> Vec<i64> {
        // contraction kills the tree arcs, so a cycle class is carried by its
        // loop coefficients alone
        self.loops.iter().map(|&e| edge_cycle[e]).collect()
    }

    /// Homology coordinates of an edge cycle (a vector over all arcs).
    pub fn class_of(&self, edge_cycle: &[i64]) -> Vec<i64> {
        let x = self.to_loops(edge_cycle);
        self.free_rows
            .iter()
            .map(|&r| {
                self.transform[r]
                    .iter()
                    .zip(&x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Intersection number of two edge cycles.
    pub fn pair_cycles(&self, x: &[i64], y: &[i64]) -> i64 {
        let xs = self.to_loops(x);
        let ys = self.to_loops(y);
        let mut total = 0;
        for (i, a) in xs.iter().enumerate() {
            for (j, b) in ys.iter().enumerate() {
                total += a * self.pairing[i][j] * b;
            }
        }
        total
    }

    /// Intersection number in homology coordinates.
    pub fn pair_classes(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut total = 0;
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                total += a * self.intersection[i][j] * b;
            }
        }
        total
    }
}

/// Sign of the chord crossing of loops `e` and `f` inside the one-vertex
/// disk: each loop is a chord from its head-dart position to its tail-dart
/// position, and interleaved chords cross once.
fn chord_sign(len: usize, e_in: usize, e_out: usize, f_in: usize, f_out: usize) -> i64 {
    let r = |p: usize| (p + len - e_in) % len;
    let (a, b, c) = (r(e_out), r(f_in), r(f_out));
    let inside = |x: usize| x > 0 && x < a;
    match (inside(b), inside(c)) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

pub fn homology_form(surface: &RotationSystem) -> HomologyForm {
    let n = surface.vertex_count;
    let m = 2 * n;

    // contract a spanning tree: merge vertex rotations by splicing at the
    // contracted darts until one cyclic word remains
    let mut words: Vec<Vec<usize>> = surface.rotations.clone();
    let mut word_of = vec![0usize; 2 * m];
    for (w, word) in words.iter().enumerate() {
        for &d in word {
            word_of[d] = w;
        }
    }
    while words.len() > 1 {
        let (wa, d) = words
            .iter()
            .enumerate()
            .find_map(|(wa, word)| {
                word.iter()
                    .find(|&&d| word_of[alpha(d)] != wa)
                    .map(|&d| (wa, d))
            })
            .expect("graph of a unicursal component is connected");
        let wb = word_of[alpha(d)];
        let a = &words[wa];
        let b = &words[wb];
        let p = a.iter().position(|&x| x == d).unwrap();
        let q = b.iter().position(|&x| x == alpha(d)).unwrap();
        let mut merged: Vec<usize> = Vec::with_capacity(a.len() + b.len() - 2);
        merged.extend(a.iter().cycle().skip(p + 1).take(a.len() - 1));
        merged.extend(b.iter().cycle().skip(q + 1).take(b.len() - 1));
        let (keep, drop) = (wa.min(wb), wa.max(wb));
        words[keep] = merged;
        words.swap_remove(drop);
        for (w, word) in words.iter().enumerate() {
            for &x in word {
                word_of[x] = w;
            }
        }
    }
    let word = words.pop().unwrap_or_default();

    let mut loops: Vec<usize> = word.iter().map(|&d| d / 2).collect();
    loops.sort_unstable();
    loops.dedup();
    let loop_index: BTreeMap<usize, usize> =
        loops.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let pos = |d: usize| word.iter().position(|&x| x == d).unwrap();
    let ends: Vec<(usize, usize)> = loops
        .iter()
        .map(|&e| (pos(2 * e + 1), pos(2 * e))) // (head/in, tail/out)
        .collect();

    let k = loops.len();
    let mut pairing = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let (ei, eo) = ends[i];
                let (fi, fo) = ends[j];
                pairing[i][j] = chord_sign(word.len(), ei, eo, fi, fo);
            }
        }
    }

    // capping relations: one signed loop vector per boundary face
    let mut relations: Vec<Vec<i64>> = Vec::new();
    for face in &surface.faces {
        let mut v = vec![0i64; k];
        for &d in face {
            if let Some(&i) = loop_index.get(&(d / 2)) {
                v[i] += if d % 2 == 0 { 1 } else { -1 };
            }
        }
        relations.push(v);
    }
    debug_assert!(relations.iter().all(|rel| {
        (0..k).all(|i| (0..k).map(|j| pairing[i][j] * rel[j]).sum::<i64>() == 0)
    }));

    // diagonalize the relation lattice; homology is the free part
    let cols: zint::Mat = (0..k)
        .map(|i| relations.iter().map(|r| BigInt::from(r[i])).collect())
        .collect();
    let snf = zint::smith(&cols, k, relations.len());
    debug_assert!(snf.diag.iter().all(|d| d.is_zero() || d.is_one()));
    let free_rows: Vec<usize> = (0..k)
        .filter(|&i| snf.diag.get(i).is_none_or(|d| d.is_zero()))
        .collect();
    let transform = zint::to_i64(&snf.u);
    let u_inv = zint::to_i64(&snf.u_inv);

    // intersection on the homology basis, via the section row -> u_inv column
    let g2 = free_rows.len();
    let mut intersection = vec![vec![0i64; g2]; g2];
    for (bi, &ri) in free_rows.iter().enumerate() {
        for (bj, &rj) in free_rows.iter().enumerate() {
            let mut total = 0;
            for a in 0..k {
                for b in 0..k {
                    total += u_inv[a][ri] * pairing[a][b] * u_inv[b][rj];
                }
            }
            intersection[bi][bj] = total;
        }
    }
    assert_eq!(g2, 2 * surface.genus, "homology rank disagrees with genus");

    HomologyForm {
        loops,
        pairing,
        transform,
        free_rows,
        intersection,
    }
}

/// The halves of a diagram: for each crossing `c`, the left half runs from
/// the second passage of `c` back to the first, as an edge cycle; `diagram`
/// is the cycle of the whole component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfClasses {
    pub halves: BTreeMap<u32, Vec<i64>>,
    pub diagram: Vec<i64>,
    pub half_coordinates: BTreeMap<u32, Vec<i64>>,
    pub diagram_coordinates: Vec<i64>,
}

pub(crate) fn left_half_cycle(code: &GaussCode, crossing: u32) -> Vec<i64> {
    let m = 2 * code.crossing_count();
    let (first, second) = code.positions_of(crossing);
    // the geometric left half starts at the passage picked out by the local
    // sign; this makes the choice independent of the basepoint
    let (from, to) = if code.sign_of(crossing) > 0 {
        (second, first)
    } else {
        (first, second)
    };
    let mut v = vec![0i64; m];
    let mut k = from;
    while k != to {
        v[k] = 1;
        k = (k + 1) % m;
    }
    v
}

pub fn half_classes(code: &GaussCode, form: &HomologyForm) -> HalfClasses {
    let m = 2 * code.crossing_count();
    let diagram = vec![1i64; m];
    let halves: BTreeMap<u32, Vec<i64>> = code
        .crossings()
        .iter()
        .map(|&c| (c, left_half_cycle(code, c)))
        .collect();
    let half_coordinates = halves
        .iter()
        .map(|(&c, v)| (c, form.class_of(v)))
        .collect();
    let diagram_coordinates = form.class_of(&diagram);
    HalfClasses {
        halves,
        diagram,
        half_coordinates,
        diagram_coordinates,
    }
}

/// The based matrix of a diagram: `b(c, c')` is the intersection number of
/// the left halves, `b(c, s)` the intersection of the left half with the
/// whole diagram, reduced into the requested ring.
pub fn based_matrix_of_diagram(code: &GaussCode, ring: Ring) -> Result<BasedMatrix> {
    let surface = carter_surface(code);
    let form = homology_form(&surface);
    let classes = half_classes(code, &form);

    let mut cycles: Vec<&Vec<i64>> = vec![&classes.diagram];
    let mut labels = vec![Label::S];
    for &c in code.crossings() {
        cycles.push(&classes.halves[&c]);
        labels.push(Label::named(c.to_string()));
    }
    let n = cycles.len();
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            entries[i][j] = ring.normalize(form.pair_cycles(cycles[i], cycles[j]));
        }
    }
    BasedMatrix::new(labels, ring, entries)
}

/// Everything the pipeline computes for one diagram.
#[derive(Clone, Debug)]
pub struct KnotInvariantBundle {
    pub code: GaussCode,
    pub genus: usize,
    pub based_matrix: BasedMatrix,
    pub primitive: BasedMatrix,
    pub trace: ReductionTrace,
    pub stable_partition: Partition,
    pub tribes: TribeTags,
    pub automorphism_count: usize,
    pub parity: ParityAssignment,
    pub report: String,
}

pub fn knot_invariant_bundle(code: &GaussCode, ring: Ring) -> Result<KnotInvariantBundle> {
    let surface = carter_surface(code);
    let based_matrix = based_matrix_of_diagram(code, ring)?;
    let (primitive, trace) = based_matrix.reduce_to_primitive();
    let (partition, _) = stable_partition(&based_matrix);
    let tribes = tag_tribes(&based_matrix);
    let automorphism_count = automorphisms(&primitive).len();
    let parity = reduced_parity(&based_matrix);
    let report = parity_matrix_report(&based_matrix);
    Ok(KnotInvariantBundle {
        code: code.clone(),
        genus: surface.genus(),
        based_matrix,
        primitive,
        trace,
        stable_partition: partition,
        tribes,
        automorphism_count,
        parity,
        report,
    })
}
