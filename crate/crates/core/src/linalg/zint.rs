//! Integer matrix normal forms with arbitrary-precision entries: row-style
//! Hermite normal form with transform, integer kernels, and Smith normal form
//! with row transforms tracked both ways.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type Mat = Vec<Vec<BigInt>>;

pub fn from_i64(rows: &[Vec<i64>]) -> Mat {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

pub fn to_i64(m: &Mat) -> Vec<Vec<i64>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|v| i64::try_from(v).expect("entry exceeds i64"))
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Row-style Hermite normal form. Returns `(h, u)` with `u * a = h`, `u`
/// unimodular, pivots positive, entries above each pivot reduced to
/// `[0, pivot)`. Zero rows of `h` sink to the bottom.
pub fn row_hnf(a: &Mat) -> (Mat, Mat) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut h = a.clone();
    let mut u = identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // gcd elimination below position r in column c
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !h[i][c].is_zero()
                    && best.is_none_or(|b| h[i][c].abs() < h[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in (r + 1)..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = div_round(&h[i][c], &h[r][c]);
                row_sub(&mut h, i, r, &q);
                row_sub(&mut u, i, r, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            row_neg(&mut h, r);
            row_neg(&mut u, r);
        }
        // reduce entries above the pivot into [0, pivot)
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                row_sub(&mut h, i, r, &q);
                row_sub(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // quotient minimizing |a - q b|
    let q = a.div_floor(b);
    let r = a - &q * b;
    if &r * 2 > b.abs() {
        q + 1
    } else {
        q
    }
}

fn row_sub(m: &mut Mat, i: usize, j: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let row_j = m[j].clone();
    for (a, b) in m[i].iter_mut().zip(&row_j) {
        *a -= q * b;
    }
}

fn row_neg(m: &mut Mat, i: usize) {
    for a in m[i].iter_mut() {
        *a = -a.clone();
    }
}

/// Canonical HNF basis of the lattice spanned by `rows` (zero rows dropped).
pub fn hnf_basis(rows: &Mat) -> Mat {
    if rows.is_empty() {
        return Vec::new();
    }
    let (h, _) = row_hnf(rows);
    h.into_iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect()
}

/// Pivot column of each HNF basis row.
pub fn hnf_pivots(basis: &Mat) -> Vec<usize> {
    basis
        .iter()
        .map(|r| r.iter().position(|v| !v.is_zero()).expect("nonzero row"))
        .collect()
}

/// Whether `v` lies in the lattice spanned by an HNF `basis`.
pub fn lattice_contains(basis: &Mat, v: &[BigInt]) -> bool {
    let mut rem: Vec<BigInt> = v.to_vec();
    for row in basis {
        let p = row.iter().position(|x| !x.is_zero()).unwrap();
        if rem[p].is_zero() {
            continue;
        }
        let (q, r) = rem[p].div_rem(&row[p]);
        if !r.is_zero() {
            return false;
        }
        for (a, b) in rem.iter_mut().zip(row) {
            *a -= &q * b;
        }
    }
    rem.iter().all(|x| x.is_zero())
}

/// Basis (in HNF) of the left kernel `{x : x a = 0}` of `a`.
pub fn left_kernel(a: &Mat) -> Mat {
    let (h, u) = row_hnf(a);
    let gens: Mat = h
        .iter()
        .zip(&u)
        .filter(|(hr, _)| hr.iter().all(|v| v.is_zero()))
        .map(|(_, ur)| ur.clone())
        .collect();
    hnf_basis(&gens)
}

pub fn rank(a: &Mat) -> usize {
    if a.is_empty() {
        return 0;
    }
    let (h, _) = row_hnf(a);
    h.iter().filter(|r| r.iter().any(|v| !v.is_zero())).count()
}

/// Smith normal form data for `a` (n x m): `diag` holds the diagonal of
/// `S = U A V` (nonnegative, divisibility chain), with `u` and its inverse
/// tracked; column transforms are not needed by callers and are dropped.
pub struct Snf {
    pub diag: Vec<BigInt>,
    pub u: Mat,
    pub u_inv: Mat,
}

pub fn smith(a: &Mat, rows: usize, cols: usize) -> Snf {
    let mut s: Mat = if a.is_empty() {
        vec![vec![BigInt::zero(); cols]; rows]
    } else {
        a.clone()
    };
    debug_assert_eq!(s.len(), rows);
    let mut u = identity(rows);
    // u_inv is maintained so that u * u_inv = I: every row operation on u is
    // mirrored by the inverse column operation on u_inv.
    let mut u_inv = identity(rows);
    let n = rows.min(cols);

    let mut t = 0;
    while t < n {
        // find a nonzero entry in the remaining block
        let mut pivot = None;
        'outer: for i in t..rows {
            for j in t..cols {
                if !s[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut s, &mut u, &mut u_inv, t, pi);
        swap_cols(&mut s, t, pj);

        loop {
            // clear column t
            let mut changed = false;
            for i in (t + 1)..rows {
                if s[i][t].is_zero() {
                    continue;
                }
                if (&s[i][t] % &s[t][t]).is_zero() {
                    let q = &s[i][t] / &s[t][t];
                    sub_row(&mut s, &mut u, &mut u_inv, i, t, &q);
                } else {
                    // gcd step: bring the smaller remainder into the pivot
                    let q = div_round(&s[i][t], &s[t][t]);
                    sub_row(&mut s, &mut u, &mut u_inv, i, t, &q);
                    swap_rows(&mut s, &mut u, &mut u_inv, t, i);
                    changed = true;
                }
            }
            // clear row t
            for j in (t + 1)..cols {
                if s[t][j].is_zero() {
                    continue;
                }
                if (&s[t][j] % &s[t][t]).is_zero() {
                    let q = &s[t][j] / &s[t][t];
                    sub_col(&mut s, t, j, &q);
                } else {
                    let q = div_round(&s[t][j], &s[t][t]);
                    sub_col(&mut s, t, j, &q);
                    swap_cols(&mut s, t, j);
                    changed = true;
                }
            }
            let col_clear = ((t + 1)..rows).all(|i| s[i][t].is_zero());
            let row_clear = ((t + 1)..cols).all(|j| s[t][j].is_zero());
            if !changed && col_clear && row_clear {
                break;
            }
        }
        if s[t][t].is_negative() {
            neg_row(&mut s, &mut u, &mut u_inv, t);
        }
        t += 1;
    }

    // enforce the divisibility chain d_i | d_{i+1}
    let mut fixed = false;
    while !fixed {
        fixed = true;
        for i in 0..n.saturating_sub(1) {
            let (a, b) = (s[i][i].clone(), s[i + 1][i + 1].clone());
            if a.is_zero() || b.is_zero() || (&b % &a).is_zero() {
                // zeros sink naturally: a == 0 && b != 0 needs a swap
                if a.is_zero() && !b.is_zero() {
                    swap_rows(&mut s, &mut u, &mut u_inv, i, i + 1);
                    swap_cols(&mut s, i, i + 1);
                    fixed = false;
                }
                continue;
            }
            // replace (a, b) by (gcd, lcm) via a 2x2 Smith step:
            // add column i+1 to column i, then re-eliminate the 2x2 block
            add_col(&mut s, i, i + 1);
            loop {
                if s[i + 1][i].is_zero() {
                    break;
                }
                if (&s[i + 1][i] % &s[i][i]).is_zero() {
                    let q = &s[i + 1][i] / &s[i][i];
                    sub_row(&mut s, &mut u, &mut u_inv, i + 1, i, &q);
                } else {
                    let q = div_round(&s[i + 1][i], &s[i][i]);
                    sub_row(&mut s, &mut u, &mut u_inv, i + 1, i, &q);
                    swap_rows(&mut s, &mut u, &mut u_inv, i, i + 1);
                }
            }
            // clear the off-diagonal entry in row i
            if !s[i][i + 1].is_zero() {
                let q = &s[i][i + 1] / &s[i][i];
                debug_assert!((&s[i][i + 1] % &s[i][i]).is_zero());
                sub_col(&mut s, i, i + 1, &q);
            }
            if s[i][i].is_negative() {
                neg_row(&mut s, &mut u, &mut u_inv, i);
            }
            if s[i + 1][i + 1].is_negative() {
                neg_row(&mut s, &mut u, &mut u_inv, i + 1);
            }
            fixed = false;
        }
    }

    let diag = (0..n).map(|i| s[i][i].clone()).collect();
    Snf { diag, u, u_inv }
}

fn swap_rows(s: &mut Mat, u: &mut Mat, u_inv: &mut Mat, i: usize, j: usize) {
    if i == j {
        return;
    }
    s.swap(i, j);
    u.swap(i, j);
    for row in u_inv.iter_mut() {
        row.swap(i, j);
    }
}

fn sub_row(s: &mut Mat, u: &mut Mat, u_inv: &mut Mat, i: usize, j: usize, q: &BigInt) {
    row_sub(s, i, j, q);
    row_sub(u, i, j, q);
    // inverse: column j += q * column i
    for row in u_inv.iter_mut() {
        let add = q * &row[i];
        row[j] += add;
    }
}

fn neg_row(s: &mut Mat, u: &mut Mat, u_inv: &mut Mat, i: usize) {
    row_neg(s, i);
    row_neg(u, i);
    for row in u_inv.iter_mut() {
        row[i] = -row[i].clone();
    }
}

fn swap_cols(s: &mut Mat, i: usize, j: usize) {
    for row in s.iter_mut() {
        row.swap(i, j);
    }
}

fn sub_col(s: &mut Mat, i: usize, j: usize, q: &BigInt) {
    // column j -= q * column i
    for row in s.iter_mut() {
        let sub = q * &row[i];
        row[j] -= sub;
    }
}

fn add_col(s: &mut Mat, dst: usize, src: usize) {
    for row in s.iter_mut() {
        let add = row[src].clone();
        row[dst] += add;
    }
}

pub fn mat_vec(m: &Mat, v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
