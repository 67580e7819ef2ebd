//! Linear algebra over the field with two elements. Vectors are `Vec<i64>`
//! with entries 0/1 so that callers share one representation with the
//! integer lane.

/// Reduced row echelon form. Returns the nonzero rows (sorted by pivot
/// column) and their pivot columns.
pub fn rref(rows: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<usize>) {
    let mut work: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(2)).collect())
        .collect();
    let cols = work.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..work.len()).find(|&i| work[i][c] == 1) else {
            continue;
        };
        work.swap(rank, p);
        let pivot_row = work[rank].clone();
        for (i, row) in work.iter_mut().enumerate() {
            if i != rank && row[c] == 1 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a = (*a + b) % 2;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    work.truncate(rank);
    (work, pivots)
}

/// Reduce `v` modulo the row space of an rref basis; returns the remainder.
pub fn reduce(basis: &[Vec<i64>], pivots: &[usize], v: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = v.iter().map(|&x| x.rem_euclid(2)).collect();
    for (row, &p) in basis.iter().zip(pivots) {
        if out[p] == 1 {
            for (a, b) in out.iter_mut().zip(row) {
                *a = (*a + b) % 2;
            }
        }
    }
    out
}

pub fn contains(basis: &[Vec<i64>], pivots: &[usize], v: &[i64]) -> bool {
    reduce(basis, pivots, v).iter().all(|&x| x == 0)
}

/// Basis of the right kernel `{x : A x = 0}` of `a` (rows x cols).
pub fn kernel(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let (r, pivots) = rref(a);
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0i64; cols];
        v[free] = 1;
        for (row, &p) in r.iter().zip(&pivots) {
            if row[free] == 1 {
                v[p] = 1;
            }
        }
        basis.push(v);
    }
    basis
}

/// Basis of the left kernel `{x : x A = 0}` of `a` (rows x cols).
pub fn left_kernel(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let transposed: Vec<Vec<i64>> = (0..cols)
        .map(|c| (0..rows).map(|r| a[r][c]).collect())
        .collect();
    kernel(&transposed, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_solves() {
        let a = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let k = kernel(&a, 3);
        assert_eq!(k, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn rref_and_membership() {
        // the worked-example annulator generators
        let gens = vec![
            vec![1, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 1, 0],
        ];
        let (b, p) = rref(&gens);
        assert_eq!(p, vec![0, 2, 3, 4, 5]);
        assert!(contains(&b, &p, &[0, 0, 0, 0, 0, 1, 1, 0]));
        assert!(!contains(&b, &p, &[1, 0, 0, 0, 0, 0, 0, 0]));
        // e1 reduces to e2 (free coordinates 1, 6, 7)
        assert_eq!(
            reduce(&b, &p, &[1, 0, 0, 0, 0, 0, 0, 0]),
            vec![0, 1, 0, 0, 0, 0, 0, 0]
        );
    }
}
