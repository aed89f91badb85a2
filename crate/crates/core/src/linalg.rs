//! Exact Gaussian elimination over Q(i, sqrt 2). Pivots are the first nonzero
//! entry in row order, so reduced forms and kernel bases are reproducible.

use crate::scalar::Scalar;

/// Row-reduces `rows` in place to reduced echelon form and returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *x -= &(&f * pv);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// A basis of `{x : A x = 0}` for `A` given by rows of length `ncols`.
pub fn kernel(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Scalar::zero(); ncols];
            x[f] = Scalar::one();
            for (row, &p) in m.iter().zip(&pivots) {
                x[p] = -&row[f];
            }
            x
        })
        .collect()
}

/// Whether `v` lies in the span of `basis` (all of the same length).
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    let n = v.len();
    let r = rank(basis, n);
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(&with, n) == r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn kernel_of_rank_one() {
        let rows = vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)]];
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            let dot: Scalar = rows[0].iter().zip(x).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn span_with_irrational_entries() {
        let r2 = Scalar::sqrt2();
        let i = Scalar::i();
        let basis = vec![vec![s(1), r2.clone()], vec![i.clone(), s(0)]];
        assert!(in_span(&basis, &[s(5), s(7)]));
        let line = vec![vec![s(1), r2.clone()]];
        assert!(in_span(&line, &[r2.clone(), s(2)]));
        assert!(!in_span(&line, &[s(1), s(1)]));
    }

    #[test]
    fn empty_kernel() {
        assert!(kernel(&[vec![s(1), s(0)], vec![s(0), s(1)]], 2).is_empty());
        assert_eq!(kernel(&[], 2).len(), 2);
    }
}
