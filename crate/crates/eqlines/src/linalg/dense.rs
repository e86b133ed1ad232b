use crate::exactnum::Scalar;

use super::SymMatrix;

/// Row reduction of a general dense matrix; returns the reduced rows and pivot columns.
fn rref<S: Scalar>(mut m: Vec<Vec<S>>) -> (Vec<Vec<S>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].one_like().over(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = x.times(&inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.minus(&f.times(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Exact rank.
pub fn rank<S: Scalar>(m: &SymMatrix<S>) -> usize {
    rref(m.rows()).1.len()
}

/// Basis of the right kernel, one vector per free column.
pub fn kernel_basis<S: Scalar>(m: &SymMatrix<S>) -> Vec<Vec<S>> {
    let n = m.order();
    let like = m.get(0, 0).clone();
    let (red, pivots) = rref(m.rows());
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![like.zero_like(); n];
            v[f] = like.one_like();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = red[row][f].negated();
            }
            v
        })
        .collect()
}

/// Determinant by exact elimination.
pub fn det<S: Scalar>(m: &SymMatrix<S>) -> S {
    let n = m.order();
    let mut a = m.rows();
    let mut acc = m.get(0, 0).one_like();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return acc.zero_like();
        };
        if p != c {
            a.swap(p, c);
            acc = acc.negated();
        }
        acc = acc.times(&a[c][c]);
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].over(&a[c][c]);
            for j in c..n {
                let t = f.times(&a[c][j]);
                a[i][j] = a[i][j].minus(&t);
            }
        }
    }
    acc
}

/// Solves `M x = b` for nonsingular `M`; `None` when `M` is singular.
pub fn solve<S: Scalar>(m: &SymMatrix<S>, b: &[S]) -> Option<Vec<S>> {
    let n = m.order();
    let aug: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut row: Vec<S> = (0..n).map(|j| m.get(i, j).clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(red.into_iter().map(|row| row[n].clone()).collect())
}

/// `vᵀ M w`.
pub fn quadratic_form<S: Scalar>(m: &SymMatrix<S>, v: &[S], w: &[S]) -> S {
    let mw = m.mul_vec(w);
    let mut acc = v[0].zero_like();
    for (x, y) in v.iter().zip(&mw) {
        if !x.is_zero() {
            acc = acc.plus(&x.times(y));
        }
    }
    acc
}
