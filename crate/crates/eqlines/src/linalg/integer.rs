use num_bigint::BigInt;
use num_traits::Zero;

use crate::par;

/// Exact rank of an integer matrix (any shape) by fraction-free Bareiss elimination.
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot_row = a[r].clone();
        let piv = pivot_row[c].clone();
        let tail: Vec<Vec<BigInt>> = a.split_off(r + 1);
        // a_ij ← (piv·a_ij − a_ic·p_j) / prev, exact by Sylvester's identity
        let updated = par::map(&tail, |row| {
            let f = &row[c];
            let mut out = row.clone();
            for j in c..n {
                let v = &piv * &row[j] - f * &pivot_row[j];
                out[j] = v / &prev;
            }
            out
        });
        a.extend(updated);
        prev = piv;
        r += 1;
    }
    r
}

pub fn int_rank_i64(rows: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    int_rank(&big)
}

/// Determinant of a small square `i128` matrix by Bareiss elimination.
///
/// Intermediate values are minors of the input, so this is exact as long as
/// every minor fits in an `i128`.
pub fn det_i128(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut prev = 1i128;
    let mut sign = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Whether a small symmetric integer matrix is PSD, by checking that every principal minor is
/// nonnegative (`2ⁿ − 1` determinants).
pub fn psd_by_minors_i128(rows: &[Vec<i128>]) -> bool {
    let n = rows.len();
    assert!(n < 16, "principal-minor test is for small matrices");
    (1u32..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<i128>> = idx.iter().map(|&i| idx.iter().map(|&j| rows[i][j]).collect()).collect();
        det_i128(&sub) >= 0
    })
}
