use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactnum::{IntPolynomial, Rational};

use super::{LinalgError, SymMatrix};

/// Characteristic polynomial `det(xI − M)` of an integer matrix.
pub fn char_poly(m: &SymMatrix<Rational>) -> Result<IntPolynomial, LinalgError> {
    let n = m.order();
    let mut a = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let v = m.get(i, j);
            if !v.is_integer() {
                return Err(LinalgError::NotInteger(i, j));
            }
            *x = v.numer().clone();
        }
    }
    Ok(faddeev_leverrier(&a))
}

/// Same as [`char_poly`] for a small-integer matrix given by rows.
pub fn char_poly_i64(rows: &[Vec<i64>]) -> IntPolynomial {
    let a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    faddeev_leverrier(&a)
}

/// Faddeev–LeVerrier over ℤ: `M_k = A·M_{k−1} + c_{n−k+1}·I`, `c_{n−k} = −tr(A·M_k)/k`.
/// Every division is exact.
fn faddeev_leverrier(a: &[Vec<BigInt>]) -> IntPolynomial {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !mk[l][j].is_zero() {
                        next[i][j] += &a[i][l] * &mk[l][j];
                    }
                }
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                if !a[i][l].is_zero() {
                    tr += &a[i][l] * &mk[l][i];
                }
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k);
    }
    IntPolynomial::new(coeffs)
}
