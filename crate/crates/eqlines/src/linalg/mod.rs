//! Exact symmetric matrices: PSD certificates, Schur complements, rank,
//! characteristic polynomials and the `aI + bJ` closed forms.

mod charpoly;
mod dense;
mod integer;
mod json;
mod psd;

use std::fmt;

use thiserror::Error;

use crate::exactnum::{Field, Scalar};

pub use charpoly::{char_poly, char_poly_i64};
pub use dense::{det, kernel_basis, quadratic_form, rank, solve};
pub use integer::{det_i128, int_rank, int_rank_i64, psd_by_minors_i128};
pub use json::{AnyMatrix, MatrixJson};
pub use psd::{psd_check, schur_complement, PsdCertificate, PsdWitness, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("leading {0}x{0} block is not positive definite")]
    LeadingBlockNotPd(usize),
    #[error("block size {block} out of range for order {order}")]
    BadBlock { block: usize, order: usize },
    #[error("aI + bJ is singular: {0}")]
    Singular(&'static str),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("entry ({0}, {1}) is not an integer")]
    NotInteger(usize, usize),
    #[error("matrix order must be at least 1")]
    Empty,
    #[error("entries live in different fields")]
    MixedFields,
    #[error("{0}")]
    Format(String),
}

/// Dense symmetric matrix over one exact field, stored as its upper triangle.
#[derive(Clone, PartialEq, Debug)]
pub struct SymMatrix<S> {
    order: usize,
    upper: Vec<S>,
}

fn tri_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

impl<S: Scalar> SymMatrix<S> {
    /// Builds the matrix from `f(i, j)` evaluated on `i ≤ j`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(order >= 1, "order must be at least 1");
        let mut upper = Vec::with_capacity(order * (order + 1) / 2);
        for i in 0..order {
            for j in i..order {
                upper.push(f(i, j));
            }
        }
        SymMatrix { order, upper }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        if n == 0 {
            return Err(LinalgError::Empty);
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(LinalgError::Format(format!("row {i} has length {} (expected {n})", r.len())));
            }
        }
        let field = rows[0][0].field();
        for i in 0..n {
            for j in 0..n {
                if rows[i][j].field() != field {
                    return Err(LinalgError::MixedFields);
                }
                if j > i && rows[i][j] != rows[j][i] {
                    return Err(LinalgError::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix::from_fn(n, |i, j| rows[i][j].clone()))
    }

    pub fn identity(order: usize, like: &S) -> Self {
        SymMatrix::scalar_ij(order, &like.one_like(), &like.zero_like())
    }

    pub fn all_ones(order: usize, like: &S) -> Self {
        SymMatrix::scalar_ij(order, &like.zero_like(), &like.one_like())
    }

    /// `aI + bJ`.
    pub fn scalar_ij(order: usize, a: &S, b: &S) -> Self {
        let diag = a.plus(b);
        SymMatrix::from_fn(order, |i, j| if i == j { diag.clone() } else { b.clone() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn field(&self) -> Field {
        self.upper[0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.upper[tri_index(self.order, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        let k = tri_index(self.order, i, j);
        self.upper[k] = v;
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        SymMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SymMatrix<T> {
        SymMatrix { order: self.order, upper: self.upper.iter().map(f).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order);
        SymMatrix { order: self.order, upper: self.upper.iter().zip(&o.upper).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        SymMatrix { order: self.order, upper: self.upper.iter().map(|a| a.times(c)).collect() }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        (0..self.order)
            .map(|i| {
                let mut acc = v[0].zero_like();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = acc.plus(&self.get(i, j).times(x));
                    }
                }
                acc
            })
            .collect()
    }
}

impl<S: Scalar> fmt::Display for SymMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Inverse of `aI + bJ` (order `k`) in the same form: returns `(a', b')`.
///
/// `(aI + bJ)⁻¹ = (1/a)·I − b/(a(a + kb))·J`.
#[allow(non_snake_case)]
pub fn aI_bJ_inverse<S: Scalar>(a: &S, b: &S, k: usize) -> Result<(S, S), LinalgError> {
    if a.is_zero() {
        return Err(LinalgError::Singular("a = 0"));
    }
    let akb = a.plus(&b.times(&a.from_int_like(k as i64)));
    if akb.is_zero() {
        return Err(LinalgError::Singular("a + k*b = 0"));
    }
    let ia = a.one_like().over(a);
    let ib = b.negated().over(&a.times(&akb));
    Ok((ia, ib))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn abj_inverse_examples() {
        assert_eq!(aI_bJ_inverse(&r(1, 1), &r(0, 1), 7).unwrap(), (r(1, 1), r(0, 1)));
        // (1+α)I − αJ at α = 1/5
        assert_eq!(aI_bJ_inverse(&r(6, 5), &r(-1, 5), 3).unwrap(), (r(5, 6), r(5, 18)));
        assert_eq!(aI_bJ_inverse(&r(6, 5), &r(-1, 5), 2).unwrap(), (r(5, 6), r(5, 24)));
        for n in 1..12 {
            let (a, b) = aI_bJ_inverse(&r(9, 10), &r(1, 10), n).unwrap();
            assert_eq!(a, r(10, 9));
            assert_eq!(b, r(-10, 9 * (9 + n as i64)));
        }
        assert!(aI_bJ_inverse(&r(0, 1), &r(1, 1), 3).is_err());
        assert_eq!(aI_bJ_inverse(&r(1, 1), &r(-1, 3), 3), Err(LinalgError::Singular("a + k*b = 0")));
    }

    #[test]
    fn abj_inverse_multiplies_back() {
        for k in 1..8usize {
            for (a, b) in [(r(6, 5), r(-1, 5)), (r(8, 7), r(-1, 7)), (r(3, 2), r(2, 3))] {
                let Ok((ia, ib)) = aI_bJ_inverse(&a, &b, k) else {
                    assert!((&a + &(&b * &r(k as i64, 1))).is_zero());
                    continue;
                };
                let m = SymMatrix::scalar_ij(k, &a, &b);
                let inv = SymMatrix::scalar_ij(k, &ia, &ib);
                for i in 0..k {
                    let col: Vec<Rational> = (0..k).map(|j| inv.get(j, i).clone()).collect();
                    let prod = m.mul_vec(&col);
                    for (j, v) in prod.iter().enumerate() {
                        assert_eq!(*v, if i == j { r(1, 1) } else { r(0, 1) });
                    }
                }
            }
        }
    }
}
