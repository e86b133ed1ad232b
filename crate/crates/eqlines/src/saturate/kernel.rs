//! Integer adjugate data for a seed's Gram matrix, so that every candidate and
//! compatibility test is a small integer quadratic form.
//!
//! Rational `α = p/q`: `H = qI + pA = q·G` has integer entries and `G⁻¹ = q·adj(H)/det(H)`.
//! A sign vector `ε` gives a unit vector iff `p²·εᵀadj(H)ε = q·det(H)`, and two of them have
//! inner product `±α` iff `p·εᵀadj(H)ε' = ±det(H)`.
//!
//! `α = 1/√D`: `H = √D·I + A = √D·G` lives in `ℤ[√D]`, the unit condition is
//! `εᵀadj(H)ε = √D·det(H)` and compatibility is `εᵀadj(H)ε' = ±det(H)`.

use num_traits::ToPrimitive;

use crate::exactnum::{ExactScalar, QuadExt, Rational, Scalar};
use crate::seidel::SeidelMatrix;

/// `a + b√D` with machine integers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ZSqrt {
    pub a: i128,
    pub b: i128,
}

impl ZSqrt {
    fn add(self, o: ZSqrt) -> ZSqrt {
        ZSqrt { a: self.a + o.a, b: self.b + o.b }
    }
    fn neg(self) -> ZSqrt {
        ZSqrt { a: -self.a, b: -self.b }
    }
    fn times_sqrt(self, d: i128) -> ZSqrt {
        ZSqrt { a: self.b * d, b: self.a }
    }
    fn sub(self, o: ZSqrt) -> ZSqrt {
        ZSqrt { a: self.a - o.a, b: self.b - o.b }
    }
    fn mul(self, o: ZSqrt, d: i128) -> ZSqrt {
        ZSqrt { a: self.a * o.a + d * self.b * o.b, b: self.a * o.b + self.b * o.a }
    }
    /// Exact quotient; panics if `o` does not divide `self` in `ℤ[√d]`.
    fn div_exact(self, o: ZSqrt, d: i128) -> ZSqrt {
        let norm = o.a * o.a - d * o.b * o.b;
        let num = self.mul(ZSqrt { a: o.a, b: -o.b }, d);
        assert!(num.a % norm == 0 && num.b % norm == 0, "inexact division in Z[sqrt {d}]");
        ZSqrt { a: num.a / norm, b: num.b / norm }
    }
    fn sign(self, d: i128) -> i32 {
        let sa = self.a.signum() as i32;
        let sb = self.b.signum() as i32;
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a² with d·b²
        match (self.a * self.a).cmp(&(d * self.b * self.b)) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Kernel {
    Rational { p: i128, q: i128, det: i128, adj: Vec<i128>, n: usize },
    Sqrt { d: i128, det: ZSqrt, adj: Vec<ZSqrt>, n: usize },
}

/// Fraction-free Gauss–Jordan (Montante) on `[H | I]`, without pivoting.
///
/// Returns `None` as soon as a leading principal minor is not positive, i.e. exactly
/// when `H` is not positive definite. Otherwise returns `(det H, adj H)` row-major.
pub fn montante_pd(h: &[Vec<i128>]) -> Option<(i128, Vec<i128>)> {
    let n = h.len();
    let w = 2 * n;
    let mut a: Vec<Vec<i128>> = h
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| i128::from(i == j)));
            row
        })
        .collect();
    let mut prev = 1i128;
    for k in 0..n {
        let piv = a[k][k];
        // after k steps the pivot is the k-th leading principal minor
        if piv <= 0 {
            return None;
        }
        let pivot_row = a[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let f = row[k];
            for j in 0..w {
                if j != k {
                    row[j] = (piv * row[j] - f * pivot_row[j]) / prev;
                }
            }
            row[k] = 0;
        }
        prev = piv;
    }
    let adj = a.iter().flat_map(|r| r[n..].iter().copied()).collect();
    Some((prev, adj))
}

/// [`montante_pd`] over `ℤ[√d]`.
pub fn montante_pd_sqrt(h: &[Vec<ZSqrt>], d: i128) -> Option<(ZSqrt, Vec<ZSqrt>)> {
    let n = h.len();
    let zero = ZSqrt { a: 0, b: 0 };
    let one = ZSqrt { a: 1, b: 0 };
    let mut a: Vec<Vec<ZSqrt>> = h
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { one } else { zero }));
            row
        })
        .collect();
    let mut prev = one;
    for k in 0..n {
        let piv = a[k][k];
        if piv.sign(d) <= 0 {
            return None;
        }
        let pivot_row = a[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let f = row[k];
            for j in 0..2 * n {
                if j != k {
                    row[j] = piv.mul(row[j], d).sub(f.mul(pivot_row[j], d)).div_exact(prev, d);
                }
            }
            row[k] = zero;
        }
        prev = piv;
    }
    let adj = a.iter().flat_map(|r| r[n..].iter().copied()).collect();
    Some((prev, adj))
}

/// `1/√D` when `alpha` has that exact form.
pub fn inverse_sqrt_radicand(alpha: &QuadExt) -> Option<u64> {
    let d = alpha.d();
    (alpha.a.is_zero() && alpha.b == Rational::new(1, d as i64)).then_some(d)
}

impl Kernel {
    /// `None` when the Gram matrix `I + αA` is not positive definite.
    /// Angles must be rational or of the form `1/√D`.
    pub fn build(seidel: &SeidelMatrix, alpha: &ExactScalar) -> Option<Kernel> {
        let n = seidel.order();
        match alpha {
            ExactScalar::Q(a) => {
                let p = a.numer().to_i128().expect("small numerator");
                let q = a.denom().to_i128().expect("small denominator");
                let h: Vec<Vec<i128>> =
                    (0..n).map(|i| (0..n).map(|j| if i == j { q } else { p * seidel.get(i, j) as i128 }).collect()).collect();
                let (det, adj) = montante_pd(&h)?;
                Some(Kernel::Rational { p, q, det, adj, n })
            }
            ExactScalar::Quad(a) => {
                let d = inverse_sqrt_radicand(a).expect("irrational angles must be 1/sqrt(D)") as i128;
                let h: Vec<Vec<ZSqrt>> = (0..n)
                    .map(|i| (0..n).map(|j| if i == j { ZSqrt { a: 0, b: 1 } } else { ZSqrt { a: seidel.get(i, j) as i128, b: 0 } }).collect())
                    .collect();
                let (det, adj) = montante_pd_sqrt(&h, d)?;
                Some(Kernel::Sqrt { d, det, adj, n })
            }
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Kernel::Rational { n, .. } | Kernel::Sqrt { n, .. } => *n,
        }
    }

    fn form_rational(adj: &[i128], n: usize, x: &[i8], y: &[i8]) -> i128 {
        let mut acc = 0i128;
        for i in 0..n {
            let mut row = 0i128;
            for j in 0..n {
                row += adj[i * n + j] * y[j] as i128;
            }
            acc += x[i] as i128 * row;
        }
        acc
    }

    fn form_sqrt(adj: &[ZSqrt], n: usize, x: &[i8], y: &[i8]) -> ZSqrt {
        let mut acc = ZSqrt { a: 0, b: 0 };
        for i in 0..n {
            for j in 0..n {
                let v = adj[i * n + j];
                acc = acc.add(if x[i] * y[j] > 0 { v } else { v.neg() });
            }
        }
        acc
    }

    /// Whether the vector with inner products `α·ε` against the basis is a unit vector.
    pub fn is_unit(&self, eps: &[i8]) -> bool {
        match self {
            Kernel::Rational { p, q, det, adj, n } => p * p * Self::form_rational(adj, *n, eps, eps) == q * det,
            Kernel::Sqrt { d, det, adj, n } => Self::form_sqrt(adj, *n, eps, eps) == det.times_sqrt(*d),
        }
    }

    /// `+1` / `−1` when the two candidate vectors have inner product `±α`, `0` otherwise.
    pub fn compatibility(&self, x: &[i8], y: &[i8]) -> i8 {
        match self {
            Kernel::Rational { p, det, adj, n, .. } => {
                let v = p * Self::form_rational(adj, *n, x, y);
                if v == *det {
                    1
                } else if v == -det {
                    -1
                } else {
                    0
                }
            }
            Kernel::Sqrt { det, adj, n, .. } => {
                let v = Self::form_sqrt(adj, *n, x, y);
                if v == *det {
                    1
                } else if v == det.neg() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Exact inner product `α²·εᵀG⁻¹ε'` of two candidate vectors.
    pub fn inner_product(&self, x: &[i8], y: &[i8]) -> ExactScalar {
        match self {
            Kernel::Rational { p, q, det, adj, n } => {
                let num = p * p * Self::form_rational(adj, *n, x, y);
                ExactScalar::Q(Rational::from_big((num).into(), (q * det).into()))
            }
            Kernel::Sqrt { d, det, adj, n } => {
                // Q / (√D·det)
                let qv = Self::form_sqrt(adj, *n, x, y);
                let dq = *d as u64;
                let num = QuadExt::new(Rational::from_big(qv.a.into(), 1.into()), Rational::from_big(qv.b.into(), 1.into()), dq).expect("d");
                let den = QuadExt::new(Rational::from_big(det.a.into(), 1.into()), Rational::from_big(det.b.into(), 1.into()), dq)
                    .expect("d")
                    .times(&QuadExt::sqrt_d(dq).expect("d"));
                ExactScalar::Quad(num.over(&den))
            }
        }
    }

    /// Coordinates `α·G⁻¹ε` in the basis.
    pub fn coords(&self, eps: &[i8]) -> Vec<ExactScalar> {
        match self {
            Kernel::Rational { p, det, adj, n, .. } => (0..*n)
                .map(|i| {
                    let s: i128 = (0..*n).map(|j| adj[i * n + j] * eps[j] as i128).sum();
                    ExactScalar::Q(Rational::from_big((p * s).into(), (*det).into()))
                })
                .collect(),
            Kernel::Sqrt { d, det, adj, n } => {
                let dq = *d as u64;
                let den = QuadExt::new(Rational::from_big(det.a.into(), 1.into()), Rational::from_big(det.b.into(), 1.into()), dq).expect("d");
                (0..*n)
                    .map(|i| {
                        let s = (0..*n).fold(ZSqrt { a: 0, b: 0 }, |acc, j| {
                            let v = adj[i * n + j];
                            acc.add(if eps[j] > 0 { v } else { v.neg() })
                        });
                        let num = QuadExt::new(Rational::from_big(s.a.into(), 1.into()), Rational::from_big(s.b.into(), 1.into()), dq).expect("d");
                        ExactScalar::Quad(num.over(&den))
                    })
                    .collect()
            }
        }
    }
}
