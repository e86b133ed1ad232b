//! Paley conference matrices and the equiangular tight frames they give.

use serde::Serialize;

use super::ConstructionError;
use crate::exactnum::{ExactScalar, QuadExt, Rational};
use crate::seidel::{EquiangularSet, SeidelMatrix};

/// Symmetric, zero diagonal, ±1 elsewhere, `B² = (order − 1)·I`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConferenceMatrix {
    pub order: usize,
    pub entries: Vec<Vec<i64>>,
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Legendre symbol `(a/q)` for an odd prime `q`.
fn legendre(a: i64, q: i64) -> i64 {
    let a = a.rem_euclid(q);
    if a == 0 {
        return 0;
    }
    let mut r = 1i64;
    let (mut b, mut e) = (a, (q - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

impl ConferenceMatrix {
    /// Validates shape, symmetry, entries and `B² = (order − 1)·I`.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, ConstructionError> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(ConstructionError::NotConference(format!("row {i} has length {}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                let ok = if i == j { x == 0 } else { x == 1 || x == -1 };
                if !ok || entries[j][i] != x {
                    return Err(ConstructionError::NotConference(format!("bad entry at ({i}, {j})")));
                }
            }
        }
        let c = ConferenceMatrix { order: n, entries };
        if !c.squares_to_scalar() {
            return Err(ConstructionError::NotConference("B^2 is not (order - 1) I".into()));
        }
        Ok(c)
    }

    pub fn square(&self) -> Vec<Vec<i64>> {
        let n = self.order;
        let b = &self.entries;
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| b[i][k] * b[k][j]).sum()).collect()).collect()
    }

    pub fn squares_to_scalar(&self) -> bool {
        let q = self.order as i64 - 1;
        self.square().iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == if i == j { q } else { 0 }))
    }
}

/// Order `q + 1` matrix: a bordering row of ones and `χ(i − j)` on the residues mod `q`.
pub fn paley_conference(q: u64) -> Result<ConferenceMatrix, ConstructionError> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(ConstructionError::BadPaley(q));
    }
    let n = q as usize + 1;
    let qi = q as i64;
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i, j) {
                    _ if i == j => 0,
                    (0, _) | (_, 0) => 1,
                    _ => legendre(i as i64 - j as i64, qi),
                })
                .collect()
        })
        .collect();
    ConferenceMatrix::new(entries)
}

/// `1/√m` as an exact scalar, rational when `m` is a square.
pub fn inv_sqrt(m: u64) -> ExactScalar {
    let (mut f, mut d) = (1u64, m);
    let mut p = 2;
    while p * p <= d {
        while d % (p * p) == 0 {
            d /= p * p;
            f *= p;
        }
        p += 1;
    }
    if d == 1 {
        ExactScalar::Q(Rational::new(1, f as i64))
    } else {
        // 1/(f√d) = √d/(f·d)
        ExactScalar::Quad(QuadExt::new(Rational::zero(), Rational::new(1, (f * d) as i64), d).expect("square-free part"))
    }
}

/// Lines with Gram matrix `I − B/√(order − 1)`: Seidel matrix `−B`.
pub fn conference_etf(c: &ConferenceMatrix) -> Result<EquiangularSet, ConstructionError> {
    let neg: Vec<Vec<i64>> = c.entries.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let seidel = SeidelMatrix::from_rows(&neg).map_err(|e| ConstructionError::NotConference(e.to_string()))?;
    Ok(EquiangularSet::new(inv_sqrt(c.order as u64 - 1), seidel)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_q() {
        for q in [3, 7, 9, 15, 21] {
            assert!(paley_conference(q).is_err(), "q = {q}");
        }
        assert!(paley_conference(13).is_ok());
    }

    #[test]
    fn inv_sqrt_forms() {
        assert_eq!(inv_sqrt(9), ExactScalar::Q(Rational::new(1, 3)));
        assert_eq!(inv_sqrt(17).to_string(), ExactScalar::Quad(QuadExt::inv_sqrt(17).unwrap()).to_string());
        assert_eq!(inv_sqrt(8).square(), ExactScalar::Q(Rational::new(1, 8)));
    }
}
