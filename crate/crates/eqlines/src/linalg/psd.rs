use serde::Serialize;

use crate::exactnum::Scalar;

use super::{rank, solve, LinalgError, SymMatrix};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    PositiveDefinite,
    PositiveSemidefiniteSingular,
    Indefinite,
}

impl Verdict {
    pub fn is_psd(self) -> bool {
        self != Verdict::Indefinite
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PsdWitness<S> {
    /// `(row, pivot)` in elimination order; every pivot is positive.
    Pivots(Vec<(usize, S)>),
    /// `v` with `vᵀMv < 0`.
    NegativeVector(Vec<S>),
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct PsdCertificate<S> {
    pub verdict: Verdict,
    pub rank: usize,
    pub witness: PsdWitness<S>,
}

struct Elimination<S> {
    w: Vec<Vec<S>>,
    active: Vec<bool>,
    pivots: Vec<(usize, S)>,
}

impl<S: Scalar> Elimination<S> {
    fn new(m: &SymMatrix<S>) -> Self {
        Elimination { w: m.rows(), active: vec![true; m.order()], pivots: Vec::new() }
    }

    fn eliminate(&mut self, p: usize) {
        let n = self.w.len();
        let piv = self.w[p][p].clone();
        let inv = piv.one_like().over(&piv);
        self.active[p] = false;
        let live: Vec<usize> = (0..n).filter(|&i| self.active[i]).collect();
        let prow = self.w[p].clone();
        for &i in &live {
            if prow[i].is_zero() {
                continue;
            }
            let f = prow[i].times(&inv);
            for &j in live.iter().filter(|&&j| j >= i) {
                if prow[j].is_zero() {
                    continue;
                }
                let v = self.w[i][j].minus(&f.times(&prow[j]));
                self.w[j][i] = v.clone();
                self.w[i][j] = v;
            }
        }
        self.pivots.push((p, piv));
    }

    /// Extends a negative direction `u` of the current Schur complement to the whole matrix.
    fn lift(&self, m: &SymMatrix<S>, u: Vec<S>) -> Vec<S> {
        let elim: Vec<usize> = self.pivots.iter().map(|&(p, _)| p).collect();
        if elim.is_empty() {
            return u;
        }
        let a = m.principal_submatrix(&elim);
        let rhs: Vec<S> = elim
            .iter()
            .map(|&p| {
                let mut acc = u[0].zero_like();
                for (j, x) in u.iter().enumerate() {
                    if self.active[j] && !x.is_zero() {
                        acc = acc.plus(&m.get(p, j).times(x));
                    }
                }
                acc
            })
            .collect();
        let x = solve(&a, &rhs).expect("eliminated block is positive definite");
        let mut v = u;
        for (k, &p) in elim.iter().enumerate() {
            v[p] = x[k].negated();
        }
        v
    }
}

/// Decides positive (semi)definiteness exactly by symmetric elimination with
/// diagonal pivoting and returns a re-checkable certificate.
pub fn psd_check<S: Scalar>(m: &SymMatrix<S>) -> PsdCertificate<S> {
    let n = m.order();
    let like = m.get(0, 0).clone();
    let mut e = Elimination::new(m);
    let unit = |i: usize, c: i64| {
        let mut v = vec![like.zero_like(); n];
        v[i] = like.from_int_like(c);
        v
    };
    loop {
        let live: Vec<usize> = (0..n).filter(|&i| e.active[i]).collect();
        if let Some(&i) = live.iter().find(|&&i| e.w[i][i].sign() < 0) {
            let v = e.lift(m, unit(i, 1));
            return indefinite(m, v);
        }
        if let Some(&p) = live.iter().find(|&&i| e.w[i][i].sign() > 0) {
            e.eliminate(p);
            continue;
        }
        // every remaining diagonal entry is zero
        for &i in &live {
            for &j in &live {
                if j > i && !e.w[i][j].is_zero() {
                    let mut u = unit(i, 1);
                    u[j] = like.from_int_like(-(e.w[i][j].sign() as i64));
                    let v = e.lift(m, u);
                    return indefinite(m, v);
                }
            }
        }
        break;
    }
    let rank = e.pivots.len();
    let verdict = if rank == n { Verdict::PositiveDefinite } else { Verdict::PositiveSemidefiniteSingular };
    PsdCertificate { verdict, rank, witness: PsdWitness::Pivots(e.pivots) }
}

fn indefinite<S: Scalar>(m: &SymMatrix<S>, v: Vec<S>) -> PsdCertificate<S> {
    PsdCertificate { verdict: Verdict::Indefinite, rank: rank(m), witness: PsdWitness::NegativeVector(v) }
}

/// `C − BᵀA⁻¹B` for the split `M = [[A, B], [Bᵀ, C]]` with `A` the leading `k × k` block.
pub fn schur_complement<S: Scalar>(m: &SymMatrix<S>, k: usize) -> Result<SymMatrix<S>, LinalgError> {
    let n = m.order();
    if k == 0 || k >= n {
        return Err(LinalgError::BadBlock { block: k, order: n });
    }
    let lead: Vec<usize> = (0..k).collect();
    if psd_check(&m.principal_submatrix(&lead)).verdict != Verdict::PositiveDefinite {
        return Err(LinalgError::LeadingBlockNotPd(k));
    }
    let mut e = Elimination::new(m);
    for p in 0..k {
        e.eliminate(p);
    }
    Ok(SymMatrix::from_fn(n - k, |i, j| e.w[k + i][k + j].clone()))
}
