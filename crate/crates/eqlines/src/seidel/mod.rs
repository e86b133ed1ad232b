//! Seidel matrices and graphs, switching, clique numbers and the base size.

pub mod canon;
mod clique;
mod graph;
pub mod graph6;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{ExactScalar, IntPolynomial, QuadExt, Rational, Scalar};
use crate::linalg::{self, psd_check, AnyMatrix, PsdCertificate, SymMatrix, Verdict};
use crate::par;

pub use clique::{clique_number, clique_number_exhaustive, degeneracy_order, max_clique};
pub use graph::{BitSet, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeidelError {
    #[error("angle must lie strictly between 0 and 1, got {0}")]
    BadAngle(String),
    #[error("Gram matrix I + alpha*A is not positive semidefinite")]
    NotPsd,
    #[error("Seidel entry ({0}, {1}) is {2}; expected 0 on the diagonal and +1/-1 elsewhere")]
    BadEntry(usize, usize, i64),
    #[error("Seidel matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("row {0} has length {1}, expected {2}")]
    Ragged(usize, usize, usize),
    #[error("base size needs at least two vectors")]
    Singleton,
    #[error("vertex {0} out of range")]
    BadVertex(usize),
}

/// Integer symmetric matrix with zero diagonal and ±1 off the diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeidelMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SeidelMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, SeidelError> {
        let n = rows.len();
        let mut entries = vec![0i8; n * n];
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(SeidelError::Ragged(i, r.len(), n));
            }
            for (j, &x) in r.iter().enumerate() {
                let ok = if i == j { x == 0 } else { x == 1 || x == -1 };
                if !ok {
                    return Err(SeidelError::BadEntry(i, j, x));
                }
                if rows[j][i] != x {
                    return Err(SeidelError::NotSymmetric(i, j));
                }
                entries[i * n + j] = x as i8;
            }
        }
        Ok(SeidelMatrix { n, entries })
    }

    /// `A = J − I − 2·Adj(g)`.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    entries[i * n + j] = if g.has_edge(i, j) { -1 } else { 1 };
                }
            }
        }
        SeidelMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    /// Graph with an edge wherever the entry is −1.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) == -1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn rows_i64(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) as i64).collect()).collect()
    }

    pub fn char_poly(&self) -> IntPolynomial {
        linalg::char_poly_i64(&self.rows_i64())
    }

    pub fn principal(&self, idx: &[usize]) -> SeidelMatrix {
        let k = idx.len();
        let mut entries = vec![0i8; k * k];
        for a in 0..k {
            for b in 0..k {
                entries[a * k + b] = self.get(idx[a], idx[b]);
            }
        }
        SeidelMatrix { n: k, entries }
    }

    /// Gram matrix `I + αA` over ℚ (`alpha` rational).
    pub fn gram_rational(&self, alpha: &Rational) -> SymMatrix<Rational> {
        let one = Rational::one();
        let neg = -alpha;
        SymMatrix::from_fn(self.n, |i, j| match self.get(i, j) {
            0 => one.clone(),
            1 => alpha.clone(),
            _ => neg.clone(),
        })
    }

    /// Gram matrix `I + αA` over ℚ(√d).
    pub fn gram_quad(&self, alpha: &QuadExt) -> SymMatrix<QuadExt> {
        let one = alpha.one_like();
        let neg = alpha.negated();
        SymMatrix::from_fn(self.n, |i, j| match self.get(i, j) {
            0 => one.clone(),
            1 => alpha.clone(),
            _ => neg.clone(),
        })
    }

    pub fn gram(&self, alpha: &ExactScalar) -> AnyMatrix {
        match alpha {
            ExactScalar::Q(a) => AnyMatrix::Q(self.gram_rational(a)),
            ExactScalar::Quad(a) => AnyMatrix::Quad(self.gram_quad(a)),
        }
    }
}

/// Negate the vectors in `sign_flips`, then relabel: new vertex `k` is old vertex `permutation[k]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SwitchingOp {
    pub sign_flips: Vec<usize>,
    pub permutation: Vec<usize>,
}

impl SwitchingOp {
    pub fn identity(n: usize) -> Self {
        SwitchingOp { sign_flips: Vec::new(), permutation: (0..n).collect() }
    }

    pub fn flips(n: usize, mut sign_flips: Vec<usize>) -> Self {
        sign_flips.sort_unstable();
        sign_flips.dedup();
        SwitchingOp { sign_flips, permutation: (0..n).collect() }
    }

    fn signs(&self, n: usize) -> Vec<i8> {
        let mut s = vec![1i8; n];
        for &v in &self.sign_flips {
            s[v] = -s[v];
        }
        s
    }

    /// The operation undoing this one.
    pub fn inverse(&self) -> SwitchingOp {
        let n = self.permutation.len();
        let mut inv = vec![0; n];
        for (k, &p) in self.permutation.iter().enumerate() {
            inv[p] = k;
        }
        // flips of old vertices v become flips of their new labels
        let mut flips: Vec<usize> = self.sign_flips.iter().map(|&v| inv[v]).collect();
        flips.sort_unstable();
        SwitchingOp { sign_flips: flips, permutation: inv }
    }

    pub fn apply(&self, a: &SeidelMatrix) -> SeidelMatrix {
        let n = a.order();
        let s = self.signs(n);
        let p = &self.permutation;
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = s[p[i]] * s[p[j]] * a.get(p[i], p[j]);
            }
        }
        SeidelMatrix { n, entries }
    }
}

/// Base-size certificate: `base` is a clique of size `k` in the Seidel graph after `op`
/// (vertex labels of `base` are those after `op`).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BaseSize {
    pub k: usize,
    pub base: Vec<usize>,
    pub op: SwitchingOp,
}

/// Equiangular set `X` given by its angle and Seidel matrix; `G = I + αA` is PSD.
#[derive(Clone, PartialEq, Debug)]
pub struct EquiangularSet {
    pub alpha: ExactScalar,
    pub seidel: SeidelMatrix,
    pub rank: usize,
}

/// `{"alpha": "1/5", "seidel": [[0, 1, -1, ...], ...]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EquiangularJson {
    pub alpha: ExactScalar,
    pub seidel: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_size: Option<usize>,
}

fn alpha_in_range(alpha: &ExactScalar) -> bool {
    let one_minus = match alpha {
        ExactScalar::Q(a) => (&Rational::one() - a).signum(),
        ExactScalar::Quad(a) => (&a.one_like() - a).sign(),
    };
    alpha.sign() > 0 && one_minus > 0
}

pub fn gram_certificate(seidel: &SeidelMatrix, alpha: &ExactScalar) -> Verdict {
    match seidel.gram(alpha) {
        AnyMatrix::Q(g) => psd_check(&g).verdict,
        AnyMatrix::Quad(g) => psd_check(&g).verdict,
    }
}

impl EquiangularSet {
    /// Checks `0 < α < 1` and that `I + αA` is PSD.
    pub fn new(alpha: ExactScalar, seidel: SeidelMatrix) -> Result<Self, SeidelError> {
        if !alpha_in_range(&alpha) {
            return Err(SeidelError::BadAngle(alpha.to_string()));
        }
        let (verdict, rank) = match seidel.gram(&alpha) {
            AnyMatrix::Q(g) => certificate_parts(psd_check(&g)),
            AnyMatrix::Quad(g) => certificate_parts(psd_check(&g)),
        };
        if verdict == Verdict::Indefinite {
            return Err(SeidelError::NotPsd);
        }
        Ok(EquiangularSet { alpha, seidel, rank })
    }

    pub fn len(&self) -> usize {
        self.seidel.order()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn gram(&self) -> AnyMatrix {
        self.seidel.gram(&self.alpha)
    }

    pub fn to_json(&self) -> EquiangularJson {
        EquiangularJson { alpha: self.alpha.clone(), seidel: self.seidel.rows_i64(), rank: Some(self.rank), base_size: None }
    }

    pub fn from_json(j: &EquiangularJson) -> Result<Self, SeidelError> {
        EquiangularSet::new(j.alpha.clone(), SeidelMatrix::from_rows(&j.seidel)?)
    }

    /// Largest `k` with `k ≤ 1/α + 1`.
    pub fn base_size_cap(&self) -> usize {
        match &self.alpha {
            ExactScalar::Q(a) => (a.recip().floor() + 1u32).try_into().unwrap_or(usize::MAX),
            ExactScalar::Quad(a) => {
                // largest k with (k − 1)·α ≤ 1
                let mut k = 1usize;
                loop {
                    let t = a.scale(&Rational::from_int(k as i64));
                    if (&t.one_like() - &t).sign() < 0 {
                        return k;
                    }
                    k += 1;
                }
            }
        }
    }
}

fn certificate_parts<S>(c: PsdCertificate<S>) -> (Verdict, usize) {
    (c.verdict, c.rank)
}

/// Seidel graph `S(X)`: edges at inner product `−α`.
pub fn seidel_graph(e: &EquiangularSet) -> Graph {
    e.seidel.graph()
}

pub fn switch(e: &EquiangularSet, op: &SwitchingOp) -> EquiangularSet {
    EquiangularSet { alpha: e.alpha.clone(), seidel: op.apply(&e.seidel), rank: e.rank }
}

/// Flips that make every inner product with `root` equal to `+α`.
pub fn normalizing_flips(a: &SeidelMatrix, root: usize) -> Vec<usize> {
    (0..a.order()).filter(|&j| j != root && a.get(root, j) == -1).collect()
}

pub fn switching_normalize(e: &EquiangularSet, root: usize) -> Result<EquiangularSet, SeidelError> {
    if root >= e.len() {
        return Err(SeidelError::BadVertex(root));
    }
    let op = SwitchingOp::flips(e.len(), normalizing_flips(&e.seidel, root));
    Ok(switch(e, &op))
}

/// Base size `K(X)`: the maximum clique number over the switching class of the Seidel graph.
///
/// Uses `K = max over roots r of (1 + ω(S_r − r))`, where `S_r` is the Seidel graph
/// switched so that `r` is isolated; the search stops early once the cap `⌊1/α⌋ + 1` is met.
pub fn base_size(e: &EquiangularSet) -> Result<BaseSize, SeidelError> {
    let n = e.len();
    if n < 2 {
        return Err(SeidelError::Singleton);
    }
    let cap = e.base_size_cap();
    let a = &e.seidel;
    // roots are examined in fixed batches so the early stop does not depend on scheduling
    let mut found: Option<(usize, usize, Vec<usize>, Vec<usize>)> = None;
    for batch in (0..n).collect::<Vec<_>>().chunks(16) {
        let per_root = par::map(batch, |&r| {
            let flips = normalizing_flips(a, r);
            let g = SwitchingOp::flips(n, flips.clone()).apply(a).graph();
            let rest: Vec<usize> = (0..n).filter(|&v| v != r).collect();
            let (w, clique) = max_clique(&g.induced(&rest));
            (w + 1, r, flips, clique.into_iter().map(|i| rest[i]).collect::<Vec<_>>())
        });
        for cand in per_root {
            if found.as_ref().is_none_or(|f| cand.0 > f.0) {
                found = Some(cand);
            }
        }
        if found.as_ref().is_some_and(|f| f.0 >= cap) {
            break;
        }
    }
    let (k, r, flips, clique) = found.expect("at least two roots");
    // switching the clique as well joins it to the (isolated) root
    let mut total: Vec<bool> = vec![false; n];
    for &v in &flips {
        total[v] ^= true;
    }
    for &v in &clique {
        total[v] ^= true;
    }
    let op = SwitchingOp::flips(n, (0..n).filter(|&v| total[v]).collect());
    let mut base = clique;
    base.push(r);
    base.sort_unstable();
    debug_assert!(op.apply(a).graph().is_clique(&base));
    Ok(BaseSize { k, base, op })
}

/// Base size by trying every switching (fixing vertex 0, which loses nothing). Limited to 20 vertices.
pub fn base_size_exhaustive(a: &SeidelMatrix) -> usize {
    let n = a.order();
    assert!((1..=20).contains(&n));
    let mut best = 0;
    for mask in 0u32..(1u32 << (n - 1)) {
        let flips: Vec<usize> = (1..n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let g = SwitchingOp::flips(n, flips).apply(a).graph();
        best = best.max(clique_number(&g));
    }
    best
}
