//! Saturation search: for every positive definite normalized basis of rank `r`, collect the
//! unit vectors at angle `α` to all basis vectors and find a largest mutually compatible set.
//! The maximum over all bases is `M_α(r)`.
//!
//! Coverage assumption: every rank-`r` set contains `r` independent lines, and switching those
//! so that the first has inner product `+α` with the rest gives a Gram matrix that appears
//! among the seeds up to relabeling. Every remaining line then shows up as a candidate.

mod classes;
mod equiv;
mod kernel;
mod mstar;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{BoundReport, BoundValue};
use crate::exactnum::{ExactScalar, QuadExt, Rational, Scalar};
use crate::linalg::{psd_check, solve, SymMatrix, Verdict};
use crate::par;
use crate::seidel::graph6::to_graph6;
use crate::seidel::{max_clique, EquiangularJson, EquiangularSet, Graph, SeidelError, SeidelMatrix};

pub use classes::{class_codes, CACHE_ENV};
pub use equiv::{switching_equivalence, uniqueness_check_8_third, UniquenessReport};
pub use kernel::{montante_pd, Kernel};
pub use mstar::{m_star, AngleAudit, AngleMethod, MStarReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SaturateError {
    #[error("rank must be between 2 and 10, got {0}")]
    BadRank(usize),
    #[error("unsupported angle {0}: use a rational p/q or 1/sqrt(D)")]
    BadAngle(String),
    #[error("systems have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("switching equivalence is limited to 17 lines, got {0}")]
    TooLarge(usize),
    #[error("realized set failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Seidel(#[from] SeidelError),
}

/// Accepts `p/q`, `1/sqrt(D)` and anything else the exact-scalar parser reads, restricted to
/// angles the fast kernel supports.
pub fn parse_angle(s: &str) -> Result<ExactScalar, SaturateError> {
    let a: ExactScalar = s.trim().parse().map_err(|_| SaturateError::BadAngle(s.into()))?;
    check_angle(&a)?;
    Ok(a)
}

fn check_angle(a: &ExactScalar) -> Result<(), SaturateError> {
    let ok = match a {
        ExactScalar::Q(r) => r.signum() > 0 && r < &Rational::one(),
        ExactScalar::Quad(q) => kernel::inverse_sqrt_radicand(q).is_some(),
    };
    if ok {
        Ok(())
    } else {
        Err(SaturateError::BadAngle(a.to_string()))
    }
}

/// A positive definite basis in normalized form: vertex 0 has inner product `+α` with all
/// others, and `graph` (on the other `r − 1`) records the `−α` pairs.
#[derive(Clone, Debug)]
pub struct BasisSeed {
    pub r: usize,
    pub alpha: ExactScalar,
    pub graph: Graph,
    pub seidel: SeidelMatrix,
    kernel: Kernel,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeedJson {
    pub r: usize,
    pub alpha: ExactScalar,
    pub graph6: String,
    pub seidel: Vec<Vec<i64>>,
}

impl BasisSeed {
    /// `None` if the Gram matrix is not positive definite.
    pub fn new(alpha: &ExactScalar, graph: Graph) -> Option<BasisSeed> {
        let r = graph.vertex_count() + 1;
        let mut full = Graph::empty(r);
        for (u, v) in graph.edges() {
            full.add_edge(u + 1, v + 1);
        }
        let seidel = SeidelMatrix::from_graph(&full);
        let kernel = Kernel::build(&seidel, alpha)?;
        Some(BasisSeed { r, alpha: alpha.clone(), graph, seidel, kernel })
    }

    pub fn gram(&self) -> crate::linalg::AnyMatrix {
        self.seidel.gram(&self.alpha)
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson { r: self.r, alpha: self.alpha.clone(), graph6: to_graph6(&self.graph), seidel: self.seidel.rows_i64() }
    }
}

/// Seeds for one `(r, α)` and how many graph classes were scanned to find them.
#[derive(Clone, Debug)]
pub struct SeedScan {
    pub classes_scanned: usize,
    pub seeds: Vec<BasisSeed>,
}

pub fn enumerate_pd_bases(r: usize, alpha: &ExactScalar) -> Result<SeedScan, SaturateError> {
    if !(2..=10).contains(&r) {
        return Err(SaturateError::BadRank(r));
    }
    check_angle(alpha)?;
    let codes = class_codes(r - 1);
    let seeds: Vec<BasisSeed> = par::map(&codes, |&c| BasisSeed::new(alpha, crate::seidel::canon::graph_from_code(r - 1, c)))
        .into_iter()
        .flatten()
        .collect();
    Ok(SeedScan { classes_scanned: codes.len(), seeds })
}

/// A unit vector at angle `α` to every basis vector.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CandidateLine {
    /// `⟨x, bᵢ⟩ = α·sign_vector[i]`, with `sign_vector[0] = +1`.
    pub sign_vector: Vec<i8>,
    /// Coordinates of `x` in the basis.
    pub coords: Vec<ExactScalar>,
}

fn sign_vectors(r: usize) -> impl Iterator<Item = Vec<i8>> {
    (0u32..1 << (r - 1)).map(move |m| (0..r).map(|i| if i > 0 && m >> (i - 1) & 1 == 1 { -1 } else { 1 }).collect())
}

/// Sign vectors of the candidates, in mask order.
pub fn candidate_signs(seed: &BasisSeed) -> Vec<Vec<i8>> {
    sign_vectors(seed.r).filter(|e| seed.kernel.is_unit(e)).collect()
}

pub fn candidates(seed: &BasisSeed) -> Vec<CandidateLine> {
    candidate_signs(seed)
        .into_iter()
        .map(|e| {
            let coords = seed.kernel.coords(&e);
            CandidateLine { sign_vector: e, coords }
        })
        .collect()
}

fn generic_signs<S: Scalar>(g: &SymMatrix<S>, alpha: &S) -> Vec<Vec<i8>> {
    let one = alpha.one_like();
    sign_vectors(g.order())
        .filter(|e| {
            let rhs: Vec<S> = e.iter().map(|&s| if s > 0 { alpha.clone() } else { alpha.negated() }).collect();
            let c = solve(g, &rhs).expect("seed Gram is nonsingular");
            // ‖x‖² = cᵀGc = α·εᵀc
            let norm = c.iter().zip(&rhs).fold(alpha.zero_like(), |acc, (ci, bi)| acc.plus(&ci.times(bi)));
            norm == one
        })
        .collect()
}

/// Candidate sign vectors by solving `G·c = α·ε` directly in the field; the slow reference path.
pub fn candidate_signs_generic(seed: &BasisSeed) -> Vec<Vec<i8>> {
    match &seed.alpha {
        ExactScalar::Q(a) => generic_signs(&seed.seidel.gram_rational(a), a),
        ExactScalar::Quad(a) => generic_signs(&seed.seidel.gram_quad(a), a),
    }
}

/// Edge iff the two candidates have inner product `±α`.
pub fn compatibility_graph(seed: &BasisSeed, signs: &[Vec<i8>]) -> Graph {
    let n = signs.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if seed.kernel.compatibility(&signs[i], &signs[j]) != 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[derive(Clone, Debug, Serialize)]
pub struct SaturationReport {
    pub seed: SeedJson,
    pub candidate_count: usize,
    pub clique_size: usize,
    pub total: usize,
    /// Sign vectors of the clique members.
    pub clique_witness: Vec<Vec<i8>>,
    /// Distinct inner products between incompatible candidates.
    pub incompatible_values: Vec<String>,
    pub realized: EquiangularJson,
}

fn seed_total(seed: &BasisSeed) -> (usize, Vec<Vec<i8>>, Graph, Vec<usize>) {
    let signs = candidate_signs(seed);
    let g = compatibility_graph(seed, &signs);
    let (w, clique) = max_clique(&g);
    (seed.r + w, signs, g, clique)
}

/// Basis followed by the clique members, as a verified equiangular set of rank `r`.
fn realize(seed: &BasisSeed, clique: &[Vec<i8>]) -> Result<EquiangularSet, SaturateError> {
    let r = seed.r;
    let n = r + clique.len();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i < r, j < r) {
                    _ if i == j => 0,
                    (true, true) => seed.seidel.get(i, j) as i64,
                    (true, false) => clique[j - r][i] as i64,
                    (false, true) => clique[i - r][j] as i64,
                    (false, false) => seed.kernel.compatibility(&clique[i - r], &clique[j - r]) as i64,
                })
                .collect()
        })
        .collect();
    let e = EquiangularSet::new(seed.alpha.clone(), SeidelMatrix::from_rows(&rows)?)?;
    if e.rank != r {
        return Err(SaturateError::Verification(format!("rank {} instead of {r}", e.rank)));
    }
    Ok(e)
}

pub fn saturate_seed(seed: &BasisSeed) -> Result<SaturationReport, SaturateError> {
    let (total, signs, g, clique) = seed_total(seed);
    // the clique is maximal: no outside candidate is compatible with all of it
    for v in 0..signs.len() {
        if !clique.contains(&v) && clique.iter().all(|&u| g.has_edge(u, v)) {
            return Err(SaturateError::Verification(format!("candidate {v} extends the clique")));
        }
    }
    let witness: Vec<Vec<i8>> = clique.iter().map(|&i| signs[i].clone()).collect();
    let realized = realize(seed, &witness)?;
    let mut values: Vec<String> = Vec::new();
    for i in 0..signs.len() {
        for j in i + 1..signs.len() {
            if !g.has_edge(i, j) {
                let v = seed.kernel.inner_product(&signs[i], &signs[j]).to_string();
                if !values.contains(&v) {
                    values.push(v);
                }
            }
        }
    }
    values.sort();
    Ok(SaturationReport {
        seed: seed.to_json(),
        candidate_count: signs.len(),
        clique_size: clique.len(),
        total,
        clique_witness: witness,
        incompatible_values: values,
        realized: realized.to_json(),
    })
}

/// Result of the search over all seeds for one `(r, α)`.
#[derive(Clone, Debug, Serialize)]
pub struct MAlphaResult {
    pub r: usize,
    pub alpha: ExactScalar,
    pub classes_scanned: usize,
    pub seed_count: usize,
    pub value: usize,
    /// Saturation totals of all seeds, sorted.
    pub totals: Vec<usize>,
    /// Full reports for every seed reaching the maximum.
    pub best: Vec<SaturationReport>,
}

impl MAlphaResult {
    pub fn to_bound_report(&self) -> BoundReport {
        BoundReport::new(
            "m_alpha",
            BoundValue::Int(self.value as u64),
            &[("r", self.r.to_string()), ("alpha", self.alpha.to_string())],
            serde_json::json!({
                "classes_scanned": self.classes_scanned,
                "seed_count": self.seed_count,
                "best": self.best,
            }),
        )
    }
}

pub fn m_alpha(r: usize, alpha: &ExactScalar) -> Result<MAlphaResult, SaturateError> {
    let scan = enumerate_pd_bases(r, alpha)?;
    let totals: Vec<usize> = par::map(&scan.seeds, |s| seed_total(s).0);
    // with no positive definite basis, no rank-r set exists at this angle
    let value = totals.iter().copied().max().unwrap_or(0);
    let best = scan
        .seeds
        .iter()
        .zip(&totals)
        .filter(|(_, &t)| t == value)
        .map(|(s, _)| saturate_seed(s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut sorted = totals.clone();
    sorted.sort_unstable();
    Ok(MAlphaResult { r, alpha: alpha.clone(), classes_scanned: scan.classes_scanned, seed_count: scan.seeds.len(), value, totals: sorted, best })
}

/// Whether `I + αA` is positive definite, by generic exact elimination (reference for the kernel).
pub fn is_pd_generic(seidel: &SeidelMatrix, alpha: &ExactScalar) -> bool {
    match alpha {
        ExactScalar::Q(a) => psd_check(&seidel.gram_rational(a)).verdict == Verdict::PositiveDefinite,
        ExactScalar::Quad(a) => psd_check(&seidel.gram_quad(a)).verdict == Verdict::PositiveDefinite,
    }
}

/// `1/√D` as an exact scalar.
pub fn inv_sqrt_angle(d: u64) -> ExactScalar {
    ExactScalar::Quad(QuadExt::inv_sqrt(d).expect("square-free D"))
}
