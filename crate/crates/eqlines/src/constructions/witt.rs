//! The 276 equiangular lines of angle 1/5 in rank 23 built from the octads through point 1.

use std::collections::BTreeMap;

use serde::Serialize;

use super::golay::{golay_octads, Octad, WITT_BASE_OCTADS};
use crate::exactnum::{ExactScalar, Rational};
use crate::linalg::int_rank_i64;
use crate::pillars::{decompose, KBase, PillarDecomposition};
use crate::seidel::{EquiangularSet, Graph, SeidelMatrix};

/// Every vector below has squared norm 80, so normalized inner products are `⟨w, w'⟩ / 80`.
pub const WITT_NORM_SQ: i64 = 80;

/// Integer vectors `w_σ` (one per octad through 1) followed by `v₂..v₂₄`, and the line system.
#[derive(Clone, PartialEq, Debug)]
pub struct WittSystem {
    pub octads_all: Vec<Octad>,
    pub octads_through_1: Vec<Octad>,
    pub vectors: Vec<[i64; 24]>,
    pub normalized: EquiangularSet,
}

/// `w_σ = 4·Σ_{i∈σ} eᵢ − 4e₁ − Σ eⱼ`.
pub fn w_sigma(o: &Octad) -> [i64; 24] {
    let mut v = [-1i64; 24];
    for p in o.points() {
        v[p as usize - 1] += 4;
    }
    v[0] -= 4;
    v
}

/// `v_k = 4e₁ + 8e_k − Σ eⱼ` for `k = 2..=24`.
pub fn v_k(k: usize) -> [i64; 24] {
    assert!((2..=24).contains(&k));
    let mut v = [-1i64; 24];
    v[0] += 4;
    v[k - 1] += 8;
    v
}

pub fn dot(a: &[i64; 24], b: &[i64; 24]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Builds the system and checks every norm and every pairwise inner product exactly.
pub fn witt276() -> WittSystem {
    let sys = golay_octads();
    let mut vectors: Vec<[i64; 24]> = sys.octads_through_1.iter().map(w_sigma).collect();
    vectors.extend((2..=24).map(v_k));
    let n = vectors.len();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        assert_eq!(dot(&vectors[i], &vectors[i]), WITT_NORM_SQ);
        for j in i + 1..n {
            let s = match dot(&vectors[i], &vectors[j]) {
                16 => 1,
                -16 => -1,
                other => panic!("vectors {i}, {j} have inner product {other}/80"),
            };
            rows[i][j] = s;
            rows[j][i] = s;
        }
    }
    let seidel = SeidelMatrix::from_rows(&rows).expect("valid Seidel matrix");
    let rank = int_rank_i64(&vectors.iter().map(|v| v.to_vec()).collect::<Vec<_>>());
    // the Gram matrix is that of real vectors, hence PSD, with rank that of the vectors
    let normalized = EquiangularSet { alpha: ExactScalar::Q(Rational::new(1, 5)), seidel, rank };
    WittSystem {
        octads_all: sys.octads_all.clone(),
        octads_through_1: sys.octads_through_1.clone(),
        vectors,
        normalized,
    }
}

/// The six-vector base, the ten pillars and their triangles.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct WittPillars {
    /// Indices of `w_{σ₁}..w_{σ₆}` in the system.
    pub base: Vec<usize>,
    pub decomposition: PillarDecomposition,
    /// Sign `s_x` making `s_x·x̂` have inner product `+1/5` with `p₆`.
    pub signs_toward_p6: BTreeMap<usize, i8>,
    /// The triangles of each pillar's Seidel graph, in pillar order.
    pub triangles: Vec<Vec<[usize; 3]>>,
}

impl WittPillars {
    pub fn triangle_count(&self) -> usize {
        self.triangles.iter().map(Vec::len).sum()
    }
}

/// Splits `g` into vertex-disjoint triangles if it is exactly a disjoint union of them.
fn disjoint_triangles(g: &Graph, labels: &[usize]) -> Option<Vec<[usize; 3]>> {
    let mut out = Vec::new();
    for comp in g.components() {
        if comp.len() != 3 || !g.is_clique(&comp) {
            return None;
        }
        out.push([labels[comp[0]], labels[comp[1]], labels[comp[2]]]);
    }
    Some(out)
}

pub fn witt276_base_and_pillars(w: &WittSystem) -> WittPillars {
    let e = &w.normalized;
    let base: Vec<usize> = WITT_BASE_OCTADS
        .iter()
        .map(|s| {
            let o = Octad::from_points(s);
            w.octads_through_1.iter().position(|x| *x == o).expect("base octad present")
        })
        .collect();
    // p₁..p₃ = ŵ, p₄..p₆ = −ŵ
    let negated = vec![false, false, false, true, true, true];
    let kb = KBase::new(e, base.clone(), negated).expect("printed base has mutual inner products -1/5");
    let decomposition = decompose(e, &kb);
    let p6 = base[5];
    let signs_toward_p6 = decomposition
        .pillars
        .values()
        .flatten()
        .map(|&x| (x, -e.seidel.get(x, p6)))
        .collect();
    let triangles = decomposition
        .pillars
        .values()
        .map(|vs| {
            let g = SeidelMatrix::from_rows(
                &vs.iter().map(|&x| vs.iter().map(|&y| decomposition.switched_entry(&e.seidel, x, y) as i64).collect()).collect::<Vec<_>>(),
            )
            .expect("principal Seidel block")
            .graph();
            disjoint_triangles(&g, vs).unwrap_or_default()
        })
        .collect();
    WittPillars { base, decomposition, signs_toward_p6, triangles }
}
