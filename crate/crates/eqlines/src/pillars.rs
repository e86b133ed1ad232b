//! Pillar decomposition relative to a K-base, and the exact geometry of (K,1) pillars.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactnum::{ExactScalar, Rational};
use crate::linalg::aI_bJ_inverse;
use crate::seidel::{BaseSize, EquiangularSet, SeidelMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PillarError {
    #[error("base vertex {0} out of range")]
    BadVertex(usize),
    #[error("base vertex {0} listed twice")]
    Repeated(usize),
    #[error("base vertices {0} and {1} do not have inner product -alpha after switching")]
    NotABase(usize, usize),
    #[error("a base needs at least 2 vectors")]
    TooSmall,
    #[error("(K,1) geometry needs n >= 1 and K >= 2, got n = {n}, K = {k}")]
    BadParameters { n: usize, k: usize },
}

/// Ordered base `p₁..p_K`; `negated[i]` records whether `p_i` is the negative of
/// the stored vector, so that the base has Gram matrix `(1+α)I − αJ`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct KBase {
    pub alpha: ExactScalar,
    pub vertices: Vec<usize>,
    pub negated: Vec<bool>,
}

impl KBase {
    pub fn new(e: &EquiangularSet, vertices: Vec<usize>, negated: Vec<bool>) -> Result<Self, PillarError> {
        assert_eq!(vertices.len(), negated.len());
        if vertices.len() < 2 {
            return Err(PillarError::TooSmall);
        }
        for (a, &v) in vertices.iter().enumerate() {
            if v >= e.len() {
                return Err(PillarError::BadVertex(v));
            }
            if vertices[..a].contains(&v) {
                return Err(PillarError::Repeated(v));
            }
        }
        let b = KBase { alpha: e.alpha.clone(), vertices, negated };
        for i in 0..b.k() {
            for j in i + 1..b.k() {
                if b.sign(i) * b.sign(j) * e.seidel.get(b.vertices[i], b.vertices[j]) != -1 {
                    return Err(PillarError::NotABase(b.vertices[i], b.vertices[j]));
                }
            }
        }
        Ok(b)
    }

    /// Base from a base-size certificate, in the certificate's vertex order.
    pub fn from_base_size(e: &EquiangularSet, bs: &BaseSize) -> Result<Self, PillarError> {
        let negated = bs.base.iter().map(|v| bs.op.sign_flips.binary_search(v).is_ok()).collect();
        KBase::new(e, bs.base.clone(), negated)
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    fn sign(&self, i: usize) -> i8 {
        if self.negated[i] {
            -1
        } else {
            1
        }
    }
}

/// `ε ∈ {±1}^K`, stored as `true` for `+1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignVector(pub Vec<bool>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ(ε)`: number of `+1` entries.
    pub fn plus_count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn negated(&self) -> SignVector {
        SignVector(self.0.iter().map(|b| !b).collect())
    }

    pub fn hamming(&self, o: &SignVector) -> usize {
        self.0.iter().zip(&o.0).filter(|(a, b)| a != b).count()
    }

    /// Whether `−x` should replace `x`: `ε(x)` has more plusses than `ε(−x)`,
    /// or as many and the last entry is `+`.
    pub fn should_flip(&self) -> bool {
        let p = self.plus_count();
        let k = self.len();
        2 * p > k || (2 * p == k && self.0[k - 1])
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn raw_sign_vector(a: &SeidelMatrix, base: &KBase, x: usize) -> SignVector {
    SignVector((0..base.k()).map(|i| base.sign(i) * a.get(x, base.vertices[i]) == 1).collect())
}

/// Normalized `ε(x)` and whether `x` had to be replaced by `−x`.
pub fn sign_vector(e: &EquiangularSet, base: &KBase, x: usize) -> (SignVector, bool) {
    let eps = raw_sign_vector(&e.seidel, base, x);
    if eps.should_flip() {
        (eps.negated(), true)
    } else {
        (eps, false)
    }
}

/// Partition of `X ∖ P` by normalized sign vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PillarDecomposition {
    pub base: KBase,
    pub pillars: BTreeMap<SignVector, Vec<usize>>,
    /// Vertices replaced by their negatives (sorted).
    pub flipped: Vec<usize>,
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    base: &'a [usize],
    base_negated: Vec<usize>,
    pillars: BTreeMap<String, &'a Vec<usize>>,
    flipped: &'a [usize],
}

impl Serialize for PillarDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DecompositionJson {
            base: &self.base.vertices,
            base_negated: (0..self.base.k()).filter(|&i| self.base.negated[i]).map(|i| self.base.vertices[i]).collect(),
            pillars: self.pillars.iter().map(|(k, v)| (k.to_string(), v)).collect(),
            flipped: &self.flipped,
        }
        .serialize(s)
    }
}

pub fn decompose(e: &EquiangularSet, base: &KBase) -> PillarDecomposition {
    let mut pillars: BTreeMap<SignVector, Vec<usize>> = BTreeMap::new();
    let mut flipped = Vec::new();
    for x in (0..e.len()).filter(|x| !base.vertices.contains(x)) {
        let (eps, f) = sign_vector(e, base, x);
        if f {
            flipped.push(x);
        }
        pillars.entry(eps).or_default().push(x);
    }
    PillarDecomposition { base: base.clone(), pillars, flipped }
}

impl PillarDecomposition {
    fn sign(&self, x: usize) -> i8 {
        if self.flipped.binary_search(&x).is_ok() {
            -1
        } else {
            1
        }
    }

    /// Seidel entry between `x` and `y` after the recorded flips.
    pub fn switched_entry(&self, a: &SeidelMatrix, x: usize, y: usize) -> i8 {
        self.sign(x) * self.sign(y) * a.get(x, y)
    }

    /// Pillars with `n` positive entries.
    pub fn pillars_with(&self, n: usize) -> impl Iterator<Item = (&SignVector, &Vec<usize>)> {
        self.pillars.iter().filter(move |(k, _)| k.plus_count() == n)
    }

    /// Number of distinct `(K, n)` pillars, indexed by `n`.
    pub fn pillar_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.base.k() / 2 + 1];
        for k in self.pillars.keys() {
            c[k.plus_count()] += 1;
        }
        c
    }

    /// Whether the number of `(K, n)` pillars is at most `C(K, n)` (half that when `2n = K`).
    pub fn within_count_caps(&self) -> bool {
        let k = self.base.k();
        self.pillar_counts().iter().enumerate().all(|(n, &c)| {
            let cap = binomial(k, n);
            if 2 * n == k {
                2 * c <= cap
            } else {
                c <= cap
            }
        })
    }

    /// A pair in a common `(K,1)` pillar whose inner product is `−α`, if any.
    pub fn k1_violation(&self, a: &SeidelMatrix) -> Option<(usize, usize)> {
        for (_, vs) in self.pillars_with(1) {
            for (i, &x) in vs.iter().enumerate() {
                for &y in &vs[i + 1..] {
                    if self.switched_entry(a, x, y) != 1 {
                        return Some((x, y));
                    }
                }
            }
        }
        None
    }

    /// Every non-base vertex appears in exactly one pillar.
    pub fn is_partition(&self, n: usize) -> bool {
        let mut seen = vec![0u32; n];
        for v in self.pillars.values().flatten().chain(&self.base.vertices) {
            seen[*v] += 1;
        }
        seen.iter().all(|&c| c == 1)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Exact data for vectors `x = h + c` in `(K,1)` pillars with angle `α = 1/(2n+1)`:
/// `h` is the projection onto the base span, `c` the orthogonal part, `ĉ = c/‖c‖`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct K1Geometry {
    pub k: usize,
    pub n: usize,
    pub alpha: Rational,
    /// Coordinates of `h` in `p₁..p_K` for the pillar whose `+` sits at position 1.
    pub h_coeffs: Vec<Rational>,
    pub h_norm_sq: Rational,
    pub c_norm_sq: Rational,
    /// `⟨ĉ₁, ĉ₂⟩` for two vectors of one pillar (their inner product is `+α`).
    pub same_pillar_c_inner: Rational,
    /// `⟨h₁, h₂⟩` for vectors in two different `(K,1)` pillars.
    pub cross_h_inner: Rational,
    /// `⟨ĉ₁, ĉ₂⟩` across two pillars when `⟨x, u⟩ = +α` and `−α`.
    pub cross_pillar_c_inners: (Rational, Rational),
}

/// `(K,1)` pillar geometry for any `K ≥ 2` and `α = 1/(2n+1)` with `K < 1/α + 1`.
pub fn k1_pillar_geometry(n: usize, k: usize) -> Result<K1Geometry, PillarError> {
    if n == 0 || k < 2 || k > 2 * n + 1 {
        return Err(PillarError::BadParameters { n, k });
    }
    let alpha = Rational::new(1, 2 * n as i64 + 1);
    let one = Rational::one();
    // G = (1+α)I − αJ, rhs_j = α·ε_j
    let (ia, ib) = aI_bJ_inverse(&(&one + &alpha), &(-&alpha), k).expect("base Gram is invertible");
    let rhs = |pos: usize| -> Vec<Rational> {
        (0..k).map(|j| if j == pos { alpha.clone() } else { -&alpha }).collect()
    };
    let solve = |b: &[Rational]| -> Vec<Rational> {
        let s = b.iter().fold(Rational::zero(), |acc, x| &acc + x);
        b.iter().map(|x| &(&ia * x) + &(&ib * &s)).collect()
    };
    let dot = |u: &[Rational], v: &[Rational]| u.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| &acc + &(a * b));
    let (r1, r2) = (rhs(0), rhs(1));
    let h1 = solve(&r1);
    // ⟨h₁, h₂⟩ = h₁ᵀ G h₂ = h₁ · rhs₂
    let h_norm_sq = dot(&h1, &r1);
    let cross_h_inner = dot(&h1, &r2);
    let c_norm_sq = &one - &h_norm_sq;
    let same_pillar_c_inner = &(&alpha - &h_norm_sq) / &c_norm_sq;
    let cross_plus = &(&alpha - &cross_h_inner) / &c_norm_sq;
    let cross_minus = &(&(-&alpha) - &cross_h_inner) / &c_norm_sq;
    Ok(K1Geometry {
        k,
        n,
        alpha,
        h_coeffs: h1,
        h_norm_sq,
        c_norm_sq,
        same_pillar_c_inner,
        cross_h_inner,
        cross_pillar_c_inners: (cross_plus, cross_minus),
    })
}

/// The case `K = n + 2`, where `c`-vectors in one `(K,1)` pillar are orthogonal.
pub fn k1_geometry(n: usize) -> Result<K1Geometry, PillarError> {
    if n < 2 {
        return Err(PillarError::BadParameters { n, k: n + 2 });
    }
    k1_pillar_geometry(n, n + 2)
}

/// `α = 1/5`, `K = 3`.
pub fn k3_geometry() -> K1Geometry {
    k1_pillar_geometry(2, 3).expect("valid parameters")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seidel::Graph;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn flip_rule() {
        let s = |t: &str| SignVector(t.chars().map(|c| c == '+').collect());
        assert!(!s("----").should_flip());
        assert!(s("+++-").should_flip());
        assert!(s("+--+").should_flip());
        assert!(!s("++--").should_flip());
        assert!(!s("+--").should_flip());
        assert!(s("++-").should_flip());
        assert_eq!(s("+-+-").to_string(), "+-+-");
    }

    #[test]
    fn k3_values() {
        let g = k3_geometry();
        assert_eq!(g.h_coeffs, vec![r(1, 9), r(-2, 9), r(-2, 9)]);
        assert_eq!(g.h_norm_sq, r(1, 9));
        assert_eq!(g.c_norm_sq, r(8, 9));
        assert_eq!(g.same_pillar_c_inner, r(1, 10));
        assert_eq!(g.cross_h_inner, r(-1, 45));
        assert_eq!(g.cross_pillar_c_inners, (r(1, 4), r(-1, 5)));
    }

    #[test]
    fn k1_values() {
        let g = k1_geometry(2).unwrap();
        assert_eq!(g.cross_pillar_c_inners, (r(1, 6), r(-1, 3)));
        assert_eq!(g.cross_h_inner, r(1, 15));
        assert_eq!(k1_geometry(3).unwrap().cross_pillar_c_inners, (r(1, 12), r(-1, 4)));
        assert!(k1_geometry(1).is_err());
    }

    #[test]
    fn complete_base_has_no_pillars() {
        let a = SeidelMatrix::from_graph(&Graph::complete(4));
        let e = EquiangularSet::new(ExactScalar::Q(r(1, 5)), a).unwrap();
        let b = KBase::new(&e, vec![0, 1, 2, 3], vec![false; 4]).unwrap();
        let d = decompose(&e, &b);
        assert!(d.pillars.is_empty());
        assert!(KBase::new(&e, vec![0, 1], vec![true, false]).is_err());
    }
}
