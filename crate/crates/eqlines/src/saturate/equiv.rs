//! Switching equivalence of two line systems, and the uniqueness of the 14 lines at 1/3 in rank 8.

use serde::Serialize;

use super::{m_alpha, SaturateError};
use crate::exactnum::{ExactScalar, Rational};
use crate::seidel::canon::{canonical_form, MAX_CANON_VERTICES};
use crate::seidel::{normalizing_flips, SeidelMatrix, SwitchingOp};

/// Switch `root` to be isolated, then drop it; `labels[k]` is the original vertex of `k`.
fn descendant(a: &SeidelMatrix, root: usize) -> (crate::seidel::Graph, Vec<usize>) {
    let g = SwitchingOp::flips(a.order(), normalizing_flips(a, root)).apply(a).graph();
    let labels: Vec<usize> = (0..a.order()).filter(|&v| v != root).collect();
    (g.induced(&labels), labels)
}

/// An operation `op` with `op.apply(b) == a`, if the two Seidel matrices are switching equivalent.
///
/// Switching `a` to isolate vertex 0 and `b` to isolate some vertex `j`, then deleting that
/// vertex, gives graphs that are isomorphic for some `j` exactly when the systems are
/// equivalent; the isomorphism fixes the permutation and the signs follow from the first row.
pub fn switching_equivalence(a: &SeidelMatrix, b: &SeidelMatrix) -> Result<Option<SwitchingOp>, SaturateError> {
    let n = a.order();
    if n != b.order() {
        return Err(SaturateError::SizeMismatch(n, b.order()));
    }
    if n == 0 {
        return Ok(Some(SwitchingOp::identity(0)));
    }
    if n - 1 > MAX_CANON_VERTICES {
        return Err(SaturateError::TooLarge(n));
    }
    let (ga, la) = descendant(a, 0);
    let ca = canonical_form(&ga);
    for j in 0..n {
        let (gb, lb) = descendant(b, j);
        let cb = canonical_form(&gb);
        if cb.code != ca.code {
            continue;
        }
        // vertex la[ca.perm[k]] of a corresponds to vertex lb[cb.perm[k]] of b
        let mut p = vec![0; n];
        p[0] = j;
        for k in 0..n - 1 {
            p[la[ca.perm[k]]] = lb[cb.perm[k]];
        }
        // s[p[i]]·s[p[0]]·b[p[0]][p[i]] = a[0][i] with s[p[0]] = +1
        let flips: Vec<usize> = (1..n).filter(|&i| a.get(0, i) != b.get(p[0], p[i])).map(|i| p[i]).collect();
        let op = SwitchingOp { sign_flips: SwitchingOp::flips(n, flips).sign_flips, permutation: p };
        if op.apply(b) == *a {
            return Ok(Some(op));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    /// Number of seeds whose saturation reaches 14.
    pub maxima: usize,
    /// Seed graphs (graph6) of the maximal outcomes.
    pub seeds: Vec<String>,
    /// `witnesses[k]` maps maximum `k + 1` onto maximum 0.
    pub witnesses: Vec<SwitchingOp>,
    pub all_equivalent: bool,
}

pub fn uniqueness_check_8_third() -> Result<UniquenessReport, SaturateError> {
    let res = m_alpha(8, &ExactScalar::Q(Rational::new(1, 3)))?;
    let systems: Vec<SeidelMatrix> =
        res.best.iter().map(|b| SeidelMatrix::from_rows(&b.realized.seidel)).collect::<Result<_, _>>()?;
    let mut witnesses = Vec::new();
    let mut all_equivalent = true;
    for s in &systems[1..] {
        match switching_equivalence(&systems[0], s)? {
            Some(op) => witnesses.push(op),
            None => all_equivalent = false,
        }
    }
    Ok(UniquenessReport {
        maxima: systems.len(),
        seeds: res.best.iter().map(|b| b.seed.graph6.clone()).collect(),
        witnesses,
        all_equivalent,
    })
}
