//! `M*(r)`: the largest equiangular set of rank exactly `r` over all angles.
//!
//! More than `2r − 2` lines force `1/α` to be an odd integer, or `1/α = √(2r − 1)` when `r` is
//! odd. The relative bound caps every odd `1/α = k` with `k² > r` and falls to `r` for large
//! `k`, so only finitely many angles need a saturation search.

use serde::Serialize;

use super::{inv_sqrt_angle, m_alpha, SaturateError};
use crate::bounds::{neumann_restriction, relative_bound};
use crate::exactnum::{is_square_free, ExactScalar, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum AngleMethod {
    /// `M_α(r)` computed by saturation.
    Saturated { value: usize },
    /// Excluded: the relative bound is at most the best value found.
    RelativeBound,
    /// The relative bound is `r` here and for every smaller angle, so nothing beyond a basis.
    AtMostRank,
    /// Rank too large for the saturation search; the angle stays open.
    NotChecked,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AngleAudit {
    pub alpha: ExactScalar,
    /// `None` when `r ≥ 1/α²`.
    pub relative_bound: Option<u64>,
    #[serde(flatten)]
    pub method: AngleMethod,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MStarReport {
    pub r: usize,
    pub value: Option<usize>,
    /// Best value realized by a saturation search.
    pub best_found: usize,
    pub certified: bool,
    /// Sets with more than this many lines are limited to the audited angles.
    pub neumann_threshold: usize,
    pub audit: Vec<AngleAudit>,
    pub angles_not_ruled_out: Vec<String>,
}

/// With `full_audit`, every angle whose relative bound exceeds `r` is saturated, not only those
/// that could beat the running best.
pub fn m_star(r: usize, full_audit: bool) -> Result<MStarReport, SaturateError> {
    if r < 2 {
        return Err(SaturateError::BadRank(r));
    }
    let searchable = r <= 10;
    let threshold = 2 * r - 2;
    let rel = |a: &ExactScalar| relative_bound(r as u64, a).ok();
    let mut audit: Vec<AngleAudit> = Vec::new();
    let mut best = 0usize;
    let saturate = |a: ExactScalar, best: &mut usize| -> Result<AngleAudit, SaturateError> {
        let rb = rel(&a);
        let method = if searchable {
            let v = m_alpha(r, &a)?.value;
            *best = (*best).max(v);
            AngleMethod::Saturated { value: v }
        } else {
            AngleMethod::NotChecked
        };
        Ok(AngleAudit { alpha: a, relative_bound: rb, method })
    };

    audit.push(saturate(ExactScalar::Q(Rational::new(1, 3)), &mut best)?);
    let irrational = r > 3
        && neumann_restriction(r as u64, threshold as u64 + 1).is_ok_and(|n| n.sqrt_reciprocal_square.is_some())
        && is_square_free(2 * r as u64 - 1);
    if irrational {
        audit.push(saturate(inv_sqrt_angle(2 * r as u64 - 1), &mut best)?);
    }
    let mut k = 5i64;
    loop {
        let a = ExactScalar::Q(Rational::new(1, k));
        let rb = rel(&a);
        if rb.is_some_and(|v| v as usize <= r) {
            audit.push(AngleAudit { alpha: a, relative_bound: rb, method: AngleMethod::AtMostRank });
            break;
        }
        let excluded = rb.is_some_and(|v| v as usize <= best);
        if excluded && !(full_audit && searchable) {
            audit.push(AngleAudit { alpha: a, relative_bound: rb, method: AngleMethod::RelativeBound });
        } else {
            audit.push(saturate(a, &mut best)?);
        }
        k += 2;
    }
    let angles_not_ruled_out: Vec<String> =
        audit.iter().filter(|a| a.method == AngleMethod::NotChecked).map(|a| a.alpha.to_string()).collect();
    // angles outside the list only reach 2r − 2 lines
    let certified = angles_not_ruled_out.is_empty() && best >= threshold;
    Ok(MStarReport {
        r,
        value: certified.then_some(best),
        best_found: best,
        certified,
        neumann_threshold: threshold,
        audit,
        angles_not_ruled_out,
    })
}
