//! Upper bounds on equiangular sets and the exact searches behind them.

mod coexist;
mod lemmens;
mod neumann;
mod table2;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{ExactScalar, QuadExt, Rational, Scalar};

pub use coexist::{coexistence_check, pillar_coexistence_bound, CoexistenceInstance, CoexistenceResult};
pub use lemmens::{
    k3_bound, k4_bound, k5_bound, pillar52_rank_bound, Pillar52Report, FOUR_ONE_SECOND_PILLAR_CAP, FIVE_ONE_CAP,
    SIX_BASE_INDEPENDENT_CAP, SIX_BASE_ONE_ADJACENT_CAP, SIX_BASE_TWO_ADJACENT_CAP,
};
pub use neumann::{neumann_candidates, neumann_candidates_for, neumann_restriction, NeumannCandidate, NeumannRestriction};
pub use table2::{
    degree_class_cap, single_variable_cap, table2, table2_row, two_31_pillar_search, Table2, Table2Constraint, Table2Row,
    TwoPillarInstance, CLASS_SIZES,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("{0}")]
    Precondition(String),
    #[error("component {component:?} has spectral radius above 2")]
    RadiusAboveTwo { component: Vec<usize> },
    #[error("vertices {0:?} form a 3-clique")]
    Triangle([usize; 3]),
}

/// A bound value: an integer, or a formula when an input is left symbolic.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(untagged)]
pub enum BoundValue {
    Int(u64),
    Formula(String),
}

/// Outcome of a bound computation with the inputs and enough data to re-check it.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub value: BoundValue,
    pub inputs: BTreeMap<String, String>,
    pub certificate: serde_json::Value,
}

impl BoundReport {
    pub(crate) fn new(name: &str, value: BoundValue, inputs: &[(&str, String)], certificate: serde_json::Value) -> Self {
        BoundReport {
            name: name.to_string(),
            value,
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            certificate,
        }
    }

    pub fn int(&self) -> Option<u64> {
        match self.value {
            BoundValue::Int(v) => Some(v),
            BoundValue::Formula(_) => None,
        }
    }
}

/// `r(r+1)/2`.
pub fn gerzon_bound(r: u64) -> u64 {
    r * (r + 1) / 2
}

/// Squared Welch bound `(M − r)/(r(M − 1))` for `M` lines in rank `r`.
pub fn welch_bound(m: u64, r: u64) -> Result<Rational, BoundError> {
    if r == 0 || m <= r {
        return Err(BoundError::Precondition(format!("need M > r >= 1, got M = {m}, r = {r}")));
    }
    Ok(Rational::new((m - r) as i64, (r * (m - 1)) as i64))
}

/// `⌊r(1 − α²)/(1 − rα²)⌋`, valid when `r < 1/α²`.
pub fn relative_bound(r: u64, alpha: &ExactScalar) -> Result<u64, BoundError> {
    let a2 = match alpha.square() {
        ExactScalar::Q(q) => QuadExt::rational(q, 2).expect("2 is square-free"),
        ExactScalar::Quad(q) => q,
    };
    let rr = Rational::from_int(r as i64);
    let one = a2.one_like();
    let den = &one - &a2.scale(&rr);
    if den.sign() <= 0 {
        return Err(BoundError::Precondition(format!("relative bound needs r < 1/alpha^2 (r = {r}, alpha^2 = {a2})")));
    }
    let v = &(&one - &a2).scale(&rr) / &den;
    Ok(v.floor().try_into().expect("bound fits in u64"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_bounds() {
        assert_eq!(gerzon_bound(7), 28);
        assert_eq!(gerzon_bound(23), 276);
        assert_eq!(gerzon_bound(1), 1);
        assert_eq!(welch_bound(18, 9).unwrap(), Rational::new(1, 17));
        assert_eq!(welch_bound(28, 7).unwrap(), Rational::new(1, 9));
        assert_eq!(welch_bound(6, 5).unwrap(), Rational::new(1, 25));
        assert!(welch_bound(5, 5).is_err());
    }

    #[test]
    fn relative_examples() {
        let q = |a, b| ExactScalar::Q(Rational::new(a, b));
        assert_eq!(relative_bound(9, &q(1, 7)).unwrap(), 10);
        assert_eq!(relative_bound(9, &q(1, 5)).unwrap(), 13);
        assert_eq!(relative_bound(2, &q(1, 3)).unwrap(), 2);
        assert!(relative_bound(9, &q(1, 3)).is_err());
        let s17 = ExactScalar::Quad(QuadExt::inv_sqrt(17).unwrap());
        // 8·(16/17)/(9/17)
        assert_eq!(relative_bound(8, &s17).unwrap(), 14);
        // α = (2√2 − 1)/7: α² = (9 − 4√2)/49, bound 8(1 − α²)/(1 − 8α²) ≈ 16.4
        let irr = ExactScalar::Quad(QuadExt::new(Rational::new(-1, 7), Rational::new(2, 7), 2).unwrap());
        assert_eq!(relative_bound(8, &irr).unwrap(), 16);
    }
}
