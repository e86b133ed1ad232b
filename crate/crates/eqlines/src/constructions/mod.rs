//! Explicit equiangular systems: the 276 lines from the Witt design, Paley conference
//! frames, simplex bases, and the block family of (4,2)-pillar Gram matrices.

mod conference;
mod golay;
mod witt;

use thiserror::Error;

use crate::exactnum::{ExactScalar, Rational, Scalar};
use crate::seidel::{EquiangularSet, Graph, SeidelError, SeidelMatrix};
use crate::linalg::SymMatrix;

pub use conference::{conference_etf, inv_sqrt, paley_conference, ConferenceMatrix};
pub use golay::{golay_codewords, golay_octads, Octad, OctadSystem, GOLAY_GENERATOR_POLY, WITT_BASE_OCTADS};
pub use witt::{dot, v_k, w_sigma, witt276, witt276_base_and_pillars, WittPillars, WittSystem, WITT_NORM_SQ};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("Paley construction needs a prime q = 1 (mod 4), got {0}")]
    BadPaley(u64),
    #[error("not a conference matrix: {0}")]
    NotConference(String),
    #[error("simplex size K = {k} outside 2 <= K <= 1/alpha + 1 for alpha = {alpha}")]
    BadSimplex { k: usize, alpha: String },
    #[error("block family needs ell >= 1")]
    BadEll,
    #[error(transparent)]
    Seidel(#[from] SeidelError),
}

/// `K` vectors with Gram matrix `(1+α)I − αJ` (Seidel graph complete).
pub fn simplex_base(k: usize, alpha: &ExactScalar) -> Result<EquiangularSet, ConstructionError> {
    let bad = || ConstructionError::BadSimplex { k, alpha: alpha.to_string() };
    if k < 2 {
        return Err(bad());
    }
    // (K − 1)·α ≤ 1
    let over = match alpha {
        ExactScalar::Q(a) => (&(a * &Rational::from_int(k as i64 - 1)) - &Rational::one()).signum(),
        ExactScalar::Quad(a) => {
            let t = a.scale(&Rational::from_int(k as i64 - 1));
            (&t - &t.one_like()).sign()
        }
    };
    if over > 0 {
        return Err(bad());
    }
    Ok(EquiangularSet::new(alpha.clone(), SeidelMatrix::from_graph(&Graph::complete(k)))?)
}

/// The `3ℓ × 3ℓ` matrix with diagonal blocks `B = (18/13)I − (5/13)J₃` and `(1/13)J₃` elsewhere.
pub fn block_52_family(ell: usize) -> Result<SymMatrix<Rational>, ConstructionError> {
    if ell == 0 {
        return Err(ConstructionError::BadEll);
    }
    Ok(SymMatrix::from_fn(3 * ell, |i, j| {
        if i == j {
            Rational::one()
        } else if i / 3 == j / 3 {
            Rational::new(-5, 13)
        } else {
            Rational::new(1, 13)
        }
    }))
}

/// Angle-1/5 lines with the same sign pattern: Seidel graph `ℓ` disjoint triangles.
pub fn block_52_lines(ell: usize) -> Result<EquiangularSet, ConstructionError> {
    if ell == 0 {
        return Err(ConstructionError::BadEll);
    }
    let edges: Vec<(usize, usize)> = (0..ell).flat_map(|b| [(3 * b, 3 * b + 1), (3 * b, 3 * b + 2), (3 * b + 1, 3 * b + 2)]).collect();
    let g = Graph::from_edges(3 * ell, &edges);
    Ok(EquiangularSet::new(ExactScalar::Q(Rational::new(1, 5)), SeidelMatrix::from_graph(&g))?)
}
