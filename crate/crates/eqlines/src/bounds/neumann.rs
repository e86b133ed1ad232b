//! Angle restrictions from the Seidel spectrum when there are many lines for the rank.

use serde::Serialize;

use super::BoundError;
use crate::exactnum::{QuadExt, Rational};

/// Which angles survive when `count > 2r − 2` lines have rank `r`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NeumannRestriction {
    pub r: u64,
    pub count: u64,
    /// Whether `count > 2r − 2`, so that the restriction applies at all.
    pub applies: bool,
    /// `1/α` must be an odd integer (or the irrational value below).
    pub odd_integer_reciprocals: bool,
    /// `2r − 1` when `1/α = √(2r − 1)` is also possible.
    pub sqrt_reciprocal_square: Option<u64>,
    /// Order `2r` of the symmetric conference matrix behind the irrational case.
    pub conference_order: u64,
    /// A symmetric conference matrix needs order `≡ 2 (mod 4)`.
    pub conference_order_ok: bool,
}

pub fn neumann_restriction(r: u64, count: u64) -> Result<NeumannRestriction, BoundError> {
    if r <= 3 {
        return Err(BoundError::Precondition(format!("restriction needs r > 3, got {r}")));
    }
    let applies = count > 2 * r - 2;
    let conference_order = 2 * r;
    let conference_order_ok = conference_order % 4 == 2;
    Ok(NeumannRestriction {
        r,
        count,
        applies,
        odd_integer_reciprocals: applies,
        sqrt_reciprocal_square: (applies && conference_order_ok).then_some(2 * r - 1),
        conference_order,
        conference_order_ok,
    })
}

/// Integer data for `char A = (x² − c₁x + c₂)^m (x² − c₃x + c₄)` with an irrational root pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NeumannCandidate {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub c4: i64,
    /// `c₁² − 4c₂`.
    pub delta: i64,
    /// The smaller root `(c₁ − √Δ)/2`, so `α = −1/a`.
    pub a: QuadExt,
    pub a_star: QuadExt,
}

fn is_square(n: i64) -> bool {
    n >= 0 && {
        let r = (n as f64).sqrt() as i64;
        (r.saturating_sub(1)..=r + 1).any(|k| k * k == n)
    }
}

/// `n = f²·d` with `d` square-free.
fn split_square(n: u64) -> (u64, u64) {
    let (mut f, mut d) = (1, n);
    let mut p = 2;
    while p * p <= d {
        while d % (p * p) == 0 {
            d /= p * p;
            f *= p;
        }
        p += 1;
    }
    (f, d)
}

/// Candidates for `size` lines whose Seidel matrix has an irrational eigenvalue of
/// multiplicity `mult`, the remaining two eigenvalues forming one more quadratic factor.
pub fn neumann_candidates_for(size: i64, mult: i64) -> Result<Vec<NeumannCandidate>, BoundError> {
    if mult < 1 || size != 2 * mult + 2 {
        return Err(BoundError::Precondition(format!("need size = 2*mult + 2, got size {size}, mult {mult}")));
    }
    let (n, m) = (size, mult);
    let tr2 = n * (n - 1);
    // c₂ < c₁²/4 and c₃² ≥ 4c₄ together force c₁² < 2n(n − 1)/(m² + m)
    let c1_max = ((2 * tr2) as f64 / (m * m + m) as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for c1 in -c1_max..=c1_max {
        let lo = ((m * m + 2 * m) * c1 * c1 - 2 * tr2).div_euclid(4 * m) - 1;
        let hi = (c1 * c1).div_euclid(4) + 1;
        for c2 in lo..=hi {
            let c3 = -m * c1;
            // tr A² = m(c₁² − 2c₂) + c₃² − 2c₄
            let twice_c4 = m * (c1 * c1 - 2 * c2) + c3 * c3 - tr2;
            if twice_c4 % 2 != 0 {
                continue;
            }
            let c4 = twice_c4 / 2;
            let delta = c1 * c1 - 4 * c2;
            if delta <= 0 || c3 * c3 < 4 * c4 || is_square(delta) {
                continue;
            }
            let (f, d) = split_square(delta as u64);
            let half_c1 = Rational::new(c1, 2);
            let half_f = Rational::new(f as i64, 2);
            let a = QuadExt::new(half_c1.clone(), -&half_f, d).expect("square-free part");
            let a_star = QuadExt::new(half_c1, half_f, d).expect("square-free part");
            out.push(NeumannCandidate { c1, c2, c3, c4, delta, a, a_star });
        }
    }
    out.sort_by_key(|c| (c.c1, c.c2));
    Ok(out)
}

/// The 14-line, rank-8 case: multiplicity 6.
pub fn neumann_candidates() -> Vec<NeumannCandidate> {
    neumann_candidates_for(14, 6).expect("valid signature")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restriction_cases() {
        let even = neumann_restriction(10, 19).unwrap();
        assert!(even.applies && even.sqrt_reciprocal_square.is_none());
        let odd = neumann_restriction(9, 17).unwrap();
        assert_eq!(odd.sqrt_reciprocal_square, Some(17));
        assert!(!neumann_restriction(8, 14).unwrap().applies);
        assert!(neumann_restriction(3, 10).is_err());
    }

    #[test]
    fn split() {
        assert_eq!(split_square(72), (6, 2));
        assert_eq!(split_square(17), (1, 17));
        assert!(is_square(49) && !is_square(48));
    }
}
