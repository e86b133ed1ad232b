//! Two `(K,1)` pillars side by side, `α = 1/(2n+1)`, `K = n + 2`: how large can one pillar be
//! when the other holds two vectors `u₁, u₂`?

use serde::Serialize;
use serde_json::json;

use super::{BoundError, BoundReport, BoundValue};
use crate::exactnum::Rational;
use crate::par;

/// `ell[0..4] = (ℓ₁₁, ℓ₁₂, ℓ₂₁, ℓ₂₂)`: how many vectors `x` of the big pillar have
/// `(⟨x,u₁⟩, ⟨x,u₂⟩) = (α,α), (α,−α), (−α,α), (−α,−α)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CoexistenceInstance {
    pub n: u64,
    pub ell: [u64; 4],
}

impl CoexistenceInstance {
    pub fn size(&self) -> u64 {
        self.ell.iter().sum()
    }

    /// `ℓ₂₂ = 0`, `ℓ₁₂ = ℓ₂₁ = t`, `ℓ₁₁ = s`.
    pub fn reduced(n: u64, s: u64, t: u64) -> Self {
        CoexistenceInstance { n, ell: [s, t, t, 0] }
    }
}

/// The 2×2 Schur complement `M` of the normalized `c`-Gram matrix and its feasibility.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CoexistenceResult {
    pub feasible: bool,
    pub m: [[Rational; 2]; 2],
    pub trace: Rational,
    pub det: Rational,
}

pub fn coexistence_check(inst: &CoexistenceInstance) -> CoexistenceResult {
    let n = inst.n as i64;
    let [l11, l12, l21, l22] = inst.ell.map(|v| Rational::from_int(v as i64));
    // entries of v₁, v₂ are 1/(n(n+1)) or −1/(n+1)
    let pp = Rational::new(1, n * n * (n + 1) * (n + 1));
    let mm = Rational::new(1, (n + 1) * (n + 1));
    let pm = Rational::new(-1, n * (n + 1) * (n + 1));
    let v11 = &(&(&l11 + &l12) * &pp) + &(&(&l21 + &l22) * &mm);
    let v22 = &(&(&l11 + &l21) * &pp) + &(&(&l12 + &l22) * &mm);
    let v12 = &(&(&l11 * &pp) + &(&(&l12 + &l21) * &pm)) + &(&l22 * &mm);
    let one = Rational::one();
    let m = [[&one - &v11, -&v12], [-&v12, &one - &v22]];
    let trace = &m[0][0] + &m[1][1];
    let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    CoexistenceResult { feasible: trace.signum() >= 0 && det.signum() >= 0, m, trace, det }
}

fn reduced_feasible(n: i128, s: i128, t: i128) -> bool {
    let q = n * n * (n + 1) * (n + 1);
    q - s - (n * n + 1) * t >= 0 && (n * n - t) * (q - 2 * s - (n - 1) * (n - 1) * t) >= 0
}

/// Largest size of a `(K,1)` pillar next to one holding at least two vectors, by exhaustive
/// integer scan of `max s + 2t` over the reduced region.
pub fn pillar_coexistence_bound(n: u64) -> Result<BoundReport, BoundError> {
    if n < 2 {
        return Err(BoundError::Precondition(format!("coexistence bound needs n >= 2, got {n}")));
    }
    let ni = n as i128;
    let q = ni * ni * (ni + 1) * (ni + 1);
    // trace row forces s + (n²+1)t ≤ n²(n+1)²
    let t_max = q / (ni * ni + 1);
    let per_t: Vec<(i128, Vec<i128>)> = par::map_range(0..t_max as usize + 1, |t| {
        let t = t as i128;
        let feasible: Vec<i128> = (0..=q).filter(|&s| reduced_feasible(ni, s, t)).collect();
        (t, feasible)
    });
    let mut best = -1i128;
    let mut maximizers: Vec<(u64, u64)> = Vec::new();
    for (t, ss) in &per_t {
        if let Some(&s) = ss.last() {
            let v = s + 2 * t;
            if v > best {
                best = v;
                maximizers.clear();
            }
            if v == best {
                maximizers.push((s as u64, *t as u64));
            }
        }
    }
    // the vertex with the most mixed vectors
    let &(s, t) = maximizers.last().expect("origin is feasible");
    let check = coexistence_check(&CoexistenceInstance::reduced(n, s, t));
    assert!(check.feasible, "certificate fails the unreduced trace/determinant test");
    Ok(BoundReport::new(
        "pillar_coexistence",
        BoundValue::Int(best as u64),
        &[("n", n.to_string()), ("alpha", format!("1/{}", 2 * n + 1)), ("K", (n + 2).to_string())],
        json!({
            "s": s,
            "t": t,
            "ell": [s, t, t, 0],
            "maximizers": maximizers,
            "trace": check.trace,
            "det": check.det,
        }),
    ))
}
