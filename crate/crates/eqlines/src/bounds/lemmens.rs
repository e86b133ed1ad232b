//! Angle `1/5` bounds split by base size `K = 3, 4, 5`.

use serde::Serialize;
use serde_json::json;

use super::{pillar_coexistence_bound, table2, BoundError, BoundReport, BoundValue};
use crate::exactnum::Rational;
use crate::linalg::{psd_check, rank, SymMatrix, Verdict};
use crate::seidel::Graph;

/// Six-base sets with two pillars each holding an adjacent pair have at most this many vectors.
pub const SIX_BASE_TWO_ADJACENT_CAP: u64 = 276;
/// Six-base sets where exactly one pillar holds an adjacent pair.
pub const SIX_BASE_ONE_ADJACENT_CAP: u64 = 222;
/// Six-base sets whose pillars are all independent.
pub const SIX_BASE_INDEPENDENT_CAP: u64 = 258;
/// Cap on `|X(5,1)|` for base size 5.
pub const FIVE_ONE_CAP: u64 = 15;
/// Quoted without derivation: with two nonempty `(4,1)` pillars a third holds at most 25 vectors.
pub const FOUR_ONE_SECOND_PILLAR_CAP: u64 = 25;

/// `|X| ≤ max{3 + 3·P, r + 6}` where `P` is the two-`(3,1)`-pillar cap (54).
pub fn k3_bound(r: u64) -> Result<BoundReport, BoundError> {
    if r < 3 {
        return Err(BoundError::Precondition(format!("K = 3 needs r >= 3, got {r}")));
    }
    let p = table2().max_m as u64;
    let two_big = 3 + 3 * p;
    let one_big = 3 + (r - 3) + 3 + 3;
    Ok(BoundReport::new(
        "k3",
        BoundValue::Int(two_big.max(one_big)),
        &[("alpha", "1/5".into()), ("K", "3".into()), ("r", r.to_string())],
        json!({
            "pillar_cap": p,
            "two_big_pillars": two_big,
            "one_big_pillar": one_big,
            "branch": if two_big >= one_big { "two_big_pillars" } else { "one_big_pillar" },
        }),
    ))
}

/// `(4,1)` pillars hold at most `max{4·24, r − 1}`; with `s` the two-distance bound for a
/// `(4,2)` pillar the whole set has at most `100 + 3s`.
pub fn k4_bound(r: u64, s_value: Option<u64>) -> Result<BoundReport, BoundError> {
    if r < 4 {
        return Err(BoundError::Precondition(format!("K = 4 needs r >= 4, got {r}")));
    }
    let per_pillar = pillar_coexistence_bound(2)?.int().expect("integer bound");
    let sector = (4 * per_pillar).max(r - 1);
    let base_and_sector = 4 + 4 * per_pillar;
    let value = match s_value {
        Some(s) => BoundValue::Int(base_and_sector + 3 * s),
        None => BoundValue::Formula(format!("{base_and_sector} + 3*s({}, 1/13, -5/13)", r - 4)),
    };
    let mut inputs = vec![("alpha", "1/5".to_string()), ("K", "4".to_string()), ("r", r.to_string())];
    if let Some(s) = s_value {
        inputs.push(("s_value", s.to_string()));
    }
    Ok(BoundReport::new(
        "k4",
        value,
        &inputs,
        json!({
            "per_pillar_cap": per_pillar,
            "four_one_sector": sector,
            "s_lower_bound": r - 4,
            "second_pillar_cap_unverified": FOUR_ONE_SECOND_PILLAR_CAP,
            "single_extra_vector_when": format!("r - 4 > {FOUR_ONE_SECOND_PILLAR_CAP}"),
            "single_extra_vector_applies": r - 4 > FOUR_ONE_SECOND_PILLAR_CAP,
        }),
    ))
}

/// `|X| ≤ max{272, ⌊4r/3⌋ + 12}`.
pub fn k5_bound(r: u64) -> Result<BoundReport, BoundError> {
    if r < 5 {
        return Err(BoundError::Precondition(format!("K = 5 needs r >= 5, got {r}")));
    }
    let two_pillars = SIX_BASE_INDEPENDENT_CAP - 1 + FIVE_ONE_CAP;
    // 5 + 15 + (4/3)(r − 6), floored
    let one_pillar = 4 * r / 3 + 12;
    Ok(BoundReport::new(
        "k5",
        BoundValue::Int(two_pillars.max(one_pillar)),
        &[("alpha", "1/5".into()), ("K", "5".into()), ("r", r.to_string())],
        json!({
            "two_or_more_52_pillars": two_pillars,
            "at_most_one_52_pillar": one_pillar,
            "constants": {
                "two_adjacent": SIX_BASE_TWO_ADJACENT_CAP,
                "one_adjacent": SIX_BASE_ONE_ADJACENT_CAP,
                "independent": SIX_BASE_INDEPENDENT_CAP,
                "five_one": FIVE_ONE_CAP,
            },
        }),
    ))
}

/// Rank data for the Seidel graph of a `(5,2)` pillar.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Pillar52Report {
    pub components: Vec<Vec<usize>>,
    /// Indices into `components` of those with spectral radius exactly 2.
    pub radius_two: Vec<usize>,
    pub ell: usize,
    pub nullity: usize,
    pub d: usize,
    pub m: usize,
    /// Rank of `(1/5)J + (4/5)I − (2/5)A` by direct elimination.
    pub rank_direct: usize,
    /// `3m ≤ 4(d − 1)`.
    pub bound_ok: bool,
}

fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for (u, v) in g.edges() {
        if let Some(w) = g.neighbors(u).and(g.neighbors(v)).iter().find(|&w| w > v) {
            return Some([u, v, w]);
        }
    }
    None
}

pub fn pillar52_rank_bound(g: &Graph) -> Result<Pillar52Report, BoundError> {
    let m = g.vertex_count();
    if m == 0 {
        return Err(BoundError::Precondition("empty pillar".into()));
    }
    if let Some(t) = find_triangle(g) {
        return Err(BoundError::Triangle(t));
    }
    let components = g.components();
    let mut radius_two = Vec::new();
    for (k, comp) in components.iter().enumerate() {
        let h = g.induced(comp);
        let two_minus_a = SymMatrix::from_fn(comp.len(), |i, j| {
            if i == j {
                Rational::from_int(2)
            } else if h.has_edge(i, j) {
                Rational::from_int(-1)
            } else {
                Rational::zero()
            }
        });
        match psd_check(&two_minus_a).verdict {
            Verdict::Indefinite => return Err(BoundError::RadiusAboveTwo { component: comp.clone() }),
            Verdict::PositiveSemidefiniteSingular => radius_two.push(k),
            Verdict::PositiveDefinite => {}
        }
    }
    let ell = radius_two.len();
    let nullity = ell.saturating_sub(1);
    let d = m - nullity;
    let gram = SymMatrix::from_fn(m, |i, j| {
        if i == j {
            Rational::one()
        } else if g.has_edge(i, j) {
            Rational::new(-1, 5)
        } else {
            Rational::new(1, 5)
        }
    });
    let rank_direct = rank(&gram);
    Ok(Pillar52Report { components, radius_two, ell, nullity, d, m, rank_direct, bound_ok: d >= 1 && 3 * m + 4 <= 4 * d })
}
