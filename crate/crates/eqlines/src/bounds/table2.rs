//! `α = 1/5`, `K = 3`: a `(3,1)` pillar `x̄` next to a `(3,1)` pillar `ū` of four vectors.
//!
//! Vectors of `x̄` are classified by a 4-bit string `B = b₁b₂b₃b₄` (`bᵢ = 1` when the
//! vector has inner product `−1/5` with `uᵢ`), and `t_B` counts each class. Feasibility of a
//! count vector is positive semidefiniteness of the 4×4 Schur complement `M`, evaluated
//! in closed form from `t` alone.
//!
//! Every search below relies on heredity: dropping vectors from a feasible configuration
//! keeps it feasible, so a scan may stop at the first infeasible value.

use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;
use serde_json::json;

use super::{BoundReport, BoundValue};
use crate::exactnum::Rational;
use crate::linalg::{psd_by_minors_i128, SymMatrix};
use crate::par;

/// `|B₄,ᵢ|` for `i = 0..=4`.
pub const CLASS_SIZES: [usize; 5] = [1, 4, 6, 4, 1];

const ALL_ONES: usize = 0b1111;

/// Counts `t_B`, indexed so that the binary spelling of the index is `B`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct TwoPillarInstance {
    pub t: [u32; 16],
}

fn bit(b: usize, i: usize) -> usize {
    (b >> (3 - i)) & 1
}

fn class_members(i: usize) -> Vec<usize> {
    (0..16).filter(|b: &usize| b.count_ones() as usize == i).collect()
}

fn label(b: usize) -> String {
    format!("{b:04b}")
}

impl TwoPillarInstance {
    pub fn single(b: usize, v: u32) -> Self {
        let mut t = [0; 16];
        t[b] = v;
        TwoPillarInstance { t }
    }

    /// `n = Σ t_B`.
    pub fn size(&self) -> u64 {
        self.t.iter().map(|&v| v as u64).sum()
    }

    /// `400·⟨vᵢ, vⱼ⟩`.
    fn v_inner_400(&self, i: usize, j: usize) -> i128 {
        (0..16)
            .map(|b| {
                let w = match bit(b, i) + bit(b, j) {
                    0 => 25,
                    1 => -20,
                    _ => 16,
                };
                w * self.t[b] as i128
            })
            .sum()
    }

    /// `20·wᵢ`.
    fn w_20(&self, i: usize) -> i128 {
        (0..16).map(|b| if bit(b, i) == 0 { 5 } else { -4 } * self.t[b] as i128).sum()
    }

    pub fn v_inner(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.v_inner_400(i, j) as i64, 400)
    }

    pub fn w(&self, i: usize) -> Rational {
        Rational::new(self.w_20(i) as i64, 20)
    }

    /// `M = (9/10)I + (1/10)J − (10/9)⟨vᵢ,vⱼ⟩ + (10/(9(9+n)))wᵢwⱼ`.
    pub fn m_matrix(&self) -> SymMatrix<Rational> {
        let n = self.size() as i64;
        let c1 = Rational::new(10, 9);
        let c2 = Rational::new(10, 9 * (9 + n));
        SymMatrix::from_fn(4, |i, j| {
            let base = if i == j { Rational::one() } else { Rational::new(1, 10) };
            &(&base - &(&c1 * &self.v_inner(i, j))) + &(&c2 * &(&self.w(i) * &self.w(j)))
        })
    }

    /// `360(9+n)·M`, an integer matrix.
    pub fn scaled_m(&self) -> Vec<Vec<i128>> {
        let t = 9 + self.size() as i128;
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let base = if i == j { 360 * t } else { 36 * t };
                        base - t * self.v_inner_400(i, j) + self.w_20(i) * self.w_20(j)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_feasible(&self) -> bool {
        psd_by_minors_i128(&self.scaled_m())
    }
}

/// Largest `v` with only `t_B = v` nonzero and `M ⪰ 0`.
pub fn single_variable_cap(b: usize) -> u32 {
    scan_up(|v| TwoPillarInstance::single(b, v))
}

/// Largest feasible `v` for a family that is hereditary in `v`.
fn scan_up(f: impl Fn(u32) -> TwoPillarInstance) -> u32 {
    let mut v = 0;
    while f(v + 1).is_feasible() {
        v += 1;
        assert!(v < 100_000, "scan did not terminate");
    }
    v
}

fn class_search(vars: &[usize], caps: &[u32], k: usize, cur: &mut TwoPillarInstance, best: &mut (u64, TwoPillarInstance)) {
    if k == vars.len() {
        if cur.size() > best.0 {
            *best = (cur.size(), *cur);
        }
        return;
    }
    for v in 0..=caps[k] {
        cur.t[vars[k]] = v;
        if !cur.is_feasible() {
            break;
        }
        class_search(vars, caps, k + 1, cur, best);
    }
    cur.t[vars[k]] = 0;
}

/// Maximum of `Σ_{B ∈ B₄,ᵢ} t_B` with all other counts zero, and a maximizer
/// (the first in lexicographic order of the class variables).
pub fn degree_class_cap(i: usize) -> (u32, TwoPillarInstance) {
    let vars = class_members(i);
    let caps: Vec<u32> = vars.iter().map(|&b| single_variable_cap(b)).collect();
    let mut best = (0, TwoPillarInstance::default());
    class_search(&vars, &caps, 0, &mut TwoPillarInstance::default(), &mut best);
    (best.0 as u32, best.1)
}

/// One line of the table: per-class caps `m₀..m₃` with `t₁₁₁₁` fixed, and the pillar bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Table2Row {
    pub t1111: u32,
    pub caps: [u32; 4],
    pub m_bound: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Table2 {
    /// Single-variable caps for `B₄,₀ .. B₄,₄`.
    pub single_caps: [u32; 5],
    /// Degree-class caps for `B₄,₁, B₄,₂, B₄,₃`.
    pub class_caps: [u32; 3],
    pub rows: Vec<Table2Row>,
    pub max_m: u32,
}

struct Caps {
    single: [u32; 5],
    class: [u32; 3],
}

fn caps() -> &'static Caps {
    static CAPS: OnceLock<Caps> = OnceLock::new();
    CAPS.get_or_init(|| {
        let single: Vec<u32> = par::map_range(0..5, |i| {
            let per: Vec<u32> = class_members(i).into_iter().map(single_variable_cap).collect();
            assert!(per.iter().all(|&c| c == per[0]), "caps within a degree class should agree");
            per[0]
        });
        let class: Vec<u32> = par::map_range(1..4, |i| degree_class_cap(i).0);
        Caps { single: single.try_into().unwrap(), class: class.try_into().unwrap() }
    })
}

/// Row for a fixed `t₁₁₁₁`; `None` when `t₁₁₁₁` alone is already infeasible.
pub fn table2_row(t1111: u32) -> Option<Table2Row> {
    if !TwoPillarInstance::single(ALL_ONES, t1111).is_feasible() {
        return None;
    }
    let c = caps();
    let mut m = [0u32; 4];
    for (i, slot) in m.iter_mut().enumerate() {
        let per: Vec<u32> = class_members(i)
            .into_iter()
            .map(|b| {
                scan_up(|v| {
                    let mut inst = TwoPillarInstance::single(ALL_ONES, t1111);
                    inst.t[b] = v;
                    inst
                })
            })
            .collect();
        assert!(per.iter().all(|&x| x == per[0]), "class members should agree");
        *slot = per[0];
    }
    let m_bound = m[0]
        + (CLASS_SIZES[1] as u32 * m[1]).min(c.class[0])
        + (CLASS_SIZES[2] as u32 * m[2]).min(c.class[1])
        + (CLASS_SIZES[3] as u32 * m[3]).min(c.class[2])
        + t1111;
    Some(Table2Row { t1111, caps: m, m_bound })
}

/// All rows `t₁₁₁₁ = 0 ..= cap`, with the caps they are built from.
pub fn table2() -> Table2 {
    let c = caps();
    let rows: Vec<Table2Row> =
        par::map_range(0..c.single[4] as usize + 1, |k| table2_row(k as u32).expect("t1111 within its cap"));
    let max_m = rows.iter().map(|r| r.m_bound).max().unwrap_or(0);
    Table2 { single_caps: c.single, class_caps: c.class, rows, max_m }
}

fn span(a: u32, b: u32) -> String {
    match b - a {
        0 => a.to_string(),
        1 => format!("{a}, {b}"),
        _ => format!("{a}--{b}"),
    }
}

impl Table2 {
    /// One line per `t₁₁₁₁`: `t1111 m0 m1 m2 m3 M`.
    pub fn rows_text(&self) -> String {
        let mut s = String::from("t1111 m0 m1 m2 m3 M\n");
        for r in &self.rows {
            let [a, b, c, d] = r.caps;
            writeln!(s, "{} {a} {b} {c} {d} {}", r.t1111, r.m_bound).unwrap();
        }
        s
    }

    /// Consecutive rows with equal caps merged, as `10, 11` or `16--19`.
    pub fn grouped_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{:>8} | {:>3} {:>3} {:>3} {:>3} | {:>8}", "t1111", "B40", "B41", "B42", "B43", "M").unwrap();
        let mut i = 0;
        while i < self.rows.len() {
            let mut j = i;
            while j + 1 < self.rows.len() && self.rows[j + 1].caps == self.rows[i].caps {
                j += 1;
            }
            let (a, b) = (&self.rows[i], &self.rows[j]);
            let ms = if (i..j).all(|k| self.rows[k + 1].m_bound == self.rows[k].m_bound + 1) {
                span(a.m_bound, b.m_bound)
            } else {
                self.rows[i..=j].iter().map(|r| r.m_bound.to_string()).collect::<Vec<_>>().join(", ")
            };
            let [c0, c1, c2, c3] = a.caps;
            writeln!(s, "{:>8} | {c0:>3} {c1:>3} {c2:>3} {c3:>3} | {ms:>8}", span(a.t1111, b.t1111)).unwrap();
            i = j + 1;
        }
        s
    }
}

/// What to search for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Table2Constraint {
    /// Caps with `t₁₁₁₁` fixed.
    T1111(u32),
    /// Cap of `Σ t_B` over one degree class `B₄,ᵢ` (`i = 1, 2, 3`).
    DegreeClass(usize),
    /// Bound on `|x̄|`: maximum over all rows.
    Full,
}

pub fn two_31_pillar_search(constraint: Table2Constraint) -> (BoundReport, Option<Table2Row>) {
    let inputs = [("alpha", "1/5".to_string()), ("K", "3".to_string()), ("other_pillar_size", "4".to_string())];
    match constraint {
        Table2Constraint::T1111(k) => match table2_row(k) {
            Some(row) => {
                let rep = BoundReport::new(
                    "two_31_pillars_row",
                    BoundValue::Int(row.m_bound as u64),
                    &[&inputs[..], &[("t1111", k.to_string())]].concat(),
                    json!({ "caps": row.caps, "class_caps": caps().class }),
                );
                (rep, Some(row))
            }
            None => {
                let rep = BoundReport::new(
                    "two_31_pillars_row",
                    BoundValue::Int(0),
                    &[&inputs[..], &[("t1111", k.to_string())]].concat(),
                    json!({ "infeasible": true, "t1111_cap": caps().single[4] }),
                );
                (rep, None)
            }
        },
        Table2Constraint::DegreeClass(i) => {
            let (cap, arg) = degree_class_cap(i);
            let witness: serde_json::Map<String, serde_json::Value> =
                class_members(i).into_iter().map(|b| (label(b), json!(arg.t[b]))).collect();
            let rep = BoundReport::new(
                "two_31_pillars_degree_class",
                BoundValue::Int(cap as u64),
                &[&inputs[..], &[("degree", i.to_string())]].concat(),
                json!({ "maximizer": witness, "single_variable_cap": caps().single[i] }),
            );
            (rep, None)
        }
        Table2Constraint::Full => {
            let t = table2();
            let best = t.rows.iter().max_by_key(|r| (r.m_bound, std::cmp::Reverse(r.t1111))).cloned();
            let rep = BoundReport::new(
                "two_31_pillars",
                BoundValue::Int(t.max_m as u64),
                &inputs,
                json!({ "single_caps": t.single_caps, "class_caps": t.class_caps, "rows": t.rows }),
            );
            (rep, best)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::psd_check;

    #[test]
    fn scaled_matches_rational() {
        let mut inst = TwoPillarInstance::default();
        inst.t[0b0000] = 2;
        inst.t[0b1000] = 1;
        inst.t[0b0110] = 3;
        inst.t[0b1111] = 5;
        let m = inst.m_matrix();
        let s = inst.scaled_m();
        let k = Rational::from_int(360 * (9 + inst.size() as i64));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.get(i, j) * &k, Rational::from_int(s[i][j] as i64));
            }
        }
        assert_eq!(inst.is_feasible(), psd_check(&m).verdict.is_psd());
    }

    #[test]
    fn single_caps() {
        assert_eq!(single_variable_cap(0b0000), 9);
        assert_eq!(single_variable_cap(0b1000), 7);
        assert_eq!(single_variable_cap(0b1100), 7);
        assert_eq!(single_variable_cap(0b1110), 9);
        assert_eq!(single_variable_cap(0b1111), 39);
    }

    #[test]
    fn all_zero_m() {
        // t₀₀₀₀ = n: M = (9/10)I + (1/10 − 5n/(8(9+n)))J
        let m = TwoPillarInstance::single(0, 3).m_matrix();
        assert_eq!(*m.get(0, 1), &Rational::new(1, 10) - &Rational::new(15, 96));
    }
}
