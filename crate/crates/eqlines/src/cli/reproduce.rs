//! `reproduce`: recompute a table and diff it line by line against the copy shipped in `data/`.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::CliError;
use crate::bounds::table2;
use crate::exactnum::{ExactScalar, Rational};
use crate::saturate::{m_alpha, m_star, parse_angle, AngleMethod};

pub const PINNED_TABLE2: &str = include_str!("../../data/table2.txt");
pub const PINNED_TABLE3: &str = include_str!("../../data/table3.txt");
pub const PINNED_MSTAR: &str = include_str!("../../data/mstar.txt");

/// Cells recomputed by `reproduce table3`: rank and angle.
pub const TABLE3_CELLS: [(usize, &str); 9] = [
    (8, "1/3"),
    (8, "1/5"),
    (8, "1/7"),
    (9, "1/3"),
    (9, "1/5"),
    (9, "1/7"),
    (9, "1/sqrt(17)"),
    (10, "1/3"),
    (10, "1/5"),
];

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DiffLine {
    pub line: usize,
    pub expected: Option<String>,
    pub computed: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Reproduction {
    pub name: &'static str,
    /// What is printed or written.
    pub text: String,
    /// Differences between the computed rows and the pinned copy (1-based lines).
    pub diff: Vec<DiffLine>,
}

impl Reproduction {
    fn new(name: &'static str, text: String, compared: &str, pinned: &str) -> Self {
        let (a, b): (Vec<&str>, Vec<&str>) = (pinned.lines().collect(), compared.lines().collect());
        let diff = (0..a.len().max(b.len()))
            .filter(|&i| a.get(i) != b.get(i))
            .map(|i| DiffLine {
                line: i + 1,
                expected: a.get(i).map(|s| s.to_string()),
                computed: b.get(i).map(|s| s.to_string()),
            })
            .collect();
        Reproduction { name, text, diff }
    }

    pub fn matches(&self) -> bool {
        self.diff.is_empty()
    }

    pub fn diff_json(&self) -> Value {
        json!({ "pinned": self.name, "matches": self.matches(), "differences": self.diff })
    }
}

/// `1/sqrt(d)` for `√d/d`, the plain exact string otherwise.
pub fn render_angle(a: &ExactScalar) -> String {
    match a {
        ExactScalar::Quad(q) if q.a.is_zero() && q.b == Rational::new(1, q.d() as i64) => format!("1/sqrt({})", q.d()),
        _ => a.to_string(),
    }
}

pub fn reproduce_table2(grouped: bool) -> Reproduction {
    let t = table2();
    let rows = t.rows_text();
    let text = if grouped { t.grouped_text() } else { rows.clone() };
    Reproduction::new("table2", text, &rows, PINNED_TABLE2)
}

pub fn reproduce_table3() -> Result<Reproduction, CliError> {
    let mut s = String::from("r alpha M\n");
    for (r, a) in TABLE3_CELLS {
        let alpha = parse_angle(a)?;
        writeln!(s, "{r} {a} {}", m_alpha(r, &alpha)?.value).unwrap();
    }
    Ok(Reproduction::new("table3", s.clone(), &s, PINNED_TABLE3))
}

/// Largest sets over all angles for ranks 8, 9, 10, with every audited angle.
pub fn reproduce_mstar() -> Result<Reproduction, CliError> {
    let mut s = String::from("r alpha relative_bound method M\n");
    let mut summary = String::new();
    for r in 8..=10 {
        let rep = m_star(r, false)?;
        for a in &rep.audit {
            let rb = a.relative_bound.map_or("-".to_string(), |v| v.to_string());
            let (method, value) = match &a.method {
                AngleMethod::Saturated { value } => ("saturated", value.to_string()),
                AngleMethod::RelativeBound => ("relative_bound", "-".into()),
                AngleMethod::AtMostRank => ("at_most_rank", "-".into()),
                AngleMethod::NotChecked => ("not_checked", "-".into()),
            };
            writeln!(s, "{r} {} {rb} {method} {value}", render_angle(&a.alpha)).unwrap();
        }
        let v = rep.value.map_or("uncertified".to_string(), |v| v.to_string());
        writeln!(summary, "M*({r}) = {v}").unwrap();
    }
    s.push_str(&summary);
    Ok(Reproduction::new("mstar", s.clone(), &s, PINNED_MSTAR))
}
