//! `verify FILE`: accepts the line-system JSON (`alpha` + `seidel`) or a Gram matrix JSON
//! (`order`, `field`, `rows`) and locates the first violation.

use serde::Serialize;
use serde_json::{json, Value};

use super::CliError;
use crate::exactnum::{ExactScalar, Field, QuadExt, Rational, Scalar};
use crate::linalg::{psd_check, AnyMatrix, MatrixJson, PsdWitness, SymMatrix, Verdict};
use crate::seidel::{base_size, EquiangularJson, EquiangularSet, SeidelError, SeidelMatrix};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub lines: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<ExactScalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Value>,
}

impl VerifyOutcome {
    fn failed(lines: usize, alpha: Option<ExactScalar>, violation: Value) -> Self {
        VerifyOutcome {
            ok: false,
            lines,
            alpha,
            verdict: None,
            rank: None,
            base_size: None,
            base: None,
            violation: Some(violation),
        }
    }
}

fn bad_format(e: serde_json::Error) -> CliError {
    CliError::Usage(format!("line {}, column {}: {e}", e.line(), e.column()))
}

/// Seidel matrix from Gram rows with unit diagonal and off-diagonal entries `±α`, where
/// `α = |G₀₁|`. On failure returns the offending entry.
fn seidel_from_gram<S: Scalar>(g: &[Vec<S>]) -> Result<(S, SeidelMatrix), Value> {
    let n = g.len();
    if n < 2 {
        return Err(json!({ "kind": "too_small", "lines": n }));
    }
    let one = g[0][0].one_like();
    for (i, row) in g.iter().enumerate() {
        if row[i] != one {
            return Err(json!({ "kind": "diagonal", "entry": [i, i], "value": row[i].to_string(), "expected": "1" }));
        }
    }
    let alpha = if g[0][1].sign() < 0 { g[0][1].negated() } else { g[0][1].clone() };
    let neg = alpha.negated();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let v = &g[i][j];
            rows[i][j] = if *v == alpha {
                1
            } else if *v == neg {
                -1
            } else {
                return Err(json!({
                    "kind": "angle",
                    "entry": [i, j],
                    "value": v.to_string(),
                    "expected": format!("+/-({alpha})"),
                }));
            };
        }
    }
    SeidelMatrix::from_rows(&rows).map(|a| (alpha, a)).map_err(|e| seidel_violation(&e).expect("entries are +/-1"))
}

/// Cells of a Gram matrix JSON in its declared field, without requiring symmetry.
fn gram_cells(m: &MatrixJson) -> Result<GramCells, CliError> {
    let field: Field = m.field.parse().map_err(|e| CliError::Usage(format!("field: {e}")))?;
    if m.rows.len() != m.order || m.rows.iter().any(|r| r.len() != m.order) {
        return Err(CliError::Usage(format!("rows do not form a {0}x{0} matrix", m.order)));
    }
    let cell = |i: usize, j: usize| -> Result<ExactScalar, CliError> {
        m.rows[i][j].parse().map_err(|e| CliError::Usage(format!("rows[{i}][{j}]: {e}")))
    };
    let n = m.order;
    Ok(match field {
        Field::Q => GramCells::Q(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            cell(i, j)?.as_rational().cloned().ok_or_else(|| {
                                CliError::Usage(format!("rows[{i}][{j}] is not rational"))
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<_, _>>()?,
        ),
        Field::Sqrt(d) => GramCells::Quad(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| cell(i, j)?.to_quad(d).map_err(|e| CliError::Usage(format!("rows[{i}][{j}]: {e}"))))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<_, _>>()?,
        ),
    })
}

enum GramCells {
    Q(Vec<Vec<Rational>>),
    Quad(Vec<Vec<QuadExt>>),
}

fn seidel_violation(e: &SeidelError) -> Option<Value> {
    match *e {
        SeidelError::BadEntry(i, j, v) => Some(json!({ "kind": "seidel_entry", "entry": [i, j], "value": v })),
        SeidelError::NotSymmetric(i, j) => Some(json!({ "kind": "not_symmetric", "entry": [i, j] })),
        _ => None,
    }
}

fn witness<S: Scalar>(g: &SymMatrix<S>) -> Option<Vec<String>> {
    match psd_check(g).witness {
        PsdWitness::NegativeVector(v) => Some(v.iter().map(|x| x.to_string()).collect()),
        PsdWitness::Pivots(_) => None,
    }
}

pub fn verify_text(text: &str) -> Result<VerifyOutcome, CliError> {
    let value: Value = serde_json::from_str(text).map_err(bad_format)?;
    let declared_rank = value.get("rank").and_then(Value::as_u64).map(|v| v as usize);
    let declared_base = value.get("base_size").and_then(Value::as_u64).map(|v| v as usize);
    let (alpha, seidel) = if value.get("seidel").is_some() {
        let j: EquiangularJson = serde_json::from_value(value).map_err(|e| CliError::Usage(e.to_string()))?;
        let a = match SeidelMatrix::from_rows(&j.seidel) {
            Ok(a) => a,
            Err(e) => match seidel_violation(&e) {
                Some(v) => return Ok(VerifyOutcome::failed(j.seidel.len(), Some(j.alpha), v)),
                None => return Err(CliError::Usage(format!("seidel: {e}"))),
            },
        };
        (j.alpha, a)
    } else if value.get("rows").is_some() {
        let m: MatrixJson = serde_json::from_value(value).map_err(|e| CliError::Usage(e.to_string()))?;
        let n = m.order;
        let res = match gram_cells(&m)? {
            GramCells::Q(g) => seidel_from_gram(&g).map(|(a, s)| (ExactScalar::Q(a), s)),
            GramCells::Quad(g) => seidel_from_gram(&g).map(|(a, s)| (ExactScalar::Quad(a), s)),
        };
        match res {
            Ok(p) => p,
            Err(v) => return Ok(VerifyOutcome::failed(n, None, v)),
        }
    } else {
        return Err(CliError::Usage("expected an object with \"seidel\" or \"rows\"".into()));
    };
    let n = seidel.order();
    let e = match EquiangularSet::new(alpha.clone(), seidel.clone()) {
        Ok(e) => e,
        Err(SeidelError::BadAngle(a)) => {
            return Ok(VerifyOutcome::failed(n, Some(alpha), json!({ "kind": "angle_range", "alpha": a })))
        }
        Err(SeidelError::NotPsd) => {
            let w = match seidel.gram(&alpha) {
                AnyMatrix::Q(g) => witness(&g),
                AnyMatrix::Quad(g) => witness(&g),
            };
            return Ok(VerifyOutcome::failed(n, Some(alpha), json!({ "kind": "not_psd", "negative_vector": w })));
        }
        Err(err) => return Err(CliError::Usage(err.to_string())),
    };
    let verdict = if e.rank == n { Verdict::PositiveDefinite } else { Verdict::PositiveSemidefiniteSingular };
    let bs = if n >= 2 { base_size(&e).ok() } else { None };
    let mut out = VerifyOutcome {
        ok: true,
        lines: n,
        alpha: Some(alpha),
        verdict: Some(verdict),
        rank: Some(e.rank),
        base_size: bs.as_ref().map(|b| b.k),
        base: bs.map(|b| b.base),
        violation: None,
    };
    if let Some(r) = declared_rank.filter(|&r| r != e.rank) {
        out.ok = false;
        out.violation = Some(json!({ "kind": "rank", "declared": r, "computed": e.rank }));
    } else if let Some(k) = declared_base.filter(|&k| Some(k) != out.base_size) {
        out.ok = false;
        out.violation = Some(json!({ "kind": "base_size", "declared": k, "computed": out.base_size }));
    }
    Ok(out)
}
