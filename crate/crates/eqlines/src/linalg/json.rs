use serde::{Deserialize, Serialize};

use crate::exactnum::{ExactScalar, Field, QuadExt, Rational, Scalar};

use super::{LinalgError, SymMatrix};

/// Interchange form: `{"order": n, "field": "Q" | "Q(sqrt d)", "rows": [[...]]}`, full matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub order: usize,
    pub field: String,
    pub rows: Vec<Vec<String>>,
}

/// A symmetric matrix over whichever field its JSON declared.
#[derive(Clone, PartialEq, Debug)]
pub enum AnyMatrix {
    Q(SymMatrix<Rational>),
    Quad(SymMatrix<QuadExt>),
}

impl<S: Scalar> SymMatrix<S> {
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            order: self.order(),
            field: self.field().to_string(),
            rows: self.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        }
    }
}

impl MatrixJson {
    pub fn parse(&self) -> Result<AnyMatrix, LinalgError> {
        let field: Field = self.field.parse().map_err(|e| LinalgError::Format(format!("field: {e}")))?;
        if self.rows.len() != self.order {
            return Err(LinalgError::Format(format!("order {} but {} rows", self.order, self.rows.len())));
        }
        let mut parsed = Vec::with_capacity(self.order);
        for (i, row) in self.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, s) in row.iter().enumerate() {
                let v: ExactScalar =
                    s.parse().map_err(|e| LinalgError::Format(format!("rows[{i}][{j}]: {e}")))?;
                out.push(v);
            }
            parsed.push(out);
        }
        match field {
            Field::Q => {
                let rows = parsed
                    .into_iter()
                    .enumerate()
                    .map(|(i, r)| {
                        r.into_iter()
                            .enumerate()
                            .map(|(j, v)| {
                                v.as_rational().cloned().ok_or_else(|| {
                                    LinalgError::Format(format!("rows[{i}][{j}] is not rational"))
                                })
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                SymMatrix::from_rows(rows).map(AnyMatrix::Q)
            }
            Field::Sqrt(d) => {
                let rows = parsed
                    .into_iter()
                    .enumerate()
                    .map(|(i, r)| {
                        r.into_iter()
                            .enumerate()
                            .map(|(j, v)| {
                                v.to_quad(d).map_err(|e| LinalgError::Format(format!("rows[{i}][{j}]: {e}")))
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                SymMatrix::from_rows(rows).map(AnyMatrix::Quad)
            }
        }
    }
}
