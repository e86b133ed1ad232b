//! Exact scalars: rationals, real quadratic extensions ℚ(√d), and integer polynomials.

mod poly;
mod quad;
mod rational;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use poly::{poly_add, poly_eval, poly_mul, poly_pow, IntPolynomial};
pub use quad::{is_square_free, quad_sign, QuadExt};
pub use rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("cannot mix Q(sqrt {0}) with Q(sqrt {1})")]
    FieldMismatch(u64, u64),
    #[error("{0} is not a square-free integer >= 2")]
    NotSquareFree(u64),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse exact scalar from {0:?}")]
pub struct ParseScalarError(pub String);

/// The field a matrix lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Q,
    Sqrt(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Sqrt(d) => write!(f, "Q(sqrt {d})"),
        }
    }
}

impl FromStr for Field {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" {
            return Ok(Field::Q);
        }
        t.strip_prefix("Q(sqrt")
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|d| d.trim().parse().ok())
            .filter(|&d| is_square_free(d))
            .map(Field::Sqrt)
            .ok_or_else(|| ParseScalarError(s.to_string()))
    }
}

/// Exact field element usable by the generic matrix code.
///
/// Constants are produced "like" an existing element so that ℚ(√d) values
/// carry their `d` along.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn from_bigint_like(&self, v: &BigInt) -> Self;
    fn from_rational_like(&self, v: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Exact sign: -1, 0 or +1.
    fn sign(&self) -> i32;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    /// Panics on division by zero.
    fn over(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn field(&self) -> Field;

    fn from_int_like(&self, v: i64) -> Self {
        self.from_bigint_like(&BigInt::from(v))
    }
    fn one_like(&self) -> Self {
        self.from_int_like(1)
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn from_bigint_like(&self, v: &BigInt) -> Self {
        Rational::from_bigint(v.clone())
    }
    fn from_rational_like(&self, v: &Rational) -> Self {
        v.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn sign(&self) -> i32 {
        self.signum()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn over(&self, o: &Self) -> Self {
        self / o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn field(&self) -> Field {
        Field::Q
    }
}

impl Scalar for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::rational(Rational::zero(), self.d()).expect("d already validated")
    }
    fn from_bigint_like(&self, v: &BigInt) -> Self {
        QuadExt::rational(Rational::from_bigint(v.clone()), self.d()).expect("d already validated")
    }
    fn from_rational_like(&self, v: &Rational) -> Self {
        QuadExt::rational(v.clone(), self.d()).expect("d already validated")
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn sign(&self) -> i32 {
        quad_sign(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn over(&self, o: &Self) -> Self {
        self / o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn field(&self) -> Field {
        Field::Sqrt(self.d())
    }
}

/// A number in ℚ or in some ℚ(√d); the interchange type for angles and Gram entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ExactScalar {
    Q(Rational),
    Quad(QuadExt),
}

impl ExactScalar {
    pub fn field(&self) -> Field {
        match self {
            ExactScalar::Q(_) => Field::Q,
            ExactScalar::Quad(q) => Field::Sqrt(q.d()),
        }
    }

    pub fn sign(&self) -> i32 {
        match self {
            ExactScalar::Q(r) => r.signum(),
            ExactScalar::Quad(q) => quad_sign(q),
        }
    }

    /// Square of the value; rational whenever the value is rational or a rational multiple of √d.
    pub fn square(&self) -> ExactScalar {
        match self {
            ExactScalar::Q(r) => ExactScalar::Q(r * r),
            ExactScalar::Quad(q) => {
                let s = q * q;
                if s.is_rational() {
                    ExactScalar::Q(s.a)
                } else {
                    ExactScalar::Quad(s)
                }
            }
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactScalar::Q(r) => Some(r),
            ExactScalar::Quad(q) if q.is_rational() => Some(&q.a),
            _ => None,
        }
    }

    /// The value inside ℚ(√d); rationals are embedded.
    pub fn to_quad(&self, d: u64) -> Result<QuadExt, ExactError> {
        match self {
            ExactScalar::Q(r) => QuadExt::rational(r.clone(), d),
            ExactScalar::Quad(q) if q.d() == d => Ok(q.clone()),
            ExactScalar::Quad(q) => Err(ExactError::FieldMismatch(q.d(), d)),
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Q(r) => write!(f, "{r}"),
            ExactScalar::Quad(q) => write!(f, "{q}"),
        }
    }
}

impl FromStr for ExactScalar {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains("sqrt") {
            s.parse().map(ExactScalar::Quad)
        } else {
            s.parse().map(ExactScalar::Q)
        }
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        ExactScalar::Q(r)
    }
}

impl From<QuadExt> for ExactScalar {
    fn from(q: QuadExt) -> Self {
        ExactScalar::Quad(q)
    }
}
