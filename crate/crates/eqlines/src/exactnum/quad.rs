use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactError, ParseScalarError, Rational};

/// `a + b·√d` with `d` square-free and at least 2.
///
/// Arithmetic between values with different `d` is refused: the checked
/// methods return [`ExactError::FieldMismatch`] and the operator impls panic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    d: u64,
}

pub fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self, ExactError> {
        if !is_square_free(d) {
            return Err(ExactError::NotSquareFree(d));
        }
        Ok(QuadExt { a, b, d })
    }

    /// The rational `a` viewed inside ℚ(√d).
    pub fn rational(a: Rational, d: u64) -> Result<Self, ExactError> {
        QuadExt::new(a, Rational::zero(), d)
    }

    /// `1/√d = (1/d)·√d`.
    pub fn inv_sqrt(d: u64) -> Result<Self, ExactError> {
        QuadExt::new(Rational::zero(), Rational::new(1, d as i64), d)
    }

    pub fn sqrt_d(d: u64) -> Result<Self, ExactError> {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Rational::from_int(self.d as i64))
    }

    fn check(&self, o: &Self) -> Result<(), ExactError> {
        if self.d == o.d {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch(self.d, o.d))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, ExactError> {
        self.check(o)?;
        Ok(QuadExt { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, ExactError> {
        self.check(o)?;
        Ok(QuadExt { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, ExactError> {
        self.check(o)?;
        let d = Rational::from_int(self.d as i64);
        let a = &(&self.a * &o.a) + &(&(&self.b * &o.b) * &d);
        let b = &(&self.a * &o.b) + &(&self.b * &o.a);
        Ok(QuadExt { a, b, d: self.d })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, ExactError> {
        self.check(o)?;
        if o.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = o.norm();
        let num = self.checked_mul(&o.conj())?;
        Ok(QuadExt { a: &num.a / &n, b: &num.b / &n, d: self.d })
    }

    /// Largest integer not above the value, found from a float estimate and corrected exactly.
    pub fn floor(&self) -> num_bigint::BigInt {
        use num_traits::ToPrimitive;
        let est = self.a.as_big().to_f64().unwrap_or(0.0) + self.b.as_big().to_f64().unwrap_or(0.0) * (self.d as f64).sqrt();
        let mut k = num_bigint::BigInt::from(est.floor() as i64);
        let at = |k: &num_bigint::BigInt| quad_sign(&QuadExt { a: &self.a - &Rational::from_bigint(k.clone()), b: self.b.clone(), d: self.d });
        while at(&k) < 0 {
            k -= 1;
        }
        while at(&(&k + 1)) >= 0 {
            k += 1;
        }
        k
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadExt { a: &self.a * r, b: &self.b * r, d: self.d }
    }
}

/// Exact sign of `a + b√d`.
pub fn quad_sign(x: &QuadExt) -> i32 {
    let sa = x.a.signum();
    let sb = x.b.signum();
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    let a2 = &x.a * &x.a;
    let b2d = &(&x.b * &x.b) * &Rational::from_int(x.d as i64);
    match a2.cmp(&b2d) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => 0,
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.signum() < 0 {
            write!(f, "{} - {}*sqrt({})", self.a, self.b.abs(), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl FromStr for QuadExt {
    type Err = ParseScalarError;

    /// Accepts `a + c*sqrt(d)`, `a - c*sqrt(d)`, `c*sqrt(d)`, `sqrt(d)` and `1/sqrt(d)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseScalarError(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let open = t.find("sqrt(").ok_or_else(bad)?;
        let close = t[open..].find(')').map(|i| i + open).ok_or_else(bad)?;
        if close + 1 != t.len() {
            return Err(bad());
        }
        let d: u64 = t[open + 5..close].parse().map_err(|_| bad())?;
        let head = &t[..open];
        if let Some(num) = head.strip_suffix('/') {
            // p/sqrt(d) = (p/d)·√d
            let p: Rational = num.parse()?;
            let b = &p / &Rational::from_int(d as i64);
            return QuadExt::new(Rational::zero(), b, d).map_err(|_| bad());
        }
        let head = head.strip_suffix('*').unwrap_or(head);
        // split the rational part from the coefficient at the last sign that is not leading
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last()
            .map(|i| if head[..i].ends_with('+') { i - 1 } else { i });
        let (a, coef) = match split {
            Some(i) => (head[..i].parse::<Rational>()?, &head[i..]),
            None => (Rational::zero(), head),
        };
        let coef = coef.strip_prefix('+').unwrap_or(coef);
        let coef = match coef {
            "" => Rational::one(),
            "-" => Rational::from_int(-1),
            c => c.parse::<Rational>()?,
        };
        QuadExt::new(a, coef, d).map_err(|_| bad())
    }
}

impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! quad_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &'a QuadExt) -> QuadExt {
                self.$checked(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                (&self).$m(&o)
            }
        }
    };
}

quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);
quad_binop!(Div, div, checked_div);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}
