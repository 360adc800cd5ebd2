use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::{ArithError, Rational};

/// Element `a + b·√2` of the quadratic field Q(√2).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct QuadScalar {
    pub a: Rational,
    pub b: Rational,
}

impl QuadScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadScalar { a, b }
    }

    pub fn zero() -> Self {
        QuadScalar::default()
    }

    pub fn one() -> Self {
        Rational::one().into()
    }

    pub fn sqrt2() -> Self {
        QuadScalar::new(Rational::zero(), Rational::one())
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        QuadScalar::new(Rational::zero(), Rational::half())
    }

    pub fn from_int(n: i64) -> Self {
        Rational::from_int(n).into()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate `a - b√2`.
    pub fn conj(&self) -> Self {
        QuadScalar::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² - 2b²`; zero only for zero since √2 is irrational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_int(2) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(QuadScalar::new(c.a.checked_div(&n)?, c.b.checked_div(&n)?))
    }

    pub fn checked_div(&self, o: &QuadScalar) -> Result<Self, ArithError> {
        Ok(self * &o.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadScalar::new(&self.a * r, &self.b * r)
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * std::f64::consts::SQRT_2
    }
}

impl From<Rational> for QuadScalar {
    fn from(a: Rational) -> Self {
        QuadScalar::new(a, Rational::zero())
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        QuadScalar::from_int(n)
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rad = |f: &mut fmt::Formatter<'_>, b: &Rational| {
            if b.is_one() {
                write!(f, "√2")
            } else if (-b).is_one() {
                write!(f, "-√2")
            } else {
                write!(f, "{}√2", b)
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => rad(f, &self.b),
            (false, false) => {
                write!(f, "{}", self.a)?;
                if self.b.is_negative() {
                    write!(f, " - ")?;
                    rad(f, &-&self.b)
                } else {
                    write!(f, " + ")?;
                    rad(f, &self.b)
                }
            }
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&QuadScalar> for &QuadScalar {
    type Output = QuadScalar;
    fn add(self, o: &QuadScalar) -> QuadScalar {
        QuadScalar::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub<&QuadScalar> for &QuadScalar {
    type Output = QuadScalar;
    fn sub(self, o: &QuadScalar) -> QuadScalar {
        QuadScalar::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Mul<&QuadScalar> for &QuadScalar {
    type Output = QuadScalar;
    fn mul(self, o: &QuadScalar) -> QuadScalar {
        if self.b.is_zero() && o.b.is_zero() {
            return (&self.a * &o.a).into();
        }
        let two = Rational::from_int(2);
        QuadScalar::new(
            &self.a * &o.a + two * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}

/// Panics on a zero divisor; use [`QuadScalar::checked_div`] when the divisor is data.
impl Div<&QuadScalar> for &QuadScalar {
    type Output = QuadScalar;
    fn div(self, o: &QuadScalar) -> QuadScalar {
        self.checked_div(o).expect("division by zero")
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $m(self, o: QuadScalar) -> QuadScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $m(self, o: &QuadScalar) -> QuadScalar {
                (&self).$m(o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar::new(-self.a, -self.b)
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar::new(-&self.a, -&self.b)
    }
}

impl AddAssign<&QuadScalar> for QuadScalar {
    fn add_assign(&mut self, o: &QuadScalar) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl SubAssign<&QuadScalar> for QuadScalar {
    fn sub_assign(&mut self, o: &QuadScalar) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl Sum for QuadScalar {
    fn sum<I: Iterator<Item = QuadScalar>>(iter: I) -> Self {
        let mut acc = QuadScalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = QuadScalar::sqrt2();
        assert_eq!(&s * &s, QuadScalar::from_int(2));
        assert_eq!(&QuadScalar::inv_sqrt2() * &s, QuadScalar::one());
    }

    #[test]
    fn inverse_of_unit() {
        // (1 + √2)(-1 + √2) = 1
        let u = QuadScalar::new(Rational::one(), Rational::one());
        let inv = u.inv().unwrap();
        assert_eq!(inv, QuadScalar::new(Rational::from_int(-1), Rational::one()));
        assert!(QuadScalar::zero().inv().is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(QuadScalar::sqrt2().to_string(), "√2");
        assert_eq!(QuadScalar::inv_sqrt2().to_string(), "1/2√2");
        let x = QuadScalar::new(Rational::frac(3, 2), Rational::from_int(-2));
        assert_eq!(x.to_string(), "3/2 - 2√2");
    }

    #[test]
    fn serde_uses_string_components() {
        let x = QuadScalar::new(Rational::frac(1, 2), Rational::from_int(-1));
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"{"a":"1/2","b":"-1"}"#);
        assert_eq!(serde_json::from_str::<QuadScalar>(&js).unwrap(), x);
    }
}
