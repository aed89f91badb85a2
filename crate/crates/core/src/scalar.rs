//! Exact arithmetic in the field Q(i, sqrt 2).
//!
//! Elements are stored as four canonical rationals `(a, b, c, d)` standing for
//! `a + b*i + c*r2 + d*i*r2`, where `i^2 = -1` and `r2^2 = 2`. Every structure
//! constant and change-of-basis coefficient used by the engine lives here.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// `a + b*i + c*r2 + d*i*r2` with canonical rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Scalar { a, b, c, d }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rational(BigRational::one())
    }

    pub fn from_rational(a: BigRational) -> Self {
        Scalar {
            a,
            ..Scalar::default()
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational `n/d`. Panics when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::from_rational(q(n, d))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            b: BigRational::one(),
            ..Scalar::default()
        }
    }

    /// The positive square root of two.
    pub fn sqrt2() -> Self {
        Scalar {
            c: BigRational::one(),
            ..Scalar::default()
        }
    }

    pub fn coords(&self) -> [&BigRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Returns the rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then_some(&self.a)
    }

    pub fn scale(&self, r: &BigRational) -> Scalar {
        Scalar {
            a: &self.a * r,
            b: &self.b * r,
            c: &self.c * r,
            d: &self.d * r,
        }
    }

    /// Multiplicative inverse.
    ///
    /// Writing `x = p + q*r2` with Gaussian rationals `p, q`, the product with the
    /// conjugate `p - q*r2` is the Gaussian rational `n = p^2 - 2 q^2`, which is then
    /// inverted through its complex conjugate.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let p = (self.a.clone(), self.b.clone());
        let qq = (self.c.clone(), self.d.clone());
        let p2 = gauss_mul(&p, &p);
        let q2 = gauss_mul(&qq, &qq);
        let two = q(2, 1);
        let n = (&p2.0 - &q2.0 * &two, &p2.1 - &q2.1 * &two);
        let norm = &n.0 * &n.0 + &n.1 * &n.1;
        let n_inv = (&n.0 / &norm, -&n.1 / &norm);
        let num_p = gauss_mul(&p, &n_inv);
        let num_q = gauss_mul(&(-&qq.0, -&qq.1), &n_inv);
        Ok(Scalar {
            a: num_p.0,
            b: num_p.1,
            c: num_q.0,
            d: num_q.1,
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Number of nonzero coordinates.
    pub fn term_count(&self) -> usize {
        self.coords().iter().filter(|c| !c.is_zero()).count()
    }
}

fn gauss_mul(x: &(BigRational, BigRational), y: &(BigRational, BigRational)) -> (BigRational, BigRational) {
    (&x.0 * &y.0 - &x.1 * &y.1, &x.0 * &y.1 + &x.1 * &y.0)
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        // fast path: rational times anything
        if b.is_zero() && c.is_zero() && d.is_zero() {
            return rhs.scale(a);
        }
        if f.is_zero() && g.is_zero() && h.is_zero() {
            return self.scale(e);
        }
        let two = q(2, 1);
        Scalar {
            a: a * e - b * f + (c * g - d * h) * &two,
            b: a * f + b * e + (c * h + d * g) * &two,
            c: a * g + c * e - b * h - d * f,
            d: a * h + d * e + b * g + c * f,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.c += &rhs.c;
        self.d += &rhs.d;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.c -= &rhs.c;
        self.d -= &rhs.d;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar {
    /// Sign-aware rendering used by the combo printers: returns `(negative,
    /// magnitude)` when the element has exactly one nonzero coordinate, so that a
    /// caller can write `x - 1/2*T[1/2]` instead of `x + -1/2*T[1/2]`.
    pub(crate) fn split_sign(&self) -> Option<(bool, Scalar)> {
        if self.term_count() != 1 {
            return None;
        }
        let neg = self.coords().iter().any(|c| c.is_negative());
        Some((neg, if neg { -self } else { self.clone() }))
    }
}

impl fmt::Display for Scalar {
    /// Coordinates in the fixed order `1, i, r2, i*r2`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let units = ["", "i", "r2", "i*r2"];
        let mut out = String::new();
        for (coord, unit) in self.coords().into_iter().zip(units) {
            if coord.is_zero() {
                continue;
            }
            let neg = coord.is_negative();
            let mag = coord.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            match (unit, mag.is_one()) {
                ("", _) => out.push_str(&fmt_rational(&mag)),
                (u, true) => out.push_str(u),
                (u, false) => {
                    out.push_str(&fmt_rational(&mag));
                    out.push('*');
                    out.push_str(u);
                }
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn gaussian_norm() {
        let x = &Scalar::ratio(1, 2) + &Scalar::i();
        let y = &Scalar::ratio(1, 2) - &Scalar::i();
        assert_eq!(&x * &y, Scalar::ratio(5, 4));
    }

    #[test]
    fn invert_i() {
        assert_eq!(Scalar::i().inv().unwrap(), -Scalar::i());
    }

    #[test]
    fn inverse_sqrt2_squared() {
        let r = Scalar::sqrt2().inv().unwrap();
        assert_eq!(&r * &r, Scalar::ratio(1, 2));
    }

    #[test]
    fn invert_one_plus_sqrt2() {
        // (1 + r2)(-1 + r2) = 2 - 1 = 1
        let x = &Scalar::one() + &Scalar::sqrt2();
        let expected = &Scalar::from_int(-1) + &Scalar::sqrt2();
        assert_eq!(&x * &expected, Scalar::one());
        assert_eq!(x.inv().unwrap(), expected);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn display_order_and_signs() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(s("1/2 + 3*i - (1/4)*r2").to_string(), "1/2 + 3*i - 1/4*r2");
        assert_eq!(s("-i*r2").to_string(), "-i*r2");
        assert_eq!(s("r2 - 1").to_string(), "-1 + r2");
    }

    #[test]
    fn cancel_is_canonical_zero() {
        let x = s("7/3 - 2*i + 5*r2 - 1/9*i*r2");
        let z = &x + &(-&x);
        assert!(z.is_zero());
        assert_eq!(z, Scalar::zero());
    }
}
