//! Gaussian rationals: the exact scalar field for everything in this crate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// A Gaussian rational `re + im*i` with exact rational parts.
///
/// The underlying rational type keeps fractions reduced with positive
/// denominators, so equality is structural equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        Scalar {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::from_rational(Rational::from_integer(n))
    }

    /// Exact fraction `p/q`. Panics if `q` is zero.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn zero() -> Self {
        Scalar::from(0)
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    /// (-1)^k.
    pub fn neg_one_pow(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse: conj(z) / |z|^2.
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Scalar::from_rational(self.re.recip()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(Scalar {
            re: &self.re / &norm,
            im: -&self.im / &norm,
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_bigint(BigInt::from(n))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // Real factors are by far the common case in elimination; avoid the
        // full complex product when an imaginary part is zero.
        if self.im.is_zero() {
            if self.re.is_zero() {
                return Scalar::zero();
            }
            return Scalar {
                re: &self.re * &rhs.re,
                im: &self.re * &rhs.im,
            };
        }
        if rhs.im.is_zero() {
            if rhs.re.is_zero() {
                return Scalar::zero();
            }
            return Scalar {
                re: &self.re * &rhs.re,
                im: &self.im * &rhs.re,
            };
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    // Complex division multiplies by the exact inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inverse().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// `p/q` for real values (`/q` omitted when q = 1), `re,im` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.re, f)?;
        if !self.im.is_zero() {
            write!(f, ",")?;
            fmt_rational(&self.im, f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses an exact rational of the form `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `re` or `re,im` with each part an exact rational `p/q`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parts = s.splitn(3, ',');
        let re = parse_rational(parts.next().unwrap_or(""))?;
        let im = match parts.next() {
            Some(p) => parse_rational(p)?,
            None => Rational::zero(),
        };
        if parts.next().is_some() {
            return Err(Error::Parse(format!("invalid scalar {s:?}")));
        }
        Ok(Scalar { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_equality() {
        let a = Scalar::from_ratio(2, 4);
        let b = Scalar::from_ratio(1, 2);
        assert_eq!(a, b);
        assert_eq!(Scalar::from_ratio(-1, -2), b);
    }

    #[test]
    fn complex_product() {
        // (1 + 2i)(3 - i) = 5 + 5i
        let a = Scalar::new(
            Rational::from_integer(1.into()),
            Rational::from_integer(2.into()),
        );
        let b = Scalar::new(
            Rational::from_integer(3.into()),
            Rational::from_integer((-1).into()),
        );
        let p = &a * &b;
        assert_eq!(
            p,
            Scalar::new(
                Rational::from_integer(5.into()),
                Rational::from_integer(5.into())
            )
        );
    }

    #[test]
    fn inverse_and_division() {
        let z = Scalar::i();
        let w = z.inverse().unwrap();
        assert_eq!(&z * &w, Scalar::one());
        assert_eq!(Scalar::zero().inverse(), Err(Error::DivisionByZero));

        let x = Scalar::from_ratio(3, 7);
        assert_eq!(&x / &x, Scalar::one());
    }

    #[test]
    fn powers_of_minus_one() {
        assert_eq!(Scalar::neg_one_pow(0), Scalar::one());
        assert_eq!(Scalar::neg_one_pow(5), Scalar::from(-1));
        assert_eq!(Scalar::from(-1).pow(4), Scalar::one());
        assert_eq!(Scalar::i().pow(2), Scalar::from(-1));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "-3", "1/2", "-7/3", "0,1", "1/2,-3", "-2,5/9"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("a,b".parse::<Scalar>().is_err());
        assert!("1,2,3".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
    }

    #[test]
    fn parse_normalizes() {
        let v: Scalar = "4/8".parse().unwrap();
        assert_eq!(v, Scalar::from_ratio(1, 2));
        let w: Scalar = "3/-6".parse().unwrap();
        assert_eq!(w, Scalar::from_ratio(-1, 2));
    }
}
