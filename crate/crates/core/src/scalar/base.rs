use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Field;
use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// A Gaussian rational `re + im·i`.
///
/// In real mode every value has `im == 0`; the type is shared so that the rest of
/// the crate is written once for both fields.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BaseScalar {
    re: Rational,
    im: Rational,
}

/// Parse a rational literal: optional sign, integer, optional `/` and a positive integer.
pub fn parse_rational(literal: &str) -> Result<Rational> {
    let err = |reason: &str| Error::ParseScalar {
        literal: literal.to_string(),
        reason: reason.to_string(),
    };
    let s = literal.trim();
    if s.is_empty() {
        return Err(err("empty literal"));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let parse_int = |t: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = if allow_sign {
            t.strip_prefix(['+', '-']).unwrap_or(t)
        } else {
            t
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected an integer"));
        }
        let t = t.strip_prefix('+').unwrap_or(t);
        t.parse::<BigInt>().map_err(|e| err(&e.to_string()))
    };
    let num = parse_int(num_str, true)?;
    let den = match den_str {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Exact square root of a rational, if it is a perfect square.
pub(crate) fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

impl BaseScalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        BaseScalar { re, im }
    }

    pub fn real(re: Rational) -> Self {
        BaseScalar {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::real(Rational::from_integer(n))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::real(Rational::new(num.into(), den.into()))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        BaseScalar {
            re: Rational::from_integer(re.into()),
            im: Rational::from_integer(im.into()),
        }
    }

    pub fn i() -> Self {
        Self::gaussian(0, 1)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
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

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BaseScalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re² + im²`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Self::real(self.re.recip()));
        }
        let n = self.norm_sq();
        Some(BaseScalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    /// Sign of the real part (−1, 0, 1); meaningful in real mode.
    pub fn signum_re(&self) -> i32 {
        if self.re.is_positive() {
            1
        } else if self.re.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn approx(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Exact square root inside ℚ (real input only) or ℚ(i), if one exists there.
    ///
    /// With `allow_complex == false` only non-negative rationals have roots.
    pub fn sqrt_exact(&self, allow_complex: bool) -> Option<Self> {
        if self.im.is_zero() {
            if let Some(r) = rational_sqrt(&self.re) {
                return Some(Self::real(r));
            }
            if allow_complex {
                return rational_sqrt(&-self.re.clone()).map(|r| BaseScalar {
                    re: Rational::zero(),
                    im: r,
                });
            }
            return None;
        }
        if !allow_complex {
            return None;
        }
        // (p + qi)² = a + bi  ⇒  p² = (a + |z|)/2, q = b / 2p
        let modulus = rational_sqrt(&self.norm_sq())?;
        let two = Rational::from_integer(2.into());
        let p_sq = (&self.re + &modulus) / &two;
        let p = rational_sqrt(&p_sq)?;
        if p.is_zero() {
            return None;
        }
        let q = &self.im / (&two * &p);
        Some(BaseScalar { re: p, im: q })
    }

    /// Parse a real or Gaussian literal such as `-3/7`, `2i`, `-i`, or `1/2-3/4i`.
    ///
    /// A trailing `i` multiplies the whole rational coefficient in front of it.
    pub fn parse(literal: &str) -> Result<Self> {
        let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = s.strip_suffix('i') else {
            return parse_rational(&s).map(Self::real);
        };
        // split at the last sign that is not the first character
        let split = body
            .char_indices()
            .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx)
            .last();
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re_part).map_err(|_| Error::ParseScalar {
                literal: literal.to_string(),
                reason: "malformed real part".into(),
            })?
        };
        let im = match im_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other).map_err(|_| Error::ParseScalar {
                literal: literal.to_string(),
                reason: "malformed imaginary part".into(),
            })?,
        };
        Ok(BaseScalar { re, im })
    }

    /// Parse a Gaussian literal given as separate real and imaginary rational strings.
    pub fn parse_parts(re: &str, im: &str) -> Result<Self> {
        Ok(BaseScalar {
            re: parse_rational(re)?,
            im: parse_rational(im)?,
        })
    }
}

impl fmt::Display for BaseScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let coeff = |q: &Rational| -> String {
            if q.is_one() {
                String::new()
            } else if *q == -Rational::one() {
                "-".to_string()
            } else {
                q.to_string()
            }
        };
        if self.re.is_zero() {
            return write!(f, "{}i", coeff(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}i", self.re, sign, coeff(&self.im.abs()))
    }
}

impl std::str::FromStr for BaseScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BaseScalar::parse(s)
    }
}

impl From<Rational> for BaseScalar {
    fn from(q: Rational) -> Self {
        BaseScalar::real(q)
    }
}

impl From<i64> for BaseScalar {
    fn from(n: i64) -> Self {
        BaseScalar::from_int(n)
    }
}

fn add_ref(a: &BaseScalar, b: &BaseScalar) -> BaseScalar {
    BaseScalar {
        re: &a.re + &b.re,
        im: &a.im + &b.im,
    }
}

fn sub_ref(a: &BaseScalar, b: &BaseScalar) -> BaseScalar {
    BaseScalar {
        re: &a.re - &b.re,
        im: &a.im - &b.im,
    }
}

fn mul_ref(a: &BaseScalar, b: &BaseScalar) -> BaseScalar {
    if a.im.is_zero() && b.im.is_zero() {
        return BaseScalar::real(&a.re * &b.re);
    }
    BaseScalar {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

fn div_ref(a: &BaseScalar, b: &BaseScalar) -> BaseScalar {
    mul_ref(a, &b.inv().expect("division by zero"))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $func:ident) => {
        impl $trait<BaseScalar> for BaseScalar {
            type Output = BaseScalar;
            fn $method(self, rhs: BaseScalar) -> BaseScalar {
                $func(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a BaseScalar> for BaseScalar {
            type Output = BaseScalar;
            fn $method(self, rhs: &'a BaseScalar) -> BaseScalar {
                $func(&self, rhs)
            }
        }
        impl<'a> $trait<BaseScalar> for &'a BaseScalar {
            type Output = BaseScalar;
            fn $method(self, rhs: BaseScalar) -> BaseScalar {
                $func(self, &rhs)
            }
        }
        impl<'a, 'b> $trait<&'b BaseScalar> for &'a BaseScalar {
            type Output = BaseScalar;
            fn $method(self, rhs: &'b BaseScalar) -> BaseScalar {
                $func(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for BaseScalar {
    type Output = BaseScalar;
    fn neg(self) -> BaseScalar {
        BaseScalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &BaseScalar {
    type Output = BaseScalar;
    fn neg(self) -> BaseScalar {
        -self.clone()
    }
}

impl Field for BaseScalar {
    fn zero() -> Self {
        BaseScalar::zero()
    }
    fn one() -> Self {
        BaseScalar::one()
    }
    fn is_zero(&self) -> bool {
        BaseScalar::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        BaseScalar::inv(self)
    }
    fn from_base(b: &BaseScalar) -> Self {
        b.clone()
    }
}
