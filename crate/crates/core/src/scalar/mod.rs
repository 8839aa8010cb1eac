//! Exact scalars.
//!
//! [`BaseScalar`] is a Gaussian rational `re + im·i`; in [`FieldMode::RealRational`]
//! the imaginary part is always zero. [`AlgebraicScalar`] is an element of a simple
//! extension `F[t]/(m(t))` of the base field. [`Scalar`] is the union of the two and
//! is what solution coordinates are expressed in.

mod algebraic;
mod base;
mod factor;
mod quadratic;
pub mod roots;
mod zassenhaus;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use algebraic::{AlgebraicScalar, NumberField};
pub use base::{parse_rational, BaseScalar, Rational};
pub use factor::{factor_univariate, irreducible_factors, roots_in_mode, Factor, Factorization};
pub(crate) use factor::roots_of_irreducible;
pub use algebraic::render_approx;
pub use quadratic::{solve_quadratic, ScalarSolutions};
pub use roots::RootRegion;

/// Which field the rationals approximate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldMode {
    /// ℚ standing in for ℝ: only real solutions are reported.
    #[default]
    RealRational,
    /// ℚ(i) standing in for ℂ: every complex solution is reported.
    ComplexGaussian,
}

impl FieldMode {
    pub fn name(self) -> &'static str {
        match self {
            FieldMode::RealRational => "real",
            FieldMode::ComplexGaussian => "complex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "real" => Some(FieldMode::RealRational),
            "complex" => Some(FieldMode::ComplexGaussian),
            _ => None,
        }
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A field whose zero and one need no context.
///
/// Implemented by [`BaseScalar`] and by [`Scalar`]; the generic linear algebra and
/// polynomial code is written against this trait so the same routines run over the
/// base field and over algebraic extensions.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_base(b: &BaseScalar) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_base(&BaseScalar::from_int(n))
    }

    /// `self / rhs`; panics when `rhs` is zero.
    fn div_by(&self, rhs: &Self) -> Self {
        self.clone() * rhs.inv().expect("division by zero")
    }
}

/// An exact scalar: either a base-field element or an element of an algebraic extension.
///
/// Algebraic values whose residue is constant are always collapsed to `Base`, so a
/// `Scalar::Algebraic` is never a base-field element in disguise.
#[derive(Clone, Debug)]
pub enum Scalar {
    Base(BaseScalar),
    Algebraic(AlgebraicScalar),
}

impl Scalar {
    pub fn from_int(n: i64) -> Self {
        Scalar::Base(BaseScalar::from_int(n))
    }

    pub fn as_base(&self) -> Option<&BaseScalar> {
        match self {
            Scalar::Base(b) => Some(b),
            Scalar::Algebraic(_) => None,
        }
    }

    pub fn as_algebraic(&self) -> Option<&AlgebraicScalar> {
        match self {
            Scalar::Base(_) => None,
            Scalar::Algebraic(a) => Some(a),
        }
    }

    pub fn is_base(&self) -> bool {
        matches!(self, Scalar::Base(_))
    }

    /// Decimal approximation `(re, im)`, for rendering only.
    pub fn approx(&self) -> (f64, f64) {
        match self {
            Scalar::Base(b) => b.approx(),
            Scalar::Algebraic(a) => a.approx(),
        }
    }

    /// The extension field this scalar lives in, if any.
    pub fn field(&self) -> Option<&std::sync::Arc<NumberField>> {
        self.as_algebraic().map(|a| a.field())
    }

    pub(crate) fn from_algebraic(a: AlgebraicScalar) -> Self {
        match a.as_constant() {
            Some(c) => Scalar::Base(c),
            None => Scalar::Algebraic(a),
        }
    }
}

impl From<BaseScalar> for Scalar {
    fn from(b: BaseScalar) -> Self {
        Scalar::Base(b)
    }
}

impl From<AlgebraicScalar> for Scalar {
    fn from(a: AlgebraicScalar) -> Self {
        Scalar::from_algebraic(a)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Base(a), Scalar::Base(b)) => a == b,
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Base(b) => write!(f, "{b}"),
            Scalar::Algebraic(a) => write!(f, "{a}"),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Base(a), Scalar::Base(b)) => Scalar::Base(a + b),
            (Scalar::Algebraic(a), Scalar::Base(b)) | (Scalar::Base(b), Scalar::Algebraic(a)) => {
                Scalar::from_algebraic(a.add_base(&b))
            }
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => Scalar::from_algebraic(a.add(&b)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Base(a) => Scalar::Base(-a),
            Scalar::Algebraic(a) => Scalar::Algebraic(a.neg()),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Base(a), Scalar::Base(b)) => Scalar::Base(a * b),
            (Scalar::Algebraic(a), Scalar::Base(b)) | (Scalar::Base(b), Scalar::Algebraic(a)) => {
                Scalar::from_algebraic(a.scale(&b))
            }
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => Scalar::from_algebraic(a.mul(&b)),
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.div_by(&rhs)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.clone() + rhs.clone()
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.clone() - rhs.clone()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.clone() * rhs.clone()
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::Base(BaseScalar::zero())
    }

    fn one() -> Self {
        Scalar::Base(BaseScalar::one())
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Base(b) => b.is_zero(),
            // normalized: an algebraic scalar is never a constant
            Scalar::Algebraic(_) => false,
        }
    }

    fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Base(b) => b.inv().map(Scalar::Base),
            Scalar::Algebraic(a) => Some(Scalar::from_algebraic(a.inv())),
        }
    }

    fn from_base(b: &BaseScalar) -> Self {
        Scalar::Base(b.clone())
    }
}
