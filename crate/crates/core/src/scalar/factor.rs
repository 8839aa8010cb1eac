//! Factorization of univariate polynomials over ℚ and ℚ(i).
//!
//! Over ℚ the squarefree parts are factored with Zassenhaus' algorithm. Over ℚ(i)
//! we use Trager's norm method: after a shift `x ↦ x − s·i` making the norm
//! `N(g) = g·ḡ ∈ ℚ[x]` squarefree, the irreducible factors of `g` are the gcds of
//! `g` with the rational irreducible factors of `N(g)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::algebraic::NumberField;
use super::base::Rational;
use super::roots::{isolate_complex_roots, isolate_real_roots, RootRegion};
use super::zassenhaus;
use super::{BaseScalar, FieldMode, Scalar};
use crate::error::{Error, Result};
use crate::poly::UniPoly;

/// Largest degree accepted by [`factor_univariate`].
pub const MAX_FACTOR_DEGREE: usize = 8;

/// One irreducible factor together with its roots in the mode's field.
#[derive(Clone, Debug)]
pub struct Factor {
    /// Monic and irreducible over the base field.
    pub poly: UniPoly,
    pub multiplicity: usize,
    /// Exact for linear factors; algebraic (with an isolating region) otherwise.
    /// In real mode only the real roots are listed.
    pub roots: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub unit: BaseScalar,
    pub factors: Vec<Factor>,
}

impl Factorization {
    /// `unit · Π poly^multiplicity`.
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.unit.clone());
        for f in &self.factors {
            acc = &acc * &f.poly.pow(f.multiplicity as u32);
        }
        acc
    }
}

/// Factor `p` into irreducibles over the base field of `mode`.
///
/// Degrees above [`MAX_FACTOR_DEGREE`] are rejected; the zero polynomial has no
/// factorization.
pub fn factor_univariate(p: &UniPoly, mode: FieldMode) -> Result<Factorization> {
    let Some(degree) = p.degree() else {
        return Err(Error::DegenerateInput("cannot factor the zero polynomial".into()));
    };
    if degree > MAX_FACTOR_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree,
            max: MAX_FACTOR_DEGREE,
        });
    }
    if mode == FieldMode::RealRational && !p.is_real() {
        return Err(Error::FieldMismatch(
            "non-real coefficients in real mode".into(),
        ));
    }
    let factors = irreducible_factors(p, mode)
        .into_iter()
        .map(|(poly, multiplicity)| {
            let roots = roots_of_irreducible(&poly, mode);
            Factor {
                poly,
                multiplicity,
                roots,
            }
        })
        .collect();
    Ok(Factorization {
        unit: p.leading().unwrap().clone(),
        factors,
    })
}

/// Monic irreducible factors with multiplicities (no degree limit).
pub fn irreducible_factors(p: &UniPoly, mode: FieldMode) -> Vec<(UniPoly, usize)> {
    let gaussian = mode == FieldMode::ComplexGaussian || !p.is_real();
    let mut out = Vec::new();
    for (part, k) in p.squarefree_decomposition() {
        let pieces = if gaussian {
            factor_squarefree_gaussian(&part)
        } else {
            factor_squarefree_rational(&part)
        };
        out.extend(pieces.into_iter().map(|f| (f, k)));
    }
    out.sort_by_key(|(f, _)| f.degree());
    out
}

/// All distinct roots of `p` in the field of `mode` (real roots only in real mode).
pub fn roots_in_mode(p: &UniPoly, mode: FieldMode) -> Vec<Scalar> {
    if p.is_zero() {
        return Vec::new();
    }
    irreducible_factors(p, mode)
        .into_iter()
        .flat_map(|(f, _)| roots_of_irreducible(&f, mode))
        .collect()
}

/// Roots of a monic irreducible polynomial, each as an exact scalar.
pub(crate) fn roots_of_irreducible(f: &UniPoly, mode: FieldMode) -> Vec<Scalar> {
    match f.degree() {
        None | Some(0) => Vec::new(),
        Some(1) => vec![Scalar::Base(-f.coeff(0))],
        Some(_) => {
            let regions: Vec<RootRegion> = match mode {
                FieldMode::RealRational => isolate_real_roots(f)
                    .into_iter()
                    .map(|(lo, hi)| RootRegion::Interval { lo, hi })
                    .collect(),
                FieldMode::ComplexGaussian => isolate_complex_roots(f),
            };
            regions
                .into_iter()
                .map(|r| {
                    let field: Arc<NumberField> = NumberField::new(f.clone(), r, mode);
                    Scalar::Algebraic(field.generator())
                })
                .collect()
        }
    }
}

fn lcm_of_denominators(p: &UniPoly) -> BigInt {
    p.coeffs().iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.re().denom()).lcm(c.im().denom())
    })
}

/// Factor a squarefree rational polynomial over ℚ; returns monic factors.
fn factor_squarefree_rational(p: &UniPoly) -> Vec<UniPoly> {
    if p.degree().unwrap_or(0) <= 1 {
        return if p.is_constant() { Vec::new() } else { vec![p.monic()] };
    }
    let l = lcm_of_denominators(p);
    let z: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c.re() * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let z = zassenhaus::primitive(&z);
    zassenhaus::factor_squarefree(&z)
        .into_iter()
        .map(|f| {
            UniPoly::new(f.into_iter().map(BaseScalar::from_bigint).collect()).monic()
        })
        .collect()
}

/// Factor a squarefree polynomial with Gaussian coefficients over ℚ(i).
fn factor_squarefree_gaussian(g: &UniPoly) -> Vec<UniPoly> {
    let g = g.monic();
    match g.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![g],
        _ => {}
    }
    for s in shifts() {
        let shift = BaseScalar::gaussian(0, s);
        // g_s(x) = g(x − s·i)
        let gs = g.compose(&UniPoly::new(vec![-shift.clone(), BaseScalar::one()]));
        let norm = &gs * &gs.conj();
        debug_assert!(norm.is_real());
        if !norm.is_squarefree() {
            continue;
        }
        let mut out = Vec::new();
        for nf in factor_squarefree_rational(&norm) {
            let h = gs.gcd(&nf);
            if !h.is_constant() {
                // undo the shift: x ↦ x + s·i
                out.push(h.compose(&UniPoly::new(vec![shift.clone(), BaseScalar::one()])).monic());
            }
        }
        return out;
    }
    unreachable!("only finitely many shifts fail")
}

fn shifts() -> impl Iterator<Item = i64> {
    (0..).flat_map(|k: i64| if k == 0 { vec![0] } else { vec![k, -k] })
}
