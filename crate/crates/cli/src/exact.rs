//! JSON encoding of exact scalars.
//!
//! Base-field values are plain strings (`"-3/7"`, `"1/2-3/4i"`). Algebraic values
//! carry everything needed to rebuild them exactly: the residue `r(t)` and the
//! modulus `m(t)` as coefficient lists (constant term first) and the rational
//! region isolating the chosen root of `m`. The decimal field is an annotation.

use ideals3::poly::UniPoly;
use ideals3::scalar::roots::count_in_region;
use ideals3::scalar::{parse_rational, render_approx, NumberField, Rational, RootRegion};
use ideals3::{AlgebraicScalar, BaseScalar, FieldMode, Scalar, Vector3};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RegionJson {
    Interval {
        lo: String,
        hi: String,
    },
    Rect {
        re_lo: String,
        re_hi: String,
        im_lo: String,
        im_hi: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactScalar {
    Base(String),
    Algebraic {
        residue: Vec<String>,
        modulus: Vec<String>,
        region: RegionJson,
        decimal: String,
    },
}

fn coeff_strings(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn parse_poly(cs: &[String]) -> Result<UniPoly, CliError> {
    let coeffs = cs.iter().map(|c| BaseScalar::parse(c)).collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::new(coeffs))
}

fn rat(s: &str) -> Result<Rational, CliError> {
    Ok(parse_rational(s)?)
}

impl RegionJson {
    fn from_region(r: &RootRegion) -> Self {
        match r {
            RootRegion::Interval { lo, hi } => RegionJson::Interval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            },
            RootRegion::Rect {
                re_lo,
                re_hi,
                im_lo,
                im_hi,
            } => RegionJson::Rect {
                re_lo: re_lo.to_string(),
                re_hi: re_hi.to_string(),
                im_lo: im_lo.to_string(),
                im_hi: im_hi.to_string(),
            },
        }
    }

    fn to_region(&self) -> Result<RootRegion, CliError> {
        Ok(match self {
            RegionJson::Interval { lo, hi } => RootRegion::Interval {
                lo: rat(lo)?,
                hi: rat(hi)?,
            },
            RegionJson::Rect {
                re_lo,
                re_hi,
                im_lo,
                im_hi,
            } => RootRegion::Rect {
                re_lo: rat(re_lo)?,
                re_hi: rat(re_hi)?,
                im_lo: rat(im_lo)?,
                im_hi: rat(im_hi)?,
            },
        })
    }
}

/// Decimal rendering of any scalar (annotation only).
pub fn decimal(s: &Scalar) -> String {
    let (re, im) = s.approx();
    render_approx(re, im)
}

impl ExactScalar {
    pub fn from_scalar(s: &Scalar) -> Self {
        match s {
            Scalar::Base(b) => ExactScalar::Base(b.to_string()),
            Scalar::Algebraic(a) => ExactScalar::Algebraic {
                residue: coeff_strings(a.residue()),
                modulus: coeff_strings(a.field().modulus()),
                region: RegionJson::from_region(a.field().region()),
                decimal: decimal(s),
            },
        }
    }

    /// Rebuild the exact value, checking that the region isolates one root of a
    /// monic modulus of degree at least 2.
    pub fn to_scalar(&self, mode: FieldMode) -> Result<Scalar, CliError> {
        match self {
            ExactScalar::Base(s) => Ok(Scalar::Base(BaseScalar::parse(s)?)),
            ExactScalar::Algebraic {
                residue,
                modulus,
                region,
                ..
            } => {
                let m = parse_poly(modulus)?;
                let bad = |why: &str| CliError::Parse {
                    origin: "algebraic scalar".into(),
                    message: why.into(),
                };
                if m.degree().map_or(true, |d| d < 2) || m.leading() != Some(&BaseScalar::one()) {
                    return Err(bad("modulus must be monic of degree at least 2"));
                }
                let region = region.to_region()?;
                if count_in_region(&m, &region) != Some(1) {
                    return Err(bad("region does not isolate exactly one root of the modulus"));
                }
                let field = NumberField::new(m, region, mode);
                Ok(Scalar::from(AlgebraicScalar::new(field, parse_poly(residue)?)))
            }
        }
    }
}

pub type VectorJson = Vec<ExactScalar>;

pub fn vector_json(v: &Vector3) -> VectorJson {
    v.coords().iter().map(ExactScalar::from_scalar).collect()
}

pub fn vector_from_json(v: &[ExactScalar], mode: FieldMode) -> Result<Vector3, CliError> {
    if v.len() != 3 {
        return Err(CliError::Parse {
            origin: "vector".into(),
            message: format!("expected 3 coordinates, got {}", v.len()),
        });
    }
    Ok(Vector3::new(
        v[0].to_scalar(mode)?,
        v[1].to_scalar(mode)?,
        v[2].to_scalar(mode)?,
    ))
}
