//! Membership tests with exact certificates.

use std::fmt::Write as _;

use ideals3::subspace::{line_certificate, plane_certificate, Certificate, Ideal, Line};
use ideals3::{BaseScalar, PlaneDescriptor, Scalar, StructureTensor, Vector3};
use serde::Serialize;

use crate::error::CliError;
use crate::exact::decimal;
use crate::report::ReportDocument;

/// Parse `--line a b c` or `--plane TYPE [x [y]]` arguments.
pub fn parse_line(values: &[String]) -> Result<Ideal, CliError> {
    if values.len() != 3 {
        return Err(CliError::Usage(format!("--line takes 3 scalars, got {}", values.len())));
    }
    let c = values
        .iter()
        .map(|v| BaseScalar::parse(v).map(Scalar::Base))
        .collect::<Result<Vec<_>, _>>()?;
    let v = Vector3::new(c[0].clone(), c[1].clone(), c[2].clone());
    Ok(Ideal::Line(Line::new(&v).map_err(|_| CliError::Usage("--line: the zero vector spans no line".into()))?))
}

pub fn parse_plane(values: &[String]) -> Result<Ideal, CliError> {
    let (kind, params) = values
        .split_first()
        .ok_or_else(|| CliError::Usage("--plane needs a type (I, II, III or IV)".into()))?;
    let params = params
        .iter()
        .map(|v| BaseScalar::parse(v).map(Scalar::Base))
        .collect::<Result<Vec<_>, _>>()?;
    let arity = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!("--plane {kind} takes {n} parameter(s), got {}", params.len())))
        }
    };
    let p = match kind.to_ascii_uppercase().as_str() {
        "I" => {
            arity(0)?;
            PlaneDescriptor::TypeI
        }
        "II" => {
            arity(1)?;
            PlaneDescriptor::TypeII { x: params[0].clone() }
        }
        "III" => {
            arity(1)?;
            PlaneDescriptor::TypeIII { x: params[0].clone() }
        }
        "IV" => {
            arity(2)?;
            PlaneDescriptor::type_iv(params[0].clone(), params[1].clone())
                .map_err(|e| CliError::Usage(format!("--plane IV: {e}")))?
        }
        other => return Err(CliError::Usage(format!("unknown plane type {other:?}"))),
    };
    Ok(Ideal::Plane(p))
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateEntry {
    pub quantity: String,
    pub value: String,
    pub decimal: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub subspace: String,
    pub passed: bool,
    /// The exact quantities that must all vanish; on failure only the nonzero ones.
    pub certificate: Vec<CertificateEntry>,
}

fn certificate(t: &StructureTensor, ideal: &Ideal) -> Certificate {
    match ideal {
        Ideal::Line(l) => line_certificate(t, l),
        Ideal::Plane(p) => plane_certificate(t, p),
    }
}

pub fn verify(t: &StructureTensor, ideal: &Ideal) -> Verdict {
    let cert = certificate(t, ideal);
    let passed = cert.passed();
    let entry = |(name, v): &(String, Scalar)| CertificateEntry {
        quantity: name.clone(),
        value: v.to_string(),
        decimal: decimal(v),
    };
    let certificate = if passed {
        cert.entries.iter().map(entry).collect()
    } else {
        cert.violations().map(entry).collect()
    };
    Verdict {
        subspace: ideal.to_string(),
        passed,
        certificate,
    }
}

/// Re-verify every ideal listed in a report against `t`.
pub fn verify_report(t: &StructureTensor, report: &ReportDocument) -> Result<Vec<Verdict>, CliError> {
    report
        .ideals
        .iter()
        .map(|e| Ok(verify(t, &e.subspace.to_ideal(t.mode())?)))
        .collect()
}

pub fn render_text(verdicts: &[Verdict]) -> String {
    let mut s = String::new();
    for v in verdicts {
        let _ = writeln!(s, "{}: {}", if v.passed { "PASS" } else { "FAIL" }, v.subspace);
        if v.passed {
            let _ = writeln!(s, "  all {} certificate quantities vanish", v.certificate.len());
        }
        for c in v.certificate.iter().filter(|_| !v.passed) {
            let _ = writeln!(s, "  {} = {}", c.quantity, c.value);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use ideals3::families::{DiagonalVariant, FamilySpec};
    use ideals3::FieldMode;

    fn args(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn all_ones_line_passes() {
        let t = FamilySpec::AllOnes.build(FieldMode::RealRational).unwrap();
        let v = verify(&t, &parse_line(&args(&["1", "1", "-2"])).unwrap());
        assert!(v.passed);
    }

    #[test]
    fn failing_certificate_lists_nonzero_quantities() {
        let t = FamilySpec::DiagonalIdempotent(DiagonalVariant::I).build(FieldMode::RealRational).unwrap();
        let v = verify(&t, &parse_plane(&args(&["IV", "1", "1"])).unwrap());
        assert!(!v.passed);
        assert!(!v.certificate.is_empty());
        assert!(v.certificate.iter().all(|c| c.value != "0"));
        // the coordinate plane Lin{e1, e2} is an ideal of this algebra
        assert!(verify(&t, &parse_plane(&args(&["I"])).unwrap()).passed);
    }

    #[test]
    fn malformed_specs() {
        assert!(parse_line(&args(&["1", "2"])).is_err());
        assert!(parse_line(&args(&["0", "0", "0"])).is_err());
        assert!(parse_plane(&args(&["IV", "1", "0"])).is_err());
        assert!(parse_plane(&args(&["V"])).is_err());
        assert!(parse_plane(&args(&["II"])).is_err());
    }
}
