//! The classification report: building it from a tensor, re-checking it, and
//! rendering it as JSON or text.

use std::fmt::Write as _;

use ideals3::onedim::{IdealLine, OneDimEnumeration};
use ideals3::scalar::ScalarSolutions;
use ideals3::subspace::{is_ideal, quotient, Ideal, Line};
use ideals3::twodim::{TwoDimEnumeration, TypeIIResult, TypeIVSolutions};
use ideals3::{
    enumerate_onedim, enumerate_twodim, FieldMode, PlaneDescriptor, Scalar, StructureTensor,
};
use serde::{Deserialize, Serialize};

use crate::document::{FieldArg, TensorDocument};
use crate::error::CliError;
use crate::exact::{decimal, vector_from_json, vector_json, ExactScalar, VectorJson};

pub const ZERO_PRODUCT_FLAG: &str = "zero product: every subspace is an ideal";
/// Combined one- plus two-dimensional counts above this are noted for inspection.
pub const COMBINED_NOTE_THRESHOLD: usize = 4;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: TensorDocument,
    pub flags: Vec<String>,
    pub annihilator: AnnihilatorReport,
    pub one_dimensional: OneDimReport,
    pub two_dimensional: TwoDimReport,
    pub diagnostics: Diagnostics,
    pub ideals: Vec<IdealEntry>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<QuotientReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnihilatorReport {
    pub dimension: usize,
    pub basis: Vec<VectorJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OneDimReport {
    /// `"finite"` or `"infinite"`.
    pub kind: String,
    pub count: Option<usize>,
    /// A subspace every line of which is an ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<LineFamilyReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineFamilyReport {
    pub span: Vec<VectorJson>,
    /// Common eigenvalues of the six multiplication matrices on the span.
    pub eigenvalues: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarSetReport {
    /// `"finite"`, `"empty"` or `"all"`.
    pub kind: String,
    pub values: Vec<ExactScalar>,
    pub decimal: Vec<String>,
    pub k_condition: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    pub x: ExactScalar,
    pub y: ExactScalar,
    pub decimal: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneFamilyReport {
    pub shape: String,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<PointReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TypeIVReport {
    pub kind: String,
    pub route: String,
    pub points: Vec<PointReport>,
    pub families: Vec<PlaneFamilyReport>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoDimReport {
    pub total: Option<usize>,
    pub type_i: bool,
    pub type_ii: ScalarSetReport,
    pub type_iii: ScalarSetReport,
    pub type_iv: TypeIVReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub commutative: bool,
    pub k_condition_ii: String,
    pub k_condition_iii: String,
    /// Rank of the 12×7 coefficient matrix of the type-IV equations.
    pub rank_m: usize,
    /// Rank, determinant and augmented rank of the linearized symmetric system.
    pub rank_t: usize,
    pub rank_tv: usize,
    pub det_t: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum IdealSpec {
    Line {
        direction: VectorJson,
    },
    Plane {
        #[serde(rename = "type")]
        plane_type: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        x: Option<ExactScalar>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        y: Option<ExactScalar>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub index: usize,
    pub dimension: usize,
    pub descriptor: String,
    /// `"listed"` for isolated ideals, `"family member"` for a sampled member of an infinite family.
    pub origin: String,
    pub subspace: IdealSpec,
    pub verification: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub ideal_index: usize,
    pub ideal: String,
    pub dimension: usize,
    /// Representatives of the quotient basis.
    pub complement: Vec<VectorJson>,
    /// `table[a][b]`: coordinates of `ē_a ē_b` in the quotient basis.
    pub table: Vec<Vec<Vec<ExactScalar>>>,
}

// ---------------------------------------------------------------------------
// Ideal specs
// ---------------------------------------------------------------------------

impl IdealSpec {
    pub fn from_ideal(i: &Ideal) -> Self {
        match i {
            Ideal::Line(l) => IdealSpec::Line {
                direction: vector_json(l.direction()),
            },
            Ideal::Plane(p) => {
                let ex = |s: &Scalar| Some(ExactScalar::from_scalar(s));
                let (x, y) = match p {
                    PlaneDescriptor::TypeI => (None, None),
                    PlaneDescriptor::TypeII { x } | PlaneDescriptor::TypeIII { x } => (ex(x), None),
                    PlaneDescriptor::TypeIV { x, y } => (ex(x), ex(y)),
                };
                IdealSpec::Plane {
                    plane_type: p.type_name().to_string(),
                    x,
                    y,
                }
            }
        }
    }

    pub fn to_ideal(&self, mode: FieldMode) -> Result<Ideal, CliError> {
        match self {
            IdealSpec::Line { direction } => Ok(Ideal::Line(Line::new(&vector_from_json(direction, mode)?)?)),
            IdealSpec::Plane { plane_type, x, y } => {
                let get = |s: &Option<ExactScalar>, name: &str| -> Result<Scalar, CliError> {
                    s.as_ref()
                        .ok_or_else(|| CliError::Parse {
                            origin: format!("type {plane_type} plane"),
                            message: format!("missing parameter {name}"),
                        })?
                        .to_scalar(mode)
                };
                let p = match plane_type.as_str() {
                    "I" => PlaneDescriptor::TypeI,
                    "II" => PlaneDescriptor::TypeII { x: get(x, "x")? },
                    "III" => PlaneDescriptor::TypeIII { x: get(x, "x")? },
                    "IV" => PlaneDescriptor::type_iv(get(x, "x")?, get(y, "y")?)?,
                    other => {
                        return Err(CliError::Parse {
                            origin: "plane".into(),
                            message: format!("unknown plane type {other:?}"),
                        })
                    }
                };
                Ok(Ideal::Plane(p))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Building
// ---------------------------------------------------------------------------

fn scalar_set(r: &TypeIIResult) -> ScalarSetReport {
    let (kind, values): (&str, Vec<Scalar>) = match &r.solutions {
        ScalarSolutions::AllScalars => ("all", vec![]),
        ScalarSolutions::Empty => ("empty", vec![]),
        ScalarSolutions::Finite(v) => ("finite", v.clone()),
    };
    ScalarSetReport {
        kind: kind.into(),
        decimal: values.iter().map(decimal).collect(),
        values: values.iter().map(ExactScalar::from_scalar).collect(),
        k_condition: r.diagnostic.to_string(),
    }
}

fn point(x: &Scalar, y: &Scalar) -> PointReport {
    PointReport {
        x: ExactScalar::from_scalar(x),
        y: ExactScalar::from_scalar(y),
        decimal: [decimal(x), decimal(y)],
    }
}

/// Isolated ideals first (lines, then planes by type), then one sampled member per
/// infinite family.
fn collect_ideals(t: &StructureTensor, one: &OneDimEnumeration, two: &TwoDimEnumeration) -> Vec<(Ideal, &'static str)> {
    const LISTED: &str = "listed";
    const MEMBER: &str = "family member";
    let mut out: Vec<(Ideal, &str)> = one
        .listed()
        .iter()
        .map(|l: &IdealLine| (Ideal::Line(l.line.clone()), LISTED))
        .collect();
    out.extend(two.finite_planes().into_iter().map(|p| (Ideal::Plane(p), LISTED)));
    if let OneDimEnumeration::Infinite(f) = one {
        if let Ok(l) = f.member(&Scalar::from_int(1), &Scalar::from_int(1)) {
            out.push((Ideal::Line(l), MEMBER));
        }
    }
    let two_x = Scalar::from_int(2);
    if two.type_ii.solutions == ScalarSolutions::AllScalars {
        out.push((Ideal::Plane(PlaneDescriptor::TypeII { x: two_x.clone() }), MEMBER));
    }
    if two.type_iii.solutions == ScalarSolutions::AllScalars {
        out.push((Ideal::Plane(PlaneDescriptor::TypeIII { x: two_x }), MEMBER));
    }
    for f in two.type_iv.solutions.families() {
        if let Some((x, y)) = f.sample(t.mode()) {
            out.push((Ideal::Plane(PlaneDescriptor::TypeIV { x, y }), MEMBER));
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    pub check: bool,
    pub quotient: Option<usize>,
}

/// Run both enumerations and assemble the report.
pub fn classify(t: &StructureTensor, input: TensorDocument, opts: &ClassifyOptions) -> Result<ReportDocument, CliError> {
    let one = enumerate_onedim(t);
    let two = enumerate_twodim(t)?;
    let ann = t.annihilator();

    let mut flags = Vec::new();
    if t.is_zero() {
        flags.push(ZERO_PRODUCT_FLAG.to_string());
    }
    if t.is_commutative() {
        flags.push("commutative".to_string());
    }
    if one.count().is_none() || two.is_infinite() {
        flags.push("infinitely many ideals".to_string());
    }

    let one_dimensional = OneDimReport {
        kind: if one.count().is_some() { "finite" } else { "infinite" }.into(),
        count: one.count(),
        family: match &one {
            OneDimEnumeration::Infinite(f) => Some(LineFamilyReport {
                span: f.span.basis.iter().map(vector_json).collect(),
                eigenvalues: f.eigenvalues.iter().map(|e| e.to_string()).collect(),
            }),
            OneDimEnumeration::Finite(_) => None,
        },
    };

    let iv = &two.type_iv;
    let type_iv = TypeIVReport {
        kind: match iv.solutions {
            TypeIVSolutions::Empty => "empty",
            TypeIVSolutions::Finite(_) => "finite",
            TypeIVSolutions::Infinite { .. } => "infinite",
        }
        .into(),
        route: format!("{:?}", iv.route).to_lowercase(),
        points: iv.solutions.points().iter().map(|(x, y)| point(x, y)).collect(),
        families: iv
            .solutions
            .families()
            .iter()
            .map(|f| PlaneFamilyReport {
                shape: f.shape().to_string(),
                description: f.to_string(),
                sample: f.sample(t.mode()).map(|(x, y)| point(&x, &y)),
            })
            .collect(),
        notes: iv.notes.clone(),
    };
    let two_dimensional = TwoDimReport {
        total: two.total(),
        type_i: two.type_i,
        type_ii: scalar_set(&two.type_ii),
        type_iii: scalar_set(&two.type_iii),
        type_iv,
    };
    let ts = &iv.t_system;
    let diagnostics = Diagnostics {
        commutative: t.is_commutative(),
        k_condition_ii: two.type_ii.diagnostic.to_string(),
        k_condition_iii: two.type_iii.diagnostic.to_string(),
        rank_m: iv.equations.rank,
        rank_t: ts.rank_t,
        rank_tv: ts.rank_tv,
        det_t: ts.det.to_string(),
    };

    let collected = collect_ideals(t, &one, &two);
    let mut ideals = Vec::with_capacity(collected.len());
    for (index, (ideal, origin)) in collected.iter().enumerate() {
        if !is_ideal(t, ideal) {
            return Err(CliError::Engine(ideals3::Error::InconsistencyDetected(format!(
                "reported {ideal} fails verification"
            ))));
        }
        ideals.push(IdealEntry {
            index,
            dimension: ideal.basis().len(),
            descriptor: ideal.to_string(),
            origin: origin.to_string(),
            subspace: IdealSpec::from_ideal(ideal),
            verification: "passed".into(),
        });
    }

    let mut notes = Vec::new();
    if let (Some(n1), Some(n2)) = (one.count(), two.total()) {
        if n1 + n2 > COMBINED_NOTE_THRESHOLD {
            notes.push(format!(
                "{n1} one-dimensional and {n2} two-dimensional ideals: {} in total",
                n1 + n2
            ));
        }
    }

    let quotient = match opts.quotient {
        None => None,
        Some(idx) => {
            let (ideal, _) = collected.get(idx).ok_or_else(|| {
                CliError::Usage(format!("--quotient {idx}: only {} ideals are listed", collected.len()))
            })?;
            let q = quotient(t, ideal)?;
            Some(QuotientReport {
                ideal_index: idx,
                ideal: ideal.to_string(),
                dimension: q.dimension(),
                complement: q.complement.iter().map(vector_json).collect(),
                table: q
                    .constants
                    .iter()
                    .map(|row| row.iter().map(|c| c.iter().map(ExactScalar::from_scalar).collect()).collect())
                    .collect(),
            })
        }
    };

    let report = ReportDocument {
        input,
        flags,
        annihilator: AnnihilatorReport {
            dimension: ann.dimension(),
            basis: ann.basis.iter().map(vector_json).collect(),
        },
        one_dimensional,
        two_dimensional,
        diagnostics,
        ideals,
        notes,
        quotient,
    };
    if opts.check {
        check_report(t, &report, &one, &two)?;
    }
    Ok(report)
}

/// Re-verify everything the report claims, starting from its serialized form.
fn check_report(
    t: &StructureTensor,
    report: &ReportDocument,
    one: &OneDimEnumeration,
    two: &TwoDimEnumeration,
) -> Result<(), CliError> {
    let text = serde_json::to_string(report).map_err(|e| CliError::Check(e.to_string()))?;
    let parsed: ReportDocument = serde_json::from_str(&text).map_err(|e| CliError::Check(e.to_string()))?;
    if parsed != *report {
        return Err(CliError::Check("report does not survive a serialization round trip".into()));
    }
    for entry in &parsed.ideals {
        let ideal = entry.subspace.to_ideal(t.mode())?;
        if !is_ideal(t, &ideal) {
            return Err(CliError::Check(format!("ideal #{} ({}) fails re-verification", entry.index, entry.descriptor)));
        }
        // the quotient product must not depend on the representatives
        let q = quotient(t, &ideal)?;
        let basis = ideal.basis();
        for (a, ca) in q.complement.iter().enumerate() {
            for (b, cb) in q.complement.iter().enumerate() {
                let shifted = &(ca + &basis[0]) + &basis[basis.len() - 1];
                if q.coset_product(t, &shifted, cb) != q.constants[a][b] || q.coset_product(t, ca, &(cb + &basis[0])) != q.constants[a][b] {
                    return Err(CliError::Check(format!("quotient by ideal #{} is not well defined", entry.index)));
                }
            }
        }
    }
    if let OneDimEnumeration::Infinite(f) = one {
        if !f.verify(t) {
            return Err(CliError::Check("family of ideal lines fails verification".into()));
        }
    }
    for f in two.type_iv.solutions.families() {
        if !two.type_iv.equations.polys.iter().all(|p| f.annihilated_by(p)) {
            return Err(CliError::Check(format!("type IV family {f} fails the symbolic check")));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn show(s: &ExactScalar) -> String {
    match s {
        ExactScalar::Base(b) => b.clone(),
        ExactScalar::Algebraic { decimal, .. } => format!("≈{decimal}"),
    }
}

fn show_vec(v: &VectorJson) -> String {
    format!("({})", v.iter().map(show).collect::<Vec<_>>().join(", "))
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str, origin: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::json(origin, &e))
    }

    pub fn field_mode(&self) -> FieldMode {
        self.input.field_mode.into()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let name = self.input.name.as_deref().or(self.input.provenance.as_deref()).unwrap_or("tensor");
        let field = match self.input.field_mode {
            FieldArg::Real => "real",
            FieldArg::Complex => "complex",
        };
        let _ = writeln!(s, "{name} [{field}]");
        for f in &self.flags {
            let _ = writeln!(s, "  flag: {f}");
        }
        let _ = writeln!(
            s,
            "annihilator: dimension {}{}",
            self.annihilator.dimension,
            if self.annihilator.basis.is_empty() {
                String::new()
            } else {
                format!(", basis {}", self.annihilator.basis.iter().map(show_vec).collect::<Vec<_>>().join(" "))
            }
        );
        let od = &self.one_dimensional;
        match od.count {
            Some(n) => {
                let _ = writeln!(s, "one-dimensional ideals: {n}");
            }
            None => {
                let span = od.family.as_ref().map(|f| f.span.iter().map(show_vec).collect::<Vec<_>>().join(" "));
                let _ = writeln!(s, "one-dimensional ideals: infinitely many (every line in span {})", span.unwrap_or_default());
            }
        }
        let td = &self.two_dimensional;
        let total = td.total.map_or("infinitely many".to_string(), |n| n.to_string());
        let _ = writeln!(s, "two-dimensional ideals: {total}");
        let _ = writeln!(s, "  type I: {}", if td.type_i { "yes" } else { "no" });
        for (label, set) in [("II", &td.type_ii), ("III", &td.type_iii)] {
            let body = match set.kind.as_str() {
                "all" => "every x".to_string(),
                "empty" => "none".to_string(),
                _ => format!("x in {{{}}}", set.values.iter().map(show).collect::<Vec<_>>().join(", ")),
            };
            let _ = writeln!(s, "  type {label}: {body} [{}]", set.k_condition);
        }
        let iv = &td.type_iv;
        let mut parts: Vec<String> = iv.points.iter().map(|p| format!("({}, {})", show(&p.x), show(&p.y))).collect();
        parts.extend(iv.families.iter().map(|f| f.description.clone()));
        let body = if parts.is_empty() { "none".to_string() } else { parts.join("; ") };
        let _ = writeln!(s, "  type IV: {body} [{}]", iv.route);
        let d = &self.diagnostics;
        let _ = writeln!(
            s,
            "diagnostics: rank M = {}, rank T = {}, rank T|V = {}, det T = {}, commutative = {}",
            d.rank_m, d.rank_t, d.rank_tv, d.det_t, d.commutative
        );
        let _ = writeln!(s, "ideals:");
        for e in &self.ideals {
            let _ = writeln!(s, "  [{}] {} ({}): {}", e.index, e.descriptor, e.origin, e.verification);
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        if let Some(q) = &self.quotient {
            let _ = writeln!(s, "quotient by [{}] {} (dimension {}):", q.ideal_index, q.ideal, q.dimension);
            for (a, row) in q.table.iter().enumerate() {
                for (b, c) in row.iter().enumerate() {
                    let _ = writeln!(s, "  ē{} ē{} = {}", a + 1, b + 1, show_vec(c));
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ideals3::families::FamilySpec;

    fn report_for(spec: FamilySpec) -> ReportDocument {
        let t = spec.build(FieldMode::RealRational).unwrap();
        let doc = TensorDocument::from_tensor(&t, Some(spec.to_string()));
        classify(&t, doc, &ClassifyOptions { check: true, quotient: None }).unwrap()
    }

    #[test]
    fn zero_tensor_is_flagged() {
        let r = report_for(FamilySpec::Zero);
        assert!(r.flags.iter().any(|f| f == ZERO_PRODUCT_FLAG));
        assert_eq!(r.one_dimensional.kind, "infinite");
        assert_eq!(r.two_dimensional.total, None);
    }

    #[test]
    fn all_ones_has_no_type_i_and_infinitely_many_lines() {
        let r = report_for(FamilySpec::AllOnes);
        assert!(!r.two_dimensional.type_i);
        assert_eq!(r.one_dimensional.count, None);
    }

    #[test]
    fn diagonal_combined_count_is_noted() {
        let r = report_for(FamilySpec::DiagonalIdempotent(ideals3::families::DiagonalVariant::I));
        assert_eq!(r.one_dimensional.count, Some(3));
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn json_round_trip_and_ideal_specs() {
        let r = report_for(FamilySpec::Section7(ideals3::families::Section7Params::rank4()));
        let back = ReportDocument::from_json(&r.to_json(), "mem").unwrap();
        assert_eq!(back, r);
        let points: Vec<_> = r.two_dimensional.type_iv.points.iter().map(|p| (p.x.clone(), p.y.clone())).collect();
        assert!(points.contains(&(ExactScalar::Base("0".into()), ExactScalar::Base("1".into()))));
        assert!(points.contains(&(ExactScalar::Base("1".into()), ExactScalar::Base("1".into()))));
    }

    #[test]
    fn quotient_table_is_emitted() {
        let t = FamilySpec::AllOnes.build(FieldMode::RealRational).unwrap();
        let doc = TensorDocument::from_tensor(&t, None);
        let r = classify(&t, doc, &ClassifyOptions { check: false, quotient: Some(0) }).unwrap();
        let q = r.quotient.unwrap();
        assert_eq!(q.table.len(), q.dimension);
    }
}
