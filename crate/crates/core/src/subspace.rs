//! Lines and planes of a 3-dimensional algebra: canonical forms, the type I–IV
//! classification of planes, exact ideal tests with certificates, and quotients.

use std::fmt;

use crate::algebra::{StructureTensor, Vector3};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A 1-dimensional subspace `𝕂u`, stored with the first nonzero coordinate of `u` equal to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    direction: Vector3,
}

impl Line {
    pub fn new(v: &Vector3) -> Result<Line> {
        let p = v
            .pivot()
            .ok_or_else(|| Error::DegenerateInput("the zero vector spans no line".into()))?;
        let inv = v[p].inv().unwrap();
        Ok(Line {
            direction: v.scale(&inv),
        })
    }

    pub fn from_ints(v: [i64; 3]) -> Result<Line> {
        Line::new(&Vector3::from_ints(v))
    }

    pub fn direction(&self) -> &Vector3 {
        &self.direction
    }

    /// Index of the coordinate normalized to 1.
    pub fn pivot(&self) -> usize {
        self.direction.pivot().unwrap()
    }

    pub fn contains(&self, v: &Vector3) -> bool {
        self.direction.cross(v).is_zero()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{}", self.direction)
    }
}

/// A plane in one of the four canonical forms relative to the ordered basis.
#[derive(Clone, Debug, PartialEq)]
pub enum PlaneDescriptor {
    /// `Lin{e₁, e₂}`.
    TypeI,
    /// `Lin{x·e₁ + e₂, e₃}`.
    TypeII { x: Scalar },
    /// `Lin{x·e₂ + e₃, e₁}`.
    TypeIII { x: Scalar },
    /// `Lin{x·e₁ + e₂, e₁ + y·e₃}` with `y ≠ 0`.
    TypeIV { x: Scalar, y: Scalar },
}

impl PlaneDescriptor {
    pub fn type_iv(x: Scalar, y: Scalar) -> Result<PlaneDescriptor> {
        if y.is_zero() {
            return Err(Error::InvalidParameters("type IV requires y ≠ 0".into()));
        }
        Ok(PlaneDescriptor::TypeIV { x, y })
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            PlaneDescriptor::TypeI => "I",
            PlaneDescriptor::TypeII { .. } => "II",
            PlaneDescriptor::TypeIII { .. } => "III",
            PlaneDescriptor::TypeIV { .. } => "IV",
        }
    }

    /// The basis pair of the canonical form.
    pub fn basis(&self) -> [Vector3; 2] {
        let one = Scalar::from_int(1);
        let zero = Scalar::from_int(0);
        match self {
            PlaneDescriptor::TypeI => [Vector3::e(0), Vector3::e(1)],
            PlaneDescriptor::TypeII { x } => {
                [Vector3::new(x.clone(), one, zero), Vector3::e(2)]
            }
            PlaneDescriptor::TypeIII { x } => {
                [Vector3::new(zero, x.clone(), one), Vector3::e(0)]
            }
            PlaneDescriptor::TypeIV { x, y } => [
                Vector3::new(x.clone(), one.clone(), zero.clone()),
                Vector3::new(one, zero, y.clone()),
            ],
        }
    }

    /// A normal vector: `n·w = 0` exactly for `w` in the plane.
    pub fn normal(&self) -> Vector3 {
        let [u, v] = self.basis();
        u.cross(&v)
    }

    pub fn contains(&self, w: &Vector3) -> bool {
        self.normal().dot(w).is_zero()
    }

    /// Index of the standard basis vector used to complete the plane to a basis.
    ///
    /// `e₃` for type I, `e₁` for type II, `e₂` for type III, and `e₂` for type IV
    /// unless `x = 0` (then `e₂` lies in the plane and `e₃` is used).
    pub fn complement_index(&self) -> usize {
        match self {
            PlaneDescriptor::TypeI => 2,
            PlaneDescriptor::TypeII { .. } => 0,
            PlaneDescriptor::TypeIII { .. } => 1,
            PlaneDescriptor::TypeIV { x, .. } => {
                if x.is_zero() {
                    2
                } else {
                    1
                }
            }
        }
    }
}

impl fmt::Display for PlaneDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneDescriptor::TypeI => write!(f, "type I"),
            PlaneDescriptor::TypeII { x } => write!(f, "type II (x = {x})"),
            PlaneDescriptor::TypeIII { x } => write!(f, "type III (x = {x})"),
            PlaneDescriptor::TypeIV { x, y } => write!(f, "type IV (x = {x}, y = {y})"),
        }
    }
}

/// The canonical descriptor of `Lin{u, v}`.
///
/// Reads the form off the normal `n = u × v`: the plane contains `e₃` iff `n₃ = 0`,
/// contains `e₁` iff `n₁ = 0`, and the remaining ratios are the parameters.
pub fn classify_plane(u: &Vector3, v: &Vector3) -> Result<PlaneDescriptor> {
    let n = u.cross(v);
    if n.is_zero() {
        return Err(Error::DependentVectors);
    }
    let [n1, n2, n3] = n.coords();
    Ok(if n1.is_zero() {
        if n2.is_zero() {
            PlaneDescriptor::TypeI
        } else {
            PlaneDescriptor::TypeIII { x: -(n3.div_by(n2)) }
        }
    } else if n3.is_zero() {
        PlaneDescriptor::TypeII { x: -(n2.div_by(n1)) }
    } else {
        PlaneDescriptor::TypeIV {
            x: -(n2.div_by(n1)),
            y: -(n1.div_by(n3)),
        }
    })
}

/// An ideal candidate of either dimension.
#[derive(Clone, Debug, PartialEq)]
pub enum Ideal {
    Line(Line),
    Plane(PlaneDescriptor),
}

impl Ideal {
    pub fn basis(&self) -> Vec<Vector3> {
        match self {
            Ideal::Line(l) => vec![l.direction().clone()],
            Ideal::Plane(p) => p.basis().to_vec(),
        }
    }

    pub fn contains(&self, w: &Vector3) -> bool {
        match self {
            Ideal::Line(l) => l.contains(w),
            Ideal::Plane(p) => p.contains(w),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ideal::Line(l) => write!(f, "{l}"),
            Ideal::Plane(p) => write!(f, "{p}"),
        }
    }
}

/// The exact quantities deciding an ideal test; all must vanish for an ideal.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub entries: Vec<(String, Scalar)>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_zero())
    }

    pub fn violations(&self) -> impl Iterator<Item = &(String, Scalar)> {
        self.entries.iter().filter(|(_, v)| !v.is_zero())
    }
}

const MATRIX_NAMES: [&str; 6] = ["M̂1", "M̂2", "M̂3", "M̃1", "M̃2", "M̃3"];

/// The 2×2 minors of `(M·u | u)` for the six multiplication matrices.
pub fn line_certificate(t: &StructureTensor, line: &Line) -> Certificate {
    let u = line.direction();
    let mut entries = Vec::with_capacity(18);
    for (name, m) in MATRIX_NAMES.iter().zip(t.multiplication_matrices()) {
        let c = m.mul_vec(u).cross(u);
        for (idx, val) in c.0.into_iter().enumerate() {
            entries.push((format!("{name}·u × u [{}]", idx + 1), val));
        }
    }
    Certificate { entries }
}

/// `e_k·u ∈ 𝕂u` and `u·e_k ∈ 𝕂u` for `k = 1, 2, 3`.
pub fn is_ideal_line(t: &StructureTensor, line: &Line) -> bool {
    let u = line.direction();
    t.multiplication_matrices()
        .iter()
        .all(|m| m.mul_vec(u).cross(u).is_zero())
}

/// The determinants `det(e_i·w | u | v)` and `det(w·e_i | u | v)` for `w ∈ {u, v}`.
pub fn plane_certificate(t: &StructureTensor, plane: &PlaneDescriptor) -> Certificate {
    let basis = plane.basis();
    let n = plane.normal();
    let mut entries = Vec::with_capacity(12);
    for (wname, w) in ["u", "v"].iter().zip(&basis) {
        for i in 0..3 {
            let e = Vector3::e(i);
            entries.push((
                format!("det(e{}·{wname}, u, v)", i + 1),
                n.dot(&t.product(&e, w)),
            ));
            entries.push((
                format!("det({wname}·e{}, u, v)", i + 1),
                n.dot(&t.product(w, &e)),
            ));
        }
    }
    Certificate { entries }
}

pub fn is_ideal_plane(t: &StructureTensor, plane: &PlaneDescriptor) -> bool {
    plane_certificate(t, plane).passed()
}

pub fn is_ideal(t: &StructureTensor, ideal: &Ideal) -> bool {
    match ideal {
        Ideal::Line(l) => is_ideal_line(t, l),
        Ideal::Plane(p) => is_ideal_plane(t, p),
    }
}

/// The algebra `A/I` in the basis of cosets of a fixed complement.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub ideal: Ideal,
    /// Representatives of the quotient basis.
    pub complement: Vec<Vector3>,
    /// `constants[a][b][c]`: coefficient of `ē_c` in `ē_a ē_b`.
    pub constants: Vec<Vec<Vec<Scalar>>>,
}

impl QuotientAlgebra {
    pub fn dimension(&self) -> usize {
        self.complement.len()
    }

    /// Coordinates of `w + I` in the complement basis.
    pub fn reduce(&self, w: &Vector3) -> Vec<Scalar> {
        match &self.ideal {
            Ideal::Line(l) => {
                let u = l.direction();
                let p = l.pivot();
                let alpha = w[p].clone();
                (0..3)
                    .filter(|&j| j != p)
                    .map(|j| &w[j] - &(&alpha * &u[j]))
                    .collect()
            }
            Ideal::Plane(pl) => {
                let n = pl.normal();
                let m = pl.complement_index();
                vec![n.dot(w).div_by(&n[m])]
            }
        }
    }

    /// `(a + I)(b + I)` computed from the given representatives.
    pub fn coset_product(&self, t: &StructureTensor, a: &Vector3, b: &Vector3) -> Vec<Scalar> {
        self.reduce(&t.product(a, b))
    }
}

/// Build `A/I`; fails with `NotAnIdeal` unless `I` is an ideal of `t`.
pub fn quotient(t: &StructureTensor, ideal: &Ideal) -> Result<QuotientAlgebra> {
    if !is_ideal(t, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let complement: Vec<Vector3> = match ideal {
        Ideal::Line(l) => {
            let p = l.pivot();
            (0..3).filter(|&j| j != p).map(Vector3::e).collect()
        }
        Ideal::Plane(pl) => vec![Vector3::e(pl.complement_index())],
    };
    let mut q = QuotientAlgebra {
        ideal: ideal.clone(),
        complement,
        constants: Vec::new(),
    };
    q.constants = q
        .complement
        .iter()
        .map(|a| q.complement.iter().map(|b| q.coset_product(t, a, b)).collect())
        .collect();
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{BaseScalar, FieldMode};
    use proptest::prelude::*;

    fn tensor(v: &[i64]) -> StructureTensor {
        StructureTensor::from_fn(FieldMode::RealRational, |i, j, k| BaseScalar::from_int(v[9 * i + 3 * j + k]))
    }

    fn all_ones() -> StructureTensor {
        tensor(&[1; 27])
    }

    /// e1² = e1, e2² = e2, e3² = e3.
    fn example_i() -> StructureTensor {
        StructureTensor::from_fn(FieldMode::RealRational, |i, j, k| BaseScalar::from_int((i == j && j == k) as i64))
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Base(BaseScalar::from_ratio(n, d))
    }

    #[test]
    fn classify_examples() {
        let e = Vector3::e;
        assert_eq!(classify_plane(&e(0), &e(1)).unwrap(), PlaneDescriptor::TypeI);
        let v = Vector3::from_ints([0, 1, 2]);
        assert_eq!(classify_plane(&e(0), &v).unwrap(), PlaneDescriptor::TypeIII { x: q(1, 2) });
        let u = Vector3::from_ints([1, 1, 0]);
        let v = Vector3::from_ints([1, 0, 1]);
        assert_eq!(
            classify_plane(&u, &v).unwrap(),
            PlaneDescriptor::TypeIV { x: q(1, 1), y: q(1, 1) }
        );
        assert!(matches!(
            classify_plane(&u, &u.scale(&q(3, 1))),
            Err(Error::DependentVectors)
        ));
        assert!(matches!(classify_plane(&Vector3::zero(), &u), Err(Error::DependentVectors)));
    }

    #[test]
    fn line_examples() {
        assert!(is_ideal_line(&all_ones(), &Line::from_ints([1, 1, -2]).unwrap()));
        // e1² = e1, e2² = e3, e3² = e2
        let mut v = [0i64; 27];
        v[0] = 1;
        v[9 + 3 + 2] = 1;
        v[18 + 6 + 1] = 1;
        assert!(is_ideal_line(&tensor(&v), &Line::from_ints([1, 0, 0]).unwrap()));
        // e1² = e1, e2² = e2, e3² = e2
        let mut w = [0i64; 27];
        w[0] = 1;
        w[9 + 3 + 1] = 1;
        w[18 + 6 + 1] = 1;
        let cert = line_certificate(&tensor(&w), &Line::from_ints([0, 0, 1]).unwrap());
        assert!(!cert.passed());
        assert!(cert.violations().count() > 0);
        assert_eq!(Line::from_ints([0, 2, 4]).unwrap(), Line::from_ints([0, -1, -2]).unwrap());
    }

    #[test]
    fn plane_examples() {
        let z = StructureTensor::zero(FieldMode::RealRational);
        assert!(is_ideal_plane(&z, &PlaneDescriptor::TypeIII { x: q(5, 7) }));
        // only ω₃₃₃ among the ω_ij3 is nonzero, and (3,3) is exempt: Lin{e1, e2} is an ideal
        assert!(is_ideal_plane(&example_i(), &PlaneDescriptor::TypeI));
        let skew = PlaneDescriptor::TypeIV { x: q(1, 1), y: q(1, 1) };
        let cert = plane_certificate(&example_i(), &skew);
        assert!(!cert.passed());
    }

    #[test]
    fn quotient_examples() {
        let q1 = quotient(&example_i(), &Ideal::Line(Line::from_ints([1, 0, 0]).unwrap())).unwrap();
        assert_eq!(q1.dimension(), 2);
        let one = Scalar::from_int(1);
        let zero = Scalar::from_int(0);
        assert_eq!(q1.constants[0][0], vec![one.clone(), zero.clone()]);
        assert_eq!(q1.constants[1][1], vec![zero.clone(), one.clone()]);
        assert_eq!(q1.constants[0][1], vec![zero.clone(), zero.clone()]);

        let z = StructureTensor::zero(FieldMode::RealRational);
        let qz = quotient(&z, &Ideal::Plane(PlaneDescriptor::TypeII { x: q(2, 1) })).unwrap();
        assert_eq!(qz.constants, vec![vec![vec![zero.clone()]]]);

        // the sum-zero plane c1 + c2 + c3 = 0 is type IV with x = −1, y = −1
        let plane = classify_plane(&Vector3::from_ints([1, -1, 0]), &Vector3::from_ints([1, 0, -1])).unwrap();
        let qa = quotient(&all_ones(), &Ideal::Plane(plane)).unwrap();
        let e1 = Vector3::e(0);
        assert_eq!(qa.dimension(), 1);
        assert_eq!(qa.coset_product(&all_ones(), &e1, &e1), qa.reduce(&e1.scale(&Scalar::from_int(3))));

        assert!(matches!(
            quotient(&example_i(), &Ideal::Plane(PlaneDescriptor::TypeIV { x: q(1, 1), y: q(1, 1) })),
            Err(Error::NotAnIdeal)
        ));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-5i64..=5, 1i64..=4).prop_map(|(n, d)| q(n, d))
    }

    fn arb_descriptor() -> impl Strategy<Value = PlaneDescriptor> {
        prop_oneof![
            Just(PlaneDescriptor::TypeI),
            arb_scalar().prop_map(|x| PlaneDescriptor::TypeII { x }),
            arb_scalar().prop_map(|x| PlaneDescriptor::TypeIII { x }),
            (arb_scalar(), arb_scalar())
                .prop_filter("y ≠ 0", |(_, y)| !y.is_zero())
                .prop_map(|(x, y)| PlaneDescriptor::TypeIV { x, y }),
        ]
    }

    proptest! {
        #[test]
        fn reconstruct_then_classify(d in arb_descriptor(), a in arb_scalar(), b in arb_scalar(), c in arb_scalar(), e in arb_scalar()) {
            let [u, v] = d.basis();
            prop_assert_eq!(classify_plane(&u, &v).unwrap(), d.clone());
            // any other basis of the same plane
            let u2 = &u.scale(&a) + &v.scale(&b);
            let v2 = &u.scale(&c) + &v.scale(&e);
            if let Ok(d2) = classify_plane(&u2, &v2) {
                prop_assert_eq!(d2, d);
            }
        }

        #[test]
        fn lines_are_eigenvectors(v in proptest::collection::vec(-2i64..=2, 27), u in (-2i64..=2, -2i64..=2, -2i64..=2)) {
            let t = tensor(&v);
            let Ok(line) = Line::from_ints([u.0, u.1, u.2]) else { return Ok(()); };
            let d = line.direction();
            let eigen = t.multiplication_matrices().iter().all(|m| {
                let mu = m.mul_vec(d);
                let lambda = mu[line.pivot()].clone();
                mu == d.scale(&lambda)
            });
            prop_assert_eq!(is_ideal_line(&t, &line), eigen);
        }
    }
}
