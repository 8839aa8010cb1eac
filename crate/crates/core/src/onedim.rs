//! One-dimensional ideals.
//!
//! `𝕂u` is an ideal iff `u` is a common eigenvector of the six multiplication
//! matrices `M̂_k, M̃_k`. The finitely many isolated solutions are found chart by
//! chart on the projective plane — `(1, s, t)`, `(0, 1, t)`, `(0, 0, 1)` — from the
//! vanishing of `(M·u) × u`. Infinitely many ideal lines occur exactly when some
//! plane is contained in a joint eigenspace of all six matrices, and that plane is
//! computed directly: a matrix acting as a scalar on a plane has that scalar as a
//! repeated (hence base-field) eigenvalue.

use crate::algebra::{Matrix3, StructureTensor, Subspace, Vector3};
use crate::error::{Error, Result};
use crate::poly::{poly_det, solve_bivariate, BiPoly, BivariateSolution, Matrix, UniPoly};
use crate::scalar::{roots_in_mode, BaseScalar, Field, Scalar};
use crate::subspace::{is_ideal_line, Line};

/// An ideal line with the eigenvalues `λ` of `M̂₁, M̂₂, M̂₃, M̃₁, M̃₂, M̃₃` on it.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealLine {
    pub line: Line,
    pub eigenvalues: [Scalar; 6],
}

impl IdealLine {
    fn new(t: &StructureTensor, line: Line) -> IdealLine {
        let u = line.direction();
        let p = line.pivot();
        let mats = t.multiplication_matrices();
        let eigenvalues = [0, 1, 2, 3, 4, 5].map(|i| mats[i].mul_vec(u)[p].clone());
        IdealLine { line, eigenvalues }
    }
}

/// A subspace (of dimension 2, or 3 for the zero product) all of whose lines are ideals.
#[derive(Clone, Debug, PartialEq)]
pub struct LineFamily {
    pub span: Subspace,
    /// Common eigenvalues of the six matrices on `span`.
    pub eigenvalues: [BaseScalar; 6],
    /// Ideal lines outside `span`.
    pub extra: Vec<IdealLine>,
}

impl LineFamily {
    /// The member `α·b₁ + β·b₂` (first two basis vectors of the span).
    pub fn member(&self, alpha: &Scalar, beta: &Scalar) -> Result<Line> {
        let b = &self.span.basis;
        Line::new(&(&b[0].scale(alpha) + &b[1].scale(beta)))
    }

    /// Exact proof that every line of the span is an ideal: each matrix acts on
    /// each basis vector by its recorded eigenvalue.
    pub fn verify(&self, t: &StructureTensor) -> bool {
        let mats = t.multiplication_matrices();
        self.span.basis.iter().all(|b| {
            mats.iter().zip(&self.eigenvalues).all(|(m, l)| {
                m.mul_vec(b) == b.scale(&Scalar::Base(l.clone()))
            })
        }) && self.extra.iter().all(|l| is_ideal_line(t, &l.line))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum OneDimEnumeration {
    Finite(Vec<IdealLine>),
    Infinite(LineFamily),
}

impl OneDimEnumeration {
    pub fn count(&self) -> Option<usize> {
        match self {
            OneDimEnumeration::Finite(v) => Some(v.len()),
            OneDimEnumeration::Infinite(_) => None,
        }
    }

    /// Every explicitly listed line (the finite list, or the extra lines of a family).
    pub fn listed(&self) -> &[IdealLine] {
        match self {
            OneDimEnumeration::Finite(v) => v,
            OneDimEnumeration::Infinite(f) => &f.extra,
        }
    }

    /// Whether `line` is an ideal according to this enumeration.
    pub fn contains(&self, line: &Line) -> bool {
        self.listed().iter().any(|l| &l.line == line)
            || matches!(self, OneDimEnumeration::Infinite(f) if f.span.contains(line.direction()))
    }
}

/// All one-dimensional ideals of `t`.
pub fn enumerate_onedim(t: &StructureTensor) -> OneDimEnumeration {
    let family = joint_eigenspace(t);
    let mut lines: Vec<Line> = Vec::new();
    let push = |l: Line, lines: &mut Vec<Line>| {
        let outside = family.as_ref().map_or(true, |(s, _)| !s.contains(l.direction()));
        if outside && !lines.contains(&l) {
            lines.push(l);
        }
    };

    // chart (1, s, t)
    let mats = t.multiplication_matrices();
    let polys: Vec<BiPoly> = mats.iter().flat_map(chart_polys_affine).collect();
    let points = match solve_bivariate(&polys, t.mode()) {
        BivariateSolution::Finite(p) => p,
        BivariateSolution::Curve { isolated, .. } => {
            assert!(family.is_some(), "a curve of ideal lines without a joint eigenplane");
            isolated
        }
        BivariateSolution::Whole => {
            assert!(family.is_some(), "every line ideal without a joint eigenspace");
            Vec::new()
        }
    };
    for (s, r) in points {
        push(Line::new(&Vector3::new(Scalar::from_int(1), s, r)).unwrap(), &mut lines);
    }

    // chart (0, 1, t)
    let g = mats
        .iter()
        .flat_map(chart_polys_line)
        .fold(UniPoly::zero(), |acc, p| acc.gcd(&p));
    if g.is_zero() {
        assert!(family.is_some(), "a chart of ideal lines without a joint eigenplane");
    } else {
        for r in roots_in_mode(&g, t.mode()) {
            push(
                Line::new(&Vector3::new(Scalar::from_int(0), Scalar::from_int(1), r)).unwrap(),
                &mut lines,
            );
        }
    }

    // the point (0, 0, 1)
    let e3 = Line::new(&Vector3::e(2)).unwrap();
    if is_ideal_line(t, &e3) {
        push(e3, &mut lines);
    }

    let listed: Vec<IdealLine> = lines.into_iter().map(|l| IdealLine::new(t, l)).collect();
    match family {
        Some((span, eigenvalues)) => OneDimEnumeration::Infinite(LineFamily {
            span,
            eigenvalues,
            extra: listed,
        }),
        None => OneDimEnumeration::Finite(listed),
    }
}

/// Components of `(M·u) × u` for `u = (1, x, y)`.
fn chart_polys_affine(m: &Matrix3) -> Vec<BiPoly> {
    let u = [BiPoly::one(), BiPoly::x(), BiPoly::y()];
    let w: Vec<BiPoly> = (0..3)
        .map(|r| {
            (0..3).fold(BiPoly::zero(), |acc, c| &acc + &u[c].scale(m.get(r, c)))
        })
        .collect();
    cross(&w, &u)
}

/// Components of `(M·u) × u` for `u = (0, 1, t)`.
fn chart_polys_line(m: &Matrix3) -> Vec<UniPoly> {
    let u = [UniPoly::zero(), UniPoly::one(), UniPoly::x()];
    let w: Vec<UniPoly> = (0..3)
        .map(|r| (0..3).fold(UniPoly::zero(), |acc, c| &acc + &u[c].scale(m.get(r, c))))
        .collect();
    cross(&w, &u)
}

fn cross<P>(w: &[P], u: &[P]) -> Vec<P>
where
    for<'a> &'a P: std::ops::Mul<&'a P, Output = P> + std::ops::Sub<&'a P, Output = P>,
    P: Sized,
{
    let m = |a: &P, b: &P, c: &P, d: &P| &(a * b) - &(c * d);
    vec![
        m(&w[1], &u[2], &w[2], &u[1]),
        m(&w[2], &u[0], &w[0], &u[2]),
        m(&w[0], &u[1], &w[1], &u[0]),
    ]
}

/// The eigenvalue `λ` with `rank(M − λI) ≤ 1`, if any (there is at most one).
fn plane_eigenvalue(m: &Matrix3) -> Option<BaseScalar> {
    let entries: Vec<Vec<UniPoly>> = (0..3)
        .map(|r| {
            (0..3)
                .map(|c| {
                    let a = UniPoly::constant(m.get(r, c).clone());
                    if r == c {
                        &a - &UniPoly::x()
                    } else {
                        a
                    }
                })
                .collect()
        })
        .collect();
    let chi = poly_det(entries);
    let repeated = chi.gcd(&chi.derivative()).squarefree_part();
    if repeated.degree() != Some(1) {
        return None;
    }
    let lambda = -repeated.coeff(0);
    (m.shifted(&lambda).rank() <= 1).then_some(lambda)
}

/// A subspace of dimension ≥ 2 on which every multiplication matrix is scalar.
fn joint_eigenspace(t: &StructureTensor) -> Option<(Subspace, [BaseScalar; 6])> {
    let mats = t.multiplication_matrices();
    let mut lambdas = Vec::with_capacity(6);
    for m in &mats {
        lambdas.push(plane_eigenvalue(m)?);
    }
    let stacked = Matrix::from_fn(18, 3, |r, c| {
        mats[r / 3].shifted(&lambdas[r / 3]).get(r % 3, c).clone()
    });
    let kernel = stacked.kernel();
    if kernel.len() < 2 {
        return None;
    }
    let basis = kernel
        .into_iter()
        .map(|v| Vector3::from_base([v[0].clone(), v[1].clone(), v[2].clone()]))
        .collect();
    let eigenvalues: [BaseScalar; 6] = lambdas.try_into().unwrap();
    Some((Subspace { basis }, eigenvalues))
}

/// Size class of the set of one-dimensional ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountClass {
    Infinite,
    Exact(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct OneDimCensus {
    pub ann_dim: usize,
    pub count_class: CountClass,
}

/// The annihilator dimension and the number of one-dimensional ideals, checked
/// against each other and against the infinite-family characterization.
pub fn onedim_census(t: &StructureTensor) -> Result<OneDimCensus> {
    let ann_dim = t.annihilator().dimension();
    let e = enumerate_onedim(t);
    let count_class = match e.count() {
        Some(n) => CountClass::Exact(n),
        None => CountClass::Infinite,
    };
    let fail = |msg: String| Err(Error::InconsistencyDetected(msg));
    match (ann_dim, count_class) {
        (2 | 3, CountClass::Exact(n)) => {
            return fail(format!("annihilator of dimension {ann_dim} but only {n} line ideals"))
        }
        (1, CountClass::Infinite) => {
            return fail("annihilator of dimension 1 but infinitely many line ideals".into())
        }
        (1, CountClass::Exact(n)) if !(1..=3).contains(&n) => {
            return fail(format!("annihilator of dimension 1 but {n} line ideals"))
        }
        (0, CountClass::Exact(n)) if n > 3 => {
            return fail(format!("{n} line ideals exceed the bound of 3"))
        }
        _ => {}
    }
    match &e {
        OneDimEnumeration::Infinite(f) => {
            if !f.verify(t) {
                return fail("family members are not ideals".into());
            }
            // witness triple b₁, b₂, b₁ + b₂
            let one = Scalar::from_int(1);
            let zero = Scalar::from_int(0);
            for (a, b) in [(&one, &zero), (&zero, &one), (&one, &one)] {
                if !is_ideal_line(t, &f.member(a, b)?) {
                    return fail("witness triple fails".into());
                }
            }
        }
        OneDimEnumeration::Finite(lines) => {
            // three coplanar ideal lines would force infinitely many
            for i in 0..lines.len() {
                for j in i + 1..lines.len() {
                    for k in j + 1..lines.len() {
                        let [a, b, c] = [i, j, k].map(|x| lines[x].line.direction());
                        if a.cross(b).dot(c).is_zero() {
                            return fail(format!(
                                "coplanar ideal lines {}, {}, {} in a finite list",
                                lines[i].line, lines[j].line, lines[k].line
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(OneDimCensus {
        ann_dim,
        count_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldMode;

    fn tensor(v: &[i64]) -> StructureTensor {
        StructureTensor::from_fn(FieldMode::RealRational, |i, j, k| BaseScalar::from_int(v[9 * i + 3 * j + k]))
    }

    fn idx(i: usize, j: usize, k: usize) -> usize {
        9 * (i - 1) + 3 * (j - 1) + (k - 1)
    }

    fn squares(sq: [usize; 3]) -> StructureTensor {
        let mut v = [0i64; 27];
        for (i, &k) in sq.iter().enumerate() {
            v[idx(i + 1, i + 1, k)] = 1;
        }
        tensor(&v)
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(enumerate_onedim(&squares([1, 2, 3])).count(), Some(3));
        assert_eq!(enumerate_onedim(&squares([1, 2, 2])).count(), Some(2));
        let e = enumerate_onedim(&squares([1, 3, 2]));
        assert_eq!(e.count(), Some(1));
        assert_eq!(e.listed()[0].line, Line::from_ints([1, 0, 0]).unwrap());
        // over ℂ nothing changes for (iii): e2 ± e3 fail too
        let c = squares([1, 3, 2]).with_mode(FieldMode::ComplexGaussian).unwrap();
        assert_eq!(enumerate_onedim(&c).count(), Some(1));
    }

    #[test]
    fn infinite_examples() {
        let ones = tensor(&[1; 27]);
        let OneDimEnumeration::Infinite(f) = enumerate_onedim(&ones) else {
            panic!("expected a family");
        };
        assert_eq!(f.span.dimension(), 2);
        assert!(f.span.contains(&Vector3::from_ints([1, 1, -2])));
        assert!(f.verify(&ones));
        let z = StructureTensor::zero(FieldMode::RealRational);
        let OneDimEnumeration::Infinite(f) = enumerate_onedim(&z) else {
            panic!("expected a family");
        };
        assert_eq!(f.span.dimension(), 3);
    }

    #[test]
    fn eigenvalues_are_recorded() {
        let t = squares([1, 2, 3]);
        let OneDimEnumeration::Finite(lines) = enumerate_onedim(&t) else {
            panic!()
        };
        let mats = t.multiplication_matrices();
        for l in &lines {
            for (m, lambda) in mats.iter().zip(&l.eigenvalues) {
                let u = l.line.direction();
                assert_eq!(m.mul_vec(u), u.scale(lambda));
            }
        }
    }

    #[test]
    fn irrational_and_complex_lines() {
        // e1·e2 = e3, e1·e3 = c·e2, all else zero: the ideal lines are (0, 1, t) with c·t² = 1
        for (c, real, complex) in [(2, 2, 2), (-2, 0, 2), (4, 2, 2)] {
            let mut v = [0i64; 27];
            v[idx(1, 2, 3)] = 1;
            v[idx(1, 3, 2)] = c;
            let t = tensor(&v);
            for (mode, expected) in [(FieldMode::RealRational, real), (FieldMode::ComplexGaussian, complex)] {
                let t = t.with_mode(mode).unwrap();
                let e = enumerate_onedim(&t);
                assert_eq!(e.count(), Some(expected), "c = {c}, {mode}");
                for l in e.listed() {
                    assert!(is_ideal_line(&t, &l.line));
                    let u = l.line.direction();
                    assert_eq!(&u[2] * &u[2] * Scalar::from_int(c), Scalar::from_int(1));
                }
                assert!(onedim_census(&t).is_ok());
            }
        }
    }

    #[test]
    fn census_examples() {
        let z = StructureTensor::zero(FieldMode::RealRational);
        assert_eq!(
            onedim_census(&z).unwrap(),
            OneDimCensus { ann_dim: 3, count_class: CountClass::Infinite }
        );
        assert_eq!(
            onedim_census(&squares([1, 2, 2])).unwrap(),
            OneDimCensus { ann_dim: 0, count_class: CountClass::Exact(2) }
        );
        // e3 e1 = e1, e3 e2 = e2, everything else zero
        let mut v = [0i64; 27];
        v[idx(3, 1, 1)] = 1;
        v[idx(3, 2, 2)] = 1;
        assert_eq!(onedim_census(&tensor(&v)).unwrap().count_class, CountClass::Infinite);
    }
}
