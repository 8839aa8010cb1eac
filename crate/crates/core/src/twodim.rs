//! Two-dimensional ideals.
//!
//! A plane is classified by its descriptor (types I–IV). Types I–III reduce to a
//! single unknown `x`: the twelve conditions for `Lin{xe₁ + e₂, e₃}` are linear or
//! quadratic in `x`, and their common roots are the roots of their gcd. Type III is
//! type II after relabelling the basis.
//!
//! Type IV planes `Lin{xe₁ + e₂, e₁ + ye₃}` satisfy twelve polynomials `A_i, B_i,
//! C_i, D_i` in `(x, y)`. Those are solved for the symmetrized tensor (any ideal of
//! `T` is an ideal of its symmetrization), linearizing the six distinct equations in
//! the monomials `x²y, xy, x, y, xy², y²`. A regular 6×6 system gives at most one
//! candidate; otherwise the common zero set is computed by elimination and split
//! into points and curve components. For a non-commutative tensor every candidate
//! is then filtered against the full system of `T`.

use std::fmt;

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::poly::{solve_bivariate, BiPoly, BivariateSolution, Matrix, Point, UniPoly};
use crate::scalar::{irreducible_factors, roots_in_mode, BaseScalar, Field, FieldMode, Scalar, ScalarSolutions};
use crate::subspace::{classify_plane, is_ideal_plane, PlaneDescriptor};

/// Whether `Lin{e₁, e₂}` is an ideal: every `ω_ij3` with `(i, j) ≠ (3, 3)` vanishes.
pub fn has_type_i(t: &StructureTensor) -> bool {
    (1..=3)
        .flat_map(|i| (1..=3).map(move |j| (i, j)))
        .filter(|&p| p != (3, 3))
        .all(|(i, j)| t.w(i, j, 3).is_zero())
}

// ---------------------------------------------------------------------------
// Types II and III
// ---------------------------------------------------------------------------

fn quadratic(a: BaseScalar, b: BaseScalar, c: BaseScalar) -> UniPoly {
    UniPoly::new(vec![c, b, a])
}

/// The twelve conditions in `x` for `Lin{xe₁ + e₂, e₃}` to be an ideal.
///
/// For `i = 1, 2, 3` in turn: `ω_3i1 − xω_3i2`, `x²ω_1i2 + x(ω_2i2 − ω_1i1) − ω_2i1`,
/// `ω_i31 − xω_i32`, `x²ω_i12 + x(ω_i22 − ω_i11) − ω_i21`.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeIIEquations {
    pub polys: Vec<UniPoly>,
}

impl TypeIIEquations {
    pub fn new(t: &StructureTensor) -> Self {
        let w = |i, j, k| t.w(i, j, k);
        let mut polys = Vec::with_capacity(12);
        for i in 1..=3 {
            polys.push(UniPoly::new(vec![w(3, i, 1), -w(3, i, 2)]));
            polys.push(quadratic(w(1, i, 2), w(2, i, 2) - w(1, i, 1), -w(2, i, 1)));
            polys.push(UniPoly::new(vec![w(i, 3, 1), -w(i, 3, 2)]));
            polys.push(quadratic(w(i, 1, 2), w(i, 2, 2) - w(i, 1, 1), -w(i, 2, 1)));
        }
        TypeIIEquations { polys }
    }

    /// Monic gcd of all members; zero when every member vanishes identically.
    pub fn common_divisor(&self) -> UniPoly {
        self.polys.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p))
    }

    pub fn solutions(&self, mode: FieldMode) -> ScalarSolutions {
        let g = self.common_divisor();
        if g.is_zero() {
            return ScalarSolutions::AllScalars;
        }
        let roots = roots_in_mode(&g, mode);
        if roots.is_empty() {
            ScalarSolutions::Empty
        } else {
            ScalarSolutions::Finite(roots)
        }
    }

    pub fn vanish_at(&self, x: &BaseScalar) -> bool {
        self.polys.iter().all(|p| p.eval(x).is_zero())
    }
}

/// Which single equation pins down `x₀` in condition K3 (with `i = i₀`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K3Case {
    /// `ω_3i2 ≠ 0`
    LeftLinear,
    /// `ω_i32 ≠ 0`
    RightLinear,
    /// `ω_1i2 ≠ 0` with vanishing discriminant `D₁`
    LeftDoubleRoot,
    /// `ω_i12 ≠ 0` with vanishing discriminant `D₂`
    RightDoubleRoot,
    /// `ω_1i2 = 0`, `ω_2i2 ≠ ω_1i1`
    LeftDegenerate,
    /// `ω_i12 = 0`, `ω_i22 ≠ ω_i11`
    RightDegenerate,
}

impl K3Case {
    pub fn tag(self) -> &'static str {
        match self {
            K3Case::LeftLinear => "w3i2!=0",
            K3Case::RightLinear => "wi32!=0",
            K3Case::LeftDoubleRoot => "w1i2!=0,D1=0",
            K3Case::RightDoubleRoot => "wi12!=0,D2=0",
            K3Case::LeftDegenerate => "w1i2=0,w2i2!=w1i1",
            K3Case::RightDegenerate => "wi12=0,wi22!=wi11",
        }
    }
}

/// Which of the classical sufficient conditions K1/K2/K3 holds for type II.
///
/// These are diagnostics only; the solver decides by gcd. K2 is reported only when
/// the two quadratics that survive for `i₀` are proportional (or one vanishes),
/// since otherwise they need not share both roots.
#[derive(Clone, Debug, PartialEq)]
pub enum KDiagnostic {
    K1,
    K2 { i0: usize, d1: BaseScalar, d2: BaseScalar },
    K3 { i0: usize, case: K3Case, x0: BaseScalar },
    None,
}

impl KDiagnostic {
    pub fn name(&self) -> &'static str {
        match self {
            KDiagnostic::K1 => "K1",
            KDiagnostic::K2 { .. } => "K2",
            KDiagnostic::K3 { .. } => "K3",
            KDiagnostic::None => "none",
        }
    }

    /// The solution count the condition guarantees (`None` for infinitely many).
    pub fn implied_count(&self) -> Option<Option<usize>> {
        match self {
            KDiagnostic::K1 => Some(None),
            KDiagnostic::K2 { .. } => Some(Some(2)),
            KDiagnostic::K3 { .. } => Some(Some(1)),
            KDiagnostic::None => None,
        }
    }
}

impl fmt::Display for KDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KDiagnostic::K1 => write!(f, "K1"),
            KDiagnostic::K2 { i0, d1, d2 } => write!(f, "K2(i0 = {i0}, D1 = {d1}, D2 = {d2})"),
            KDiagnostic::K3 { i0, case, x0 } => write!(f, "K3(i0 = {i0}, {}, x0 = {x0})", case.tag()),
            KDiagnostic::None => write!(f, "none"),
        }
    }
}

fn proportional(p: &UniPoly, q: &UniPoly) -> bool {
    p.is_zero() || q.is_zero() || p.monic() == q.monic()
}

pub fn k_diagnostic(t: &StructureTensor) -> KDiagnostic {
    let eqs = TypeIIEquations::new(t);
    if eqs.polys.iter().all(|p| p.is_zero()) {
        return KDiagnostic::K1;
    }
    let w = |i, j, k| t.w(i, j, k);
    let four = BaseScalar::from_int(4);
    let disc1 = |i: usize| {
        let b = w(2, i, 2) - w(1, i, 1);
        &b * &b + &four * &(w(1, i, 2) * w(2, i, 1))
    };
    let disc2 = |i: usize| {
        let b = w(i, 2, 2) - w(i, 1, 1);
        &b * &b + &four * &(w(i, 1, 2) * w(i, 2, 1))
    };
    let two_roots = |d: &BaseScalar| match t.mode() {
        FieldMode::RealRational => d.is_real() && d.signum_re() > 0,
        FieldMode::ComplexGaussian => !d.is_zero(),
    };

    for i0 in 1..=2 {
        let (d1, d2) = (disc1(i0), disc2(i0));
        let bullet = (!w(1, i0, 2).is_zero() && two_roots(&d1)) || (!w(i0, 1, 2).is_zero() && two_roots(&d2));
        // (3K): everything but the two quadratics of i₀ vanishes.
        let others_vanish = eqs.polys.iter().enumerate().all(|(n, p)| {
            let (i, slot) = (n / 4 + 1, n % 4);
            (i == i0 && (slot == 1 || slot == 3)) || p.is_zero()
        });
        let qa = &eqs.polys[4 * (i0 - 1) + 1];
        let qb = &eqs.polys[4 * (i0 - 1) + 3];
        if bullet && others_vanish && proportional(qa, qb) {
            return KDiagnostic::K2 { i0, d1, d2 };
        }
    }

    for i0 in 1..=3 {
        let two = BaseScalar::from_int(2);
        let mut candidates: Vec<(K3Case, BaseScalar)> = Vec::new();
        if !w(3, i0, 2).is_zero() {
            candidates.push((K3Case::LeftLinear, w(3, i0, 1).div_by(&w(3, i0, 2))));
        }
        if !w(i0, 3, 2).is_zero() {
            candidates.push((K3Case::RightLinear, w(i0, 3, 1).div_by(&w(i0, 3, 2))));
        }
        if !w(1, i0, 2).is_zero() && disc1(i0).is_zero() {
            let x0 = (-(w(2, i0, 2) - w(1, i0, 1))).div_by(&(&two * &w(1, i0, 2)));
            candidates.push((K3Case::LeftDoubleRoot, x0));
        }
        if !w(i0, 1, 2).is_zero() && disc2(i0).is_zero() {
            let x0 = (-(w(i0, 2, 2) - w(i0, 1, 1))).div_by(&(&two * &w(i0, 1, 2)));
            candidates.push((K3Case::RightDoubleRoot, x0));
        }
        if w(1, i0, 2).is_zero() && w(2, i0, 2) != w(1, i0, 1) {
            candidates.push((K3Case::LeftDegenerate, w(2, i0, 1).div_by(&(w(2, i0, 2) - w(1, i0, 1)))));
        }
        if w(i0, 1, 2).is_zero() && w(i0, 2, 2) != w(i0, 1, 1) {
            candidates.push((K3Case::RightDegenerate, w(i0, 2, 1).div_by(&(w(i0, 2, 2) - w(i0, 1, 1)))));
        }
        if let Some((case, x0)) = candidates.into_iter().find(|(_, x0)| eqs.vanish_at(x0)) {
            return KDiagnostic::K3 { i0, case, x0 };
        }
    }
    KDiagnostic::None
}

/// Solutions of a one-parameter plane type (II or III).
#[derive(Clone, Debug, PartialEq)]
pub struct TypeIIResult {
    pub equations: TypeIIEquations,
    pub solutions: ScalarSolutions,
    pub diagnostic: KDiagnostic,
}

impl TypeIIResult {
    pub fn count(&self) -> Option<usize> {
        self.solutions.len()
    }
}

pub fn solve_type_ii(t: &StructureTensor) -> TypeIIResult {
    let equations = TypeIIEquations::new(t);
    let solutions = equations.solutions(t.mode());
    TypeIIResult {
        equations,
        solutions,
        diagnostic: k_diagnostic(t),
    }
}

/// The relabelling `σ(1) = 3, σ(2) = 1, σ(3) = 2` that turns type III planes of `T`
/// into type II planes of the relabelled tensor.
pub const TYPE_III_RELABEL: [usize; 3] = [3, 1, 2];

/// Type III solutions: `x` with `Lin{xe₂ + e₃, e₁}` an ideal. The equations and the
/// diagnostic are those of the relabelled tensor.
pub fn solve_type_iii(t: &StructureTensor) -> TypeIIResult {
    let relabelled = t.permute_basis(TYPE_III_RELABEL).expect("fixed permutation is valid");
    solve_type_ii(&relabelled)
}

// ---------------------------------------------------------------------------
// Type IV
// ---------------------------------------------------------------------------

/// Monomials `x^i y^j` indexing the columns of the coefficient matrix, in order
/// `x²y, xy², xy, y², x, y, 1`.
pub const TYPE_IV_MONOMIALS: [(usize, usize); 7] = [(2, 1), (1, 2), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)];

pub const TYPE_IV_LABELS: [&str; 12] = ["A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3", "D1", "D2", "D3"];

/// The twelve conditions `A_i, B_i, C_i, D_i` for `Lin{xe₁ + e₂, e₁ + ye₃}`,
/// in the order `A₁..A₃, B₁..B₃, C₁..C₃, D₁..D₃`, with their 12×7 coefficient matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeIVEquations {
    pub polys: Vec<BiPoly>,
    pub matrix: Matrix<BaseScalar>,
    pub rank: usize,
}

impl TypeIVEquations {
    pub fn new(t: &StructureTensor) -> Self {
        let w = |i, j, k| t.w(i, j, k);
        let build = |c: [BaseScalar; 7]| -> BiPoly {
            let terms: Vec<_> = TYPE_IV_MONOMIALS.iter().zip(c).map(|(&(i, j), c)| (i, j, c)).collect();
            BiPoly::from_terms(&terms)
        };
        let z = BaseScalar::zero;
        let mut polys = Vec::with_capacity(12);
        for i in 1..=3 {
            polys.push(build([w(1, i, 2), z(), w(2, i, 2) - w(1, i, 1), z(), w(1, i, 3), -w(2, i, 1), w(2, i, 3)]));
        }
        for i in 1..=3 {
            polys.push(build([w(i, 1, 2), z(), w(i, 2, 2) - w(i, 1, 1), z(), w(i, 1, 3), -w(i, 2, 1), w(i, 2, 3)]));
        }
        for i in 1..=3 {
            polys.push(build([z(), w(3, i, 2), w(1, i, 2), -w(3, i, 1), z(), w(3, i, 3) - w(1, i, 1), w(1, i, 3)]));
        }
        for i in 1..=3 {
            polys.push(build([z(), w(i, 3, 2), w(i, 1, 2), -w(i, 3, 1), z(), w(i, 3, 3) - w(i, 1, 1), w(i, 1, 3)]));
        }
        let matrix = Matrix::from_fn(12, 7, |r, c| {
            let (i, j) = TYPE_IV_MONOMIALS[c];
            polys[r].coeff(i, j)
        });
        let rank = matrix.rank();
        TypeIVEquations { polys, matrix, rank }
    }

    pub fn vanish_at(&self, x: &Scalar, y: &Scalar) -> bool {
        self.polys.iter().all(|p| p.eval(x, y).is_zero())
    }
}

/// The linear system `𝕋·(x₁, …, x₆) = 𝕍` in the monomials
/// `x₁ = x²y, x₂ = xy, x₃ = x, x₄ = y, x₅ = xy², x₆ = y²` of a commutative tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct TSystem {
    pub t: Matrix<BaseScalar>,
    pub v: Vec<BaseScalar>,
    pub det: BaseScalar,
    /// `det 𝕋_j`: column `j` replaced by `𝕍`.
    pub cramer: [BaseScalar; 6],
    pub rank_t: usize,
    pub rank_tv: usize,
    /// `x_j = det 𝕋_j / det 𝕋` when `𝕋` is regular.
    pub candidate: Option<[BaseScalar; 6]>,
}

impl TSystem {
    pub fn new(t: &StructureTensor) -> Result<Self> {
        if !t.is_commutative() {
            return Err(Error::InvalidParameters(
                "the linearized type IV system needs a commutative tensor".into(),
            ));
        }
        let w = |i, j, k| t.w(i, j, k);
        let z = BaseScalar::zero;
        let rows = vec![
            vec![w(1, 1, 2), w(1, 2, 2) - w(1, 1, 1), w(1, 1, 3), -w(1, 2, 1), z(), z()],
            vec![w(1, 2, 2), w(2, 2, 2) - w(1, 2, 1), w(1, 2, 3), -w(2, 2, 1), z(), z()],
            vec![w(1, 3, 2), w(2, 3, 2) - w(1, 3, 1), w(1, 3, 3), -w(2, 3, 1), z(), z()],
            vec![z(), w(1, 1, 2), z(), w(1, 3, 3) - w(1, 1, 1), w(1, 3, 2), -w(1, 3, 1)],
            vec![z(), w(1, 2, 2), z(), w(2, 3, 3) - w(1, 2, 1), w(2, 3, 2), -w(2, 3, 1)],
            vec![z(), w(1, 3, 2), z(), w(3, 3, 3) - w(1, 3, 1), w(3, 3, 2), -w(3, 3, 1)],
        ];
        let tm = Matrix::from_rows(rows);
        let v: Vec<BaseScalar> = [w(1, 2, 3), w(2, 2, 3), w(2, 3, 3), w(1, 1, 3), w(1, 2, 3), w(1, 3, 3)]
            .into_iter()
            .map(|c| -c)
            .collect();
        let det = tm.det();
        let cramer = [0, 1, 2, 3, 4, 5].map(|j| tm.with_column(j, &v).det());
        let rank_t = tm.rank();
        let rank_tv = tm.augment(&v).rank();
        let candidate = (!det.is_zero()).then(|| cramer.clone().map(|c| c.div_by(&det)));
        Ok(TSystem {
            t: tm,
            v,
            det,
            cramer,
            rank_t,
            rank_tv,
            candidate,
        })
    }

    /// The compatibility conditions tying the Cramer values back to monomials of a
    /// single `(x, y)`.
    pub fn compatible(&self) -> bool {
        let [d1, d2, d3, d4, d5, d6] = &self.cramer;
        let d = &self.det;
        d * d1 == d2 * d3 && d * d2 == d3 * d4 && d * d5 == d2 * d4 && d * d6 == d4 * d4
    }
}

/// An infinite family of type IV planes, every member having `y ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum TypeIVFamily {
    /// Every `(x, y)` with `y ≠ 0`.
    Whole,
    /// `(x, y₀)` for every `x`.
    FixedY { y: Scalar },
    /// `(x₀, y)` for every `y ≠ 0`.
    FixedX { x: Scalar },
    /// `x = numerator(y) / denominator(y)`, both of degree ≤ 1, on the zero set of
    /// `curve = denominator(y)·x − numerator(y)`.
    Hyperbola {
        numerator: UniPoly,
        denominator: UniPoly,
        curve: BiPoly,
    },
    /// A curve of no recognized shape, given by its defining polynomial.
    Unclassified { curve: BiPoly },
}

impl TypeIVFamily {
    pub fn shape(&self) -> &'static str {
        match self {
            TypeIVFamily::Whole => "whole",
            TypeIVFamily::FixedY { .. } => "fixed-y",
            TypeIVFamily::FixedX { .. } => "fixed-x",
            TypeIVFamily::Hyperbola { .. } => "hyperbola",
            TypeIVFamily::Unclassified { .. } => "unclassified",
        }
    }

    /// Whether `p` vanishes identically on the family (a polynomial identity in the
    /// family parameter).
    pub fn annihilated_by(&self, p: &BiPoly) -> bool {
        match self {
            TypeIVFamily::Whole => p.is_zero(),
            TypeIVFamily::FixedY { y } => p.eval_y(y).is_zero(),
            TypeIVFamily::FixedX { x } => p.eval_x(x).is_zero(),
            TypeIVFamily::Hyperbola { curve, .. } | TypeIVFamily::Unclassified { curve } => {
                p.div_exact(curve).is_some()
            }
        }
    }

    /// Whether `(x, y)` (with `y ≠ 0`) belongs to the family.
    pub fn contains(&self, x: &Scalar, y: &Scalar) -> bool {
        if y.is_zero() {
            return false;
        }
        match self {
            TypeIVFamily::Whole => true,
            TypeIVFamily::FixedY { y: y0 } => y == y0,
            TypeIVFamily::FixedX { x: x0 } => x == x0,
            TypeIVFamily::Hyperbola { curve, .. } | TypeIVFamily::Unclassified { curve } => {
                curve.eval(x, y).is_zero()
            }
        }
    }

    /// Some explicit member, if one can be found in the field of `mode`.
    pub fn sample(&self, mode: FieldMode) -> Option<Point> {
        let q = |n: i64| Scalar::from_int(n);
        match self {
            TypeIVFamily::Whole => Some((q(2), q(3))),
            TypeIVFamily::FixedY { y } => Some((q(2), y.clone())),
            TypeIVFamily::FixedX { x } => Some((x.clone(), q(3))),
            TypeIVFamily::Hyperbola {
                numerator,
                denominator,
                ..
            } => (1..20).map(BaseScalar::from_int).find_map(|y| {
                let d = denominator.eval(&y);
                (!d.is_zero()).then(|| (Scalar::Base(numerator.eval(&y).div_by(&d)), Scalar::Base(y)))
            }),
            TypeIVFamily::Unclassified { curve } => (1..20).flat_map(|n| [n, -n]).find_map(|n| {
                let y = BaseScalar::from_int(n);
                let px: UniPoly = curve.eval_y(&y);
                if px.is_zero() {
                    return None;
                }
                roots_in_mode(&px, mode).into_iter().next().map(|x| (x, Scalar::Base(y)))
            }),
        }
    }
}

impl fmt::Display for TypeIVFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeIVFamily::Whole => write!(f, "all (x, y) with y != 0"),
            TypeIVFamily::FixedY { y } => write!(f, "(x, {y}) for all x"),
            TypeIVFamily::FixedX { x } => write!(f, "({x}, y) for all y != 0"),
            TypeIVFamily::Hyperbola {
                numerator,
                denominator,
                ..
            } => write!(f, "x = ({numerator}) / ({denominator}) in y, y != 0"),
            TypeIVFamily::Unclassified { curve } => write!(f, "curve {curve} = 0, y != 0"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum TypeIVSolutions {
    Empty,
    Finite(Vec<Point>),
    /// Families plus finitely many isolated points off them.
    Infinite { families: Vec<TypeIVFamily>, isolated: Vec<Point> },
}

impl TypeIVSolutions {
    pub fn count(&self) -> Option<usize> {
        match self {
            TypeIVSolutions::Empty => Some(0),
            TypeIVSolutions::Finite(v) => Some(v.len()),
            TypeIVSolutions::Infinite { .. } => None,
        }
    }

    pub fn points(&self) -> &[Point] {
        match self {
            TypeIVSolutions::Empty => &[],
            TypeIVSolutions::Finite(v) => v,
            TypeIVSolutions::Infinite { isolated, .. } => isolated,
        }
    }

    pub fn families(&self) -> &[TypeIVFamily] {
        match self {
            TypeIVSolutions::Infinite { families, .. } => families,
            _ => &[],
        }
    }

    pub fn contains(&self, x: &Scalar, y: &Scalar) -> bool {
        self.points().iter().any(|(px, py)| px == x && py == y)
            || self.families().iter().any(|f| f.contains(x, y))
    }
}

/// How the symmetrized system was resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeIVRoute {
    /// `rank 𝕋 ≠ rank (𝕋 | 𝕍)`.
    Inconsistent,
    /// `det 𝕋 ≠ 0`: a single Cramer candidate.
    Cramer,
    /// `𝕋` singular: full elimination.
    Elimination,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TypeIVResult {
    /// The equations of the tensor itself.
    pub equations: TypeIVEquations,
    /// The linearized system of the symmetrized tensor.
    pub t_system: TSystem,
    pub route: TypeIVRoute,
    pub solutions: TypeIVSolutions,
    pub notes: Vec<String>,
}

impl TypeIVResult {
    pub fn count(&self) -> Option<usize> {
        self.solutions.count()
    }
}

/// Zero set (with `y ≠ 0`) of a polynomial system, as curve components and points.
struct Locus {
    whole: bool,
    curves: Vec<BiPoly>,
    points: Vec<Point>,
}

fn nonzero_y(points: Vec<Point>, notes: &mut Vec<String>) -> Vec<Point> {
    let (keep, drop): (Vec<Point>, Vec<Point>) = points.into_iter().partition(|(_, y)| !y.is_zero());
    for (x, _) in drop {
        notes.push(format!("discarded candidate (x = {x}, y = 0)"));
    }
    keep
}

/// Split a curve into factors depending on one variable only and the remainder.
fn split_curve(g: &BiPoly, mode: FieldMode, notes: &mut Vec<String>) -> Vec<BiPoly> {
    let mut out = Vec::new();
    let cx = g.content_y();
    for (f, _) in irreducible_factors(&cx, mode) {
        if f.degree().unwrap_or(0) > 0 {
            out.push(BiPoly::from_x(f));
        }
    }
    let rest = g.primitive_y();
    let cy = rest.content_x();
    for (f, _) in irreducible_factors(&cy, mode) {
        match f.degree() {
            Some(0) | None => {}
            Some(1) if f.coeff(0).is_zero() => notes.push("discarded the line y = 0".into()),
            _ => out.push(BiPoly::from_y(&f)),
        }
    }
    let rest = rest.div_exact(&BiPoly::from_y(&cy)).expect("content divides");
    if !rest.is_constant() {
        out.push(rest.normalize());
    }
    out
}

fn locus(polys: &[BiPoly], mode: FieldMode, notes: &mut Vec<String>) -> Locus {
    match solve_bivariate(polys, mode) {
        BivariateSolution::Whole => Locus {
            whole: true,
            curves: Vec::new(),
            points: Vec::new(),
        },
        BivariateSolution::Finite(points) => Locus {
            whole: false,
            curves: Vec::new(),
            points: nonzero_y(points, notes),
        },
        BivariateSolution::Curve { curve, isolated } => Locus {
            whole: false,
            curves: split_curve(&curve, mode, notes),
            points: nonzero_y(isolated, notes),
        },
    }
}

fn families_of(curve: &BiPoly, mode: FieldMode) -> Vec<TypeIVFamily> {
    if curve.degree_y() == Some(0) {
        return roots_in_mode(&curve.y_coeff(0), mode)
            .into_iter()
            .map(|x| TypeIVFamily::FixedX { x })
            .collect();
    }
    if curve.degree_x() == Some(0) {
        let py: UniPoly = curve.eval_x(&BaseScalar::zero());
        return roots_in_mode(&py, mode)
            .into_iter()
            .map(|y| TypeIVFamily::FixedY { y })
            .collect();
    }
    if curve.degree_x() == Some(1) && curve.degree_y() == Some(1) {
        // curve = (a·y + b)·x + (c·y + d)
        let denominator = UniPoly::new(vec![curve.coeff(1, 0), curve.coeff(1, 1)]);
        let numerator = UniPoly::new(vec![-curve.coeff(0, 0), -curve.coeff(0, 1)]);
        return vec![TypeIVFamily::Hyperbola {
            numerator,
            denominator,
            curve: curve.clone(),
        }];
    }
    vec![TypeIVFamily::Unclassified { curve: curve.clone() }]
}

fn push_unique(points: &mut Vec<Point>, p: Point) {
    if !points.contains(&p) {
        points.push(p);
    }
}

/// All type IV solutions `(x, y)`, `y ≠ 0`.
pub fn solve_type_iv(t: &StructureTensor) -> TypeIVResult {
    let mode = t.mode();
    let s = t.symmetrize();
    let t_system = TSystem::new(&s).expect("symmetrization is commutative");
    let sym_eqs = TypeIVEquations::new(&s);
    let equations = TypeIVEquations::new(t);
    let mut notes = Vec::new();

    let (route, sym_locus) = if t_system.rank_t != t_system.rank_tv {
        (
            TypeIVRoute::Inconsistent,
            Locus {
                whole: false,
                curves: Vec::new(),
                points: Vec::new(),
            },
        )
    } else if let Some(c) = &t_system.candidate {
        let mut points = Vec::new();
        if !t_system.compatible() {
            notes.push("Cramer solution is not of the form (x²y, xy, x, y, xy², y²)".into());
        } else if c[3].is_zero() {
            notes.push(format!("discarded candidate (x = {}, y = 0)", c[2]));
        } else {
            points.push((Scalar::Base(c[2].clone()), Scalar::Base(c[3].clone())));
        }
        (
            TypeIVRoute::Cramer,
            Locus {
                whole: false,
                curves: Vec::new(),
                points,
            },
        )
    } else {
        (TypeIVRoute::Elimination, locus(&sym_eqs.polys, mode, &mut notes))
    };

    // Restrict to the tensor itself.
    let commutative = t.is_commutative();
    let own = &equations.polys;
    let mut whole = sym_locus.whole;
    let mut curves = Vec::new();
    let mut points = Vec::new();
    for p in sym_locus.points {
        if commutative || equations.vanish_at(&p.0, &p.1) {
            push_unique(&mut points, p);
        }
    }
    if whole && !commutative {
        let sub = locus(own, mode, &mut notes);
        whole = sub.whole;
        curves.extend(sub.curves);
        for p in sub.points {
            push_unique(&mut points, p);
        }
    }
    for c in sym_locus.curves {
        if commutative || own.iter().all(|p| p.div_exact(&c).is_some()) {
            curves.push(c);
            continue;
        }
        let mut system = own.clone();
        system.push(c.clone());
        let sub = locus(&system, mode, &mut notes);
        curves.extend(sub.curves);
        for p in sub.points {
            push_unique(&mut points, p);
        }
    }

    let mut families = Vec::new();
    if whole {
        families.push(TypeIVFamily::Whole);
    } else {
        for c in &curves {
            for f in families_of(c, mode) {
                if !families.contains(&f) {
                    families.push(f);
                }
            }
        }
    }
    // Points lying on a family are members of it, not isolated solutions.
    points.retain(|(x, y)| !families.iter().any(|f| f.contains(x, y)));

    let solutions = if !families.is_empty() {
        TypeIVSolutions::Infinite {
            families,
            isolated: points,
        }
    } else if points.is_empty() {
        TypeIVSolutions::Empty
    } else {
        TypeIVSolutions::Finite(points)
    };
    TypeIVResult {
        equations,
        t_system,
        route,
        solutions,
        notes,
    }
}

// ---------------------------------------------------------------------------
// Aggregation
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub struct TwoDimEnumeration {
    pub type_i: bool,
    pub type_ii: TypeIIResult,
    pub type_iii: TypeIIResult,
    pub type_iv: TypeIVResult,
}

impl TwoDimEnumeration {
    pub fn is_infinite(&self) -> bool {
        self.total().is_none()
    }

    /// Total number of two-dimensional ideals, `None` if infinite.
    pub fn total(&self) -> Option<usize> {
        Some(usize::from(self.type_i) + self.type_ii.count()? + self.type_iii.count()? + self.type_iv.count()?)
    }

    /// Every isolated ideal plane found, by type.
    pub fn finite_planes(&self) -> Vec<PlaneDescriptor> {
        let mut out = Vec::new();
        if self.type_i {
            out.push(PlaneDescriptor::TypeI);
        }
        if let ScalarSolutions::Finite(xs) = &self.type_ii.solutions {
            out.extend(xs.iter().map(|x| PlaneDescriptor::TypeII { x: x.clone() }));
        }
        if let ScalarSolutions::Finite(xs) = &self.type_iii.solutions {
            out.extend(xs.iter().map(|x| PlaneDescriptor::TypeIII { x: x.clone() }));
        }
        out.extend(
            self.type_iv
                .solutions
                .points()
                .iter()
                .map(|(x, y)| PlaneDescriptor::TypeIV { x: x.clone(), y: y.clone() }),
        );
        out
    }
}

fn inconsistency(msg: String) -> Error {
    Error::InconsistencyDetected(msg)
}

fn check_diagnostic(label: &str, r: &TypeIIResult) -> Result<()> {
    if let Some(expected) = r.diagnostic.implied_count() {
        if expected != r.count() {
            return Err(inconsistency(format!(
                "{label}: {} implies {:?} solutions but the solver found {:?}",
                r.diagnostic,
                expected,
                r.count()
            )));
        }
    }
    Ok(())
}

/// Enumerate all two-dimensional ideals, verifying every reported plane.
pub fn enumerate_twodim(t: &StructureTensor) -> Result<TwoDimEnumeration> {
    let mode = t.mode();
    let e = TwoDimEnumeration {
        type_i: has_type_i(t),
        type_ii: solve_type_ii(t),
        type_iii: solve_type_iii(t),
        type_iv: solve_type_iv(t),
    };
    if e.type_i != is_ideal_plane(t, &PlaneDescriptor::TypeI) {
        return Err(inconsistency("type I read-off disagrees with the plane check".into()));
    }
    check_diagnostic("type II", &e.type_ii)?;
    check_diagnostic("type III", &e.type_iii)?;

    let planes = e.finite_planes();
    for (n, p) in planes.iter().enumerate() {
        if !is_ideal_plane(t, p) {
            return Err(inconsistency(format!("reported plane {p} is not an ideal")));
        }
        let [u, v] = p.basis();
        if classify_plane(&u, &v)? != *p {
            return Err(inconsistency(format!("descriptor of {p} is not canonical")));
        }
        if planes[..n].contains(p) {
            return Err(inconsistency(format!("plane {p} reported twice")));
        }
    }
    for f in e.type_iv.solutions.families() {
        if !e.type_iv.equations.polys.iter().all(|p| f.annihilated_by(p)) {
            return Err(inconsistency(format!("type IV family {f} fails the symbolic check")));
        }
        if let Some((x, y)) = f.sample(mode) {
            let plane = PlaneDescriptor::type_iv(x, y)?;
            if !is_ideal_plane(t, &plane) {
                return Err(inconsistency(format!("sample {plane} of family {f} is not an ideal")));
            }
        }
    }
    if let Some(total) = e.total() {
        if total > 4 {
            return Err(Error::BoundViolation(format!(
                "{total} two-dimensional ideals: {}",
                planes.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("; ")
            )));
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vector3;
    use crate::subspace::plane_certificate;
    use proptest::prelude::*;

    fn sparse(mode: FieldMode, entries: &[((usize, usize, usize), i64)]) -> StructureTensor {
        StructureTensor::from_fn(mode, |i, j, k| {
            entries
                .iter()
                .find(|(idx, _)| *idx == (i + 1, j + 1, k + 1))
                .map_or_else(BaseScalar::zero, |(_, v)| BaseScalar::from_int(*v))
        })
    }

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn type_i_read_off() {
        assert!(has_type_i(&StructureTensor::zero(FieldMode::RealRational)));
        assert!(!has_type_i(&StructureTensor::from_ints([[[1; 3]; 3]; 3])));
        // e₃² = e₃ alone keeps Lin{e₁, e₂} an ideal.
        let t = sparse(FieldMode::RealRational, &[((3, 3, 3), 1)]);
        assert!(has_type_i(&t));
        assert!(is_ideal_plane(&t, &PlaneDescriptor::TypeI));
    }

    #[test]
    fn zero_tensor_is_infinite_everywhere() {
        let t = StructureTensor::zero(FieldMode::RealRational);
        let e = enumerate_twodim(&t).unwrap();
        assert!(e.type_i);
        assert_eq!(e.type_ii.solutions, ScalarSolutions::AllScalars);
        assert_eq!(e.type_ii.diagnostic, KDiagnostic::K1);
        assert_eq!(e.type_iii.solutions, ScalarSolutions::AllScalars);
        assert_eq!(e.type_iv.solutions.families(), &[TypeIVFamily::Whole]);
        assert!(e.is_infinite());
    }

    #[test]
    fn k3_example() {
        let t = sparse(FieldMode::RealRational, &[((3, 1, 1), 2), ((3, 1, 2), 1)]);
        let r = solve_type_ii(&t);
        assert_eq!(r.solutions, ScalarSolutions::Finite(vec![q(2)]));
        assert_eq!(
            r.diagnostic,
            KDiagnostic::K3 {
                i0: 1,
                case: K3Case::LeftLinear,
                x0: BaseScalar::from_int(2)
            }
        );
        assert!(is_ideal_plane(&t, &PlaneDescriptor::TypeII { x: q(2) }));
    }

    #[test]
    fn k2_example() {
        let t = sparse(
            FieldMode::RealRational,
            &[((1, 1, 2), 1), ((1, 2, 1), 1), ((2, 1, 1), 1), ((2, 2, 2), 1)],
        );
        assert!(t.is_commutative());
        let r = solve_type_ii(&t);
        let ScalarSolutions::Finite(mut xs) = r.solutions.clone() else {
            panic!("expected finitely many solutions")
        };
        xs.sort_by(|a, b| a.approx().0.total_cmp(&b.approx().0));
        assert_eq!(xs, vec![q(-1), q(1)]);
        match &r.diagnostic {
            KDiagnostic::K2 { i0, d1, .. } => {
                assert_eq!(*i0, 1);
                assert_eq!(*d1, BaseScalar::from_int(4));
            }
            other => panic!("expected K2, got {other}"),
        }
        for x in xs {
            assert!(is_ideal_plane(&t, &PlaneDescriptor::TypeII { x }));
        }
    }

    #[test]
    fn k2_needs_proportional_quadratics() {
        // Left quadratic x² − 1, right quadratic x² − 4: the (3K) pattern holds but
        // the two share no root.
        let t = sparse(
            FieldMode::RealRational,
            &[((1, 1, 2), 1), ((2, 1, 1), 1), ((1, 1, 2), 1), ((1, 2, 1), 4)],
        );
        let r = solve_type_ii(&t);
        assert_ne!(r.diagnostic.name(), "K2");
        assert_eq!(r.solutions.len(), Some(0));
    }

    #[test]
    fn type_iii_is_relabelled_type_ii() {
        // Lin{e₂ + e₃·(1/x)…}: e₁ e₁ = e₂ − e₃ makes Lin{e₂ − … } the only candidate.
        let t = sparse(FieldMode::RealRational, &[((2, 1, 2), 1), ((2, 1, 3), -1)]);
        let r = solve_type_iii(&t);
        for x in match &r.solutions {
            ScalarSolutions::Finite(xs) => xs.clone(),
            _ => vec![],
        } {
            assert!(is_ideal_plane(&t, &PlaneDescriptor::TypeIII { x }));
        }
        let relabelled = t.permute_basis(TYPE_III_RELABEL).unwrap();
        assert_eq!(r.solutions, solve_type_ii(&relabelled).solutions);
    }

    #[test]
    fn cramer_route() {
        // e₁e₁ = e₁, e₂e₂ = e₂, e₃e₃ = e₃ with nothing else has no type IV ideal.
        let t = sparse(FieldMode::RealRational, &[((1, 1, 1), 1), ((2, 2, 2), 1), ((3, 3, 3), 1)]);
        let r = solve_type_iv(&t);
        assert_eq!(r.solutions.count(), Some(0));
        // All-ones: every plane through (1, 1, 1) is an ideal, i.e. x = (y − 1)/y,
        // and the sum-zero plane (x, y) = (−1, −1) lies off that curve.
        let ones = StructureTensor::from_ints([[[1; 3]; 3]; 3]);
        let r = solve_type_iv(&ones);
        assert_eq!(r.route, TypeIVRoute::Elimination);
        assert_eq!(r.solutions.points(), &[(q(-1), q(-1))]);
        match r.solutions.families() {
            [TypeIVFamily::Hyperbola { numerator, denominator, .. }] => {
                assert_eq!(numerator, &UniPoly::from_ints(&[-1, 1]));
                assert_eq!(denominator, &UniPoly::from_ints(&[0, 1]));
            }
            other => panic!("unexpected families {other:?}"),
        }
    }

    #[test]
    fn fixed_y_family() {
        // e₃ acts as the identity on e₁ and e₂, everything else vanishes except
        // e₃e₃ = e₃: planes through e₁ + e₃ … check the solver against the oracle.
        let t = sparse(
            FieldMode::RealRational,
            &[((1, 3, 1), 1), ((3, 1, 1), 1), ((2, 3, 2), 1), ((3, 2, 2), 1), ((3, 3, 3), 1)],
        );
        let e = enumerate_twodim(&t).unwrap();
        for f in e.type_iv.solutions.families() {
            let (x, y) = f.sample(t.mode()).unwrap();
            assert!(is_ideal_plane(&t, &PlaneDescriptor::type_iv(x, y).unwrap()));
        }
    }

    fn arb_tensor() -> impl Strategy<Value = StructureTensor> {
        (proptest::collection::vec(-2i64..=2, 27), any::<bool>()).prop_map(|(v, sym)| {
            let t = StructureTensor::from_fn(FieldMode::RealRational, |i, j, k| {
                BaseScalar::from_int(v[9 * i + 3 * j + k])
            });
            if sym {
                t.symmetrize()
            } else {
                t
            }
        })
    }

    fn arb_small() -> impl Strategy<Value = BaseScalar> {
        (-4i64..=4, 1i64..=3).prop_map(|(p, q)| BaseScalar::from_ratio(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// A_i, B_i, C_i, D_i are minus the normal component of u·e_i, e_i·u,
        /// v·e_i, e_i·v, computed independently from the product.
        #[test]
        fn type_iv_equations_match_products(t in arb_tensor(), x in arb_small(), y in arb_small()) {
            prop_assume!(!y.is_zero());
            let plane = PlaneDescriptor::type_iv(Scalar::Base(x.clone()), Scalar::Base(y.clone())).unwrap();
            let [u, v] = plane.basis();
            let n = plane.normal();
            let eqs = TypeIVEquations::new(&t);
            let (xs, ys) = (Scalar::Base(x), Scalar::Base(y));
            for i in 0..3 {
                let e = Vector3::e(i);
                let expect = [
                    n.dot(&t.product(&u, &e)),
                    n.dot(&t.product(&e, &u)),
                    n.dot(&t.product(&v, &e)),
                    n.dot(&t.product(&e, &v)),
                ];
                for (g, want) in expect.into_iter().enumerate() {
                    prop_assert_eq!(eqs.polys[3 * g + i].eval(&xs, &ys), -want);
                }
            }
            prop_assert_eq!(eqs.vanish_at(&xs, &ys), plane_certificate(&t, &plane).passed());
        }

        /// Every coefficient row reproduces its polynomial.
        #[test]
        fn coefficient_matrix_rows(t in arb_tensor()) {
            let eqs = TypeIVEquations::new(&t);
            for (r, p) in eqs.polys.iter().enumerate() {
                let terms: Vec<_> = TYPE_IV_MONOMIALS.iter().enumerate()
                    .map(|(c, &(i, j))| (i, j, eqs.matrix.get(r, c).clone())).collect();
                prop_assert_eq!(&BiPoly::from_terms(&terms), p);
            }
        }

        /// The type II equations agree with the plane determinants.
        #[test]
        fn type_ii_equations_match_products(t in arb_tensor(), x in arb_small()) {
            let plane = PlaneDescriptor::TypeII { x: Scalar::Base(x.clone()) };
            let eqs = TypeIIEquations::new(&t);
            prop_assert_eq!(eqs.vanish_at(&x), is_ideal_plane(&t, &plane));
        }

        /// Cramer values solve the system and, when regular, (dt) matches monomials.
        #[test]
        fn t_system_consistency(t in arb_tensor()) {
            let s = t.symmetrize();
            let sys = TSystem::new(&s).unwrap();
            if let Some(c) = &sys.candidate {
                prop_assert_eq!(sys.t.mul_vec(c), sys.v.clone());
            }
            let eqs = TypeIVEquations::new(&s);
            // Rows of 𝕋 are A₁..A₃, C₁..C₃ in the monomials x²y, xy, x, y, xy², y².
            let order = [(2, 1), (1, 1), (1, 0), (0, 1), (1, 2), (0, 2)];
            for (r, p) in [0usize, 1, 2, 6, 7, 8].iter().map(|&k| &eqs.polys[k]).enumerate() {
                for (c, &(i, j)) in order.iter().enumerate() {
                    prop_assert_eq!(sys.t.get(r, c), &p.coeff(i, j));
                }
                prop_assert_eq!(&sys.v[r], &-p.coeff(0, 0));
            }
        }

        #[test]
        fn enumeration_is_sound(t in arb_tensor()) {
            let e = enumerate_twodim(&t);
            prop_assert!(e.is_ok(), "{:?}", e.err());
        }
    }
}
