//! Named algebra families with known ideal structure.

use std::fmt;

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::scalar::{BaseScalar, FieldMode};
use crate::twodim::TSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagonalVariant {
    /// `e₁² = e₁, e₂² = e₂, e₃² = e₃`
    I,
    /// `e₁² = e₁, e₂² = e₂, e₃² = e₂`
    II,
    /// `e₁² = e₁, e₂² = e₃, e₃² = e₂`
    III,
}

/// Free parameters of the commutative family with type IV ideals at `(0, 1)` and
/// `(1, 1)`: `a = ω₁₂₁, b = ω₂₂₁, c = ω₂₃₁, d = ω₁₁₂, e = ω₁₂₂, f = ω₁₁₃,
/// g = ω₁₃₁, k = ω₃₃₁`. All other constants are determined by these.
#[derive(Clone, Debug, PartialEq)]
pub struct Section7Params {
    pub a: BaseScalar,
    pub b: BaseScalar,
    pub c: BaseScalar,
    pub d: BaseScalar,
    pub e: BaseScalar,
    pub f: BaseScalar,
    pub g: BaseScalar,
    pub k: BaseScalar,
}

impl Section7Params {
    pub fn from_ints([a, b, c, d, e, f, g, k]: [i64; 8]) -> Self {
        let s = BaseScalar::from_int;
        Section7Params {
            a: s(a),
            b: s(b),
            c: s(c),
            d: s(d),
            e: s(e),
            f: s(f),
            g: s(g),
            k: s(k),
        }
    }

    pub fn as_array(&self) -> [&BaseScalar; 8] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f, &self.g, &self.k]
    }

    /// A choice with `rank(𝕋 | 𝕍) = 3` and an infinite type IV family.
    pub fn rank3() -> Self {
        Section7Params::from_ints([1, 0, 1, 0, 0, 1, 0, 0])
    }

    /// A choice with `rank(𝕋 | 𝕍) = 4`.
    pub fn rank4() -> Self {
        Section7Params::from_ints([1, 0, -1, 1, -1, -1, 1, 0])
    }

    /// A choice with `rank(𝕋 | 𝕍) = 5` (`e = −d`, `g = −c`, `f ≠ −a`). At `k = 1`
    /// the rank would drop to 4.
    pub fn rank5() -> Self {
        Section7Params::from_ints([1, 0, 1, 1, -1, 0, -1, 0])
    }
}

/// The nonzero slots of a commutative algebra in which `𝕂e₁` and `𝕂e₂` are ideals
/// and `e₁e₂ = 0`; the remaining constants follow by symmetry.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoOneDimParams {
    pub w111: BaseScalar,
    pub w131: BaseScalar,
    pub w331: BaseScalar,
    pub w222: BaseScalar,
    pub w232: BaseScalar,
    pub w332: BaseScalar,
    pub w333: BaseScalar,
}

impl TwoOneDimParams {
    pub fn from_ints([w111, w131, w331, w222, w232, w332, w333]: [i64; 7]) -> Self {
        let s = BaseScalar::from_int;
        TwoOneDimParams {
            w111: s(w111),
            w131: s(w131),
            w331: s(w331),
            w222: s(w222),
            w232: s(w232),
            w332: s(w332),
            w333: s(w333),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Zero,
    /// `e_i e_j = e₁ + e₂ + e₃` for all `i, j`.
    AllOnes,
    /// `e_i e_j = 0` for `i ≠ j` and the squares given by the variant.
    DiagonalIdempotent(DiagonalVariant),
    /// `e_ie_j = 0` for `i, j ≤ 2`, `e₃e_i = ωe_i`, `e_ie₃ = ω̃e_i` (`i ≤ 2`), and
    /// `e₃²` arbitrary.
    Dime1 {
        omega: BaseScalar,
        omega_tilde: BaseScalar,
        e3_square: [BaseScalar; 3],
    },
    TwoOneDim(TwoOneDimParams),
    Section7(Section7Params),
}

/// Names accepted by [`FamilySpec::parse`], with their parameter lists.
pub const FAMILY_NAMES: [(&str, &str); 11] = [
    ("zero", ""),
    ("all-ones", ""),
    ("diagonal-i", ""),
    ("diagonal-ii", ""),
    ("diagonal-iii", ""),
    ("dime1", "omega omega~ s1 s2 s3  (e3^2 = s1 e1 + s2 e2 + s3 e3)"),
    ("two-one-dim", "w111 w131 w331 w222 w232 w332 w333"),
    ("section7", "a b c d e f g k"),
    ("section7-rank3", ""),
    ("section7-rank4", ""),
    ("section7-rank5", ""),
];

fn parse_params<const N: usize>(name: &str, params: &[String]) -> Result<[BaseScalar; N]> {
    if params.len() != N {
        return Err(Error::InvalidParameters(format!(
            "family {name} takes {N} parameters, got {}",
            params.len()
        )));
    }
    let parsed = params.iter().map(|p| BaseScalar::parse(p)).collect::<Result<Vec<_>>>()?;
    Ok(parsed.try_into().expect("length checked"))
}

impl FamilySpec {
    /// Look up a family by name with its parameters as scalar literals.
    pub fn parse(name: &str, params: &[String]) -> Result<FamilySpec> {
        let no_params = |spec: FamilySpec| {
            parse_params::<0>(name, params)?;
            Ok(spec)
        };
        match name {
            "zero" => no_params(FamilySpec::Zero),
            "all-ones" => no_params(FamilySpec::AllOnes),
            "diagonal-i" => no_params(FamilySpec::DiagonalIdempotent(DiagonalVariant::I)),
            "diagonal-ii" => no_params(FamilySpec::DiagonalIdempotent(DiagonalVariant::II)),
            "diagonal-iii" => no_params(FamilySpec::DiagonalIdempotent(DiagonalVariant::III)),
            "section7-rank3" => no_params(FamilySpec::Section7(Section7Params::rank3())),
            "section7-rank4" => no_params(FamilySpec::Section7(Section7Params::rank4())),
            "section7-rank5" => no_params(FamilySpec::Section7(Section7Params::rank5())),
            "dime1" => {
                let [omega, omega_tilde, s1, s2, s3] = parse_params::<5>(name, params)?;
                Ok(FamilySpec::Dime1 {
                    omega,
                    omega_tilde,
                    e3_square: [s1, s2, s3],
                })
            }
            "two-one-dim" => {
                let [w111, w131, w331, w222, w232, w332, w333] = parse_params::<7>(name, params)?;
                Ok(FamilySpec::TwoOneDim(TwoOneDimParams {
                    w111,
                    w131,
                    w331,
                    w222,
                    w232,
                    w332,
                    w333,
                }))
            }
            "section7" => {
                let [a, b, c, d, e, f, g, k] = parse_params::<8>(name, params)?;
                Ok(FamilySpec::Section7(Section7Params { a, b, c, d, e, f, g, k }))
            }
            other => Err(Error::InvalidParameters(format!("unknown family {other:?}"))),
        }
    }

    pub fn build(&self, mode: FieldMode) -> Result<StructureTensor> {
        let mut w: [[[BaseScalar; 3]; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| BaseScalar::zero())));
        // 1-based setter
        let mut set = |i: usize, j: usize, k: usize, v: BaseScalar| w[i - 1][j - 1][k - 1] = v;
        let one = BaseScalar::one;
        match self {
            FamilySpec::Zero => {}
            FamilySpec::AllOnes => {
                for i in 1..=3 {
                    for j in 1..=3 {
                        for k in 1..=3 {
                            set(i, j, k, one());
                        }
                    }
                }
            }
            FamilySpec::DiagonalIdempotent(v) => {
                let squares = match v {
                    DiagonalVariant::I => [1, 2, 3],
                    DiagonalVariant::II => [1, 2, 2],
                    DiagonalVariant::III => [1, 3, 2],
                };
                for (i, k) in squares.into_iter().enumerate() {
                    set(i + 1, i + 1, k, one());
                }
            }
            FamilySpec::Dime1 {
                omega,
                omega_tilde,
                e3_square,
            } => {
                for i in 1..=2 {
                    set(3, i, i, omega.clone());
                    set(i, 3, i, omega_tilde.clone());
                }
                for (k, s) in e3_square.iter().enumerate() {
                    set(3, 3, k + 1, s.clone());
                }
            }
            FamilySpec::TwoOneDim(p) => {
                set(1, 1, 1, p.w111.clone());
                set(1, 3, 1, p.w131.clone());
                set(3, 1, 1, p.w131.clone());
                set(3, 3, 1, p.w331.clone());
                set(2, 2, 2, p.w222.clone());
                set(2, 3, 2, p.w232.clone());
                set(3, 2, 2, p.w232.clone());
                set(3, 3, 2, p.w332.clone());
                set(3, 3, 3, p.w333.clone());
            }
            FamilySpec::Section7(p) => {
                let Section7Params { a, b, c, d, e, f, g, k } = p.clone();
                let mut sym = |i: usize, j: usize, kk: usize, v: BaseScalar| {
                    set(i, j, kk, v.clone());
                    set(j, i, kk, v);
                };
                sym(1, 2, 1, a.clone());
                sym(2, 2, 1, b.clone());
                sym(2, 3, 1, c.clone());
                sym(1, 1, 2, d.clone());
                sym(1, 2, 2, e.clone());
                sym(1, 1, 3, f.clone());
                sym(1, 3, 1, g.clone());
                sym(3, 3, 1, k.clone());
                // the dependent constants
                sym(1, 2, 3, a);
                sym(2, 2, 3, b);
                sym(2, 3, 3, c);
                sym(1, 3, 2, -d.clone());
                sym(3, 3, 2, d.clone());
                sym(2, 2, 2, -e.clone());
                sym(2, 3, 2, -e.clone());
                sym(1, 1, 1, &(&d + &e) + &f);
                sym(1, 3, 3, &(&g + &d) + &e);
                sym(3, 3, 3, &(&k - &d) - &e);
            }
        }
        StructureTensor::new(w, mode).map_err(|e| Error::InvalidParameters(e.to_string()))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[&BaseScalar]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        match self {
            FamilySpec::Zero => write!(f, "zero"),
            FamilySpec::AllOnes => write!(f, "all-ones"),
            FamilySpec::DiagonalIdempotent(DiagonalVariant::I) => write!(f, "diagonal-i"),
            FamilySpec::DiagonalIdempotent(DiagonalVariant::II) => write!(f, "diagonal-ii"),
            FamilySpec::DiagonalIdempotent(DiagonalVariant::III) => write!(f, "diagonal-iii"),
            FamilySpec::Dime1 {
                omega,
                omega_tilde,
                e3_square,
            } => {
                let [s1, s2, s3] = e3_square;
                write!(f, "dime1({})", join(&[omega, omega_tilde, s1, s2, s3]))
            }
            FamilySpec::TwoOneDim(p) => write!(
                f,
                "two-one-dim({})",
                join(&[&p.w111, &p.w131, &p.w331, &p.w222, &p.w232, &p.w332, &p.w333])
            ),
            FamilySpec::Section7(p) => write!(f, "section7({})", join(&p.as_array())),
        }
    }
}

/// The linearized type IV system of a `Section7` algebra.
pub fn section7_t_matrix(spec: &FamilySpec) -> Result<TSystem> {
    match spec {
        FamilySpec::Section7(_) => TSystem::new(&spec.build(FieldMode::RealRational)?),
        other => Err(Error::InvalidParameters(format!("{other} is not a section7 family"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::onedim::{enumerate_onedim, OneDimEnumeration};
    use crate::poly::Matrix;
    use crate::scalar::Scalar;
    use crate::subspace::{is_ideal_line, is_ideal_plane, Line, PlaneDescriptor};
    use crate::twodim::{solve_type_iv, TypeIVFamily, TypeIVSolutions};
    use proptest::prelude::*;

    fn augmented(sys: &TSystem) -> Matrix<BaseScalar> {
        sys.t.augment(&sys.v)
    }

    /// `(𝕋 | 𝕍)` written directly in the free parameters.
    fn symbolic(p: &Section7Params) -> Matrix<BaseScalar> {
        let [a, b, c, d, e, f, g, k] = p.as_array().map(|x| x.clone());
        let z = BaseScalar::zero;
        Matrix::from_rows(vec![
            vec![d.clone(), -(&d + &f), f.clone(), -a.clone(), z(), z(), -a.clone()],
            vec![e.clone(), -(&a + &e), a.clone(), -b.clone(), z(), z(), -b.clone()],
            vec![-d.clone(), -(&e + &g), &(&d + &e) + &g, -c.clone(), z(), z(), -c.clone()],
            vec![z(), d.clone(), z(), &g - &f, -d.clone(), -g.clone(), -f.clone()],
            vec![z(), e.clone(), z(), &c - &a, -e.clone(), -c.clone(), -a.clone()],
            vec![z(), -d.clone(), z(), &(&(&k - &d) - &e) - &g, d.clone(), -k.clone(), -(&(&d + &e) + &g)],
        ])
    }

    fn ints(rows: &[[i64; 7]]) -> Matrix<BaseScalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BaseScalar::from_int(x)).collect()).collect())
    }

    #[test]
    fn rank4_preset_matches_the_display() {
        let spec = FamilySpec::Section7(Section7Params::rank4());
        let t = spec.build(FieldMode::RealRational).unwrap();
        let expected: [((usize, usize, usize), i64); 18] = [
            ((1, 1, 1), -1),
            ((1, 1, 2), 1),
            ((1, 1, 3), -1),
            ((1, 2, 1), 1),
            ((1, 2, 2), -1),
            ((1, 2, 3), 1),
            ((1, 3, 1), 1),
            ((1, 3, 2), -1),
            ((1, 3, 3), 1),
            ((2, 2, 1), 0),
            ((2, 2, 2), 1),
            ((2, 2, 3), 0),
            ((2, 3, 1), -1),
            ((2, 3, 2), 1),
            ((2, 3, 3), -1),
            ((3, 3, 1), 0),
            ((3, 3, 2), 1),
            ((3, 3, 3), 0),
        ];
        for ((i, j, k), v) in expected {
            assert_eq!(t.w(i, j, k), BaseScalar::from_int(v), "w{i}{j}{k}");
        }
        assert!(t.is_commutative());
        let sys = section7_t_matrix(&spec).unwrap();
        // The display's last entry of row 6 reads 1; the constraints give −(d + e + g) = −1.
        let display = ints(&[
            [1, 0, -1, -1, 0, 0, -1],
            [-1, 0, 1, 0, 0, 0, 0],
            [-1, 0, 1, 1, 0, 0, 1],
            [0, 1, 0, 2, -1, -1, 1],
            [0, -1, 0, -2, 1, 1, -1],
            [0, -1, 0, -1, 1, 0, -1],
        ]);
        assert_eq!(augmented(&sys), display);
        assert_eq!(sys.rank_tv, 4);
    }

    #[test]
    fn rank5_preset() {
        let sys = section7_t_matrix(&FamilySpec::Section7(Section7Params::rank5())).unwrap();
        let expected = ints(&[
            [1, -1, 0, -1, 0, 0, -1],
            [-1, 0, 1, 0, 0, 0, 0],
            [-1, 2, -1, -1, 0, 0, -1],
            [0, 1, 0, -1, -1, 1, 0],
            [0, -1, 0, 0, 1, -1, -1],
            [0, -1, 0, 1, 1, 0, 1],
        ]);
        assert_eq!(augmented(&sys), expected);
        assert_eq!((sys.rank_t, sys.rank_tv), (5, 5));
    }

    #[test]
    fn k_one_gives_rank_four() {
        // Same a..g with k = 1: row 6 of 𝕋 becomes (0, −1, 0, 2, 1, −1), but the
        // consistent right-hand side is −(d + e + g) = 1 and the rank is only 4.
        let mut p = Section7Params::rank5();
        p.k = BaseScalar::from_int(1);
        let sys = section7_t_matrix(&FamilySpec::Section7(p)).unwrap();
        assert_eq!(sys.t.row(5), ints(&[[0, -1, 0, 2, 1, -1, 0]]).row(0)[..6].to_vec().as_slice());
        assert_eq!(sys.v[5], BaseScalar::from_int(1));
        assert_eq!((sys.rank_t, sys.rank_tv), (4, 4));
    }

    #[test]
    fn rank3_preset() {
        let spec = FamilySpec::Section7(Section7Params::rank3());
        let sys = section7_t_matrix(&spec).unwrap();
        assert_eq!(sys.rank_tv, 3);
        let t = spec.build(FieldMode::RealRational).unwrap();
        let r = solve_type_iv(&t);
        assert_eq!(r.solutions.families(), &[TypeIVFamily::FixedY { y: Scalar::from_int(1) }]);
    }

    #[test]
    fn presets_have_the_two_planes() {
        for p in [Section7Params::rank4(), Section7Params::rank5()] {
            let t = FamilySpec::Section7(p).build(FieldMode::RealRational).unwrap();
            let r = solve_type_iv(&t);
            let TypeIVSolutions::Finite(mut pts) = r.solutions else {
                panic!("expected finitely many type IV planes");
            };
            pts.sort_by(|a, b| a.0.approx().0.total_cmp(&b.0.approx().0));
            assert_eq!(pts, vec![(Scalar::from_int(0), Scalar::from_int(1)), (Scalar::from_int(1), Scalar::from_int(1))]);
        }
    }

    #[test]
    fn diagonal_variants() {
        for (v, n) in [(DiagonalVariant::I, 3), (DiagonalVariant::II, 2), (DiagonalVariant::III, 1)] {
            let t = FamilySpec::DiagonalIdempotent(v).build(FieldMode::RealRational).unwrap();
            assert_eq!(enumerate_onedim(&t).count(), Some(n));
        }
    }

    #[test]
    fn dime1_annihilator() {
        let s = BaseScalar::from_int;
        let spec = FamilySpec::Dime1 {
            omega: s(0),
            omega_tilde: s(0),
            e3_square: [s(1), s(0), s(0)],
        };
        let t = spec.build(FieldMode::RealRational).unwrap();
        assert_eq!(t.annihilator().dimension(), 2);
        assert!(matches!(enumerate_onedim(&t), OneDimEnumeration::Infinite(_)));
    }

    #[test]
    fn two_one_dim_has_the_coordinate_lines() {
        let t = FamilySpec::TwoOneDim(TwoOneDimParams::from_ints([1, 2, -1, 3, 1, 2, 1]))
            .build(FieldMode::RealRational)
            .unwrap();
        assert!(t.is_commutative());
        assert!(is_ideal_line(&t, &Line::from_ints([1, 0, 0]).unwrap()));
        assert!(is_ideal_line(&t, &Line::from_ints([0, 1, 0]).unwrap()));
    }

    #[test]
    fn parse_round_trip() {
        for (name, _) in FAMILY_NAMES.iter().filter(|(_, p)| p.is_empty()) {
            let spec = FamilySpec::parse(name, &[]).unwrap();
            assert!(spec.build(FieldMode::RealRational).is_ok());
        }
        let spec = FamilySpec::parse("section7", &["1", "0", "-1", "1", "-1", "-1", "1", "0"].map(String::from)).unwrap();
        assert_eq!(spec, FamilySpec::Section7(Section7Params::rank4()));
        assert!(FamilySpec::parse("section7", &["1".to_string()]).is_err());
        assert!(FamilySpec::parse("nope", &[]).is_err());
        assert!(FamilySpec::parse("dime1", &["i", "0", "0", "0", "1"].map(String::from))
            .unwrap()
            .build(FieldMode::RealRational)
            .is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn section7_matrix_is_the_symbolic_display(v in proptest::array::uniform8(-3i64..=3)) {
            let p = Section7Params::from_ints(v);
            let sys = section7_t_matrix(&FamilySpec::Section7(p.clone())).unwrap();
            prop_assert_eq!(augmented(&sys), symbolic(&p));
        }

        #[test]
        fn section7_planes_are_ideals(v in proptest::array::uniform8(-3i64..=3)) {
            let t = FamilySpec::Section7(Section7Params::from_ints(v)).build(FieldMode::RealRational).unwrap();
            for x in [0, 1] {
                let plane = PlaneDescriptor::type_iv(Scalar::from_int(x), Scalar::from_int(1)).unwrap();
                prop_assert!(is_ideal_plane(&t, &plane));
            }
        }
    }
}
