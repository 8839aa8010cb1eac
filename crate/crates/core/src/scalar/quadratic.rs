use super::factor::roots_in_mode;
use super::{BaseScalar, FieldMode, Scalar};
use crate::poly::UniPoly;

/// Solution set of a scalar equation in one unknown.
#[derive(Clone, Debug, PartialEq)]
pub enum ScalarSolutions {
    /// Every scalar is a solution (the equation vanishes identically).
    AllScalars,
    Empty,
    /// Distinct roots, exact.
    Finite(Vec<Scalar>),
}

impl ScalarSolutions {
    pub fn len(&self) -> Option<usize> {
        match self {
            ScalarSolutions::AllScalars => None,
            ScalarSolutions::Empty => Some(0),
            ScalarSolutions::Finite(v) => Some(v.len()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }
}

/// Solve `a·x² + b·x + c = 0`.
///
/// In real mode a negative discriminant gives no roots; a non-square discriminant
/// gives algebraic roots. In complex mode a nonzero discriminant always gives two
/// roots.
pub fn solve_quadratic(a: &BaseScalar, b: &BaseScalar, c: &BaseScalar, mode: FieldMode) -> ScalarSolutions {
    let p = UniPoly::new(vec![c.clone(), b.clone(), a.clone()]);
    match p.degree() {
        None => ScalarSolutions::AllScalars,
        Some(0) => ScalarSolutions::Empty,
        _ => {
            let roots = roots_in_mode(&p, mode);
            if roots.is_empty() {
                ScalarSolutions::Empty
            } else {
                ScalarSolutions::Finite(roots)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn s(n: i64) -> BaseScalar {
        BaseScalar::from_int(n)
    }

    fn contains(sol: &ScalarSolutions, x: &Scalar) -> bool {
        matches!(sol, ScalarSolutions::Finite(v) if v.contains(x))
    }

    #[test]
    fn difference_of_squares() {
        let sol = solve_quadratic(&s(1), &s(0), &s(-1), FieldMode::RealRational);
        assert_eq!(sol.len(), Some(2));
        assert!(contains(&sol, &Scalar::from_int(1)));
        assert!(contains(&sol, &Scalar::from_int(-1)));
    }

    #[test]
    fn x_squared_plus_one() {
        assert_eq!(
            solve_quadratic(&s(1), &s(0), &s(1), FieldMode::RealRational),
            ScalarSolutions::Empty
        );
        let sol = solve_quadratic(&s(1), &s(0), &s(1), FieldMode::ComplexGaussian);
        assert_eq!(sol.len(), Some(2));
        assert!(contains(&sol, &Scalar::Base(BaseScalar::i())));
        assert!(contains(&sol, &Scalar::Base(-BaseScalar::i())));
    }

    #[test]
    fn degenerate_cases() {
        assert_eq!(
            solve_quadratic(&s(0), &s(0), &s(0), FieldMode::RealRational),
            ScalarSolutions::AllScalars
        );
        assert_eq!(
            solve_quadratic(&s(0), &s(0), &s(3), FieldMode::RealRational),
            ScalarSolutions::Empty
        );
        assert_eq!(
            solve_quadratic(&s(0), &s(2), &s(3), FieldMode::RealRational),
            ScalarSolutions::Finite(vec![Scalar::Base(BaseScalar::from_ratio(-3, 2))])
        );
        assert_eq!(
            solve_quadratic(&s(1), &s(-2), &s(1), FieldMode::RealRational),
            ScalarSolutions::Finite(vec![Scalar::from_int(1)])
        );
    }

    #[test]
    fn irrational_roots_satisfy_the_equation_exactly() {
        for mode in [FieldMode::RealRational, FieldMode::ComplexGaussian] {
            let (a, b, c) = (s(2), s(3), s(-4));
            let ScalarSolutions::Finite(roots) = solve_quadratic(&a, &b, &c, mode) else {
                panic!("expected roots");
            };
            assert_eq!(roots.len(), 2);
            for r in roots {
                assert!(!r.is_base());
                let v = Scalar::Base(a.clone()) * r.clone() * r.clone()
                    + Scalar::Base(b.clone()) * r
                    + Scalar::Base(c.clone());
                assert!(v.is_zero());
            }
        }
    }
}
