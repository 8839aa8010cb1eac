//! Common zeros of a family of bivariate polynomials.
//!
//! The common zero set of `p₁, …, p_r` is `V(G) ∪ V(p₁/G, …, p_r/G)` where `G` is
//! their gcd; the second part is finite. Its points are found by projecting onto
//! a (sheared) `x`-axis with a resultant of two random combinations, factoring the
//! projection over the base field, and, for each root `θ`, taking the gcd of the
//! specialized polynomials over `F(θ)`. A shear is rejected (and the next one tried)
//! whenever some `θ` lies under more than one point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bi::{resultant_y, BiPoly};
use super::uni::{Poly, UniPoly};
use crate::scalar::{irreducible_factors, BaseScalar, Field, FieldMode, Scalar};
use crate::scalar::roots_of_irreducible;

/// A point `(x, y)` with exact coordinates in a common field.
pub type Point = (Scalar, Scalar);

#[derive(Clone, Debug)]
pub enum BivariateSolution {
    /// Every polynomial vanishes identically.
    Whole,
    /// The gcd defines a curve; `isolated` lists the finitely many further common
    /// zeros that do not lie on it.
    Curve { curve: BiPoly, isolated: Vec<Point> },
    Finite(Vec<Point>),
}

/// Solve `p₁ = … = p_r = 0` over the field of `mode`.
pub fn solve_bivariate(polys: &[BiPoly], mode: FieldMode) -> BivariateSolution {
    let nz: Vec<BiPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nz.is_empty() {
        return BivariateSolution::Whole;
    }
    let g = BiPoly::gcd_all(&nz);
    if g.is_constant() {
        return BivariateSolution::Finite(solve_zero_dimensional(&nz, mode));
    }
    let reduced: Vec<BiPoly> = nz.iter().map(|p| p.div_exact(&g).expect("gcd divides")).collect();
    let isolated = solve_zero_dimensional(&reduced, mode)
        .into_iter()
        .filter(|(x, y)| !g.eval(x, y).is_zero())
        .collect();
    BivariateSolution::Curve { curve: g, isolated }
}

fn shear_values() -> impl Iterator<Item = i64> {
    (0..).flat_map(|k: i64| if k == 0 { vec![0] } else { vec![k, -k] })
}

/// Common zeros of polynomials whose gcd is constant (so the set is finite).
pub fn solve_zero_dimensional(polys: &[BiPoly], mode: FieldMode) -> Vec<Point> {
    let nz: Vec<BiPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nz.is_empty() || nz.iter().any(|p| p.is_constant()) {
        return Vec::new();
    }
    debug_assert!(BiPoly::gcd_all(&nz).is_constant(), "system must be zero-dimensional");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b1);
    for c in shear_values().take(40) {
        let sheared: Vec<BiPoly> = if c == 0 {
            nz.clone()
        } else {
            let xs = &BiPoly::x() - &BiPoly::y().scale(&BaseScalar::from_int(c));
            nz.iter().map(|p| p.substitute(&xs, &BiPoly::y())).collect()
        };
        let proj = projection(&sheared, &mut rng);
        if proj.is_constant() {
            return Vec::new();
        }
        if let Some(points) = lift_points(&sheared, &proj, c, mode) {
            return points;
        }
    }
    panic!("no separating shear found for a zero-dimensional system")
}

/// A nonzero univariate polynomial in `x` vanishing at the `x`-coordinate of every
/// common zero.
fn projection(gs: &[BiPoly], rng: &mut ChaCha8Rng) -> UniPoly {
    let free: Vec<&BiPoly> = gs.iter().filter(|g| g.degree_y() == Some(0)).collect();
    let dep: Vec<&BiPoly> = gs.iter().filter(|g| g.degree_y().unwrap_or(0) > 0).collect();
    let r0 = free.iter().fold(UniPoly::zero(), |acc, g| acc.gcd(&g.y_coeff(0)));
    let mut res = UniPoly::zero();
    if dep.len() >= 2 {
        for _ in 0..24 {
            let mut combo = || {
                dep.iter().fold(BiPoly::zero(), |acc, g| {
                    let k = loop {
                        let k: i64 = rng.gen_range(-40..=40);
                        if k != 0 {
                            break k;
                        }
                    };
                    &acc + &g.scale(&BaseScalar::from_int(k))
                })
            };
            let p = combo();
            let q = combo();
            if p.degree_y().unwrap_or(0) == 0 || q.degree_y().unwrap_or(0) == 0 {
                continue;
            }
            let r = resultant_y(&p, &q).expect("positive y-degrees");
            if !r.is_zero() {
                res = r;
                break;
            }
        }
    }
    match (r0.is_zero(), res.is_zero()) {
        (false, false) => r0.gcd(&res),
        (false, true) => r0,
        (true, false) => res.monic(),
        (true, true) => panic!("projection failed: the system is not zero-dimensional"),
    }
}

/// Lift each root of the projection to the unique point above it, or `None` when
/// some root carries several points (the shear does not separate them).
fn lift_points(gs: &[BiPoly], proj: &UniPoly, shear: i64, mode: FieldMode) -> Option<Vec<Point>> {
    let mut points = Vec::new();
    for (m, _) in irreducible_factors(&proj.squarefree_part(), mode) {
        for theta in roots_of_irreducible(&m, mode) {
            let specialized: Vec<Poly<Scalar>> = gs.iter().map(|g| g.eval_x(&theta)).collect();
            let gy = specialized.iter().fold(Poly::zero(), |acc, p| acc.gcd(p));
            if gy.is_zero() {
                // a whole vertical line would be a common factor
                panic!("zero-dimensional system vanishes on a line");
            }
            if gy.is_constant() {
                continue;
            }
            let sq = gy.squarefree_part();
            if sq.degree() != Some(1) {
                return None;
            }
            let y0 = -sq.coeff(0);
            let x0 = theta.clone() - Scalar::from_int(shear) * y0.clone();
            if mode == FieldMode::RealRational && !is_real_point(&x0, &y0) {
                continue;
            }
            points.push((x0, y0));
        }
    }
    Some(points)
}

fn is_real_point(x: &Scalar, y: &Scalar) -> bool {
    [x, y].iter().all(|s| match s {
        Scalar::Base(b) => b.is_real(),
        Scalar::Algebraic(a) => a.is_real_mode(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(terms: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_terms(
            &terms
                .iter()
                .map(|&(i, j, c)| (i, j, BaseScalar::from_int(c)))
                .collect::<Vec<_>>(),
        )
    }

    fn check_points(polys: &[BiPoly], pts: &[Point]) {
        for (x, y) in pts {
            for p in polys {
                assert!(p.eval(x, y).is_zero(), "{p} does not vanish at ({x}, {y})");
            }
        }
    }

    #[test]
    fn circle_and_hyperbola() {
        let polys = [bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -5)]), bp(&[(1, 1, 1), (0, 0, -2)])];
        let BivariateSolution::Finite(pts) = solve_bivariate(&polys, FieldMode::RealRational) else {
            panic!("expected finite");
        };
        assert_eq!(pts.len(), 4);
        check_points(&polys, &pts);
    }

    #[test]
    fn points_sharing_x_need_a_shear() {
        // x² − 1 = 0, y² − 1 = 0: four points, two over each x
        let polys = [bp(&[(2, 0, 1), (0, 0, -1)]), bp(&[(0, 2, 1), (0, 0, -1)])];
        let BivariateSolution::Finite(pts) = solve_bivariate(&polys, FieldMode::RealRational) else {
            panic!("expected finite");
        };
        assert_eq!(pts.len(), 4);
        check_points(&polys, &pts);
    }

    #[test]
    fn irrational_points() {
        // x² − 2 = 0, y − x = 0
        let polys = [bp(&[(2, 0, 1), (0, 0, -2)]), bp(&[(0, 1, 1), (1, 0, -1)])];
        let BivariateSolution::Finite(pts) = solve_bivariate(&polys, FieldMode::RealRational) else {
            panic!("expected finite");
        };
        assert_eq!(pts.len(), 2);
        check_points(&polys, &pts);
        // x² + 1 = 0 has no real points but two complex ones
        let polys = [bp(&[(2, 0, 1), (0, 0, 1)]), bp(&[(0, 1, 1), (1, 0, -1)])];
        let BivariateSolution::Finite(pts) = solve_bivariate(&polys, FieldMode::RealRational) else {
            panic!("expected finite");
        };
        assert!(pts.is_empty());
        let BivariateSolution::Finite(pts) = solve_bivariate(&polys, FieldMode::ComplexGaussian) else {
            panic!("expected finite");
        };
        assert_eq!(pts.len(), 2);
        check_points(&polys, &pts);
    }

    #[test]
    fn curve_plus_isolated_point() {
        // (y − 1)·(x − 2), (y − 1)·(y − 3): the line y = 1 plus the point (2, 3)
        let l = bp(&[(0, 1, 1), (0, 0, -1)]);
        let polys = [&l * &bp(&[(1, 0, 1), (0, 0, -2)]), &l * &bp(&[(0, 1, 1), (0, 0, -3)])];
        match solve_bivariate(&polys, FieldMode::RealRational) {
            BivariateSolution::Curve { curve, isolated } => {
                assert_eq!(curve, l);
                assert_eq!(isolated, vec![(Scalar::from_int(2), Scalar::from_int(3))]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            solve_bivariate(&[BiPoly::zero()], FieldMode::RealRational),
            BivariateSolution::Whole
        ));
    }

    #[test]
    fn inconsistent_system() {
        let polys = [bp(&[(1, 0, 1)]), bp(&[(1, 0, 1), (0, 0, 1)])];
        let BivariateSolution::Finite(pts) = solve_bivariate(&polys, FieldMode::RealRational) else {
            panic!("expected finite");
        };
        assert!(pts.is_empty());
    }
}
