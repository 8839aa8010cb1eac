//! Polynomials and exact linear algebra.
//!
//! [`Poly`] is a dense univariate polynomial over any [`Field`](crate::scalar::Field);
//! [`BiPoly`] a bivariate polynomial over the base field. [`Matrix`] and
//! [`solve_linear_with_rank`] give exact ranks, kernels and determinants.

mod bi;
mod linear;
mod system;
mod uni;

pub use bi::{poly_det, resultant_y, BiPoly};
pub use linear::{solve_linear_with_rank, LinearOutcome, LinearSolution, LinearSystem, Matrix};
pub use system::{solve_bivariate, solve_zero_dimensional, BivariateSolution, Point};
pub use uni::{Poly, UniPoly};

/// Monic gcd of two base-field polynomials; `gcd(0, 0) = 0`.
pub fn gcd_univariate(p: &UniPoly, q: &UniPoly) -> UniPoly {
    p.gcd(q)
}
