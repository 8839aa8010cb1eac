//! Exact enumeration of the ideals of a three-dimensional algebra.
//!
//! An algebra is given by its 27 structure constants `ω[i][j][k]` relative to an
//! ordered basis `{e₁, e₂, e₃}`, meaning `eᵢ eⱼ = Σₖ ω[i][j][k] eₖ`. No associativity
//! or commutativity is assumed. The crate finds every one-dimensional ideal and
//! every two-dimensional ideal (sorted into the four canonical plane types), or
//! reports an infinite family when there are infinitely many.
//!
//! All arithmetic is exact. The base field is either the rationals (standing in
//! for ℝ) or the Gaussian rationals (standing in for ℂ); solution parameters that
//! are irrational live in a simple algebraic extension `F[t]/(m(t))` together
//! with an isolating region that pins down which root of `m` is meant.
//!
//! Indices are 0-based throughout the API; documentation and the external file
//! formats use the 1-based convention `e₁, e₂, e₃`.

pub mod algebra;
pub mod error;
pub mod families;
pub mod onedim;
pub mod poly;
pub mod scalar;
pub mod subspace;
pub mod twodim;

pub use algebra::{Matrix3, StructureTensor, Subspace, Vector3};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use onedim::{enumerate_onedim, onedim_census, OneDimEnumeration};
pub use scalar::{AlgebraicScalar, BaseScalar, Field, FieldMode, Scalar};
pub use subspace::{classify_plane, is_ideal_line, is_ideal_plane, Line, PlaneDescriptor};
pub use twodim::{enumerate_twodim, TwoDimEnumeration};
