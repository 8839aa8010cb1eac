//! Structure tensors of 3-dimensional algebras and the matrices derived from them.
//!
//! Indices are 0-based in code. The 1-based helpers [`StructureTensor::w`],
//! [`StructureTensor::hat_matrix`], [`StructureTensor::tilde_matrix`] and
//! [`StructureTensor::permute_basis`] take 1-based indices so formulas can be
//! transcribed verbatim.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Matrix;
use crate::scalar::{BaseScalar, Field, FieldMode, Scalar};

/// A coordinate vector in the basis `{e₁, e₂, e₃}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector3(pub [Scalar; 3]);

impl Vector3 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Self {
        Vector3([a, b, c])
    }

    pub fn zero() -> Self {
        Vector3::from_ints([0, 0, 0])
    }

    pub fn from_ints(v: [i64; 3]) -> Self {
        Vector3(v.map(Scalar::from_int))
    }

    pub fn from_base(v: [BaseScalar; 3]) -> Self {
        Vector3(v.map(Scalar::Base))
    }

    /// The basis vector `e_{i+1}` (0-based `i`).
    pub fn e(i: usize) -> Self {
        let mut v = Vector3::zero();
        v.0[i] = Scalar::from_int(1);
        v
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &Scalar) -> Vector3 {
        Vector3(self.0.clone().map(|c| c * s.clone()))
    }

    pub fn dot(&self, other: &Vector3) -> Scalar {
        (0..3).fold(Scalar::zero(), |acc, i| acc + &self.0[i] * &other.0[i])
    }

    pub fn cross(&self, other: &Vector3) -> Vector3 {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &other.0;
        Vector3::new(
            a2 * b3 - a3 * b2,
            a3 * b1 - a1 * b3,
            a1 * b2 - a2 * b1,
        )
    }

    /// Index of the first nonzero coordinate.
    pub fn pivot(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// True when every coordinate lies in the base field.
    pub fn is_base(&self) -> bool {
        self.0.iter().all(Scalar::is_base)
    }
}

impl Index<usize> for Vector3 {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &Vector3 {
    type Output = Vector3;
    fn add(self, rhs: &Vector3) -> Vector3 {
        Vector3([0, 1, 2].map(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Vector3 {
    type Output = Vector3;
    fn sub(self, rhs: &Vector3) -> Vector3 {
        Vector3([0, 1, 2].map(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3(self.0.clone().map(|c| -c))
    }
}

impl fmt::Display for Vector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// A 3×3 matrix over the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix3(pub [[BaseScalar; 3]; 3]);

impl Matrix3 {
    pub fn from_fn(f: impl Fn(usize, usize) -> BaseScalar) -> Self {
        Matrix3([0, 1, 2].map(|r| [0, 1, 2].map(|c| f(r, c))))
    }

    pub fn zero() -> Self {
        Matrix3::from_fn(|_, _| BaseScalar::zero())
    }

    pub fn identity() -> Self {
        Matrix3::from_fn(|r, c| BaseScalar::from_int((r == c) as i64))
    }

    pub fn get(&self, r: usize, c: usize) -> &BaseScalar {
        &self.0[r][c]
    }

    pub fn transpose(&self) -> Matrix3 {
        Matrix3::from_fn(|r, c| self.0[c][r].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(BaseScalar::is_zero)
    }

    pub fn mul_vec(&self, v: &Vector3) -> Vector3 {
        Vector3([0, 1, 2].map(|r| {
            (0..3).fold(Scalar::zero(), |acc, c| {
                acc + Scalar::Base(self.0[r][c].clone()) * v.0[c].clone()
            })
        }))
    }

    /// `self − λ·I`.
    pub fn shifted(&self, lambda: &BaseScalar) -> Matrix3 {
        Matrix3::from_fn(|r, c| {
            if r == c {
                &self.0[r][c] - lambda
            } else {
                self.0[r][c].clone()
            }
        })
    }

    pub fn to_matrix(&self) -> Matrix<BaseScalar> {
        Matrix::from_fn(3, 3, |r, c| self.0[r][c].clone())
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }

    pub fn det(&self) -> BaseScalar {
        self.to_matrix().det()
    }
}

impl fmt::Display for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_matrix())
    }
}

/// A linear subspace given by a basis (possibly empty).
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    pub basis: Vec<Vector3>,
}

impl Subspace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Exact membership test.
    pub fn contains(&self, v: &Vector3) -> bool {
        let rows: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.0.to_vec()).collect();
        let base_rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows.clone()).rank() };
        let mut with = rows;
        with.push(v.0.to_vec());
        Matrix::from_rows(with).rank() == base_rank
    }
}

/// The multiplication table `e_i e_j = Σ_k ω_ijk e_k` of a 3-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    omega: [[[BaseScalar; 3]; 3]; 3],
    mode: FieldMode,
}

impl StructureTensor {
    /// Build from 0-based `omega[i][j][k]`. In real mode every constant must be real.
    pub fn new(omega: [[[BaseScalar; 3]; 3]; 3], mode: FieldMode) -> Result<Self> {
        if mode == FieldMode::RealRational && !omega.iter().flatten().flatten().all(BaseScalar::is_real) {
            return Err(Error::FieldMismatch(
                "complex structure constant in real mode".into(),
            ));
        }
        Ok(StructureTensor { omega, mode })
    }

    /// Build from a function of 0-based indices; panics on a mode mismatch.
    pub fn from_fn(mode: FieldMode, f: impl Fn(usize, usize, usize) -> BaseScalar) -> Self {
        let omega = [0, 1, 2].map(|i| [0, 1, 2].map(|j| [0, 1, 2].map(|k| f(i, j, k))));
        StructureTensor::new(omega, mode).expect("structure constants do not fit the field mode")
    }

    pub fn from_ints(omega: [[[i64; 3]; 3]; 3]) -> Self {
        StructureTensor::from_fn(FieldMode::RealRational, |i, j, k| {
            BaseScalar::from_int(omega[i][j][k])
        })
    }

    pub fn zero(mode: FieldMode) -> Self {
        StructureTensor::from_fn(mode, |_, _, _| BaseScalar::zero())
    }

    /// Same constants, different field mode.
    pub fn with_mode(&self, mode: FieldMode) -> Result<Self> {
        StructureTensor::new(self.omega.clone(), mode)
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    /// `ω_ijk` with 0-based indices.
    pub fn omega(&self, i: usize, j: usize, k: usize) -> &BaseScalar {
        &self.omega[i][j][k]
    }

    /// `ω_ijk` with 1-based indices, for transcribing formulas.
    pub fn w(&self, i: usize, j: usize, k: usize) -> BaseScalar {
        self.omega[i - 1][j - 1][k - 1].clone()
    }

    pub fn entries(&self) -> &[[[BaseScalar; 3]; 3]; 3] {
        &self.omega
    }

    pub fn is_zero(&self) -> bool {
        self.omega.iter().flatten().flatten().all(BaseScalar::is_zero)
    }

    pub fn is_commutative(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.omega[i][j] == self.omega[j][i]))
    }

    /// Coordinates of `a·b`: `γ_k = Σ_{i,j} a_i ω_ijk b_j`.
    pub fn product(&self, a: &Vector3, b: &Vector3) -> Vector3 {
        let mut out = Vector3::zero();
        for i in 0..3 {
            if a.0[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if b.0[j].is_zero() {
                    continue;
                }
                let ab = &a.0[i] * &b.0[j];
                for k in 0..3 {
                    let w = &self.omega[i][j][k];
                    if !w.is_zero() {
                        out.0[k] = out.0[k].clone() + Scalar::Base(w.clone()) * ab.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `e_k` (1-based): `M̂_k u = e_k·u`.
    pub fn hat_matrix(&self, k: usize) -> Result<Matrix3> {
        let k = check_index(k)?;
        Ok(Matrix3::from_fn(|r, c| self.omega[k][c][r].clone()))
    }

    /// Matrix of right multiplication by `e_k` (1-based): `M̃_k u = u·e_k`.
    pub fn tilde_matrix(&self, k: usize) -> Result<Matrix3> {
        let k = check_index(k)?;
        Ok(Matrix3::from_fn(|r, c| self.omega[c][k][r].clone()))
    }

    /// The six multiplication matrices `M̂₁, M̂₂, M̂₃, M̃₁, M̃₂, M̃₃`.
    pub fn multiplication_matrices(&self) -> [Matrix3; 6] {
        [0, 1, 2, 3, 4, 5].map(|idx| {
            if idx < 3 {
                self.hat_matrix(idx + 1).unwrap()
            } else {
                self.tilde_matrix(idx - 2).unwrap()
            }
        })
    }

    /// The slice `M_k` (1-based): `(M_k)_{ij} = ω_ijk`.
    pub fn slice(&self, k: usize) -> Result<Matrix3> {
        let k = check_index(k)?;
        Ok(Matrix3::from_fn(|i, j| self.omega[i][j][k].clone()))
    }

    /// `{u : a·u = u·a = 0 for all a}`.
    pub fn annihilator(&self) -> Subspace {
        let mats = self.multiplication_matrices();
        let stacked = Matrix::from_fn(18, 3, |r, c| mats[r / 3].0[r % 3][c].clone());
        Subspace {
            basis: stacked.kernel().into_iter().map(|v| Vector3::from_base([v[0].clone(), v[1].clone(), v[2].clone()])).collect(),
        }
    }

    /// The symmetrized product `a∘b = ½(ab + ba)`.
    pub fn symmetrize(&self) -> StructureTensor {
        let half = BaseScalar::from_ratio(1, 2);
        StructureTensor::from_fn(self.mode, |i, j, k| {
            &(&self.omega[i][j][k] + &self.omega[j][i][k]) * &half
        })
    }

    /// Relabel the basis: `ω'_{σ(i)σ(j)σ(k)} = ω_ijk`, with `sigma[i-1] = σ(i)` 1-based.
    pub fn permute_basis(&self, sigma: [usize; 3]) -> Result<StructureTensor> {
        let s = check_permutation(sigma)?;
        let mut omega = self.omega.clone();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    omega[s[i]][s[j]][s[k]] = self.omega[i][j][k].clone();
                }
            }
        }
        StructureTensor::new(omega, self.mode)
    }
}

/// Apply `σ` to coordinates: `v'_{σ(i)} = v_i` (1-based `sigma`).
pub fn permute_vector(v: &Vector3, sigma: [usize; 3]) -> Result<Vector3> {
    let s = check_permutation(sigma)?;
    let mut out = Vector3::zero();
    for i in 0..3 {
        out.0[s[i]] = v.0[i].clone();
    }
    Ok(out)
}

/// The inverse of a 1-based permutation.
pub fn invert_permutation(sigma: [usize; 3]) -> Result<[usize; 3]> {
    let s = check_permutation(sigma)?;
    let mut inv = [0; 3];
    for i in 0..3 {
        inv[s[i]] = i + 1;
    }
    Ok(inv)
}

fn check_index(k: usize) -> Result<usize> {
    if (1..=3).contains(&k) {
        Ok(k - 1)
    } else {
        Err(Error::IndexOutOfRange { index: k })
    }
}

fn check_permutation(sigma: [usize; 3]) -> Result<[usize; 3]> {
    let mut seen = [false; 3];
    for &s in &sigma {
        if !(1..=3).contains(&s) || seen[s - 1] {
            return Err(Error::InvalidPermutation(sigma));
        }
        seen[s - 1] = true;
    }
    Ok(sigma.map(|s| s - 1))
}

impl fmt::Display for StructureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..3 {
            for j in 0..3 {
                let row: Vec<String> = self.omega[i][j].iter().map(|c| c.to_string()).collect();
                writeln!(f, "e{}·e{} = ({})", i + 1, j + 1, row.join(", "))?;
            }
        }
        Ok(())
    }
}
