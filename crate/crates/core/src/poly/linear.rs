use std::fmt;

use crate::scalar::Field;

/// Dense row-major matrix over a field.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix");
        Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| T::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self.get(r, k).clone() * other.get(k, c).clone())
        })
    }

    /// Append `v` as an extra column.
    pub fn augment(&self, v: &[T]) -> Matrix<T> {
        assert_eq!(v.len(), self.rows);
        Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                v[r].clone()
            }
        })
    }

    /// Replace column `j` by `v`.
    pub fn with_column(&self, j: usize, v: &[T]) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            if c == j {
                v[r].clone()
            } else {
                self.get(r, c).clone()
            }
        })
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Any nonzero entry is an exact pivot, so the first one found in each column
    /// is taken; the result does not depend on the choice.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().unwrap();
            for c in col..m.cols {
                let v = m.get(row, c).clone() * inv.clone();
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c).clone() - factor.clone() * m.get(row, c).clone();
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant of a square matrix by exact elimination.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return T::zero();
            };
            if p != col {
                for c in 0..n {
                    m.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = det * pivot.clone();
            let inv = pivot.inv().unwrap();
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone() * inv.clone();
                for c in col..n {
                    let v = m.get(r, c).clone() - factor.clone() * m.get(col, c).clone();
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }
}

impl<T: Field> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// A linear system `A·x = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem<T> {
    pub matrix: Matrix<T>,
    pub rhs: Vec<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LinearOutcome<T> {
    Empty,
    Unique(Vec<T>),
    /// `particular + span(kernel)`.
    Affine { particular: Vec<T>, kernel: Vec<Vec<T>> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution<T> {
    pub rank_coeff: usize,
    pub rank_augmented: usize,
    pub outcome: LinearOutcome<T>,
}

impl<T: Field> LinearSystem<T> {
    pub fn new(matrix: Matrix<T>, rhs: Vec<T>) -> Self {
        assert_eq!(matrix.rows(), rhs.len(), "inconsistent system dimensions");
        LinearSystem { matrix, rhs }
    }
}

/// Solve exactly, reporting the ranks of the coefficient and augmented matrices.
pub fn solve_linear_with_rank<T: Field>(sys: &LinearSystem<T>) -> LinearSolution<T> {
    let n = sys.matrix.cols();
    let aug = sys.matrix.augment(&sys.rhs);
    let (r, pivots) = aug.rref();
    let rank_augmented = pivots.len();
    let rank_coeff = pivots.iter().filter(|&&p| p < n).count();
    if rank_coeff != rank_augmented {
        return LinearSolution {
            rank_coeff,
            rank_augmented,
            outcome: LinearOutcome::Empty,
        };
    }
    let mut particular = vec![T::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = r.get(i, n).clone();
    }
    let outcome = if rank_coeff == n {
        LinearOutcome::Unique(particular)
    } else {
        LinearOutcome::Affine {
            particular,
            kernel: sys.matrix.kernel(),
        }
    };
    LinearSolution {
        rank_coeff,
        rank_augmented,
        outcome,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::BaseScalar;
    use proptest::prelude::*;

    type M = Matrix<BaseScalar>;

    fn v(xs: &[i64]) -> Vec<BaseScalar> {
        xs.iter().map(|&x| BaseScalar::from_int(x)).collect()
    }

    #[test]
    fn identity_system() {
        let sys = LinearSystem::new(M::from_ints(&[&[1, 0], &[0, 1]]), v(&[3, 5]));
        let sol = solve_linear_with_rank(&sys);
        assert_eq!(sol.outcome, LinearOutcome::Unique(v(&[3, 5])));
        assert_eq!((sol.rank_coeff, sol.rank_augmented), (2, 2));
    }

    #[test]
    fn underdetermined_system() {
        let sys = LinearSystem::new(M::from_ints(&[&[1, 1]]), v(&[2]));
        let sol = solve_linear_with_rank(&sys);
        assert_eq!(
            sol.outcome,
            LinearOutcome::Affine {
                particular: v(&[2, 0]),
                kernel: vec![v(&[-1, 1])],
            }
        );
    }

    #[test]
    fn inconsistent_system() {
        let sys = LinearSystem::new(M::from_ints(&[&[1, 0], &[1, 0]]), v(&[0, 1]));
        let sol = solve_linear_with_rank(&sys);
        assert_eq!(sol.outcome, LinearOutcome::Empty);
        assert_eq!((sol.rank_coeff, sol.rank_augmented), (1, 2));
    }

    #[test]
    fn determinant() {
        let m = M::from_ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(m.det(), BaseScalar::from_int(6));
        let singular = M::from_ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        assert!(singular.det().is_zero());
        assert_eq!(singular.rank(), 2);
        let m = M::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), BaseScalar::from_int(-1));
    }

    proptest! {
        #[test]
        fn solutions_satisfy_the_system(entries in proptest::collection::vec(-3i64..4, 12),
                                        rhs in proptest::collection::vec(-3i64..4, 3)) {
            let rows: Vec<&[i64]> = entries.chunks(4).collect();
            let m = M::from_ints(&rows);
            let b = v(&rhs);
            let sol = solve_linear_with_rank(&LinearSystem::new(m.clone(), b.clone()));
            prop_assert_eq!(sol.rank_coeff, m.rank());
            match sol.outcome {
                LinearOutcome::Empty => prop_assert!(sol.rank_coeff < sol.rank_augmented),
                LinearOutcome::Unique(x) => prop_assert_eq!(m.mul_vec(&x), b),
                LinearOutcome::Affine { particular, kernel } => {
                    prop_assert_eq!(m.mul_vec(&particular), b);
                    prop_assert_eq!(kernel.len(), 4 - sol.rank_coeff);
                    for k in kernel {
                        prop_assert!(m.mul_vec(&k).iter().all(|x| x.is_zero()));
                    }
                }
            }
        }
    }
}
