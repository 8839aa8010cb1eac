use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::uni::{Poly, UniPoly};
use crate::error::{Error, Result};
use crate::scalar::{BaseScalar, Field};

/// Bivariate polynomial in `(x, y)` over the base field.
///
/// Stored as a list of coefficients in `F[x]` indexed by the power of `y`; the
/// sparse view [`BiPoly::terms`] lists the nonzero coefficients by `(i, j)` for
/// the monomial `x^i y^j`.
#[derive(Clone, PartialEq, Debug)]
pub struct BiPoly {
    by_y: Vec<UniPoly>,
}

impl BiPoly {
    fn from_y_coeffs(mut by_y: Vec<UniPoly>) -> Self {
        while by_y.last().is_some_and(|c| c.is_zero()) {
            by_y.pop();
        }
        BiPoly { by_y }
    }

    pub fn zero() -> Self {
        BiPoly { by_y: Vec::new() }
    }

    pub fn constant(c: BaseScalar) -> Self {
        BiPoly::from_y_coeffs(vec![UniPoly::constant(c)])
    }

    pub fn one() -> Self {
        BiPoly::constant(BaseScalar::one())
    }

    pub fn x() -> Self {
        BiPoly::from_y_coeffs(vec![UniPoly::x()])
    }

    pub fn y() -> Self {
        BiPoly::from_y_coeffs(vec![UniPoly::zero(), UniPoly::one()])
    }

    /// `c · x^i · y^j`.
    pub fn monomial(c: BaseScalar, i: usize, j: usize) -> Self {
        let mut by_y = vec![UniPoly::zero(); j];
        by_y.push(UniPoly::monomial(c, i));
        BiPoly::from_y_coeffs(by_y)
    }

    pub fn from_terms(terms: &[(usize, usize, BaseScalar)]) -> Self {
        terms
            .iter()
            .fold(BiPoly::zero(), |acc, (i, j, c)| &acc + &BiPoly::monomial(c.clone(), *i, *j))
    }

    /// A polynomial in `x` alone.
    pub fn from_x(p: UniPoly) -> Self {
        BiPoly::from_y_coeffs(vec![p])
    }

    /// A polynomial in `y` alone.
    pub fn from_y(p: &UniPoly) -> Self {
        BiPoly::from_y_coeffs(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    /// Nonzero coefficients keyed by `(x-degree, y-degree)`.
    pub fn terms(&self) -> BTreeMap<(usize, usize), BaseScalar> {
        let mut out = BTreeMap::new();
        for (j, p) in self.by_y.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.insert((i, j), c.clone());
                }
            }
        }
        out
    }

    pub fn coeff(&self, i: usize, j: usize) -> BaseScalar {
        self.by_y.get(j).map_or_else(BaseScalar::zero, |p| p.coeff(i))
    }

    /// Coefficient of `y^j`, a polynomial in `x`.
    pub fn y_coeff(&self, j: usize) -> UniPoly {
        self.by_y.get(j).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.by_y.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.by_y.len() <= 1 && self.by_y.first().map_or(true, |p| p.is_constant())
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.by_y.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.by_y.iter().filter_map(|p| p.degree()).max()
    }

    pub fn eval<T: Field>(&self, x: &T, y: &T) -> T {
        let mut acc = T::zero();
        for p in self.by_y.iter().rev() {
            acc = acc * y.clone() + p.eval_in(x, T::from_base);
        }
        acc
    }

    /// Substitute a value for `x`, leaving a polynomial in `y`.
    pub fn eval_x<T: Field>(&self, x: &T) -> Poly<T> {
        Poly::new(self.by_y.iter().map(|p| p.eval_in(x, T::from_base)).collect())
    }

    /// Substitute a value for `y`, leaving a polynomial in `x`.
    pub fn eval_y<T: Field>(&self, y: &T) -> Poly<T> {
        self.swap_xy().eval_x(y)
    }

    /// Exchange the roles of `x` and `y`.
    pub fn swap_xy(&self) -> BiPoly {
        BiPoly::from_terms(
            &self
                .terms()
                .into_iter()
                .map(|((i, j), c)| (j, i, c))
                .collect::<Vec<_>>(),
        )
    }

    pub fn scale(&self, c: &BaseScalar) -> BiPoly {
        BiPoly::from_y_coeffs(self.by_y.iter().map(|p| p.scale(c)).collect())
    }

    /// Multiply by a polynomial in `x`.
    pub fn mul_x_poly(&self, p: &UniPoly) -> BiPoly {
        BiPoly::from_y_coeffs(self.by_y.iter().map(|q| q * p).collect())
    }

    /// Substitute `x ↦ a(x, y)` and `y ↦ b(x, y)`.
    pub fn substitute(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        let mut acc = BiPoly::zero();
        for ((i, j), c) in self.terms() {
            acc = &acc + &(&a.pow(i) * &b.pow(j)).scale(&c);
        }
        acc
    }

    pub fn pow(&self, e: usize) -> BiPoly {
        (0..e).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    /// Monic gcd of the `y`-coefficients (a polynomial in `x`).
    pub fn content_y(&self) -> UniPoly {
        self.by_y.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p))
    }

    /// Monic gcd of the `x`-coefficients (a polynomial in `y`).
    pub fn content_x(&self) -> UniPoly {
        self.swap_xy().content_y()
    }

    /// Divide out the `y`-content.
    pub fn primitive_y(&self) -> BiPoly {
        let c = self.content_y();
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::from_y_coeffs(self.by_y.iter().map(|p| p.div_exact(&c).unwrap()).collect())
    }

    /// Scale so the leading coefficient (highest `y`, then highest `x`) is 1.
    pub fn normalize(&self) -> BiPoly {
        match self.by_y.last().and_then(|p| p.leading()) {
            None => BiPoly::zero(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Pseudo-remainder with respect to `y`.
    fn prem_y(&self, d: &BiPoly) -> BiPoly {
        let dd = d.degree_y().expect("nonzero divisor");
        let lc = d.by_y.last().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree_y() {
            if dr < dd {
                break;
            }
            let lr = r.by_y.last().unwrap().clone();
            let shifted = BiPoly::from_y_coeffs(
                std::iter::repeat(UniPoly::zero())
                    .take(dr - dd)
                    .chain(d.by_y.iter().map(|p| p * &lr))
                    .collect(),
            );
            r = &r.mul_x_poly(&lc) - &shifted;
        }
        r
    }

    /// Greatest common divisor in `F[x, y]`, normalized; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.normalize();
        }
        if other.is_zero() {
            return self.normalize();
        }
        let c = self.content_y().gcd(&other.content_y());
        let mut a = self.primitive_y();
        let mut b = other.primitive_y();
        if a.degree_y() < b.degree_y() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree_y() == Some(0) {
                a = BiPoly::one();
                break;
            }
            let r = a.prem_y(&b);
            a = b;
            b = r.primitive_y();
        }
        let g = a.primitive_y();
        g.mul_x_poly(&c).normalize()
    }

    pub fn gcd_all(polys: &[BiPoly]) -> BiPoly {
        polys.iter().fold(BiPoly::zero(), |acc, p| acc.gcd(p))
    }

    /// Exact quotient in `F[x, y]`, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let dd = d.degree_y()?;
        let lc = d.by_y.last().unwrap();
        let mut r = self.clone();
        let mut q = vec![UniPoly::zero(); r.by_y.len().saturating_sub(dd)];
        while let Some(dr) = r.degree_y() {
            if dr < dd {
                return None;
            }
            let t = r.by_y.last().unwrap().div_exact(lc)?;
            q[dr - dd] = t.clone();
            let shifted = BiPoly::from_y_coeffs(
                std::iter::repeat(UniPoly::zero())
                    .take(dr - dd)
                    .chain(d.by_y.iter().map(|p| p * &t))
                    .collect(),
            );
            r = &r - &shifted;
        }
        Some(BiPoly::from_y_coeffs(q))
    }

    /// Remove every factor of `y`.
    pub fn strip_y_factors(&self) -> BiPoly {
        let k = self.by_y.iter().take_while(|p| p.is_zero()).count();
        BiPoly::from_y_coeffs(self.by_y[k.min(self.by_y.len())..].to_vec())
    }
}

/// Determinant of a square matrix of polynomials by fraction-free (Bareiss) elimination.
pub fn poly_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut sign = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Sylvester resultant of `p` and `q` with respect to `y`, a polynomial in `x`.
pub fn resultant_y(p: &BiPoly, q: &BiPoly) -> Result<UniPoly> {
    let (Some(m), Some(n)) = (p.degree_y(), q.degree_y()) else {
        return Err(Error::DegenerateInput("resultant of a zero polynomial".into()));
    };
    if m == 0 || n == 0 {
        return Err(Error::DegenerateInput(
            "resultant needs positive y-degree in both arguments".into(),
        ));
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![UniPoly::zero(); size];
        for j in 0..=m {
            row[shift + j] = p.y_coeff(m - j);
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![UniPoly::zero(); size];
        for j in 0..=n {
            row[shift + j] = q.y_coeff(n - j);
        }
        rows.push(row);
    }
    Ok(poly_det(rows))
}

fn add_bi(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let n = a.by_y.len().max(b.by_y.len());
    BiPoly::from_y_coeffs((0..n).map(|j| &a.y_coeff(j) + &b.y_coeff(j)).collect())
}

fn sub_bi(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let n = a.by_y.len().max(b.by_y.len());
    BiPoly::from_y_coeffs((0..n).map(|j| &a.y_coeff(j) - &b.y_coeff(j)).collect())
}

fn mul_bi(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_zero() || b.is_zero() {
        return BiPoly::zero();
    }
    let mut out = vec![UniPoly::zero(); a.by_y.len() + b.by_y.len() - 1];
    for (i, p) in a.by_y.iter().enumerate() {
        for (j, q) in b.by_y.iter().enumerate() {
            out[i + j] = &out[i + j] + &(p * q);
        }
    }
    BiPoly::from_y_coeffs(out)
}

impl<'a, 'b> Add<&'b BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        add_bi(self, rhs)
    }
}

impl<'a, 'b> Sub<&'b BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        sub_bi(self, rhs)
    }
}

impl<'a, 'b> Mul<&'b BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        mul_bi(self, rhs)
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        add_bi(&self, &rhs)
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        sub_bi(&self, &rhs)
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        mul_bi(&self, &rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly::from_y_coeffs(self.by_y.iter().map(|p| -p).collect())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| {
                let mut mono = Vec::new();
                match i {
                    0 => {}
                    1 => mono.push("x".to_string()),
                    _ => mono.push(format!("x^{i}")),
                }
                match j {
                    0 => {}
                    1 => mono.push("y".to_string()),
                    _ => mono.push(format!("y^{j}")),
                }
                let cs = c.to_string();
                let cs = if c.is_real() { cs } else { format!("({cs})") };
                if mono.is_empty() {
                    cs
                } else if c.is_one() {
                    mono.join("*")
                } else {
                    format!("{cs}*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
