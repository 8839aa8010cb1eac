use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use super::base::Rational;
use super::roots::{count_in_region, isolate_complex_roots, refine_region, RootRegion};
use super::{BaseScalar, FieldMode};
use crate::poly::{Matrix, UniPoly};

/// A simple extension `F[t]/(m(t))` of the base field together with a region
/// selecting one root of `m`, i.e. an embedding into ℝ or ℂ.
#[derive(Debug)]
pub struct NumberField {
    modulus: UniPoly,
    region: RootRegion,
    mode: FieldMode,
    fine: OnceLock<RootRegion>,
}

/// Width below which a refined region is considered fine enough for rendering.
fn fine_width() -> Rational {
    Rational::new(1.into(), (1u64 << 48).into())
}

impl NumberField {
    /// `modulus` must be monic and irreducible over the base field of `mode`, and
    /// `region` must isolate exactly one of its roots.
    pub fn new(modulus: UniPoly, region: RootRegion, mode: FieldMode) -> Arc<Self> {
        debug_assert!(modulus.degree().is_some_and(|d| d >= 2));
        debug_assert_eq!(modulus.leading(), Some(&BaseScalar::one()));
        debug_assert_eq!(count_in_region(&modulus, &region), Some(1));
        Arc::new(NumberField {
            modulus,
            region,
            mode,
            fine: OnceLock::new(),
        })
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn region(&self) -> &RootRegion {
        &self.region
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// The class of `t`, i.e. the selected root itself.
    pub fn generator(self: &Arc<Self>) -> AlgebraicScalar {
        AlgebraicScalar::new(self.clone(), UniPoly::x())
    }

    /// Embed a polynomial expression `r(t)`.
    pub fn element(self: &Arc<Self>, residue: UniPoly) -> AlgebraicScalar {
        AlgebraicScalar::new(self.clone(), residue)
    }

    /// Same modulus and same selected root.
    pub fn is_same(&self, other: &NumberField) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        if self.modulus != other.modulus {
            return false;
        }
        match self.region.intersect(&other.region) {
            Some(r) => count_in_region(&self.modulus, &r).unwrap_or(0) >= 1,
            None => false,
        }
    }

    /// A region of width below `2⁻⁴⁸` around the selected root (computed once).
    pub fn fine_region(&self) -> &RootRegion {
        self.fine.get_or_init(|| {
            let target = fine_width();
            let mut r = self.region.clone();
            while r.width() >= target {
                r = refine_region(&self.modulus, &r);
            }
            r
        })
    }
}

/// An element `r(t)` of a [`NumberField`], `deg r < deg m`.
#[derive(Clone)]
pub struct AlgebraicScalar {
    field: Arc<NumberField>,
    residue: UniPoly,
}

impl fmt::Debug for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicScalar({self})")
    }
}

/// Closed complex box used for interval evaluation.
#[derive(Clone, Debug)]
struct CBox {
    re: (Rational, Rational),
    im: (Rational, Rational),
}

fn imul(a: &(Rational, Rational), b: &(Rational, Rational)) -> (Rational, Rational) {
    let ps = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    let lo = ps.iter().min().unwrap().clone();
    let hi = ps.iter().max().unwrap().clone();
    (lo, hi)
}

fn iadd(a: &(Rational, Rational), b: &(Rational, Rational)) -> (Rational, Rational) {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn ineg(a: &(Rational, Rational)) -> (Rational, Rational) {
    (-a.1.clone(), -a.0.clone())
}

impl CBox {
    fn point(z: &BaseScalar) -> Self {
        CBox {
            re: (z.re().clone(), z.re().clone()),
            im: (z.im().clone(), z.im().clone()),
        }
    }

    fn of_region(r: &RootRegion) -> Self {
        match r {
            RootRegion::Interval { lo, hi } => CBox {
                re: (lo.clone(), hi.clone()),
                im: (Rational::zero(), Rational::zero()),
            },
            RootRegion::Rect {
                re_lo,
                re_hi,
                im_lo,
                im_hi,
            } => CBox {
                re: (re_lo.clone(), re_hi.clone()),
                im: (im_lo.clone(), im_hi.clone()),
            },
        }
    }

    fn add(&self, o: &CBox) -> CBox {
        CBox {
            re: iadd(&self.re, &o.re),
            im: iadd(&self.im, &o.im),
        }
    }

    fn mul(&self, o: &CBox) -> CBox {
        CBox {
            re: iadd(&imul(&self.re, &o.re), &ineg(&imul(&self.im, &o.im))),
            im: iadd(&imul(&self.re, &o.im), &imul(&self.im, &o.re)),
        }
    }

    fn eval(p: &UniPoly, at: &CBox) -> CBox {
        let mut acc = CBox::point(&BaseScalar::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(at).add(&CBox::point(c));
        }
        acc
    }

    /// Is this box inside the closed region (strictly inside for open intervals)?
    fn inside(&self, r: &RootRegion) -> bool {
        match r {
            RootRegion::Interval { lo, hi } => {
                self.im.0.is_zero() && self.im.1.is_zero() && lo < &self.re.0 && &self.re.1 < hi
            }
            RootRegion::Rect {
                re_lo,
                re_hi,
                im_lo,
                im_hi,
            } => re_lo <= &self.re.0 && &self.re.1 <= re_hi && im_lo <= &self.im.0 && &self.im.1 <= im_hi,
        }
    }

    fn mid(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let two = Rational::from_integer(2.into());
        let re = ((&self.re.0 + &self.re.1) / &two).to_f64().unwrap_or(f64::NAN);
        let im = ((&self.im.0 + &self.im.1) / &two).to_f64().unwrap_or(f64::NAN);
        (re, im)
    }
}

impl AlgebraicScalar {
    pub fn new(field: Arc<NumberField>, residue: UniPoly) -> Self {
        let residue = residue.rem(&field.modulus);
        AlgebraicScalar { field, residue }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn residue(&self) -> &UniPoly {
        &self.residue
    }

    /// The value as a base scalar when the residue is constant.
    pub fn as_constant(&self) -> Option<BaseScalar> {
        self.residue.is_constant().then(|| self.residue.coeff(0))
    }

    fn check_field(&self, other: &AlgebraicScalar) {
        if !Arc::ptr_eq(&self.field, &other.field) && !self.field.is_same(&other.field) {
            panic!(
                "mixing elements of different extension fields ({} and {})",
                self.field.modulus, other.field.modulus
            );
        }
    }

    pub fn add(&self, other: &AlgebraicScalar) -> AlgebraicScalar {
        self.check_field(other);
        AlgebraicScalar {
            field: self.field.clone(),
            residue: &self.residue + &other.residue,
        }
    }

    pub fn add_base(&self, b: &BaseScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            field: self.field.clone(),
            residue: &self.residue + &UniPoly::constant(b.clone()),
        }
    }

    pub fn neg(&self) -> AlgebraicScalar {
        AlgebraicScalar {
            field: self.field.clone(),
            residue: -&self.residue,
        }
    }

    pub fn scale(&self, b: &BaseScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            field: self.field.clone(),
            residue: self.residue.scale(b),
        }
    }

    pub fn mul(&self, other: &AlgebraicScalar) -> AlgebraicScalar {
        self.check_field(other);
        AlgebraicScalar::new(self.field.clone(), &self.residue * &other.residue)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> AlgebraicScalar {
        assert!(!self.residue.is_zero(), "inverse of zero");
        let (g, s, _) = UniPoly::ext_gcd(&self.residue, &self.field.modulus);
        debug_assert!(g.is_constant(), "modulus must be irreducible");
        AlgebraicScalar::new(self.field.clone(), s)
    }

    /// Minimal polynomial over the base field (monic).
    pub fn minimal_polynomial(&self) -> UniPoly {
        let n = self.field.degree();
        let mut powers: Vec<UniPoly> = vec![UniPoly::one()];
        loop {
            let k = powers.len();
            let next = (&powers[k - 1] * &self.residue).rem(&self.field.modulus);
            powers.push(next);
            // columns: coordinates of a^0..a^k
            let m = Matrix::from_fn(n, k + 1, |r, c| powers[c].coeff(r));
            let ker = m.kernel();
            if let Some(v) = ker.first() {
                let lead = v[k].clone();
                if !lead.is_zero() {
                    return UniPoly::new(v.iter().map(|c| c / &lead).collect());
                }
            }
        }
    }

    fn enclosure(&self, region: &RootRegion) -> CBox {
        CBox::eval(&self.residue, &CBox::of_region(region))
    }

    /// Decimal approximation `(re, im)` accurate far beyond f64 rendering needs.
    pub fn approx(&self) -> (f64, f64) {
        self.enclosure(self.field.fine_region()).mid()
    }

    /// Index of the isolating region (among `regions` of `mu`) containing this value.
    fn locate(&self, mu: &UniPoly, regions: &[RootRegion]) -> usize {
        let mut r = self.field.region.clone();
        for _ in 0..400 {
            let e = self.enclosure(&r);
            let hits: Vec<usize> = (0..regions.len()).filter(|&j| e.inside(&regions[j])).collect();
            if hits.len() == 1 {
                return hits[0];
            }
            r = refine_region(&self.field.modulus, &r);
        }
        panic!("failed to locate a root of {mu}")
    }
}

impl PartialEq for AlgebraicScalar {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.is_same(&other.field) {
            return self.residue == other.residue;
        }
        let mu = self.minimal_polynomial();
        if mu != other.minimal_polynomial() {
            return false;
        }
        if mu.degree() == Some(1) {
            return true;
        }
        let regions = isolate_complex_roots(&mu);
        self.locate(&mu, &regions) == other.locate(&mu, &regions)
    }
}

fn render_f64(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re:.12}")
    } else if im < 0.0 {
        format!("{re:.12}-{:.12}i", -im)
    } else {
        format!("{re:.12}+{im:.12}i")
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tre, tim) = self.field.generator().approx();
        let residue = self.residue.to_string().replace('x', "t");
        write!(
            f,
            "{residue} where t is the root of {} near {}",
            self.field.modulus.to_string().replace('x', "t"),
            render_f64(tre, tim)
        )
    }
}

/// Decimal rendering of an approximate complex value.
pub fn render_approx(re: f64, im: f64) -> String {
    render_f64(re, im)
}

impl AlgebraicScalar {
    /// Convenience: `true` when the value is real (its region is a real interval
    /// or the imaginary part of its enclosure collapses to zero).
    pub fn is_real_mode(&self) -> bool {
        matches!(self.field.region, RootRegion::Interval { .. })
    }

    pub fn one_in(field: &Arc<NumberField>) -> Self {
        AlgebraicScalar::new(field.clone(), UniPoly::constant(BaseScalar::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::roots::isolate_real_roots;
    use crate::scalar::{Field, Scalar};

    fn sqrt2_fields() -> (Arc<NumberField>, Arc<NumberField>) {
        let m = UniPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_real_roots(&m);
        let neg = NumberField::new(
            m.clone(),
            RootRegion::Interval {
                lo: roots[0].0.clone(),
                hi: roots[0].1.clone(),
            },
            FieldMode::RealRational,
        );
        let pos = NumberField::new(
            m,
            RootRegion::Interval {
                lo: roots[1].0.clone(),
                hi: roots[1].1.clone(),
            },
            FieldMode::RealRational,
        );
        (neg, pos)
    }

    #[test]
    fn arithmetic_modulo_minimal_polynomial() {
        let (_, pos) = sqrt2_fields();
        let t = Scalar::Algebraic(pos.generator());
        assert_eq!(t.clone() * t.clone(), Scalar::from_int(2));
        let inv = t.inv().unwrap();
        assert_eq!(t.clone() * inv, Scalar::from_int(1));
        let a = t.clone() + Scalar::from_int(1);
        assert!(!a.is_base());
        assert!((a.approx().0 - 2.41421356237).abs() < 1e-9);
    }

    #[test]
    fn equality_across_embeddings() {
        let (neg, pos) = sqrt2_fields();
        let a = pos.generator();
        let b = neg.generator();
        assert_ne!(a, b);
        assert_eq!(a, b.neg());
        // √2 expressed in the field ℚ(√2 + 1): t = √2 + 1 has minimal polynomial t² − 2t − 1
        let m = UniPoly::from_ints(&[-1, -2, 1]);
        let roots = isolate_real_roots(&m);
        let (lo, hi) = roots[1].clone();
        let other = NumberField::new(m, RootRegion::Interval { lo, hi }, FieldMode::RealRational);
        let c = other.element(UniPoly::from_ints(&[-1, 1]));
        assert_eq!(c, a);
        assert_ne!(c, b);
    }

    #[test]
    fn minimal_polynomial_of_sum() {
        let (_, pos) = sqrt2_fields();
        let a = pos.element(UniPoly::from_ints(&[3, 1])); // 3 + √2
        assert_eq!(a.minimal_polynomial(), UniPoly::from_ints(&[7, -6, 1]));
    }
}
