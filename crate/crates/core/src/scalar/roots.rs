//! Exact root isolation.
//!
//! Real roots are isolated with Sturm sequences and bisection on dyadic intervals.
//! Complex roots are isolated by recursive subdivision of axis-parallel boxes, the
//! number of roots inside a box being computed exactly from the argument principle:
//! along each edge `f = P(s) + i·Q(s)` and the winding number is half the sum of
//! the Cauchy indices of `P/Q`, which a Sturm chain evaluates exactly.

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::base::Rational;
use super::BaseScalar;
use crate::poly::UniPoly;

/// Region that isolates one root of a polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum RootRegion {
    /// Open real interval `(lo, hi)`; neither endpoint is a root.
    Interval { lo: Rational, hi: Rational },
    /// Closed box `[re_lo, re_hi] × [im_lo, im_hi]` with no root on its boundary.
    Rect {
        re_lo: Rational,
        re_hi: Rational,
        im_lo: Rational,
        im_hi: Rational,
    },
}

impl RootRegion {
    /// Largest side length.
    pub fn width(&self) -> Rational {
        match self {
            RootRegion::Interval { lo, hi } => hi - lo,
            RootRegion::Rect {
                re_lo,
                re_hi,
                im_lo,
                im_hi,
            } => {
                let a = re_hi - re_lo;
                let b = im_hi - im_lo;
                if a > b {
                    a
                } else {
                    b
                }
            }
        }
    }

    /// Midpoint of the region as an exact base scalar.
    pub fn midpoint(&self) -> BaseScalar {
        let two = Rational::from_integer(2.into());
        match self {
            RootRegion::Interval { lo, hi } => BaseScalar::real((lo + hi) / &two),
            RootRegion::Rect {
                re_lo,
                re_hi,
                im_lo,
                im_hi,
            } => BaseScalar::new((re_lo + re_hi) / &two, (im_lo + im_hi) / &two),
        }
    }

    /// Decimal rendering of the bounds: `[(re_lo, re_hi), (im_lo, im_hi)]`.
    pub fn approx_bounds(&self) -> [(f64, f64); 2] {
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        match self {
            RootRegion::Interval { lo, hi } => [(f(lo), f(hi)), (0.0, 0.0)],
            RootRegion::Rect {
                re_lo,
                re_hi,
                im_lo,
                im_hi,
            } => [(f(re_lo), f(re_hi)), (f(im_lo), f(im_hi))],
        }
    }

    /// Intersection of two regions of the same shape, if nonempty.
    pub fn intersect(&self, other: &RootRegion) -> Option<RootRegion> {
        let max = |a: &Rational, b: &Rational| if a > b { a.clone() } else { b.clone() };
        let min = |a: &Rational, b: &Rational| if a < b { a.clone() } else { b.clone() };
        match (self, other) {
            (RootRegion::Interval { lo: a, hi: b }, RootRegion::Interval { lo: c, hi: d }) => {
                let lo = max(a, c);
                let hi = min(b, d);
                (lo < hi).then_some(RootRegion::Interval { lo, hi })
            }
            (
                RootRegion::Rect {
                    re_lo: a0,
                    re_hi: a1,
                    im_lo: b0,
                    im_hi: b1,
                },
                RootRegion::Rect {
                    re_lo: c0,
                    re_hi: c1,
                    im_lo: d0,
                    im_hi: d1,
                },
            ) => {
                let re_lo = max(a0, c0);
                let re_hi = min(a1, c1);
                let im_lo = max(b0, d0);
                let im_hi = min(b1, d1);
                (re_lo < re_hi && im_lo < im_hi).then_some(RootRegion::Rect {
                    re_lo,
                    re_hi,
                    im_lo,
                    im_hi,
                })
            }
            _ => None,
        }
    }

    /// Does the closed region contain the given point?
    pub fn contains(&self, z: &BaseScalar) -> bool {
        match self {
            RootRegion::Interval { lo, hi } => z.is_real() && lo < z.re() && z.re() < hi,
            RootRegion::Rect {
                re_lo,
                re_hi,
                im_lo,
                im_hi,
            } => re_lo <= z.re() && z.re() <= re_hi && im_lo <= z.im() && z.im() <= im_hi,
        }
    }
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn eval_real(p: &UniPoly, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc * x + c.re();
    }
    acc
}

fn sign(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Generalized Sturm chain `f0, f1, −rem(f0, f1), …` over real coefficients.
fn sturm_chain_from(f0: UniPoly, f1: UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![f0, f1];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

fn sign_variations(chain: &[UniPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = sign(&eval_real(p, x));
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Sturm chain of a real polynomial.
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    sturm_chain_from(p.clone(), p.derivative())
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn count_real_roots(p: &UniPoly, lo: &Rational, hi: &Rational) -> usize {
    let chain = sturm_chain(p);
    sign_variations(&chain, lo).saturating_sub(sign_variations(&chain, hi))
}

/// A power of two strictly greater than the modulus of every root.
pub fn root_bound(p: &UniPoly) -> Rational {
    let n = p.degree().expect("nonzero polynomial");
    let lead = p.leading().unwrap();
    let mut m = Rational::zero();
    for c in &p.coeffs()[..n] {
        let q = c / lead;
        let size = q.re().abs() + q.im().abs();
        if size > m {
            m = size;
        }
    }
    let bound = m + Rational::one();
    let mut b = Rational::one();
    while b <= bound {
        b *= rat(2);
    }
    b
}

/// A point in `(lo, hi)` near the middle that is not a root of `p`.
fn split_point(p: &UniPoly, lo: &Rational, hi: &Rational) -> Rational {
    let w = hi - lo;
    for (num, den) in [(1, 2), (7, 16), (9, 16), (3, 8), (5, 8), (13, 32), (19, 32)] {
        let m = lo + &w * Rational::new(num.into(), den.into());
        if !eval_real(p, &m).is_zero() {
            return m;
        }
    }
    let mut k = 33i64;
    loop {
        let m = lo + &w * Rational::new(k.into(), 64.into());
        if !eval_real(p, &m).is_zero() {
            return m;
        }
        k += 1;
    }
}

/// Isolate the real roots of a squarefree real polynomial as open intervals
/// with non-root endpoints, sorted left to right.
pub fn isolate_real_roots(p: &UniPoly) -> Vec<(Rational, Rational)> {
    debug_assert!(p.is_real());
    if p.is_constant() {
        return Vec::new();
    }
    let chain = sturm_chain(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sign_variations(&chain, &lo) - sign_variations(&chain, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Halve an isolating interval of a squarefree real polynomial.
pub fn refine_interval(p: &UniPoly, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mid = split_point(p, lo, hi);
    let s_lo = sign(&eval_real(p, lo));
    let s_mid = sign(&eval_real(p, &mid));
    if s_lo != s_mid {
        (lo.clone(), mid)
    } else {
        (mid, hi.clone())
    }
}

/// The restriction of `p` to the segment `a + s·(b − a)`, `s ∈ [0, 1]`, split
/// into real and imaginary parts.
fn edge_parts(p: &UniPoly, a: &BaseScalar, b: &BaseScalar) -> (UniPoly, UniPoly) {
    let param = UniPoly::new(vec![a.clone(), b - a]);
    p.compose(&param).split_re_im()
}

fn has_root_in_unit_interval(g: &UniPoly) -> bool {
    if g.is_constant() {
        return false;
    }
    let zero = Rational::zero();
    let one = Rational::one();
    if eval_real(g, &zero).is_zero() || eval_real(g, &one).is_zero() {
        return true;
    }
    count_real_roots(&g.squarefree_part(), &zero, &one) > 0
}

/// Exact number of roots of `p` inside the closed box, or `None` if a root lies
/// on the boundary.
pub fn count_roots_in_rect(
    p: &UniPoly,
    re_lo: &Rational,
    re_hi: &Rational,
    im_lo: &Rational,
    im_hi: &Rational,
) -> Option<usize> {
    let corners = [
        BaseScalar::new(re_lo.clone(), im_lo.clone()),
        BaseScalar::new(re_hi.clone(), im_lo.clone()),
        BaseScalar::new(re_hi.clone(), im_hi.clone()),
        BaseScalar::new(re_lo.clone(), im_hi.clone()),
    ];
    let values: Vec<BaseScalar> = corners.iter().map(|z| p.eval(z)).collect();
    if values.iter().any(|v| v.is_zero()) {
        return None;
    }
    // rotate so the imaginary part vanishes at no corner
    let rot = std::iter::once(BaseScalar::i())
        .chain((0..).map(|k| BaseScalar::gaussian(1, k)))
        .find(|c| values.iter().all(|v| !(v * c).im().is_zero()))
        .expect("some rotation avoids every corner value");
    let q = p.scale(&rot);
    let mut twice = 0i64;
    for e in 0..4 {
        let (re_part, im_part) = edge_parts(&q, &corners[e], &corners[(e + 1) % 4]);
        if has_root_in_unit_interval(&re_part.gcd(&im_part)) {
            return None;
        }
        let chain = sturm_chain_from(im_part, re_part);
        twice += sign_variations(&chain, &Rational::zero()) as i64
            - sign_variations(&chain, &Rational::one()) as i64;
    }
    debug_assert!(twice >= 0 && twice % 2 == 0, "winding count {twice}");
    Some((twice / 2) as usize)
}

type Rect = (Rational, Rational, Rational, Rational);

/// Quadrisect a box at split lines chosen so that no root lies on any new edge.
fn quadrisect(p: &UniPoly, r: &Rect) -> Vec<(Rect, usize)> {
    let (a, b, c, d) = r;
    let fractions = [(1, 2), (7, 16), (9, 16), (3, 8), (5, 8), (13, 32), (19, 32), (29, 64)];
    for (n1, d1) in fractions {
        let mx = a + (b - a) * Rational::new(n1.into(), d1.into());
        for (n2, d2) in fractions {
            let my = c + (d - c) * Rational::new(n2.into(), d2.into());
            let boxes = [
                (a.clone(), mx.clone(), c.clone(), my.clone()),
                (mx.clone(), b.clone(), c.clone(), my.clone()),
                (a.clone(), mx.clone(), my.clone(), d.clone()),
                (mx.clone(), b.clone(), my.clone(), d.clone()),
            ];
            let counts: Option<Vec<usize>> = boxes
                .iter()
                .map(|(w, x, y, z)| count_roots_in_rect(p, w, x, y, z))
                .collect();
            if let Some(counts) = counts {
                return boxes.into_iter().zip(counts).collect();
            }
        }
    }
    panic!("no admissible subdivision found")
}

/// Isolate all complex roots of a squarefree polynomial with Gaussian coefficients.
pub fn isolate_complex_roots(p: &UniPoly) -> Vec<RootRegion> {
    if p.is_constant() {
        return Vec::new();
    }
    let b = root_bound(p) * rat(2);
    let start = (-b.clone(), b.clone(), -b.clone(), b);
    let total = count_roots_in_rect(p, &start.0, &start.1, &start.2, &start.3)
        .expect("no roots on the bounding box");
    debug_assert_eq!(total, p.degree().unwrap());
    let mut out = Vec::new();
    let mut stack = vec![(start, total)];
    while let Some((r, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(RootRegion::Rect {
                re_lo: r.0,
                re_hi: r.1,
                im_lo: r.2,
                im_hi: r.3,
            }),
            _ => {
                let parts = quadrisect(p, &r);
                debug_assert_eq!(parts.iter().map(|x| x.1).sum::<usize>(), n);
                stack.extend(parts);
            }
        }
    }
    out.sort_by(|x, y| {
        let (mx, my) = (x.midpoint(), y.midpoint());
        mx.re().cmp(my.re()).then(mx.im().cmp(my.im()))
    });
    out
}

/// Shrink an isolating region of a squarefree polynomial (halves its width).
pub fn refine_region(p: &UniPoly, region: &RootRegion) -> RootRegion {
    match region {
        RootRegion::Interval { lo, hi } => {
            let (lo, hi) = refine_interval(p, lo, hi);
            RootRegion::Interval { lo, hi }
        }
        RootRegion::Rect {
            re_lo,
            re_hi,
            im_lo,
            im_hi,
        } => {
            let r = (re_lo.clone(), re_hi.clone(), im_lo.clone(), im_hi.clone());
            let (r, _) = quadrisect(p, &r)
                .into_iter()
                .find(|(_, n)| *n == 1)
                .expect("isolating box keeps its root");
            RootRegion::Rect {
                re_lo: r.0,
                re_hi: r.1,
                im_lo: r.2,
                im_hi: r.3,
            }
        }
    }
}

/// Number of roots of `p` (squarefree) inside a region; boundaries must be root-free.
pub fn count_in_region(p: &UniPoly, region: &RootRegion) -> Option<usize> {
    match region {
        RootRegion::Interval { lo, hi } => {
            if eval_real(p, lo).is_zero() || eval_real(p, hi).is_zero() {
                return None;
            }
            Some(count_real_roots(p, lo, hi))
        }
        RootRegion::Rect {
            re_lo,
            re_hi,
            im_lo,
            im_hi,
        } => count_roots_in_rect(p, re_lo, re_hi, im_lo, im_hi),
    }
}
