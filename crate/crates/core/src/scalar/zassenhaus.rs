//! Factorization of squarefree integer polynomials.
//!
//! Classic Zassenhaus: factor modulo a small prime (distinct-degree, then
//! Cantor–Zassenhaus equal-degree splitting), Hensel-lift the modular factors to a
//! modulus exceeding twice the Mignotte bound, and recombine subsets of lifted
//! factors by trial division over ℤ.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Integer polynomial, lowest degree first, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn deg(p: &ZPoly) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn content(p: &ZPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divide out the content and make the leading coefficient positive.
pub(crate) fn primitive(p: &ZPoly) -> ZPoly {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let c = c * sign;
    p.iter().map(|x| x / &c).collect()
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact division over ℤ, `None` if `g` does not divide `f`.
fn zdiv_exact(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let dg = deg(g);
    let lg = g.last()?;
    let mut r = f.clone();
    if r.len() < g.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut q = vec![BigInt::zero(); r.len() - dg];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dg].div_rem(lg);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, gc) in g.iter().enumerate() {
            r[k + j] -= &c * gc;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

// ---------------------------------------------------------------------------
// arithmetic in F_p[x], coefficients as u64 < p < 2^31

type FpPoly = Vec<u64>;

fn fp_trim(p: &mut FpPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn fp_from_z(f: &ZPoly, p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    let mut out: FpPoly = f
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    fp_trim(&mut out);
    out
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn fp_sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    fp_trim(&mut out);
    out
}

fn fp_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_divrem(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let db = b.len() - 1;
    let inv = fp_inv(*b.last().unwrap(), p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * bc % p) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    fp_trim(&mut r);
    fp_trim(&mut q);
    (q, r)
}

fn fp_rem(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    fp_divrem(a, b, p).1
}

fn fp_monic(a: &FpPoly, p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = fp_inv(l, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// `(s, t)` with `s·a + t·b ≡ 1`, assuming `gcd(a, b) = 1`.
fn fp_ext_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    let inv = fp_inv(r0[0], p);
    let scale = |v: &FpPoly| -> FpPoly {
        let mut out: FpPoly = v.iter().map(|&c| c * inv % p).collect();
        fp_trim(&mut out);
        out
    };
    (scale(&s0), scale(&t0))
}

fn fp_powmod(base: &FpPoly, e: &BigUint, m: &FpPoly, p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    let b = fp_rem(base, m, p);
    for bit in (0..e.bits()).rev() {
        acc = fp_rem(&fp_mul(&acc, &acc, p), m, p);
        if e.bit(bit) {
            acc = fp_rem(&fp_mul(&acc, &b, p), m, p);
        }
    }
    acc
}

fn fp_derivative(a: &FpPoly, p: u64) -> FpPoly {
    let mut out: FpPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * (i as u64 % p) % p)
        .collect();
    fp_trim(&mut out);
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn ddf(f: &FpPoly, p: u64) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: FpPoly = vec![0, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 1;
    while f.len() - 1 >= 2 * d {
        h = fp_powmod(&h, &pe, &f, p);
        let g = fp_gcd(&f, &fp_sub(&h, &x, p), p);
        if g.len() > 1 {
            f = fp_divrem(&f, &g, p).0;
            h = fp_rem(&h, &f, p);
            out.push((g, d));
        }
        d += 1;
    }
    if f.len() > 1 {
        let dd = f.len() - 1;
        out.push((f, dd));
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus), `p` odd.
fn edf(g: &FpPoly, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = g.len() - 1;
    if n == d {
        return vec![g.clone()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let mut a: FpPoly = (0..n).map(|_| rng.gen_range(0..p)).collect();
        fp_trim(&mut a);
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &exp, g, p), &vec![1], p);
        let h = fp_gcd(g, &b, p);
        if h.len() > 1 && h.len() < g.len() {
            let rest = fp_monic(&fp_divrem(g, &h, p).0, p);
            let mut out = edf(&h, d, p, rng);
            out.extend(edf(&rest, d, p, rng));
            return out;
        }
    }
}

fn factor_mod_p(f: &FpPoly, p: u64, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let mut out = Vec::new();
    for (g, d) in ddf(f, p) {
        out.extend(edf(&g, d, p, rng));
    }
    out
}

// ---------------------------------------------------------------------------
// Hensel lifting modulo p^k

fn zmod(f: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = f.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

fn z_from_fp(f: &FpPoly) -> ZPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift `f ≡ g0·h0 (mod p)` (all monic) to `f ≡ g·h (mod p^k)` with `g, h` monic.
fn hensel_two(f: &ZPoly, g0: &FpPoly, h0: &FpPoly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (s, t) = fp_ext_gcd(g0, h0, p);
    let pb = BigInt::from(p);
    let mut g = z_from_fp(g0);
    let mut h = z_from_fp(h0);
    let mut m = pb.clone();
    for _ in 1..k {
        let next = &m * &pb;
        let diff = zmod(&{
            let gh = zmul(&g, &h);
            let n = f.len().max(gh.len());
            let mut d: ZPoly = (0..n)
                .map(|i| {
                    f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default()
                })
                .collect();
            trim(&mut d);
            d
        }, &next);
        let e: ZPoly = diff.iter().map(|c| c / &m).collect();
        let e = fp_from_z(&e, p);
        let a = fp_rem(&fp_mul(&t, &e, p), g0, p);
        let b = fp_rem(&fp_mul(&s, &e, p), h0, p);
        let add = |base: &ZPoly, corr: &FpPoly| -> ZPoly {
            let n = base.len().max(corr.len());
            let mut out: ZPoly = (0..n)
                .map(|i| {
                    base.get(i).cloned().unwrap_or_default()
                        + &m * BigInt::from(corr.get(i).copied().unwrap_or(0))
                })
                .collect();
            trim(&mut out);
            out
        };
        g = add(&g, &a);
        h = add(&h, &b);
        m = next;
    }
    (zmod(&g, &m), zmod(&h, &m))
}

fn hensel_multi(f: &ZPoly, factors: &[FpPoly], p: u64, k: u32) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[FpPoly]| fs.iter().fold(vec![1u64], |acc, x| fp_mul(&acc, x, p));
    let (g, h) = hensel_two(f, &prod(left), &prod(right), p, k);
    let mut out = hensel_multi(&g, left, p, k);
    out.extend(hensel_multi(&h, right, p, k));
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors over ℤ of a primitive squarefree polynomial with positive
/// leading coefficient. Factors are primitive with positive leading coefficients.
pub(crate) fn factor_squarefree(f: &ZPoly) -> Vec<ZPoly> {
    let n = deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    if f[0].is_zero() {
        // x divides f exactly once
        let rest: ZPoly = f[1..].to_vec();
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let lc = f.last().unwrap().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1de_a15);

    // pick the good prime with the fewest modular factors among the first few
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    let mut cand = 3u64;
    while tried < 5 {
        if is_prime(cand) && !(&lc % BigInt::from(cand)).is_zero() {
            let fp = fp_from_z(f, cand);
            if fp.len() == f.len() && fp_gcd(&fp, &fp_derivative(&fp, cand), cand).len() == 1 {
                let factors = factor_mod_p(&fp_monic(&fp, cand), cand, &mut rng);
                tried += 1;
                if best.as_ref().map_or(true, |(_, b)| factors.len() < b.len()) {
                    best = Some((cand, factors));
                }
            }
        }
        cand += 2;
    }
    let (p, modular) = best.unwrap();
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = lc.abs() * (BigInt::one() << n) * norm1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= &bound * 2 {
        pk *= &pb;
        k += 1;
    }
    let lc_inv = lc.modinv(&pk).expect("lc invertible mod p^k");
    let monic_f = zmod(&f.iter().map(|c| c * &lc_inv).collect(), &pk);
    let mut lifted = hensel_multi(&monic_f, &modular, p, k);

    let mut result = Vec::new();
    let mut cur = f.clone();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), s) {
            let lc_cur = cur.last().unwrap().clone();
            let mut g: ZPoly = vec![lc_cur];
            for &i in &subset {
                g = zmod(&zmul(&g, &lifted[i]), &pk);
            }
            let mut g: ZPoly = g.iter().map(|c| symmetric(c, &pk)).collect();
            trim(&mut g);
            let g = primitive(&g);
            if let Some(q) = zdiv_exact(&cur, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                result.push(g);
                cur = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if deg(&cur) > 0 {
        result.push(primitive(&cur));
    }
    result
}
