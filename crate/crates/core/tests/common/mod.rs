//! Shared fixtures for the integration tests: a seeded corpus of random
//! structure tensors and a brute-force rational grid oracle.

#![allow(dead_code)]

use ideals3::families::{FamilySpec, Section7Params};
use ideals3::subspace::{Ideal, Line};
use ideals3::twodim::TwoDimEnumeration;
use ideals3::{
    is_ideal_line, is_ideal_plane, BaseScalar, Field, FieldMode, OneDimEnumeration, PlaneDescriptor,
    Scalar, StructureTensor, Vector3,
};
use ideals3::scalar::ScalarSolutions;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x1dea_15_3d;

/// One corpus member with the knobs it was drawn with.
#[derive(Clone, Debug)]
pub struct Sample {
    pub index: usize,
    pub tensor: StructureTensor,
    pub forced_commutative: bool,
    pub density: f64,
}

/// Entries in `{-bound, …, bound}`; each slot is nonzero with probability `density`.
pub fn random_tensor(
    rng: &mut impl Rng,
    bound: i64,
    density: f64,
    commutative: bool,
    mode: FieldMode,
) -> StructureTensor {
    let mut w = [[[0i64; 3]; 3]; 3];
    for (i, plane) in w.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            if commutative && j < i {
                continue;
            }
            for slot in row.iter_mut() {
                if rng.gen_bool(density) {
                    *slot = loop {
                        let v = rng.gen_range(-bound..=bound);
                        if v != 0 {
                            break v;
                        }
                    };
                }
            }
        }
    }
    if commutative {
        for i in 0..3 {
            for j in 0..i {
                w[i][j] = w[j][i];
            }
        }
    }
    StructureTensor::from_fn(mode, |i, j, k| BaseScalar::from_int(w[i][j][k]))
}

/// `size` tensors: even indices are commutative, field modes alternate in pairs,
/// and the density cycles through sparse to dense.
pub fn corpus(size: usize) -> Vec<Sample> {
    const DENSITIES: [f64; 5] = [0.08, 0.15, 0.3, 0.6, 1.0];
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    (0..size)
        .map(|index| {
            let forced_commutative = index % 2 == 0;
            let mode = if (index / 2) % 2 == 0 {
                FieldMode::RealRational
            } else {
                FieldMode::ComplexGaussian
            };
            let density = DENSITIES[(index / 4) % DENSITIES.len()];
            Sample {
                index,
                tensor: random_tensor(&mut rng, 2, density, forced_commutative, mode),
                forced_commutative,
                density,
            }
        })
        .collect()
}

/// Distinct rationals `p/q` with `|p| ≤ bound`, `1 ≤ q ≤ bound`.
pub fn grid_values(bound: i64) -> Vec<Scalar> {
    let mut out: Vec<BaseScalar> = Vec::new();
    for q in 1..=bound {
        for p in -bound..=bound {
            let v = BaseScalar::from_ratio(p, q);
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out.into_iter().map(Scalar::Base).collect()
}

/// Grid representatives of lines in the three projective charts.
pub fn grid_lines(bound: i64) -> Vec<Line> {
    let vals = grid_values(bound);
    let one = Scalar::from_int(1);
    let zero = Scalar::from_int(0);
    let mut out = Vec::new();
    for s in &vals {
        for t in &vals {
            out.push(Line::new(&Vector3::new(one.clone(), s.clone(), t.clone())).unwrap());
        }
    }
    for t in &vals {
        out.push(Line::new(&Vector3::new(zero.clone(), one.clone(), t.clone())).unwrap());
    }
    out.push(Line::new(&Vector3::e(2)).unwrap());
    out
}

/// Grid planes of all four types.
pub fn grid_planes(bound: i64) -> Vec<PlaneDescriptor> {
    let vals = grid_values(bound);
    let mut out = vec![PlaneDescriptor::TypeI];
    out.extend(vals.iter().map(|x| PlaneDescriptor::TypeII { x: x.clone() }));
    out.extend(vals.iter().map(|x| PlaneDescriptor::TypeIII { x: x.clone() }));
    for x in &vals {
        for y in vals.iter().filter(|y| !y.is_zero()) {
            out.push(PlaneDescriptor::TypeIV {
                x: x.clone(),
                y: y.clone(),
            });
        }
    }
    out
}

fn scalar_set_contains(s: &ScalarSolutions, x: &Scalar) -> bool {
    match s {
        ScalarSolutions::AllScalars => true,
        ScalarSolutions::Empty => false,
        ScalarSolutions::Finite(xs) => xs.contains(x),
    }
}

/// Whether the enumeration accounts for `plane`, either explicitly or through a family.
pub fn twodim_contains(e: &TwoDimEnumeration, plane: &PlaneDescriptor) -> bool {
    match plane {
        PlaneDescriptor::TypeI => e.type_i,
        PlaneDescriptor::TypeII { x } => scalar_set_contains(&e.type_ii.solutions, x),
        PlaneDescriptor::TypeIII { x } => scalar_set_contains(&e.type_iii.solutions, x),
        PlaneDescriptor::TypeIV { x, y } => e.type_iv.solutions.contains(x, y),
    }
}

/// Grid ideals the solver output does not account for.
pub fn grid_misses(
    t: &StructureTensor,
    one: &OneDimEnumeration,
    two: &TwoDimEnumeration,
    lines: &[Line],
    planes: &[PlaneDescriptor],
) -> Vec<Ideal> {
    let mut misses = Vec::new();
    for l in lines {
        if is_ideal_line(t, l) && !one.contains(l) {
            misses.push(Ideal::Line(l.clone()));
        }
    }
    for p in planes {
        if is_ideal_plane(t, p) && !twodim_contains(two, p) {
            misses.push(Ideal::Plane(p.clone()));
        }
    }
    misses
}

pub fn random_section7(rng: &mut impl Rng, bound: i64) -> FamilySpec {
    let v: [i64; 8] = std::array::from_fn(|_| rng.gen_range(-bound..=bound));
    FamilySpec::Section7(Section7Params::from_ints(v))
}

/// Dime1 draws; every third one has `ω = ω̃ = 0` and `e₃² ∈ span{e₁, e₂} \ {0}`.
pub fn random_dime1(rng: &mut impl Rng, n: usize, bound: i64) -> FamilySpec {
    let b = |v: i64| BaseScalar::from_int(v);
    let mut draw = || rng.gen_range(-bound..=bound);
    if n % 3 == 0 {
        let (s1, s2) = loop {
            let s = (draw(), draw());
            if s != (0, 0) {
                break s;
            }
        };
        FamilySpec::Dime1 {
            omega: b(0),
            omega_tilde: b(0),
            e3_square: [b(s1), b(s2), b(0)],
        }
    } else {
        FamilySpec::Dime1 {
            omega: b(draw()),
            omega_tilde: b(draw()),
            e3_square: [b(draw()), b(draw()), b(draw())],
        }
    }
}

pub fn random_vector(rng: &mut impl Rng, bound: i64) -> Vector3 {
    Vector3::from_ints(std::array::from_fn(|_| rng.gen_range(-bound..=bound)))
}
