//! Deterministic pseudo-random inputs for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::Blade;
use crate::poly::{CliffordPolynomial, Monomial, ScalarPoly};
use crate::scalar::{int, Scalar};

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 3`; may be zero.
pub fn random_rational<S: Scalar>(rng: &mut SeededRng) -> S {
    let num = rng.gen_range(-5i64..=5);
    let den = rng.gen_range(1i64..=3);
    int::<S>(num) / int::<S>(den)
}

pub fn random_nonzero_rational<S: Scalar>(rng: &mut SeededRng) -> S {
    loop {
        let r = random_rational::<S>(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A monomial of total degree `degree` in the variables `first..nvars`.
pub fn random_monomial(rng: &mut SeededRng, nvars: usize, first: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u16; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(first..nvars)] += 1;
    }
    Monomial::new(&exps)
}

/// Shape of a random Clifford polynomial.
#[derive(Clone, Copy, Debug)]
pub struct PolyShape {
    pub dim: usize,
    pub max_degree: u32,
    pub terms: usize,
    /// Allow `x_0` to appear.
    pub with_x0: bool,
    /// All terms of degree exactly `max_degree`.
    pub homogeneous: bool,
}

impl PolyShape {
    pub fn new(dim: usize, max_degree: u32) -> Self {
        PolyShape {
            dim,
            max_degree,
            terms: 6,
            with_x0: true,
            homogeneous: false,
        }
    }

    pub fn spatial(self) -> Self {
        PolyShape { with_x0: false, ..self }
    }

    pub fn homogeneous(self) -> Self {
        PolyShape {
            homogeneous: true,
            ..self
        }
    }

    pub fn terms(self, terms: usize) -> Self {
        PolyShape { terms, ..self }
    }
}

pub fn random_polynomial<S: Scalar>(rng: &mut SeededRng, shape: PolyShape) -> CliffordPolynomial<S> {
    let nvars = shape.dim + 1;
    let first = usize::from(!shape.with_x0);
    let mut out = CliffordPolynomial::zero(shape.dim);
    for _ in 0..shape.terms {
        let degree = if shape.homogeneous {
            shape.max_degree
        } else {
            rng.gen_range(0..=shape.max_degree)
        };
        let mono = random_monomial(rng, nvars, first, degree);
        let blade = Blade::from_bits(rng.gen_range(0..(1u32 << shape.dim)));
        let coeff = random_nonzero_rational::<S>(rng);
        out = &out + &CliffordPolynomial::from_scalar_poly(shape.dim, blade, ScalarPoly::monomial(mono, coeff));
    }
    out
}
