//! Generalized Fueter constructions and their executable checks.

mod space;

pub use space::{
    ck_extend, dirac_matrix, fischer_decompose, fischer_decompose_with, fischer_generators, fischer_rank,
    homogeneous_degree, monogenic_bases, monogenic_basis, monomials_of_degree, CoefficientSpace, FischerDecomposition,
    MonogenicBasis,
};

use crate::axial::{
    axial_mul, d_coeff, d_lower, d_upper, delta_z_pow, laplacian_power_closed_form, polyanalytic_order_check,
    seed_to_axial, vekua_check, AxialPair, ComplexSeed,
};
use crate::dunkl::{Ambient, DunklContext};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::poly::{CliffordPolynomial, ScalarPoly};
use crate::random::{random_nonzero_rational, SeededRng};
use crate::report::VerificationReport;
use crate::scalar::{as_nonneg_integer, binomial, int, Scalar};

type Poly<S> = CliffordPolynomial<S>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonogenicOperator {
    /// `D̲`
    Dirac,
    /// `D = ∂_0 + D̲`
    CauchyRiemann,
}

/// `(op(p) == 0, op(p))`.
pub fn is_dunkl_monogenic<S: Scalar>(
    ctx: &DunklContext<S>,
    p: &Poly<S>,
    op: MonogenicOperator,
) -> Result<(bool, Poly<S>)> {
    let r = match op {
        MonogenicOperator::Dirac => ctx.dunkl_dirac(p)?,
        MonogenicOperator::CauchyRiemann => ctx.cauchy_riemann(p)?,
    };
    Ok((r.is_zero(), r))
}

/// A random rational combination of basis elements with nonzero weights.
pub fn random_monogenic<S: Scalar>(basis: &MonogenicBasis<S>, rng: &mut SeededRng) -> Poly<S> {
    let coeffs: Vec<S> = basis.elements.iter().map(|_| random_nonzero_rational(rng)).collect();
    basis.combination(&coeffs)
}

/// Substitutes `t → x_0`, `q → |x̲|^2`.
pub fn axial_to_polynomial<S: Scalar>(p: &ScalarPoly<S>, dim: usize) -> ScalarPoly<S> {
    let x0 = ScalarPoly::var(dim + 1, 0);
    let q = Poly::<S>::radial_square(dim);
    let mut out = ScalarPoly::zero(dim + 1);
    let mut q_pows = vec![ScalarPoly::one(dim + 1)];
    for (m, c) in p.terms() {
        let (i, j) = (m.exponent(0) as usize, m.exponent(1) as usize);
        while q_pows.len() <= j {
            let next = q_pows.last().expect("nonempty").mul(&q);
            q_pows.push(next);
        }
        out = out.add(&x0.pow(i as u32).mul(&q_pows[j]).scale(c));
    }
    out
}

/// `(a(x_0, |x̲|^2) + x̲ b(x_0, |x̲|^2)) · P`.
pub fn embed_axial<S: Scalar>(x: &AxialPair<S>, p: &Poly<S>) -> Poly<S> {
    let dim = p.dim();
    let a = axial_to_polynomial(&x.a, dim);
    let b = axial_to_polynomial(&x.b, dim);
    let vb = Poly::vector_variable(dim).scale_poly(&b);
    &p.scale_poly(&a) + &(&vb * p)
}

fn mu_int<S: Scalar>(ctx: &DunklContext<S>) -> Result<u32> {
    let mu = ctx.mu();
    let half = (mu.clone() - S::one()) / int::<S>(2);
    as_nonneg_integer(&half).ok_or(Error::ParityViolation { mu: mu.to_string() })
}

/// `m + n + (μ−1)/2`; `ParityViolation` unless `μ` is an odd integer.
pub fn fueter_exponent<S: Scalar>(ctx: &DunklContext<S>, m: u32, n: u32) -> Result<u32> {
    Ok(m + n + mu_int(ctx)?)
}

/// Compares `D̲(x̲^k P_n)` with `−k x̲^{k−1} P_n` (`k` even) or
/// `−(k+μ+2n−1) x̲^{k−1} P_n` (`k` odd).
pub fn dirac_power_check<S: Scalar>(ctx: &DunklContext<S>, k: u32, p_n: &Poly<S>) -> Result<VerificationReport> {
    let n = homogeneous_degree(p_n)?;
    let dim = ctx.dim();
    let x = Poly::vector_variable(dim);
    let mut report = VerificationReport::new(format!("dirac-power k={k} n={n}"));
    let lhs = ctx.dunkl_dirac(&(&x.pow(k) * p_n))?;
    let expected = if k == 0 {
        Poly::zero(dim)
    } else {
        let c = if k.is_multiple_of(2) {
            int::<S>(i64::from(k))
        } else {
            int::<S>(i64::from(k) + 2 * i64::from(n) - 1) + ctx.mu()
        };
        (&x.pow(k - 1) * p_n).scale(&-c)
    };
    let residual = &lhs - &expected;
    report.check("dirac-power", residual.is_zero(), &residual);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxialPart {
    /// `(a, 0)`
    Scalar,
    /// `(0, b)`
    Vector,
}

/// Direct `Δ^m(embed(x_part, P_n))` against the closed-form expansion.
pub fn laplacian_power_check<S: Scalar>(
    ctx: &DunklContext<S>,
    m: u32,
    x: &AxialPair<S>,
    p_n: &Poly<S>,
    part: AxialPart,
) -> Result<VerificationReport> {
    let n = homogeneous_degree(p_n)?;
    let x = match part {
        AxialPart::Scalar => x.scalar_part(),
        AxialPart::Vector => x.vector_part(),
    };
    let mut report = VerificationReport::new(format!("laplacian-power m={m} n={n} part={part:?}"));
    let lhs = ctx.laplacian_power(&embed_axial(&x, p_n), Ambient::Paravector, m)?;
    let rhs = embed_axial(&laplacian_power_closed_form(m, n, &ctx.mu(), &x), p_n);
    let residual = &lhs - &rhs;
    report.check("closed-form", residual.is_zero(), &residual);
    Ok(report)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AxialFueterOptions {
    /// Accept seeds with `j > m`.
    pub allow_high_seed: bool,
    /// Replace the exponent `m + n + (μ−1)/2`.
    pub exponent: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct FueterOutcome<S: Scalar> {
    pub result: Poly<S>,
    pub exponent: u32,
    pub report: VerificationReport,
}

/// `Δ^{m+n+(μ−1)/2}((u + ω v) P_n)` for the seed `z̄^j z^k`, checked for
/// `D`-monogenicity. With default options the result is also compared with
/// the closed form, its single surviving term, and the Vekua system.
pub fn axial_fueter<S: Scalar>(
    ctx: &DunklContext<S>,
    seed: ComplexSeed,
    m: u32,
    p_n: &Poly<S>,
    opts: AxialFueterOptions,
) -> Result<FueterOutcome<S>> {
    let half = mu_int(ctx)?;
    let n = homogeneous_degree(p_n)?;
    if seed.j > m && !opts.allow_high_seed {
        return Err(Error::SeedOrderTooHigh {
            j: seed.j,
            k: seed.k,
            m,
        });
    }
    let exponent = opts.exponent.unwrap_or(m + n + half);
    let x = seed_to_axial(seed)?;
    let mut report = VerificationReport::new(format!("axial-fueter seed={seed} m={m} n={n}"));
    let result = ctx.laplacian_power(&embed_axial(&x, p_n), Ambient::Paravector, exponent)?;
    let residual = ctx.cauchy_riemann(&result)?;
    report.check("dunkl-monogenic", residual.is_zero(), &residual);
    if result.is_zero() {
        report.note("result is the zero polynomial");
    }
    if opts == AxialFueterOptions::default() {
        let mu = ctx.mu();
        let closed = embed_axial(&laplacian_power_closed_form(exponent, n, &mu, &x), p_n);
        let diff = &result - &closed;
        report.check("closed-form", diff.is_zero(), &diff);

        // Only j = n + (μ−1)/2 survives: d vanishes above it and Δ_z^{m+1}
        // kills the seed below it.
        let top = n + half;
        let base = delta_z_pow(m, &x);
        let pair = AxialPair::new(d_lower(top, &base.a), d_upper(top, &base.b));
        let coeff = d_coeff(n, &mu, top) * binomial::<S>(exponent, top);
        let single = embed_axial(&pair.scale(&coeff), p_n);
        let diff = &result - &single;
        report.check("single-term", diff.is_zero(), &diff);

        let c = int::<S>(2 * i64::from(n)) + mu - S::one();
        let (ok, res) = vekua_check(&pair, &c);
        report.check("vekua", ok, &res);
    }
    Ok(FueterOutcome {
        result,
        exponent,
        report,
    })
}

/// `Δ^{n+(μ−1)/2}((u + ω v) P)` for the seed `z^k` and a homogeneous
/// `D`-monogenic `P(x_0, x̲)` of degree `n`.
pub fn paravector_fueter<S: Scalar>(ctx: &DunklContext<S>, k: u32, p: &Poly<S>) -> Result<FueterOutcome<S>> {
    let half = mu_int(ctx)?;
    let n = homogeneous_degree(p)?;
    let (ok, residual) = is_dunkl_monogenic(ctx, p, MonogenicOperator::CauchyRiemann)?;
    if !ok {
        return Err(Error::FactorNotMonogenic {
            residual: residual.to_string(),
        });
    }
    let exponent = n + half;
    let x = seed_to_axial(ComplexSeed::new(0, k))?;
    let mut report = VerificationReport::new(format!("paravector-fueter k={k} n={n}"));
    let result = ctx.laplacian_power(&embed_axial(&x, p), Ambient::Paravector, exponent)?;
    let residual = ctx.cauchy_riemann(&result)?;
    report.check("dunkl-monogenic", residual.is_zero(), &residual);
    if result.is_zero() {
        report.note("result is the zero polynomial");
    }

    // P is the CK extension of its restriction, whose Fischer parts give
    // P = Σ_k CK[x̲^k M_{n−k}].
    let restricted = p.substitute_value(0, &S::zero());
    let fischer = fischer_decompose(ctx, &restricted)?;
    let x_vec = Poly::vector_variable(ctx.dim());
    let mut rebuilt = Poly::zero(ctx.dim());
    for (j, part) in fischer.parts.iter().enumerate() {
        rebuilt = &rebuilt + &ck_extend(ctx, &(&x_vec.pow(j as u32) * part))?;
    }
    let diff = p - &rebuilt;
    report.check("ck-fischer-split", diff.is_zero(), &diff);
    Ok(FueterOutcome {
        result,
        exponent,
        report,
    })
}

/// `CK[x̲^k P] = Σ_j c_j x_0^j x̲^{k−j} P`, and the induced
/// `g = Σ_j c_j t^j (i r)^{k−j}` satisfies `∂_z̄^{k+1} g = 0`.
pub fn ck_shape_check<S: Scalar>(ctx: &DunklContext<S>, k: u32, p: &Poly<S>) -> Result<VerificationReport> {
    let n = homogeneous_degree(p)?;
    let dim = ctx.dim();
    let mut report = VerificationReport::new(format!("ck-shape k={k} n={n}"));
    let x = Poly::vector_variable(dim);
    let x0 = Poly::var(dim, 0);
    let h = ck_extend(ctx, &(&x.pow(k) * p))?;
    let gens: Vec<Poly<S>> = (0..=k).map(|j| &(&x0.pow(j) * &x.pow(k - j)) * p).collect();
    let mut refs: Vec<&Poly<S>> = gens.iter().collect();
    refs.push(&h);
    let space = CoefficientSpace::spanning(dim, &refs);
    let a = space.matrix(&gens).expect("generators lie in their own span");
    let rhs = space.coordinates(&h).expect("h lies in the span space");
    let Some(coeffs) = solve(&a, &rhs) else {
        report.check("span-membership", false, &h);
        return Ok(report);
    };
    let rebuilt = gens
        .iter()
        .zip(&coeffs)
        .fold(Poly::zero(dim), |acc, (g, c)| &acc + &g.scale(c));
    let diff = &h - &rebuilt;
    report.check("span-membership", diff.is_zero(), &diff);
    let listed: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    report.note(format!("c_j = [{}]", listed.join(", ")));

    // x̲ ↔ i r: x̲^{2l} = (−q)^l and x̲^{2l+1} = (−q)^l x̲.
    let mut g = AxialPair::zero();
    let r_pair = AxialPair::new(ScalarPoly::zero(2), ScalarPoly::one(2));
    for (j, c) in coeffs.iter().enumerate() {
        let mut term = AxialPair::new(AxialPair::<S>::t().pow(j as u32), ScalarPoly::zero(2));
        for _ in 0..(k as usize - j) {
            term = axial_mul(&term, &r_pair);
        }
        g = g.add(&term.scale(c));
    }
    report.check(
        "polyanalytic-order",
        polyanalytic_order_check(k + 1, &g),
        format!("g = {g}"),
    );
    Ok(report)
}

#[cfg(test)]
mod tests;
