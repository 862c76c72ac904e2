//! Coefficient spaces, Dunkl-monogenic bases, Fischer decomposition and
//! the Cauchy–Kovalevskaya extension.

use std::collections::BTreeMap;

use crate::clifford::Blade;
use crate::dunkl::DunklContext;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, solve, Matrix};
use crate::poly::{CliffordPolynomial, Monomial, ScalarPoly};
use crate::scalar::{factorial, Scalar};

type Poly<S> = CliffordPolynomial<S>;

/// Monomials of total degree `degree` in the variables `first..nvars`,
/// in lexicographic exponent order.
pub fn monomials_of_degree(nvars: usize, first: usize, degree: u32) -> Vec<Monomial> {
    fn rec(i: usize, nvars: usize, left: u16, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            exps[i] = left;
            out.push(Monomial::new(exps));
            exps[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, nvars, left - e, exps, out);
        }
        exps[i] = 0;
    }
    let mut out = Vec::new();
    if first >= nvars {
        if degree == 0 {
            out.push(Monomial::one(nvars));
        }
        return out;
    }
    let mut exps = vec![0u16; nvars];
    rec(first, nvars, degree as u16, &mut exps, &mut out);
    out
}

/// A finite coordinate system on Clifford polynomials: one coordinate per
/// `(blade, monomial)` key.
#[derive(Clone, Debug)]
pub struct CoefficientSpace {
    dim: usize,
    keys: Vec<(Blade, Monomial)>,
    index: BTreeMap<(Blade, Monomial), usize>,
}

impl CoefficientSpace {
    fn from_keys(dim: usize, keys: Vec<(Blade, Monomial)>) -> Self {
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        CoefficientSpace { dim, keys, index }
    }

    /// Homogeneous polynomials of degree `degree`, optionally without `x_0`.
    pub fn homogeneous(dim: usize, degree: u32, with_x0: bool) -> Self {
        let monos = monomials_of_degree(dim + 1, usize::from(!with_x0), degree);
        let keys = Blade::all(dim)
            .into_iter()
            .flat_map(|b| monos.iter().map(move |m| (b, m.clone())))
            .collect();
        Self::from_keys(dim, keys)
    }

    /// The keys occurring in any of `polys`.
    pub fn spanning<S: Scalar>(dim: usize, polys: &[&Poly<S>]) -> Self {
        let mut set = std::collections::BTreeSet::new();
        for p in polys {
            for (b, comp) in p.components() {
                for (m, _) in comp.terms() {
                    set.insert((b, m.clone()));
                }
            }
        }
        Self::from_keys(dim, set.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// `None` when `p` has a term outside the space.
    pub fn coordinates<S: Scalar>(&self, p: &Poly<S>) -> Option<Vec<S>> {
        let mut v = vec![S::zero(); self.keys.len()];
        for (b, comp) in p.components() {
            for (m, c) in comp.terms() {
                let &i = self.index.get(&(b, m.clone()))?;
                v[i] = c.clone();
            }
        }
        Some(v)
    }

    pub fn polynomial<S: Scalar>(&self, v: &[S]) -> Poly<S> {
        let mut comps: BTreeMap<Blade, ScalarPoly<S>> = BTreeMap::new();
        for ((b, m), c) in self.keys.iter().zip(v) {
            if c.is_zero() {
                continue;
            }
            let entry = comps.entry(*b).or_insert_with(|| ScalarPoly::zero(self.dim + 1));
            *entry = entry.add(&ScalarPoly::monomial(m.clone(), c.clone()));
        }
        Poly::from_components(self.dim, comps)
    }

    /// Matrix whose columns are the coordinates of `columns`.
    pub fn matrix<S: Scalar>(&self, columns: &[Poly<S>]) -> Option<Matrix<S>> {
        let cols: Option<Vec<Vec<S>>> = columns.iter().map(|p| self.coordinates(p)).collect();
        Some(Matrix::from_columns(self.len(), &cols?))
    }
}

/// A basis of `M(n)`, the homogeneous degree-`n` polynomials in `x_1..x_d`
/// annihilated by `D̲`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicBasis<S: Scalar> {
    pub degree: u32,
    pub elements: Vec<Poly<S>>,
}

impl<S: Scalar> MonogenicBasis<S> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `Σ c_i P_i`.
    pub fn combination(&self, coeffs: &[S]) -> Poly<S> {
        let dim = self.elements.first().map_or(0, |p| p.dim());
        self.elements
            .iter()
            .zip(coeffs)
            .fold(Poly::zero(dim), |acc, (p, c)| &acc + &p.scale(c))
    }
}

/// The matrix of `D̲ : P(n) → P(n−1)` in the monomial-times-blade
/// coordinates of [`CoefficientSpace::homogeneous`].
pub fn dirac_matrix<S: Scalar>(ctx: &DunklContext<S>, n: u32) -> Result<(CoefficientSpace, Matrix<S>)> {
    let dim = ctx.dim();
    let domain = CoefficientSpace::homogeneous(dim, n, false);
    if n == 0 {
        return Ok((domain.clone(), Matrix::zeros(0, domain.len())));
    }
    let codomain = CoefficientSpace::homogeneous(dim, n - 1, false);
    let monos = monomials_of_degree(dim + 1, 1, n);
    let images: Vec<Poly<S>> = monos
        .iter()
        .map(|m| {
            let p = Poly::from_scalar_poly(dim, Blade::SCALAR, ScalarPoly::monomial(m.clone(), S::one()));
            ctx.dunkl_dirac(&p)
        })
        .collect::<Result<_>>()?;
    // Key order of `homogeneous` is blade-major, monomial-minor.
    let mut columns = Vec::with_capacity(domain.len());
    for b in Blade::all(dim) {
        for img in &images {
            columns.push(img.right_mul_blade(b));
        }
    }
    let m = codomain
        .matrix(&columns)
        .ok_or_else(|| Error::SolveFailed("D̲ image left P(n-1)".into()))?;
    Ok((domain, m))
}

/// Exact nullspace of `D̲` on `P(n)`, integer-primitive.
pub fn monogenic_basis<S: Scalar>(ctx: &DunklContext<S>, n: u32) -> Result<MonogenicBasis<S>> {
    let (domain, m) = dirac_matrix(ctx, n)?;
    let elements = nullspace(&m).iter().map(|v| domain.polynomial(v)).collect();
    Ok(MonogenicBasis { degree: n, elements })
}

/// `M(0), …, M(n)`.
pub fn monogenic_bases<S: Scalar>(ctx: &DunklContext<S>, n: u32) -> Result<Vec<MonogenicBasis<S>>> {
    (0..=n).map(|k| monogenic_basis(ctx, k)).collect()
}

/// `parts[k] = M_{n−k}` with `p = Σ_k x̲^k M_{n−k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FischerDecomposition<S: Scalar> {
    pub degree: u32,
    pub parts: Vec<Poly<S>>,
}

impl<S: Scalar> FischerDecomposition<S> {
    pub fn recompose(&self, dim: usize) -> Poly<S> {
        let x = Poly::vector_variable(dim);
        let mut power = Poly::one(dim);
        let mut out = Poly::zero(dim);
        for part in &self.parts {
            out = &out + &(&power * part);
            power = &power * &x;
        }
        out
    }
}

/// The generating set `{x̲^k B : B ∈ basis M(n−k)}` of `P(n)`, with the
/// block index `k` of each element.
pub fn fischer_generators<S: Scalar>(dim: usize, bases: &[MonogenicBasis<S>], n: u32) -> Vec<(usize, Poly<S>)> {
    let x = Poly::vector_variable(dim);
    let mut power = Poly::one(dim);
    let mut out = Vec::new();
    for k in 0..=n as usize {
        for b in &bases[n as usize - k].elements {
            out.push((k, &power * b));
        }
        power = &power * &x;
    }
    out
}

/// `(rank of the generating set, dim P(n))`.
pub fn fischer_rank<S: Scalar>(ctx: &DunklContext<S>, n: u32) -> Result<(usize, usize)> {
    let bases = monogenic_bases(ctx, n)?;
    let space = CoefficientSpace::homogeneous(ctx.dim(), n, false);
    let gens: Vec<Poly<S>> = fischer_generators(ctx.dim(), &bases, n)
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    let m = space
        .matrix(&gens)
        .ok_or_else(|| Error::SolveFailed("generator left P(n)".into()))?;
    Ok((m.rank(), space.len()))
}

pub fn homogeneous_degree<S: Scalar>(p: &Poly<S>) -> Result<u32> {
    let n = p.degree().unwrap_or(0);
    if p.is_homogeneous_of(n) {
        Ok(n)
    } else {
        Err(Error::NotHomogeneous)
    }
}

/// Uses precomputed bases `M(0..=n)`.
pub fn fischer_decompose_with<S: Scalar>(bases: &[MonogenicBasis<S>], p: &Poly<S>) -> Result<FischerDecomposition<S>> {
    let n = homogeneous_degree(p)?;
    if p.depends_on(0) {
        return Err(Error::DependsOnX0);
    }
    assert!(bases.len() > n as usize, "bases up to degree {n} required");
    let dim = p.dim();
    let space = CoefficientSpace::homogeneous(dim, n, false);
    let gens = fischer_generators(dim, bases, n);
    let polys: Vec<Poly<S>> = gens.iter().map(|(_, g)| g.clone()).collect();
    let a = space
        .matrix(&polys)
        .ok_or_else(|| Error::SolveFailed("generator left P(n)".into()))?;
    if a.rank() != polys.len() {
        return Err(Error::SolveFailed(format!(
            "generators of P({n}) are dependent: rank {} < {}",
            a.rank(),
            polys.len()
        )));
    }
    let rhs = space.coordinates(p).ok_or(Error::NotHomogeneous)?;
    let coeffs =
        solve(&a, &rhs).ok_or_else(|| Error::SolveFailed(format!("no Fischer decomposition in degree {n}")))?;
    let mut parts = vec![Poly::zero(dim); n as usize + 1];
    let mut offsets = vec![0usize; n as usize + 1];
    for ((k, _), c) in gens.iter().zip(&coeffs) {
        let idx = offsets[*k];
        offsets[*k] += 1;
        if !c.is_zero() {
            parts[*k] = &parts[*k] + &bases[n as usize - k].elements[idx].scale(c);
        }
    }
    Ok(FischerDecomposition { degree: n, parts })
}

pub fn fischer_decompose<S: Scalar>(ctx: &DunklContext<S>, p: &Poly<S>) -> Result<FischerDecomposition<S>> {
    let n = homogeneous_degree(p)?;
    if p.depends_on(0) {
        return Err(Error::DependsOnX0);
    }
    fischer_decompose_with(&monogenic_bases(ctx, n)?, p)
}

/// `CK[g] = Σ_j (−x_0)^j / j! D̲^j g`.
pub fn ck_extend<S: Scalar>(ctx: &DunklContext<S>, g: &Poly<S>) -> Result<Poly<S>> {
    if g.depends_on(0) {
        return Err(Error::DependsOnX0);
    }
    let dim = g.dim();
    let minus_x0 = Poly::var(dim, 0).neg();
    let mut out = g.clone();
    let mut term = g.clone();
    let mut x_pow = Poly::one(dim);
    for j in 1u32.. {
        term = ctx.dunkl_dirac(&term)?;
        if term.is_zero() {
            break;
        }
        x_pow = &x_pow * &minus_x0;
        let scaled = term.scale(&(S::one() / factorial::<S>(j)));
        out = &out + &(&x_pow * &scaled);
    }
    Ok(out)
}
