//! Exact polynomials in `x_0, …, x_d` with Clifford-algebra coefficients.
//!
//! A [`CliffordPolynomial`] is stored blade-wise as `f = Σ_A e_A f_A` with
//! scalar component polynomials `f_A`. Variables commute with everything;
//! blades multiply by the geometric product.

mod scalar_poly;
mod text;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

pub use scalar_poly::{Monomial, ScalarPoly};
pub use text::{parse_multivector, parse_polynomial};

use crate::clifford::{blade_product, Blade, Multivector, MAX_DIMENSION};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `Σ_A e_A f_A(x_0, …, x_d)`. Blades with a zero component are not stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordPolynomial<S> {
    dim: usize,
    terms: BTreeMap<Blade, ScalarPoly<S>>,
}

impl<S: Scalar> CliffordPolynomial<S> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIMENSION, "dimension {dim} exceeds {MAX_DIMENSION}");
        CliffordPolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::from_scalar_poly(dim, Blade::SCALAR, ScalarPoly::one(dim + 1))
    }

    /// `e_A · p` for a scalar polynomial `p` in `d+1` variables.
    pub fn from_scalar_poly(dim: usize, blade: Blade, p: ScalarPoly<S>) -> Self {
        assert_eq!(p.nvars(), dim + 1, "component has wrong number of variables");
        assert!(blade.max_index() <= dim, "blade {blade} outside R_(0,{dim})");
        let mut out = Self::zero(dim);
        if !p.is_zero() {
            out.terms.insert(blade, p);
        }
        out
    }

    /// The constant polynomial with the given multivector value.
    pub fn constant(value: &Multivector<S>) -> Self {
        let d = value.dim();
        let mut out = Self::zero(d);
        for (b, c) in value.terms() {
            out.add_component(b, ScalarPoly::constant(d + 1, c.clone()));
        }
        out
    }

    /// The coordinate `x_i`, `0 <= i <= d`.
    pub fn var(dim: usize, i: usize) -> Self {
        Self::from_scalar_poly(dim, Blade::SCALAR, ScalarPoly::var(dim + 1, i))
    }

    /// `x̲ = Σ_{i=1}^d x_i e_i`.
    pub fn vector_variable(dim: usize) -> Self {
        let mut out = Self::zero(dim);
        for i in 1..=dim {
            out.add_component(Blade::generator(i), ScalarPoly::var(dim + 1, i));
        }
        out
    }

    /// `|x̲|^2 = Σ_{i=1}^d x_i^2` as a scalar polynomial.
    pub fn radial_square(dim: usize) -> ScalarPoly<S> {
        let mut out = ScalarPoly::zero(dim + 1);
        for i in 1..=dim {
            let mut m = Monomial::one(dim + 1);
            m = m.with_exponent(i, 2);
            out.add_term(m, S::one());
        }
        out
    }

    pub fn from_components(dim: usize, comps: impl IntoIterator<Item = (Blade, ScalarPoly<S>)>) -> Self {
        let mut out = Self::zero(dim);
        for (b, p) in comps {
            assert_eq!(p.nvars(), dim + 1, "component has wrong number of variables");
            assert!(b.max_index() <= dim, "blade {b} outside R_(0,{dim})");
            out.add_component(b, p);
        }
        out
    }

    fn add_component(&mut self, blade: Blade, p: ScalarPoly<S>) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            Entry::Vacant(e) => {
                e.insert(p);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&p);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.dim + 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (Blade, &ScalarPoly<S>)> {
        self.terms.iter().map(|(b, p)| (*b, p))
    }

    pub fn component(&self, blade: Blade) -> ScalarPoly<S> {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(|| ScalarPoly::zero(self.dim + 1))
    }

    /// Number of stored (blade, monomial) terms.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(ScalarPoly::len).sum()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.values().filter_map(ScalarPoly::degree).max()
    }

    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.terms.values().all(|p| p.is_homogeneous_of(n))
    }

    /// True when some term contains `x_i`.
    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.values().any(|p| p.degree_in(i).is_some_and(|e| e > 0))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, p) in &other.terms {
            out.add_component(*b, p.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, p) in &other.terms {
            out.add_component(*b, p.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_components(|p| p.neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        self.map_components(|p| p.scale(s))
    }

    /// Multiplies every component by the scalar polynomial `p`.
    pub fn scale_poly(&self, p: &ScalarPoly<S>) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in &self.terms {
            out.add_component(*b, c.mul(p));
        }
        out
    }

    fn map_components(&self, f: impl Fn(&ScalarPoly<S>) -> ScalarPoly<S>) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, p) in &self.terms {
            out.add_component(*b, f(p));
        }
        out
    }

    /// Ring product: geometric product on the blades, ordinary product on
    /// the commuting variables.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                let (sign, c) = blade_product(*a, *b);
                let prod = p.mul(q);
                out.add_component(c, if sign > 0 { prod } else { prod.neg() });
            }
        }
        Ok(out)
    }

    /// `e_A · self`, with `sign` folded in.
    pub fn left_mul_blade(&self, blade: Blade) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, p) in &self.terms {
            let (sign, c) = blade_product(blade, *b);
            out.add_component(c, if sign > 0 { p.clone() } else { p.neg() });
        }
        out
    }

    /// `self · e_A`.
    pub fn right_mul_blade(&self, blade: Blade) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, p) in &self.terms {
            let (sign, c) = blade_product(*b, blade);
            out.add_component(c, if sign > 0 { p.clone() } else { p.neg() });
        }
        out
    }

    /// `m · self` for a constant multivector `m`.
    pub fn left_mul_multivector(&self, m: &Multivector<S>) -> Result<Self> {
        if m.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: m.dim(),
                right: self.dim,
            });
        }
        let mut out = Self::zero(self.dim);
        for (blade, c) in m.terms() {
            out = &out + &self.left_mul_blade(blade).scale(c);
        }
        Ok(out)
    }

    /// Formal `∂/∂x_i`, componentwise.
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i > self.dim {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.dim,
            });
        }
        Ok(self.map_components(|p| p.derivative(i)))
    }

    /// `Σ_{i=1}^d x_i ∂_i`.
    pub fn euler(&self) -> Self {
        let dim = self.dim;
        self.map_components(|p| p.euler(1..dim + 1))
    }

    /// `p(M x)` with `M` acting on `(x_0, …, x_d)`.
    pub fn substitute_linear(&self, m: &Matrix<S>) -> Result<Self> {
        if m.rows() != self.dim + 1 || m.cols() != self.dim + 1 {
            return Err(Error::DimensionMismatch {
                left: m.rows(),
                right: self.dim + 1,
            });
        }
        Ok(self.map_components(|p| p.substitute_linear(m)))
    }

    /// Exact quotient by `⟨α, x⟩`; fails with `NonDivisible` on a nonzero
    /// remainder in any component.
    pub fn divide_by_linear(&self, alpha: &[S]) -> Result<Self> {
        if alpha.len() != self.dim + 1 {
            return Err(Error::DimensionMismatch {
                left: alpha.len(),
                right: self.dim + 1,
            });
        }
        if alpha.iter().all(|a| a.is_zero()) {
            return Err(Error::ZeroLinearForm);
        }
        let mut out = Self::zero(self.dim);
        for (b, p) in &self.terms {
            out.add_component(*b, p.divide_by_linear(alpha)?);
        }
        Ok(out)
    }

    /// Parts grouped by total degree, ascending. Empty for the zero
    /// polynomial.
    pub fn homogeneous_components(&self) -> Vec<(u32, Self)> {
        let mut by_degree: BTreeMap<u32, Self> = BTreeMap::new();
        for (b, p) in &self.terms {
            for (m, c) in p.terms() {
                let part = by_degree.entry(m.degree()).or_insert_with(|| Self::zero(self.dim));
                part.add_component(*b, ScalarPoly::monomial(m.clone(), c.clone()));
            }
        }
        by_degree.into_iter().collect()
    }

    pub fn homogeneous_part(&self, n: u32) -> Self {
        self.map_components(|p| p.homogeneous_part(n))
    }

    /// Exact value at a point `(x_0, …, x_d)`.
    pub fn evaluate(&self, point: &[S]) -> Multivector<S> {
        assert_eq!(point.len(), self.dim + 1, "point has wrong dimension");
        Multivector::from_terms(self.dim, self.terms.iter().map(|(b, p)| (*b, p.evaluate(point))))
    }

    /// Sets `x_i = v`.
    pub fn substitute_value(&self, i: usize, v: &S) -> Self {
        self.map_components(|p| p.substitute_value(i, v))
    }

    /// The constant value, if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<Multivector<S>> {
        if self.degree().unwrap_or(0) > 0 {
            return None;
        }
        Some(self.evaluate(&vec![S::zero(); self.dim + 1]))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<S: Scalar> std::ops::Add for &CliffordPolynomial<S> {
    type Output = CliffordPolynomial<S>;
    fn add(self, rhs: Self) -> CliffordPolynomial<S> {
        self.try_add(rhs).expect("polynomial dimensions must agree")
    }
}

impl<S: Scalar> std::ops::Sub for &CliffordPolynomial<S> {
    type Output = CliffordPolynomial<S>;
    fn sub(self, rhs: Self) -> CliffordPolynomial<S> {
        self.try_sub(rhs).expect("polynomial dimensions must agree")
    }
}

impl<S: Scalar> std::ops::Mul for &CliffordPolynomial<S> {
    type Output = CliffordPolynomial<S>;
    fn mul(self, rhs: Self) -> CliffordPolynomial<S> {
        self.try_mul(rhs).expect("polynomial dimensions must agree")
    }
}

impl<S: Scalar> std::ops::Neg for &CliffordPolynomial<S> {
    type Output = CliffordPolynomial<S>;
    fn neg(self) -> CliffordPolynomial<S> {
        CliffordPolynomial::neg(self)
    }
}

/// Shared text grammar, e.g. `1*x0 + 2*x1^2*e1 - 1/2*e12`. Terms are sorted
/// by blade (grade, then indices) and then by ascending degree.
impl<S: Scalar> fmt::Display for CliffordPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = scalar_poly::default_names(self.dim + 1);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut first = true;
        let mut out = String::new();
        for (b, p) in &self.terms {
            let sfx = (!b.is_scalar()).then(|| b.to_string());
            p.write_with(&mut out, &refs, first, sfx.as_deref())?;
            first = false;
        }
        f.write_str(&out)
    }
}

impl<S: Scalar> fmt::Debug for CliffordPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CliffordPolynomial<{}>({})", self.dim, self)
    }
}
