//! Dunkl operators acting on Clifford-valued polynomials.
//!
//! Reflections act on the argument only, componentwise on blades.

use crate::clifford::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::groups::ReflectionGroup;
use crate::linalg::Matrix;
use crate::poly::{CliffordPolynomial, ScalarPoly};
use crate::scalar::Scalar;

/// Which Laplacian: `Σ_{i≥1} T_i^2` on `R^d`, or with `∂_0^2` added on
/// `R^d_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Euclidean,
    Paravector,
}

#[derive(Clone, Debug)]
struct ActiveRoot<S: Scalar> {
    alpha: Vec<S>,
    kappa: S,
    reflection: Matrix<S>,
    /// `α̲ = Σ α_i e_i`.
    vector: Multivector<S>,
    /// `x ∧ α = Σ_{i<j} (x_i α_j − x_j α_i) e_i e_j`.
    wedge: CliffordPolynomial<S>,
}

/// Immutable operator context for one group and multiplicity function.
#[derive(Clone, Debug)]
pub struct DunklContext<S: Scalar> {
    group: ReflectionGroup<S>,
    /// Positive roots with `κ(α) ≠ 0`.
    active: Vec<ActiveRoot<S>>,
}

type Poly<S> = CliffordPolynomial<S>;

impl<S: Scalar> DunklContext<S> {
    /// Fails with `InvalidGroup` unless every validation check passes.
    pub fn new(group: ReflectionGroup<S>) -> Result<Self> {
        let report = group.validate();
        if !report.passed() {
            let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
            return Err(Error::InvalidGroup(format!("{}: {}", group.name(), names.join(", "))));
        }
        Ok(Self::new_unchecked(group))
    }

    /// Skips validation. For rescaled or deliberately broken root systems.
    pub fn new_unchecked(group: ReflectionGroup<S>) -> Self {
        let dim = group.dim();
        let active = group
            .positive_roots()
            .iter()
            .filter(|p| !p.kappa.is_zero())
            .map(|p| {
                let alpha = p.root.coords().to_vec();
                let vector = Multivector::vector(dim, &alpha[1..]);
                let mut wedge = Poly::zero(dim);
                for i in 1..=dim {
                    for j in i + 1..=dim {
                        let coeffs: Vec<S> = (0..=dim)
                            .map(|k| {
                                if k == i {
                                    alpha[j].clone()
                                } else if k == j {
                                    -alpha[i].clone()
                                } else {
                                    S::zero()
                                }
                            })
                            .collect();
                        let blade = Blade::new(&[i, j]).expect("i < j");
                        wedge = &wedge + &Poly::from_scalar_poly(dim, blade, ScalarPoly::linear(&coeffs));
                    }
                }
                ActiveRoot {
                    alpha,
                    kappa: p.kappa.clone(),
                    reflection: p.reflection.clone(),
                    vector,
                    wedge,
                }
            })
            .collect();
        DunklContext { group, active }
    }

    pub fn group(&self) -> &ReflectionGroup<S> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn gamma_kappa(&self) -> S {
        self.group.gamma_kappa()
    }

    /// `μ = 2γ_κ + d`.
    pub fn mu(&self) -> S {
        self.group.dunkl_dimension()
    }

    fn check_dim(&self, p: &Poly<S>) -> Result<()> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: p.dim(),
                right: self.dim(),
            });
        }
        Ok(())
    }

    /// `(p∘σ_α, (p − p∘σ_α)/⟨α,x⟩)` for every active root.
    fn reflections_and_quotients(&self, p: &Poly<S>) -> Result<Vec<(Poly<S>, Poly<S>)>> {
        self.active
            .iter()
            .map(|r| {
                let reflected = p.substitute_linear(&r.reflection)?;
                let q = (p - &reflected).divide_by_linear(&r.alpha)?;
                Ok((reflected, q))
            })
            .collect()
    }

    /// `T_i p = ∂_i p + Σ_{α∈R_+} κ(α) α_i (p − p∘σ_α)/⟨α,x⟩`; `T_0 = ∂_0`.
    pub fn dunkl_derivative(&self, i: usize, p: &Poly<S>) -> Result<Poly<S>> {
        self.check_dim(p)?;
        let mut out = p.partial_derivative(i)?;
        if i == 0 {
            return Ok(out);
        }
        for r in self.active.iter().filter(|r| !r.alpha[i].is_zero()) {
            let reflected = p.substitute_linear(&r.reflection)?;
            let q = (p - &reflected).divide_by_linear(&r.alpha)?;
            out = &out + &q.scale(&(r.kappa.clone() * r.alpha[i].clone()));
        }
        Ok(out)
    }

    /// `(T_0 p, …, T_d p)`, sharing the difference quotients.
    pub fn dunkl_gradient(&self, p: &Poly<S>) -> Result<Vec<Poly<S>>> {
        self.check_dim(p)?;
        let quotients = self.reflections_and_quotients(p)?;
        (0..=self.dim())
            .map(|i| {
                let mut t = p.partial_derivative(i)?;
                for (r, (_, q)) in self.active.iter().zip(&quotients) {
                    if !r.alpha[i].is_zero() {
                        t = &t + &q.scale(&(r.kappa.clone() * r.alpha[i].clone()));
                    }
                }
                Ok(t)
            })
            .collect()
    }

    /// `D̲ p = Σ_{i=1}^d e_i T_i p`.
    pub fn dunkl_dirac(&self, p: &Poly<S>) -> Result<Poly<S>> {
        self.check_dim(p)?;
        let mut out = Poly::zero(self.dim());
        for i in 1..=self.dim() {
            out = &out + &p.partial_derivative(i)?.left_mul_blade(Blade::generator(i));
        }
        for (r, (_, q)) in self.active.iter().zip(self.reflections_and_quotients(p)?) {
            out = &out + &q.left_mul_multivector(&r.vector)?.scale(&r.kappa);
        }
        Ok(out)
    }

    /// `D p = ∂_0 p + D̲ p`.
    pub fn cauchy_riemann(&self, p: &Poly<S>) -> Result<Poly<S>> {
        Ok(&p.partial_derivative(0)? + &self.dunkl_dirac(p)?)
    }

    /// `Δ̲ p = Σ_{i=1}^d T_i^2 p`, plus `∂_0^2 p` for [`Ambient::Paravector`].
    pub fn laplacian(&self, p: &Poly<S>, ambient: Ambient) -> Result<Poly<S>> {
        let grad = self.dunkl_gradient(p)?;
        let mut out = Poly::zero(self.dim());
        for (i, t) in grad.iter().enumerate().skip(1) {
            out = &out + &self.dunkl_derivative(i, t)?;
        }
        if ambient == Ambient::Paravector {
            out = &out + &grad[0].partial_derivative(0)?;
        }
        Ok(out)
    }

    pub fn laplacian_power(&self, p: &Poly<S>, ambient: Ambient, m: u32) -> Result<Poly<S>> {
        let mut out = p.clone();
        for _ in 0..m {
            if out.is_zero() {
                break;
            }
            out = self.laplacian(&out, ambient)?;
        }
        Ok(out)
    }

    /// `Φ p = −Σ_{i<j} e_i e_j (x_i ∂_j − x_j ∂_i) p`.
    pub fn phi(&self, p: &Poly<S>) -> Result<Poly<S>> {
        self.check_dim(p)?;
        phi_operator(p)
    }

    /// `Ψ p = −Σ_{α∈R_+} κ(α) [(x ∧ α) (p − p∘σ_α)/⟨α,x⟩ + p∘σ_α]`.
    pub fn psi(&self, p: &Poly<S>) -> Result<Poly<S>> {
        self.check_dim(p)?;
        let mut out = Poly::zero(self.dim());
        for (r, (reflected, q)) in self.active.iter().zip(self.reflections_and_quotients(p)?) {
            let term = &r.wedge.try_mul(&q)? + &reflected;
            out = &out - &term.scale(&r.kappa);
        }
        Ok(out)
    }

    /// `Γ p = γ_κ p + Φ p + Ψ p`.
    pub fn gamma(&self, p: &Poly<S>) -> Result<Poly<S>> {
        Ok(&(&p.scale(&self.gamma_kappa()) + &self.phi(p)?) + &self.psi(p)?)
    }
}

/// `Φ` does not depend on the group.
pub fn phi_operator<S: Scalar>(p: &Poly<S>) -> Result<Poly<S>> {
    let dim = p.dim();
    let mut out = Poly::zero(dim);
    for i in 1..=dim {
        let di = p.partial_derivative(i)?;
        for j in i + 1..=dim {
            let dj = p.partial_derivative(j)?;
            let rot = &(&Poly::var(dim, i) * &dj) - &(&Poly::var(dim, j) * &di);
            out = &out - &rot.left_mul_blade(Blade::new(&[i, j]).expect("i < j"));
        }
    }
    Ok(out)
}

/// `E p = Σ_{i=1}^d x_i ∂_i p`.
pub fn euler_operator<S: Scalar>(p: &Poly<S>) -> Poly<S> {
    p.euler()
}
