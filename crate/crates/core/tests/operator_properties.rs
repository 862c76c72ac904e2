use dunkl_core::dunkl::{euler_operator, phi_operator};
use dunkl_core::poly::ScalarPoly;
use dunkl_core::random::{random_nonzero_rational, random_polynomial, seeded_rng, PolyShape};
use dunkl_core::{fueter, Ambient, Blade, DunklContext, Polynomial, Rational, ReflectionGroup};
use num_traits::One;
use proptest::prelude::*;

const GROUPS: [&str; 6] = [
    "a1:d=2:kappa=1/2,1",
    "a1:d=3:kappa=1,0,2/3",
    "sd:d=3:kappa=1",
    "bd:d=2:kappa=1,1/2",
    "bd:d=3:kappa=1/3,2",
    "b2:kappa=2,1/5",
];

fn ctx(spec: &str) -> DunklContext {
    DunklContext::new(ReflectionGroup::from_spec(spec).unwrap()).unwrap()
}

fn sample(spec: &str, seed: u64, max_degree: u32) -> (DunklContext, Polynomial) {
    let c = ctx(spec);
    let mut rng = seeded_rng(seed);
    let p = random_polynomial(&mut rng, PolyShape::new(c.dim(), max_degree).terms(5));
    (c, p)
}

/// `Δf + Σ_{α∈R_+} κ(α) (2⟨∇f,α⟩/⟨α,x⟩ − |α|^2 (f − f∘σ_α)/⟨α,x⟩^2)`,
/// applied blade by blade.
fn laplacian_oracle(c: &DunklContext, f: &Polynomial) -> Polynomial {
    let dim = c.dim();
    let mut out = Polynomial::zero(dim);
    for i in 1..=dim {
        out = &out + &f.partial_derivative(i).unwrap().partial_derivative(i).unwrap();
    }
    for root in c.group().positive_roots() {
        let alpha = root.root.coords();
        let mut grad_alpha = Polynomial::zero(dim);
        for i in 1..=dim {
            grad_alpha = &grad_alpha + &f.partial_derivative(i).unwrap().scale(&alpha[i]);
        }
        // Only the combined numerator is divisible by ⟨α,x⟩^2.
        let form = Polynomial::from_scalar_poly(dim, Blade::SCALAR, ScalarPoly::linear(alpha));
        let two = Rational::from_integer(2.into());
        let diff = f - &f.substitute_linear(&root.reflection).unwrap();
        let numerator = &(&form * &grad_alpha).scale(&two) - &diff.scale(&root.root.norm_squared());
        let quotient = numerator
            .divide_by_linear(alpha)
            .unwrap()
            .divide_by_linear(alpha)
            .unwrap();
        out = &out + &quotient.scale(&root.kappa);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dunkl_operators_commute(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let (c, p) = sample(GROUPS[g], seed, 4);
        let grad = c.dunkl_gradient(&p).unwrap();
        for i in 0..=c.dim() {
            for j in i + 1..=c.dim() {
                let ij = c.dunkl_derivative(i, &grad[j]).unwrap();
                let ji = c.dunkl_derivative(j, &grad[i]).unwrap();
                prop_assert_eq!(ij, ji, "T_{} T_{} on {}", i, j, GROUPS[g]);
            }
        }
    }

    #[test]
    fn laplacian_matches_alternative_formula(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let (c, p) = sample(GROUPS[g], seed, 4);
        prop_assert_eq!(c.laplacian(&p, Ambient::Euclidean).unwrap(), laplacian_oracle(&c, &p));
    }

    #[test]
    fn laplacian_is_minus_dirac_squared(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let (c, p) = sample(GROUPS[g], seed, 4);
        let dd = c.dunkl_dirac(&c.dunkl_dirac(&p).unwrap()).unwrap();
        prop_assert_eq!(c.laplacian(&p, Ambient::Euclidean).unwrap(), dd.neg());
        let full = c.laplacian(&p, Ambient::Paravector).unwrap();
        let dtt = p.partial_derivative(0).unwrap().partial_derivative(0).unwrap();
        prop_assert_eq!(full, &dtt - &dd);
    }

    #[test]
    fn spherical_form_identity(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let (c, p) = sample(GROUPS[g], seed, 4);
        let x = Polynomial::vector_variable(c.dim());
        let lhs = &(&(&x * &c.dunkl_dirac(&p).unwrap()) + &euler_operator(&p)) + &c.gamma(&p).unwrap();
        prop_assert!(lhs.is_zero(), "residual {}", lhs);
    }

    #[test]
    fn operators_lower_degree(g in 0..GROUPS.len(), seed in any::<u64>(), n in 1u32..5) {
        let c = ctx(GROUPS[g]);
        let mut rng = seeded_rng(seed);
        let p: Polynomial = random_polynomial(&mut rng, PolyShape::new(c.dim(), n).homogeneous());
        for i in 0..=c.dim() {
            let t = c.dunkl_derivative(i, &p).unwrap();
            prop_assert!(t.is_zero() || t.is_homogeneous_of(n - 1));
        }
        let gam = c.gamma(&p).unwrap();
        prop_assert!(gam.is_zero() || gam.is_homogeneous_of(n));
    }

    #[test]
    fn root_rescaling_leaves_operators_unchanged(g in 0..GROUPS.len(), seed in any::<u64>()) {
        let (c, p) = sample(GROUPS[g], seed, 4);
        let mut rng = seeded_rng(seed ^ 0x5eed);
        let factors: Vec<Rational> = c
            .group()
            .positive_roots()
            .iter()
            .map(|_| {
                let r: Rational = random_nonzero_rational(&mut rng);
                num_traits::Signed::abs(&r)
            })
            .collect();
        let scaled = DunklContext::new_unchecked(c.group().with_rescaled_roots(&factors).unwrap());
        for i in 0..=c.dim() {
            prop_assert_eq!(c.dunkl_derivative(i, &p).unwrap(), scaled.dunkl_derivative(i, &p).unwrap());
        }
    }

    #[test]
    fn zero_multiplicity_is_classical(d in 1usize..4, seed in any::<u64>()) {
        let c = DunklContext::new(ReflectionGroup::classical(d).unwrap()).unwrap();
        let mut rng = seeded_rng(seed);
        let p: Polynomial = random_polynomial(&mut rng, PolyShape::new(d, 5));
        let mut dirac = Polynomial::zero(d);
        let mut lap = Polynomial::zero(d);
        for i in 0..=d {
            let di = p.partial_derivative(i).unwrap();
            prop_assert_eq!(c.dunkl_derivative(i, &p).unwrap(), di.clone());
            if i > 0 {
                dirac = &dirac + &di.left_mul_blade(Blade::generator(i));
                lap = &lap + &di.partial_derivative(i).unwrap();
            }
        }
        prop_assert_eq!(c.dunkl_dirac(&p).unwrap(), dirac.clone());
        prop_assert_eq!(c.cauchy_riemann(&p).unwrap(), &p.partial_derivative(0).unwrap() + &dirac);
        prop_assert_eq!(c.laplacian(&p, Ambient::Euclidean).unwrap(), lap.clone());
        let d00 = p.partial_derivative(0).unwrap().partial_derivative(0).unwrap();
        prop_assert_eq!(c.laplacian(&p, Ambient::Paravector).unwrap(), &lap + &d00);
        prop_assert!(c.psi(&p).unwrap().is_zero());
        prop_assert_eq!(c.gamma(&p).unwrap(), phi_operator(&p).unwrap());
    }

    #[test]
    fn dunkl_operators_are_w_equivariant(g in 0..GROUPS.len(), seed in any::<u64>()) {
        // (Δ_κ f)∘w = Δ_κ(f∘w) for every w ∈ W.
        let (c, p) = sample(GROUPS[g], seed, 3);
        let lap = c.laplacian(&p, Ambient::Euclidean).unwrap();
        for w in c.group().elements().iter().take(8) {
            let lhs = lap.substitute_linear(w).unwrap();
            let rhs = c.laplacian(&p.substitute_linear(w).unwrap(), Ambient::Euclidean).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn radial_functions_have_zero_gamma() {
    for spec in GROUPS {
        let c = ctx(spec);
        let q = Polynomial::radial_square(c.dim());
        for j in 0..=3 {
            let radial = Polynomial::from_scalar_poly(c.dim(), Blade::SCALAR, q.pow(j));
            assert!(c.gamma(&radial).unwrap().is_zero(), "{spec} j={j}");
        }
    }
}

#[test]
fn dirac_of_vector_variable_is_minus_mu() {
    for spec in GROUPS {
        let c = ctx(spec);
        let x = Polynomial::vector_variable(c.dim());
        let expected = Polynomial::one(c.dim()).scale(&-c.mu());
        assert_eq!(c.dunkl_dirac(&x).unwrap(), expected, "{spec}");
        let radial = Polynomial::from_scalar_poly(c.dim(), Blade::SCALAR, Polynomial::radial_square(c.dim()));
        let two_mu = c.mu() * Rational::from_integer(2.into());
        assert_eq!(
            c.laplacian(&radial, Ambient::Euclidean).unwrap(),
            Polynomial::one(c.dim()).scale(&two_mu)
        );
    }
}

#[test]
fn gamma_eigenvalues_on_monogenic_bases() {
    for spec in GROUPS {
        let c = ctx(spec);
        let x = Polynomial::vector_variable(c.dim());
        for n in 0..=2u32 {
            let nq = Rational::from_integer(i64::from(n).into());
            for b in fueter::monogenic_basis(&c, n).unwrap().elements {
                assert_eq!(c.gamma(&b).unwrap(), b.scale(&-nq.clone()), "{spec} n={n}");
                let xb = &x * &b;
                let eig = c.mu() + nq.clone() - Rational::one();
                assert_eq!(c.gamma(&xb).unwrap(), xb.scale(&eig), "{spec} n={n}");
            }
        }
    }
}
