use super::*;
use crate::axial::seed_to_axial;
use crate::groups::ReflectionGroup;
use crate::poly::parse_polynomial;
use crate::random::{random_polynomial, seeded_rng, PolyShape};
use num_bigint::BigInt;
use num_rational::BigRational;

type Q = BigRational;
type P = CliffordPolynomial<Q>;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn p(text: &str, dim: usize) -> P {
    parse_polynomial(text, dim).unwrap()
}

fn ctx(spec: &str) -> DunklContext<Q> {
    DunklContext::new(ReflectionGroup::from_spec(spec).unwrap()).unwrap()
}

fn seed(j: u32, k: u32) -> AxialPair<Q> {
    seed_to_axial(ComplexSeed::new(j, k)).unwrap()
}

/// Rank by plain Gauss–Jordan on rationals, independent of the
/// fraction-free routine.
fn naive_rank(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> Q) -> usize {
    let mut m: Vec<Vec<Q>> = (0..rows).map(|i| (0..cols).map(|j| entry(i, j)).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != q(0, 1)) else {
            continue;
        };
        m.swap(rank, piv);
        let pv = m[rank][c].clone();
        for r in 0..rows {
            if r != rank && m[r][c] != q(0, 1) {
                let f = m[r][c].clone() / pv.clone();
                for j in 0..cols {
                    let v = m[rank][j].clone() * f.clone();
                    m[r][j] = m[r][j].clone() - v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn monogenicity_examples() {
    let c0 = ctx("a1:d=2:kappa=0,0");
    assert!(is_dunkl_monogenic(&c0, &P::one(2), MonogenicOperator::Dirac).unwrap().0);
    let (ok, r) = is_dunkl_monogenic(&c0, &p("x1*e1", 2), MonogenicOperator::Dirac).unwrap();
    assert!(!ok);
    assert_eq!(r, p("-1", 2));
    let c = ctx("a1:d=1:kappa=1/2");
    assert!(
        is_dunkl_monogenic(&c, &p("x1 - 2*x0*e1", 1), MonogenicOperator::CauchyRiemann)
            .unwrap()
            .0
    );
}

#[test]
fn basis_degree_zero_is_constants() {
    for spec in ["a1:d=2:kappa=1,1", "sd:d=3:kappa=1"] {
        let c = ctx(spec);
        let basis = monogenic_basis(&c, 0).unwrap();
        assert_eq!(basis.len(), 1 << c.dim());
        assert!(basis.elements.iter().all(|e| e.degree() == Some(0)));
    }
}

#[test]
fn basis_dimension_matches_rank_oracle() {
    for spec in [
        "a1:d=2:kappa=0,0",
        "a1:d=2:kappa=1,1",
        "bd:d=2:kappa=1,1/2",
        "sd:d=3:kappa=1",
    ] {
        let c = ctx(spec);
        let d = c.dim() as u64;
        for n in 0..=3u32 {
            let basis = monogenic_basis(&c, n).unwrap();
            let (_, m) = dirac_matrix(&c, n).unwrap();
            let rank = naive_rank(m.rows(), m.cols(), |i, j| m.get(i, j).clone());
            assert_eq!(basis.len(), m.cols() - rank, "{spec} n={n}");
            let expected = (1u64 << d) * binom(u64::from(n) + d - 2, d - 2);
            assert_eq!(basis.len() as u64, expected, "{spec} n={n}");
            for e in &basis.elements {
                assert!(c.dunkl_dirac(e).unwrap().is_zero());
                assert!(e.is_homogeneous_of(n));
            }
        }
    }
    let c0 = ctx("a1:d=2:kappa=0,0");
    let b1 = monogenic_basis(&c0, 1).unwrap();
    let space = CoefficientSpace::homogeneous(2, 1, false);
    for known in [p("x1*e1 - x2*e2", 2), p("x2*e1 + x1*e2", 2)] {
        let mut cols = b1.elements.clone();
        cols.push(known);
        assert_eq!(space.matrix(&cols).unwrap().rank(), b1.len());
    }
}

#[test]
fn fischer_examples() {
    let c0 = ctx("a1:d=2:kappa=0,0");
    let f = fischer_decompose(&c0, &p("x1^2", 2)).unwrap();
    assert_eq!(f.parts[0], p("1/4*x1^2 - 1/4*x2^2 - 1/2*x1*x2*e12", 2));
    assert_eq!(f.parts[1], p("-1/4*(x1*e1 - x2*e2)", 2));
    assert_eq!(f.parts[2], p("-1/2", 2));
    assert!(c0.dunkl_dirac(&f.parts[0]).unwrap().is_zero());
    assert_eq!(f.recompose(2), p("x1^2", 2));

    let c = ctx("bd:d=2:kappa=1,1/2");
    let m2 = monogenic_basis(&c, 2).unwrap().elements[0].clone();
    let f = fischer_decompose(&c, &m2).unwrap();
    assert_eq!(f.parts, vec![m2, P::zero(2), P::zero(2)]);

    let radial = p("(x1^2 + x2^2)*(2 - e12)", 2);
    let f = fischer_decompose(&c, &radial).unwrap();
    assert_eq!(f.parts, vec![P::zero(2), P::zero(2), p("-(2 - e12)", 2)]);
}

#[test]
fn fischer_errors() {
    let c = ctx("a1:d=2:kappa=1,1");
    assert_eq!(fischer_decompose(&c, &p("x1 + x2^2", 2)), Err(Error::NotHomogeneous));
    assert_eq!(fischer_decompose(&c, &p("x0*x1", 2)), Err(Error::DependsOnX0));
}

#[test]
fn fischer_rank_is_full() {
    for spec in ["a1:d=2:kappa=1/2,1", "sd:d=3:kappa=1"] {
        let c = ctx(spec);
        let d = c.dim() as u64;
        for n in 0..=3u32 {
            let (rank, dim) = fischer_rank(&c, n).unwrap();
            assert_eq!(dim as u64, (1u64 << d) * binom(u64::from(n) + d - 1, d - 1));
            assert_eq!(rank, dim);
        }
    }
}

#[test]
fn ck_examples() {
    let c = ctx("a1:d=2:kappa=1/3,2");
    assert_eq!(ck_extend(&c, &P::one(2)).unwrap(), P::one(2));
    assert_eq!(ck_extend(&c, &p("x1", 2)).unwrap(), p("x1 - 5/3*x0*e1", 2));
    assert_eq!(ck_extend(&c, &p("x0", 2)), Err(Error::DependsOnX0));
    let mut rng = seeded_rng(3);
    for _ in 0..5 {
        let g: P = random_polynomial(&mut rng, PolyShape::new(2, 4).spatial());
        let ext = ck_extend(&c, &g).unwrap();
        assert!(c.cauchy_riemann(&ext).unwrap().is_zero());
        assert_eq!(ext.substitute_value(0, &q(0, 1)), g);
    }
}

#[test]
fn embed_examples() {
    assert_eq!(embed_axial(&seed(0, 1), &P::one(3)), p("x0 + x1*e1 + x2*e2 + x3*e3", 3));
    assert_eq!(
        embed_axial(&seed(0, 2), &P::one(2)),
        p("x0^2 - x1^2 - x2^2 + 2*x0*(x1*e1 + x2*e2)", 2)
    );
    let factor = p("x1*e1 - x2*e2 + 3*x0*e12", 2);
    assert_eq!(embed_axial(&AxialPair::one(), &factor), factor);
}

#[test]
fn dirac_power_examples() {
    let c = ctx("a1:d=2:kappa=1/2,1");
    for n in 0..=2 {
        for b in monogenic_basis(&c, n).unwrap().elements.iter().take(3) {
            for k in 0..=3 {
                assert!(dirac_power_check(&c, k, b).unwrap().passed(), "n={n} k={k}");
            }
        }
    }
    assert_eq!(c.dunkl_dirac(&P::vector_variable(2)).unwrap(), p("-5", 2));
}

#[test]
fn laplacian_power_examples() {
    let c = ctx("a1:d=2:kappa=1/2,1");
    let b1 = monogenic_basis(&c, 1).unwrap().elements[0].clone();
    for part in [AxialPart::Scalar, AxialPart::Vector] {
        assert!(laplacian_power_check(&c, 0, &seed(1, 2), &b1, part).unwrap().passed());
        assert!(laplacian_power_check(&c, 2, &seed(0, 3), &b1, part).unwrap().passed());
    }
    let c0 = ctx("a1:d=3:kappa=0,0,0");
    let radial = AxialPair::new(AxialPair::<Q>::q(), ScalarPoly::zero(2));
    assert!(laplacian_power_check(&c0, 1, &radial, &P::one(3), AxialPart::Scalar)
        .unwrap()
        .passed());
    assert_eq!(
        c0.laplacian(&embed_axial(&radial, &P::one(3)), Ambient::Paravector)
            .unwrap(),
        p("6", 3)
    );
}

#[test]
fn axial_fueter_classical_examples() {
    let c0 = ctx("a1:d=3:kappa=0,0,0");
    let out = axial_fueter(&c0, ComplexSeed::new(0, 2), 0, &P::one(3), Default::default()).unwrap();
    assert_eq!(out.result, p("-4", 3));
    assert_eq!(out.exponent, 1);
    assert!(out.report.passed());
    let out = axial_fueter(&c0, ComplexSeed::new(0, 3), 0, &P::one(3), Default::default()).unwrap();
    assert_eq!(out.result, p("-12*x0 - 4*(x1*e1 + x2*e2 + x3*e3)", 3));
    assert!(out.report.passed());
}

#[test]
fn axial_fueter_dunkl_example() {
    let c = ctx("a1:d=2:kappa=1/2,1");
    let out = axial_fueter(&c, ComplexSeed::new(1, 3), 1, &P::one(2), Default::default()).unwrap();
    assert_eq!(out.exponent, 3);
    assert!(out.report.passed(), "{:?}", out.report);
}

#[test]
fn axial_fueter_preconditions() {
    let even = ctx("a1:d=2:kappa=1,1");
    assert!(matches!(
        axial_fueter(&even, ComplexSeed::new(0, 1), 0, &P::one(2), Default::default()),
        Err(Error::ParityViolation { .. })
    ));
    let c = ctx("a1:d=2:kappa=1/2,1");
    assert_eq!(
        axial_fueter(&c, ComplexSeed::new(2, 1), 1, &P::one(2), Default::default()).unwrap_err(),
        Error::SeedOrderTooHigh { j: 2, k: 1, m: 1 }
    );
    let opts = AxialFueterOptions {
        allow_high_seed: true,
        ..Default::default()
    };
    assert!(axial_fueter(&c, ComplexSeed::new(2, 1), 1, &P::one(2), opts).is_ok());
}

#[test]
fn axial_fueter_negative_controls_find_residuals() {
    let c0 = ctx("a1:d=3:kappa=0,0,0");
    let lowered = AxialFueterOptions {
        exponent: Some(0),
        ..Default::default()
    };
    let out = axial_fueter(&c0, ComplexSeed::new(0, 2), 0, &P::one(3), lowered).unwrap();
    assert!(!out.report.passed());
    let high = AxialFueterOptions {
        allow_high_seed: true,
        ..Default::default()
    };
    let out = axial_fueter(&c0, ComplexSeed::new(1, 3), 0, &P::one(3), high).unwrap();
    assert!(!out.report.passed());
}

#[test]
fn paravector_fueter_agrees_with_axial_on_x0_free_factors() {
    let c = ctx("a1:d=3:kappa=1,0,0");
    let b1 = monogenic_basis(&c, 1).unwrap();
    for factor in b1.elements.iter().take(4) {
        for k in 0..=3 {
            let a = paravector_fueter(&c, k, factor).unwrap();
            let b = axial_fueter(&c, ComplexSeed::new(0, k), 0, factor, Default::default()).unwrap();
            assert!(a.report.passed(), "{:?}", a.report);
            assert_eq!(a.result, b.result);
        }
    }
}

#[test]
fn paravector_fueter_with_ck_factor() {
    let c0 = ctx("a1:d=3:kappa=0,0,0");
    let mut rng = seeded_rng(11);
    for n in 0..=2 {
        let g: P = random_polynomial(&mut rng, PolyShape::new(3, n).spatial().homogeneous().terms(3));
        let factor = ck_extend(&c0, &g).unwrap();
        for k in 0..=3 {
            let out = paravector_fueter(&c0, k, &factor).unwrap();
            assert!(out.report.passed(), "{:?}", out.report);
        }
    }
}

#[test]
fn paravector_fueter_preconditions() {
    let c = ctx("a1:d=2:kappa=1/2,1");
    assert!(matches!(
        paravector_fueter(&c, 1, &p("x1*e1", 2)),
        Err(Error::FactorNotMonogenic { .. })
    ));
    assert_eq!(
        paravector_fueter(&c, 1, &p("1 + x0", 2)).unwrap_err(),
        Error::NotHomogeneous
    );
}

#[test]
fn ck_shape_examples() {
    let c = ctx("a1:d=2:kappa=1/2,1");
    let b = monogenic_basis(&c, 1).unwrap().elements[0].clone();
    let r = ck_shape_check(&c, 0, &b).unwrap();
    assert!(r.passed());
    assert_eq!(r.notes, vec!["c_j = [1]"]);
    let a1 = ctx("a1:d=1:kappa=1/2");
    let r = ck_shape_check(&a1, 1, &P::one(1)).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.notes, vec!["c_j = [1, 2]"]);
    let c0 = ctx("a1:d=2:kappa=0,0");
    let r = ck_shape_check(&c0, 2, &P::one(2)).unwrap();
    assert!(r.passed(), "{r:?}");
}
