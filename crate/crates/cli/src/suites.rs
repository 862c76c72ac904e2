use rayon::prelude::*;

use dunkl_core::axial::ComplexSeed;
use dunkl_core::dunkl::euler_operator;
use dunkl_core::fueter::{self, AxialFueterOptions, AxialPart};
use dunkl_core::poly::parse_polynomial;
use dunkl_core::random::{random_polynomial, seeded_rng, PolyShape, SeededRng};
use dunkl_core::{DunklContext, GroupKind, MonogenicBasis, Polynomial, Rational, ReflectionGroup, VerificationReport};
use num_traits::Zero;

use crate::{CaseSpec, CliError, Suite, SuiteRun};

const RANDOM_INPUTS: usize = 20;

type CaseResult = Result<VerificationReport, CliError>;

/// Runs one suite. Cases are evaluated in parallel and reported in grid
/// order, so the output does not depend on scheduling.
pub fn run_suite(spec: &CaseSpec) -> Result<SuiteRun, CliError> {
    let ctx = spec.context()?;
    if spec.negative_control && spec.suite != Suite::AxialFueter {
        return Err(CliError::Usage(format!(
            "--negative-control is only defined for fueter31, not {}",
            spec.suite
        )));
    }
    let mut control_families = Vec::new();
    let reports = match spec.suite {
        Suite::Commute => commute(&ctx, spec)?,
        Suite::Gamma => gamma(&ctx, spec)?,
        Suite::DiracPower => dirac_powers(&ctx, spec)?,
        Suite::LaplacianPower => laplacian_powers(&ctx, spec)?,
        Suite::AxialFueter if spec.negative_control => {
            control_families = vec![EXPONENT_FAMILY.to_string(), SEED_FAMILY.to_string()];
            axial_fueter_controls(&ctx, spec)?
        }
        Suite::AxialFueter => axial_fueter_grid(&ctx, spec)?,
        Suite::ParavectorFueter => paravector_fueter_grid(&ctx, spec)?,
        Suite::Fischer => fischer(&ctx, spec)?,
        Suite::Ck => ck(&ctx, spec)?,
        Suite::ValidateGroup => {
            let mut r = ctx.group().validate();
            r.case_id = "validate-group".into();
            vec![r]
        }
    };
    Ok(finish(
        spec.suite.name(),
        &ctx,
        spec.rand_seed,
        spec.negative_control,
        reports,
        control_families,
    ))
}

fn finish(
    title: &str,
    ctx: &DunklContext,
    rand_seed: u64,
    negative_control: bool,
    mut reports: Vec<VerificationReport>,
    control_families: Vec<String>,
) -> SuiteRun {
    for r in &mut reports {
        r.rand_seed = Some(rand_seed);
    }
    SuiteRun {
        title: title.to_string(),
        group: ctx.group().name().to_string(),
        mu: ctx.mu().to_string(),
        rand_seed,
        negative_control,
        reports,
        control_families,
    }
}

fn par_cases<T: Sync>(
    cases: &[T],
    f: impl Fn(&T) -> CaseResult + Sync + Send,
) -> Result<Vec<VerificationReport>, CliError> {
    cases.par_iter().map(f).collect()
}

/// Independent stream per grid coordinate.
fn case_rng(rand_seed: u64, coords: &[u64]) -> SeededRng {
    let mixed = coords.iter().fold(rand_seed ^ 0x9e37_79b9_7f4a_7c15, |acc, &c| {
        (acc ^ c).wrapping_mul(0x0100_0000_01b3).rotate_left(17)
    });
    seeded_rng(mixed)
}

fn budget(spec: &CaseSpec, case: &str, degree: u32) -> Result<(), CliError> {
    if degree > spec.max_degree {
        Err(CliError::DegreeBudget {
            case: case.to_string(),
            degree,
            limit: spec.max_degree,
        })
    } else {
        Ok(())
    }
}

fn range_or(pinned: Option<u32>, default_max: u32) -> Vec<u32> {
    match pinned {
        Some(v) => vec![v],
        None => (0..=default_max).collect(),
    }
}

fn random_inputs(spec: &CaseSpec, shape: PolyShape, tag: u64) -> Vec<Polynomial> {
    (0..RANDOM_INPUTS as u64)
        .map(|i| random_polynomial(&mut case_rng(spec.rand_seed, &[tag, i]), shape))
        .collect()
}

/// Fixed pseudo-random element of `M(n)` shared by every case of a run.
fn factor(bases: &[MonogenicBasis], spec: &CaseSpec, n: u32) -> Polynomial {
    fueter::random_monogenic(
        &bases[n as usize],
        &mut case_rng(spec.rand_seed, &[0xfac7, u64::from(n)]),
    )
}

fn commute(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    let degree = spec.n.unwrap_or(5);
    budget(spec, "commute", degree)?;
    let inputs = random_inputs(spec, PolyShape::new(ctx.dim(), degree), 1);
    let indexed: Vec<(usize, &Polynomial)> = inputs.iter().enumerate().collect();
    par_cases(&indexed, |&(idx, p)| {
        let mut r = VerificationReport::new(format!("commute/p{idx:02}"));
        let grad = ctx.dunkl_gradient(p)?;
        for i in 0..=ctx.dim() {
            for j in i + 1..=ctx.dim() {
                let diff = &ctx.dunkl_derivative(i, &grad[j])? - &ctx.dunkl_derivative(j, &grad[i])?;
                r.check(format!("T{i}T{j}=T{j}T{i}"), diff.is_zero(), &diff);
            }
        }
        Ok(r)
    })
}

fn gamma(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    let top = spec.n.unwrap_or(3);
    budget(spec, "gamma", top.max(4))?;
    let inputs = random_inputs(spec, PolyShape::new(ctx.dim(), 4).spatial(), 2);
    let x = Polynomial::vector_variable(ctx.dim());
    let indexed: Vec<(usize, &Polynomial)> = inputs.iter().enumerate().collect();
    let mut reports = par_cases(&indexed, |&(idx, p)| {
        let mut r = VerificationReport::new(format!("gamma/spherical/p{idx:02}"));
        let lhs = &(&(&x * &ctx.dunkl_dirac(p)?) + &euler_operator(p)) + &ctx.gamma(p)?;
        r.check("xD+E+Gamma=0", lhs.is_zero(), &lhs);
        Ok(r)
    })?;
    let bases = fueter::monogenic_bases(ctx, top)?;
    let cases: Vec<(u32, usize)> = bases
        .iter()
        .enumerate()
        .flat_map(|(n, b)| (0..b.len()).map(move |i| (n as u32, i)))
        .collect();
    reports.extend(par_cases(&cases, |&(n, i)| {
        let b = &bases[n as usize].elements[i];
        let mut r = VerificationReport::new(format!("gamma/eigen/n={n}/b{i:02}"));
        let nq = Rational::from_integer(n.into());
        let diff = &ctx.gamma(b)? - &b.scale(&-nq.clone());
        r.check("Gamma(M)=-nM", diff.is_zero(), &diff);
        let xb = &x * b;
        let eig = ctx.mu() + nq - Rational::from_integer(1.into());
        let diff = &ctx.gamma(&xb)? - &xb.scale(&eig);
        r.check("Gamma(xM)=(mu+n-1)xM", diff.is_zero(), &diff);
        Ok(r)
    })?);
    Ok(reports)
}

fn dirac_powers(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    let ns = range_or(spec.n, 2);
    let ks = range_or(spec.k, 4);
    let top = *ns.iter().max().unwrap_or(&0);
    let bases = fueter::monogenic_bases(ctx, top)?;
    let mut cases = Vec::new();
    for &n in &ns {
        for i in 0..bases[n as usize].len() {
            for &k in &ks {
                budget(spec, &format!("lemma21/n={n}/k={k}"), n + k)?;
                cases.push((n, i, k));
            }
        }
    }
    par_cases(&cases, |&(n, i, k)| {
        let mut r = fueter::dirac_power_check(ctx, k, &bases[n as usize].elements[i])?;
        r.case_id = format!("lemma21/n={n}/b{i:02}/k={k}");
        Ok(r)
    })
}

fn seeds(spec: &CaseSpec, default: impl Fn() -> Vec<ComplexSeed>) -> Vec<ComplexSeed> {
    spec.seed.map(|s| vec![s]).unwrap_or_else(default)
}

fn laplacian_powers(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    let ms = range_or(spec.m, 3);
    let ns = range_or(spec.n, 2);
    let seeds = seeds(spec, || {
        (0..=3)
            .flat_map(|k| [ComplexSeed::new(0, k), ComplexSeed::new(1, k)])
            .collect()
    });
    let bases = fueter::monogenic_bases(ctx, *ns.iter().max().unwrap_or(&0))?;
    let mut cases = Vec::new();
    for &n in &ns {
        let p = factor(&bases, spec, n);
        for &m in &ms {
            for &s in &seeds {
                let id = format!("lemma32/seed={s}/m={m}/n={n}");
                budget(spec, &id, s.j + s.k + n)?;
                for part in [AxialPart::Scalar, AxialPart::Vector] {
                    cases.push((id.clone(), s, m, p.clone(), part));
                }
            }
        }
    }
    par_cases(&cases, |(id, s, m, p, part)| {
        let x = dunkl_core::axial::seed_to_axial(*s)?;
        let mut r = fueter::laplacian_power_check(ctx, *m, &x, p, *part)?;
        let tag = match part {
            AxialPart::Scalar => "scalar",
            AxialPart::Vector => "vector",
        };
        r.case_id = format!("{id}/part={tag}");
        Ok(r)
    })
}

fn axial_fueter_grid(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    fueter::fueter_exponent(ctx, 0, 0)?;
    let ms = range_or(spec.m, 2);
    let ns = range_or(spec.n, 2);
    let bases = fueter::monogenic_bases(ctx, *ns.iter().max().unwrap_or(&0))?;
    let mut cases = Vec::new();
    for &n in &ns {
        let p = factor(&bases, spec, n);
        for &m in &ms {
            let grid = seeds(spec, || {
                (0..=m)
                    .flat_map(|j| (0..=3).map(move |k| ComplexSeed::new(j, k)))
                    .collect()
            });
            for s in grid {
                let id = format!("fueter31/seed={s}/m={m}/n={n}");
                budget(spec, &id, s.j + s.k + n)?;
                cases.push((id, s, m, p.clone()));
            }
        }
    }
    par_cases(&cases, |(id, s, m, p)| {
        let out = fueter::axial_fueter(ctx, *s, *m, p, AxialFueterOptions::default())?;
        let mut r = out.report;
        r.case_id = id.clone();
        r.note(format!("exponent = {}", out.exponent));
        Ok(r)
    })
}

const EXPONENT_FAMILY: &str = "exponent-minus-one";
const SEED_FAMILY: &str = "seed-above-order";

/// Deliberately broken variants: the exponent lowered by one, and seeds
/// with `j = m + 1`. Each family must produce a nonzero residual somewhere.
fn axial_fueter_controls(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    fueter::fueter_exponent(ctx, 0, 0)?;
    let ms = range_or(spec.m, 2);
    let ns = range_or(spec.n, 2);
    let bases = fueter::monogenic_bases(ctx, *ns.iter().max().unwrap_or(&0))?;
    let mut cases = Vec::new();
    for &n in &ns {
        let p = factor(&bases, spec, n);
        for &m in &ms {
            let exponent = fueter::fueter_exponent(ctx, m, n)?;
            let low: Vec<ComplexSeed> = match spec.seed {
                Some(s) => vec![s],
                None => (0..=m)
                    .flat_map(|j| (0..=spec.max_degree.saturating_sub(j + n)).map(move |k| ComplexSeed::new(j, k)))
                    .collect(),
            };
            if exponent > 0 {
                for s in low {
                    let id = format!("{EXPONENT_FAMILY}/seed={s}/m={m}/n={n}");
                    budget(spec, &id, s.j + s.k + n)?;
                    let opts = AxialFueterOptions {
                        allow_high_seed: true,
                        exponent: Some(exponent - 1),
                    };
                    cases.push((id, s, m, p.clone(), opts));
                }
            }
            let high: Vec<ComplexSeed> = match spec.seed {
                Some(s) => vec![ComplexSeed::new(m + 1, s.k)],
                None => (0..=spec.max_degree.saturating_sub(m + 1 + n))
                    .map(|k| ComplexSeed::new(m + 1, k))
                    .collect(),
            };
            for s in high {
                let id = format!("{SEED_FAMILY}/seed={s}/m={m}/n={n}");
                budget(spec, &id, s.j + s.k + n)?;
                let opts = AxialFueterOptions {
                    allow_high_seed: true,
                    exponent: None,
                };
                cases.push((id, s, m, p.clone(), opts));
            }
        }
    }
    par_cases(&cases, |(id, s, m, p, opts)| {
        let out = fueter::axial_fueter(ctx, *s, *m, p, *opts)?;
        let mut r = out.report;
        r.case_id = id.clone();
        r.note(format!("exponent = {}", out.exponent));
        Ok(r)
    })
}

enum Case43 {
    CkFactor { k: u32, n: u32 },
    X0Free { k: u32, n: u32 },
    CkShape { k: u32, n: u32 },
}

fn paravector_fueter_grid(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    fueter::fueter_exponent(ctx, 0, 0)?;
    let ns = range_or(spec.n, 2);
    let ks = range_or(spec.k, 3);
    let bases = fueter::monogenic_bases(ctx, *ns.iter().max().unwrap_or(&0))?;
    let mut cases = Vec::new();
    for &n in &ns {
        for &k in &ks {
            budget(spec, &format!("fueter43/k={k}/n={n}"), k + n)?;
            cases.push(Case43::CkFactor { k, n });
            cases.push(Case43::X0Free { k, n });
            if k <= 2 {
                cases.push(Case43::CkShape { k, n });
            }
        }
    }
    par_cases(&cases, |case| match *case {
        Case43::CkFactor { k, n } => {
            let mut rng = case_rng(spec.rand_seed, &[0x43, u64::from(n)]);
            let shape = PolyShape::new(ctx.dim(), n).spatial().homogeneous().terms(4);
            let g = loop {
                let g: Polynomial = random_polynomial(&mut rng, shape);
                if !g.is_zero() {
                    break g;
                }
            };
            let p = fueter::ck_extend(ctx, &g)?;
            let mut r = fueter::paravector_fueter(ctx, k, &p)?.report;
            r.case_id = format!("fueter43/ck-factor/k={k}/n={n}");
            Ok(r)
        }
        Case43::X0Free { k, n } => {
            let p = factor(&bases, spec, n);
            let out = fueter::paravector_fueter(ctx, k, &p)?;
            let other = fueter::axial_fueter(ctx, ComplexSeed::new(0, k), 0, &p, AxialFueterOptions::default())?;
            let mut r = out.report;
            r.case_id = format!("fueter43/x0-free/k={k}/n={n}");
            let diff = &out.result - &other.result;
            r.check("matches-axial-fueter", diff.is_zero(), &diff);
            Ok(r)
        }
        Case43::CkShape { k, n } => {
            let p = factor(&bases, spec, n);
            let mut r = fueter::ck_shape_check(ctx, k, &p)?;
            r.case_id = format!("fueter43/ck-shape/k={k}/n={n}");
            Ok(r)
        }
    })
}

fn fischer(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    let top = spec.n.unwrap_or(4);
    budget(spec, "fischer", top)?;
    let bases = fueter::monogenic_bases(ctx, top)?;
    let degrees: Vec<u32> = (0..=top).collect();
    let mut reports = par_cases(&degrees, |&n| {
        let mut r = VerificationReport::new(format!("fischer/rank/n={n}"));
        let (rank, dim) = fueter::fischer_rank(ctx, n)?;
        r.check("generators-span", rank == dim, format!("rank {rank} of {dim}"));
        Ok(r)
    })?;
    let inputs: Vec<(usize, Polynomial)> = (0..RANDOM_INPUTS)
        .map(|i| {
            let n = i as u32 % (top + 1);
            let shape = PolyShape::new(ctx.dim(), n).spatial().homogeneous();
            (
                i,
                random_polynomial(&mut case_rng(spec.rand_seed, &[3, i as u64]), shape),
            )
        })
        .collect();
    reports.extend(par_cases(&inputs, |(i, p)| {
        let mut r = VerificationReport::new(format!("fischer/round-trip/p{i:02}"));
        if p.is_zero() {
            r.note("input is zero");
            return Ok(r);
        }
        let f = fueter::fischer_decompose_with(&bases, p)?;
        r.absorb("", decomposition_report(ctx, &f, p)?);
        Ok(r)
    })?);
    Ok(reports)
}

fn decomposition_report(
    ctx: &DunklContext,
    f: &dunkl_core::FischerDecomposition,
    p: &Polynomial,
) -> Result<VerificationReport, CliError> {
    let mut r = VerificationReport::new("");
    let diff = &f.recompose(ctx.dim()) - p;
    r.check("recompose", diff.is_zero(), &diff);
    for (k, part) in f.parts.iter().enumerate() {
        let res = ctx.dunkl_dirac(part)?;
        r.check(format!("part{k}-monogenic"), res.is_zero(), &res);
    }
    Ok(r)
}

fn ck(ctx: &DunklContext, spec: &CaseSpec) -> Result<Vec<VerificationReport>, CliError> {
    let degree = spec.n.unwrap_or(4);
    budget(spec, "ck", degree)?;
    let inputs = random_inputs(spec, PolyShape::new(ctx.dim(), degree).spatial(), 4);
    let indexed: Vec<(usize, &Polynomial)> = inputs.iter().enumerate().collect();
    par_cases(&indexed, |&(i, g)| {
        let mut r = VerificationReport::new(format!("ck/g{i:02}"));
        r.absorb("", ck_report(ctx, g)?.0);
        Ok(r)
    })
}

fn ck_report(ctx: &DunklContext, g: &Polynomial) -> Result<(VerificationReport, Polynomial), CliError> {
    let mut r = VerificationReport::new("");
    let ext = fueter::ck_extend(ctx, g)?;
    let res = ctx.cauchy_riemann(&ext)?;
    r.check("cauchy-riemann", res.is_zero(), &res);
    let diff = &ext.substitute_value(0, &Rational::zero()) - g;
    r.check("restriction", diff.is_zero(), &diff);
    Ok((r, ext))
}

/// `fischer --poly`: decomposes one homogeneous polynomial.
pub fn fischer_poly(group: &str, text: &str, rand_seed: u64) -> Result<SuiteRun, CliError> {
    let ctx = DunklContext::new(ReflectionGroup::from_spec(group)?)?;
    let p: Polynomial = parse_polynomial(text, ctx.dim())?;
    let f = fueter::fischer_decompose(&ctx, &p)?;
    let mut r = decomposition_report(&ctx, &f, &p)?;
    r.case_id = format!("fischer/n={}", f.degree);
    for (k, part) in f.parts.iter().enumerate() {
        r.note(format!("x^{k} * M{} : {part}", f.degree - k as u32));
    }
    Ok(finish("fischer", &ctx, rand_seed, false, vec![r], Vec::new()))
}

/// `ck --poly`: extends one polynomial in `x̲`.
pub fn ck_poly(group: &str, text: &str, rand_seed: u64) -> Result<SuiteRun, CliError> {
    let ctx = DunklContext::new(ReflectionGroup::from_spec(group)?)?;
    let g: Polynomial = parse_polynomial(text, ctx.dim())?;
    let (mut r, ext) = ck_report(&ctx, &g)?;
    r.case_id = "ck".into();
    r.note(format!("CK = {ext}"));
    Ok(finish("ck", &ctx, rand_seed, false, vec![r], Vec::new()))
}

/// `basis --n`: a basis of the degree-`n` Dunkl-monogenics in `x̲`.
pub fn basis_listing(group: &str, n: u32, rand_seed: u64) -> Result<SuiteRun, CliError> {
    let ctx = DunklContext::new(ReflectionGroup::from_spec(group)?)?;
    let basis = fueter::monogenic_basis(&ctx, n)?;
    let reports = basis
        .elements
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let mut r = VerificationReport::new(format!("basis/n={n}/b{i:02}"));
            let res = ctx.dunkl_dirac(b)?;
            r.check("dirac-kernel", res.is_zero(), &res);
            r.note(format!("element = {b}"));
            Ok(r)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(finish("basis", &ctx, rand_seed, false, reports, Vec::new()))
}

pub fn list_groups() -> String {
    let mut out = String::new();
    for kind in GroupKind::all() {
        let (syntax, about) = match kind {
            GroupKind::A1 => ("a1:d=<d>:kappa=<k1>,...,<kd>", "Z_2^d, roots ±e_i, one value per axis"),
            GroupKind::Sd => ("sd:d=<d>:kappa=<k>", "S_d, roots ±(e_i - e_j)"),
            GroupKind::Bd => ("bd:d=<d>:kappa=<short>,<long>", "B_d, roots ±e_i and ±e_i±e_j"),
            GroupKind::B2Planar => ("b2:kappa=<short>,<long>", "dihedral group of order 8 in the plane"),
        };
        out.push_str(&format!("{:<5}{syntax:<34}{about}\n", kind.tag()));
    }
    out
}
