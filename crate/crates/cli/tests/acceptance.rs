//! End-to-end acceptance criteria, all at exact equality. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dunkl_cli::{emit_json, run_suite, CaseSpec, CliError, Suite, SuiteRun};
use dunkl_core::fueter;
use dunkl_core::random::{random_polynomial, seeded_rng, PolyShape};
use dunkl_core::{Ambient, Blade, DunklContext, Error, Polynomial, Rational, ReflectionGroup};

const A1_2: &str = "a1:d=2:kappa=1/2,1";
const S3: &str = "sd:d=3:kappa=1";
const B2: &str = "bd:d=2:kappa=1,1/2";
const A1_3: &str = "a1:d=3:kappa=1,0,0";
const CLASSICAL_3: &str = "a1:d=3:kappa=0,0,0";

/// One instance per built-in family, plus the classical case.
const ALL_GROUPS: [&str; 8] = [
    A1_2,
    A1_3,
    CLASSICAL_3,
    S3,
    B2,
    "bd:d=3:kappa=1/3,2",
    "b2:kappa=2,1/5",
    "a1:d=1:kappa=1/2",
];
const MU_ODD: [&str; 3] = [A1_2, A1_3, CLASSICAL_3];
const MU_EVEN: [&str; 2] = ["a1:d=2:kappa=1,1", "b2:kappa=1,1/2"];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ctx(spec: &str) -> DunklContext {
    DunklContext::new(ReflectionGroup::from_spec(spec).unwrap()).unwrap()
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

/// Every suite run, kept for the determinism replay.
#[derive(Default)]
struct Recorder {
    runs: Vec<(CaseSpec, String)>,
    elapsed: Duration,
}

impl Recorder {
    fn run(&mut self, suite: Suite, group: &str, tweak: impl FnOnce(&mut CaseSpec)) -> Result<SuiteRun, String> {
        let mut spec = CaseSpec::new(suite, group);
        tweak(&mut spec);
        let start = Instant::now();
        let run = run_suite(&spec).map_err(|e| format!("{suite} on {group}: {e}"))?;
        self.elapsed += start.elapsed();
        self.runs.push((spec, emit_json(&run)));
        Ok(run)
    }

    fn passing(&mut self, suite: Suite, group: &str) -> Result<SuiteRun, String> {
        let run = self.run(suite, group, |_| {})?;
        let (_, fail) = run.summary();
        ensure(fail == 0, || {
            let first = run.reports.iter().find(|r| !r.passed()).unwrap();
            format!("{suite} on {group}: {fail} failing checks, first in {}", first.case_id)
        })?;
        Ok(run)
    }
}

fn timed(limit: Duration, start: Instant) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.1?}, limit {limit:?}"))?;
    Ok(format!("{took:.1?}"))
}

fn commutativity(rec: &mut Recorder) -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for g in [A1_2, S3, B2] {
        let run = rec.passing(Suite::Commute, g)?;
        ensure(run.reports.len() == 20, || format!("{g}: {} inputs", run.reports.len()))?;
        cases += run.reports.len();
    }
    Ok(format!(
        "{cases} random inputs of degree <= 5, {}",
        timed(Duration::from_secs(30), start)?
    ))
}

fn classical_reduction() -> Outcome {
    let start = Instant::now();
    for d in 1..=3usize {
        let c = DunklContext::new(ReflectionGroup::classical(d).unwrap()).unwrap();
        for seed in 0..20 {
            let p: Polynomial = random_polynomial(&mut seeded_rng(seed), PolyShape::new(d, 5));
            let mut dirac = Polynomial::zero(d);
            let mut lap = Polynomial::zero(d);
            let mut angular = Polynomial::zero(d);
            for i in 0..=d {
                let di = p.partial_derivative(i).unwrap();
                ensure(c.dunkl_derivative(i, &p).unwrap() == di, || {
                    format!("T_{i} d={d} seed={seed}")
                })?;
                if i > 0 {
                    dirac = &dirac + &di.left_mul_blade(Blade::generator(i));
                    lap = &lap + &di.partial_derivative(i).unwrap();
                }
            }
            for i in 1..=d {
                for j in i + 1..=d {
                    let xi_dj = &Polynomial::var(d, i) * &p.partial_derivative(j).unwrap();
                    let xj_di = &Polynomial::var(d, j) * &p.partial_derivative(i).unwrap();
                    let rot = (&xi_dj - &xj_di)
                        .left_mul_blade(Blade::generator(j))
                        .left_mul_blade(Blade::generator(i));
                    angular = &angular - &rot;
                }
            }
            let d00 = p.partial_derivative(0).unwrap().partial_derivative(0).unwrap();
            let cr = &p.partial_derivative(0).unwrap() + &dirac;
            ensure(c.dunkl_dirac(&p).unwrap() == dirac, || {
                format!("Dirac d={d} seed={seed}")
            })?;
            ensure(c.cauchy_riemann(&p).unwrap() == cr, || format!("CR d={d} seed={seed}"))?;
            ensure(c.laplacian(&p, Ambient::Euclidean).unwrap() == lap, || {
                format!("Laplacian d={d}")
            })?;
            ensure(c.laplacian(&p, Ambient::Paravector).unwrap() == &lap + &d00, || {
                format!("full Laplacian d={d}")
            })?;
            ensure(c.gamma(&p).unwrap() == angular, || format!("Gamma d={d} seed={seed}"))?;
        }
    }
    let c = ctx(CLASSICAL_3);
    let x0 = Polynomial::var(3, 0);
    let q = Polynomial::from_scalar_poly(3, Blade::SCALAR, Polynomial::radial_square(3));
    let seed = &(&(&x0 * &x0) - &q) + &(&x0 * &Polynomial::vector_variable(3)).scale(&rat(2));
    let lap = c.laplacian(&seed, Ambient::Paravector).unwrap();
    ensure(lap == Polynomial::one(3).scale(&rat(-4)), || {
        format!("Laplacian of the seed is {lap}")
    })?;
    ensure(c.cauchy_riemann(&lap).unwrap().is_zero(), || {
        "classical Fueter image not monogenic".into()
    })?;
    Ok(format!(
        "d = 1..3 on 20 inputs each, classical image -4, {}",
        timed(Duration::from_secs(5), start)?
    ))
}

fn spherical_and_eigen(rec: &mut Recorder) -> (Outcome, Outcome) {
    let start = Instant::now();
    let mut spherical = Ok(0usize);
    let mut eigen = Ok(0usize);
    for g in ALL_GROUPS {
        let run = match rec.run(Suite::Gamma, g, |_| {}) {
            Ok(run) => run,
            Err(e) => return (Err(e.clone()), Err(e)),
        };
        let dim = ctx(g).dim();
        let sph: Vec<_> = run
            .reports
            .iter()
            .filter(|r| r.case_id.starts_with("gamma/spherical/"))
            .collect();
        if let Ok(n) = spherical.as_mut() {
            if sph.len() != 20 || sph.iter().any(|r| !r.passed()) {
                spherical = Err(format!("{g}: spherical identity failed or missing"));
            } else {
                *n += sph.len();
            }
        }
        if let Ok(count) = eigen.as_mut() {
            for n in 0..=3u64 {
                let prefix = format!("gamma/eigen/n={n}/");
                let cases: Vec<_> = run.reports.iter().filter(|r| r.case_id.starts_with(&prefix)).collect();
                let expected = if dim >= 2 {
                    (1usize << dim) * binomial(n + dim as u64 - 2, dim as u64 - 2) as usize
                } else {
                    cases.len()
                };
                if cases.len() != expected || cases.iter().any(|r| !r.passed()) {
                    eigen = Err(format!(
                        "{g} n={n}: {} basis elements, expected {expected}",
                        cases.len()
                    ));
                    break;
                }
                *count += cases.len();
            }
        }
    }
    let took = timed(Duration::from_secs(30), start);
    let spherical = spherical.and_then(|n| {
        Ok(format!(
            "{n} random inputs over {} groups, {}",
            ALL_GROUPS.len(),
            took.clone()?
        ))
    });
    let eigen = eigen.map(|n| format!("{n} basis elements, n <= 3"));
    (spherical, eigen)
}

fn dirac_powers(rec: &mut Recorder) -> Outcome {
    let mut cases = 0;
    for g in ALL_GROUPS {
        cases += rec.passing(Suite::DiracPower, g)?.reports.len();
        let c = ctx(g);
        let dx = c.dunkl_dirac(&Polynomial::vector_variable(c.dim())).unwrap();
        ensure(dx == Polynomial::one(c.dim()).scale(&-c.mu()), || {
            format!("{g}: Dirac of x is {dx}")
        })?;
    }
    Ok(format!("{cases} cases with k <= 4, n <= 2"))
}

fn laplacian_powers(rec: &mut Recorder) -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for g in MU_ODD {
        cases += rec.passing(Suite::LaplacianPower, g)?.reports.len();
    }
    Ok(format!("{cases} cases, {}", timed(Duration::from_secs(120), start)?))
}

fn axial_fueter_grid(rec: &mut Recorder) -> Outcome {
    let mut cases = 0;
    let mut nonzero = 0;
    for g in MU_ODD {
        let run = rec.passing(Suite::AxialFueter, g)?;
        for r in &run.reports {
            let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
            ensure(
                names == ["dunkl-monogenic", "closed-form", "single-term", "vekua"],
                || format!("{}: checks {names:?}", r.case_id),
            )?;
            if !r.notes.iter().any(|n| n.contains("zero polynomial")) {
                nonzero += 1;
            }
        }
        cases += run.reports.len();
    }
    ensure(nonzero > 0, || "every result vanished".into())?;
    Ok(format!("{cases} cases, {nonzero} with nonzero image"))
}

fn ck_and_fischer(rec: &mut Recorder) -> Outcome {
    let mut ck = 0;
    for g in ALL_GROUPS {
        ck += rec.passing(Suite::Ck, g)?.reports.len();
        let run = rec.passing(Suite::Fischer, g)?;
        ensure(
            run.reports
                .iter()
                .filter(|r| r.case_id.starts_with("fischer/rank/"))
                .count()
                == 5,
            || format!("{g}: rank cases missing"),
        )?;
        let c = ctx(g);
        let d = c.dim() as u64;
        for n in 0..=4u32 {
            let (rank, _) = fueter::fischer_rank(&c, n).unwrap();
            let expected = (1usize << d) * binomial(u64::from(n) + d - 1, d - 1) as usize;
            ensure(rank == expected, || {
                format!("{g} n={n}: rank {rank}, dim P(n) = {expected}")
            })?;
        }
    }
    Ok(format!(
        "{ck} extensions, Fischer n <= 4 on {} groups",
        ALL_GROUPS.len()
    ))
}

fn paravector_fueter_grid(rec: &mut Recorder) -> Outcome {
    let mut cases = 0;
    for g in MU_ODD {
        let run = rec.passing(Suite::ParavectorFueter, g)?;
        for (kind, check) in [
            ("ck-factor", "ck-fischer-split"),
            ("x0-free", "matches-axial-fueter"),
            ("ck-shape", "polyanalytic-order"),
        ] {
            let prefix = format!("fueter43/{kind}/");
            let found = run
                .reports
                .iter()
                .filter(|r| r.case_id.starts_with(&prefix))
                .filter(|r| r.checks.iter().any(|c| c.name == check))
                .count();
            ensure(found > 0, || format!("{g}: no {kind} case with {check}"))?;
        }
        cases += run.reports.len();
    }
    Ok(format!("{cases} cases"))
}

fn negative_controls(rec: &mut Recorder) -> Outcome {
    let mut failing = 0;
    for g in MU_ODD {
        let run = rec.run(Suite::AxialFueter, g, |s| s.negative_control = true)?;
        ensure(run.succeeded(), || {
            format!("{g}: found failures only in {:?}", run.families_with_failures())
        })?;
        failing += run.summary().1;
    }
    for g in MU_EVEN {
        for suite in [Suite::AxialFueter, Suite::ParavectorFueter] {
            let refused = matches!(
                run_suite(&CaseSpec::new(suite, g)),
                Err(CliError::Engine(Error::ParityViolation { .. }))
            );
            ensure(refused, || format!("{suite} on {g} was not refused"))?;
        }
    }
    Ok(format!("{failing} expected failures, even mu refused"))
}

fn determinism(rec: &Recorder) -> Outcome {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    for (spec, first) in &rec.runs {
        let again = pool
            .install(|| run_suite(spec))
            .map_err(|e| format!("{} on {}: {e}", spec.suite, spec.group))?;
        ensure(emit_json(&again) == *first, || {
            format!("{} on {} changed between runs", spec.suite, spec.group)
        })?;
    }
    let total = rec.elapsed + start.elapsed();
    ensure(rec.elapsed < Duration::from_secs(300), || {
        format!("full suite took {:.1?}", rec.elapsed)
    })?;
    Ok(format!(
        "{} runs replayed, suite {:.1?}, both passes {total:.1?}",
        rec.runs.len(),
        rec.elapsed
    ))
}

fn main() -> ExitCode {
    let mut rec = Recorder::default();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    results.push((1, "Dunkl operators commute", commutativity(&mut rec)));
    results.push((2, "zero multiplicity is classical", classical_reduction()));
    let (spherical, eigen) = spherical_and_eigen(&mut rec);
    results.push((3, "spherical form xD + E + Gamma = 0", spherical));
    results.push((4, "Gamma eigenvalues on monogenic bases", eigen));
    results.push((5, "Dirac of x^k times a monogenic", dirac_powers(&mut rec)));
    results.push((6, "iterated Laplacian closed form", laplacian_powers(&mut rec)));
    results.push((7, "axial Fueter map is monogenic", axial_fueter_grid(&mut rec)));
    results.push((8, "CK extension and Fischer decomposition", ck_and_fischer(&mut rec)));
    results.push((
        9,
        "Fueter map with x0-dependent factor",
        paravector_fueter_grid(&mut rec),
    ));
    results.push((10, "negative controls", negative_controls(&mut rec)));
    results.push((11, "deterministic reports", determinism(&rec)));

    let mut ok = true;
    for (id, title, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS {id:>2} {title}: {detail}"),
            Err(why) => {
                ok = false;
                println!("FAIL {id:>2} {title}: {why}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
