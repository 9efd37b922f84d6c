//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use csmhyp::fixtures::{default_corpus, FixtureCase};
use csmhyp_core::charclasses::{
    analyze, csm, csm_normal_crossings, csm_smooth_singularity, csm_via_mu, csm_via_thickening, fulton,
    s_x_minus_y_binomial, segre_singular_nc, ClassReport, HypersurfaceInput,
};
use csmhyp_core::chowring::chern_tangent_pn;
use csmhyp_core::oracles::{affine_milnor_total, is_smooth_mod_p, segre_linear_subspace, smooth_chern_class, MilnorCount};
use csmhyp_core::polyalg::{parse_poly, Field, HomogeneousPolynomial, Monomial, PrimeField, RationalPolynomial, Rationals, DEFAULT_PRIMES};
use csmhyp_core::segreengine::{segre_from_degrees, ProjectiveDegrees, TrialPolicy};
use csmhyp_core::ChowClass;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cls(n: usize, c: &[i64]) -> ChowClass {
    ChowClass::from_ints(n, c)
}

fn poly(text: &str, nvars: usize) -> RationalPolynomial {
    parse_poly(text, nvars).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn report(text: &str, nvars: usize) -> Result<ClassReport, String> {
    analyze(&poly(text, nvars), &TrialPolicy::default()).map_err(|e| format!("{text}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> FixtureCase {
    default_corpus().into_iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no fixture {name}"))
}

fn fixture_report(name: &str) -> Result<ClassReport, String> {
    let f = fixture(name);
    report(&f.polynomial, f.n + 1)
}

fn monomials(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(pos: usize, nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == nvars - 1 {
            cur[pos] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, nvars, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, nvars, d, &mut vec![0; nvars], &mut out);
    out
}

/// Sparse random polynomial with small coefficients; sparse supports make
/// singular members likely.
fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, d: u32, dense: bool) -> RationalPolynomial {
    let all = monomials(nvars, d);
    loop {
        let count = if dense { all.len() } else { rng.random_range(1..=all.len().min(5)) };
        let terms: Vec<(Monomial, BigRational)> = (0..count)
            .map(|_| {
                let m = all[rng.random_range(0..all.len())];
                let mut c = rng.random_range(-5i64..=5);
                if c == 0 {
                    c = 1;
                }
                (m, Rationals.from_i64(c))
            })
            .collect();
        let f = HomogeneousPolynomial::from_terms(Rationals, nvars, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_corpus() -> Vec<RationalPolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let mut out = Vec::new();
    for i in 0..12 {
        out.push(random_poly(&mut rng, 3, 1 + (i % 4) as u32, false));
    }
    for i in 0..8 {
        out.push(random_poly(&mut rng, 4, 1 + (i % 3) as u32, false));
    }
    out
}

fn smooth_coincidence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let field = PrimeField::new(32003).unwrap();
    let mut checked = 0;
    for (nvars, dmax) in [(3usize, 4u32), (4, 3)] {
        for d in 1..=dmax {
            let fermat = (0..nvars).map(|i| format!("x{i}^{d}")).collect::<Vec<_>>().join(" + ");
            let mut polys = vec![poly(&fermat, nvars)];
            while polys.len() < 3 {
                let f = random_poly(&mut rng, nvars, d, true);
                if is_smooth_mod_p(&f, field).map_err(|e| e.to_string())? {
                    polys.push(f);
                }
            }
            for f in polys {
                let r = analyze(&f, &TrialPolicy::default()).map_err(|e| format!("{f}: {e}"))?;
                let n = nvars - 1;
                let closed = smooth_chern_class(n, d);
                ensure(r.classes.segre_singular.is_zero(), || format!("{f}: s(Y) = {}", r.classes.segre_singular))?;
                ensure(r.classes.csm == closed && r.classes.fulton == closed, || format!("{f}: csm {}", r.csm()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} smooth hypersurfaces, csm = fulton = closed form"))
}

fn euler_characteristics() -> Outcome {
    let expected = [
        ("nodal cubic", 1),
        ("cuspidal cubic", 2),
        ("two lines", 3),
        ("three generic lines", 3),
        ("quadric cone", 3),
    ];
    for (name, chi) in expected {
        let r = fixture_report(name)?;
        let integral = r.csm().integral();
        ensure(integral == BigRational::from_integer(chi.into()) && r.euler == chi, || {
            format!("{name}: chi = {integral}, expected {chi}")
        })?;
    }
    Ok("nodal 1, cusp 2, two lines 3, three lines 3, cone 3".into())
}

fn four_routes(r: &ClassReport, label: &str) -> Result<(), String> {
    let inp = &r.input;
    let compact = csm(inp).map_err(|e| format!("{label}: {e}"))?;
    let binomial = &chern_tangent_pn(inp.n) * &s_x_minus_y_binomial(inp);
    let thick = csm_via_thickening(inp);
    let mu = csm_via_mu(inp);
    ensure(compact == binomial && binomial == thick && thick == mu && compact == *r.csm(), || {
        format!("{label}: compact {compact}, binomial {binomial}, thickening {thick}, mu {mu}")
    })
}

fn four_route_identity() -> Outcome {
    let fixtures = default_corpus();
    for c in &fixtures {
        four_routes(&fixture_report(&c.name)?, &c.name)?;
    }
    let randoms = random_corpus();
    let mut singular = 0;
    for f in &randoms {
        let r = analyze(f, &TrialPolicy::default()).map_err(|e| format!("{f}: {e}"))?;
        if !r.classes.segre_singular.is_zero() {
            singular += 1;
        }
        four_routes(&r, &f.to_string())?;
    }
    Ok(format!("{} fixtures and {} random polynomials ({singular} singular)", fixtures.len(), randoms.len()))
}

fn milnor_identity() -> Outcome {
    let mut reports = Vec::new();
    for c in default_corpus() {
        reports.push((c.name.clone(), fixture_report(&c.name)?));
    }
    for f in random_corpus() {
        reports.push((f.to_string(), analyze(&f, &TrialPolicy::default()).map_err(|e| e.to_string())?));
    }
    for (name, r) in &reports {
        let n = r.n();
        let virt = fulton(&HypersurfaceInput::smooth(n, r.d()).unwrap()).integral();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let rhs = (BigRational::from_integer(r.euler.into()) - virt) * BigRational::from_integer(sign.into());
        ensure(r.classes.mu.integral() == rhs, || format!("{name}: integral of mu {} vs {rhs}", r.classes.mu.integral()))?;
    }
    for (name, chart, want) in [("nodal cubic", 2, 1u64), ("cuspidal cubic", 2, 2), ("quadric cone", 3, 1)] {
        let c = fixture(name);
        let oracle = affine_milnor_total(&poly(&c.polynomial, c.n + 1), chart, &DEFAULT_PRIMES).map_err(|e| e.to_string())?;
        let r = fixture_report(name)?;
        ensure(oracle == MilnorCount::Finite(want) && r.milnor_total == want as i64, || {
            format!("{name}: oracle {oracle:?}, report {}, expected {want}", r.milnor_total)
        })?;
    }
    Ok(format!("identity on {} reports; oracle node 1, cusp 2, cone vertex 1", reports.len()))
}

fn normal_crossings() -> Outcome {
    for (text, degrees, want) in [("x0*x1", vec![1, 1], cls(2, &[0, 2, 3])), ("x0*x1*x2", vec![1, 1, 1], cls(2, &[0, 3, 3]))] {
        let r = report(text, 3)?;
        let nc = csm_normal_crossings(2, &degrees).map_err(|e| e.to_string())?;
        let nc_segre = segre_singular_nc(2, &degrees).map_err(|e| e.to_string())?;
        ensure(nc == want && *r.csm() == want, || format!("{text}: nc {nc}, pipeline {}", r.csm()))?;
        ensure(nc_segre == r.classes.segre_singular, || {
            format!("{text}: nc segre {nc_segre}, engine {}", r.classes.segre_singular)
        })?;
    }
    Ok("(1,1) and (1,1,1) agree with the pipeline in csm and s(Y)".into())
}

fn reduced_invariance() -> Outcome {
    for (f, g) in [("x0^2*x1", "x0*x1"), ("x0^2", "x0")] {
        let a = report(f, 3)?;
        let b = report(g, 3)?;
        ensure(a.csm() == b.csm() && a.d() != b.d(), || format!("{f}: {} vs {g}: {}", a.csm(), b.csm()))?;
    }
    Ok("csm(x0^2 x1) = csm(x0 x1) = 2h + 3h^2, csm(x0^2) = csm(x0) = h + 2h^2".into())
}

fn smooth_singularity_shortcut() -> Outcome {
    for (name, cty, codim) in [("quadric cone", cls(3, &[0, 0, 0, 1]), 3), ("nodal cubic", cls(2, &[0, 0, 1]), 2)] {
        let r = fixture_report(name)?;
        let shortcut = csm_smooth_singularity(&r.input, &cty, codim).map_err(|e| e.to_string())?;
        ensure(shortcut == *r.csm(), || format!("{name}: shortcut {shortcut}, csm {}", r.csm()))?;
    }
    Ok("quadric cone and nodal cubic".into())
}

fn segre_engine_oracles() -> Outcome {
    for n in 1..=5 {
        for e in 0..=5u32 {
            let g = (0..=n).map(|j| (e as u64).pow(j as u32)).collect();
            let s = segre_from_degrees(&ProjectiveDegrees::from_values(n, e, g).unwrap()).map_err(|x| x.to_string())?;
            ensure(s.is_zero(), || format!("n={n} e={e}: {s}"))?;
        }
    }
    for (name, n) in [("nodal cubic", 2), ("two lines", 2), ("quadric cone", 3)] {
        let s = fixture_report(name)?.classes.segre_singular;
        let point = segre_linear_subspace(n, 0).unwrap();
        ensure(s == point && s == ChowClass::monomial(n, n, BigRational::from_integer(1.into())), || {
            format!("{name}: s(Y) = {s}")
        })?;
    }
    let mut runs = 0;
    for c in default_corpus() {
        let f = poly(&c.polynomial, c.n + 1);
        let mut seen: Vec<Vec<u64>> = Vec::new();
        for &p in &DEFAULT_PRIMES {
            for seeds in [vec![1, 2], vec![101, 202]] {
                let policy = TrialPolicy { primes: vec![p], seeds, ..Default::default() };
                let r = analyze(&f, &policy).map_err(|e| format!("{} at p={p}: {e}", c.name))?;
                seen.push(r.projective_degrees.unwrap());
                runs += 1;
            }
        }
        ensure(seen.windows(2).all(|w| w[0] == w[1]), || format!("{}: {seen:?}", c.name))?;
    }
    Ok(format!("telescoping for e <= 5, n <= 5; reduced points give h^n; {runs} prime/seed runs agree"))
}

fn random_class(rng: &mut ChaCha8Rng, n: usize) -> ChowClass {
    let coeffs = (0..=n)
        .map(|_| {
            let num = rng.random_range(-30i64..=30);
            let den = rng.random_range(1i64..=7);
            BigRational::new(num.into(), den.into())
        })
        .collect();
    ChowClass::new(n, coeffs).unwrap()
}

fn calculus_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let n = rng.random_range(0..=6);
        let a = random_class(&mut rng, n);
        let d1 = rng.random_range(-6i64..=6);
        let d2 = rng.random_range(-6i64..=6);
        ensure(a.dual().dual() == a, || format!("dual involution fails on {a}"))?;
        ensure(a.tensor(d1 + d2) == a.tensor(d1).tensor(d2), || format!("tensor composition fails on {a}, {d1}, {d2}"))?;
        ensure(a.tensor(d1).dual() == a.dual().tensor(-d1), || format!("dual/tensor sign fails on {a}, {d1}"))?;
    }
    Ok("100 random rational classes, n <= 6".into())
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_csmhyp");
    let args = ["compute", "x1^2*x2 - x0^3 - x0^2*x2", "--nvars", "3", "--prime", "65537", "--seed", "5", "--json"];
    let runs: Vec<Vec<u8>> = (0..3)
        .map(|_| Command::new(exe).args(args).output().map(|o| o.stdout).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    ensure(!runs[0].is_empty() && runs.windows(2).all(|w| w[0] == w[1]), || "JSON output differs between runs".into())?;
    let mut buf = Vec::new();
    csmhyp::run(std::iter::once("csmhyp").chain(args), &mut buf, &mut Vec::new());
    ensure(buf == runs[0], || "in-process output differs from the binary".into())?;
    Ok(format!("3 binary runs and 1 in-process run, {} identical bytes", runs[0].len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("smooth coincidence", smooth_coincidence),
        ("Euler characteristics of singular fixtures", euler_characteristics),
        ("four-route CSM identity", four_route_identity),
        ("Milnor identity and affine oracle", milnor_identity),
        ("normal-crossings consistency", normal_crossings),
        ("reduced invariance", reduced_invariance),
        ("smooth singular locus shortcut", smooth_singularity_shortcut),
        ("Segre engine oracles", segre_engine_oracles),
        ("Chow ring calculus laws", calculus_laws),
        ("deterministic JSON", determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(note) => println!("criterion {:>2} PASS  {name} ({note}) [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    let total = start.elapsed();
    println!("acceptance: {} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), total);
    if total.as_secs() >= 60 {
        println!("acceptance: FAIL  run exceeded 60 s");
        failed += 1;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
