//! Segre class of the singular scheme of a hypersurface, through the
//! projective degrees of its gradient map.
//!
//! For `F` of degree `d` in `P^n` the partials define a rational map
//! `P^n --> P^n` of degree `e = d - 1` with base scheme `Y`. Its projective
//! degree `g_i` is the number of points of a generic `P^i ⊂ P^n` cut by `i`
//! generic combinations of the partials, off `Y`. The pushforward of the
//! Segre class of `Y` is then
//!
//! ```text
//! s(Y, P^n) = 1 - sum_j g_j h^j / (1 + e h)^{j+1}.
//! ```
//!
//! Everything algebraic runs over `F_p`, so degrees are accepted only when
//! independent trials (several seeds, escalating to further primes on any
//! disagreement) agree.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chowring::{rat, ChowClass};
use crate::error::{Error, Result};
use crate::idealcalc::{
    buchberger_with_stats, hilbert_series, leading_monomials, saturate_sparse, to_sparse, DimDegree, GbStats,
    IdealBasis, Ring, SparsePoly,
};
use crate::polyalg::{random_linear_combination, ModularPolynomial, PrimeField, RationalPolynomial, DEFAULT_PRIMES};

/// The jacobian scheme `Y` of `F` over one prime.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularSchemeData {
    pub n: usize,
    pub d: u32,
    /// The `n + 1` partials, zero ones included, in variable order.
    pub partials: Vec<ModularPolynomial>,
    /// Reduced Groebner basis of the partials.
    pub jacobian: IdealBasis,
    /// Dimension and degree of `V(partials)` in `P^n`.
    pub support: DimDegree,
    pub is_smooth: bool,
}

impl SingularSchemeData {
    pub fn field(&self) -> PrimeField {
        self.jacobian.field()
    }

    /// `codim Y` in `P^n`; `n + 1` for empty `Y`.
    pub fn codim(&self) -> usize {
        match self.support {
            DimDegree::Empty => self.n + 1,
            DimDegree::Scheme { dim, .. } => self.n - dim,
        }
    }
}

/// Builds `Y` from the partials alone; by the Euler relation `F` lies in
/// their ideal as long as `p` does not divide `deg F`.
pub fn jacobian_scheme(f: &ModularPolynomial) -> Result<SingularSchemeData> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let field = *f.field();
    let p = field.modulus();
    if d == 0 {
        return Err(Error::Degenerate("constant polynomial defines no hypersurface".into()));
    }
    if (d as u64).is_multiple_of(p) {
        return Err(Error::BadPrime { p, reason: format!("divides the degree {d}") });
    }
    let nvars = f.nvars();
    if nvars < 2 {
        return Err(Error::Input("need at least two variables".into()));
    }
    let partials = f.gradient()?;
    if partials.iter().all(ModularPolynomial::is_zero) {
        return Err(Error::Degenerate("all partial derivatives vanish".into()));
    }
    let jacobian = buchberger_with_stats(&IdealBasis::new(field, nvars, partials.clone())?, &mut GbStats::default())?;
    let support = crate::idealcalc::dim_degree(&jacobian)?;
    Ok(SingularSchemeData { n: nvars - 1, d, partials, jacobian, is_smooth: support.is_empty(), support })
}

/// One entry of the trial log.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    pub prime: u64,
    pub seed: u64,
    /// Empty when the trial failed.
    pub g: Vec<u64>,
    pub accepted: bool,
    pub failure: Option<String>,
}

/// How many independent trials to run and when to give up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialPolicy {
    /// Tried in order; later primes are used only after a disagreement.
    pub primes: Vec<u64>,
    /// Seeds used at each prime. When fewer than `agreement` are given the
    /// list is extended with `seeds[0] + 1, seeds[0] + 2, ...`.
    pub seeds: Vec<u64>,
    /// Number of agreeing trials needed to accept.
    pub agreement: usize,
    /// Total disagreements (including failed trials) tolerated before
    /// giving up.
    pub max_disagreements: usize,
    /// Fresh draws allowed per degree when a residual scheme comes out
    /// positive-dimensional.
    pub retries: usize,
}

impl Default for TrialPolicy {
    fn default() -> Self {
        TrialPolicy { primes: DEFAULT_PRIMES.to_vec(), seeds: vec![1, 2], agreement: 2, max_disagreements: 4, retries: 3 }
    }
}

impl TrialPolicy {
    pub fn with_seed(seed: u64) -> Self {
        TrialPolicy { seeds: vec![seed], ..Default::default() }
    }

    fn seeds_per_prime(&self) -> Vec<u64> {
        let base = self.seeds.first().copied().unwrap_or(1);
        let count = self.seeds.len().max(self.agreement);
        (0..count).map(|j| self.seeds.get(j).copied().unwrap_or(base.wrapping_add(j as u64))).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveDegrees {
    pub n: usize,
    /// Degree of the partials, `d - 1`.
    pub e: u32,
    pub g: Vec<u64>,
    pub trials: Vec<TrialRecord>,
}

impl ProjectiveDegrees {
    /// Degrees given directly, with an empty trial log.
    pub fn from_values(n: usize, e: u32, g: Vec<u64>) -> Result<Self> {
        if g.len() != n + 1 {
            return Err(Error::Input(format!("need {} projective degrees, got {}", n + 1, g.len())));
        }
        Ok(ProjectiveDegrees { n, e, g, trials: Vec::new() })
    }
}

fn random_matrix<R: Rng>(rng: &mut R, field: PrimeField, rows: usize, cols: usize) -> Vec<Vec<u64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.random_range(0..field.modulus())).collect()).collect()
}

/// `g_i` for one random draw: `None` if the residual scheme is not
/// zero-dimensional (non-generic draw).
fn degree_once<R: Rng>(s: &SingularSchemeData, i: usize, rng: &mut R, stats: &mut GbStats) -> Result<Option<u64>> {
    let field = s.field();
    let n = s.n;
    // a generic P^i, parametrized as x = A y
    let restrict = |f: &ModularPolynomial, a: &Option<Vec<Vec<u64>>>| match a {
        Some(a) => f.substitute_linear(a),
        None => Ok(f.clone()),
    };
    let a = (i < n).then(|| random_matrix(rng, field, n + 1, i + 1));
    let nonzero: Vec<ModularPolynomial> = s.partials.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut combos = Vec::with_capacity(i);
    for _ in 0..i {
        combos.push(random_linear_combination(&nonzero, rng)?.poly);
    }
    let ring = Ring::grevlex(field, i + 1);
    let j_gens: Vec<SparsePoly> =
        nonzero.iter().map(|p| restrict(p, &a).map(|q| to_sparse(&ring, &q))).collect::<Result<_>>()?;
    if j_gens.iter().all(SparsePoly::is_zero) {
        // the slice landed inside Y
        return Ok(None);
    }
    let i_gens: Vec<SparsePoly> =
        combos.iter().map(|p| restrict(p, &a).map(|q| to_sparse(&ring, &q))).collect::<Result<_>>()?;
    let sat = saturate_sparse(&ring, &i_gens, &j_gens, stats)?;
    match hilbert_series(&leading_monomials(&sat), i + 1).dim_degree() {
        DimDegree::Empty => Ok(Some(0)),
        DimDegree::Scheme { dim: 0, degree } => Ok(Some(degree)),
        DimDegree::Scheme { .. } => Ok(None),
    }
}

/// All projective degrees from one seed. Degree `i` draws from its own
/// ChaCha stream, so the degrees can be computed independently.
pub fn projective_degrees_once(s: &SingularSchemeData, seed: u64, retries: usize) -> Result<(Vec<u64>, GbStats)> {
    let n = s.n;
    let e = s.d - 1;
    let mut g = Vec::with_capacity(n + 1);
    let mut stats = GbStats::default();
    for i in 0..=n {
        let mut value = None;
        for attempt in 0..=retries {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream((attempt * (n + 1) + i) as u64);
            if let Some(v) = degree_once(s, i, &mut rng, &mut stats)? {
                value = Some(v);
                break;
            }
        }
        let v = value.ok_or_else(|| {
            Error::Probabilistic(format!("residual scheme for g_{i} stayed positive-dimensional after {retries} retries"))
        })?;
        let bound = (e as u64).checked_pow(i as u32).unwrap_or(u64::MAX);
        if v > bound {
            return Err(Error::Probabilistic(format!("g_{i} = {v} exceeds the Bezout bound {bound}")));
        }
        g.push(v);
    }
    if g[0] != 1 {
        return Err(Error::Probabilistic(format!("g_0 = {} (expected 1)", g[0])));
    }
    Ok((g, stats))
}

/// Outcome of the trial loop, with the scheme from the first accepted prime.
#[derive(Clone, Debug)]
pub struct DegreeRun {
    pub degrees: ProjectiveDegrees,
    pub scheme: SingularSchemeData,
    pub stats: GbStats,
}

/// Runs trials under `policy` until the projective degrees are accepted.
pub fn projective_degrees(f: &RationalPolynomial, policy: &TrialPolicy) -> Result<DegreeRun> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if policy.primes.is_empty() || policy.seeds.is_empty() {
        return Err(Error::Input("policy needs at least one prime and one seed".into()));
    }
    let n = f.nvars().saturating_sub(1);
    let e = d.saturating_sub(1);
    let mut log: Vec<TrialRecord> = Vec::new();
    let mut schemes: Vec<(u64, SingularSchemeData)> = Vec::new();
    let mut disagreements = 0usize;
    let mut stats = GbStats::default();
    let mut last_prime_error = None;

    for &p in &policy.primes {
        let field = match PrimeField::for_degree(p, d) {
            Ok(fl) => fl,
            Err(err) => {
                last_prime_error = Some(err);
                continue;
            }
        };
        let reduced = match f.reduce_mod_p(field) {
            Ok(r) => r,
            Err(err) => {
                last_prime_error = Some(err);
                continue;
            }
        };
        let scheme = jacobian_scheme(&reduced)?;
        let mut conflict_here = false;
        for seed in policy.seeds_per_prime() {
            let rec = match projective_degrees_once(&scheme, seed, policy.retries) {
                Ok((g, st)) => {
                    stats.absorb(&st);
                    TrialRecord { prime: p, seed, g, accepted: false, failure: None }
                }
                Err(Error::Probabilistic(msg)) => {
                    TrialRecord { prime: p, seed, g: Vec::new(), accepted: false, failure: Some(msg) }
                }
                Err(other) => return Err(other),
            };
            let failed = rec.failure.is_some();
            let new_value = !failed && log.iter().any(|r| r.failure.is_none() && r.g != rec.g);
            log.push(rec);
            if failed || new_value {
                disagreements += 1;
                conflict_here = true;
                if disagreements >= policy.max_disagreements {
                    return Err(Error::TrialsExhausted {
                        reason: format!("{disagreements} disagreeing or failed trials"),
                        log,
                    });
                }
            }
            if !schemes.iter().any(|(q, _)| *q == p) {
                schemes.push((p, scheme.clone()));
            }
            if let Some(value) = accepted_value(&log, policy.agreement) {
                for r in &mut log {
                    r.accepted = r.failure.is_none() && r.g == value;
                }
                let scheme = pick_scheme(&log, &schemes).unwrap_or_else(|| scheme.clone());
                return Ok(DegreeRun { degrees: ProjectiveDegrees { n, e, g: value, trials: log }, scheme, stats });
            }
            if conflict_here {
                // escalate to the next prime
                break;
            }
        }
    }
    if log.is_empty() {
        return Err(last_prime_error.unwrap_or_else(|| Error::Input("no usable prime".into())));
    }
    Err(Error::TrialsExhausted { reason: "schedule exhausted without agreement".into(), log })
}

fn pick_scheme(log: &[TrialRecord], schemes: &[(u64, SingularSchemeData)]) -> Option<SingularSchemeData> {
    let p = log.iter().find(|r| r.accepted)?.prime;
    schemes.iter().find(|(q, _)| *q == p).map(|(_, s)| s.clone())
}

/// A value is accepted once it has `agreement` votes and either nothing else
/// has been seen, or it was seen at two distinct primes and outvotes every
/// other value.
fn accepted_value(log: &[TrialRecord], agreement: usize) -> Option<Vec<u64>> {
    let ok: Vec<&TrialRecord> = log.iter().filter(|r| r.failure.is_none()).collect();
    let mut values: Vec<(&Vec<u64>, usize, Vec<u64>)> = Vec::new();
    for r in &ok {
        match values.iter_mut().find(|(v, _, _)| **v == r.g) {
            Some(entry) => {
                entry.1 += 1;
                if !entry.2.contains(&r.prime) {
                    entry.2.push(r.prime);
                }
            }
            None => values.push((&r.g, 1, vec![r.prime])),
        }
    }
    let (best, count, primes) = values.iter().max_by_key(|(_, c, _)| *c)?;
    if *count < agreement {
        return None;
    }
    if values.len() == 1 {
        return Some((*best).clone());
    }
    let runner_up = values.iter().filter(|(v, _, _)| v != best).map(|(_, c, _)| *c).max().unwrap_or(0);
    (primes.len() >= 2 && *count > runner_up).then(|| (*best).clone())
}

/// `s(Y, P^n) = 1 - sum_j g_j h^j / (1 + e h)^{j+1}`.
pub fn segre_from_degrees(pd: &ProjectiveDegrees) -> Result<ChowClass> {
    let n = pd.n;
    if pd.g.len() != n + 1 {
        return Err(Error::Input(format!("need {} projective degrees", n + 1)));
    }
    let inv = ChowClass::line_bundle(n, pd.e as i64).inverse()?;
    let mut sum = ChowClass::zero(n);
    let mut factor = inv.clone(); // h^j / (1 + e h)^{j+1}
    for (j, &gj) in pd.g.iter().enumerate() {
        if gj != 0 {
            sum = &sum + &factor.scale(&rat(gj as i64));
        }
        if j < n {
            factor = &(&factor * &inv) * &ChowClass::hyperplane(n);
        }
    }
    let s = &ChowClass::one(n) - &sum;
    if !s.coeff(0).is_zero_rational() {
        return Err(Error::Internal(format!("Segre class has nonzero codimension-0 part: {s}")));
    }
    Ok(s)
}

trait ZeroCheck {
    fn is_zero_rational(&self) -> bool;
}

impl ZeroCheck for num_rational::BigRational {
    fn is_zero_rational(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

/// Everything the Segre computation produced.
#[derive(Clone, Debug)]
pub struct SegreResult {
    pub segre: ChowClass,
    pub degrees: ProjectiveDegrees,
    pub scheme: SingularSchemeData,
    pub stats: GbStats,
}

/// `s(Y, P^n)` for the singular scheme of `F`, with the support checks:
/// zero exactly when `Y` is empty, and no components below `codim Y`.
pub fn segre_singular_scheme(f: &RationalPolynomial, policy: &TrialPolicy) -> Result<SegreResult> {
    let run = projective_degrees(f, policy)?;
    let segre = segre_from_degrees(&run.degrees)?;
    let scheme = run.scheme;
    if scheme.is_smooth != segre.is_zero() {
        return Err(Error::Internal(format!(
            "Segre class {segre} inconsistent with smoothness = {}",
            scheme.is_smooth
        )));
    }
    if let Some(low) = segre.lowest_codim() {
        if low < scheme.codim() {
            return Err(Error::Internal(format!(
                "Segre class {segre} has a component in codimension {low} < codim Y = {}",
                scheme.codim()
            )));
        }
    }
    Ok(SegreResult { segre, degrees: run.degrees, scheme, stats: run.stats })
}
