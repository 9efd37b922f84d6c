//! Characteristic classes of a hypersurface `X = V(F) ⊂ P^n` of degree `d`,
//! evaluated from the Segre class `s_Y` of its singular scheme.
//!
//! Several routes to the CSM class are implemented independently and checked
//! against each other on every report:
//!
//! * `c(TP^n) · s(X∖Y)` with `s(X∖Y)` from the binomial sum,
//! * the same with the compact `s(X) + c(L)^{-1} (s_Y^∨ ⊗ L)`,
//! * Fulton's class of the thickening `X(k)` at `k = -1`,
//! * Fulton's class corrected by the μ-class.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::chowring::{chern_tangent_pn, make_class, rat, ChowClass};
use crate::error::{Error, Result};
use crate::polyalg::RationalPolynomial;
use crate::segreengine::{segre_singular_scheme, TrialPolicy, TrialRecord};

/// `X`, `L = O(d)` and the pushforward of `s(Y, P^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceInput {
    pub n: usize,
    pub d: u32,
    pub s_y: ChowClass,
}

impl HypersurfaceInput {
    pub fn new(n: usize, d: u32, s_y: ChowClass) -> Result<Self> {
        if d == 0 {
            return Err(Error::Input("degree must be at least 1".into()));
        }
        if s_y.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: s_y.n() });
        }
        if !s_y.coeff(0).is_zero() {
            return Err(Error::Input(format!("Segre class of a proper subscheme has no codimension-0 part: {s_y}")));
        }
        Ok(HypersurfaceInput { n, d, s_y })
    }

    pub fn smooth(n: usize, d: u32) -> Result<Self> {
        Self::new(n, d, ChowClass::zero(n))
    }

    fn di(&self) -> i64 {
        self.d as i64
    }
}

fn binom(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

fn pow_rat(base: i64, e: usize) -> BigRational {
    // 0^0 = 1
    num_traits::pow(rat(base), e)
}

/// `s(X, P^n) = d h / (1 + d h)`.
pub fn segre_x(n: usize, d: u32) -> ChowClass {
    let dh = ChowClass::monomial(n, 1, rat(d as i64));
    let inv = ChowClass::line_bundle(n, d as i64).inverse().expect("1 + dh is a unit");
    &dh * &inv
}

/// `s(X∖Y)` by the binomial sum: in codimension `c`,
/// `s(X)_c + (-1)^c sum_j C(c, j) d^j (s_Y)_{c-j}`.
pub fn s_x_minus_y_binomial(inp: &HypersurfaceInput) -> ChowClass {
    let sx = segre_x(inp.n, inp.d);
    let coeffs = (0..=inp.n)
        .map(|c| {
            let mut sum = BigRational::zero();
            for j in 0..=c {
                sum += binom(c, j) * pow_rat(inp.di(), j) * inp.s_y.coeff(c - j);
            }
            if c % 2 == 1 {
                sum = -sum;
            }
            sx.coeff(c) + sum
        })
        .collect();
    make_class(inp.n, coeffs).expect("length n + 1")
}

/// `s(X∖Y) = s(X) + c(L)^{-1} (s_Y^∨ ⊗ L)`.
pub fn s_x_minus_y_compact(inp: &HypersurfaceInput) -> ChowClass {
    let inv = ChowClass::line_bundle(inp.n, inp.di()).inverse().expect("unit");
    &segre_x(inp.n, inp.d) + &(&inv * &inp.s_y.dual().tensor(inp.di()))
}

fn csm_compact(inp: &HypersurfaceInput) -> ChowClass {
    &chern_tangent_pn(inp.n) * &s_x_minus_y_compact(inp)
}

fn csm_binomial(inp: &HypersurfaceInput) -> ChowClass {
    &chern_tangent_pn(inp.n) * &s_x_minus_y_binomial(inp)
}

/// The CSM class `c(TP^n) · s(X∖Y)`; errors if the two evaluations of
/// `s(X∖Y)` disagree.
pub fn csm(inp: &HypersurfaceInput) -> Result<ChowClass> {
    let a = csm_compact(inp);
    let b = csm_binomial(inp);
    if a != b {
        return Err(Error::Internal(format!("CSM routes disagree: {a} vs {b}")));
    }
    Ok(a)
}

/// Fulton's class `c(TP^n) · s(X)`.
pub fn fulton(inp: &HypersurfaceInput) -> ChowClass {
    &chern_tangent_pn(inp.n) * &segre_x(inp.n, inp.d)
}

/// `s(X(k))`: in codimension `c`,
/// `s(X)_c + sum_j C(c, j) (-d)^j k^{c-j} (s_Y)_{c-j}`.
pub fn segre_thickened(inp: &HypersurfaceInput, k: i64) -> ChowClass {
    let sx = segre_x(inp.n, inp.d);
    let coeffs = (0..=inp.n)
        .map(|c| {
            let mut sum = sx.coeff(c).clone();
            for j in 0..=c {
                sum += binom(c, j) * pow_rat(-inp.di(), j) * pow_rat(k, c - j) * inp.s_y.coeff(c - j);
            }
            sum
        })
        .collect();
    make_class(inp.n, coeffs).expect("length n + 1")
}

/// Fulton's class of the thickening `X(k)`.
pub fn fulton_thickened(inp: &HypersurfaceInput, k: i64) -> ChowClass {
    &chern_tangent_pn(inp.n) * &segre_thickened(inp, k)
}

pub fn csm_via_thickening(inp: &HypersurfaceInput) -> ChowClass {
    fulton_thickened(inp, -1)
}

/// `c(T*P^n ⊗ O(d)) = (1 + (d-1) h)^{n+1} / (1 + d h)`.
pub fn chern_twisted_cotangent(n: usize, d: u32) -> ChowClass {
    let num = ChowClass::line_bundle(n, d as i64 - 1).pow(n as u32 + 1);
    &num * &ChowClass::line_bundle(n, d as i64).inverse().expect("unit")
}

/// `μ_L(Y) = c(T*P^n ⊗ L) · s_Y`.
pub fn mu_class(inp: &HypersurfaceInput) -> ChowClass {
    &chern_twisted_cotangent(inp.n, inp.d) * &inp.s_y
}

/// `c_F(X) + c(L)^{n-1} (μ^∨ ⊗ L)`.
pub fn csm_via_mu(inp: &HypersurfaceInput) -> ChowClass {
    let l = ChowClass::line_bundle(inp.n, inp.di()).pow(inp.n.saturating_sub(1) as u32);
    &fulton(inp) + &(&l * &mu_class(inp).dual().tensor(inp.di()))
}

/// One named check in a report. `difference` is `left - right` for class
/// identities that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub name: String,
    pub pass: bool,
    pub difference: Option<ChowClass>,
    pub detail: Option<String>,
}

impl VerificationRecord {
    fn classes(name: &str, left: &ChowClass, right: &ChowClass) -> Self {
        let pass = left == right;
        VerificationRecord {
            name: name.to_string(),
            pass,
            difference: (!pass).then(|| left - right),
            detail: None,
        }
    }

    fn flag(name: &str, pass: bool, detail: Option<String>) -> Self {
        VerificationRecord { name: name.to_string(), pass, difference: None, detail }
    }
}

/// `∫ c(TP^n) / c(L) · [X]`, the Euler characteristic of a smooth member of
/// the linear system.
pub fn virtual_euler(n: usize, d: u32) -> Result<i64> {
    euler_characteristic(&fulton(&HypersurfaceInput::smooth(n, d)?))
}

/// `∫μ`, checked against `(-1)^n (χ(X) - χ_virtual)`.
pub fn milnor_total(inp: &HypersurfaceInput, euler: i64) -> Result<(i64, VerificationRecord)> {
    let mu = integer_of(&mu_class(inp).integral())?;
    let virt = virtual_euler(inp.n, inp.d)?;
    let sign = if inp.n.is_multiple_of(2) { 1 } else { -1 };
    let expected = sign * (euler - virt);
    let rec = VerificationRecord::flag(
        "milnor_identity",
        mu == expected,
        (mu != expected).then(|| format!("integral of mu = {mu}, (-1)^n (chi - chi_virtual) = {expected}")),
    );
    Ok((mu, rec))
}

/// `c_F(X) + (-1)^{codim Y} c(L)^{-1} · (c(TY) ∩ [Y])`, valid when `Y` is
/// smooth; `cty` is the pushforward of `c(TY) ∩ [Y]`.
pub fn csm_smooth_singularity(inp: &HypersurfaceInput, cty: &ChowClass, codim_y: usize) -> Result<ChowClass> {
    if cty.n() != inp.n {
        return Err(Error::DimensionMismatch { left: inp.n, right: cty.n() });
    }
    let inv = ChowClass::line_bundle(inp.n, inp.di()).inverse()?;
    let corr = &inv * cty;
    let corr = if codim_y % 2 == 1 { -&corr } else { corr };
    Ok(&fulton(inp) + &corr)
}

fn check_degrees(degrees: &[u32]) -> Result<()> {
    if degrees.is_empty() {
        return Err(Error::Input("need at least one component".into()));
    }
    if degrees.contains(&0) {
        return Err(Error::Input("component degrees must be positive".into()));
    }
    Ok(())
}

/// CSM class of a normal-crossings union of smooth hypersurfaces of the given
/// degrees: `(1 + h)^{n+1} (1 - prod (1 + d_i h)^{-1})`.
pub fn csm_normal_crossings(n: usize, degrees: &[u32]) -> Result<ChowClass> {
    check_degrees(degrees)?;
    let mut prod = ChowClass::one(n);
    for &d in degrees {
        prod = &prod * &ChowClass::line_bundle(n, d as i64);
    }
    Ok(&chern_tangent_pn(n) * &(&ChowClass::one(n) - &prod.inverse()?))
}

/// Segre class of the singular scheme of a normal-crossings union:
/// `(1 - (1 - D h) / prod (1 - d_i h)) ⊗ O(D)` with `D = sum d_i`.
pub fn segre_singular_nc(n: usize, degrees: &[u32]) -> Result<ChowClass> {
    check_degrees(degrees)?;
    let total: i64 = degrees.iter().map(|&d| d as i64).sum();
    let mut den = ChowClass::one(n);
    for &d in degrees {
        den = &den * &ChowClass::line_bundle(n, -(d as i64));
    }
    let num = ChowClass::line_bundle(n, -total);
    Ok((&ChowClass::one(n) - &num.try_div(&den)?).tensor(total))
}

fn integer_of(q: &BigRational) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::NonIntegral);
    }
    q.to_integer().to_i64().ok_or_else(|| Error::Internal(format!("integer {q} out of range")))
}

/// `∫ c`, which must be an integer.
pub fn euler_characteristic(c: &ChowClass) -> Result<i64> {
    integer_of(&c.integral()).map_err(|_| Error::Internal(format!("non-integral degree of {c}")))
}

/// Two smooth hypersurfaces of degrees `d1`, `d2` with smooth contact scheme
/// of dimension `dim_y` must have equal degrees unless the contact is
/// zero-dimensional.
pub fn contact_degree_check(d1: u32, d2: u32, dim_y: usize) -> bool {
    d1 == d2 || dim_y == 0
}

/// Value at `x` of the polynomial through `(xs[i], ys[i])`.
fn lagrange_eval(xs: &[i64], ys: &[BigRational], x: i64) -> BigRational {
    let mut total = BigRational::zero();
    for (i, yi) in ys.iter().enumerate() {
        let mut term = yi.clone();
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                term = term * rat(x - xj) / rat(xs[i] - xj);
            }
        }
        total += term;
    }
    total
}

/// Interpolates `k ↦ s(X(k))` through `k = 0..=n` and checks that the
/// interpolant reproduces the values at `k = n + 1` and `k = -1`.
pub fn thickening_polynomiality(inp: &HypersurfaceInput) -> bool {
    let n = inp.n;
    let xs: Vec<i64> = (0..=n as i64).collect();
    let samples: Vec<ChowClass> = xs.iter().map(|&k| segre_thickened(inp, k)).collect();
    [n as i64 + 1, -1].iter().all(|&k| {
        let actual = segre_thickened(inp, k);
        (0..=n).all(|c| {
            let ys: Vec<BigRational> = samples.iter().map(|s| s.coeff(c).clone()).collect();
            lagrange_eval(&xs, &ys, k) == *actual.coeff(c)
        })
    })
}

/// Everything computed for one hypersurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub input: HypersurfaceInput,
    /// Absent when `s_Y` was supplied directly.
    pub projective_degrees: Option<Vec<u64>>,
    pub classes: ClassReportClasses,
    pub euler: i64,
    pub milnor_total: i64,
    pub verification: Vec<VerificationRecord>,
    pub trials: Vec<TrialRecord>,
}

/// The class-valued fields of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReportClasses {
    pub segre_singular: ChowClass,
    pub s_x_minus_y: ChowClass,
    pub csm: ChowClass,
    pub fulton: ChowClass,
    pub mu: ChowClass,
}

impl ClassReport {
    pub fn n(&self) -> usize {
        self.input.n
    }

    pub fn d(&self) -> u32 {
        self.input.d
    }

    pub fn csm(&self) -> &ChowClass {
        &self.classes.csm
    }

    pub fn fulton_thickened(&self, k: i64) -> ChowClass {
        fulton_thickened(&self.input, k)
    }

    pub fn all_pass(&self) -> bool {
        self.verification.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.verification.iter().filter(|v| !v.pass)
    }
}

/// Evaluates every class and every cross-check from `s_Y`.
pub fn report_from_segre(inp: HypersurfaceInput) -> Result<ClassReport> {
    let compact = csm_compact(&inp);
    let binomial = csm_binomial(&inp);
    let thick = csm_via_thickening(&inp);
    let via_mu = csm_via_mu(&inp);
    let fulton_class = fulton(&inp);
    let mu = mu_class(&inp);
    let s_xy = s_x_minus_y_compact(&inp);

    let integral = [&compact, &fulton_class, &mu, &s_xy, &inp.s_y].iter().all(|c| c.is_integral());
    let mut verification = alloc::vec![
        VerificationRecord::classes("binomial_route", &binomial, &compact),
        VerificationRecord::classes("thickening_route", &thick, &compact),
        VerificationRecord::classes("mu_route", &via_mu, &compact),
        VerificationRecord::flag("thickening_polynomial", thickening_polynomiality(&inp), None),
        VerificationRecord::flag("integrality", integral, None),
    ];
    if inp.s_y.is_zero() {
        verification.push(VerificationRecord::classes("smooth_coincidence", &compact, &fulton_class));
    }

    let euler = euler_characteristic(&compact)?;
    let (milnor, rec) = milnor_total(&inp, euler)?;
    verification.push(rec);

    Ok(ClassReport {
        classes: ClassReportClasses {
            segre_singular: inp.s_y.clone(),
            s_x_minus_y: s_xy,
            csm: compact,
            fulton: fulton_class,
            mu,
        },
        input: inp,
        projective_degrees: None,
        euler,
        milnor_total: milnor,
        verification,
        trials: Vec::new(),
    })
}

/// Full pipeline: singular scheme, projective degrees, Segre class, every
/// characteristic class and every cross-check.
pub fn analyze(f: &RationalPolynomial, policy: &TrialPolicy) -> Result<ClassReport> {
    let seg = segre_singular_scheme(f, policy)?;
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let inp = HypersurfaceInput::new(seg.degrees.n, d, seg.segre)?;
    let mut report = report_from_segre(inp)?;
    report.projective_degrees = Some(seg.degrees.g);
    report.trials = seg.degrees.trials;
    Ok(report)
}

/// Runs the pipeline on `F` and on its reduced form and compares the CSM
/// classes, which must agree.
pub fn reduced_invariance_check(
    f: &RationalPolynomial,
    f_red: &RationalPolynomial,
    policy: &TrialPolicy,
) -> Result<VerificationRecord> {
    if f.nvars() != f_red.nvars() {
        return Err(Error::DimensionMismatch { left: f.nvars(), right: f_red.nvars() });
    }
    let a = analyze(f, policy)?;
    let b = analyze(f_red, policy)?;
    Ok(VerificationRecord::classes("reduced_invariance", a.csm(), b.csm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_poly;
    use proptest::prelude::*;

    fn cls(n: usize, c: &[i64]) -> ChowClass {
        ChowClass::from_ints(n, c)
    }

    fn inp(n: usize, d: u32, s: &[i64]) -> HypersurfaceInput {
        HypersurfaceInput::new(n, d, cls(n, s)).unwrap()
    }

    #[test]
    fn input_validation() {
        assert!(HypersurfaceInput::new(2, 0, ChowClass::zero(2)).is_err());
        assert!(HypersurfaceInput::new(2, 2, cls(2, &[1, 0, 0])).is_err());
        assert!(HypersurfaceInput::new(2, 2, ChowClass::zero(3)).is_err());
    }

    #[test]
    fn segre_x_examples() {
        assert_eq!(segre_x(2, 2), cls(2, &[0, 2, -4]));
        assert_eq!(segre_x(3, 2), cls(3, &[0, 2, -4, 8]));
        assert_eq!(segre_x(1, 3), cls(1, &[0, 3]));
    }

    #[test]
    fn complement_segre_examples() {
        let smooth = HypersurfaceInput::smooth(2, 2).unwrap();
        assert_eq!(s_x_minus_y_binomial(&smooth), segre_x(2, 2));
        assert_eq!(s_x_minus_y_compact(&smooth), segre_x(2, 2));
        let lines = inp(2, 2, &[0, 0, 1]);
        assert_eq!(s_x_minus_y_binomial(&lines), cls(2, &[0, 2, -3]));
        assert_eq!(s_x_minus_y_compact(&lines), cls(2, &[0, 2, -3]));
        let cone = inp(3, 2, &[0, 0, 0, 1]);
        assert_eq!(s_x_minus_y_binomial(&cone), cls(3, &[0, 2, -4, 7]));
        assert_eq!(s_x_minus_y_compact(&cone), cls(3, &[0, 2, -4, 7]));
    }

    #[test]
    fn csm_and_fulton_examples() {
        let conic = HypersurfaceInput::smooth(2, 2).unwrap();
        let lines = inp(2, 2, &[0, 0, 1]);
        let cone = inp(3, 2, &[0, 0, 0, 1]);
        assert_eq!(csm(&conic).unwrap(), cls(2, &[0, 2, 2]));
        assert_eq!(csm(&lines).unwrap(), cls(2, &[0, 2, 3]));
        assert_eq!(csm(&cone).unwrap(), cls(3, &[0, 2, 4, 3]));
        assert_eq!(fulton(&conic), cls(2, &[0, 2, 2]));
        assert_eq!(fulton(&cone), cls(3, &[0, 2, 4, 4]));
        assert_eq!(fulton(&lines), cls(2, &[0, 2, 2]));
        for i in [&conic, &lines, &cone] {
            let c = csm(i).unwrap();
            assert_eq!(csm_via_thickening(i), c);
            assert_eq!(csm_via_mu(i), c);
        }
        assert_eq!(euler_characteristic(&csm(&cone).unwrap()).unwrap(), 3);
    }

    #[test]
    fn thickening_examples() {
        let cone = inp(3, 2, &[0, 0, 0, 1]);
        assert_eq!(segre_thickened(&cone, 0), segre_x(3, 2));
        assert_eq!(segre_thickened(&cone, -1), s_x_minus_y_binomial(&cone));
        // frozen after the interpolation check below: codim 3 is 8 + k^3 - 8
        assert_eq!(segre_thickened(&cone, 1), cls(3, &[0, 2, -4, 9]));
        let xs = [0, 1, 2, 3];
        let ys: Vec<BigRational> = xs.iter().map(|&k| segre_thickened(&cone, k).coeff(3).clone()).collect();
        assert_eq!(lagrange_eval(&xs, &ys, -1), *segre_thickened(&cone, -1).coeff(3));
        assert!(thickening_polynomiality(&cone));
    }

    #[test]
    fn mu_examples() {
        assert!(mu_class(&HypersurfaceInput::smooth(3, 4).unwrap()).is_zero());
        let cone = inp(3, 2, &[0, 0, 0, 1]);
        assert_eq!(mu_class(&cone), cls(3, &[0, 0, 0, 1]));
        let node = inp(2, 3, &[0, 0, 1]);
        assert_eq!(mu_class(&node), cls(2, &[0, 0, 1]));
        assert_eq!(csm_via_mu(&cone), cls(3, &[0, 2, 4, 3]));
    }

    #[test]
    fn milnor_examples() {
        let node = inp(2, 3, &[0, 0, 1]);
        let chi = euler_characteristic(&csm(&node).unwrap()).unwrap();
        assert_eq!(chi, 1);
        let (mu, rec) = milnor_total(&node, chi).unwrap();
        assert_eq!((mu, rec.pass), (1, true));
        let cusp = inp(2, 3, &[0, 0, 2]);
        let chi = euler_characteristic(&csm(&cusp).unwrap()).unwrap();
        assert_eq!(chi, 2);
        assert_eq!(milnor_total(&cusp, chi).unwrap().0, 2);
        let cone = inp(3, 2, &[0, 0, 0, 1]);
        assert_eq!(milnor_total(&cone, 3).unwrap(), (1, VerificationRecord::flag("milnor_identity", true, None)));
        assert!(!milnor_total(&cone, 4).unwrap().1.pass);
        assert_eq!(virtual_euler(2, 3).unwrap(), 0);
        assert_eq!(virtual_euler(3, 2).unwrap(), 4);
    }

    #[test]
    fn smooth_singularity_examples() {
        let cone = inp(3, 2, &[0, 0, 0, 1]);
        assert_eq!(csm_smooth_singularity(&cone, &cls(3, &[0, 0, 0, 1]), 3).unwrap(), csm(&cone).unwrap());
        let node = inp(2, 3, &[0, 0, 1]);
        assert_eq!(csm_smooth_singularity(&node, &cls(2, &[0, 0, 1]), 2).unwrap(), csm(&node).unwrap());
        let conic = HypersurfaceInput::smooth(2, 2).unwrap();
        assert_eq!(csm_smooth_singularity(&conic, &ChowClass::zero(2), 3).unwrap(), fulton(&conic));
    }

    #[test]
    fn normal_crossings_examples() {
        assert_eq!(csm_normal_crossings(2, &[1, 1]).unwrap(), cls(2, &[0, 2, 3]));
        assert_eq!(csm_normal_crossings(2, &[1, 1, 1]).unwrap(), cls(2, &[0, 3, 3]));
        for d in 1..=4 {
            assert_eq!(csm_normal_crossings(3, &[d]).unwrap(), csm(&HypersurfaceInput::smooth(3, d).unwrap()).unwrap());
            assert!(segre_singular_nc(3, &[d]).unwrap().is_zero());
        }
        assert_eq!(segre_singular_nc(2, &[1, 1]).unwrap(), cls(2, &[0, 0, 1]));
        assert_eq!(segre_singular_nc(2, &[1, 1, 1]).unwrap(), cls(2, &[0, 0, 3]));
        assert!(csm_normal_crossings(2, &[]).is_err());
        assert_eq!(euler_characteristic(&csm_normal_crossings(3, &[1]).unwrap()).unwrap(), 3);
    }

    #[test]
    fn contact_degree_examples() {
        assert!(contact_degree_check(2, 2, 1));
        assert!(!contact_degree_check(2, 3, 1));
        assert!(contact_degree_check(2, 5, 0));
    }

    #[test]
    fn euler_rejects_fractions() {
        let c = make_class(2, alloc::vec![rat(0), rat(0), BigRational::new(1.into(), 2.into())]).unwrap();
        assert!(matches!(euler_characteristic(&c), Err(Error::Internal(_))));
    }

    #[test]
    fn full_pipeline_examples() {
        let p = TrialPolicy::default();
        let r = analyze(&parse_poly("x0*x1", 3).unwrap(), &p).unwrap();
        assert_eq!(*r.csm(), cls(2, &[0, 2, 3]));
        assert_eq!(r.euler, 3);
        assert!(r.all_pass());
        let cone = analyze(&parse_poly("x0^2 + x1^2 + x2^2", 4).unwrap(), &p).unwrap();
        assert_eq!((cone.euler, cone.milnor_total), (3, 1));
        assert_eq!(cone.projective_degrees, Some(alloc::vec![1, 1, 1, 0]));
        let three = analyze(&parse_poly("x0*x1*x2", 3).unwrap(), &p).unwrap();
        assert_eq!(three.classes.segre_singular, segre_singular_nc(2, &[1, 1, 1]).unwrap());
        assert_eq!(*three.csm(), cls(2, &[0, 3, 3]));
    }

    #[test]
    fn reduced_invariance_examples() {
        let p = TrialPolicy::default();
        let pairs = [("x0^2*x1", "x0*x1"), ("x0^2", "x0"), ("x0*x1", "x0*x1")];
        for (f, g) in pairs {
            let rec = reduced_invariance_check(&parse_poly(f, 3).unwrap(), &parse_poly(g, 3).unwrap(), &p).unwrap();
            assert!(rec.pass, "{f} vs {g}: {rec:?}");
        }
        let x02 = analyze(&parse_poly("x0^2", 3).unwrap(), &p).unwrap();
        assert_eq!(*x02.csm(), cls(2, &[0, 1, 2]));
        assert_eq!(x02.classes.segre_singular, cls(2, &[0, 1, -1]));
    }

    fn segre_like(n: usize) -> impl Strategy<Value = HypersurfaceInput> {
        (1u32..6, proptest::collection::vec(-20i64..20, n)).prop_map(move |(d, tail)| {
            let mut c = alloc::vec![0i64];
            c.extend(tail);
            inp(n, d, &c)
        })
    }

    proptest! {
        #[test]
        fn four_routes_agree(inp in (1usize..6).prop_flat_map(segre_like)) {
            let c = csm(&inp).unwrap();
            prop_assert_eq!(&csm_via_thickening(&inp), &c);
            prop_assert_eq!(&csm_via_mu(&inp), &c);
            prop_assert!(thickening_polynomiality(&inp));
        }

        #[test]
        fn milnor_identity_is_an_identity(inp in (1usize..6).prop_flat_map(segre_like)) {
            let chi = euler_characteristic(&csm(&inp).unwrap()).unwrap();
            prop_assert!(milnor_total(&inp, chi).unwrap().1.pass);
        }

        #[test]
        fn smooth_coincidence(n in 1usize..7, d in 1u32..7) {
            let i = HypersurfaceInput::smooth(n, d).unwrap();
            prop_assert_eq!(csm(&i).unwrap(), fulton(&i));
            prop_assert!(mu_class(&i).is_zero());
        }
    }
}
