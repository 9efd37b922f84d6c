//! Closed-form and brute-force baselines the class computations are checked
//! against.

use alloc::format;
use alloc::vec::Vec;

use crate::chowring::{chern_tangent_pn, ChowClass};
use crate::error::{Error, Result};
use crate::idealcalc::{groebner, hilbert_series, leading_monomials, to_sparse, GbStats, IdealBasis, Ring, SparsePoly};
use crate::polyalg::{Monomial, PrimeField, RationalPolynomial, MAX_VARS};

/// `c(TX) ∩ [X]` for a smooth degree-`d` hypersurface:
/// `(1 + h)^{n+1} d h / (1 + d h)`.
pub fn smooth_chern_class(n: usize, d: u32) -> ChowClass {
    let dh = ChowClass::monomial(n, 1, crate::chowring::rat(d as i64));
    let inv = ChowClass::line_bundle(n, d as i64).inverse().expect("unit");
    &(&chern_tangent_pn(n) * &dh) * &inv
}

/// `s(P^m, P^n) = h^{n-m} / (1 + h)^{n-m}`.
pub fn segre_linear_subspace(n: usize, m: usize) -> Result<ChowClass> {
    if m >= n {
        return Err(Error::Input(format!("a linear subspace of P^{n} needs dimension below {n}, got {m}")));
    }
    let c = n - m;
    let hc = ChowClass::monomial(n, c, crate::chowring::rat(1));
    Ok(&hc * &ChowClass::line_bundle(n, 1).pow(c as u32).inverse()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MilnorCount {
    Finite(u64),
    NonIsolated,
}

/// Vector-space dimension of `k[x] / I` for a Groebner basis in a
/// degree-compatible order; `None` when infinite.
fn quotient_dimension(basis: &[SparsePoly], nvars: usize) -> Option<u64> {
    let num = hilbert_series(&leading_monomials(basis), nvars);
    match num.factor_one_minus_t() {
        None => Some(0),
        Some((k, q)) if k == nvars => Some(q.iter().sum::<i64>() as u64),
        Some(_) => None,
    }
}

/// Sends `x_i` (`i != chart`) to variable `i` or `i - 1` of the chart ring.
fn dehomogenize(ring: &Ring, f: &crate::polyalg::ModularPolynomial, chart: usize) -> SparsePoly {
    SparsePoly::from_terms(
        ring,
        f.terms().map(|(m, c)| {
            let exps: Vec<u32> = (0..f.nvars()).filter(|&i| i != chart).map(|i| m.exp(i)).collect();
            (Monomial::from_exponents(&exps), *c)
        }),
    )
}

fn milnor_at_prime(f: &RationalPolynomial, chart: usize, field: PrimeField) -> Result<MilnorCount> {
    let nvars = f.nvars();
    let fp = f.reduce_mod_p(field)?;
    let partials = fp.gradient()?;

    // a positive-dimensional singular locus always reaches infinity, so
    // isolatedness is decided projectively first
    let proj = Ring::grevlex(field, nvars);
    let sing: Vec<SparsePoly> = partials.iter().map(|p| to_sparse(&proj, p)).collect();
    let gb = groebner(&proj, &sing, &mut GbStats::default());
    if hilbert_series(&leading_monomials(&gb), nvars).dim_degree().dim().is_some_and(|dim| dim > 0) {
        return Ok(MilnorCount::NonIsolated);
    }
    let mut at_infinity = sing;
    at_infinity.push(proj.var(chart));
    let gb = groebner(&proj, &at_infinity, &mut GbStats::default());
    if !hilbert_series(&leading_monomials(&gb), nvars).dim_degree().is_empty() {
        return Err(Error::Input(format!("singular points lie at infinity of the chart x{chart}; choose another chart")));
    }

    let ring = Ring::grevlex(field, nvars - 1);
    let affine_f = dehomogenize(&ring, &fp, chart);
    let jac: Vec<SparsePoly> =
        (0..nvars).filter(|&i| i != chart).map(|i| dehomogenize(&ring, &partials[i], chart)).collect();

    // Localizing k[x]/(J + f^N) at a critical point off X kills it; at a point
    // of X it gives O/J once f^N lies in J there. The dimension grows strictly
    // with N until every local contribution has stabilized.
    let mut power = affine_f.clone();
    let mut previous: Option<u64> = None;
    loop {
        let mut gens = jac.clone();
        gens.push(power.clone());
        let gb = groebner(&ring, &gens, &mut GbStats::default());
        let Some(dim) = quotient_dimension(&gb, nvars - 1) else {
            return Ok(MilnorCount::NonIsolated);
        };
        if previous == Some(dim) {
            return Ok(MilnorCount::Finite(dim));
        }
        previous = Some(dim);
        power = power.mul(&ring, &affine_f);
    }
}

/// Total Milnor number of the singular points of `V(F)`, all of which must
/// lie in the chart `x_chart != 0`, as the dimension of the affine Jacobian
/// quotient localized along `X`. Computed modulo each prime in `primes`
/// (those dividing `deg F` or too small are skipped); at least two usable
/// primes must agree.
pub fn affine_milnor_total(f: &RationalPolynomial, chart: usize, primes: &[u64]) -> Result<MilnorCount> {
    let nvars = f.nvars();
    if chart >= nvars {
        return Err(Error::VariableOutOfRange { index: chart, nvars });
    }
    if !(2..=MAX_VARS).contains(&nvars) {
        return Err(Error::Input(format!("unsupported number of variables {nvars}")));
    }
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut values = Vec::new();
    for &p in primes {
        let Ok(field) = PrimeField::for_degree(p, d) else { continue };
        if f.reduce_mod_p(field).is_err() {
            continue;
        }
        values.push(milnor_at_prime(f, chart, field)?);
        if values.len() == 2 {
            break;
        }
    }
    match values.as_slice() {
        [a, b] if a == b => Ok(*a),
        [a, b] => Err(Error::Probabilistic(format!("Milnor count differs between primes: {a:?} vs {b:?}"))),
        _ => Err(Error::Input("need two usable primes for the Milnor oracle".into())),
    }
}

/// `true` if `V(F)` is smooth, checked over one prime.
pub fn is_smooth_mod_p(f: &RationalPolynomial, field: PrimeField) -> Result<bool> {
    let fp = f.reduce_mod_p(field)?;
    let basis = crate::idealcalc::buchberger(&IdealBasis::new(field, f.nvars(), fp.gradient()?)?)?;
    Ok(crate::idealcalc::dim_degree(&basis)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{parse_poly, DEFAULT_PRIMES};

    fn cls(n: usize, c: &[i64]) -> ChowClass {
        ChowClass::from_ints(n, c)
    }

    #[test]
    fn smooth_chern_examples() {
        assert_eq!(smooth_chern_class(2, 2), cls(2, &[0, 2, 2]));
        assert_eq!(smooth_chern_class(2, 3), cls(2, &[0, 3, 0]));
        assert_eq!(smooth_chern_class(3, 2), cls(3, &[0, 2, 4, 4]));
        // a plane in P^3 is P^2
        assert_eq!(smooth_chern_class(3, 1).integral(), crate::chowring::rat(3));
    }

    #[test]
    fn linear_subspace_examples() {
        assert_eq!(segre_linear_subspace(2, 0).unwrap(), cls(2, &[0, 0, 1]));
        assert_eq!(segre_linear_subspace(3, 1).unwrap(), cls(3, &[0, 0, 1, -2]));
        assert_eq!(segre_linear_subspace(3, 2).unwrap(), cls(3, &[0, 1, -1, 1]));
        assert!(segre_linear_subspace(3, 3).is_err());
    }

    fn milnor(text: &str, nvars: usize, chart: usize) -> Result<MilnorCount> {
        affine_milnor_total(&parse_poly(text, nvars).unwrap(), chart, &DEFAULT_PRIMES)
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(milnor("x1^2*x2 - x0^3 - x0^2*x2", 3, 2).unwrap(), MilnorCount::Finite(1));
        assert_eq!(milnor("x1^2*x2 - x0^3", 3, 2).unwrap(), MilnorCount::Finite(2));
        assert_eq!(milnor("x0^2 + x1^2 + x2^2", 3, 2).unwrap(), MilnorCount::Finite(0));
        assert_eq!(milnor("x0^2 + x1^2 + x2^2", 4, 3).unwrap(), MilnorCount::Finite(1));
        assert_eq!(milnor("x0*x1*x2 + x0^3 + x1^3", 3, 2).unwrap(), MilnorCount::Finite(1));
        assert!(matches!(milnor("x0*x1*x2", 3, 2), Err(Error::Input(_))));
        // an A_3 point: y^2 = x^4 + y^4
        assert_eq!(milnor("x1^2*x2^2 - x0^4 - x1^4", 3, 2).unwrap(), MilnorCount::Finite(3));
    }

    #[test]
    fn milnor_rejections() {
        // the cusp of x1^2 x2 - x0^3 sits at (0:0:1), which is at infinity for x0
        assert!(matches!(milnor("x1^2*x2 - x0^3", 3, 0), Err(Error::Input(_))));
        assert_eq!(milnor("x0^2*x1^2", 4, 3).unwrap(), MilnorCount::NonIsolated);
        assert!(matches!(milnor("x0*x1", 3, 5), Err(Error::VariableOutOfRange { .. })));
    }

    #[test]
    fn smoothness() {
        let f = PrimeField::new(32003).unwrap();
        assert!(is_smooth_mod_p(&parse_poly("x0^3 + x1^3 + x2^3", 3).unwrap(), f).unwrap());
        assert!(!is_smooth_mod_p(&parse_poly("x1^2*x2 - x0^3", 3).unwrap(), f).unwrap());
    }
}
