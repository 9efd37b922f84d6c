//! Groebner bases over `F_p`: Buchberger, normal forms, saturation and
//! Hilbert-series dimension/degree.

mod hilbert;
mod sparse;

use alloc::vec::Vec;

pub use hilbert::{hilbert_series, DimDegree, HilbertNumerator};
pub use sparse::{groebner, interreduce, is_groebner, reduce, s_polynomial, GbStats, Ring, SparsePoly};

use crate::error::{Error, Result};
use crate::polyalg::{Field, HomogeneousPolynomial, ModularPolynomial, Monomial, MonomialOrder, PrimeField, MAX_VARS};

/// A generating set of a homogeneous ideal of `F_p[x0..x{nvars-1}]`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis {
    field: PrimeField,
    nvars: usize,
    gens: Vec<ModularPolynomial>,
    order: MonomialOrder,
    groebner: bool,
    leading_terms: Vec<Monomial>,
}

impl IdealBasis {
    /// Drops zero generators; all generators must share field and ring.
    pub fn new(field: PrimeField, nvars: usize, gens: Vec<ModularPolynomial>) -> Result<Self> {
        for g in &gens {
            if *g.field() != field || g.nvars() != nvars {
                return Err(Error::MixedInputs);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealBasis { field, nvars, gens, order: MonomialOrder::Grevlex, groebner: false, leading_terms: Vec::new() })
    }

    pub fn from_gens(gens: Vec<ModularPolynomial>) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Input("empty generator list; use IdealBasis::new".into()))?;
        Self::new(*first.field(), first.nvars(), gens)
    }

    /// The unit ideal `(1)`.
    pub fn unit(field: PrimeField, nvars: usize) -> Self {
        let one = HomogeneousPolynomial::monomial(field, nvars, Monomial::one(), 1).expect("constant");
        IdealBasis {
            field,
            nvars,
            gens: alloc::vec![one],
            order: MonomialOrder::Grevlex,
            groebner: true,
            leading_terms: alloc::vec![Monomial::one()],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[ModularPolynomial] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_groebner(&self) -> bool {
        self.groebner
    }

    /// Cached leading monomials; empty unless the basis is Groebner.
    pub fn leading_terms(&self) -> &[Monomial] {
        &self.leading_terms
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == Some(0))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    fn ring(&self) -> Ring {
        Ring { field: self.field, nvars: self.nvars, order: MonomialOrder::Grevlex }
    }

    fn sparse_gens(&self) -> Vec<SparsePoly> {
        let ring = self.ring();
        self.gens.iter().map(|g| to_sparse(&ring, g)).collect()
    }

    fn from_groebner(field: PrimeField, nvars: usize, gb: Vec<SparsePoly>) -> Result<Self> {
        let leading_terms = gb.iter().map(|g| g.leading_monomial().expect("nonzero")).collect();
        let gens = gb.iter().map(|g| from_sparse(field, nvars, g)).collect::<Result<Vec<_>>>()?;
        Ok(IdealBasis { field, nvars, gens, order: MonomialOrder::Grevlex, groebner: true, leading_terms })
    }

    /// Re-checks the Groebner property: every S-polynomial reduces to zero.
    pub fn certify(&self) -> bool {
        is_groebner(&self.ring(), &self.sparse_gens())
    }
}

pub fn to_sparse(ring: &Ring, f: &ModularPolynomial) -> SparsePoly {
    SparsePoly::from_terms(ring, f.terms().map(|(m, c)| (*m, *c)))
}

fn from_sparse(field: PrimeField, nvars: usize, f: &SparsePoly) -> Result<ModularPolynomial> {
    HomogeneousPolynomial::from_terms(field, nvars, f.terms().iter().copied())
}

/// Reduced Groebner basis in grevlex.
pub fn buchberger(gens: &IdealBasis) -> Result<IdealBasis> {
    buchberger_with_stats(gens, &mut GbStats::default())
}

pub fn buchberger_with_stats(gens: &IdealBasis, stats: &mut GbStats) -> Result<IdealBasis> {
    let ring = gens.ring();
    let gb = groebner(&ring, &gens.sparse_gens(), stats);
    IdealBasis::from_groebner(gens.field, gens.nvars, gb)
}

/// Remainder of `f` on division by a Groebner basis; zero iff `f` is in the
/// ideal.
pub fn normal_form(f: &ModularPolynomial, basis: &IdealBasis) -> Result<ModularPolynomial> {
    if !basis.groebner {
        return Err(Error::NotGroebner);
    }
    if *f.field() != basis.field || f.nvars() != basis.nvars {
        return Err(Error::MixedInputs);
    }
    let ring = basis.ring();
    let r = reduce(&ring, &to_sparse(&ring, f), &basis.sparse_gens());
    from_sparse(basis.field, basis.nvars, &r)
}

/// `I : g^∞ = (I + (1 - t g)) ∩ k[x]`, computed in an elimination order with
/// `t` adjoined as the last variable. Returns a reduced grevlex basis.
pub fn saturate_by_element(ring: &Ring, ideal: &[SparsePoly], g: &SparsePoly, stats: &mut GbStats) -> Result<Vec<SparsePoly>> {
    let t = ring.nvars;
    if t + 1 > MAX_VARS {
        return Err(Error::TooManyVariables(t + 1));
    }
    let ext = Ring { field: ring.field, nvars: t + 1, order: MonomialOrder::Elimination { first_eliminated: t } };
    let mut gens: Vec<SparsePoly> = ideal.iter().map(|f| f.reorder(&ext)).collect();
    // 1 - t g
    let tg = g.reorder(&ext).mul_term(&ext, &Monomial::var(t), ring.field.neg(&1));
    gens.push(tg.add(&ext, &SparsePoly::constant(1)));
    Ok(eliminate_last(ring, &ext, &gens, stats))
}

/// `I ∩ K = (t I + (1 - t) K) ∩ k[x]`.
pub fn intersect(ring: &Ring, a: &[SparsePoly], b: &[SparsePoly], stats: &mut GbStats) -> Result<Vec<SparsePoly>> {
    let t = ring.nvars;
    if t + 1 > MAX_VARS {
        return Err(Error::TooManyVariables(t + 1));
    }
    let ext = Ring { field: ring.field, nvars: t + 1, order: MonomialOrder::Elimination { first_eliminated: t } };
    let tv = Monomial::var(t);
    let mut gens: Vec<SparsePoly> = a.iter().map(|f| f.reorder(&ext).mul_term(&ext, &tv, 1)).collect();
    for f in b {
        let f = f.reorder(&ext);
        let tf = f.mul_term(&ext, &tv, 1);
        gens.push(f.sub(&ext, &tf));
    }
    Ok(eliminate_last(ring, &ext, &gens, stats))
}

fn eliminate_last(ring: &Ring, ext: &Ring, gens: &[SparsePoly], stats: &mut GbStats) -> Vec<SparsePoly> {
    let gb = groebner(ext, gens, stats);
    let kept: Vec<SparsePoly> = gb.iter().filter(|g| !g.involves_from(ring.nvars)).map(|g| g.reorder(ring)).collect();
    interreduce(ring, kept)
}

fn is_unit_basis(b: &[SparsePoly]) -> bool {
    b.iter().any(SparsePoly::is_constant)
}

/// `I : J^∞ = ∩_g (I : g^∞)` over the generators `g` of `J`.
pub fn saturate_sparse(ring: &Ring, ideal: &[SparsePoly], by: &[SparsePoly], stats: &mut GbStats) -> Result<Vec<SparsePoly>> {
    let by: Vec<&SparsePoly> = by.iter().filter(|g| !g.is_zero()).collect();
    if by.is_empty() {
        // I : (0)^∞ is the whole ring
        return Ok(alloc::vec![SparsePoly::constant(1)]);
    }
    let mut acc: Option<Vec<SparsePoly>> = None;
    for g in by {
        let part = if g.is_constant() {
            groebner(ring, ideal, stats)
        } else {
            saturate_by_element(ring, ideal, g, stats)?
        };
        if is_unit_basis(&part) {
            continue;
        }
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(ring, &prev, &part, stats)?,
        });
    }
    Ok(acc.unwrap_or_else(|| alloc::vec![SparsePoly::constant(1)]))
}

/// `I : J^∞`, as a reduced grevlex Groebner basis.
pub fn saturate(ideal: &IdealBasis, by: &IdealBasis) -> Result<IdealBasis> {
    saturate_with_stats(ideal, by, &mut GbStats::default())
}

pub fn saturate_with_stats(ideal: &IdealBasis, by: &IdealBasis, stats: &mut GbStats) -> Result<IdealBasis> {
    if ideal.field != by.field || ideal.nvars != by.nvars {
        return Err(Error::MixedInputs);
    }
    let ring = ideal.ring();
    let sat = saturate_sparse(&ring, &ideal.sparse_gens(), &by.sparse_gens(), stats)?;
    IdealBasis::from_groebner(ideal.field, ideal.nvars, sat)
}

/// Projective dimension and degree of `V(I)` from the Hilbert series of the
/// leading-term ideal.
pub fn dim_degree(ideal: &IdealBasis) -> Result<DimDegree> {
    if !ideal.groebner {
        return Err(Error::NotGroebner);
    }
    Ok(hilbert_series(&ideal.leading_terms, ideal.nvars).dim_degree())
}

/// Leading monomials of a grevlex basis, for Hilbert-series work on sparse
/// results.
pub fn leading_monomials(basis: &[SparsePoly]) -> Vec<Monomial> {
    basis.iter().filter_map(SparsePoly::leading_monomial).collect()
}

impl Ring {
    pub fn grevlex(field: PrimeField, nvars: usize) -> Self {
        Ring { field, nvars, order: MonomialOrder::Grevlex }
    }

    pub fn var(&self, i: usize) -> SparsePoly {
        SparsePoly::from_terms(self, [(Monomial::var(i), 1)])
    }

    pub fn field_elem(&self, v: i64) -> u64 {
        self.field.from_i64(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{parse_poly, Rationals};
    use alloc::string::ToString;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const P: u64 = 32003;

    fn fp() -> PrimeField {
        PrimeField::new(P).unwrap()
    }

    fn poly(text: &str, nvars: usize) -> ModularPolynomial {
        parse_poly(text, nvars).unwrap().reduce_mod_p(fp()).unwrap()
    }

    fn ideal(texts: &[&str], nvars: usize) -> IdealBasis {
        IdealBasis::new(fp(), nvars, texts.iter().map(|t| poly(t, nvars)).collect()).unwrap()
    }

    fn gb(texts: &[&str], nvars: usize) -> IdealBasis {
        buchberger(&ideal(texts, nvars)).unwrap()
    }

    fn gens_text(b: &IdealBasis) -> Vec<alloc::string::String> {
        b.gens().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn buchberger_examples() {
        assert_eq!(gens_text(&gb(&["x0"], 3)), ["x0"]);
        let b = gb(&["x0*x1", "x0^2"], 3);
        assert_eq!(gens_text(&b), ["x0*x1", "x0^2"]);
        assert!(b.certify());
        assert_eq!(gens_text(&gb(&["x0 + x1", "x0 - x1"], 3)), ["x1", "x0"]);
        let z = buchberger(&IdealBasis::new(fp(), 3, Vec::new()).unwrap()).unwrap();
        assert!(z.gens().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let b = gb(&["x0"], 3);
        assert!(normal_form(&poly("x0^2", 3), &b).unwrap().is_zero());
        assert_eq!(normal_form(&poly("x1^2", 3), &b).unwrap(), poly("x1^2", 3));
        let b = gb(&["x0^2", "x0*x1"], 3);
        assert_eq!(normal_form(&poly("x0*x1 + x1^2", 3), &b).unwrap(), poly("x1^2", 3));
        assert_eq!(normal_form(&poly("x0", 3), &ideal(&["x0"], 3)), Err(Error::NotGroebner));
    }

    #[test]
    fn saturate_examples() {
        let s = saturate(&ideal(&["x0^2", "x0*x1"], 3), &ideal(&["x0"], 3)).unwrap();
        assert!(s.is_unit(), "x0-saturation of (x0^2, x0 x1) is the unit ideal");
        let s = saturate(&ideal(&["x0^2", "x0*x1"], 3), &ideal(&["x1"], 3)).unwrap();
        assert_eq!(gens_text(&s), ["x0"]);
        let s = saturate(&ideal(&["x0"], 3), &ideal(&["x1"], 3)).unwrap();
        assert_eq!(gens_text(&s), ["x0"]);
        let any = ideal(&["x0^2 + x1*x2", "x2^3"], 3);
        let s = saturate(&any, &IdealBasis::unit(fp(), 3)).unwrap();
        assert_eq!(s, buchberger(&any).unwrap());
        // irrelevant-ideal saturation removes an embedded point
        let s = saturate(&ideal(&["x0^2", "x0*x1", "x0*x2"], 3), &ideal(&["x0", "x1", "x2"], 3)).unwrap();
        assert_eq!(gens_text(&s), ["x0"]);
        // ... but not an embedded point at (0:0:1)
        let s = saturate(&ideal(&["x0^2", "x0*x1"], 3), &ideal(&["x0", "x1", "x2"], 3)).unwrap();
        assert_eq!(gens_text(&s), ["x0*x1", "x0^2"]);
    }

    #[test]
    fn dim_degree_examples() {
        assert_eq!(dim_degree(&gb(&["x0", "x1"], 3)).unwrap(), DimDegree::Scheme { dim: 0, degree: 1 });
        assert_eq!(dim_degree(&gb(&["x0^2", "x1"], 3)).unwrap(), DimDegree::Scheme { dim: 0, degree: 2 });
        assert_eq!(dim_degree(&gb(&["x0*x1"], 3)).unwrap(), DimDegree::Scheme { dim: 1, degree: 2 });
        assert_eq!(dim_degree(&gb(&["x0", "x1", "x2"], 3)).unwrap(), DimDegree::Empty);
        assert_eq!(dim_degree(&ideal(&["x0"], 3)), Err(Error::NotGroebner));
    }

    #[test]
    fn idempotent() {
        let b = gb(&["x0^2 + x1*x2 - x2^2", "x0*x1*x2 - x1^3", "x2^3 + x0^3"], 3);
        assert!(b.certify());
        assert_eq!(buchberger(&b).unwrap(), b);
    }

    fn random_form<R: Rng>(rng: &mut R, nvars: usize, d: u32) -> ModularPolynomial {
        let mut terms = Vec::new();
        let mut exps = alloc::vec![0u32; nvars];
        fn rec<R: Rng>(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<(Monomial, u64)>, rng: &mut R) {
            if i == exps.len() - 1 {
                exps[i] = left;
                out.push((Monomial::from_exponents(exps), rng.random_range(0..P)));
                return;
            }
            for e in 0..=left {
                exps[i] = e;
                rec(i + 1, left - e, exps, out, rng);
            }
        }
        rec(0, d, &mut exps, &mut terms, rng);
        HomogeneousPolynomial::from_terms(fp(), nvars, terms).unwrap()
    }

    #[test]
    fn bezout_for_complete_intersections() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for degrees in [&[2u32][..], &[2, 2], &[2, 3], &[3, 3], &[1, 2, 3], &[2, 2, 2], &[3, 3, 2]] {
            let n = 3; // P^3
            let forms: Vec<_> = degrees.iter().map(|&d| random_form(&mut rng, n + 1, d)).collect();
            let b = buchberger(&IdealBasis::new(fp(), n + 1, forms).unwrap()).unwrap();
            let dd = dim_degree(&b).unwrap();
            let expected: u64 = degrees.iter().map(|&d| d as u64).product();
            assert_eq!(dd, DimDegree::Scheme { dim: n - degrees.len(), degree: expected }, "{degrees:?}");
        }
    }

    #[test]
    fn membership_certificate() {
        // (x0^2 - x1 x2) * x2 + x1 * (x1 x2^2 ... ) style: build f from explicit
        // combination and check it reduces to zero
        let g1 = poly("x0^2 - x1*x2", 3);
        let g2 = poly("x1^2 - x0*x2", 3);
        let b = buchberger(&IdealBasis::new(fp(), 3, alloc::vec![g1.clone(), g2.clone()]).unwrap()).unwrap();
        let a1 = poly("x0 + 3*x2", 3);
        let a2 = poly("x1 - x2", 3);
        let f = g1.mul(&a1).unwrap().add(&g2.mul(&a2).unwrap()).unwrap();
        assert!(normal_form(&f, &b).unwrap().is_zero());
        assert!(!normal_form(&poly("x0^3", 3), &b).unwrap().is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn saturation_contains_ideal(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let i = IdealBasis::new(fp(), 3, alloc::vec![random_form(&mut rng, 3, 2), poly("x0*x1", 3)]).unwrap();
            let j = IdealBasis::new(fp(), 3, alloc::vec![poly("x0", 3)]).unwrap();
            let s = saturate(&i, &j).unwrap();
            for g in i.gens() {
                prop_assert!(normal_form(g, &s).unwrap().is_zero());
            }
        }

        #[test]
        fn dim_degree_coordinate_invariant(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let gens = alloc::vec![poly("x0^2*x1 - x2^3", 3), poly("x0*x1*x2", 3)];
            let base = dim_degree(&buchberger(&IdealBasis::new(fp(), 3, gens.clone()).unwrap()).unwrap()).unwrap();
            let a: Vec<Vec<u64>> = (0..3).map(|_| (0..3).map(|_| rng.random_range(0..P)).collect()).collect();
            let moved: Vec<_> = gens.iter().map(|g| g.substitute_linear(&a).unwrap()).collect();
            let other = dim_degree(&buchberger(&IdealBasis::new(fp(), 3, moved).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(base, other);
        }
    }

    #[test]
    fn rationals_parse_into_ring() {
        // sanity for helper path: Q -> F_p
        let f = parse_poly("x0^2 - 1/3*x1^2", 2).unwrap();
        assert_eq!(*f.field(), Rationals);
        assert!(f.reduce_mod_p(fp()).is_ok());
    }
}
