//! Exact homogeneous polynomials over `Q` and `F_p`.

mod field;
mod monomial;
mod parse;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIMES};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_poly, parse_terms};

use crate::error::{Error, Result};

/// A homogeneous polynomial in `nvars` variables `x0..x{nvars-1}`.
///
/// Terms are keyed by monomial and iterate in increasing grevlex order; every
/// stored coefficient is nonzero and every exponent vector has total degree
/// `degree`. The zero polynomial has no degree.
#[derive(Clone, PartialEq)]
pub struct HomogeneousPolynomial<F: Field> {
    field: F,
    nvars: usize,
    degree: Option<u32>,
    terms: BTreeMap<Monomial, F::Elem>,
}

pub type RationalPolynomial = HomogeneousPolynomial<Rationals>;
pub type ModularPolynomial = HomogeneousPolynomial<PrimeField>;

impl<F: Field> HomogeneousPolynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        HomogeneousPolynomial { field, nvars, degree: None, terms: BTreeMap::new() }
    }

    /// Collects like terms, drops zeros and checks homogeneity.
    pub fn from_terms<I>(field: F, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables(nvars));
        }
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            if m.support_len() > nvars {
                return Err(Error::VariableOutOfRange { index: m.support_len() - 1, nvars });
            }
            match map.get_mut(&m) {
                Some(acc) => *acc = field.add(acc, &c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        map.retain(|_, c| !field.is_zero(c));
        let mut degrees = map.keys().map(Monomial::degree);
        let degree = degrees.next();
        if let Some(d) = degree {
            if degrees.any(|e| e != d) {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(HomogeneousPolynomial { field, nvars, degree, terms: map })
    }

    pub fn monomial(field: F, nvars: usize, m: Monomial, c: F::Elem) -> Result<Self> {
        Self::from_terms(field, nvars, [(m, c)])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F::Elem)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms.get(m)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::MixedInputs);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let terms = self.terms.iter().chain(other.terms.iter()).map(|(m, c)| (*m, c.clone()));
        Self::from_terms(self.field.clone(), self.nvars, terms)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, self.field.mul(a, c))).collect();
        HomogeneousPolynomial { terms, ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                terms.push((ma.mul(mb), self.field.mul(a, b)));
            }
        }
        Self::from_terms(self.field.clone(), self.nvars, terms)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::monomial(self.field.clone(), self.nvars, Monomial::one(), self.field.one())?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `x{i}`.
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.nvars {
            return Err(Error::VariableOutOfRange { index: i, nvars: self.nvars });
        }
        let f = &self.field;
        let terms = self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, c)| {
            let e = m.exp(i);
            (m.with_exp(i, e - 1), f.mul(c, &f.from_i64(e as i64)))
        });
        Self::from_terms(f.clone(), self.nvars, terms)
    }

    /// All `nvars` first partials.
    pub fn gradient(&self) -> Result<Vec<Self>> {
        (0..self.nvars).map(|i| self.partial_derivative(i)).collect()
    }

    /// Whether `sum x_i * df/dx_i == deg(f) * f` holds in the coefficient
    /// field with a usable right side. False when the characteristic divides
    /// a positive degree: the identity then reads `0 == 0` and no longer puts
    /// `f` in the ideal of its partials.
    pub fn euler_check(&self) -> bool {
        let Some(d) = self.degree else {
            return true;
        };
        let f = &self.field;
        let deg = f.from_i64(d as i64);
        if d > 0 && f.is_zero(&deg) {
            return false;
        }
        let mut lhs = Self::zero(f.clone(), self.nvars);
        for i in 0..self.nvars {
            let xi = Self::monomial(f.clone(), self.nvars, Monomial::var(i), f.one()).expect("valid variable");
            let term = self.partial_derivative(i).and_then(|p| xi.mul(&p)).expect("same ring");
            lhs = lhs.add(&term).unwrap_or(lhs);
        }
        lhs == self.scale(&deg)
    }

    /// Substitutes `x_i = sum_j a[i][j] * y_j`, producing a polynomial in
    /// `a[0].len()` variables `y`.
    pub fn substitute_linear(&self, a: &[Vec<F::Elem>]) -> Result<Self> {
        if a.len() != self.nvars {
            return Err(Error::Input("substitution matrix needs one row per variable".into()));
        }
        let new_nvars = a.first().map_or(0, Vec::len);
        let f = &self.field;
        let forms: Vec<Self> = a
            .iter()
            .map(|row| {
                Self::from_terms(
                    f.clone(),
                    new_nvars,
                    row.iter().enumerate().map(|(j, c)| (Monomial::var(j), c.clone())),
                )
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(f.clone(), new_nvars);
        for (m, c) in &self.terms {
            let mut t = Self::monomial(f.clone(), new_nvars, Monomial::one(), c.clone())?;
            for (i, form) in forms.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = t.mul(form)?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }
}

impl RationalPolynomial {
    /// Coefficientwise image in `F_p`.
    pub fn reduce_mod_p(&self, field: PrimeField) -> Result<ModularPolynomial> {
        let p = field.modulus();
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let r = field.reduce_rational(c).ok_or_else(|| Error::BadPrime {
                p,
                reason: "divides a coefficient denominator".into(),
            })?;
            terms.push((*m, r));
        }
        let out = HomogeneousPolynomial::from_terms(field, self.nvars, terms)?;
        if out.is_zero() && !self.is_zero() {
            return Err(Error::BadPrime { p, reason: "polynomial vanishes modulo p".into() });
        }
        Ok(out)
    }

    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Result<Self> {
        let q = Rationals;
        Self::from_terms(q, nvars, terms.iter().map(|(e, c)| (Monomial::from_exponents(e), q.from_i64(*c))))
    }
}

/// A random combination `sum c_i * polys[i]` with its coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearCombination {
    pub poly: ModularPolynomial,
    pub coefficients: Vec<u64>,
}

const COMBINATION_ATTEMPTS: usize = 64;

/// Draws coefficients uniformly from `F_p` and returns the combination,
/// redrawing when it comes out zero.
pub fn random_linear_combination<R: Rng + ?Sized>(
    polys: &[ModularPolynomial],
    rng: &mut R,
) -> Result<LinearCombination> {
    let first = polys.first().ok_or_else(|| Error::Input("empty polynomial list".into()))?;
    let field = *first.field();
    let nvars = first.nvars();
    let nonzero_deg = polys.iter().filter_map(|p| p.degree()).next();
    for p in polys {
        if p.nvars() != nvars || *p.field() != field {
            return Err(Error::MixedInputs);
        }
        if p.degree().is_some() && p.degree() != nonzero_deg {
            return Err(Error::MixedInputs);
        }
    }
    if nonzero_deg.is_none() {
        return Err(Error::ZeroPolynomial);
    }
    let p = field.modulus();
    for _ in 0..COMBINATION_ATTEMPTS {
        let coefficients: Vec<u64> = polys.iter().map(|_| rng.random_range(0..p)).collect();
        let terms = polys
            .iter()
            .zip(&coefficients)
            .flat_map(|(f, &c)| f.terms.iter().map(move |(m, a)| (*m, field.mul_mod(*a, c))));
        let poly = HomogeneousPolynomial::from_terms(field, nvars, terms)?;
        if !poly.is_zero() {
            return Ok(LinearCombination { poly, coefficients });
        }
    }
    Err(Error::Probabilistic("could not draw a nonzero linear combination".into()))
}

/// Writes terms in decreasing grevlex order, e.g. `x0^2 - 3*x0*x1 + x2^2`.
impl<F: Field> fmt::Display for HomogeneousPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let fld = &self.field;
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = fld.is_negative(c);
            let abs = if neg { fld.neg(c) } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = abs == fld.one();
            let mut wrote = false;
            if !unit || m.degree() == 0 {
                fld.fmt_elem(&abs, f)?;
                wrote = true;
            }
            for i in 0..self.nvars {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                if wrote {
                    f.write_str("*")?;
                }
                if e == 1 {
                    write!(f, "x{i}")?;
                } else {
                    write!(f, "x{i}^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for HomogeneousPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogeneousPolynomial({:?}, nvars={}, \"{}\")", self.field.spec(), self.nvars, self)
    }
}
