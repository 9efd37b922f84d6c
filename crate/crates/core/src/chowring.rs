//! The Chow ring `A_*P^n = Z[h]/(h^{n+1})`, with rational coefficients.
//!
//! A [`ChowClass`] stores its coefficients indexed by codimension: `coeffs[i]`
//! multiplies `h^i`. Every class a hypersurface computation touches (Segre
//! classes pushed forward to `P^n`, Chern classes of bundles, CSM classes)
//! lives here. The dual and tensor operations are the sign and twist
//! operations on codimension-graded classes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ChowClass {
    n: usize,
    coeffs: Vec<BigRational>,
}

/// Converts a dimension index `m` of a class in `A_*P^n` to its codimension.
///
/// All formulas written with dimension indices go through here.
#[inline]
pub fn codim_of_dim(n: usize, m: usize) -> usize {
    debug_assert!(m <= n);
    n - m
}

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ChowClass {
    pub fn new(n: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() != n + 1 {
            return Err(Error::Input(alloc::format!(
                "class in P^{n} needs {} coefficients, got {}",
                n + 1,
                coeffs.len()
            )));
        }
        Ok(ChowClass { n, coeffs })
    }

    /// Builds a class from integer coefficients; missing high codimensions are
    /// zero and extra ones are truncated.
    pub fn from_ints(n: usize, coeffs: &[i64]) -> Self {
        let mut c = vec![BigRational::zero(); n + 1];
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            *slot = rat(v);
        }
        ChowClass { n, coeffs: c }
    }

    pub fn zero(n: usize) -> Self {
        ChowClass { n, coeffs: vec![BigRational::zero(); n + 1] }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, rat(1))
    }

    /// `c * h^k`, zero when `k > n`.
    pub fn monomial(n: usize, k: usize, c: BigRational) -> Self {
        let mut out = Self::zero(n);
        if k <= n {
            out.coeffs[k] = c;
        }
        out
    }

    /// The hyperplane class `h`.
    pub fn hyperplane(n: usize) -> Self {
        Self::monomial(n, 1, rat(1))
    }

    /// `1 + d h`, the total Chern class of `O(d)`.
    pub fn line_bundle(n: usize, d: i64) -> Self {
        let mut c = Self::one(n);
        if n >= 1 {
            c.coeffs[1] = rat(d);
        }
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, codim: usize) -> &BigRational {
        &self.coeffs[codim]
    }

    /// Component of dimension `m`.
    pub fn dim_component(&self, m: usize) -> &BigRational {
        &self.coeffs[codim_of_dim(self.n, m)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, if the class is integral.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegral) })
            .collect()
    }

    /// Lowest codimension with a nonzero coefficient.
    pub fn lowest_codim(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(ChowClass { n: self.n, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(ChowClass { n: self.n, coeffs })
    }

    /// Truncated product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(ChowClass { n, coeffs: out })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ChowClass { n: self.n, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a unit (nonzero codimension-0 coefficient).
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let n = self.n;
        let inv0 = a0.recip();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut s = BigRational::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &out[k - i];
            }
            out[k] = -(s * &inv0);
        }
        Ok(ChowClass { n, coeffs: out })
    }

    /// `a / b` for a unit `b`.
    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inverse()?)
    }

    /// `A^∨`: the codimension-`i` component picks up `(-1)^i`.
    pub fn dual(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        ChowClass { n: self.n, coeffs }
    }

    /// `A ⊗ O(d)`: the codimension-`i` component is divided by `(1 + d h)^i`.
    pub fn tensor(&self, d: i64) -> Self {
        let n = self.n;
        if d == 0 {
            return self.clone();
        }
        let inv_l = ChowClass::line_bundle(n, d).inverse().expect("1 + dh is a unit");
        let mut out = Self::zero(n);
        let mut twist = Self::one(n);
        for i in 0..=n {
            if !self.coeffs[i].is_zero() {
                let piece = Self::monomial(n, i, self.coeffs[i].clone());
                out = &out + &(&piece * &twist);
            }
            twist = &twist * &inv_l;
        }
        out
    }

    /// Degree of the dimension-0 component.
    pub fn integral(&self) -> BigRational {
        self.coeffs[self.n].clone()
    }
}

/// `c(T P^n) = (1 + h)^{n+1}`, truncated.
pub fn chern_tangent_pn(n: usize) -> ChowClass {
    ChowClass::line_bundle(n, 1).pow((n + 1) as u32)
}

pub fn make_class(n: usize, coeffs: Vec<BigRational>) -> Result<ChowClass> {
    ChowClass::new(n, coeffs)
}

// Operator sugar for classes already known to share `n`; mismatches panic.

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        self.try_add(rhs).expect("ambient dimension mismatch")
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self.try_sub(rhs).expect("ambient dimension mismatch")
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &ChowClass) -> ChowClass {
        self.try_mul(rhs).expect("ambient dimension mismatch")
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass { n: self.n, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Prints as a polynomial in `h`, e.g. `2h + 3h^2`.
impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = a.is_one();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !unit {
                        if a.is_integer() {
                            write!(f, "{a}")?;
                        } else {
                            write!(f, "({a})")?;
                        }
                    }
                    if i == 1 {
                        f.write_str("h")?;
                    } else {
                        write!(f, "h^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
