use core::cmp::Ordering;
use core::fmt;

/// Largest number of variables a [`Monomial`] can carry, including the
/// auxiliary variable adjoined during saturation.
pub const MAX_VARS: usize = 12;

/// Dense exponent vector. Unused trailing slots are zero, so comparisons and
/// divisibility never need the variable count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::default();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn with_exp(mut self, i: usize, e: u32) -> Self {
        self.deg = self.deg - self.exps[i] as u32 + e;
        self.exps[i] = u16::try_from(e).expect("exponent overflow");
        self
    }

    /// Highest index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Self) -> Self {
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        m
    }

    /// `self / other` if divisible.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other.divides(self).then(|| other.quotient_of(self))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = Self::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = Self::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Graded reverse lexicographic comparison.
    #[inline]
    pub fn cmp_grevlex(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            if self.exps[i] != other.exps[i] {
                return other.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }

    /// Grevlex restricted to variables in `range`.
    fn cmp_grevlex_range(&self, other: &Self, lo: usize, hi: usize) -> Ordering {
        let da: u32 = self.exps[lo..hi].iter().map(|&e| e as u32).sum();
        let db: u32 = other.exps[lo..hi].iter().map(|&e| e as u32).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (lo..hi).rev() {
            if self.exps[i] != other.exps[i] {
                return other.exps[i].cmp(&self.exps[i]);
            }
        }
        Ordering::Equal
    }

    pub fn cmp_by(&self, other: &Self, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Grevlex => self.cmp_grevlex(other),
            MonomialOrder::Elimination { first_eliminated } => self
                .cmp_grevlex_range(other, first_eliminated, MAX_VARS)
                .then_with(|| self.cmp_grevlex_range(other, 0, first_eliminated)),
        }
    }
}

/// Total degree first, then grevlex: the default order everywhere outside
/// elimination.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..self.support_len()])
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Grevlex,
    /// Block order: variables with index `>= first_eliminated` are compared
    /// first (grevlex within the block), then grevlex on the rest.
    Elimination { first_eliminated: usize },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp_by(b, *self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_basics() {
        // x0 > x1 > x2 in degree 1
        assert_eq!(m(&[1, 0, 0]).cmp(&m(&[0, 1, 0])), Ordering::Greater);
        // x0*x2 < x1^2 in grevlex
        assert_eq!(m(&[1, 0, 1]).cmp(&m(&[0, 2, 0])), Ordering::Less);
        // x0^2 > x0 x1
        assert!(m(&[2, 0, 0]) > m(&[1, 1, 0]));
        assert!(m(&[0, 0, 3]) > m(&[2, 0, 0]));
    }

    #[test]
    fn elimination_order() {
        let ord = MonomialOrder::Elimination { first_eliminated: 3 };
        // t beats any power of x
        assert_eq!(ord.cmp(&m(&[0, 0, 0, 1]), &m(&[5, 0, 0, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0, 0, 0]), &m(&[0, 1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 1]).divides(&m(&[2, 1, 3])));
        assert!(!m(&[1, 2]).divides(&m(&[2, 1, 3])));
        assert_eq!(m(&[2, 1, 3]).div(&m(&[1, 1])), Some(m(&[1, 0, 3])));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 3])));
    }
}
