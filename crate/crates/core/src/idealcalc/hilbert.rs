//! Hilbert series of monomial ideals, and the dimension/degree read off them.

use alloc::vec;
use alloc::vec::Vec;

use crate::polyalg::{Monomial, MAX_VARS};

/// Numerator `N(t)` with `H_{S/M}(t) = N(t) / (1 - t)^nvars`; `coeffs[k]`
/// multiplies `t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    pub nvars: usize,
    pub coeffs: Vec<i64>,
}

/// Projective dimension and degree of `V(I)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimDegree {
    Empty,
    Scheme { dim: usize, degree: u64 },
}

impl DimDegree {
    pub fn degree(&self) -> u64 {
        match self {
            DimDegree::Empty => 0,
            DimDegree::Scheme { degree, .. } => *degree,
        }
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            DimDegree::Empty => None,
            DimDegree::Scheme { dim, .. } => Some(*dim),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, DimDegree::Empty)
    }
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = gens.to_vec();
    v.sort_by_key(Monomial::degree);
    v.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(v.len());
    for m in v {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(acc: &mut Vec<i64>, b: &[i64], shift: usize) {
    if acc.len() < b.len() + shift {
        acc.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        acc[i + shift] += y;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Numerator of the Hilbert series of `S / (gens)` by recursive splitting on
/// a pivot variable: `N(M) = N(M + (x)) + t N(M : x)`.
pub fn hilbert_series(gens: &[Monomial], nvars: usize) -> HilbertNumerator {
    assert!(nvars <= MAX_VARS);
    HilbertNumerator { nvars, coeffs: trim(numerator(&minimalize(gens))) }
}

fn numerator(gens: &[Monomial]) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime =
        gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] += 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot: the variable occurring in the most generators
    let mut counts = [0usize; MAX_VARS];
    for g in gens {
        for (i, c) in counts.iter_mut().enumerate() {
            if g.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let pivot = (0..MAX_VARS).max_by_key(|&i| (counts[i], core::cmp::Reverse(i))).expect("nonempty");
    let x = Monomial::var(pivot);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).copied().collect();
    plus.push(x);
    let colon: Vec<Monomial> =
        gens.iter().map(|g| if g.exp(pivot) > 0 { g.with_exp(pivot, g.exp(pivot) - 1) } else { *g }).collect();

    let mut acc = numerator(&minimalize(&plus));
    let rhs = numerator(&minimalize(&colon));
    poly_add_shifted(&mut acc, &rhs, 1);
    acc
}

impl HilbertNumerator {
    /// Splits `N(t) = (1 - t)^k Q(t)` with `Q(1) != 0`; `None` for `N = 0`.
    pub fn factor_one_minus_t(&self) -> Option<(usize, Vec<i64>)> {
        let mut q = trim(self.coeffs.clone());
        if q.iter().all(|&c| c == 0) {
            return None;
        }
        let mut k = 0;
        while q.iter().sum::<i64>() == 0 {
            // divide by (1 - t): q = (1 - t) r  =>  r_i = sum_{j <= i} q_j
            let mut r = Vec::with_capacity(q.len() - 1);
            let mut s = 0;
            for &c in &q[..q.len() - 1] {
                s += c;
                r.push(s);
            }
            q = trim(r);
            k += 1;
        }
        Some((k, q))
    }

    /// Krull dimension of `S / M`.
    pub fn krull_dim(&self) -> usize {
        match self.factor_one_minus_t() {
            None => 0,
            Some((k, _)) => self.nvars - k,
        }
    }

    pub fn dim_degree(&self) -> DimDegree {
        match self.factor_one_minus_t() {
            None => DimDegree::Empty,
            Some((k, q)) => {
                let krull = self.nvars - k;
                if krull == 0 {
                    DimDegree::Empty
                } else {
                    let deg: i64 = q.iter().sum();
                    debug_assert!(deg > 0);
                    DimDegree::Scheme { dim: krull - 1, degree: deg as u64 }
                }
            }
        }
    }

    /// Value of the Hilbert function in degree `k`, from the series expansion.
    pub fn hilbert_function(&self, k: usize) -> i64 {
        // coefficient of t^k in N(t) * sum_j C(j + n - 1, n - 1) t^j
        let n = self.nvars as i64;
        let mut total = 0i64;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > k {
                break;
            }
            let j = (k - i) as i64;
            total += c * binomial(j + n - 1, n - 1);
        }
        total
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return if k == 0 && n == -1 { 1 } else { 0 };
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}
