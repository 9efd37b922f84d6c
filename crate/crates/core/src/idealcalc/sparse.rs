//! Sparse polynomials over `F_p` under an explicit monomial order, and the
//! Buchberger kernel that works on them.
//!
//! Terms are stored in increasing order so the leading term is the last
//! element. Nothing here requires homogeneity.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::polyalg::{Field, Monomial, MonomialOrder, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ring {
    pub field: PrimeField,
    pub nvars: usize,
    pub order: MonomialOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePoly {
    /// Increasing in the ring's order; coefficients nonzero and reduced.
    terms: Vec<(Monomial, u64)>,
}

/// Counters from one Buchberger run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_created: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub max_basis_size: usize,
    pub final_basis_size: usize,
}

impl GbStats {
    pub fn absorb(&mut self, other: &GbStats) {
        self.pairs_created += other.pairs_created;
        self.pairs_reduced += other.pairs_reduced;
        self.zero_reductions += other.zero_reductions;
        self.max_basis_size = self.max_basis_size.max(other.max_basis_size);
        self.final_basis_size = self.final_basis_size.max(other.final_basis_size);
    }
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    /// Collects like terms and sorts under `ring.order`.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let f = ring.field;
        let mut v: Vec<(Monomial, u64)> = terms.into_iter().map(|(m, c)| (m, c % f.modulus())).collect();
        v.sort_by(|a, b| ring.order.cmp(&a.0, &b.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        SparsePoly { terms: out }
    }

    pub fn constant(c: u64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            SparsePoly { terms: alloc::vec![(Monomial::one(), c)] }
        }
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

    /// Terms in increasing order.
    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, u64)> {
        self.terms.last()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.last().map(|t| t.0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.degree() == 0
    }

    /// Re-sorts under another order.
    pub fn reorder(&self, ring: &Ring) -> Self {
        Self::from_terms(ring, self.terms.iter().copied())
    }

    pub fn scale(&self, ring: &Ring, c: u64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|&(m, a)| (m, ring.field.mul_mod(a, c))).collect() }
    }

    pub fn make_monic(&mut self, ring: &Ring) {
        if let Some(&(_, lc)) = self.terms.last() {
            if lc != 1 {
                let inv = ring.field.inv(&lc).expect("nonzero leading coefficient");
                for t in &mut self.terms {
                    t.1 = ring.field.mul_mod(t.1, inv);
                }
            }
        }
    }

    /// `self * c * m`; multiplication by a monomial preserves the order.
    pub fn mul_term(&self, ring: &Ring, m: &Monomial, c: u64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|&(t, a)| (t.mul(m), ring.field.mul_mod(a, c))).collect() }
    }

    pub fn mul(&self, ring: &Ring, other: &Self) -> Self {
        let mut acc = Self::zero();
        for &(m, c) in &other.terms {
            acc = acc.add(ring, &self.mul_term(ring, &m, c));
        }
        acc
    }

    pub fn add(&self, ring: &Ring, other: &Self) -> Self {
        self.axpy(ring, other, &Monomial::one(), 1)
    }

    pub fn sub(&self, ring: &Ring, other: &Self) -> Self {
        self.axpy(ring, other, &Monomial::one(), ring.field.neg(&1))
    }

    /// `self + c * m * other` by a single merge.
    pub fn axpy(&self, ring: &Ring, other: &Self, m: &Monomial, c: u64) -> Self {
        let f = ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].0.mul(m);
            if i == a.len() {
                out.push((bm, f.mul_mod(b[j].1, c)));
                j += 1;
                continue;
            }
            match ring.order.cmp(&a[i].0, &bm) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((bm, f.mul_mod(b[j].1, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(&a[i].1, &f.mul_mod(b[j].1, c));
                    if s != 0 {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.retain(|(_, c)| *c != 0);
        SparsePoly { terms: out }
    }

    /// Whether any term involves a variable with index `>= first`.
    pub fn involves_from(&self, first: usize) -> bool {
        self.terms.iter().any(|(m, _)| (first..crate::polyalg::MAX_VARS).any(|i| m.exp(i) > 0))
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Largest total degree among the terms.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }
}

/// Full reduction of `f` modulo `basis` (leading coefficients must be 1).
pub fn reduce(ring: &Ring, f: &SparsePoly, basis: &[SparsePoly]) -> SparsePoly {
    reduce_with(ring, f, |lm| basis.iter().find(|g| g.terms.last().is_some_and(|(gm, _)| gm.divides(lm))))
}

fn reduce_with<'a>(
    ring: &Ring,
    f: &SparsePoly,
    divisor: impl Fn(&Monomial) -> Option<&'a SparsePoly>,
) -> SparsePoly {
    let f_ = ring.field;
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, u64)> = Vec::new();
    while let Some(&(lm, lc)) = p.terms.last() {
        match divisor(&lm) {
            Some(g) => {
                let (gm, _) = g.terms.last().expect("nonzero divisor");
                let q = gm.quotient_of(&lm);
                p = p.axpy(ring, g, &q, f_.neg(&lc));
            }
            None => {
                rem.push((lm, lc));
                p.terms.pop();
            }
        }
    }
    rem.reverse();
    SparsePoly { terms: rem }
}

/// S-polynomial of two monic polynomials.
pub fn s_polynomial(ring: &Ring, f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    let fm = f.leading_monomial().expect("nonzero");
    let gm = g.leading_monomial().expect("nonzero");
    let l = fm.lcm(&gm);
    let a = f.mul_term(ring, &fm.quotient_of(&l), 1);
    a.axpy(ring, g, &gm.quotient_of(&l), ring.field.neg(&1))
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Groebner basis, sorted by increasing leading monomial.
///
/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, by degree then order) and the Gebauer-Moeller installation of the
/// product and chain criteria.
pub fn groebner(ring: &Ring, gens: &[SparsePoly], stats: &mut GbStats) -> Vec<SparsePoly> {
    let mut polys: Vec<SparsePoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<SparsePoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    for g in &mut input {
        g.make_monic(ring);
    }
    if input.iter().any(SparsePoly::is_constant) {
        stats.final_basis_size = 1;
        return alloc::vec![SparsePoly::constant(1)];
    }
    input.sort_by(|a, b| {
        let (am, bm) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        am.degree().cmp(&bm.degree()).then_with(|| ring.order.cmp(&am, &bm))
    });
    for g in input {
        let mut h = reduce_active(ring, &g, &polys, &active);
        if h.is_zero() {
            continue;
        }
        h.make_monic(ring);
        if h.is_constant() {
            stats.final_basis_size = 1;
            return alloc::vec![SparsePoly::constant(1)];
        }
        install(ring, &mut polys, &mut active, &mut pairs, h, stats);
    }

    while !pairs.is_empty() {
        let k = select_pair(ring, &pairs);
        let pair = pairs.swap_remove(k);
        stats.pairs_reduced += 1;
        let s = s_polynomial(ring, &polys[pair.i], &polys[pair.j]);
        let mut h = reduce_active(ring, &s, &polys, &active);
        if h.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        h.make_monic(ring);
        if h.is_constant() {
            stats.final_basis_size = 1;
            return alloc::vec![SparsePoly::constant(1)];
        }
        install(ring, &mut polys, &mut active, &mut pairs, h, stats);
    }

    let basis = active_polys(&polys, &active);
    let out = interreduce(ring, basis);
    stats.final_basis_size = out.len();
    out
}

fn reduce_active(ring: &Ring, f: &SparsePoly, polys: &[SparsePoly], active: &[bool]) -> SparsePoly {
    reduce_with(ring, f, |lm| {
        polys
            .iter()
            .zip(active)
            .find(|(g, &a)| a && g.terms.last().is_some_and(|(gm, _)| gm.divides(lm)))
            .map(|(g, _)| g)
    })
}

fn active_polys(polys: &[SparsePoly], active: &[bool]) -> Vec<SparsePoly> {
    polys.iter().zip(active).filter(|(_, &a)| a).map(|(p, _)| p.clone()).collect()
}

fn select_pair(ring: &Ring, pairs: &[Pair]) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k].lcm, &pairs[best].lcm);
        let better = match a.degree().cmp(&b.degree()) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => ring.order.cmp(a, b) == Ordering::Less,
        };
        if better {
            best = k;
        }
    }
    best
}

/// Gebauer-Moeller update for a new element `h`.
fn install(
    ring: &Ring,
    polys: &mut Vec<SparsePoly>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: SparsePoly,
    stats: &mut GbStats,
) {
    let _ = ring;
    let hm = h.leading_monomial().expect("nonzero");
    let hi = polys.len();

    // Candidate pairs (g, h) for active g.
    let cands: Vec<(usize, Monomial, bool)> = (0..polys.len())
        .filter(|&g| active[g])
        .map(|g| {
            let gm = polys[g].leading_monomial().expect("nonzero");
            (g, gm.lcm(&hm), gm.is_coprime(&hm))
        })
        .collect();

    // Chain criterion among the new pairs.
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, &(g, l, coprime)) in cands.iter().enumerate() {
        let dominated_rest = cands[idx + 1..].iter().any(|&(_, l2, _)| l2.divides(&l));
        let dominated_kept = kept.iter().any(|&(_, l2, _)| l2.divides(&l));
        if coprime || !(dominated_rest || dominated_kept) {
            kept.push((g, l, coprime));
        }
    }
    // Among pairs with identical lcm keep only one; a coprime one wins and
    // then all of them are dropped by the product criterion.
    let mut new_pairs: Vec<Pair> = Vec::new();
    let mut seen: Vec<(Monomial, bool)> = Vec::new();
    for &(g, l, coprime) in &kept {
        if let Some(e) = seen.iter_mut().find(|e| e.0 == l) {
            e.1 |= coprime;
            continue;
        }
        seen.push((l, coprime));
        new_pairs.push(Pair { i: g, j: hi, lcm: l });
    }
    new_pairs.retain(|p| !seen.iter().any(|e| e.0 == p.lcm && e.1));

    // Old pairs made redundant by h.
    pairs.retain(|p| {
        let l = p.lcm;
        if !hm.divides(&l) {
            return true;
        }
        let li = polys[p.i].leading_monomial().expect("nonzero").lcm(&hm);
        let lj = polys[p.j].leading_monomial().expect("nonzero").lcm(&hm);
        li == l || lj == l
    });
    stats.pairs_created += new_pairs.len();
    pairs.extend(new_pairs);

    for g in 0..polys.len() {
        if active[g] && hm.divides(&polys[g].leading_monomial().expect("nonzero")) {
            active[g] = false;
        }
    }
    polys.push(h);
    active.push(true);
    let n_active = active.iter().filter(|&&a| a).count();
    stats.max_basis_size = stats.max_basis_size.max(n_active);
}

/// Turns a Groebner basis into the reduced one.
pub fn interreduce(ring: &Ring, mut basis: Vec<SparsePoly>) -> Vec<SparsePoly> {
    basis.retain(|g| !g.is_zero());
    for g in &mut basis {
        g.make_monic(ring);
    }
    basis.sort_by(|a, b| ring.order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<SparsePoly> = Vec::new();
    for g in basis {
        let gm = g.leading_monomial().unwrap();
        if minimal.iter().any(|h| h.leading_monomial().unwrap().divides(&gm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<SparsePoly> =
            minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, g)| g.clone()).collect();
        let (lm, lc) = *minimal[k].leading().unwrap();
        let tail = SparsePoly { terms: minimal[k].terms[..minimal[k].len() - 1].to_vec() };
        let mut r = reduce(ring, &tail, &others);
        r.terms.push((lm, lc));
        out.push(r);
    }
    out
}

/// Whether every S-polynomial of `basis` reduces to zero.
pub fn is_groebner(ring: &Ring, basis: &[SparsePoly]) -> bool {
    let mut monic: Vec<SparsePoly> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    for g in &mut monic {
        g.make_monic(ring);
    }
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let s = s_polynomial(ring, &monic[i], &monic[j]);
            if !reduce(ring, &s, &monic).is_zero() {
                return false;
            }
        }
    }
    true
}
