//! Sparse multivariate polynomials over F_p.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::field::FpElem;
use crate::monomial::MultiIndex;
use crate::ring::{PolyRing, RationalPoint};

/// Total degree, with the zero polynomial at `NegInfinity` (below every
/// finite degree).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl core::fmt::Display for Degree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub type Term = (MultiIndex, FpElem);

/// A polynomial in `ring`, stored as terms sorted strictly decreasing under
/// the ring's monomial order with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: PolyRing) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn one(ring: PolyRing) -> Self {
        Self::constant(ring, FpElem::ONE)
    }

    pub fn constant(ring: PolyRing, c: FpElem) -> Self {
        Self::monomial(ring, MultiIndex::zero(ring.n()), c)
    }

    pub fn from_i64(ring: PolyRing, c: i64) -> Self {
        Self::constant(ring, ring.elem(c))
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn var(ring: PolyRing, i: usize) -> Result<Self> {
        if i >= ring.n() {
            return Err(AlgebraError::VariableOutOfRange {
                index: i + 1,
                n: ring.n(),
            });
        }
        Ok(Self::monomial(ring, MultiIndex::unit(ring.n(), i), FpElem::ONE))
    }

    pub fn monomial(ring: PolyRing, mono: MultiIndex, c: FpElem) -> Self {
        assert_eq!(mono.len(), ring.n(), "exponent vector length");
        let c = FpElem::new(c.value(), ring.p());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            alloc::vec![(mono, c)]
        };
        Polynomial { ring, terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = Term>>(ring: PolyRing, terms: I) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        for (m, _) in &terms {
            assert_eq!(m.len(), ring.n(), "exponent vector length");
        }
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        let p = ring.p();
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = FpElem::new(c.value(), p);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(c, p),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        Polynomial { ring, terms: out }
    }

    /// Terms already sorted and reduced; only checked in debug builds.
    pub(crate) fn from_sorted_terms(ring: PolyRing, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Nonzero constant, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&MultiIndex> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> FpElem {
        self.terms.first().map_or(FpElem::ZERO, |t| t.1)
    }

    pub fn coeff(&self, mono: &MultiIndex) -> FpElem {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|(m, _)| order.cmp(mono, m))
            .map_or(FpElem::ZERO, |i| self.terms[i].1)
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Largest exponent of `x_{i+1}` appearing.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exps()[i]).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            Err(AlgebraError::RingMismatch)
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(FpElem::ONE, None, other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(FpElem::ONE.neg(self.ring.p()), None, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    /// `self + c * mono * other`, one merge pass.
    pub(crate) fn add_scaled(
        &self,
        c: FpElem,
        mono: Option<&MultiIndex>,
        other: &Self,
    ) -> Self {
        let p = self.ring.p();
        let order = self.ring.order();
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let shifted = |m: &MultiIndex| match mono {
            Some(s) => m.mul(s),
            None => m.clone(),
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let mut pending: Option<MultiIndex> = other.terms.first().map(|t| shifted(&t.0));
        while i < self.terms.len() || pending.is_some() {
            match (&self.terms.get(i), &pending) {
                (Some((ma, ca)), Some(mb)) => match order.cmp(ma, mb) {
                    Ordering::Greater => {
                        out.push((ma.clone(), *ca));
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push((mb.clone(), other.terms[j].1.mul(c, p)));
                        j += 1;
                        pending = other.terms.get(j).map(|t| shifted(&t.0));
                    }
                    Ordering::Equal => {
                        let s = ca.add(other.terms[j].1.mul(c, p), p);
                        if !s.is_zero() {
                            out.push((ma.clone(), s));
                        }
                        i += 1;
                        j += 1;
                        pending = other.terms.get(j).map(|t| shifted(&t.0));
                    }
                },
                (Some((ma, ca)), None) => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                (None, Some(mb)) => {
                    out.push((mb.clone(), other.terms[j].1.mul(c, p)));
                    j += 1;
                    pending = other.terms.get(j).map(|t| shifted(&t.0));
                }
                (None, None) => unreachable!(),
            }
        }
        Polynomial::from_sorted_terms(self.ring, out)
    }

    pub fn neg(&self) -> Self {
        self.scale(FpElem::ONE.neg(self.ring.p()))
    }

    pub fn scale(&self, c: FpElem) -> Self {
        let p = self.ring.p();
        let c = FpElem::new(c.value(), p);
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c, p))).collect(),
        }
    }

    /// Multiply by `c * mono`; order is preserved so no re-sort is needed.
    pub fn mul_term(&self, c: FpElem, mono: &MultiIndex) -> Self {
        let p = self.ring.p();
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a.mul(c, p)))
                .collect(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(*c, m);
        }
        let p = self.ring.p();
        let mut all = Vec::with_capacity(small.len() * big.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                all.push((ma.mul(mb), ca.mul(*cb, p)));
            }
        }
        Polynomial::from_terms(self.ring, all)
    }

    /// `g(x)^q` for `q` a power of `p`: exponents scale by `q`, coefficients
    /// are fixed since `c^q = c` in F_p.
    pub fn frobenius_power(&self, q: u64) -> Result<Self> {
        let k = u32::try_from(q)
            .map_err(|_| AlgebraError::ResourceLimit(crate::error::Ceiling::Exponent))?;
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            terms.push((m.scale(k)?, *c));
        }
        // Scaling every exponent by the same positive factor preserves
        // lex, grevlex and elimination comparisons.
        Ok(Polynomial::from_sorted_terms(self.ring, terms))
    }

    /// `self^e`, splitting `e` into base-`p` digits so that each digit power
    /// is lifted with the Frobenius instead of repeated squaring.
    pub fn pow(&self, e: u64) -> Self {
        if e == 0 {
            return Polynomial::one(self.ring);
        }
        if self.is_zero() {
            return self.clone();
        }
        let p = self.ring.p();
        let mut acc = Polynomial::one(self.ring);
        let mut rest = e;
        let mut q = 1u64;
        while rest > 0 {
            let digit = rest % p;
            if digit > 0 {
                let small = self.pow_small(digit);
                let lifted = small
                    .frobenius_power(q)
                    .expect("exponent overflow in pow");
                acc = acc.mul_impl(&lifted);
            }
            rest /= p;
            if rest > 0 {
                q = q.checked_mul(p).expect("exponent overflow in pow");
            }
        }
        acc
    }

    fn pow_small(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(c.inv(self.ring.p()).expect("nonzero leading coefficient")),
        }
    }

    /// `g(x_1 + a_1, ..., x_n + a_n)`.
    pub fn translate(&self, a: &RationalPoint) -> Result<Self> {
        if a.coords().len() != self.ring.n() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.ring.n(),
                got: a.coords().len(),
            });
        }
        let mut g = self.clone();
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let shifted = Polynomial::from_terms(
                self.ring,
                [
                    (MultiIndex::unit(self.ring.n(), i), FpElem::ONE),
                    (MultiIndex::zero(self.ring.n()), ai),
                ],
            );
            let top = g.degree_in(i) as usize;
            let mut powers = Vec::with_capacity(top + 1);
            powers.push(Polynomial::one(self.ring));
            for k in 1..=top {
                let next = powers[k - 1].mul_impl(&shifted);
                powers.push(next);
            }
            let mut terms = Vec::new();
            for (m, c) in &g.terms {
                let e = m.exps()[i] as usize;
                let mut rest = m.clone();
                rest.as_mut_slice()[i] = 0;
                for (pm, pc) in &powers[e].terms {
                    terms.push((pm.mul(&rest), pc.mul(*c, self.ring.p())));
                }
            }
            g = Polynomial::from_terms(self.ring, terms);
        }
        Ok(g)
    }

    /// Same polynomial viewed in `ring`, which must share `p` and `n`.
    pub fn reorder(&self, ring: PolyRing) -> Result<Self> {
        if ring.p() != self.ring.p() || ring.n() != self.ring.n() {
            return Err(AlgebraError::RingMismatch);
        }
        if ring == self.ring {
            return Ok(self.clone());
        }
        Ok(Polynomial::from_terms(ring, self.terms.iter().cloned()))
    }

    /// Embed into `big`, placing variable `i` at index `i + offset`.
    pub(crate) fn embed(&self, big: PolyRing, offset: usize) -> Self {
        debug_assert_eq!(big.n(), self.ring.n() + offset);
        Polynomial::from_terms(
            big,
            self.terms.iter().map(|(m, c)| {
                let mut e = MultiIndex::zero(big.n());
                e.as_mut_slice()[offset..].copy_from_slice(m.exps());
                (e, *c)
            }),
        )
    }

    /// Inverse of [`embed`](Self::embed); `None` if a dropped variable occurs.
    pub(crate) fn project(&self, small: PolyRing, offset: usize) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            if m.exps()[..offset].iter().any(|&e| e != 0) {
                return None;
            }
            terms.push((MultiIndex::from_slice(&m.exps()[offset..]), *c));
        }
        Some(Polynomial::from_terms(small, terms))
    }

    /// Substitute `x_n = 0` and drop the variable.
    pub fn set_last_variable_zero(&self, small: PolyRing) -> Self {
        let last = self.ring.n() - 1;
        Polynomial::from_terms(
            small,
            self.terms
                .iter()
                .filter(|(m, _)| m.exps()[last] == 0)
                .map(|(m, c)| (MultiIndex::from_slice(&m.exps()[..last]), *c)),
        )
    }

    /// Multivariate division; returns `(quotients, remainder)`.
    pub fn divide_by(&self, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
        let p = self.ring.p();
        let mut quotients: Vec<Vec<Term>> = alloc::vec![Vec::new(); divisors.len()];
        let mut rem = Vec::new();
        let mut work = self.clone();
        while let Some((m, c)) = work.terms.first().cloned() {
            let hit = divisors.iter().enumerate().find(|(_, d)| {
                d.leading_monomial().is_some_and(|lm| lm.divides(&m))
            });
            match hit {
                Some((k, d)) => {
                    let q = m.div_unchecked(d.leading_monomial().unwrap());
                    let qc = c.mul(d.leading_coeff().inv(p).unwrap(), p);
                    work = work.add_scaled(qc.neg(p), Some(&q), d);
                    quotients[k].push((q, qc));
                }
                None => {
                    rem.push((m, c));
                    work.terms.remove(0);
                }
            }
        }
        (
            quotients
                .into_iter()
                .map(|t| Polynomial::from_terms(self.ring, t))
                .collect(),
            Polynomial::from_sorted_terms(self.ring, rem),
        )
    }

    /// Exact quotient `self / h`; errors if `h` does not divide.
    pub fn exact_div(&self, h: &Polynomial) -> Result<Self> {
        if h.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        self.check_ring(h)?;
        let (mut q, r) = self.divide_by(core::slice::from_ref(h));
        if !r.is_zero() {
            return Err(AlgebraError::Invariant("inexact polynomial division"));
        }
        Ok(q.pop().unwrap())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl core::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on ring mismatch; use the `checked_*` form to get an error.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl core::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl core::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

/// Product of a list of polynomials; the empty product is 1.
pub fn product(ring: PolyRing, polys: &[Polynomial]) -> Polynomial {
    polys
        .iter()
        .fold(Polynomial::one(ring), |acc, f| &acc * f)
}
