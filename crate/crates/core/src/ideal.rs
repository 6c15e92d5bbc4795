//! Ideals of `F_p[x_1..x_n]`: reduced Groebner bases, normal forms,
//! membership, quotients, intersections and saturation.

use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{AlgebraError, Ceiling, Result};
use crate::field::FpElem;
use crate::gb::{self, Budget, VTerm, Vector};
use crate::limits::Limits;
use crate::monomial::MultiIndex;
use crate::poly::{Degree, Polynomial};
use crate::ring::{PolyRing, RationalPoint};

pub(crate) fn poly_to_vector(f: &Polynomial) -> Vector {
    Vector {
        terms: f
            .terms()
            .iter()
            .map(|(m, c)| VTerm {
                pos: 0,
                mono: m.clone(),
                coeff: *c,
            })
            .collect(),
    }
}

pub(crate) fn vector_to_poly(ring: PolyRing, v: &Vector) -> Polynomial {
    Polynomial::from_sorted_terms(ring, v.terms.iter().map(|t| (t.mono.clone(), t.coeff)).collect())
}

/// An ideal given by generators, with its reduced Groebner basis computed on
/// first use. The cache is filled compute-then-publish, so concurrent readers
/// may race to compute it but all observe the same basis.
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    limits: Limits,
    gb: OnceBox<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceBox::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(Box::new(b.clone()));
        }
        Ideal {
            ring: self.ring,
            gens: self.gens.clone(),
            limits: self.limits.clone(),
            gb,
        }
    }
}

impl core::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Ideal")
            .field("ring", &self.ring)
            .field("gens", &self.gens)
            .finish()
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ring`.
    pub fn new(ring: PolyRing, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| *g.ring() != ring) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(Ideal {
            ring,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            limits: Limits::default(),
            gb: OnceBox::new(),
        })
    }

    /// The maximal ideal `(x_1, ..., x_n)` of the origin.
    pub fn maximal_at_origin(ring: PolyRing) -> Self {
        let gens = (0..ring.n()).map(|i| Polynomial::var(ring, i).unwrap()).collect();
        Ideal::new(ring, gens).unwrap()
    }

    /// `m_a = (x_1 - a_1, ..., x_n - a_n)`.
    pub fn maximal_at(ring: PolyRing, a: &RationalPoint) -> Result<Self> {
        let mut gens = Vec::with_capacity(ring.n());
        for (i, c) in a.coords().iter().enumerate() {
            let x = Polynomial::var(ring, i)?;
            gens.push(&x - &Polynomial::constant(ring, *c));
        }
        Ideal::new(ring, gens)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    fn derived(&self, gens: Vec<Polynomial>) -> Self {
        Ideal {
            ring: self.ring,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            limits: self.limits.clone(),
            gb: OnceBox::new(),
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Sum of the total degrees of the generators.
    pub fn degree_sum(&self) -> u64 {
        self.gens
            .iter()
            .filter_map(|g| g.total_degree().finite())
            .sum()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Groebner basis for the ring's order: monic, pairwise
    /// reduced, sorted by increasing leading monomial.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        self.gb
            .get_or_try_init(|| {
                let vecs: Vec<Vector> = self.gens.iter().map(poly_to_vector).collect();
                let basis = gb::groebner(&self.ring, &vecs, &self.limits)?;
                Ok(Box::new(
                    basis.iter().map(|v| vector_to_poly(self.ring, v)).collect(),
                ))
            })
            .map(|b| b.as_slice())
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(|g| g.is_unit()))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn normal_form(&self, g: &Polynomial) -> Result<Polynomial> {
        if *g.ring() != self.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let basis: Vec<Vector> = self.groebner_basis()?.iter().map(poly_to_vector).collect();
        let refs: Vec<&Vector> = basis.iter().collect();
        let unbounded = Limits {
            max_reductions: usize::MAX,
            ..self.limits.clone()
        };
        let mut budget = Budget::new(&unbounded);
        let r = gb::reduce(&self.ring, &poly_to_vector(g), &refs, &mut budget)?;
        Ok(vector_to_poly(self.ring, &r))
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(g)?.is_zero())
    }

    /// `self` contained in `other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by comparing reduced Groebner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    /// `t * self + (1 - t) * other`, eliminating `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(self.derived(Vec::new()));
        }
        let big = self.ring.elimination_ring(1);
        let t = Polynomial::var(big, 0)?;
        let one_minus_t = &Polynomial::one(big) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(&t * &f.embed(big, 1));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.embed(big, 1));
        }
        let elim = Ideal::new(big, gens)?.with_limits(self.limits.clone());
        let mut kept = Vec::new();
        for g in elim.groebner_basis()? {
            if let Some(h) = g.project(self.ring, 1) {
                kept.push(h);
            }
        }
        Ok(self.derived(kept))
    }

    /// `(self : h) = { g : g h in self }`.
    pub fn ideal_quotient(&self, h: &Polynomial) -> Result<Ideal> {
        if h.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if *h.ring() != self.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if h.is_unit() {
            return Ok(self.clone());
        }
        let principal = self.derived(alloc::vec![h.clone()]);
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            gens.push(g.exact_div(h)?);
        }
        Ok(self.derived(gens))
    }

    /// `(self : J) = intersection over generators g of J of (self : g)`.
    pub fn ideal_quotient_ideal(&self, j: &Ideal) -> Result<Ideal> {
        if j.gens.is_empty() {
            return Err(AlgebraError::EmptyIdeal);
        }
        if j.ring != self.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let mut acc: Option<Ideal> = None;
        for g in &j.gens {
            let q = self.ideal_quotient(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `(self : J^inf)`, the stable value of `K <- (K : J)` from `K = self`.
    pub fn saturation(&self, j: &Ideal) -> Result<Ideal> {
        Ok(self.saturation_chain(j)?.pop().unwrap())
    }

    /// The chain `self, (self : J), ((self : J) : J), ...` up to and including
    /// the first repeated ideal.
    pub fn saturation_chain(&self, j: &Ideal) -> Result<Vec<Ideal>> {
        let mut chain = alloc::vec![self.clone()];
        for _ in 0..self.limits.max_saturation_steps {
            self.limits.check_cancel()?;
            let k = chain.last().unwrap();
            let next = k.ideal_quotient_ideal(j)?;
            // K is always contained in (K : J), so equality reduces to one inclusion
            let stable = next.is_subset_of(k)?;
            if stable {
                return Ok(chain);
            }
            let next = self.derived(next.groebner_basis()?.to_vec());
            chain.push(next);
        }
        Err(AlgebraError::ResourceLimit(Ceiling::SaturationSteps))
    }

    /// Ideal generated by the translated generators `g(x + a)`.
    pub fn translate(&self, a: &RationalPoint) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            gens.push(g.translate(a)?);
        }
        Ok(self.derived(gens))
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(self.derived(gens))
    }

    /// Generators of the basis that are not in `other`.
    pub fn gens_outside(&self, other: &Ideal) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for g in self.groebner_basis()? {
            if !other.contains(g)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    }

    /// Leading monomials of the reduced basis.
    pub fn leading_monomials(&self) -> Result<Vec<MultiIndex>> {
        Ok(self
            .groebner_basis()?
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect())
    }

    /// Largest total degree among generators.
    pub fn max_degree(&self) -> Degree {
        self.gens
            .iter()
            .map(|g| g.total_degree())
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// The unit ideal `(1)`.
    pub fn unit(ring: PolyRing) -> Self {
        Ideal::new(ring, alloc::vec![Polynomial::constant(ring, FpElem::ONE)]).unwrap()
    }
}

/// Equality via reduced bases; errors if the rings differ.
pub fn ideals_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

/// Independent check that `basis` satisfies Buchberger's S-pair criterion.
pub fn verify_confluence(ring: &PolyRing, basis: &[Polynomial]) -> bool {
    let vecs: Vec<Vector> = basis.iter().map(poly_to_vector).collect();
    gb::is_confluent(ring, &vecs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_polynomial_list};
    use crate::poly::tests::{arb_poly, ring};
    use proptest::prelude::*;

    fn ideal(r: PolyRing, text: &str) -> Ideal {
        Ideal::new(r, parse_polynomial_list(r, text).unwrap()).unwrap()
    }

    fn poly(r: PolyRing, text: &str) -> Polynomial {
        parse_polynomial(r, text).unwrap()
    }

    fn basis_text(i: &Ideal) -> alloc::string::String {
        crate::parse::format_polynomial_list(i.groebner_basis().unwrap())
    }

    #[test]
    fn already_reduced() {
        let r = ring(2, 2);
        assert_eq!(basis_text(&ideal(r, "x1, x2")), "x2, x1");
        assert_eq!(basis_text(&ideal(r, "x1^2, x1")), "x1");
    }

    #[test]
    fn confluence_on_small_example() {
        let r = ring(5, 2);
        let i = ideal(r, "x1^2 + x2^2, x1*x2");
        let b = i.groebner_basis().unwrap();
        assert!(verify_confluence(&r, b));
        for g in i.gens() {
            assert!(i.contains(g).unwrap());
        }
        // x2^3 = x2*(x1^2+x2^2) - x1*(x1*x2)
        assert!(i.contains(&poly(r, "x2^3")).unwrap());
        assert!(!i.contains(&poly(r, "x2^2")).unwrap());
    }

    #[test]
    fn confluence_verifier_rejects_non_bases() {
        let r = ring(5, 2);
        let not_gb = [poly(r, "x1^2 + x2^2"), poly(r, "x1*x2")];
        assert!(!verify_confluence(&r, &not_gb));
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(3, 2);
        let i = ideal(r, "x1^2 - x2, x1*x2 - 1");
        for g in i.gens() {
            assert!(i.normal_form(g).unwrap().is_zero());
        }
        let j = ideal(r, "x1, x2^2");
        assert_eq!(j.normal_form(&Polynomial::one(r)).unwrap(), Polynomial::one(r));
    }

    #[test]
    fn quotient_examples() {
        let r = ring(2, 2);
        let i = ideal(r, "x1^2");
        let q = i.ideal_quotient(&poly(r, "x1")).unwrap();
        assert!(q.equals(&ideal(r, "x1")).unwrap());
        let q = i.ideal_quotient(&poly(r, "x1^3")).unwrap();
        assert!(q.is_unit_ideal().unwrap());
        assert_eq!(i.ideal_quotient(&Polynomial::zero(r)).unwrap_err(), AlgebraError::ZeroPolynomial);
    }

    #[test]
    fn quotient_by_ideal_double_inclusion() {
        let r = ring(3, 3);
        let i = ideal(r, "x1*x2, x1*x3");
        let j = ideal(r, "x2, x3");
        let q = i.ideal_quotient_ideal(&j).unwrap();
        // (x1 x2, x1 x3) = (x1) meet (x2, x3), so (I : J) = (x1)
        assert!(q.equals(&ideal(r, "x1")).unwrap());
        // brute force: every generator times every element of J lands in I
        for g in q.gens() {
            for h in j.gens() {
                assert!(i.contains(&(g * h)).unwrap());
            }
        }
        let unit = ideal(r, "1");
        assert!(i.ideal_quotient_ideal(&unit).unwrap().equals(&i).unwrap());
        let empty = Ideal::new(r, alloc::vec![]).unwrap();
        assert_eq!(i.ideal_quotient_ideal(&empty).unwrap_err(), AlgebraError::EmptyIdeal);
        // (I : I) is the whole ring
        assert!(i.ideal_quotient_ideal(&i).unwrap().is_unit_ideal().unwrap());
    }

    #[test]
    fn self_quotient_of_proper_ideal_contains_it() {
        let r = ring(5, 2);
        let i = ideal(r, "x1^2, x1*x2");
        let q = i.ideal_quotient_ideal(&i).unwrap();
        assert!(i.is_subset_of(&q).unwrap());
    }

    #[test]
    fn saturation_known_value() {
        let r = ring(2, 2);
        let i = ideal(r, "x1^2, x1*x2");
        let m = Ideal::maximal_at_origin(r);
        let s = i.saturation(&m).unwrap();
        assert!(s.equals(&ideal(r, "x1")).unwrap());
        // idempotent
        assert!(s.saturation(&m).unwrap().equals(&s).unwrap());
        let chain = i.saturation_chain(&m).unwrap();
        assert_eq!(chain.len(), 2);
    }

    #[test]
    fn primes_are_saturated() {
        let r = ring(3, 3);
        let prime = ideal(r, "x1, x2");
        let j = ideal(r, "x3");
        assert!(prime.saturation(&j).unwrap().equals(&prime).unwrap());
        let unit = Ideal::unit(r);
        assert!(prime.saturation(&unit).unwrap().equals(&prime).unwrap());
    }

    #[test]
    fn equality_examples() {
        let r = ring(7, 2);
        assert!(ideal(r, "x1, x2").equals(&ideal(r, "x2, x1 + x2")).unwrap());
        assert!(!ideal(r, "x1").equals(&ideal(r, "x1^2")).unwrap());
        let other = ideal(ring(5, 2), "x1");
        assert_eq!(ideal(r, "x1").equals(&other).unwrap_err(), AlgebraError::RingMismatch);
    }

    #[test]
    fn resource_ceiling_is_reported() {
        let r = ring(7, 3);
        let i = ideal(r, "x1 + x2 + x3, x1*x2 + x2*x3 + x3*x1, x1*x2*x3 - 1");
        let tight = Limits {
            max_reductions: 3,
            ..Limits::default()
        };
        let i = i.with_limits(tight);
        assert_eq!(
            i.groebner_basis().unwrap_err(),
            AlgebraError::ResourceLimit(Ceiling::Reductions)
        );
    }

    #[test]
    fn cancellation_is_observed() {
        let r = ring(7, 3);
        let token = crate::limits::CancelToken::new();
        token.cancel();
        let i = ideal(r, "x1^2 + x2, x2^2 + x3")
            .with_limits(Limits::default().with_cancel(token));
        let m = Ideal::maximal_at_origin(r).with_limits(i.limits().clone());
        assert_eq!(i.saturation(&m).unwrap_err(), AlgebraError::Cancelled);
    }

    #[test]
    fn lex_basis_of_a_point() {
        let r = ring(5, 2).with_order(crate::MonomialOrder::Lex);
        let i = ideal(r, "x1^2 - x2, x2 - 4");
        let b = basis_text(&i);
        assert_eq!(b, "x2 + 1, x1^2 + 1");
    }

    fn ideal_strategy() -> impl Strategy<Value = (PolyRing, Vec<Polynomial>)> {
        (prop_oneof![Just(2u64), Just(3), Just(5)], 2usize..=3).prop_flat_map(|(p, n)| {
            let r = ring(p, n);
            (Just(r), proptest::collection::vec(arb_poly(r, 2, 3), 1..=3))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn basis_is_confluent_and_contains_gens((r, gens) in ideal_strategy()) {
            let i = Ideal::new(r, gens).unwrap();
            let b = i.groebner_basis().unwrap();
            prop_assert!(verify_confluence(&r, b));
            for g in i.gens() {
                prop_assert!(i.contains(g).unwrap());
            }
            for g in b {
                prop_assert!(g.leading_coeff() == FpElem::ONE);
            }
        }

        #[test]
        fn canonical_under_shuffling((r, gens) in ideal_strategy(), seed in 0usize..6) {
            let mut shuffled = gens.clone();
            shuffled.rotate_left(seed % gens.len().max(1));
            shuffled.reverse();
            let extra = if gens.len() >= 2 { &gens[0] + &gens[1] } else { Polynomial::zero(r) };
            shuffled.push(extra);
            let a = Ideal::new(r, gens).unwrap();
            let b = Ideal::new(r, shuffled).unwrap();
            prop_assert_eq!(a.groebner_basis().unwrap(), b.groebner_basis().unwrap());
        }

        #[test]
        fn normal_form_is_idempotent_and_in_coset((r, gens) in ideal_strategy(), g in (0u64..1).prop_flat_map(|_| arb_poly(ring(5, 3), 3, 5))) {
            let i = Ideal::new(r, gens).unwrap();
            let g = Polynomial::from_terms(r, g.terms().iter().map(|(m, c)| (MultiIndex::from_slice(&m.exps()[..r.n()]), FpElem::new(c.value(), r.p()))));
            let nf = i.normal_form(&g).unwrap();
            prop_assert_eq!(i.normal_form(&nf).unwrap(), nf.clone());
            prop_assert!(i.contains(&(&g - &nf)).unwrap());
        }

        #[test]
        fn quotient_generators_multiply_into_ideal((r, gens) in ideal_strategy(), h in (0u64..1).prop_flat_map(|_| arb_poly(ring(5, 3), 2, 2))) {
            let i = Ideal::new(r, gens).unwrap();
            let h = Polynomial::from_terms(r, h.terms().iter().map(|(m, c)| (MultiIndex::from_slice(&m.exps()[..r.n()]), FpElem::new(c.value(), r.p()))));
            prop_assume!(!h.is_zero());
            let q = i.ideal_quotient(&h).unwrap();
            for g in q.gens() {
                prop_assert!(i.contains(&(g * &h)).unwrap());
            }
            prop_assert!(i.is_subset_of(&q).unwrap());
        }
    }
}
