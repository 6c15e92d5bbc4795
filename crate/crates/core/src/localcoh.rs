//! Checkers for the vanishing of `m`-torsion, level selection, top local
//! cohomology certificates, regular linear forms and the projective
//! dimension bound.

use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::frobenius::{bracket_power, psi_map, FrobeniusLevel};
use crate::ideal::Ideal;
use crate::koszul::verify_prop_van;
use crate::limits::Limits;
use crate::module::ColengthCount;
use crate::poly::{product, Degree, Polynomial};
use crate::resolution::{depth_via_ab, projective_dimension};
use crate::ring::{PolyRing, RationalPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    HypothesisViolated,
    ResourceLimit,
    Inconclusive,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::HypothesisViolated => "hypothesis_violated",
            Outcome::ResourceLimit => "resource_limit",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Q1,
    TopVanishing,
    PropVanishing,
    PdBound,
}

impl CheckKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckKind::Q1 => "q1",
            CheckKind::TopVanishing => "topvan",
            CheckKind::PropVanishing => "propvan",
            CheckKind::PdBound => "pd_bound",
        }
    }
}

/// Result of one check. `property_holds` is the raw verdict of the checked
/// property; `outcome` folds in the degree hypothesis and resource failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: CheckKind,
    pub ring: PolyRing,
    pub gens: Vec<Polynomial>,
    pub point: Option<RationalPoint>,
    pub sum_deg: u64,
    pub hypothesis_holds: bool,
    pub outcome: Outcome,
    pub property_holds: Option<bool>,
    pub witness: Vec<Polynomial>,
    pub level: Option<u32>,
    pub memberships: Vec<bool>,
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    pub torsion_length: Option<usize>,
}

impl CheckReport {
    fn new(kind: CheckKind, f: &[Polynomial], point: Option<RationalPoint>) -> Result<Self> {
        let Some(first) = f.first() else {
            return Err(AlgebraError::EmptyIdeal);
        };
        let ring = *first.ring();
        let sum_deg = degree_sum(f);
        Ok(CheckReport {
            kind,
            ring,
            gens: f.to_vec(),
            point,
            sum_deg,
            hypothesis_holds: sum_deg < ring.n() as u64,
            outcome: Outcome::Inconclusive,
            property_holds: None,
            witness: Vec::new(),
            level: None,
            memberships: Vec::new(),
            pd: None,
            depth: None,
            torsion_length: None,
        })
    }

    fn settle(&mut self, holds: bool) {
        self.property_holds = Some(holds);
        self.outcome = match (self.hypothesis_holds, holds) {
            (false, _) => Outcome::HypothesisViolated,
            (true, true) => Outcome::Pass,
            (true, false) => Outcome::Fail,
        };
    }

    /// A fail with the hypothesis satisfied: a potential counterexample.
    pub fn is_finding(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

/// Turns resource exhaustion into a `ResourceLimit` report.
fn guarded(
    kind: CheckKind,
    f: &[Polynomial],
    point: Option<RationalPoint>,
    run: impl FnOnce(&mut CheckReport) -> Result<()>,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(kind, f, point)?;
    match run(&mut report) {
        Ok(()) => Ok(report),
        Err(e) if e.is_resource() => {
            report.outcome = Outcome::ResourceLimit;
            report.property_holds = None;
            Ok(report)
        }
        Err(e) => Err(e),
    }
}

pub fn degree_sum(f: &[Polynomial]) -> u64 {
    f.iter().filter_map(|g| g.total_degree().finite()).sum()
}

/// Smallest `l >= 1` with `l > deg`.
pub fn level_for_degree(deg: u64) -> u32 {
    (deg + 1).max(1) as u32
}

/// Minimal level with `l > deg g`, after checking `l + (q-1)(n-1) <= n(q-1)`.
pub fn choose_level(f: &[Polynomial], g: &Polynomial) -> Result<FrobeniusLevel> {
    let ring = *g.ring();
    let n = ring.n() as u64;
    let sum = degree_sum(f);
    if sum >= n {
        return Err(AlgebraError::HypothesisViolated { sum, n: ring.n() });
    }
    let l = match g.total_degree() {
        Degree::NegInfinity => 1,
        Degree::Finite(d) => level_for_degree(d),
    };
    let level = FrobeniusLevel::for_ring(&ring, l)?;
    let q = level.q();
    if l as u64 + (q - 1) * (n - 1) > n * (q - 1) {
        return Err(AlgebraError::Invariant("level inequality chain violated"));
    }
    Ok(level)
}

/// `deg(g * prod f^{q-1}) < n(q-1)`; when true the top Frobenius component
/// of that product must vanish, which is checked.
pub fn degree_criterion(f: &[Polynomial], g: &Polynomial, level: FrobeniusLevel) -> Result<bool> {
    let ring = *g.ring();
    let q = level.q();
    let h = product(ring, &f.iter().map(|x| x.pow(q - 1)).collect::<Vec<_>>());
    let bound = ring.n() as u64 * (q - 1);
    let holds = match h.checked_mul(g)?.total_degree() {
        Degree::NegInfinity => true,
        Degree::Finite(d) => d < bound,
    };
    if holds && !psi_map(&h, g, level)?.is_zero() {
        return Err(AlgebraError::Invariant("low degree product has a top component"));
    }
    Ok(holds)
}

/// Whether `H^0_{m_a}(R/I) = 0`, by comparing `I` with `(I : m_a^inf)`.
/// The witness is a generator of the saturation outside `I`.
pub fn question_q_check(f: &[Polynomial], a: &RationalPoint, limits: &Limits) -> Result<CheckReport> {
    guarded(CheckKind::Q1, f, Some(a.clone()), |report| {
        let ring = report.ring;
        let i = Ideal::new(ring, f.to_vec())?.with_limits(limits.clone()).translate(a)?;
        let sat = i.saturation(&Ideal::maximal_at_origin(ring))?;
        let extra = sat.gens_outside(&i)?;
        let back = a.neg(&ring);
        report.witness = extra.iter().map(|g| g.translate(&back)).collect::<Result<_>>()?;
        report.settle(extra.is_empty());
        Ok(())
    })
}

/// Certificate for `H^0_m(H^s_I(R)) = 0` through the generating morphism
/// `R/I -> R/I^[p]`: immediate when `H^0_m(R/I) = 0`, otherwise the first
/// `e <= e_max` with `(prod f)^{p^e - 1} h in I^[p^e]` for every saturation
/// generator `h`.
pub fn top_lc_vanishing_certificate(
    f: &[Polynomial],
    a: &RationalPoint,
    e_max: u32,
    limits: &Limits,
) -> Result<CheckReport> {
    guarded(CheckKind::TopVanishing, f, Some(a.clone()), |report| {
        let ring = report.ring;
        let i = Ideal::new(ring, f.to_vec())?.with_limits(limits.clone()).translate(a)?;
        let sat = i.saturation(&Ideal::maximal_at_origin(ring))?;
        let extra = sat.gens_outside(&i)?;
        let back = a.neg(&ring);
        report.witness = extra.iter().map(|g| g.translate(&back)).collect::<Result<_>>()?;
        if extra.is_empty() {
            report.property_holds = Some(true);
            report.outcome = Outcome::Pass;
            return Ok(());
        }
        let prod = product(ring, i.gens());
        for e in 1..=e_max {
            let level = FrobeniusLevel::for_ring(&ring, e)?;
            let b = bracket_power(&i, level)?;
            let mult = prod.pow(level.q() - 1);
            report.memberships = extra
                .iter()
                .map(|h| b.contains(&(&mult * h)))
                .collect::<Result<_>>()?;
            if report.memberships.iter().all(|&m| m) {
                report.level = Some(e);
                report.property_holds = Some(true);
                report.outcome = Outcome::Pass;
                return Ok(());
            }
        }
        report.outcome = Outcome::Inconclusive;
        Ok(())
    })
}

/// Runs the Koszul torsion-killing verifier and summarizes it.
pub fn prop_van_check(
    f: &[Polynomial],
    i: usize,
    a: &RationalPoint,
    level_cap: u32,
    limits: &Limits,
) -> Result<CheckReport> {
    guarded(CheckKind::PropVanishing, f, Some(a.clone()), |report| {
        let cert = verify_prop_van(f, i, a, level_cap, limits)?;
        report.torsion_length = match cert.torsion_length {
            ColengthCount::Finite(k) => Some(k),
            _ => None,
        };
        report.level = cert.level();
        report.memberships = cert.verdicts.iter().map(|v| v.killed_at.is_some()).collect();
        report.witness = cert
            .verdicts
            .iter()
            .flat_map(|v| v.representative.entries().iter().cloned())
            .collect();
        report.property_holds = Some(report.memberships.iter().all(|&m| m));
        report.outcome = cert.outcome;
        Ok(())
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularFormSearch {
    pub form: Option<Polynomial>,
    pub candidates: usize,
}

/// Looks for a linear form `y` with `(I : y) = I`. First tries
/// `y_t = sum c_j^t x_j` with distinct nonzero `c_j = j + 1` (possible when
/// `p - 1 >= n`), then every normalized linear form over `F_p`.
pub fn find_regular_linear_form(ideal: &Ideal) -> Result<RegularFormSearch> {
    let ring = *ideal.ring();
    let (p, n) = (ring.p(), ring.n());
    let mut candidates = 0;
    let mut try_form = |coeffs: &[u64]| -> Result<Option<Polynomial>> {
        candidates += 1;
        let y = linear_form(ring, coeffs)?;
        let quot = ideal.ideal_quotient(&y)?;
        Ok(if quot.is_subset_of(ideal)? { Some(y) } else { None })
    };
    if p > n as u64 {
        for t in 1..p {
            let coeffs: Vec<u64> = (0..n).map(|j| ring.elem(j as i64 + 1).pow(t, p).value()).collect();
            if let Some(y) = try_form(&coeffs)? {
                return Ok(RegularFormSearch { form: Some(y), candidates });
            }
        }
    }
    // normalized: first nonzero coefficient is 1
    for lead in 0..n {
        let rest = n - lead - 1;
        let count = p.checked_pow(rest as u32).ok_or(AlgebraError::ResourceLimit(crate::Ceiling::Exponent))?;
        for mut k in 0..count {
            let mut coeffs = alloc::vec![0u64; n];
            coeffs[lead] = 1;
            for c in coeffs.iter_mut().skip(lead + 1) {
                *c = k % p;
                k /= p;
            }
            if let Some(y) = try_form(&coeffs)? {
                return Ok(RegularFormSearch { form: Some(y), candidates });
            }
        }
    }
    Ok(RegularFormSearch { form: None, candidates })
}

fn linear_form(ring: PolyRing, coeffs: &[u64]) -> Result<Polynomial> {
    let mut y = Polynomial::zero(ring);
    for (j, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            y = &y + &Polynomial::var(ring, j)?.scale(ring.elem(c as i64));
        }
    }
    Ok(y)
}

/// Compares `pd R/I` with the degree sum; also reports `depth = n - pd`.
pub fn pd_bound_check(f: &[Polynomial], limits: &Limits) -> Result<CheckReport> {
    if f.iter().any(|g| !g.is_homogeneous()) {
        return Err(AlgebraError::NotHomogeneous);
    }
    guarded(CheckKind::PdBound, f, None, |report| {
        let ring = report.ring;
        let i = Ideal::new(ring, f.to_vec())?.with_limits(limits.clone());
        let pd = projective_dimension(&i)?;
        report.pd = Some(pd);
        report.depth = Some(depth_via_ab(pd, ring.n())?);
        report.settle(pd as u64 <= report.sum_deg);
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_polynomial_list};
    use crate::poly::tests::{arb_poly, ring};
    use proptest::prelude::*;

    fn polys(r: PolyRing, s: &str) -> Vec<Polynomial> {
        parse_polynomial_list(r, s).unwrap()
    }

    #[test]
    fn choose_level_examples() {
        let r = ring(2, 2);
        let f = polys(r, "x1");
        assert_eq!(choose_level(&f, &Polynomial::one(r)).unwrap().l(), 1);
        assert_eq!(choose_level(&f, &parse_polynomial(r, "x2").unwrap()).unwrap().l(), 2);
        assert_eq!(choose_level(&f, &Polynomial::zero(r)).unwrap().l(), 1);
        assert_eq!(
            choose_level(&polys(r, "x1, x2"), &Polynomial::one(r)).unwrap_err(),
            AlgebraError::HypothesisViolated { sum: 2, n: 2 }
        );
    }

    #[test]
    fn degree_criterion_examples() {
        let l = FrobeniusLevel::new(2, 2).unwrap();
        let r = ring(2, 2);
        assert!(degree_criterion(&polys(r, "x1"), &Polynomial::one(r), l).unwrap());
        let r1 = ring(2, 1);
        let f = polys(r1, "x1");
        assert!(!degree_criterion(&f, &Polynomial::one(r1), l).unwrap());
        assert!(psi_map(&f[0].pow(3), &Polynomial::one(r1), l).unwrap().is_unit());
    }

    #[test]
    fn q1_examples() {
        let lim = Limits::default();
        let r = ring(2, 3);
        let rep = question_q_check(&polys(r, "x1"), &RationalPoint::origin(&r), &lim).unwrap();
        assert_eq!(rep.outcome, Outcome::Pass);
        let r2 = ring(2, 2);
        let rep = question_q_check(&polys(r2, "x1^2, x1*x2"), &RationalPoint::origin(&r2), &lim).unwrap();
        assert_eq!(rep.outcome, Outcome::HypothesisViolated);
        assert_eq!(rep.property_holds, Some(false));
        assert_eq!(rep.witness.len(), 1);
        assert_eq!(rep.witness[0].to_string(), "x1");
        let rep = question_q_check(&polys(r, "x1, x2*x3"), &RationalPoint::origin(&r), &lim).unwrap();
        assert_eq!(rep.outcome, Outcome::HypothesisViolated);
    }

    #[test]
    fn q1_witness_is_in_original_coordinates() {
        let r = ring(3, 2);
        let a = RationalPoint::new(&r, &[1, 1]).unwrap();
        let f = polys(r, "x1^2 + x1 + 1, x1*x2 - x1 - x2 + 1");
        let rep = question_q_check(&f, &a, &Limits::default()).unwrap();
        assert_eq!(rep.property_holds, Some(false));
        let i = Ideal::new(r, f).unwrap();
        let m = Ideal::maximal_at(r, &a).unwrap();
        for w in &rep.witness {
            assert!(!i.contains(w).unwrap());
            for x in m.gens() {
                assert!(i.contains(&(w * x)).unwrap());
            }
        }
    }

    #[test]
    fn top_vanishing_examples() {
        let lim = Limits::default();
        let r = ring(2, 2);
        let rep = top_lc_vanishing_certificate(&polys(r, "x1"), &RationalPoint::origin(&r), 3, &lim).unwrap();
        assert_eq!(rep.outcome, Outcome::Pass);
        assert_eq!(rep.level, None);
        let rep = top_lc_vanishing_certificate(&polys(r, "x1^2, x1*x2"), &RationalPoint::origin(&r), 3, &lim).unwrap();
        assert_eq!(rep.outcome, Outcome::Pass);
        assert_eq!(rep.level, Some(1));
        // R/(x) in one variable: the torsion 1 maps to x^{q-1}, never in (x^q)
        let r1 = ring(2, 1);
        let rep = top_lc_vanishing_certificate(&polys(r1, "x1"), &RationalPoint::origin(&r1), 3, &lim).unwrap();
        assert_eq!(rep.outcome, Outcome::Inconclusive);
        assert_eq!(rep.memberships, vec![false]);
    }

    #[test]
    fn regular_form_examples() {
        let r = ring(3, 2);
        let i = Ideal::new(r, polys(r, "x1")).unwrap();
        let found = find_regular_linear_form(&i).unwrap();
        let y = found.form.unwrap();
        assert!(i.ideal_quotient(&y).unwrap().equals(&i).unwrap());
        let m = Ideal::maximal_at_origin(r);
        let none = find_regular_linear_form(&m).unwrap();
        assert!(none.form.is_none());
        assert_eq!(none.candidates, 6);
    }

    #[test]
    fn pd_bound_examples() {
        let lim = Limits::default();
        let r = ring(3, 3);
        let rep = pd_bound_check(&polys(r, "x1, x2"), &lim).unwrap();
        assert_eq!((rep.pd, rep.depth, rep.outcome), (Some(2), Some(1), Outcome::Pass));
        let rep = pd_bound_check(&polys(r, "x1^2"), &lim).unwrap();
        assert_eq!((rep.pd, rep.depth, rep.outcome), (Some(1), Some(2), Outcome::Pass));
        assert_eq!(pd_bound_check(&polys(r, "x1 + 1"), &lim).unwrap_err(), AlgebraError::NotHomogeneous);
    }

    #[test]
    fn resource_limits_become_outcomes() {
        let r = ring(7, 3);
        let lim = Limits {
            max_reductions: 2,
            ..Limits::default()
        };
        let f = polys(r, "x1 + x2 + x3, x1*x2 + x2*x3 + x3*x1, x1*x2*x3 - 1");
        let rep = question_q_check(&f, &RationalPoint::origin(&r), &lim).unwrap();
        assert_eq!(rep.outcome, Outcome::ResourceLimit);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn chosen_level_passes_the_criterion(f in arb_poly(ring(2, 3), 2, 3), g in arb_poly(ring(2, 3), 1, 3)) {
            prop_assume!(!f.is_zero());
            let f = vec![f];
            prop_assume!(degree_sum(&f) < 3);
            let l = choose_level(&f, &g).unwrap();
            prop_assert!(degree_criterion(&f, &g, l).unwrap());
        }

        #[test]
        fn q1_is_translation_invariant(f in arb_poly(ring(3, 2), 2, 3), a in 0i64..3, b in 0i64..3) {
            prop_assume!(!f.is_zero());
            let r = ring(3, 2);
            let pt = RationalPoint::new(&r, &[a, b]).unwrap();
            let lim = Limits::default();
            let here = question_q_check(std::slice::from_ref(&f), &pt, &lim).unwrap();
            let moved = question_q_check(&[f.translate(&pt).unwrap()], &RationalPoint::origin(&r), &lim).unwrap();
            prop_assert_eq!(here.property_holds, moved.property_holds);
        }
    }
}
