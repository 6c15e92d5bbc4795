//! The Koszul cocomplex `K(f^t, R)`, the Frobenius chain map and the
//! end-to-end torsion-killing verifier.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::frobenius::{component_at, FrobeniusLevel};
use crate::limits::Limits;
use crate::localcoh::{level_for_degree, Outcome};
use crate::module::{
    kernel_of_map, module_h0m, subquotient_presentation, ColengthCount, FreeElem, ModulePresentation,
    PolyMatrix, SubmoduleBasis,
};
use crate::poly::{product, Polynomial};
use crate::ring::{PolyRing, RationalPoint};

/// Increasing `j`-subsets of `0..s` in lexicographic order.
pub fn tuples(s: usize, j: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, s: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for a in start..s {
            if s - a < left {
                break;
            }
            cur.push(a);
            go(a + 1, s, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if j <= s {
        go(0, s, j, &mut Vec::new(), &mut out);
    }
    out
}

/// `0 -> K^0 -> ... -> K^s -> 0` with `K^j` free on the `j`-tuples and
/// `(d^j r)_T = sum_v (-1)^v f_{T_v}^t r_{T - T_v}`, `v` counted from 1.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    ring: PolyRing,
    f: Vec<Polynomial>,
    t: u64,
    tuples: Vec<Vec<Vec<usize>>>,
    diffs: Vec<PolyMatrix>,
}

impl KoszulComplex {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Coordinate labels of `K^j`.
    pub fn tuples(&self, j: usize) -> &[Vec<usize>] {
        &self.tuples[j]
    }

    /// `d^j : K^j -> K^{j+1}` for `j < s`.
    pub fn differential(&self, j: usize) -> &PolyMatrix {
        &self.diffs[j]
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.diffs
    }

    pub fn squares_vanish(&self) -> Result<bool> {
        for w in self.diffs.windows(2) {
            if !w[1].compose(&w[0])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn build_koszul(f: &[Polynomial], t: u64) -> Result<KoszulComplex> {
    let Some(first) = f.first() else {
        return Err(AlgebraError::EmptyIdeal);
    };
    let ring = *first.ring();
    if f.iter().any(|g| *g.ring() != ring) {
        return Err(AlgebraError::RingMismatch);
    }
    if f.iter().any(|g| g.is_zero()) {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if t == 0 {
        return Err(AlgebraError::Invariant("Koszul exponent must be positive"));
    }
    let s = f.len();
    let ft: Vec<Polynomial> = f.iter().map(|g| g.pow(t)).collect();
    let all: Vec<Vec<Vec<usize>>> = (0..=s).map(|j| tuples(s, j)).collect();
    let mut diffs = Vec::with_capacity(s);
    for j in 0..s {
        let target = &all[j + 1];
        let mut cols = Vec::with_capacity(all[j].len());
        for src in &all[j] {
            let mut col = vec![Polynomial::zero(ring); target.len()];
            for (row, tgt) in target.iter().enumerate() {
                if !src.iter().all(|a| tgt.contains(a)) {
                    continue;
                }
                let v = tgt.iter().position(|a| !src.contains(a)).unwrap();
                let e = &ft[tgt[v]];
                // v is 0-based here; the sign is (-1)^(v+1)
                col[row] = if v % 2 == 0 { e.neg() } else { e.clone() };
            }
            cols.push(FreeElem::new(ring, col)?);
        }
        diffs.push(PolyMatrix::new(ring, target.len(), cols)?);
    }
    let k = KoszulComplex {
        ring,
        f: f.to_vec(),
        t,
        tuples: all,
        diffs,
    };
    if !k.squares_vanish()? {
        return Err(AlgebraError::Invariant("Koszul differential does not square to zero"));
    }
    Ok(k)
}

/// `phi^j`: diagonal multiplication by `prod_{a in T} f_a^{q-1}` on `K^j`,
/// a chain map `K(f) -> K(f^q)`.
pub fn phi_chain_map(f: &[Polynomial], level: FrobeniusLevel) -> Result<Vec<PolyMatrix>> {
    let Some(first) = f.first() else {
        return Err(AlgebraError::EmptyIdeal);
    };
    let ring = *first.ring();
    let s = f.len();
    let powers: Vec<Polynomial> = f.iter().map(|g| g.pow(level.q() - 1)).collect();
    Ok((0..=s)
        .map(|j| {
            let diag = tuples(s, j)
                .iter()
                .map(|t| {
                    let fs: Vec<Polynomial> = t.iter().map(|&a| powers[a].clone()).collect();
                    product(ring, &fs)
                })
                .collect();
            PolyMatrix::diagonal(ring, diag)
        })
        .collect())
}

/// `d^j_q phi^j = phi^{j+1} d^j_1` for all `j`.
pub fn chain_map_commutes(source: &KoszulComplex, target: &KoszulComplex, phi: &[PolyMatrix]) -> Result<bool> {
    for j in 0..source.len() {
        let lhs = target.differential(j).compose(&phi[j])?;
        let rhs = phi[j + 1].compose(source.differential(j))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `H^i = ker d^i / im d^{i-1}`, pruned, with generator images in `K^i`.
pub fn koszul_cohomology(k: &KoszulComplex, i: usize, limits: &Limits) -> Result<ModulePresentation> {
    let s = k.len();
    if i > s {
        return Err(AlgebraError::Invariant("cohomological degree exceeds s"));
    }
    let ring = k.ring;
    let rank = k.tuples[i].len();
    let ker = if i == s {
        (0..rank).map(|c| FreeElem::basis(ring, rank, c)).collect()
    } else {
        kernel_of_map(&k.diffs[i], limits)?
    };
    let im: Vec<FreeElem> = if i == 0 {
        Vec::new()
    } else {
        k.diffs[i - 1].columns().iter().filter(|c| !c.is_zero()).cloned().collect()
    };
    if ker.is_empty() {
        return ModulePresentation::free(ring, 0).with_generators(PolyMatrix::zero(ring, rank, 0));
    }
    Ok(subquotient_presentation(ring, rank, &ker, &im, limits)?.prune())
}

/// Per-generator record of the torsion-killing check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorVerdict {
    /// Representative in `K^i`, in the original coordinates.
    pub representative: FreeElem,
    /// Level first tried for this generator.
    pub initial_level: u32,
    /// Level at which `phi` sent it into `im d^{i-1}`, if any.
    pub killed_at: Option<u32>,
    /// Whether every component of `phi(g)` at the initial level has zero top
    /// Frobenius component.
    pub top_component_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropVanCertificate {
    pub i: usize,
    pub sum_deg: u64,
    pub hypothesis_holds: bool,
    pub torsion_length: ColengthCount,
    pub verdicts: Vec<GeneratorVerdict>,
    pub outcome: Outcome,
}

impl PropVanCertificate {
    pub fn is_vacuous(&self) -> bool {
        self.verdicts.is_empty()
    }

    /// Largest level used by a successful generator.
    pub fn level(&self) -> Option<u32> {
        self.verdicts.iter().filter_map(|v| v.killed_at).max()
    }
}

/// Translates `a` to the origin, computes the `m`-torsion of `H^i(K(f))`
/// and checks that `phi^i` sends each torsion generator into
/// `im d^{i-1}` of `K(f^q)`, retrying up to `level_cap`.
pub fn verify_prop_van(
    f: &[Polynomial],
    i: usize,
    a: &RationalPoint,
    level_cap: u32,
    limits: &Limits,
) -> Result<PropVanCertificate> {
    let Some(first) = f.first() else {
        return Err(AlgebraError::EmptyIdeal);
    };
    let ring = *first.ring();
    let n = ring.n();
    let sum_deg: u64 = f.iter().filter_map(|g| g.total_degree().finite()).sum();
    let hypothesis_holds = sum_deg < n as u64;
    let ft = f.iter().map(|g| g.translate(a)).collect::<Result<Vec<_>>>()?;
    let k1 = build_koszul(&ft, 1)?;
    let h = koszul_cohomology(&k1, i, limits)?;
    let origin = RationalPoint::origin(&ring);
    let tors = module_h0m(&h, &origin, limits)?;
    let mut cert = PropVanCertificate {
        i,
        sum_deg,
        hypothesis_holds,
        torsion_length: tors.length,
        verdicts: Vec::new(),
        outcome: Outcome::Pass,
    };
    if tors.is_zero() {
        if !hypothesis_holds {
            cert.outcome = Outcome::HypothesisViolated;
        }
        return Ok(cert);
    }
    let Some(images) = h.generators() else {
        return Err(AlgebraError::Invariant("cohomology generators lack representatives"));
    };
    let rank = k1.tuples[i].len();
    let back = a.neg(&ring);
    let mut all_killed = true;
    for g in &tors.generators {
        limits.check_cancel()?;
        let rep = images.apply(g)?;
        let l0 = level_for_degree(rep.degree_sum());
        let mut verdict = GeneratorVerdict {
            representative: rep.translate(&back)?,
            initial_level: l0,
            killed_at: None,
            top_component_zero: true,
        };
        for l in l0..=level_cap.max(l0) {
            let level = FrobeniusLevel::for_ring(&ring, l)?;
            let phi = phi_chain_map(&ft, level)?;
            let image = phi[i].apply(&rep)?;
            if l == l0 {
                let top = level.top(n);
                for e in image.entries() {
                    if !component_at(e, &top, level)?.is_zero() {
                        verdict.top_component_zero = false;
                    }
                }
            }
            let killed = if i == 0 {
                image.is_zero()
            } else {
                let kq = build_koszul(&ft, level.q())?;
                let span = SubmoduleBasis::new(ring, rank, kq.differential(i - 1).columns(), limits)?;
                span.contains(&image)?
            };
            if killed {
                verdict.killed_at = Some(l);
                break;
            }
        }
        all_killed &= verdict.killed_at.is_some();
        cert.verdicts.push(verdict);
    }
    cert.outcome = match (hypothesis_holds, all_killed) {
        (false, _) => Outcome::HypothesisViolated,
        (true, true) => Outcome::Pass,
        (true, false) => Outcome::Inconclusive,
    };
    Ok(cert)
}
