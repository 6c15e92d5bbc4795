//! Frobenius bracket powers and the decomposition of `R` as a free module
//! over `R^q` on the monomials `e_i = x^i`, `i in [0, q-1]^n`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Ceiling, Result};
use crate::field::FpElem;
use crate::ideal::Ideal;
use crate::monomial::MultiIndex;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// `q = p^l` with `l >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrobeniusLevel {
    l: u32,
    q: u64,
}

impl FrobeniusLevel {
    pub fn new(p: u64, l: u32) -> Result<Self> {
        if l == 0 {
            return Err(AlgebraError::InvalidRing("Frobenius level must be at least 1"));
        }
        let q = p
            .checked_pow(l)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(AlgebraError::ResourceLimit(Ceiling::Exponent))?;
        Ok(FrobeniusLevel { l, q })
    }

    pub fn for_ring(ring: &PolyRing, l: u32) -> Result<Self> {
        Self::new(ring.p(), l)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The corner `(q-1, ..., q-1)`.
    pub fn top(&self, n: usize) -> MultiIndex {
        MultiIndex::constant(n, (self.q - 1) as u32)
    }

    /// Number of basis monomials, `q^n`.
    pub fn box_size(&self, n: usize) -> Option<u64> {
        self.q.checked_pow(n as u32)
    }

    pub fn in_box(&self, i: &MultiIndex) -> bool {
        i.exps().iter().all(|&e| (e as u64) < self.q)
    }
}

/// `g = sum_i g_i^q e_i`; only nonzero components are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobComponents {
    ring: PolyRing,
    level: FrobeniusLevel,
    comps: BTreeMap<MultiIndex, Polynomial>,
}

impl FrobComponents {
    pub fn new(ring: PolyRing, level: FrobeniusLevel, comps: BTreeMap<MultiIndex, Polynomial>) -> Result<Self> {
        let mut clean = BTreeMap::new();
        for (i, g) in comps {
            if i.len() != ring.n() || !level.in_box(&i) {
                return Err(AlgebraError::IndexOutOfBox);
            }
            if *g.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
            if !g.is_zero() {
                clean.insert(i, g);
            }
        }
        Ok(FrobComponents { ring, level, comps: clean })
    }

    pub fn level(&self) -> FrobeniusLevel {
        self.level
    }

    pub fn components(&self) -> &BTreeMap<MultiIndex, Polynomial> {
        &self.comps
    }

    pub fn get(&self, i: &MultiIndex) -> Polynomial {
        self.comps.get(i).cloned().unwrap_or_else(|| Polynomial::zero(self.ring))
    }

    /// `sum_i g_i^q e_i`.
    pub fn recompose(&self) -> Polynomial {
        let q = self.level.q as u32;
        let mut terms = Vec::new();
        for (i, g) in &self.comps {
            for (m, c) in g.terms() {
                // exponents stay below u32::MAX for any polynomial we can build
                let a = m.scale(q).expect("exponent overflow").mul(i);
                terms.push((a, *c));
            }
        }
        Polynomial::from_terms(self.ring, terms)
    }
}

/// `I^[q] = (f^q : f in gens(I))`.
pub fn bracket_power(ideal: &Ideal, level: FrobeniusLevel) -> Result<Ideal> {
    let gens = ideal
        .gens()
        .iter()
        .map(|f| f.frobenius_power(level.q))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(*ideal.ring(), gens)?.with_limits(ideal.limits().clone()))
}

/// Splits every exponent `a = q b + i` with `0 <= i < q`; the term `c x^a`
/// contributes `c x^b` to `g_i` (`c^{1/q} = c` over `F_p`).
pub fn frobenius_decompose(g: &Polynomial, level: FrobeniusLevel) -> FrobComponents {
    let q = level.q as u32;
    let ring = *g.ring();
    let mut buckets: BTreeMap<MultiIndex, Vec<(MultiIndex, FpElem)>> = BTreeMap::new();
    for (m, c) in g.terms() {
        let i: Vec<u32> = m.exps().iter().map(|&e| e % q).collect();
        let b: Vec<u32> = m.exps().iter().map(|&e| e / q).collect();
        buckets
            .entry(MultiIndex::from_slice(&i))
            .or_default()
            .push((MultiIndex::from_slice(&b), *c));
    }
    let comps = buckets
        .into_iter()
        .map(|(i, ts)| (i, Polynomial::from_terms(ring, ts)))
        .collect();
    FrobComponents { ring, level, comps }
}

/// The single component `g_i`.
pub fn component_at(g: &Polynomial, i: &MultiIndex, level: FrobeniusLevel) -> Result<Polynomial> {
    if i.len() != g.ring().n() || !level.in_box(i) {
        return Err(AlgebraError::IndexOutOfBox);
    }
    let q = level.q as u32;
    let terms = g
        .terms()
        .iter()
        .filter(|(m, _)| m.exps().iter().zip(i.exps()).all(|(&e, &r)| e % q == r))
        .map(|(m, c)| {
            let b: Vec<u32> = m.exps().iter().map(|&e| e / q).collect();
            (MultiIndex::from_slice(&b), *c)
        });
    Ok(Polynomial::from_terms(*g.ring(), terms))
}

/// `psi(g) = (h g)_{q-1}`, the dual of multiplication by `h`.
pub fn psi_map(h: &Polynomial, g: &Polynomial, level: FrobeniusLevel) -> Result<Polynomial> {
    let hg = h.checked_mul(g)?;
    component_at(&hg, &level.top(g.ring().n()), level)
}

/// Checks `(h g)_i = (h e_{q-1-i} g)_{q-1}` for every `i` in the box.
pub fn td_roundtrip_check(h: &Polynomial, g: &Polynomial, level: FrobeniusLevel) -> Result<bool> {
    let ring = *g.ring();
    let n = ring.n();
    let hg = h.checked_mul(g)?;
    let left = frobenius_decompose(&hg, level);
    let q = level.q as u32;
    let top = level.top(n);
    let mut cur = alloc::vec![0u32; n];
    loop {
        let i = MultiIndex::from_slice(&cur);
        let comp = top.div_unchecked(&i);
        let shifted = hg.mul_term(FpElem::ONE, &comp);
        if component_at(&shifted, &top, level)? != left.get(&i) {
            return Ok(false);
        }
        let mut k = 0;
        while k < n {
            cur[k] += 1;
            if cur[k] < q {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        if k == n {
            return Ok(true);
        }
    }
}
