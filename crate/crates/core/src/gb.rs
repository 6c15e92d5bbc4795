//! Buchberger engine shared by ideals and submodules of free modules.
//!
//! Elements are sparse vectors in `R^r` ordered position-over-term: a lower
//! position index is larger, ties broken by the ring's monomial order. An
//! ideal is the rank-one case.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Ceiling, Result};
use crate::field::FpElem;
use crate::limits::Limits;
use crate::monomial::{MonomialOrder, MultiIndex};
use crate::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct VTerm {
    pub pos: usize,
    pub mono: MultiIndex,
    pub coeff: FpElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub terms: Vec<VTerm>,
}

pub(crate) fn pot_cmp(order: MonomialOrder, a: (usize, &MultiIndex), b: (usize, &MultiIndex)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.cmp(a.1, b.1))
}

impl Vector {
    pub fn from_unsorted(ring: &PolyRing, mut terms: Vec<VTerm>) -> Self {
        let order = ring.order();
        let p = ring.p();
        terms.sort_unstable_by(|a, b| pot_cmp(order, (b.pos, &b.mono), (a.pos, &a.mono)));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.pos == t.pos && l.mono == t.mono => l.coeff = l.coeff.add(t.coeff, p),
                _ => {
                    if out.last().is_some_and(|l| l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn monic(&self, p: u64) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => {
                let inv = t.coeff.inv(p).expect("nonzero lead");
                Vector {
                    terms: self
                        .terms
                        .iter()
                        .map(|t| VTerm {
                            pos: t.pos,
                            mono: t.mono.clone(),
                            coeff: t.coeff.mul(inv, p),
                        })
                        .collect(),
                }
            }
        }
    }

    pub fn mul_term(&self, c: FpElem, mono: &MultiIndex, p: u64) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    pos: t.pos,
                    mono: t.mono.mul(mono),
                    coeff: t.coeff.mul(c, p),
                })
                .collect(),
        }
    }

    /// `self[start..] + c * mono * other`.
    pub fn add_scaled_from(
        &self,
        start: usize,
        ring: &PolyRing,
        c: FpElem,
        mono: &MultiIndex,
        other: &[VTerm],
    ) -> Vector {
        let p = ring.p();
        let order = ring.order();
        let a = &self.terms[start..];
        let mut out = Vec::with_capacity(a.len() + other.len());
        let mut i = 0;
        let mut j = 0;
        let mut pending = other.first().map(|t| t.mono.mul(mono));
        loop {
            match (a.get(i), pending.as_ref()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.extend_from_slice(&a[i..]);
                    break;
                }
                (None, Some(mb)) => {
                    let tb = &other[j];
                    out.push(VTerm {
                        pos: tb.pos,
                        mono: mb.clone(),
                        coeff: tb.coeff.mul(c, p),
                    });
                    j += 1;
                    pending = other.get(j).map(|t| t.mono.mul(mono));
                }
                (Some(ta), Some(mb)) => {
                    let tb = &other[j];
                    match pot_cmp(order, (ta.pos, &ta.mono), (tb.pos, mb)) {
                        Ordering::Greater => {
                            out.push(ta.clone());
                            i += 1;
                        }
                        Ordering::Less => {
                            out.push(VTerm {
                                pos: tb.pos,
                                mono: mb.clone(),
                                coeff: tb.coeff.mul(c, p),
                            });
                            j += 1;
                            pending = other.get(j).map(|t| t.mono.mul(mono));
                        }
                        Ordering::Equal => {
                            let s = ta.coeff.add(tb.coeff.mul(c, p), p);
                            if !s.is_zero() {
                                out.push(VTerm {
                                    pos: ta.pos,
                                    mono: ta.mono.clone(),
                                    coeff: s,
                                });
                            }
                            i += 1;
                            j += 1;
                            pending = other.get(j).map(|t| t.mono.mul(mono));
                        }
                    }
                }
            }
        }
        Vector { terms: out }
    }
}

fn lead_divides(a: &VTerm, b: &VTerm) -> bool {
    a.pos == b.pos && a.mono.divides(&b.mono)
}

/// Full reduction of `v` modulo `basis` (leading coefficients need not be 1).
/// `budget` counts reduction steps across calls.
pub(crate) fn reduce(
    ring: &PolyRing,
    v: &Vector,
    basis: &[&Vector],
    budget: &mut Budget<'_>,
) -> Result<Vector> {
    let p = ring.p();
    let mut rem: Vec<VTerm> = Vec::new();
    let mut work = v.clone();
    let mut start = 0;
    while start < work.terms.len() {
        let t = &work.terms[start];
        let hit = basis
            .iter()
            .find(|b| b.lead().is_some_and(|l| lead_divides(l, t)));
        match hit {
            Some(b) => {
                budget.step()?;
                let l = b.lead().unwrap();
                let q = t.mono.div_unchecked(&l.mono);
                let c = t.coeff.mul(l.coeff.inv(p)?, p).neg(p);
                // skip the cancelled lead of `b` and of `work`
                work = work.add_scaled_from(start + 1, ring, c, &q, &b.terms[1..]);
                start = 0;
            }
            None => {
                rem.push(t.clone());
                start += 1;
            }
        }
    }
    Ok(Vector { terms: rem })
}

pub(crate) struct Budget<'a> {
    limits: &'a Limits,
    steps: usize,
}

impl<'a> Budget<'a> {
    pub fn new(limits: &'a Limits) -> Self {
        Budget { limits, steps: 0 }
    }

    pub fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.limits.max_reductions {
            return Err(Limits::exceeded(Ceiling::Reductions));
        }
        if self.steps.is_multiple_of(256) {
            self.limits.check_cancel()?;
        }
        Ok(())
    }
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: MultiIndex,
}

struct Engine<'a> {
    ring: &'a PolyRing,
    limits: &'a Limits,
    basis: Vec<Vector>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    scalar: bool,
}

impl<'a> Engine<'a> {
    fn active_refs(&self) -> Vec<&Vector> {
        self.basis
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(b, _)| b)
            .collect()
    }

    fn insert(&mut self, h: Vector) -> Result<()> {
        if self.basis.len() >= self.limits.max_basis_size {
            return Err(Limits::exceeded(Ceiling::BasisSize));
        }
        let k = self.basis.len();
        let lh = h.lead().unwrap().clone();
        // candidate pairs with the new element
        let mut cands: Vec<(usize, MultiIndex, bool)> = Vec::new();
        for (g, b) in self.basis.iter().enumerate() {
            if !self.active[g] {
                continue;
            }
            let lg = b.lead().unwrap();
            if lg.pos != lh.pos {
                continue;
            }
            // the product criterion only holds for ideals
            let cop = self.scalar && lh.mono.coprime(&lg.mono);
            cands.push((g, lh.mono.lcm(&lg.mono), cop));
        }
        // Gebauer-Moeller: drop pairs whose lcm is a proper multiple
        let mut kept: Vec<(usize, MultiIndex, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (g, ref l1, cop) = cands[idx];
            if cop {
                kept.push((g, l1.clone(), cop));
                continue;
            }
            let dominated = cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(l1))
                || kept.iter().any(|(_, l2, _)| l2.divides(l1));
            if !dominated {
                kept.push((g, l1.clone(), cop));
            }
        }
        // old pairs made redundant by the new lead
        let basis = &self.basis;
        self.pairs.retain(|pr| {
            if pr.pos != lh.pos || !lh.mono.divides(&pr.lcm) {
                return true;
            }
            let li = &basis[pr.i].lead().unwrap().mono;
            let lj = &basis[pr.j].lead().unwrap().mono;
            li.lcm(&lh.mono) == pr.lcm || lj.lcm(&lh.mono) == pr.lcm
        });
        for (g, l, cop) in kept {
            if !cop {
                self.pairs.push(Pair {
                    i: g,
                    j: k,
                    pos: lh.pos,
                    lcm: l,
                });
            }
        }
        for (g, b) in self.basis.iter().enumerate() {
            if self.active[g] && lead_divides(&lh, b.lead().unwrap()) {
                self.active[g] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
        Ok(())
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                pot_cmp(order, (a.pos, &a.lcm), (b.pos, &b.lcm))
            })
            .map(|(i, _)| i)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pr: &Pair) -> Vector {
        let p = self.ring.p();
        let bi = &self.basis[pr.i];
        let bj = &self.basis[pr.j];
        let qi = pr.lcm.div_unchecked(&bi.lead().unwrap().mono);
        let qj = pr.lcm.div_unchecked(&bj.lead().unwrap().mono);
        let left = bi.mul_term(FpElem::ONE, &qi, p);
        // leads cancel: both are monic with lead `lcm`
        left.add_scaled_from(1, self.ring, FpElem::ONE.neg(p), &qj, &bj.terms[1..])
    }
}

/// Reduced Groebner basis of the span of `gens`, sorted by increasing lead.
pub(crate) fn groebner(ring: &PolyRing, gens: &[Vector], limits: &Limits) -> Result<Vec<Vector>> {
    let p = ring.p();
    let mut eng = Engine {
        ring,
        limits,
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        scalar: gens.iter().all(|g| g.terms.iter().all(|t| t.pos == 0)),
    };
    let mut budget = Budget::new(limits);
    let mut sorted: Vec<&Vector> = gens.iter().filter(|g| !g.is_zero()).collect();
    let order = ring.order();
    sorted.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        pot_cmp(order, (la.pos, &la.mono), (lb.pos, &lb.mono))
    });
    for g in sorted {
        let r = reduce(ring, g, &eng.active_refs(), &mut budget)?;
        if !r.is_zero() {
            eng.insert(r.monic(p))?;
        }
    }
    while let Some(pr) = eng.select() {
        let s = eng.spoly(&pr);
        let r = reduce(ring, &s, &eng.active_refs(), &mut budget)?;
        if !r.is_zero() {
            eng.insert(r.monic(p))?;
        }
    }
    // minimal basis: active leads are pairwise non-dividing by construction,
    // but keep the filter explicit
    let mut min: Vec<Vector> = Vec::new();
    let active: Vec<Vector> = eng
        .basis
        .into_iter()
        .zip(eng.active)
        .filter(|(_, a)| *a)
        .map(|(b, _)| b)
        .collect();
    for (i, b) in active.iter().enumerate() {
        let lb = b.lead().unwrap();
        let redundant = active.iter().enumerate().any(|(j, o)| {
            let lo = o.lead().unwrap();
            j != i && lead_divides(lo, lb) && (lo.mono != lb.mono || j < i)
        });
        if !redundant {
            min.push(b.clone());
        }
    }
    // interreduce tails
    let mut reduced = Vec::with_capacity(min.len());
    for i in 0..min.len() {
        let others: Vec<&Vector> = min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, b)| b).collect();
        let head = Vector {
            terms: min[i].terms[..1].to_vec(),
        };
        let tail = Vector {
            terms: min[i].terms[1..].to_vec(),
        };
        let tail = reduce(ring, &tail, &others, &mut budget)?;
        let mut t = head.terms;
        t.extend(tail.terms);
        reduced.push(Vector { terms: t });
    }
    reduced.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        pot_cmp(order, (la.pos, &la.mono), (lb.pos, &lb.mono))
    });
    if let Some(audit) = &limits.audit {
        let ok = is_confluent(ring, &reduced);
        audit.record(ok);
        if !ok {
            return Err(crate::error::AlgebraError::Invariant(
                "computed basis fails the S-pair criterion",
            ));
        }
    }
    Ok(reduced)
}

/// Unoptimised Buchberger criterion: every S-vector of two elements with the
/// same lead position top-reduces to zero. Uses its own reduction loop.
pub(crate) fn is_confluent(ring: &PolyRing, basis: &[Vector]) -> bool {
    let p = ring.p();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            let (la, lb) = match (a.lead(), b.lead()) {
                (Some(x), Some(y)) => (x, y),
                _ => return false,
            };
            if la.pos != lb.pos {
                continue;
            }
            let l = la.mono.lcm(&lb.mono);
            let ca = la.coeff.inv(p).unwrap();
            let cb = lb.coeff.inv(p).unwrap().neg(p);
            let mut terms = a.mul_term(ca, &l.div_unchecked(&la.mono), p).terms;
            terms.extend(b.mul_term(cb, &l.div_unchecked(&lb.mono), p).terms);
            let mut s = Vector::from_unsorted(ring, terms);
            // naive top reduction by rebuilding from scratch each step
            loop {
                let Some(t) = s.lead().cloned() else { break };
                let Some(d) = basis.iter().find(|d| {
                    let ld = d.lead().unwrap();
                    ld.pos == t.pos && ld.mono.divides(&t.mono)
                }) else {
                    return false;
                };
                let ld = d.lead().unwrap();
                let c = t.coeff.mul(ld.coeff.inv(p).unwrap(), p).neg(p);
                let mut terms = s.terms.clone();
                terms.extend(d.mul_term(c, &t.mono.div_unchecked(&ld.mono), p).terms);
                s = Vector::from_unsorted(ring, terms);
            }
        }
    }
    true
}
