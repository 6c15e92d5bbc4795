//! Free modules `R^r`, submodule Groebner bases, syzygies, subquotient
//! presentations and `m`-torsion.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Ceiling, Result};
use crate::field::FpElem;
use crate::gb::{self, Budget, VTerm, Vector};
use crate::limits::Limits;
use crate::monomial::MultiIndex;
use crate::poly::{Degree, Polynomial};
use crate::ring::{PolyRing, RationalPoint};

/// An element of the free module `R^rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeElem {
    ring: PolyRing,
    entries: Vec<Polynomial>,
}

impl FreeElem {
    pub fn new(ring: PolyRing, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.iter().any(|e| *e.ring() != ring) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(FreeElem { ring, entries })
    }

    pub fn zero(ring: PolyRing, rank: usize) -> Self {
        FreeElem {
            ring,
            entries: vec![Polynomial::zero(ring); rank],
        }
    }

    /// The standard basis vector `e_i`.
    pub fn basis(ring: PolyRing, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.entries[i] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if self.rank() != other.rank() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FreeElem {
            ring: self.ring,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FreeElem {
            ring: self.ring,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        FreeElem {
            ring: self.ring,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Sum over nonzero components of their total degrees.
    pub fn degree_sum(&self) -> u64 {
        self.entries
            .iter()
            .filter_map(|e| e.total_degree().finite())
            .sum()
    }

    pub fn max_degree(&self) -> Degree {
        self.entries
            .iter()
            .map(|e| e.total_degree())
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn translate(&self, a: &RationalPoint) -> Result<Self> {
        let mut entries = Vec::with_capacity(self.rank());
        for e in &self.entries {
            entries.push(e.translate(a)?);
        }
        Ok(FreeElem {
            ring: self.ring,
            entries,
        })
    }

    pub(crate) fn to_vector(&self, offset: usize) -> Vector {
        let mut terms = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            for (m, c) in e.terms() {
                terms.push(VTerm {
                    pos: offset + i,
                    mono: m.clone(),
                    coeff: *c,
                });
            }
        }
        Vector { terms }
    }

    /// Components `offset..offset + rank` of `v`.
    pub(crate) fn from_vector(ring: PolyRing, rank: usize, offset: usize, v: &Vector) -> Self {
        let mut buckets: Vec<Vec<(MultiIndex, FpElem)>> = vec![Vec::new(); rank];
        for t in &v.terms {
            if t.pos >= offset && t.pos < offset + rank {
                buckets[t.pos - offset].push((t.mono.clone(), t.coeff));
            }
        }
        FreeElem {
            ring,
            entries: buckets
                .into_iter()
                .map(|b| Polynomial::from_sorted_terms(ring, b))
                .collect(),
        }
    }

    /// Homogeneous of degree `d` when component `i` is shifted by
    /// `shifts[i]`; `None` if not homogeneous or zero.
    pub fn homogeneous_degree(&self, shifts: &[i64]) -> Option<i64> {
        let mut deg = None;
        for (e, s) in self.entries.iter().zip(shifts) {
            if e.is_zero() {
                continue;
            }
            if !e.is_homogeneous() {
                return None;
            }
            let d = e.total_degree().finite().unwrap() as i64 + s;
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }
}

/// A map `R^cols -> R^rows`, stored as its column images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: Vec<FreeElem>,
}

impl PolyMatrix {
    pub fn new(ring: PolyRing, rows: usize, cols: Vec<FreeElem>) -> Result<Self> {
        for c in &cols {
            if *c.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
            if c.rank() != rows {
                return Err(AlgebraError::LengthMismatch {
                    expected: rows,
                    got: c.rank(),
                });
            }
        }
        Ok(PolyMatrix { ring, rows, cols })
    }

    pub fn zero(ring: PolyRing, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring,
            rows,
            cols: vec![FreeElem::zero(ring, rows); cols],
        }
    }

    pub fn identity(ring: PolyRing, n: usize) -> Self {
        PolyMatrix {
            ring,
            rows: n,
            cols: (0..n).map(|i| FreeElem::basis(ring, n, i)).collect(),
        }
    }

    pub fn diagonal(ring: PolyRing, entries: Vec<Polynomial>) -> Self {
        let n = entries.len();
        let cols = entries
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                let mut c = FreeElem::zero(ring, n);
                c.entries[i] = d;
                c
            })
            .collect();
        PolyMatrix { ring, rows: n, cols }
    }

    /// Row-major constructor, handy in tests.
    pub fn from_rows(ring: PolyRing, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![FreeElem::zero(ring, nrows); ncols];
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(AlgebraError::LengthMismatch {
                    expected: ncols,
                    got: row.len(),
                });
            }
            for (j, e) in row.into_iter().enumerate() {
                cols[j].entries[i] = e;
            }
        }
        PolyMatrix::new(ring, nrows, cols)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[FreeElem] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<FreeElem> {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.cols[col].entries[row]
    }

    pub fn apply(&self, v: &FreeElem) -> Result<FreeElem> {
        if v.rank() != self.ncols() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.ncols(),
                got: v.rank(),
            });
        }
        let mut out = FreeElem::zero(self.ring, self.rows);
        for (c, a) in self.cols.iter().zip(&v.entries) {
            if a.is_zero() {
                continue;
            }
            out = out.add(&c.scale(a))?;
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyMatrix) -> Result<PolyMatrix> {
        if inner.rows != self.ncols() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.ncols(),
                got: inner.rows,
            });
        }
        let cols = inner
            .cols
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            ring: self.ring,
            rows: self.rows,
            cols,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn has_unit_entry(&self) -> bool {
        self.cols.iter().any(|c| c.entries.iter().any(|e| e.is_unit()))
    }

    pub fn translate(&self, a: &RationalPoint) -> Result<Self> {
        let cols = self
            .cols
            .iter()
            .map(|c| c.translate(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            ring: self.ring,
            rows: self.rows,
            cols,
        })
    }
}

/// Reduced Groebner basis of a submodule of `R^rank`, position over term.
#[derive(Debug, Clone)]
pub struct SubmoduleBasis {
    ring: PolyRing,
    rank: usize,
    basis: Vec<Vector>,
}

impl SubmoduleBasis {
    pub fn new(ring: PolyRing, rank: usize, gens: &[FreeElem], limits: &Limits) -> Result<Self> {
        for g in gens {
            if g.rank() != rank {
                return Err(AlgebraError::LengthMismatch {
                    expected: rank,
                    got: g.rank(),
                });
            }
            if *g.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let vecs: Vec<Vector> = gens.iter().map(|g| g.to_vector(0)).collect();
        let basis = gb::groebner(&ring, &vecs, limits)?;
        Ok(SubmoduleBasis { ring, rank, basis })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn elements(&self) -> Vec<FreeElem> {
        self.basis
            .iter()
            .map(|v| FreeElem::from_vector(self.ring, self.rank, 0, v))
            .collect()
    }

    pub fn normal_form(&self, v: &FreeElem) -> Result<FreeElem> {
        if v.rank() != self.rank {
            return Err(AlgebraError::LengthMismatch {
                expected: self.rank,
                got: v.rank(),
            });
        }
        let refs: Vec<&Vector> = self.basis.iter().collect();
        let unbounded = Limits {
            max_reductions: usize::MAX,
            ..Limits::default()
        };
        let mut budget = Budget::new(&unbounded);
        let r = gb::reduce(&self.ring, &v.to_vector(0), &refs, &mut budget)?;
        Ok(FreeElem::from_vector(self.ring, self.rank, 0, &r))
    }

    pub fn contains(&self, v: &FreeElem) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Whether the submodule is all of `R^rank`.
    pub fn is_whole(&self) -> bool {
        (0..self.rank).all(|i| {
            self.basis
                .iter()
                .any(|b| b.lead().is_some_and(|l| l.pos == i && l.mono.is_one()))
        })
    }

    /// Leading monomials at position `i`.
    pub fn leads_at(&self, i: usize) -> Vec<MultiIndex> {
        self.basis
            .iter()
            .filter_map(|b| b.lead())
            .filter(|l| l.pos == i)
            .map(|l| l.mono.clone())
            .collect()
    }

    /// `dim_k R^rank / N` by counting standard monomials.
    pub fn standard_monomial_count(&self, ceiling: usize) -> ColengthCount {
        let n = self.ring.n();
        let mut total = 0usize;
        for i in 0..self.rank {
            let leads = self.leads_at(i);
            if leads.iter().any(|m| m.is_one()) {
                continue;
            }
            // a pure power of every variable must occur
            let mut bounds = vec![0u32; n];
            for (v, b) in bounds.iter_mut().enumerate() {
                let pure = leads
                    .iter()
                    .filter(|m| m.exps().iter().enumerate().all(|(w, &e)| w == v || e == 0))
                    .map(|m| m.exps()[v])
                    .min();
                match pure {
                    Some(e) => *b = e,
                    None => return ColengthCount::Infinite,
                }
            }
            let mut cur = vec![0u32; n];
            loop {
                let m = MultiIndex::from_slice(&cur);
                if !leads.iter().any(|l| l.divides(&m)) {
                    total += 1;
                    if total > ceiling {
                        return ColengthCount::CeilingExceeded;
                    }
                }
                // odometer over the box
                let mut k = 0;
                loop {
                    if k == n {
                        break;
                    }
                    cur[k] += 1;
                    if cur[k] < bounds[k] {
                        break;
                    }
                    cur[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
        ColengthCount::Finite(total)
    }
}

/// Outcome of counting standard monomials of a quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColengthCount {
    Finite(usize),
    Infinite,
    CeilingExceeded,
}

/// Groebner basis of the span of `cols` inside `R^rank`.
pub fn module_groebner_basis(
    ring: PolyRing,
    rank: usize,
    cols: &[FreeElem],
    limits: &Limits,
) -> Result<Vec<FreeElem>> {
    Ok(SubmoduleBasis::new(ring, rank, cols, limits)?.elements())
}

/// Generators of `{ a : sum_j a_j cols_j = 0 }`.
///
/// Computed by a Groebner basis of `(col_j, e_j)` in `R^{rank + k}` under
/// position-over-term, which eliminates the first `rank` positions.
pub fn syzygies(
    ring: PolyRing,
    rank: usize,
    cols: &[FreeElem],
    limits: &Limits,
) -> Result<Vec<FreeElem>> {
    let k = cols.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut aug = Vec::with_capacity(k);
    for (j, c) in cols.iter().enumerate() {
        if c.rank() != rank {
            return Err(AlgebraError::LengthMismatch {
                expected: rank,
                got: c.rank(),
            });
        }
        let mut v = c.to_vector(0);
        v.terms.push(VTerm {
            pos: rank + j,
            mono: MultiIndex::zero(ring.n()),
            coeff: FpElem::ONE,
        });
        aug.push(v);
    }
    let basis = gb::groebner(&ring, &aug, limits)?;
    Ok(basis
        .iter()
        .filter(|b| b.lead().is_some_and(|l| l.pos >= rank))
        .map(|b| FreeElem::from_vector(ring, k, rank, b))
        .collect())
}

/// Kernel generators of `d`.
pub fn kernel_of_map(d: &PolyMatrix, limits: &Limits) -> Result<Vec<FreeElem>> {
    syzygies(d.ring, d.rows, &d.cols, limits)
}

/// `M = R^rank / span(relations)`, optionally with the images of its
/// generators in an ambient free module and generator degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    ring: PolyRing,
    rank: usize,
    relations: PolyMatrix,
    generators: Option<PolyMatrix>,
    degrees: Option<Vec<i64>>,
}

impl ModulePresentation {
    pub fn new(ring: PolyRing, rank: usize, relations: Vec<FreeElem>) -> Result<Self> {
        let relations = PolyMatrix::new(ring, rank, relations)?;
        Ok(ModulePresentation {
            ring,
            rank,
            relations,
            generators: None,
            degrees: None,
        })
    }

    pub fn free(ring: PolyRing, rank: usize) -> Self {
        ModulePresentation {
            ring,
            rank,
            relations: PolyMatrix::zero(ring, rank, 0),
            generators: None,
            degrees: Some(vec![0; rank]),
        }
    }

    /// `R/I`, graded when every generator is homogeneous.
    pub fn cyclic(ideal: &crate::Ideal) -> Self {
        let ring = *ideal.ring();
        let rels: Vec<FreeElem> = ideal
            .gens()
            .iter()
            .map(|g| FreeElem::new(ring, vec![g.clone()]).unwrap())
            .collect();
        let degrees = ideal.is_homogeneous().then(|| vec![0]);
        ModulePresentation {
            ring,
            rank: 1,
            relations: PolyMatrix::new(ring, 1, rels).unwrap(),
            generators: None,
            degrees,
        }
    }

    /// Attach the ambient images of the generators (one column each).
    pub fn with_generators(mut self, generators: PolyMatrix) -> Result<Self> {
        if generators.ncols() != self.rank {
            return Err(AlgebraError::LengthMismatch {
                expected: self.rank,
                got: generators.ncols(),
            });
        }
        self.generators = Some(generators);
        Ok(self)
    }

    /// Attach generator degrees; every relation column must be homogeneous
    /// for these shifts.
    pub fn with_degrees(mut self, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != self.rank {
            return Err(AlgebraError::LengthMismatch {
                expected: self.rank,
                got: degrees.len(),
            });
        }
        for c in self.relations.columns() {
            if !c.is_zero() && c.homogeneous_degree(&degrees).is_none() {
                return Err(AlgebraError::NotHomogeneous);
            }
        }
        self.degrees = Some(degrees);
        Ok(self)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    pub fn generators(&self) -> Option<&PolyMatrix> {
        self.generators.as_ref()
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    pub fn relation_basis(&self, limits: &Limits) -> Result<SubmoduleBasis> {
        SubmoduleBasis::new(self.ring, self.rank, self.relations.columns(), limits)
    }

    pub fn is_zero(&self, limits: &Limits) -> Result<bool> {
        if self.rank == 0 {
            return Ok(true);
        }
        Ok(self.relation_basis(limits)?.is_whole())
    }

    /// Translate all relations and generator images by `a`.
    pub fn translate(&self, a: &RationalPoint) -> Result<Self> {
        Ok(ModulePresentation {
            ring: self.ring,
            rank: self.rank,
            relations: self.relations.translate(a)?,
            generators: match &self.generators {
                Some(g) => Some(g.translate(a)?),
                None => None,
            },
            degrees: if a.is_origin() { self.degrees.clone() } else { None },
        })
    }

    /// Removes generators killed by a relation with a unit entry and drops
    /// zero relations. The result presents an isomorphic module; generator
    /// images and degrees follow the surviving generators.
    pub fn prune(&self) -> Self {
        let p = self.ring.p();
        let mut rels: Vec<FreeElem> = self
            .relations
            .columns()
            .iter()
            .filter(|c| !c.is_zero())
            .cloned()
            .collect();
        let mut keep: Vec<usize> = (0..self.rank).collect();
        loop {
            let hit = rels.iter().enumerate().find_map(|(c, col)| {
                col.entries
                    .iter()
                    .position(|e| e.is_unit())
                    .map(|i| (c, i))
            });
            let Some((c, i)) = hit else { break };
            let sigma = rels.swap_remove(c);
            let inv = sigma.entries[i].leading_coeff().inv(p).unwrap();
            rels = rels
                .into_iter()
                .map(|r| {
                    let factor = r.entries[i].scale(inv);
                    let mut out = if factor.is_zero() {
                        r
                    } else {
                        r.sub(&sigma.scale(&factor)).unwrap()
                    };
                    out.entries.remove(i);
                    out
                })
                .filter(|r| !r.is_zero())
                .collect();
            keep.remove(i);
        }
        let rank = keep.len();
        let generators = self.generators.as_ref().map(|g| PolyMatrix {
            ring: self.ring,
            rows: g.rows,
            cols: keep.iter().map(|&i| g.cols[i].clone()).collect(),
        });
        let degrees = self
            .degrees
            .as_ref()
            .map(|d| keep.iter().map(|&i| d[i]).collect());
        ModulePresentation {
            ring: self.ring,
            rank,
            relations: PolyMatrix {
                ring: self.ring,
                rows: rank,
                cols: rels,
            },
            generators,
            degrees,
        }
    }

    /// `dim_k M` when finite.
    pub fn colength(&self, limits: &Limits) -> Result<ColengthCount> {
        if self.rank == 0 {
            return Ok(ColengthCount::Finite(0));
        }
        Ok(self
            .relation_basis(limits)?
            .standard_monomial_count(limits.max_standard_monomials))
    }
}

/// Presentation of `span(ker_gens) / span(im_gens)` on the generators
/// `ker_gens`; relations are the first coordinates of the syzygies of
/// `ker_gens ++ im_gens`.
pub fn subquotient_presentation(
    ring: PolyRing,
    ambient_rank: usize,
    ker_gens: &[FreeElem],
    im_gens: &[FreeElem],
    limits: &Limits,
) -> Result<ModulePresentation> {
    let a = ker_gens.len();
    if !im_gens.is_empty() {
        let span = SubmoduleBasis::new(ring, ambient_rank, ker_gens, limits)?;
        for b in im_gens {
            if !span.contains(b)? {
                return Err(AlgebraError::NotSubmodule);
            }
        }
    }
    let mut all = ker_gens.to_vec();
    all.extend_from_slice(im_gens);
    let syz = syzygies(ring, ambient_rank, &all, limits)?;
    let rels: Vec<FreeElem> = syz
        .iter()
        .map(|s| FreeElem {
            ring,
            entries: s.entries[..a].to_vec(),
        })
        .filter(|r| !r.is_zero())
        .collect();
    let generators = PolyMatrix::new(ring, ambient_rank, ker_gens.to_vec())?;
    ModulePresentation::new(ring, a, rels)?.with_generators(generators)
}

/// `(N : m)` for the origin's maximal ideal, with `N = span(gens)` in
/// `R^rank`: the kernel of `R^rank -> (R^rank / N)^n, v -> (x_i v)_i`.
fn colon_by_origin(ring: PolyRing, rank: usize, gens: &[FreeElem], limits: &Limits) -> Result<Vec<FreeElem>> {
    let n = ring.n();
    let big = rank * n;
    let mut cols = Vec::with_capacity(rank + n * gens.len());
    for j in 0..rank {
        let mut c = FreeElem::zero(ring, big);
        for i in 0..n {
            c.entries[i * rank + j] = Polynomial::var(ring, i)?;
        }
        cols.push(c);
    }
    for i in 0..n {
        for g in gens {
            let mut c = FreeElem::zero(ring, big);
            for (k, e) in g.entries.iter().enumerate() {
                c.entries[i * rank + k] = e.clone();
            }
            cols.push(c);
        }
    }
    let syz = syzygies(ring, big, &cols, limits)?;
    Ok(syz
        .into_iter()
        .map(|s| FreeElem {
            ring,
            entries: s.entries[..rank].to_vec(),
        })
        .filter(|v| !v.is_zero())
        .collect())
}

/// The `m_a`-torsion submodule `(0 :_M m_a^inf)` of a presented module.
#[derive(Debug, Clone)]
pub struct Torsion {
    /// Presentation of the torsion on its own generators (pruned).
    pub presentation: ModulePresentation,
    /// Torsion generators in the coordinates of the original `M`, expressed
    /// in the original variables.
    pub generators: Vec<FreeElem>,
    /// `dim_k` of the torsion.
    pub length: ColengthCount,
    /// Colon iterations until the chain stabilized.
    pub steps: usize,
}

impl Torsion {
    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_finite_length(&self) -> bool {
        matches!(self.length, ColengthCount::Finite(_))
    }
}

/// `H^0_{m_a}(M)` by module saturation at the origin after translating `a`
/// there.
pub fn module_h0m(m: &ModulePresentation, a: &RationalPoint, limits: &Limits) -> Result<Torsion> {
    let ring = m.ring;
    let r = m.rank;
    if r == 0 {
        return Ok(Torsion {
            presentation: ModulePresentation::free(ring, 0),
            generators: Vec::new(),
            length: ColengthCount::Finite(0),
            steps: 0,
        });
    }
    let mt = m.translate(a)?;
    let base: Vec<FreeElem> = mt.relations.columns().iter().filter(|c| !c.is_zero()).cloned().collect();
    let mut current = SubmoduleBasis::new(ring, r, &base, limits)?;
    let mut steps = 0;
    loop {
        limits.check_cancel()?;
        if steps >= limits.max_saturation_steps {
            return Err(AlgebraError::ResourceLimit(Ceiling::SaturationSteps));
        }
        let next = colon_by_origin(ring, r, &current.elements(), limits)?;
        let mut grew = false;
        for v in &next {
            if !current.contains(v)? {
                grew = true;
                break;
            }
        }
        if !grew {
            break;
        }
        steps += 1;
        current = SubmoduleBasis::new(ring, r, &next, limits)?;
    }
    let sat = current.elements();
    // generators of the saturation that are nonzero in M
    let base_span = SubmoduleBasis::new(ring, r, &base, limits)?;
    let mut tors_gens = Vec::new();
    for v in &sat {
        if !base_span.contains(v)? {
            tors_gens.push(v.clone());
        }
    }
    if tors_gens.is_empty() {
        return Ok(Torsion {
            presentation: ModulePresentation::free(ring, 0),
            generators: Vec::new(),
            length: ColengthCount::Finite(0),
            steps,
        });
    }
    let mut ker = tors_gens;
    ker.extend(base.iter().cloned());
    let pres = subquotient_presentation(ring, r, &ker, &base, limits)?;
    let pres = pres.prune();
    let length = pres.colength(limits)?;
    let back = a.neg(&ring);
    let pres = pres.translate(&back)?;
    let generators = match pres.generators() {
        Some(g) => g.columns().to_vec(),
        None => Vec::new(),
    };
    Ok(Torsion {
        presentation: pres,
        generators,
        length,
        steps,
    })
}

/// Whether `m_a^d` kills every `generators` element of `M`, by membership of
/// `(x - a)^alpha * g` in the relations for all `|alpha| = d`.
pub fn killed_by_power(
    m: &ModulePresentation,
    generators: &[FreeElem],
    a: &RationalPoint,
    d: u32,
    limits: &Limits,
) -> Result<bool> {
    let ring = m.ring;
    let mt = m.translate(a)?;
    let span = mt.relation_basis(limits)?;
    let n = ring.n();
    let mut monos = Vec::new();
    let mut cur = vec![0u32; n];
    enumerate_degree(&mut cur, 0, d, &mut monos);
    for g in generators {
        let gt = g.translate(a)?;
        for mono in &monos {
            let x = Polynomial::monomial(ring, MultiIndex::from_slice(mono), FpElem::ONE);
            if !span.contains(&gt.scale(&x))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn enumerate_degree(cur: &mut Vec<u32>, k: usize, left: u32, out: &mut Vec<Vec<u32>>) {
    if k + 1 == cur.len() {
        cur[k] = left;
        out.push(cur.clone());
        return;
    }
    for e in 0..=left {
        cur[k] = e;
        enumerate_degree(cur, k + 1, left - e, out);
    }
    cur[k] = 0;
}

/// All monomials of degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    enumerate_degree(&mut cur, 0, d, &mut out);
    out.into_iter().map(|e| MultiIndex::from_slice(&e)).collect()
}
