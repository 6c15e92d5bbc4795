//! Free resolutions, projective dimension and depth.

use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::ideal::Ideal;
use crate::limits::Limits;
use crate::module::{syzygies, FreeElem, ModulePresentation, PolyMatrix, SubmoduleBasis};
use crate::ring::PolyRing;

/// `F_0 <- F_1 <- ... <- F_len`, stored as the maps `d_1, ..., d_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    ring: PolyRing,
    rank0: usize,
    maps: Vec<PolyMatrix>,
}

impl Resolution {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    /// Ranks of `F_0, ..., F_len`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r = Vec::with_capacity(self.maps.len() + 1);
        r.push(self.rank0);
        r.extend(self.maps.iter().map(|m| m.ncols()));
        r
    }

    pub fn compositions_vanish(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn has_unit_entries(&self) -> bool {
        self.maps.iter().any(|m| m.has_unit_entry())
    }

    /// `d_i d_{i+1} = 0`, `ker d_i = im d_{i+1}` at every interior step and
    /// `d_len` injective.
    pub fn verify_exact(&self, limits: &Limits) -> Result<bool> {
        if !self.compositions_vanish()? {
            return Ok(false);
        }
        for (k, d) in self.maps.iter().enumerate() {
            let ker = syzygies(self.ring, d.nrows(), d.columns(), limits)?;
            match self.maps.get(k + 1) {
                None => {
                    if !ker.is_empty() {
                        return Ok(false);
                    }
                }
                Some(next) => {
                    let im = SubmoduleBasis::new(self.ring, d.ncols(), next.columns(), limits)?;
                    for v in &ker {
                        if !im.contains(v)? {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Drops the generators `cols[i]` made redundant by a syzygy with a unit
/// entry at `i`, rewriting the remaining syzygies.
fn cancel_units(ring: PolyRing, cols: &mut Vec<FreeElem>, mut syz: Vec<FreeElem>) -> Vec<FreeElem> {
    let p = ring.p();
    loop {
        let hit = syz.iter().enumerate().find_map(|(s, v)| {
            v.entries().iter().position(|e| e.is_unit()).map(|i| (s, i))
        });
        let Some((s, i)) = hit else { return syz };
        let sigma = syz.swap_remove(s);
        let inv = sigma.entry(i).leading_coeff().inv(p).unwrap();
        cols.remove(i);
        syz = syz
            .into_iter()
            .map(|v| {
                let factor = v.entry(i).scale(inv);
                let w = if factor.is_zero() {
                    v
                } else {
                    v.sub(&sigma.scale(&factor)).unwrap()
                };
                let mut e = w.entries().to_vec();
                e.remove(i);
                FreeElem::new(ring, e).unwrap()
            })
            .filter(|v| !v.is_zero())
            .collect();
    }
}

/// Iterated syzygies of the pruned presentation of `m`, cancelling unit
/// entries at every step. Graded input yields the minimal graded resolution.
pub fn free_resolution(m: &ModulePresentation, max_len: usize, limits: &Limits) -> Result<Resolution> {
    let ring = *m.ring();
    let m = m.prune();
    let rank0 = m.rank();
    let mut maps = Vec::new();
    let mut rows = rank0;
    let mut cols: Vec<FreeElem> = m.relations().columns().to_vec();
    while !cols.is_empty() {
        limits.check_cancel()?;
        let syz = syzygies(ring, rows, &cols, limits)?;
        let syz = cancel_units(ring, &mut cols, syz);
        let next_rows = cols.len();
        maps.push(PolyMatrix::new(ring, rows, cols)?);
        if syz.is_empty() {
            break;
        }
        if maps.len() >= max_len {
            return Err(AlgebraError::ResolutionTooLong(max_len));
        }
        rows = next_rows;
        cols = syz;
    }
    Ok(Resolution { ring, rank0, maps })
}

/// Length of the minimal graded free resolution of `R/I`.
pub fn projective_dimension(ideal: &Ideal) -> Result<usize> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous);
    }
    if ideal.is_unit_ideal()? {
        return Err(AlgebraError::ZeroModule);
    }
    let n = ideal.ring().n();
    let res = free_resolution(&ModulePresentation::cyclic(ideal), n, ideal.limits())?;
    Ok(res.len())
}

/// `depth R/I = n - pd` (Auslander-Buchsbaum over the polynomial ring).
pub fn depth_via_ab(pd: usize, n: usize) -> Result<usize> {
    if pd > n {
        return Err(AlgebraError::Invariant("projective dimension exceeds n"));
    }
    Ok(n - pd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MultiIndex;
    use crate::parse::parse_polynomial_list;
    use crate::poly::tests::ring;
    use crate::poly::Polynomial;
    use crate::FpElem;
    use proptest::prelude::*;

    fn ideal(r: PolyRing, s: &str) -> Ideal {
        Ideal::new(r, parse_polynomial_list(r, s).unwrap()).unwrap()
    }

    #[test]
    fn principal_ideal_has_length_one() {
        let r = ring(3, 3);
        let res = free_resolution(&ModulePresentation::cyclic(&ideal(r, "x1")), 3, &Limits::default()).unwrap();
        assert_eq!(res.ranks(), [1, 1]);
        assert!(res.verify_exact(&Limits::default()).unwrap());
    }

    #[test]
    fn maximal_ideal_gives_koszul_ranks() {
        let r = ring(2, 3);
        let res = free_resolution(&ModulePresentation::cyclic(&ideal(r, "x1, x2, x3")), 3, &Limits::default()).unwrap();
        assert_eq!(res.ranks(), [1, 3, 3, 1]);
        assert!(!res.has_unit_entries());
        assert!(res.verify_exact(&Limits::default()).unwrap());
    }

    #[test]
    fn pd_examples() {
        let r = ring(5, 3);
        assert_eq!(projective_dimension(&ideal(r, "x1, x2")).unwrap(), 2);
        assert_eq!(projective_dimension(&ideal(r, "x1^2")).unwrap(), 1);
        // a redundant generator does not lengthen anything
        assert_eq!(projective_dimension(&ideal(r, "x1, x2, x1 + x2")).unwrap(), 2);
        assert_eq!(projective_dimension(&ideal(r, "x1^2, x1*x2")).unwrap(), 2);
        assert_eq!(projective_dimension(&ideal(r, "x1 + 1")).unwrap_err(), AlgebraError::NotHomogeneous);
        assert_eq!(projective_dimension(&ideal(r, "1")).unwrap_err(), AlgebraError::ZeroModule);
    }

    #[test]
    fn too_short_length_is_reported() {
        let r = ring(2, 3);
        let err = free_resolution(&ModulePresentation::cyclic(&ideal(r, "x1, x2, x3")), 2, &Limits::default());
        assert_eq!(err.unwrap_err(), AlgebraError::ResolutionTooLong(2));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth_via_ab(3, 3).unwrap(), 0);
        assert_eq!(depth_via_ab(0, 3).unwrap(), 3);
        assert_eq!(depth_via_ab(2, 3).unwrap(), 1);
        assert!(depth_via_ab(4, 3).is_err());
    }

    fn homogeneous(r: PolyRing, d: u32) -> impl Strategy<Value = Polynomial> {
        let monos: Vec<MultiIndex> = crate::module::monomials_of_degree(r.n(), d);
        let k = monos.len();
        proptest::collection::vec(0u64..r.p(), k).prop_map(move |cs| {
            Polynomial::from_terms(
                r,
                monos.iter().cloned().zip(cs.into_iter().map(|c| FpElem::new(c, r.p()))).filter(|(_, c)| !c.is_zero()),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn random_homogeneous_resolutions(a in homogeneous(ring(3, 3), 2), b in homogeneous(ring(3, 3), 2), c in homogeneous(ring(3, 3), 1)) {
            let r = ring(3, 3);
            let i = Ideal::new(r, vec![a, b, c]).unwrap();
            prop_assume!(!i.is_unit_ideal().unwrap() && !i.gens().is_empty());
            let res = free_resolution(&ModulePresentation::cyclic(&i), 3, &Limits::default()).unwrap();
            prop_assert!(res.compositions_vanish().unwrap());
            prop_assert!(!res.has_unit_entries());
            prop_assert!(res.len() <= 3);
            prop_assert!(res.verify_exact(&Limits::default()).unwrap());
            let mut rev = i.gens().to_vec();
            rev.reverse();
            prop_assert_eq!(projective_dimension(&Ideal::new(r, rev).unwrap()).unwrap(), res.len());
        }
    }
}
