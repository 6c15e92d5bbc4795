use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::field::{is_prime, FpElem, MAX_PRIME};
use crate::monomial::MonomialOrder;

/// The ring `F_p[x_1, ..., x_n]` together with a monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyRing {
    p: u64,
    n: usize,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(p: u64, n: usize, order: MonomialOrder) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(AlgebraError::InvalidRing("modulus exceeds 2^31 - 1"));
        }
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if n == 0 {
            return Err(AlgebraError::InvalidRing("need at least one variable"));
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > n {
                return Err(AlgebraError::InvalidRing("elimination block larger than n"));
            }
        }
        Ok(PolyRing { p, n, order })
    }

    pub fn grevlex(p: u64, n: usize) -> Result<Self> {
        Self::new(p, n, MonomialOrder::GrevLex)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { order, ..*self }
    }

    /// `extra` fresh variables prepended at indices `0..extra`, eliminated
    /// first.
    pub(crate) fn elimination_ring(&self, extra: usize) -> Self {
        PolyRing {
            p: self.p,
            n: self.n + extra,
            order: MonomialOrder::Elimination(extra),
        }
    }

    /// Drops the last variable; used when passing to `R / (x_n)`.
    pub fn drop_last_variable(&self) -> Result<Self> {
        if self.n < 2 {
            return Err(AlgebraError::InvalidRing("need at least one variable"));
        }
        Ok(PolyRing {
            n: self.n - 1,
            ..*self
        })
    }

    pub fn elem(&self, v: i64) -> FpElem {
        FpElem::from_i64(v, self.p)
    }
}

/// An `F_p`-rational point `a`, standing for the maximal ideal
/// `m_a = (x_1 - a_1, ..., x_n - a_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    coords: Vec<FpElem>,
}

impl RationalPoint {
    pub fn new(ring: &PolyRing, coords: &[i64]) -> Result<Self> {
        if coords.len() != ring.n() {
            return Err(AlgebraError::LengthMismatch {
                expected: ring.n(),
                got: coords.len(),
            });
        }
        Ok(RationalPoint {
            coords: coords.iter().map(|&c| ring.elem(c)).collect(),
        })
    }

    pub fn origin(ring: &PolyRing) -> Self {
        RationalPoint {
            coords: alloc::vec![FpElem::ZERO; ring.n()],
        }
    }

    pub fn coords(&self) -> &[FpElem] {
        &self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self, ring: &PolyRing) -> Self {
        RationalPoint {
            coords: self.coords.iter().map(|c| c.neg(ring.p())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert_eq!(PolyRing::grevlex(4, 2), Err(AlgebraError::NotPrime(4)));
        assert!(PolyRing::grevlex(2, 0).is_err());
        let r = PolyRing::grevlex(5, 3).unwrap();
        assert_eq!((r.p(), r.n()), (5, 3));
        assert!(RationalPoint::new(&r, &[1, 2]).is_err());
        let a = RationalPoint::new(&r, &[1, -1, 7]).unwrap();
        assert_eq!(a.coords()[1].value(), 4);
        assert_eq!(a.coords()[2].value(), 2);
    }
}
