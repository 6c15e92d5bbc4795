//! Exponent vectors and monomial orders.

use core::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

/// Exponent vector `(i_1, ..., i_n)` of the monomial `x_1^{i_1} ... x_n^{i_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(SmallVec<[u32; 8]>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(smallvec::smallvec![0; n])
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        MultiIndex(SmallVec::from_slice(exps))
    }

    /// The constant multi-index `(v, ..., v)`; with `v = q - 1` this is the
    /// top corner of the Frobenius box.
    pub fn constant(n: usize, v: u32) -> Self {
        MultiIndex(smallvec::smallvec![v; n])
    }

    /// `x_i` as an exponent vector (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut m = Self::zero(n);
        m.0[i] = 1;
        m
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, failing if some exponent would go negative.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if !other.divides(self) {
            return Err(AlgebraError::Invariant("monomial does not divide"));
        }
        Ok(self.div_unchecked(other))
    }

    pub(crate) fn div_unchecked(&self, other: &Self) -> Self {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiply every exponent by `k`.
    pub fn scale(&self, k: u32) -> Result<Self> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for &e in &self.0 {
            out.push(
                e.checked_mul(k)
                    .ok_or(AlgebraError::ResourceLimit(crate::error::Ceiling::Exponent))?,
            );
        }
        Ok(MultiIndex(out))
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

/// Monomial orders on exponent vectors.
///
/// `Elimination(k)` compares the first `k` variables by degree reverse
/// lexicographic order and breaks ties by grevlex on the rest; every monomial
/// involving one of the first `k` variables is larger than every monomial
/// free of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    Elimination(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Elimination(_) => "elimination",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> MultiIndex {
        MultiIndex::from_slice(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        // x1*x3 < x2^2 in grevlex
        assert_eq!(o.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&mono(&[2, 0, 0]), &mono(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[0, 0, 3]), &mono(&[1, 0, 0])), Ordering::Greater);
        let l = MonomialOrder::Lex;
        assert_eq!(l.cmp(&mono(&[1, 0, 0]), &mono(&[0, 0, 3])), Ordering::Greater);
    }

    #[test]
    fn elimination_order_puts_first_block_on_top() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[0, 2, 0]), &mono(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn checked_div_refuses_negative_exponents() {
        assert!(mono(&[1, 0]).checked_div(&mono(&[0, 1])).is_err());
        assert_eq!(mono(&[2, 1]).checked_div(&mono(&[1, 1])).unwrap(), mono(&[1, 0]));
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            Just(MonomialOrder::Elimination(1)),
            Just(MonomialOrder::Elimination(2)),
        ]
    }

    fn monos() -> impl Strategy<Value = MultiIndex> {
        proptest::collection::vec(0u32..5, 3).prop_map(|v| MultiIndex::from_slice(&v))
    }

    proptest! {
        #[test]
        fn order_is_total_and_multiplicative(o in orders(), a in monos(), b in monos(), c in monos()) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab.reverse(), o.cmp(&b, &a));
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
        }

        #[test]
        fn order_is_transitive(o in orders(), mut v in proptest::collection::vec(monos(), 3)) {
            v.sort_by(|x, y| o.cmp(x, y));
            prop_assert_ne!(o.cmp(&v[0], &v[2]), Ordering::Greater);
        }

        #[test]
        fn one_is_the_minimum(o in orders(), a in monos()) {
            // well-foundedness on a sampled set: every chain bottoms out at 1
            prop_assert_ne!(o.cmp(&MultiIndex::zero(3), &a), Ordering::Greater);
            let mut set: Vec<MultiIndex> = (0..a.exps()[0]).map(|k| MultiIndex::from_slice(&[k, 0, 0])).collect();
            set.sort_by(|x, y| o.cmp(x, y));
            if let Some(first) = set.first() {
                prop_assert!(first.is_one());
            }
        }
    }
}
