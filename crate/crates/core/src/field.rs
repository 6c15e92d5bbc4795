//! Arithmetic in the prime field F_p.

use crate::error::{AlgebraError, Result};

/// An element of F_p, always stored reduced into `[0, p)`.
///
/// The modulus is carried by the surrounding [`PolyRing`](crate::PolyRing);
/// every operation takes it explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FpElem(u64);

/// Largest modulus accepted, so that products of two residues fit in `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FpElem {
    pub const ZERO: FpElem = FpElem(0);
    pub const ONE: FpElem = FpElem(1);

    pub fn new(value: u64, p: u64) -> Self {
        FpElem(value % p)
    }

    pub fn from_i64(value: i64, p: u64) -> Self {
        let m = value.rem_euclid(p as i64);
        FpElem(m as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: Self, p: u64) -> Self {
        let s = self.0 + other.0;
        FpElem(if s >= p { s - p } else { s })
    }

    pub fn sub(self, other: Self, p: u64) -> Self {
        FpElem(if self.0 >= other.0 {
            self.0 - other.0
        } else {
            self.0 + p - other.0
        })
    }

    pub fn neg(self, p: u64) -> Self {
        if self.0 == 0 {
            self
        } else {
            FpElem(p - self.0)
        }
    }

    pub fn mul(self, other: Self, p: u64) -> Self {
        FpElem(self.0 * other.0 % p)
    }

    pub fn pow(self, mut e: u64, p: u64) -> Self {
        let mut base = self;
        let mut acc = FpElem(1 % p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base, p);
            }
            base = base.mul(base, p);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(self, p: u64) -> Result<Self> {
        if self.0 == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.pow(p - 2, p))
    }

    /// Signed representative in `(-p/2, p/2]`, used only for printing.
    pub fn signed(self, p: u64) -> i64 {
        if self.0 > p / 2 {
            self.0 as i64 - p as i64
        } else {
            self.0 as i64
        }
    }
}

impl core::fmt::Display for FpElem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}
