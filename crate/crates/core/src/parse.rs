//! Text form of polynomials.
//!
//! Grammar: terms separated by `+` or `-`; a term is a `*`-separated product
//! of integers and powers `x<k>` or `x<k>^<e>`; whitespace is ignored.
//! Variables are `x1` to `xn`. Printing uses the ring's term order and
//! signed coefficient representatives.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::FpElem;
use crate::monomial::MultiIndex;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn number(&mut self) -> Result<u128> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u128 = 0;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u128))
                .ok_or_else(|| self.err("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        Ok(v)
    }
}

/// Parse `text` as an element of `ring`.
pub fn parse_polynomial(ring: PolyRing, text: &str) -> Result<Polynomial> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let p = ring.p();
    let n = ring.n();
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            None if first => return Err(lx.err("empty polynomial")),
            None => break,
            Some(b'+') if !first => lx.pos += 1,
            Some(b'-') => {
                negative = true;
                lx.pos += 1;
            }
            Some(_) if first => {}
            Some(_) => return Err(lx.err("expected '+' or '-'")),
        }
        first = false;
        let mut coeff = FpElem::ONE;
        let mut mono = MultiIndex::zero(n);
        loop {
            match lx.peek() {
                Some(b'x') => {
                    lx.pos += 1;
                    let idx = lx.number()?;
                    if idx == 0 || idx > n as u128 {
                        return Err(AlgebraError::VariableOutOfRange {
                            index: idx.min(usize::MAX as u128) as usize,
                            n,
                        });
                    }
                    let mut e = 1u128;
                    if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        e = lx.number()?;
                    }
                    let slot = &mut mono.as_mut_slice()[idx as usize - 1];
                    let total = (*slot as u128) + e;
                    *slot = u32::try_from(total).map_err(|_| lx.err("exponent too large"))?;
                }
                Some(b) if b.is_ascii_digit() => {
                    let v = lx.number()?;
                    coeff = coeff.mul(FpElem::new((v % p as u128) as u64, p), p);
                }
                _ => return Err(lx.err("expected integer or variable")),
            }
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = coeff.neg(p);
        }
        terms.push((mono, coeff));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Parse a comma-separated generator list.
pub fn parse_polynomial_list(ring: PolyRing, text: &str) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        match parse_polynomial(ring, piece) {
            Ok(f) => out.push(f),
            Err(AlgebraError::Parse { pos, msg }) => {
                return Err(AlgebraError::Parse {
                    pos: pos + offset,
                    msg,
                })
            }
            Err(e) => return Err(e),
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &MultiIndex) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let p = self.ring().p();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let s = c.signed(p);
            let mag = s.unsigned_abs();
            if k == 0 {
                if s < 0 {
                    f.write_str("-")?;
                }
            } else if s < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

/// Comma-joined generator list in the same grammar.
pub fn format_polynomial_list(polys: &[Polynomial]) -> String {
    polys
        .iter()
        .map(|g| format!("{g}"))
        .collect::<Vec<_>>()
        .join(", ")
}
