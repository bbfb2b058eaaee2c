//! Canonical text form: `3/2*x[0]^2*x[3] - x[1] + 5`, leading term first.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};

fn fmt_monomial(m: &Monomial) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x[{i}]") } else { format!("x[{i}]^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{}", fmt_q(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_q(&mag))?;
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Parse the canonical text form (term order and spacing are free).
    pub fn parse(text: &str, nvars: usize) -> Result<Poly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Poly::zero(nvars);
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut pieces = Vec::new();
        for i in 1..bytes.len() {
            // a sign begins a new term unless it follows '^' or '*'
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'^' | b'*') {
                pieces.push(&s[start..i]);
                start = i;
            }
        }
        pieces.push(&s[start..]);
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (Q::one(), &piece[1..]),
                b'-' => (-Q::one(), &piece[1..]),
                _ => (Q::one(), piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {text:?}")));
            }
            let mut coeff = sign;
            let mut exps = vec![0u32; nvars];
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix("x[") {
                    let (idx, tail) = rest
                        .split_once(']')
                        .ok_or_else(|| Error::Parse(format!("unclosed variable in {factor:?}")))?;
                    let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index {idx:?}")))?;
                    if i >= nvars {
                        return Err(Error::Parse(format!("variable x[{i}] outside {nvars} variables")));
                    }
                    let e: u32 = if tail.is_empty() {
                        1
                    } else {
                        let t = tail
                            .strip_prefix('^')
                            .ok_or_else(|| Error::Parse(format!("unexpected {tail:?} after variable")))?;
                        t.parse().map_err(|_| Error::Parse(format!("bad exponent {t:?}")))?
                    };
                    exps[i] += e;
                } else {
                    coeff *= parse_q(factor)?;
                }
            }
            if !coeff.is_zero() {
                out.add_term(Monomial::from_exponents(exps), coeff);
            }
        }
        Ok(out)
    }
}
