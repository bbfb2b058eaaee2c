//! Exact rational scalars and their text form (`p` or `p/q`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

/// `p` for integers, `p/q` otherwise; always reduced.
pub fn fmt_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn abs_q(v: &Q) -> Q {
    v.abs()
}

/// Falling factorial r (r-1) ... (r-k+1).
pub fn falling(r: u32, k: u32) -> Q {
    if k > r {
        return zero();
    }
    (0..k).fold(one(), |acc, i| acc * q((r - i) as i64))
}

pub fn binomial(n: u32, k: u32) -> Q {
    if k > n {
        return zero();
    }
    falling(n, k) / falling(k, k)
}

pub fn pow_q(base: &Q, e: u32) -> Q {
    let mut acc = one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}
