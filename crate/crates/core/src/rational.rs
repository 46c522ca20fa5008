//! Exact rational scalars and their "p/q" string form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The exact scalar used everywhere outside the qubit module.
pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// Parses `"p"`, `"p/q"` or a terminating decimal such as `"-0.25"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse(format!("empty rational in {s:?}")));
    }
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Q::new(p, q));
    }
    if let Some((whole, dec)) = t.split_once('.') {
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), dec);
        if dec.is_empty() || !dec.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        let d = num_traits::pow(BigInt::from(10), dec.len());
        let v = Q::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

/// Parses a comma-separated list of rationals.
pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(parse_q).collect()
}

/// Canonical "p/q" string; integers print without a denominator.
pub fn fmt_q(q: &Q) -> String {
    q.to_string()
}

pub fn fmt_vec(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_q).collect()
}

pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn is_integer(q: &Q) -> bool {
    q.is_integer()
}

/// Exact conversion of an integral rational to `i64`, if it fits.
pub fn to_i64(q: &Q) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn abs(q: &Q) -> Q {
    q.abs()
}

pub fn ints(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| int(x)).collect()
}

/// Numerator vector over a common positive denominator (the lcm of the entries' denominators).
pub fn common_denominator(v: &[Q]) -> (Vec<BigInt>, BigInt) {
    use num_integer::Integer;
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let nums = v.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    (nums, l)
}

/// `serialize_with` helpers writing rationals as "p/q" strings.
pub mod ser {
    use super::{fmt_q, Q};
    use serde::Serializer;

    pub fn q<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(v))
    }

    pub fn opt_q<S: Serializer>(v: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&fmt_q(x)),
            None => s.serialize_none(),
        }
    }

    pub fn vec<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(fmt_q))
    }

    pub fn mat<S: Serializer>(m: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(m.iter().map(|r| r.iter().map(fmt_q).collect::<Vec<_>>()))
    }
}
