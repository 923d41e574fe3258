//! Coefficient fields: the rationals and prime fields `F_p`.
//!
//! Coefficients are stored as `BigRational` in both cases. Over `F_p` a
//! coefficient is always an integer in `0..p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Maps a rational number into this field.
    pub fn reduce(&self, q: &BigRational) -> Result<BigRational> {
        match self {
            Field::Rationals => Ok(q.clone()),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let num = q.numer().mod_floor(&p);
                let den = q.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(Error::InvalidCoefficient {
                        text: q.to_string(),
                        reason: format!("denominator vanishes modulo {p}"),
                    });
                }
                let inv = mod_inverse(&den, &p);
                Ok(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> BigRational {
        self.reduce(&BigRational::from_integer(BigInt::from(v)))
            .expect("integers always reduce")
    }

    pub fn one(&self) -> BigRational {
        BigRational::one()
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.wrap(a + b)
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.wrap(a * b)
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        self.wrap(-a)
    }

    // sums and products of integers stay integral, so reduction cannot fail
    fn wrap(&self, q: BigRational) -> BigRational {
        match self {
            Field::Rationals => q,
            Field::Prime(p) => {
                BigRational::from_integer(q.to_integer().mod_floor(&BigInt::from(*p)))
            }
        }
    }

    /// Parses `n` or `n/d`. Fractions are only accepted over the rationals.
    pub fn parse_coefficient(&self, text: &str) -> Result<BigRational> {
        let bad = |reason: &str| Error::InvalidCoefficient {
            text: text.to_string(),
            reason: reason.into(),
        };
        let q = match text.split_once('/') {
            Some((n, d)) => {
                if matches!(self, Field::Prime(_)) {
                    return Err(bad("fractions are only allowed over the rationals"));
                }
                let n = BigInt::from_str(n.trim()).map_err(|_| bad("bad numerator"))?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad("bad denominator"))?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(
                BigInt::from_str(text.trim()).map_err(|_| bad("not an integer"))?,
            ),
        };
        self.reduce(&q)
    }

    pub fn format_coefficient(&self, c: &BigRational) -> String {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }

    /// Whether a (reduced) coefficient prints with a leading minus sign.
    pub fn is_negative(&self, c: &BigRational) -> bool {
        c.is_negative()
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    e.x.mod_floor(p)
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `q` (or `Q`, `rationals`) and `fp:<p>` (or `F<p>`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t, "q" | "Q" | "rationals") {
            return Ok(Field::Rationals);
        }
        let p = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix("Fp:"))
            .or_else(|| t.strip_prefix("F"))
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidCoefficient {
                text: s.to_string(),
                reason: "expected q or fp:<prime>".into(),
            })?;
        Field::prime(p)
    }
}
