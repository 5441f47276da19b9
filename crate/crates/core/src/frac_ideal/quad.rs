use alloc::format;
use alloc::string::String;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::local::parse_rational;
use super::Q;
use crate::error::{Error, Result};

/// `a + b√d` in `Q(√d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadElem {
    pub d: i64,
    pub a: Q,
    pub b: Q,
}

impl QuadElem {
    pub fn new(d: i64, a: Q, b: Q) -> Self {
        QuadElem { d, a, b }
    }

    pub fn int(d: i64, a: i64, b: i64) -> Self {
        QuadElem { d, a: Q::from_integer(a.into()), b: Q::from_integer(b.into()) }
    }

    pub fn rational(d: i64, a: Q) -> Self {
        QuadElem { d, a, b: Q::zero() }
    }

    pub fn zero(d: i64) -> Self {
        Self::rational(d, Q::zero())
    }

    pub fn one(d: i64) -> Self {
        Self::rational(d, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn dq(&self) -> Q {
        Q::from_integer(self.d.into())
    }

    pub fn add(&self, o: &QuadElem) -> QuadElem {
        QuadElem { d: self.d, a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &QuadElem) -> QuadElem {
        QuadElem { d: self.d, a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> QuadElem {
        QuadElem { d: self.d, a: -&self.a, b: -&self.b }
    }

    pub fn mul(&self, o: &QuadElem) -> QuadElem {
        QuadElem { d: self.d, a: &self.a * &o.a + self.dq() * &self.b * &o.b, b: &self.a * &o.b + &self.b * &o.a }
    }

    pub fn scale(&self, q: &Q) -> QuadElem {
        QuadElem { d: self.d, a: &self.a * q, b: &self.b * q }
    }

    pub fn conj(&self) -> QuadElem {
        QuadElem { d: self.d, a: self.a.clone(), b: -&self.b }
    }

    pub fn norm(&self) -> Q {
        &self.a * &self.a - self.dq() * &self.b * &self.b
    }

    pub fn trace(&self) -> Q {
        &self.a + &self.a
    }

    pub fn inverse(&self) -> Option<QuadElem> {
        let n = self.norm();
        (!n.is_zero()).then(|| self.conj().scale(&n.recip()))
    }

    pub fn pow(&self, k: u32) -> QuadElem {
        (0..k).fold(Self::one(self.d), |acc, _| acc.mul(self))
    }

    /// The scalar `t` with `self = t·v`, if the two are proportional.
    pub fn ratio(&self, v: &QuadElem) -> Option<Q> {
        if &self.a * &v.b != &self.b * &v.a || v.is_zero() {
            return None;
        }
        Some(if v.a.is_zero() { &self.b / &v.b } else { &self.a / &v.a })
    }
}

fn write_q(f: &mut fmt::Formatter<'_>, q: &Q) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write_q(f, &self.a);
        }
        if !self.a.is_zero() {
            write_q(f, &self.a)?;
            f.write_str(if self.b.is_negative() { "-" } else { "+" })?;
        } else if self.b.is_negative() {
            f.write_str("-")?;
        }
        let c = self.b.abs();
        if !c.is_one() {
            write_q(f, &c)?;
            f.write_str("*")?;
        }
        write!(f, "sqrt({})", self.d)
    }
}

/// Parses `a`, `a+c*sqrt(d)`, `c*sqrt(d)`, `-sqrt(d)` and the like. The
/// radicand must equal `d`.
pub fn parse_quad(s: &str, d: i64) -> Result<QuadElem> {
    let err = || Error::Parse { what: "quadratic element", input: s.into() };
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(at) = t.find("sqrt(") else {
        return Ok(QuadElem::rational(d, parse_rational(&t)?));
    };
    let radicand = t[at + 5..].strip_suffix(')').ok_or_else(err)?;
    if radicand.parse::<i64>().map_err(|_| err())? != d {
        return Err(Error::Parse { what: "radicand", input: format!("{radicand} (expected {d})") });
    }
    let prefix = &t[..at];
    let prefix = prefix.strip_suffix('*').unwrap_or(prefix);
    let split = prefix.char_indices().filter(|&(i, c)| i > 0 && (c == '+' || c == '-')).map(|(i, _)| i).next_back();
    let (rat, coeff) = match split {
        Some(i) => (parse_rational(&prefix[..i])?, &prefix[i..]),
        None => (Q::zero(), prefix),
    };
    let b = match coeff {
        "" | "+" => Q::one(),
        "-" => -Q::one(),
        c => parse_rational(c.strip_prefix('+').unwrap_or(c))?,
    };
    Ok(QuadElem::new(d, rat, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac_ideal::rational;

    #[test]
    fn arithmetic() {
        let i = QuadElem::int(-1, 0, 1);
        assert_eq!(i.mul(&i), QuadElem::int(-1, -1, 0));
        let x = QuadElem::int(-1, 2, 1);
        assert_eq!(x.norm(), rational(5, 1));
        assert_eq!(x.mul(&x.conj()), QuadElem::int(-1, 5, 0));
        assert_eq!(x.mul(&x.inverse().unwrap()), QuadElem::one(-1));
        assert_eq!(x.scale(&rational(3, 1)).ratio(&x), Some(rational(3, 1)));
        assert_eq!(x.ratio(&x.conj()), None);
    }

    #[test]
    fn round_trip() {
        for s in ["1/2+3/4*sqrt(2)", "-sqrt(2)", "3", "-7/5", "1-sqrt(2)", "sqrt(2)", "2*sqrt(2)", "-1/2-3*sqrt(2)"] {
            let x = parse_quad(s, 2).unwrap();
            assert_eq!(format!("{x}"), s);
        }
        assert_eq!(parse_quad("1 + sqrt(-1)", -1), Ok(QuadElem::int(-1, 1, 1)));
        assert!(parse_quad("1+sqrt(3)", 2).is_err());
        assert!(parse_quad("1+x", 2).is_err());
    }
}
