//! Totally ordered abelian groups, written multiplicatively.
//!
//! Three families are supported: the trivial group, `Z^n` under the
//! lexicographic order, and `Q`. Elements of `Z^n` and `Q` are stored as
//! exponent vectors, so `γ^2 · γ^3 = γ^5` is exponent addition. For `Z^1`
//! and `Q` the generator is written `γ`; elements of `Z^n` with `n ≥ 2` are
//! written as exponent tuples `(a,b)`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational exponent.
pub type Exponent = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Trivial,
    /// `Z^n` with the lexicographic order, `n ≥ 1`.
    IntPower(usize),
    Rational,
}

/// An element of one of the supported groups.
///
/// The derived `Ord` agrees with the group order for elements of the same
/// group, which lets `GammaMax` use it directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// Exponent vector; the empty vector is the element of the trivial group.
    Int(Vec<i64>),
    Rational(Exponent),
}

impl GroupKind {
    pub fn identity(self) -> GroupElement {
        match self {
            GroupKind::Trivial => GroupElement::Int(Vec::new()),
            GroupKind::IntPower(n) => GroupElement::Int(vec![0; n]),
            GroupKind::Rational => GroupElement::Rational(Exponent::zero()),
        }
    }

    pub fn contains(self, g: &GroupElement) -> bool {
        g.kind() == self
    }

    /// `γ^k` in `Z^1` or `Q`.
    pub fn power(self, k: i64) -> Result<GroupElement> {
        match self {
            GroupKind::IntPower(1) => Ok(GroupElement::Int(vec![k])),
            GroupKind::Rational => Ok(GroupElement::Rational(Exponent::from_integer(k))),
            GroupKind::Trivial if k == 0 => Ok(self.identity()),
            _ => Err(Error::GroupMismatch),
        }
    }

    pub fn parse_element(self, s: &str) -> Result<GroupElement> {
        parse_element(self, s)
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Trivial => f.write_str("1"),
            GroupKind::IntPower(1) => f.write_str("Z"),
            GroupKind::IntPower(n) => write!(f, "Z^{n}"),
            GroupKind::Rational => f.write_str("Q"),
        }
    }
}

impl GroupElement {
    pub fn kind(&self) -> GroupKind {
        match self {
            GroupElement::Int(v) if v.is_empty() => GroupKind::Trivial,
            GroupElement::Int(v) => GroupKind::IntPower(v.len()),
            GroupElement::Rational(_) => GroupKind::Rational,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Int(v) => v.iter().all(|&a| a == 0),
            GroupElement::Rational(q) => q.is_zero(),
        }
    }

    /// Single exponent for `Z^1`, `Q` and the trivial group.
    pub fn exponent(&self) -> Option<Exponent> {
        match self {
            GroupElement::Int(v) if v.is_empty() => Some(Exponent::zero()),
            GroupElement::Int(v) if v.len() == 1 => Some(Exponent::from_integer(v[0])),
            GroupElement::Int(_) => None,
            GroupElement::Rational(q) => Some(*q),
        }
    }

    pub fn compare(&self, other: &GroupElement) -> Result<Ordering> {
        if self.kind() != other.kind() {
            return Err(Error::GroupMismatch);
        }
        Ok(self.cmp(other))
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        match (self, other) {
            (GroupElement::Int(a), GroupElement::Int(b)) if a.len() == b.len() => {
                Ok(GroupElement::Int(a.iter().zip(b).map(|(x, y)| x + y).collect()))
            }
            (GroupElement::Rational(a), GroupElement::Rational(b)) => Ok(GroupElement::Rational(a + b)),
            _ => Err(Error::GroupMismatch),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Int(a) => GroupElement::Int(a.iter().map(|x| -x).collect()),
            GroupElement::Rational(q) => GroupElement::Rational(-q),
        }
    }

    pub fn pow(&self, k: i64) -> GroupElement {
        match self {
            GroupElement::Int(a) => GroupElement::Int(a.iter().map(|x| x * k).collect()),
            GroupElement::Rational(q) => GroupElement::Rational(q * k),
        }
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, q: &Exponent) -> fmt::Result {
    if q.is_zero() {
        f.write_str("1")
    } else if q.is_one() {
        f.write_str("γ")
    } else if q.is_integer() {
        write!(f, "γ^{}", q.numer())
    } else {
        write!(f, "γ^({}/{})", q.numer(), q.denom())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Int(v) if v.is_empty() => f.write_str("1"),
            GroupElement::Int(v) if v.len() == 1 => write_exponent(f, &Exponent::from_integer(v[0])),
            GroupElement::Int(v) => {
                f.write_str("(")?;
                for (i, a) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            GroupElement::Rational(q) => write_exponent(f, q),
        }
    }
}

fn parse_err(input: &str) -> Error {
    Error::Parse { what: "group element", input: input.to_string() }
}

fn parse_exponent(s: &str) -> Option<Exponent> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then(|| Exponent::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Exponent::from_integer),
    }
}

/// Parses the text rendering produced by `Display`.
pub fn parse_element(kind: GroupKind, s: &str) -> Result<GroupElement> {
    let t = s.trim();
    if t == "1" {
        return Ok(kind.identity());
    }
    if let Some(body) = t.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        let GroupKind::IntPower(n) = kind else { return Err(parse_err(s)) };
        let coords =
            body.split(',').map(|c| c.trim().parse::<i64>().map_err(|_| parse_err(s))).collect::<Result<Vec<_>>>()?;
        if coords.len() != n {
            return Err(Error::GroupMismatch);
        }
        return Ok(GroupElement::Int(coords));
    }
    let rest = t.strip_prefix('γ').ok_or_else(|| parse_err(s))?;
    let q = if rest.is_empty() {
        Exponent::one()
    } else {
        let e = rest.strip_prefix('^').ok_or_else(|| parse_err(s))?;
        parse_exponent(e).ok_or_else(|| parse_err(s))?
    };
    match kind {
        GroupKind::IntPower(1) if q.is_integer() => Ok(GroupElement::Int(vec![*q.numer()])),
        GroupKind::IntPower(1) => Err(Error::ImageLeavesTarget(format!("{q} is not an integer"))),
        GroupKind::Rational => Ok(GroupElement::Rational(q)),
        GroupKind::Trivial if q.is_zero() => Ok(kind.identity()),
        _ => Err(Error::GroupMismatch),
    }
}

/// Injective order-preserving homomorphism given by scaling exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    source: GroupKind,
    target: GroupKind,
    scale: Exponent,
}

pub fn embed(source: GroupKind, target: GroupKind, scale: Exponent) -> Result<Embedding> {
    if !scale.is_positive() {
        return Err(Error::NotInjective);
    }
    let ok = match (source, target) {
        (GroupKind::Trivial, _) => true,
        (GroupKind::IntPower(n), GroupKind::IntPower(m)) if n == m => {
            if !scale.is_integer() {
                return Err(Error::ImageLeavesTarget(format!("scale {scale} does not map Z^{n} into itself")));
            }
            true
        }
        (GroupKind::IntPower(1), GroupKind::Rational) => true,
        (GroupKind::Rational, GroupKind::Rational) => true,
        _ => false,
    };
    if !ok {
        return Err(Error::ImageLeavesTarget(format!("no scaling embedding {source} -> {target}")));
    }
    Ok(Embedding { source, target, scale })
}

impl Embedding {
    pub fn source(&self) -> GroupKind {
        self.source
    }

    pub fn target(&self) -> GroupKind {
        self.target
    }

    pub fn scale(&self) -> Exponent {
        self.scale
    }

    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement> {
        if g.kind() != self.source {
            return Err(Error::GroupMismatch);
        }
        match (g, self.target) {
            (_, t) if self.source == GroupKind::Trivial => Ok(t.identity()),
            (GroupElement::Int(v), GroupKind::IntPower(_)) => {
                let k = *self.scale.numer();
                Ok(GroupElement::Int(v.iter().map(|a| a * k).collect()))
            }
            (GroupElement::Int(v), GroupKind::Rational) => {
                Ok(GroupElement::Rational(Exponent::from_integer(v[0]) * self.scale))
            }
            (GroupElement::Rational(q), GroupKind::Rational) => Ok(GroupElement::Rational(q * self.scale)),
            _ => Err(Error::GroupMismatch),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn z(k: i64) -> GroupElement {
        GroupElement::Int(vec![k])
    }

    #[test]
    fn lexicographic_compare() {
        let a = GroupElement::Int(vec![1, 0]);
        let b = GroupElement::Int(vec![0, 5]);
        assert_eq!(a.compare(&b), Ok(Ordering::Greater));
        let id = GroupKind::IntPower(2).identity();
        assert_eq!(id.compare(&id), Ok(Ordering::Equal));
        assert_eq!(z(2).compare(&z(5)), Ok(Ordering::Less));
        assert_eq!(z(2).compare(&a), Err(Error::GroupMismatch));
    }

    #[test]
    fn group_laws() {
        assert_eq!(z(2).mul(&z(3)), Ok(z(5)));
        assert_eq!(z(4).inverse(), z(-4));
        let half = GroupElement::Rational(Exponent::new(1, 2));
        let third = GroupElement::Rational(Exponent::new(1, 3));
        assert_eq!(half.mul(&third), Ok(GroupElement::Rational(Exponent::new(5, 6))));
        assert!(z(7).mul(&z(7).inverse()).unwrap().is_identity());
    }

    #[test]
    fn embeddings() {
        let j = embed(GroupKind::IntPower(1), GroupKind::Rational, Exponent::one()).unwrap();
        assert_eq!(j.apply(&z(3)), Ok(GroupElement::Rational(Exponent::from_integer(3))));
        let h = embed(GroupKind::IntPower(1), GroupKind::Rational, Exponent::new(1, 2)).unwrap();
        assert_eq!(h.apply(&z(1)), Ok(GroupElement::Rational(Exponent::new(1, 2))));
        assert_eq!(embed(GroupKind::IntPower(1), GroupKind::Rational, Exponent::zero()), Err(Error::NotInjective));
        assert!(matches!(
            embed(GroupKind::IntPower(1), GroupKind::IntPower(1), Exponent::new(1, 2)),
            Err(Error::ImageLeavesTarget(_))
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(z(0).to_string(), "1");
        assert_eq!(z(1).to_string(), "γ");
        assert_eq!(z(-4).to_string(), "γ^-4");
        assert_eq!(GroupElement::Rational(Exponent::new(-1, 2)).to_string(), "γ^(-1/2)");
        assert_eq!(GroupElement::Int(vec![1, -2]).to_string(), "(1,-2)");
        assert_eq!(parse_element(GroupKind::IntPower(1), "γ^-4"), Ok(z(-4)));
        assert_eq!(parse_element(GroupKind::Rational, "γ^(1/2)"), Ok(GroupElement::Rational(Exponent::new(1, 2))));
        assert!(parse_element(GroupKind::IntPower(1), "γ^(1/2)").is_err());
        assert!(parse_element(GroupKind::IntPower(2), "(1,2,3)").is_err());
    }
}
