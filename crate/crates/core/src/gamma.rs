//! The semifield `Γ_max = Γ ∪ {0}` with `x + y = max(x, y)` and the group law
//! as multiplication.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{Exponent, GroupElement, GroupKind};
use crate::semiring::Semiring;

/// Zero, or a unit carrying a group element. The derived order puts `Zero`
/// at the bottom and agrees with the group order on units.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammaMax {
    Zero,
    Unit(GroupElement),
}

impl GammaMax {
    pub fn one(kind: GroupKind) -> GammaMax {
        GammaMax::Unit(kind.identity())
    }

    pub fn power(kind: GroupKind, k: i64) -> Result<GammaMax> {
        kind.power(k).map(GammaMax::Unit)
    }

    pub fn rational(q: Exponent) -> GammaMax {
        GammaMax::Unit(GroupElement::Rational(q))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, GammaMax::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, GammaMax::Unit(g) if g.is_identity())
    }

    pub fn unit(&self) -> Option<&GroupElement> {
        match self {
            GammaMax::Zero => None,
            GammaMax::Unit(g) => Some(g),
        }
    }

    pub fn inverse(&self) -> Option<GammaMax> {
        self.unit().map(|g| GammaMax::Unit(g.inverse()))
    }
}

fn same_group(x: &GammaMax, y: &GammaMax) -> Result<()> {
    match (x, y) {
        (GammaMax::Unit(g), GammaMax::Unit(h)) if g.kind() != h.kind() => Err(Error::GroupMismatch),
        _ => Ok(()),
    }
}

/// `x + y = max(x, y)`.
pub fn gm_add(x: &GammaMax, y: &GammaMax) -> Result<GammaMax> {
    same_group(x, y)?;
    Ok(if x >= y { x.clone() } else { y.clone() })
}

pub fn gm_mul(x: &GammaMax, y: &GammaMax) -> Result<GammaMax> {
    match (x, y) {
        (GammaMax::Unit(g), GammaMax::Unit(h)) => g.mul(h).map(GammaMax::Unit),
        _ => {
            same_group(x, y)?;
            Ok(GammaMax::Zero)
        }
    }
}

/// `x ≤ y` iff `x + y = y`.
pub fn gm_leq(x: &GammaMax, y: &GammaMax) -> Result<bool> {
    Ok(gm_add(x, y)? == *y)
}

impl fmt::Display for GammaMax {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaMax::Zero => f.write_str("0"),
            GammaMax::Unit(g) => write!(f, "{g}"),
        }
    }
}

pub fn parse_gamma(kind: GroupKind, s: &str) -> Result<GammaMax> {
    if s.trim() == "0" {
        Ok(GammaMax::Zero)
    } else {
        kind.parse_element(s).map(GammaMax::Unit)
    }
}

/// `Γ_max` for a fixed group, as a semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaMaxField {
    pub group: GroupKind,
}

impl GammaMaxField {
    pub fn new(group: GroupKind) -> Self {
        GammaMaxField { group }
    }

    /// `{0} ∪ {γ^k : |k| ≤ n}` for `Z` and `Q`, or the box `[-n, n]^m` for
    /// `Z^m`.
    pub fn window(&self, n: i64) -> Vec<GammaMax> {
        let mut out = Vec::new();
        out.push(GammaMax::Zero);
        match self.group {
            GroupKind::Trivial => out.push(GammaMax::one(GroupKind::Trivial)),
            GroupKind::IntPower(m) => {
                let side = (2 * n + 1) as usize;
                let total = side.pow(m as u32);
                for mut code in 0..total {
                    let mut v = Vec::with_capacity(m);
                    for _ in 0..m {
                        v.push((code % side) as i64 - n);
                        code /= side;
                    }
                    v.reverse();
                    out.push(GammaMax::Unit(GroupElement::Int(v)));
                }
            }
            GroupKind::Rational => {
                for k in -n..=n {
                    out.push(GammaMax::rational(Exponent::from_integer(k)));
                }
            }
        }
        out.sort();
        out
    }

    /// Rational window with exponents `k/den`, `|k| ≤ n`.
    pub fn rational_window(n: i64, den: i64) -> Vec<GammaMax> {
        let mut out: Vec<GammaMax> = (-n..=n).map(|k| GammaMax::rational(Exponent::new(k, den))).collect();
        out.insert(0, GammaMax::Zero);
        out
    }
}

impl Semiring for GammaMaxField {
    type Elem = GammaMax;

    fn zero(&self) -> GammaMax {
        GammaMax::Zero
    }

    fn one(&self) -> GammaMax {
        GammaMax::one(self.group)
    }

    fn add(&self, x: &GammaMax, y: &GammaMax) -> GammaMax {
        gm_add(x, y).expect("elements of one Γ_max")
    }

    fn mul(&self, x: &GammaMax, y: &GammaMax) -> GammaMax {
        gm_mul(x, y).expect("elements of one Γ_max")
    }

    fn leq(&self, x: &GammaMax, y: &GammaMax) -> bool {
        x <= y
    }

    fn inverse(&self, x: &GammaMax) -> Option<GammaMax> {
        x.inverse()
    }

    fn render(&self, x: &GammaMax) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> GammaMax {
        GammaMax::power(GroupKind::IntPower(1), k).unwrap()
    }

    #[test]
    fn max_plus_arithmetic() {
        assert_eq!(gm_add(&z(2), &z(5)), Ok(z(5)));
        assert_eq!(gm_add(&GammaMax::Zero, &z(3)), Ok(z(3)));
        assert_eq!(gm_mul(&z(2), &z(-2)), Ok(z(0)));
        assert!(gm_mul(&z(2), &z(-2)).unwrap().is_one());
        assert_eq!(gm_mul(&GammaMax::Zero, &z(4)), Ok(GammaMax::Zero));
        let q = GammaMax::rational(Exponent::new(1, 2));
        assert_eq!(gm_add(&z(1), &q), Err(Error::GroupMismatch));
    }

    #[test]
    fn canonical_order() {
        assert_eq!(gm_leq(&z(2), &z(3)), Ok(true));
        assert_eq!(gm_leq(&z(3), &z(2)), Ok(false));
        assert_eq!(gm_leq(&GammaMax::Zero, &z(-100)), Ok(true));
        let b = GammaMaxField::new(GroupKind::Trivial);
        assert!(!b.leq(&b.one(), &b.zero()));
    }

    #[test]
    fn windows() {
        let zmax = GammaMaxField::new(GroupKind::IntPower(1));
        let w = zmax.window(8);
        assert_eq!(w.len(), 18);
        assert_eq!(w[0], GammaMax::Zero);
        assert_eq!(w[17], z(8));
        let z2 = GammaMaxField::new(GroupKind::IntPower(2));
        assert_eq!(z2.window(1).len(), 10);
        assert_eq!(parse_gamma(GroupKind::IntPower(1), "γ^-3"), Ok(z(-3)));
    }
}
