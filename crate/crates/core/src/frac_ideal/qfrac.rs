use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::local::vp;
use super::Q;
use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// A finitely generated `Z_(p)`-submodule of `Q`: zero, or `p^n Z_(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QfracIdeal {
    pub p: u64,
    pub exponent: Option<i64>,
}

impl QfracIdeal {
    pub fn zero(p: u64) -> Self {
        QfracIdeal { p, exponent: None }
    }

    pub fn power(p: u64, n: i64) -> Self {
        QfracIdeal { p, exponent: Some(n) }
    }

    /// `q Z_(p)`.
    pub fn principal(p: u64, q: &Q) -> Self {
        QfracIdeal { p, exponent: vp(p, q) }
    }

    pub fn is_zero(&self) -> bool {
        self.exponent.is_none()
    }
}

impl fmt::Display for QfracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            None => f.write_str("0"),
            Some(0) => write!(f, "Z_({})", self.p),
            Some(n) => write!(f, "{}^{} Z_({})", self.p, n, self.p),
        }
    }
}

fn same_prime(i: &QfracIdeal, j: &QfracIdeal) -> Result<()> {
    if i.p != j.p {
        return Err(Error::PrimeMismatch(i.p, j.p));
    }
    Ok(())
}

/// Module sum: the smaller exponent wins.
pub fn qf_add(i: &QfracIdeal, j: &QfracIdeal) -> Result<QfracIdeal> {
    same_prime(i, j)?;
    let exponent = match (i.exponent, j.exponent) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(QfracIdeal { p: i.p, exponent })
}

pub fn qf_mul(i: &QfracIdeal, j: &QfracIdeal) -> Result<QfracIdeal> {
    same_prime(i, j)?;
    let exponent = match (i.exponent, j.exponent) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };
    Ok(QfracIdeal { p: i.p, exponent })
}

/// Containment `I ⊆ J`.
pub fn qf_leq(i: &QfracIdeal, j: &QfracIdeal) -> Result<bool> {
    same_prime(i, j)?;
    Ok(match (i.exponent, j.exponent) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => a >= b,
    })
}

/// `S_f(Q, Z_(p))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QfracSemiring {
    pub p: u64,
}

impl QfracSemiring {
    /// Zero and `p^n Z_(p)` for `|n| ≤ bound`.
    pub fn window(&self, bound: i64) -> Vec<QfracIdeal> {
        let mut out = alloc::vec![QfracIdeal::zero(self.p)];
        out.extend((-bound..=bound).map(|n| QfracIdeal::power(self.p, n)));
        out
    }
}

impl Semiring for QfracSemiring {
    type Elem = QfracIdeal;

    fn zero(&self) -> QfracIdeal {
        QfracIdeal::zero(self.p)
    }

    fn one(&self) -> QfracIdeal {
        QfracIdeal::power(self.p, 0)
    }

    fn add(&self, x: &QfracIdeal, y: &QfracIdeal) -> QfracIdeal {
        qf_add(x, y).expect("one prime")
    }

    fn mul(&self, x: &QfracIdeal, y: &QfracIdeal) -> QfracIdeal {
        qf_mul(x, y).expect("one prime")
    }

    fn leq(&self, x: &QfracIdeal, y: &QfracIdeal) -> bool {
        qf_leq(x, y).expect("one prime")
    }

    fn inverse(&self, x: &QfracIdeal) -> Option<QfracIdeal> {
        x.exponent.map(|n| QfracIdeal::power(self.p, -n))
    }

    fn render(&self, x: &QfracIdeal) -> String {
        format!("{x}")
    }
}

/// A submodule `N ⊆ Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QSubmodule {
    Ideal(QfracIdeal),
    All,
}

/// `{N' ⊆ N : N' finitely generated}` as a membership test.
pub fn qf_subsemigroup_of_submodule(n: QSubmodule) -> impl Fn(&QfracIdeal) -> bool {
    move |m| match n {
        QSubmodule::All => true,
        QSubmodule::Ideal(i) => qf_leq(m, &i).unwrap_or(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac_ideal::rational;
    use crate::idem::is_saturated;
    use crate::semiring::Carrier;

    #[test]
    fn arithmetic() {
        let (a, b) = (QfracIdeal::power(5, 1), QfracIdeal::power(5, -1));
        assert_eq!(qf_add(&a, &b), Ok(b));
        assert_eq!(qf_mul(&a, &b), Ok(QfracIdeal::power(5, 0)));
        assert_eq!(qf_leq(&a, &QfracIdeal::power(5, 0)), Ok(true));
        assert_eq!(qf_add(&a, &QfracIdeal::power(3, 1)), Err(Error::PrimeMismatch(5, 3)));
        assert_eq!(QfracIdeal::principal(5, &rational(3, 25)), QfracIdeal::power(5, -2));
    }

    #[test]
    fn subsemigroups() {
        let s = QfracSemiring { p: 5 };
        let c = Carrier::new(s, s.window(8)).unwrap();
        let integers = qf_subsemigroup_of_submodule(QSubmodule::Ideal(QfracIdeal::power(5, 0)));
        let members = c.subset_where(&integers);
        assert!(is_saturated(&c, &members));
        assert!(members.iter().all(|i| c.elem(i).exponent.is_none_or(|n| n >= 0)));
        assert_eq!(members.len(), 10);
        let zero = qf_subsemigroup_of_submodule(QSubmodule::Ideal(QfracIdeal::zero(5)));
        assert_eq!(c.subset_where(zero).len(), 1);
        assert_eq!(c.subset_where(qf_subsemigroup_of_submodule(QSubmodule::All)).len(), c.len());
    }
}
