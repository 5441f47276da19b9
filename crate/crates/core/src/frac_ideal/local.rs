use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Q;
use crate::error::{Error, Result};

/// `n/m` as an exact rational.
pub fn rational(n: i64, m: i64) -> Q {
    Q::new(n.into(), m.into())
}

/// `v_p(n)` for a nonzero integer.
pub fn vp_int(p: u64, n: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// `v_p(q)`, or `None` for `q = 0`.
pub fn vp(p: u64, q: &Q) -> Option<i64> {
    if q.is_zero() {
        None
    } else {
        Some(vp_int(p, q.numer()) - vp_int(p, q.denom()))
    }
}

/// `p^k` for any integer `k`.
pub fn ppow(p: u64, k: i64) -> Q {
    let base = Q::from_integer(p.into());
    if k >= 0 {
        num_traits::pow(base, k as usize)
    } else {
        num_traits::pow(base.recip(), k.unsigned_abs() as usize)
    }
}

/// `q` lies in `Z_(p)`.
pub fn is_local_integer(p: u64, q: &Q) -> bool {
    vp(p, q).is_none_or(|k| k >= 0)
}

/// The representative of `c + p^β Z_(p)` in `Z[1/p] ∩ [0, p^β)`.
pub fn canonical_residue(p: u64, c: &Q, beta: i64) -> Q {
    let Some(k) = vp(p, c) else { return Q::zero() };
    if k >= beta {
        return Q::zero();
    }
    let unit = c / ppow(p, k);
    let modulus = ppow(p, beta - k).numer().clone();
    let g = unit.denom().mod_floor(&modulus).extended_gcd(&modulus);
    debug_assert!(g.gcd.is_one());
    let r = (unit.numer() * g.x).mod_floor(&modulus);
    Q::from_integer(r) * ppow(p, k)
}

/// An element of `Z_(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalRational {
    p: u64,
    q: Q,
}

impl LocalRational {
    pub fn new(p: u64, q: Q) -> Result<Self> {
        if is_local_integer(p, &q) {
            Ok(LocalRational { p, q })
        } else {
            Err(Error::Precondition(alloc::format!("{q} is not in Z_({p})")))
        }
    }

    pub fn value(&self) -> &Q {
        &self.q
    }

    pub fn valuation(&self) -> Option<i64> {
        vp(self.p, &self.q)
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    pub fn add(&self, other: &LocalRational) -> Result<LocalRational> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(LocalRational { p: self.p, q: &self.q + &other.q })
    }

    pub fn mul(&self, other: &LocalRational) -> Result<LocalRational> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        Ok(LocalRational { p: self.p, q: &self.q * &other.q })
    }
}

/// Parses `n` or `n/m`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let err = || Error::Parse { what: "rational", input: s.into() };
    let s = s.trim();
    let (n, m) = match s.split_once('/') {
        Some((n, m)) => (n, m),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| err())?;
    let m: BigInt = m.trim().parse().map_err(|_| err())?;
    if m.is_zero() {
        return Err(err());
    }
    Ok(Q::new(n, m))
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, m: i64) -> Q {
        rational(n, m)
    }

    #[test]
    fn valuations() {
        assert_eq!(vp(5, &q(50, 3)), Some(2));
        assert_eq!(vp(5, &q(3, 25)), Some(-2));
        assert_eq!(vp(5, &Q::zero()), None);
        assert_eq!(ppow(2, -3), q(1, 8));
        assert!(LocalRational::new(5, q(1, 5)).is_err());
        let a = LocalRational::new(5, q(2, 3)).unwrap();
        assert!(a.is_unit());
        assert_eq!(a.mul(&a).unwrap().value(), &q(4, 9));
        assert!(a.add(&LocalRational::new(3, q(1, 1)).unwrap()).is_err());
    }

    #[test]
    fn residues() {
        // 1/3 ≡ 2 mod 5, and 1/3 ≡ 17 mod 25.
        assert_eq!(canonical_residue(5, &q(1, 3), 1), q(2, 1));
        assert_eq!(canonical_residue(5, &q(1, 3), 2), q(17, 1));
        assert_eq!(canonical_residue(5, &q(7, 5), 1), q(7, 5));
        assert_eq!(canonical_residue(5, &q(7, 5), 0), q(2, 5));
        assert_eq!(canonical_residue(5, &q(10, 1), 1), Q::zero());
        assert_eq!(canonical_residue(2, &q(-1, 1), 3), q(7, 1));
        for c in [q(1, 3), q(-7, 10), q(49, 125)] {
            for beta in -2..4 {
                let r = canonical_residue(5, &c, beta);
                assert!(vp(5, &(&c - &r)).is_none_or(|k| k >= beta));
                assert!(r >= Q::zero() && r < ppow(5, beta));
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-3/6"), Ok(q(-1, 2)));
        assert!(parse_rational("1/0").is_err());
        assert!(is_prime(5) && !is_prime(9) && !is_prime(1));
    }
}
