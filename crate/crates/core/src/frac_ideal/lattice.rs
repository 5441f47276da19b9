use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::local::{canonical_residue, ppow, rational, vp};
use super::qfrac::QfracIdeal;
use super::quad::QuadElem;
use super::Q;
use crate::error::{Error, Result};
use crate::gamma::GammaMax;
use crate::group::GroupKind;
use crate::semiring::Semiring;

/// A finitely generated `Z_(p)`-submodule of `Q(√d)` in canonical form.
///
/// Rank 1: a single generator `p^k(1 + c√d)` or `p^k(c + √d)`.
/// Rank 2: rows `p^α + c√d` and `p^β√d` with `c` the canonical residue
/// modulo `p^β`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadLattice {
    p: u64,
    d: i64,
    basis: Vec<QuadElem>,
}

fn normalize_rank1(p: u64, v: &QuadElem) -> QuadElem {
    match (vp(p, &v.a), vp(p, &v.b)) {
        (Some(ka), kb) if kb.is_none_or(|kb| ka <= kb) => v.scale(&(ppow(p, ka) / &v.a)),
        (_, Some(kb)) => v.scale(&(ppow(p, kb) / &v.b)),
        _ => unreachable!("nonzero generator"),
    }
}

fn min_by_valuation(p: u64, qs: impl Iterator<Item = Q>) -> Option<(i64, Q)> {
    qs.filter_map(|q| vp(p, &q).map(|k| (k, q))).min_by_key(|(k, _)| *k)
}

impl QuadLattice {
    pub fn zero(p: u64, d: i64) -> Self {
        QuadLattice { p, d, basis: Vec::new() }
    }

    /// `Z_(p)·1`, the multiplicative identity.
    pub fn identity(p: u64, d: i64) -> Self {
        Self::principal(p, &QuadElem::one(d))
    }

    /// `Z_(p)[√d]`.
    pub fn maximal_order(p: u64, d: i64) -> Self {
        Self::from_generators(p, d, &[QuadElem::one(d), QuadElem::int(d, 0, 1)])
    }

    pub fn principal(p: u64, x: &QuadElem) -> Self {
        Self::from_generators(p, x.d, core::slice::from_ref(x))
    }

    pub fn from_generators(p: u64, d: i64, gens: &[QuadElem]) -> Self {
        let gens: Vec<QuadElem> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let Some(first) = gens.first() else { return Self::zero(p, d) };
        if gens.iter().all(|g| g.ratio(first).is_some()) {
            let (_, t) = min_by_valuation(p, gens.iter().map(|g| g.ratio(first).unwrap())).unwrap();
            let basis = vec![normalize_rank1(p, &first.scale(&t))];
            return QuadLattice { p, d, basis };
        }
        let (alpha, pivot_a) = min_by_valuation(p, gens.iter().map(|g| g.a.clone())).unwrap();
        let pivot = gens.iter().find(|g| g.a == pivot_a).unwrap();
        let pivot = pivot.scale(&(ppow(p, alpha) / &pivot.a));
        let (beta, _) = min_by_valuation(p, gens.iter().map(|g| &g.b - &g.a / &pivot.a * &pivot.b)).unwrap();
        let c = canonical_residue(p, &pivot.b, beta);
        let basis = vec![QuadElem::new(d, pivot.a.clone(), c), QuadElem::new(d, Q::zero(), ppow(p, beta))];
        QuadLattice { p, d, basis }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn basis(&self) -> &[QuadElem] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, x: &QuadElem) -> bool {
        let integral = |q: Q| vp(self.p, &q).is_none_or(|k| k >= 0);
        match self.basis.as_slice() {
            [] => x.is_zero(),
            [v] => x.is_zero() || x.ratio(v).is_some_and(integral),
            [u, w] => {
                let s = &x.a / &u.a;
                integral(s.clone()) && integral((&x.b - s * &u.b) / &w.b)
            }
            _ => unreachable!(),
        }
    }

    /// `x·self`.
    pub fn scale(&self, x: &QuadElem) -> QuadLattice {
        let gens: Vec<QuadElem> = self.basis.iter().map(|g| g.mul(x)).collect();
        Self::from_generators(self.p, self.d, &gens)
    }

    /// The image of `p^n Z_(p)` under `Q ⊆ Q(√d)`.
    pub fn from_qfrac(d: i64, i: &QfracIdeal) -> QuadLattice {
        match i.exponent {
            None => Self::zero(i.p, d),
            Some(n) => Self::principal(i.p, &QuadElem::rational(d, ppow(i.p, n))),
        }
    }
}

impl fmt::Display for QuadLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("0");
        }
        f.write_str("<")?;
        for (i, g) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

fn same_params(m: &QuadLattice, n: &QuadLattice) -> Result<()> {
    if (m.p, m.d) != (n.p, n.d) {
        return Err(Error::ParameterMismatch(m.p, m.d, n.p, n.d));
    }
    Ok(())
}

pub fn lat_add(m: &QuadLattice, n: &QuadLattice) -> Result<QuadLattice> {
    same_params(m, n)?;
    let gens: Vec<QuadElem> = m.basis.iter().chain(&n.basis).cloned().collect();
    Ok(QuadLattice::from_generators(m.p, m.d, &gens))
}

pub fn lat_mul(m: &QuadLattice, n: &QuadLattice) -> Result<QuadLattice> {
    same_params(m, n)?;
    let gens: Vec<QuadElem> = m.basis.iter().flat_map(|x| n.basis.iter().map(move |y| x.mul(y))).collect();
    Ok(QuadLattice::from_generators(m.p, m.d, &gens))
}

/// Containment `M ⊆ N`.
pub fn lat_leq(m: &QuadLattice, n: &QuadLattice) -> Result<bool> {
    same_params(m, n)?;
    Ok(m.basis.iter().all(|g| n.contains(g)))
}

/// `S_f(Q(√d), Z_(p))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeSemiring {
    pub p: u64,
    pub d: i64,
}

impl Semiring for LatticeSemiring {
    type Elem = QuadLattice;

    fn zero(&self) -> QuadLattice {
        QuadLattice::zero(self.p, self.d)
    }

    fn one(&self) -> QuadLattice {
        QuadLattice::identity(self.p, self.d)
    }

    fn add(&self, x: &QuadLattice, y: &QuadLattice) -> QuadLattice {
        lat_add(x, y).expect("one (p, d)")
    }

    fn mul(&self, x: &QuadLattice, y: &QuadLattice) -> QuadLattice {
        lat_mul(x, y).expect("one (p, d)")
    }

    fn leq(&self, x: &QuadLattice, y: &QuadLattice) -> bool {
        lat_leq(x, y).expect("one (p, d)")
    }

    fn inverse(&self, x: &QuadLattice) -> Option<QuadLattice> {
        match x.basis.as_slice() {
            [v] => Some(QuadLattice::principal(self.p, &v.inverse()?)),
            _ => None,
        }
    }

    fn render(&self, x: &QuadLattice) -> String {
        format!("{x}")
    }
}

/// Elements of `Z_(p)` used to test boundedness by `1`.
pub fn local_integer_samples(p: u64) -> Vec<Q> {
    let p = p as i64;
    let mut out: Vec<Q> = (1..=2 * p + 1).map(|n| rational(n, 1)).collect();
    out.extend([rational(1, p + 1), rational(p * p, p + 2), rational(-p, 2 * p - 1), rational(-1, 1)]);
    out
}

/// The semiring hom `N ↦ max w(generator)` attached to a valuation `w`
/// bounded by `1` on `Z_(p)`.
pub struct LatticeHom<W> {
    p: u64,
    d: i64,
    group: GroupKind,
    w: W,
}

pub fn hom_from_valuation<W: Fn(&QuadElem) -> GammaMax>(
    p: u64,
    d: i64,
    group: GroupKind,
    w: W,
) -> Result<LatticeHom<W>> {
    let one = GammaMax::one(group);
    for q in local_integer_samples(p) {
        let x = QuadElem::rational(d, q);
        if w(&x) > one {
            return Err(Error::Unbounded { p, witness: format!("{x}") });
        }
    }
    Ok(LatticeHom { p, d, group, w })
}

impl<W: Fn(&QuadElem) -> GammaMax> LatticeHom<W> {
    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn apply(&self, n: &QuadLattice) -> GammaMax {
        n.basis.iter().map(|g| (self.w)(g)).max().unwrap_or(GammaMax::Zero)
    }

    pub fn apply_qfrac(&self, i: &QfracIdeal) -> GammaMax {
        self.apply(&QuadLattice::from_qfrac(self.d, i))
    }

    /// `x ↦ f(x Z_(p))`.
    pub fn valuation(&self) -> impl Fn(&QuadElem) -> GammaMax + '_ {
        move |x| self.apply(&QuadLattice::principal(self.p, x))
    }
}

/// A submodule `N ⊆ Q(√d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Submodule {
    Lattice(QuadLattice),
    All,
}

/// `{N' ⊆ N : N' finitely generated}` as a membership test.
pub fn subsemigroup_of_submodule(n: Submodule) -> impl Fn(&QuadLattice) -> bool {
    move |m| match &n {
        Submodule::All => true,
        Submodule::Lattice(l) => lat_leq(m, l).unwrap_or(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac_ideal::local::vp as vpq;

    fn gi(a: i64, b: i64) -> QuadElem {
        QuadElem::int(-1, a, b)
    }

    #[test]
    fn gaussian_examples() {
        let o = QuadLattice::maximal_order(5, -1);
        assert_eq!(o.rank(), 2);
        assert_eq!(lat_mul(&o, &o), Ok(o.clone()));
        let pl = QuadLattice::principal(5, &gi(2, 1));
        let pb = QuadLattice::principal(5, &gi(2, -1));
        assert_eq!(lat_mul(&pl, &pb), Ok(QuadLattice::principal(5, &gi(5, 0))));
        let (po, pbo) = (lat_mul(&pl, &o).unwrap(), lat_mul(&pb, &o).unwrap());
        assert_eq!(lat_add(&po, &pbo), Ok(o.clone()));
        assert!(lat_leq(&QuadLattice::identity(5, -1), &o).unwrap());
        assert!(!lat_leq(&o, &QuadLattice::identity(5, -1)).unwrap());
        let other = QuadLattice::identity(3, -1);
        assert_eq!(lat_add(&o, &other), Err(Error::ParameterMismatch(5, -1, 3, -1)));
    }

    #[test]
    fn canonical_forms() {
        // Unit multiples give the same lattice.
        let x = gi(2, 1);
        assert_eq!(QuadLattice::principal(5, &x), QuadLattice::principal(5, &x.scale(&rational(3, 7))));
        assert_ne!(QuadLattice::principal(5, &x), QuadLattice::principal(5, &x.scale(&rational(5, 1))));
        // Same module from different generating sets.
        let a = QuadLattice::from_generators(5, -1, &[gi(1, 0), gi(0, 1)]);
        let b = QuadLattice::from_generators(5, -1, &[gi(3, 1), gi(1, 2), gi(7, 7)]);
        assert_eq!(a, b);
        let c = QuadLattice::from_generators(5, -1, &[gi(1, 3), gi(0, 25)]);
        assert_eq!(c.basis()[1].b, rational(25, 1));
        assert!(c.contains(&gi(1, 28)) && !c.contains(&gi(1, 4)));
        assert_eq!(format!("{c}"), "<1+3*sqrt(-1), 25*sqrt(-1)>");
        for g in c.basis() {
            assert!(vpq(5, &g.a).is_none_or(|k| k >= 0));
        }
    }

    #[test]
    fn products_with_large_coefficients() {
        let e = |a: Q, b: Q| QuadLattice::principal(7, &QuadElem::new(2, a, b));
        let a = e(rational(1, 1), rational(2, 343));
        let b = e(rational(-3, 2401), rational(-67228, 1));
        let c = e(rational(1, 343), rational(-7, 1));
        let mul = |x: &QuadLattice, y: &QuadLattice| lat_mul(x, y).unwrap();
        assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
    }

    #[test]
    fn homs_and_subsemigroups() {
        let v5 = |x: &QuadElem| match vp(5, &x.norm()) {
            None => GammaMax::Zero,
            Some(k) => GammaMax::power(GroupKind::IntPower(1), -k).unwrap(),
        };
        let f = hom_from_valuation(5, -1, GroupKind::IntPower(1), v5).unwrap();
        let o = QuadLattice::maximal_order(5, -1);
        assert!(f.apply(&o).is_one());
        assert_eq!(f.apply(&QuadLattice::zero(5, -1)), GammaMax::Zero);
        assert_eq!(f.apply_qfrac(&QfracIdeal::power(5, 2)), GammaMax::power(GroupKind::IntPower(1), -4).unwrap());
        let bad = |x: &QuadElem| match vp(5, &x.a) {
            None => GammaMax::Zero,
            Some(k) => GammaMax::power(GroupKind::IntPower(1), k).unwrap(),
        };
        assert!(matches!(hom_from_valuation(5, -1, GroupKind::IntPower(1), bad), Err(Error::Unbounded { .. })));
        let inside_o = subsemigroup_of_submodule(Submodule::Lattice(o.clone()));
        assert!(inside_o(&QuadLattice::principal(5, &gi(2, 1))));
        assert!(!inside_o(&QuadLattice::principal(5, &QuadElem::rational(-1, rational(1, 5)))));
    }
}
