//! The semiring abstraction and finite carriers.
//!
//! Every decision procedure in this crate runs over a [`Carrier`]: a finite
//! list of elements of some semiring with precomputed operation tables. For
//! an explicit finite semiring the carrier is the whole semiring. For
//! infinite semirings such as `Z_max` it is a truncated window, and results
//! that leave the window are recorded as absent; quantifiers range over the
//! window only.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A commutative semiring with idempotent addition.
pub trait Semiring {
    type Elem: Clone + Ord + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    /// Canonical order: `x ≤ y` iff `x + y = y`.
    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.add(x, y) == *y
    }

    /// Multiplicative inverse, when `x` is a unit.
    fn inverse(&self, x: &Self::Elem) -> Option<Self::Elem>;

    fn render(&self, x: &Self::Elem) -> String;
}

/// A finite list of semiring elements with cached operation tables.
#[derive(Debug, Clone)]
pub struct Carrier<S: Semiring> {
    semiring: S,
    elems: Vec<S::Elem>,
    index: BTreeMap<S::Elem, usize>,
    add: Vec<Option<usize>>,
    mul: Vec<Option<usize>>,
    leq: Vec<bool>,
    zero: usize,
    one: usize,
}

impl<S: Semiring> Carrier<S> {
    /// Builds a carrier from distinct elements; `0` and `1` must be present.
    pub fn new(semiring: S, elems: Vec<S::Elem>) -> Result<Self> {
        let mut index = BTreeMap::new();
        let mut uniq = Vec::with_capacity(elems.len());
        for e in elems {
            if !index.contains_key(&e) {
                index.insert(e.clone(), uniq.len());
                uniq.push(e);
            }
        }
        let elems = uniq;
        let find = |e: &S::Elem| index.get(e).copied();
        let zero = find(&semiring.zero()).ok_or_else(|| Error::NotInCarrier(semiring.render(&semiring.zero())))?;
        let one = find(&semiring.one()).ok_or_else(|| Error::NotInCarrier(semiring.render(&semiring.one())))?;
        let n = elems.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut leq = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                add.push(find(&semiring.add(x, y)));
                mul.push(find(&semiring.mul(x, y)));
                leq.push(semiring.leq(x, y));
            }
        }
        Ok(Carrier { semiring, elems, index, add, mul, leq, zero, one })
    }

    pub fn semiring(&self) -> &S {
        &self.semiring
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[S::Elem] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> &S::Elem {
        &self.elems[i]
    }

    pub fn index_of(&self, e: &S::Elem) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, i: usize, j: usize) -> Option<usize> {
        self.add[i * self.len() + j]
    }

    pub fn mul(&self, i: usize, j: usize) -> Option<usize> {
        self.mul[i * self.len() + j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    /// Inverse of a unit, if it lies in the carrier.
    pub fn inverse(&self, i: usize) -> Option<usize> {
        self.semiring.inverse(&self.elems[i]).and_then(|inv| self.index_of(&inv))
    }

    pub fn name(&self, i: usize) -> String {
        self.semiring.render(&self.elems[i])
    }

    /// True when sums and products never leave the carrier.
    pub fn is_closed(&self) -> bool {
        self.add.iter().chain(&self.mul).all(Option::is_some)
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset_where(&self, pred: impl Fn(&S::Elem) -> bool) -> Subset {
        Subset::from_fn(self.len(), |i| pred(&self.elems[i]))
    }

    pub fn subset_of(&self, members: &[usize]) -> Subset {
        let mut s = Subset::empty(self.len());
        for &m in members {
            s.insert(m);
        }
        s
    }
}

/// A subset of a carrier, stored as a bitset over carrier positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: Vec<bool>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset { bits: alloc::vec![false; n] }
    }

    pub fn full(n: usize) -> Self {
        Subset { bits: alloc::vec![true; n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Self {
        Subset { bits: (0..n).map(f).collect() }
    }

    /// The subset encoded by the low `n` bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Subset::from_fn(n, |i| mask >> i & 1 == 1)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn insert(&mut self, i: usize) -> bool {
        !core::mem::replace(&mut self.bits[i], true)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset { bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| a && b).collect() }
    }
}
