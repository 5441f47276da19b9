//! Explicit finite idempotent semirings given by operation tables.

mod congruence;
mod generate;
mod homs;
mod reduction;

pub use congruence::{
    cancellation_counterexample, congruence_generated_by, congruences, is_cancellative, is_domain, is_prime, is_qc,
    is_totally_ordered, meet_all, prime_congruences, quotient, radical_test, Congruence, Quotient,
    MAX_CONGRUENCE_CARRIER,
};
pub use generate::all_semirings;
pub use homs::{homomorphisms, is_homomorphism, pullback};
pub use reduction::{
    check_annihilator_reduction, check_bounded_by_one, is_reduced, localize_at_nonzero, reduction, Reduction,
};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::semiring::{Carrier, Semiring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Shape,
    AddCommutative,
    AddAssociative,
    AddIdempotent,
    AddIdentity,
    MulCommutative,
    MulAssociative,
    MulIdentity,
    MulAbsorbing,
    Distributive,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Shape => "table shape",
            Axiom::AddCommutative => "commutativity of +",
            Axiom::AddAssociative => "associativity of +",
            Axiom::AddIdempotent => "idempotence of +",
            Axiom::AddIdentity => "0 is the additive identity",
            Axiom::MulCommutative => "commutativity of ·",
            Axiom::MulAssociative => "associativity of ·",
            Axiom::MulIdentity => "1 is the multiplicative identity",
            Axiom::MulAbsorbing => "0 is absorbing",
            Axiom::Distributive => "distributivity",
        })
    }
}

/// A failed axiom instance, with the witnessing elements by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({})", self.axiom, self.witness.join(", "))
    }
}

/// A validated finite idempotent semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    name: String,
    names: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

/// Checks every axiom exhaustively and lists each failing instance.
pub fn validate(names: &[String], add: &[Vec<usize>], mul: &[Vec<usize>], zero: usize, one: usize) -> Vec<Violation> {
    let n = names.len();
    let mut out = Vec::new();
    let shape_ok = add.len() == n
        && mul.len() == n
        && add.iter().chain(mul).all(|row| row.len() == n && row.iter().all(|&v| v < n))
        && zero < n
        && one < n;
    if !shape_ok {
        out.push(Violation { axiom: Axiom::Shape, witness: Vec::new() });
        return out;
    }
    let w = |idx: &[usize]| idx.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
    let mut fail = |axiom, idx: &[usize]| out.push(Violation { axiom, witness: w(idx) });
    let a = |x: usize, y: usize| add[x][y];
    let m = |x: usize, y: usize| mul[x][y];
    for x in 0..n {
        if a(x, x) != x {
            fail(Axiom::AddIdempotent, &[x]);
        }
        if a(zero, x) != x {
            fail(Axiom::AddIdentity, &[x]);
        }
        if m(one, x) != x {
            fail(Axiom::MulIdentity, &[x]);
        }
        if m(zero, x) != zero {
            fail(Axiom::MulAbsorbing, &[x]);
        }
        for y in 0..n {
            if a(x, y) != a(y, x) {
                fail(Axiom::AddCommutative, &[x, y]);
            }
            if m(x, y) != m(y, x) {
                fail(Axiom::MulCommutative, &[x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if a(a(x, y), z) != a(x, a(y, z)) {
                    fail(Axiom::AddAssociative, &[x, y, z]);
                }
                if m(m(x, y), z) != m(x, m(y, z)) {
                    fail(Axiom::MulAssociative, &[x, y, z]);
                }
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                    fail(Axiom::Distributive, &[x, y, z]);
                }
            }
        }
    }
    out
}

impl FiniteSemiring {
    /// Validates and builds; a table failing any axiom is refused.
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let violations = validate(&names, &add, &mul, zero, one);
        if !violations.is_empty() {
            return Err(Error::Axioms(violations));
        }
        Ok(FiniteSemiring { name: name.into(), names, add: add.concat(), mul: mul.concat(), zero, one })
    }

    pub(crate) fn from_flat_unchecked(
        name: String,
        names: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Self {
        FiniteSemiring { name, names, add, mul, zero, one }
    }

    pub fn from_fn(
        name: impl Into<String>,
        names: &[&str],
        zero: usize,
        one: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = names.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        FiniteSemiring::new(name, names.iter().map(|s| s.to_string()).collect(), table(&add), table(&mul), zero, one)
    }

    /// The Boolean semifield `B = {0, 1}`.
    pub fn boolean() -> Self {
        FiniteSemiring::chain(2)
    }

    /// The chain `0 < a < b < … < 1` with `+ = max` and `· = min`.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 2, "a chain needs 0 and 1");
        let mut names: Vec<String> = Vec::with_capacity(n);
        names.push("0".into());
        for i in 0..n - 2 {
            names.push(char::from(b'a' + i as u8).to_string());
        }
        names.push("1".into());
        let name = match n {
            2 => "B".to_string(),
            3 => "C3".to_string(),
            _ => format!("chain{n}"),
        };
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        FiniteSemiring::from_fn(name, &refs, 0, n - 1, |x, y| x.max(y), |x, y| x.min(y))
            .expect("chains are idempotent semirings")
    }

    /// The group semiring `B[Z/2]` with carrier `{0, 1, g, 1+g}`.
    pub fn b_z2() -> Self {
        // 0 = 0, 1 = 1, 2 = g, 3 = 1+g; addition is union of supports.
        let support = [0b00usize, 0b01, 0b10, 0b11];
        let from_support = |s: usize| support.iter().position(|&t| t == s).unwrap();
        let add = |x: usize, y: usize| from_support(support[x] | support[y]);
        let mul = |x: usize, y: usize| {
            let mut s = 0;
            for i in 0..2 {
                for j in 0..2 {
                    if support[x] >> i & 1 == 1 && support[y] >> j & 1 == 1 {
                        s |= 1 << ((i + j) % 2);
                    }
                }
            }
            from_support(s)
        };
        FiniteSemiring::from_fn("B[Z/2]", &["0", "1", "g", "1+g"], 0, 1, add, mul)
            .expect("B[Z/2] is an idempotent semiring")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn sum(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size() + y]
    }

    #[inline]
    pub fn product(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size() + y]
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.sum(x, y) == y
    }

    pub fn add_row(&self, x: usize) -> &[usize] {
        let n = self.size();
        &self.add[x * n..(x + 1) * n]
    }

    pub fn mul_row(&self, x: usize) -> &[usize] {
        let n = self.size();
        &self.mul[x * n..(x + 1) * n]
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.size()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements().filter(move |&x| x != self.zero)
    }

    /// The whole semiring as a carrier.
    pub fn carrier(&self) -> Carrier<FiniteSemiring> {
        Carrier::new(self.clone(), self.elements().collect()).expect("0 and 1 are elements")
    }

    /// Renaming-invariant isomorphism test by exhaustive search.
    pub fn is_isomorphic(&self, other: &FiniteSemiring) -> bool {
        self.isomorphism(other).is_some()
    }

    pub fn isomorphism(&self, other: &FiniteSemiring) -> Option<Vec<usize>> {
        if self.size() != other.size() {
            return None;
        }
        homomorphisms(self, other).into_iter().find(|f| {
            let mut seen = alloc::vec![false; other.size()];
            f.iter().all(|&y| !core::mem::replace(&mut seen[y], true))
        })
    }
}

impl Semiring for FiniteSemiring {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn one(&self) -> usize {
        self.one
    }

    fn add(&self, x: &usize, y: &usize) -> usize {
        self.sum(*x, *y)
    }

    fn mul(&self, x: &usize, y: &usize) -> usize {
        self.product(*x, *y)
    }

    fn inverse(&self, x: &usize) -> Option<usize> {
        self.elements().find(|&y| self.product(*x, y) == self.one)
    }

    fn render(&self, x: &usize) -> String {
        self.names[*x].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn corpus_tables_validate() {
        for r in [FiniteSemiring::boolean(), FiniteSemiring::chain(3), FiniteSemiring::b_z2(), FiniteSemiring::chain(4)]
        {
            assert!(r.size() >= 2, "{}", r.name());
        }
        let b = FiniteSemiring::b_z2();
        let g = b.index_of("g").unwrap();
        assert_eq!(b.product(g, g), b.one_index());
        assert_eq!(b.element_name(b.sum(g, b.one_index())), "1+g");
    }

    #[test]
    fn corrupted_c3_names_the_distributivity_triple() {
        // C3 with a·a = 1.
        let add = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]];
        let mul = vec![vec![0, 0, 0], vec![0, 2, 1], vec![0, 1, 2]];
        let v = validate(&names(&["0", "a", "1"]), &add, &mul, 0, 2);
        assert!(!v.is_empty());
        let first = v.iter().find(|v| v.axiom == Axiom::Distributive).unwrap();
        assert_eq!(first.witness, names(&["a", "a", "1"]));
        let err = FiniteSemiring::new("bad", names(&["0", "a", "1"]), add, mul, 0, 2).unwrap_err();
        assert!(matches!(err, Error::Axioms(_)));
    }

    #[test]
    fn shape_errors() {
        let v = validate(&names(&["0", "1"]), &[vec![0, 1]], &[vec![0, 0], vec![0, 1]], 0, 1);
        assert_eq!(v[0].axiom, Axiom::Shape);
    }
}
