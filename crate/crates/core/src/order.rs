//! Valuation orders on finite semirings and their correspondence with
//! homomorphisms into `Γ_max`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::finite::{is_cancellative, is_totally_ordered, quotient, Congruence, FiniteSemiring};
use crate::gamma::GammaMax;
use crate::group::GroupKind;
use crate::valuation::ValuationHom;

/// Largest carrier on which valuation orders are enumerated.
pub const MAX_ORDER_CARRIER: usize = 4;

/// A binary relation on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { n, bits: vec![false; n * n] }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        Relation { n, bits: (0..n * n).map(|k| f(k / n, k % n)).collect() }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut r = Relation::empty(n);
        for &(x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    /// The relation encoded by the low `n²` bits of `mask`, row-major.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Relation::from_fn(n, |x, y| mask >> (x * n + y) & 1 == 1)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.n + y]
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.bits[x * self.n + y] = true;
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|x| (0..self.n).map(move |y| (x, y))).filter(|&(x, y)| self.holds(x, y)).collect()
    }

    /// `1 ⪯ 0`.
    pub fn is_degenerate(&self, r: &FiniteSemiring) -> bool {
        self.holds(r.one_index(), r.zero_index())
    }

    /// `x ⪯ y ⪯ x`.
    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.holds(x, y) && self.holds(y, x)
    }

    /// A `≤`-matrix with element names on both axes.
    pub fn render(&self, r: &FiniteSemiring) -> String {
        let width = r.names().iter().map(|s| s.chars().count()).max().unwrap_or(1);
        let mut s = String::new();
        let _ = write!(s, "{:width$} ", "⪯");
        for y in r.elements() {
            let _ = write!(s, " {:>width$}", r.element_name(y));
        }
        for x in r.elements() {
            let _ = write!(s, "\n{:width$} ", r.element_name(x));
            for y in r.elements() {
                let _ = write!(s, " {:>width$}", if self.holds(x, y) { "1" } else { "." });
            }
        }
        s
    }
}

/// A failing axiom with its first witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderViolation {
    pub axiom: u8,
    pub witness: Vec<usize>,
}

impl OrderViolation {
    pub fn describe(&self, r: &FiniteSemiring) -> String {
        let names: Vec<&str> = self.witness.iter().map(|&i| r.element_name(i)).collect();
        let what = match self.axiom {
            1 => "transitivity",
            2 => "totality",
            3 => "compatibility with +",
            4 => "refinement of ≤",
            5 => "compatibility with ·",
            _ => "cancellation",
        };
        alloc::format!("axiom {} ({}) fails at ({})", self.axiom, what, names.join(", "))
    }
}

/// Every failing axiom, each with the lexicographically first witness.
pub fn order_violations(rel: &Relation, r: &FiniteSemiring) -> Vec<OrderViolation> {
    let n = r.size();
    assert_eq!(rel.size(), n, "relation sized to the semiring");
    let le = |x, y| rel.holds(x, y);
    let zero = r.zero_index();
    let mut found: [Option<Vec<usize>>; 6] = Default::default();
    let mut note = |k: usize, w: &[usize]| {
        if found[k].is_none() {
            found[k] = Some(w.to_vec());
        }
    };
    for x in 0..n {
        for y in 0..n {
            if !le(x, y) && !le(y, x) {
                note(1, &[x, y]);
            }
            if r.le(x, y) && !le(x, y) {
                note(3, &[x, y]);
            }
            for z in 0..n {
                if le(x, y) && le(y, z) && !le(x, z) {
                    note(0, &[x, y, z]);
                }
                if le(x, y) && !le(r.sum(x, z), r.sum(y, z)) {
                    note(2, &[x, y, z]);
                }
                if le(x, y) && !le(r.product(x, z), r.product(y, z)) {
                    note(4, &[x, y, z]);
                }
                if le(r.product(x, z), r.product(y, z)) && !le(x, y) && !le(z, zero) {
                    note(5, &[x, y, z]);
                }
            }
        }
    }
    found
        .into_iter()
        .enumerate()
        .filter_map(|(k, w)| w.map(|witness| OrderViolation { axiom: k as u8 + 1, witness }))
        .collect()
}

pub fn is_valuation_order(rel: &Relation, r: &FiniteSemiring) -> bool {
    order_violations(rel, r).is_empty()
}

fn guard(r: &FiniteSemiring) -> Result<()> {
    if r.size() > MAX_ORDER_CARRIER {
        return Err(Error::CarrierTooLarge { size: r.size(), bound: MAX_ORDER_CARRIER });
    }
    Ok(())
}

/// How to search for valuation orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Total preorders extending `≤`, then the remaining axioms.
    WeakOrders,
    /// All `2^{n²}` relations.
    Exhaustive,
}

/// All valuation orders; degenerate ones (`1 ⪯ 0`) only when asked.
pub fn enumerate_valuation_orders(r: &FiniteSemiring, include_degenerate: bool) -> Result<Vec<Relation>> {
    enumerate_with(r, include_degenerate, Strategy::WeakOrders)
}

pub fn enumerate_with(r: &FiniteSemiring, include_degenerate: bool, strategy: Strategy) -> Result<Vec<Relation>> {
    guard(r)?;
    let n = r.size();
    let candidates: Vec<Relation> = match strategy {
        Strategy::Exhaustive => (0..1u64 << (n * n)).map(|m| Relation::from_mask(n, m)).collect(),
        Strategy::WeakOrders => weak_orders(n)
            .into_iter()
            .map(|rank| Relation::from_fn(n, |x, y| rank[x] <= rank[y]))
            .filter(|rel| r.elements().all(|x| r.elements().all(|y| !r.le(x, y) || rel.holds(x, y))))
            .collect(),
    };
    let mut out: Vec<Relation> = candidates
        .into_iter()
        .filter(|rel| is_valuation_order(rel, r) && (include_degenerate || !rel.is_degenerate(r)))
        .collect();
    out.sort();
    Ok(out)
}

/// Rank functions onto `0..k` for every ordered set partition of `0..n`.
fn weak_orders(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for code in 0..n.pow(n as u32) {
        let rank: Vec<usize> = (0..n).map(|i| code / n.pow(i as u32) % n).collect();
        let max = rank.iter().copied().max().unwrap_or(0);
        if (0..=max).all(|k| rank.contains(&k)) || n == 0 {
            out.push(rank);
        }
    }
    out
}

/// `x ⪯ y` iff `v(x) ≤ v(y)`.
pub fn order_from_hom(values: &[GammaMax]) -> Relation {
    Relation::from_fn(values.len(), |x, y| values[x] <= values[y])
}

/// The fraction semifield of a finite totally ordered cancellative semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracSemifield {
    pub semiring: FiniteSemiring,
    /// `x ↦ x/1`.
    pub embedding: Vec<usize>,
    /// The value of each fraction in `Γ_max`.
    pub values: Vec<GammaMax>,
}

/// Fractions `x/s` with `s ≠ 0`, where `x/s = y/t` iff `xt = ys`.
///
/// The nonzero fractions form a finite totally ordered group, which is
/// trivial; the result is identified with `B = {1}_max`.
pub fn frac_semifield(d: &FiniteSemiring) -> Result<FracSemifield> {
    if d.zero_index() == d.one_index() {
        return Err(Error::Degenerate);
    }
    if !is_cancellative(d) {
        return Err(Error::NotCancellative);
    }
    if !is_totally_ordered(d) {
        return Err(Error::NotTotallyOrdered);
    }
    let pairs: Vec<(usize, usize)> = d.elements().flat_map(|x| d.nonzero().map(move |s| (x, s))).collect();
    let same = |(x, s): (usize, usize), (y, t): (usize, usize)| d.product(x, t) == d.product(y, s);
    let labels: Vec<usize> = pairs.iter().map(|&p| pairs.iter().position(|&q| same(p, q)).unwrap()).collect();
    let classes = Congruence::from_labels(&labels);
    let k = classes.num_classes();
    let rep: Vec<(usize, usize)> = classes.classes().iter().map(|c| pairs[c[0]]).collect();
    let class_of = |p: (usize, usize)| classes.class_of(pairs.iter().position(|&q| same(p, q)).unwrap());
    let one = d.one_index();
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &(x, s) in &rep {
        for &(y, t) in &rep {
            add.push(class_of((d.sum(d.product(x, t), d.product(y, s)), d.product(s, t))));
            mul.push(class_of((d.product(x, y), d.product(s, t))));
        }
    }
    let names = rep
        .iter()
        .map(|&(x, s)| {
            if s == one {
                d.element_name(x).into()
            } else {
                alloc::format!("{}/{}", d.element_name(x), d.element_name(s))
            }
        })
        .collect();
    let zero = class_of((d.zero_index(), one));
    let unit = class_of((one, one));
    let semiring =
        FiniteSemiring::from_flat_unchecked(alloc::format!("Frac({})", d.name()), names, add, mul, zero, unit);
    let embedding: Vec<usize> = d.elements().map(|x| class_of((x, one))).collect();
    let nonzero = semiring.nonzero().count();
    if nonzero != 1 {
        return Err(Error::VerificationFailed(alloc::format!("finite totally ordered group of order {nonzero}")));
    }
    let values = semiring
        .elements()
        .map(|c| if c == zero { GammaMax::Zero } else { GammaMax::one(GroupKind::Trivial) })
        .collect();
    Ok(FracSemifield { semiring, embedding, values })
}

/// The fractions `x·s⁻¹` of a subset of `Γ_max`, sorted.
pub fn frac_in_gamma_max(d: &[GammaMax]) -> Vec<GammaMax> {
    let mut out = vec![GammaMax::Zero];
    for x in d {
        for s in d.iter().filter(|s| !s.is_zero()) {
            if let (Some(g), Some(h)) = (x.unit(), s.unit()) {
                if let Ok(q) = g.mul(&h.inverse()) {
                    out.push(GammaMax::Unit(q));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The homomorphism attached to a nondegenerate valuation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderHom {
    pub congruence: Congruence,
    pub quotient: FiniteSemiring,
    pub frac: FracSemifield,
    pub hom: ValuationHom,
}

/// `R → R/∼ → Frac(R/∼)`, where `∼` is the symmetrization of `rel`.
pub fn hom_from_order(rel: &Relation, r: &FiniteSemiring) -> Result<OrderHom> {
    if let Some(v) = order_violations(rel, r).first() {
        return Err(Error::NotValuationOrder(v.axiom));
    }
    if rel.is_degenerate(r) {
        return Err(Error::Degenerate);
    }
    let labels: Vec<usize> = r.elements().map(|x| r.elements().position(|y| rel.equivalent(x, y)).unwrap()).collect();
    let congruence = Congruence::from_labels(&labels);
    let q = quotient(r, &congruence)?;
    if !is_totally_ordered(&q.semiring) || !is_cancellative(&q.semiring) {
        return Err(Error::VerificationFailed("quotient is not a totally ordered domain".into()));
    }
    let frac = frac_semifield(&q.semiring)?;
    let values: Vec<GammaMax> = r.elements().map(|x| frac.values[frac.embedding[q.map[x]]].clone()).collect();
    let hom = ValuationHom::new(GroupKind::Trivial, values);
    if order_from_hom(hom.values()) != *rel {
        return Err(Error::VerificationFailed("x ⪯ y and v(x) ≤ v(y) disagree".into()));
    }
    Ok(OrderHom { congruence, quotient: q.semiring, frac, hom })
}

/// Pairs `(x, y)` asking for `v(y) < v(x)`.
pub type ConstraintSet = Vec<(usize, usize)>;

/// Admissibility over the precomputed nondegenerate valuation orders of `r`.
#[derive(Debug, Clone)]
pub struct Admissibility {
    orders: Vec<Relation>,
}

impl Admissibility {
    pub fn new(r: &FiniteSemiring) -> Result<Self> {
        Ok(Admissibility { orders: enumerate_valuation_orders(r, false)? })
    }

    pub fn orders(&self) -> &[Relation] {
        &self.orders
    }

    /// A nondegenerate order with `x ⋠ y` for every constraint.
    pub fn witness(&self, s: &[(usize, usize)]) -> Option<&Relation> {
        self.orders.iter().find(|rel| s.iter().all(|&(x, y)| !rel.holds(x, y)))
    }

    pub fn is_admissible(&self, s: &[(usize, usize)]) -> bool {
        self.witness(s).is_some()
    }

    /// Every subset of `s` is admissible exactly when `s` is.
    pub fn check_coherence(&self, s: &[(usize, usize)]) -> Result<bool> {
        if s.len() > 20 {
            return Err(Error::CarrierTooLarge { size: s.len(), bound: 20 });
        }
        let all_subsets = (0u64..1 << s.len()).all(|mask| {
            let t: Vec<(usize, usize)> =
                s.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            self.is_admissible(&t)
        });
        Ok(all_subsets == self.is_admissible(s))
    }
}

/// Admissibility with a witness homomorphism.
pub fn is_admissible(s: &[(usize, usize)], r: &FiniteSemiring) -> Result<Option<OrderHom>> {
    let a = Admissibility::new(r)?;
    a.witness(s).map(|rel| hom_from_order(rel, r)).transpose()
}
