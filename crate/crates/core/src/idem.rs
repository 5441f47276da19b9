//! Predicates on idempotent semirings: valuations, saturation, simplicity,
//! unit generation and finiteness of modules.
//!
//! All quantifiers range over a [`Carrier`]. Sums and products that leave a
//! truncated window are skipped.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gamma::{gm_add, gm_mul, GammaMax};
use crate::semiring::{Carrier, Semiring, Subset};

/// Largest carrier for which all subsets are enumerated.
pub const MAX_SUBSET_CARRIER: usize = 16;

/// `v(0) = 0`, `v(1) = 1`, `v(xy) = v(x)v(y)` and `v(x+y) = v(x) + v(y)`.
pub fn is_valuation<S: Semiring>(c: &Carrier<S>, v: impl Fn(usize) -> Option<GammaMax>) -> Result<bool> {
    let values = (0..c.len()).map(&v).collect::<Option<Vec<_>>>().ok_or(Error::MapNotTotal)?;
    if !values[c.zero()].is_zero() || !values[c.one()].is_one() {
        return Ok(false);
    }
    for i in 0..c.len() {
        for j in 0..c.len() {
            if let Some(k) = c.add(i, j) {
                if gm_add(&values[i], &values[j])? != values[k] {
                    return Ok(false);
                }
            }
            if let Some(k) = c.mul(i, j) {
                if gm_mul(&values[i], &values[j])? != values[k] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Closed under addition and downward closed.
pub fn is_saturated<S: Semiring>(c: &Carrier<S>, n: &Subset) -> bool {
    for x in n.iter() {
        for y in 0..c.len() {
            if c.leq(y, x) && !n.contains(y) {
                return false;
            }
            if n.contains(y) {
                if let Some(s) = c.add(x, y) {
                    if !n.contains(s) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Least set containing `seed` closed under `+`, under `≤`-predecessors, under
/// multiplication by `scalars`, and under products of members when
/// `multiplicative` is set.
pub fn close<S: Semiring>(c: &Carrier<S>, seed: &Subset, scalars: Option<&Subset>, multiplicative: bool) -> Subset {
    let mut set = seed.clone();
    loop {
        let before = set.len();
        let members: Vec<usize> = set.iter().collect();
        for &x in &members {
            for y in 0..c.len() {
                if c.leq(y, x) {
                    set.insert(y);
                }
            }
            for &y in &members {
                if let Some(s) = c.add(x, y) {
                    set.insert(s);
                }
                if multiplicative {
                    if let Some(p) = c.mul(x, y) {
                        set.insert(p);
                    }
                }
            }
            if let Some(r) = scalars {
                for s in r.iter() {
                    if let Some(p) = c.mul(s, x) {
                        set.insert(p);
                    }
                }
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Smallest saturated subsemigroup containing `s`; `∅` closes to `∅`.
pub fn saturated_closure<S: Semiring>(c: &Carrier<S>, s: &Subset) -> Subset {
    close(c, s, None, false)
}

/// Every nonzero `x` has some `y` with `xy ≥ 1`.
pub fn is_simple<S: Semiring>(c: &Carrier<S>) -> bool {
    simplicity_counterexample(c).is_none()
}

/// A nonzero `x` with `xy ≱ 1` for every `y`.
pub fn simplicity_counterexample<S: Semiring>(c: &Carrier<S>) -> Option<usize> {
    (0..c.len())
        .filter(|&x| x != c.zero())
        .find(|&x| !(0..c.len()).any(|y| c.mul(x, y).is_some_and(|p| c.leq(c.one(), p))))
}

pub fn units<S: Semiring>(c: &Carrier<S>) -> Subset {
    Subset::from_fn(c.len(), |x| c.inverse(x).is_some_and(|y| c.mul(x, y) == Some(c.one())))
}

/// Sum of the units below `x`, or `None` if the sum leaves the carrier.
fn sum_of_units_below<S: Semiring>(c: &Carrier<S>, u: &Subset, x: usize) -> Option<usize> {
    u.iter().filter(|&e| c.leq(e, x)).try_fold(c.zero(), |acc, e| c.add(acc, e))
}

/// Every element is the sum of the units below it (the empty sum is `0`).
pub fn is_unitgenerated<S: Semiring>(c: &Carrier<S>) -> bool {
    unitgeneration_counterexample(c).is_none()
}

pub fn unitgeneration_counterexample<S: Semiring>(c: &Carrier<S>) -> Option<usize> {
    let u = units(c);
    (0..c.len()).find(|&x| sum_of_units_below(c, &u, x) != Some(x))
}

/// `∃x ∈ M ∀y ∈ M ∃r ∈ R: y ≤ rx`; returns such an `x`.
pub fn is_finite_module<S: Semiring>(c: &Carrier<S>, scalars: &Subset, module: &Subset) -> Option<usize> {
    module.iter().find(|&x| module.iter().all(|y| scalars.iter().any(|r| c.mul(r, x).is_some_and(|rx| c.leq(y, rx)))))
}

fn guard<S: Semiring>(c: &Carrier<S>) -> Result<()> {
    if c.len() > MAX_SUBSET_CARRIER {
        return Err(Error::CarrierTooLarge { size: c.len(), bound: MAX_SUBSET_CARRIER });
    }
    Ok(())
}

/// Closed under `+`, downward closed and stable under `scalars`.
pub fn is_saturated_submodule<S: Semiring>(c: &Carrier<S>, scalars: &Subset, m: &Subset) -> bool {
    is_saturated(c, m) && m.iter().all(|x| scalars.iter().all(|r| c.mul(r, x).is_none_or(|p| m.contains(p))))
}

/// All nonempty saturated submodules of the carrier over `scalars`.
pub fn saturated_submodules<S: Semiring>(c: &Carrier<S>, scalars: &Subset) -> Result<Vec<Subset>> {
    guard(c)?;
    let n = c.len();
    Ok((1u64..1 << n)
        .map(|mask| Subset::from_mask(n, mask))
        .filter(|m| m.contains(c.zero()) && is_saturated_submodule(c, scalars, m))
        .collect())
}

/// Every saturated submodule is finite.
pub fn is_noetherian<S: Semiring>(c: &Carrier<S>, scalars: &Subset) -> Result<bool> {
    Ok(saturated_submodules(c, scalars)?.iter().all(|m| is_finite_module(c, scalars, m).is_some()))
}
