use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{congruence::meet_all, prime_congruences, quotient, Congruence, FiniteSemiring, Quotient};
use crate::error::{Error, Result};
use crate::idem::is_simple;
use crate::order::{enumerate_valuation_orders, hom_from_order};

/// `R_red`: the quotient by the intersection of all prime congruences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub congruence: Congruence,
    pub quotient: Quotient,
    /// No prime congruence exists, so the quotient is the one-point semiring.
    pub degenerate: bool,
}

pub fn reduction(r: &FiniteSemiring) -> Result<Reduction> {
    let primes = prime_congruences(r)?;
    let congruence = meet_all(r.size(), &primes);
    let q = quotient(r, &congruence)?;
    let q = Quotient { semiring: q.semiring.with_name(format!("{}_red", r.name())), map: q.map };
    Ok(Reduction { congruence, quotient: q, degenerate: primes.is_empty() })
}

/// The reduction map is injective.
pub fn is_reduced(r: &FiniteSemiring) -> Result<bool> {
    Ok(reduction(r)?.congruence.is_equality())
}

fn require_simple(r: &FiniteSemiring, what: &'static str) -> Result<()> {
    if is_simple(&r.carrier()) {
        Ok(())
    } else {
        Err(Error::NotSimple(what))
    }
}

/// `(∃s ≠ 0: sx = sy)` iff the reduction identifies `x` and `y`, for all
/// pairs. Returns the first pair where this fails.
pub fn check_annihilator_reduction(r: &FiniteSemiring) -> Result<Option<(usize, usize)>> {
    require_simple(r, "annihilator reduction check")?;
    let red = reduction(r)?;
    for x in r.elements() {
        for y in r.elements() {
            let lhs = r.nonzero().any(|s| r.product(s, x) == r.product(s, y));
            if lhs != red.congruence.related(x, y) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// `(∃s ≠ 0: sx ≤ s)` iff every homomorphism into a totally ordered
/// semifield sends `x` to at most `1`. Returns the first `x` where this fails.
pub fn check_bounded_by_one(r: &FiniteSemiring) -> Result<Option<usize>> {
    require_simple(r, "bounded-by-one check")?;
    let homs =
        enumerate_valuation_orders(r, false)?.iter().map(|rel| hom_from_order(rel, r)).collect::<Result<Vec<_>>>()?;
    let one = r.one_index();
    for x in r.elements() {
        let lhs = r.nonzero().any(|s| r.le(r.product(s, x), s));
        let rhs = homs.iter().all(|h| h.hom.values()[x] <= h.hom.values()[one]);
        if lhs != rhs {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// The localization `R_(0)` with its canonical map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localization {
    pub semiring: FiniteSemiring,
    pub map: Vec<usize>,
}

/// Pairs `(x, s)`, `s ≠ 0`, with `(x,s) ∼ (y,t)` iff `uxt = uys` for some
/// `u ≠ 0`.
pub fn localize_at_nonzero(r: &FiniteSemiring) -> Result<Localization> {
    require_simple(r, "localization")?;
    let zero = r.zero_index();
    if r.nonzero().any(|x| r.nonzero().any(|y| r.product(x, y) == zero)) {
        return Err(Error::ZeroDivisors);
    }
    let pairs: Vec<(usize, usize)> = r.elements().flat_map(|x| r.nonzero().map(move |s| (x, s))).collect();
    let m = pairs.len();
    let related = |(x, s): (usize, usize), (y, t): (usize, usize)| {
        r.nonzero().any(|u| r.product(u, r.product(x, t)) == r.product(u, r.product(y, s)))
    };
    // Transitive closure; for finite semirings without zero divisors the
    // relation is already an equivalence.
    let mut label: Vec<usize> = (0..m).collect();
    for i in 0..m {
        for j in 0..i {
            if related(pairs[i], pairs[j]) {
                let (old, new) = (label[i].max(label[j]), label[i].min(label[j]));
                for l in label.iter_mut() {
                    if *l == old {
                        *l = new;
                    }
                }
            }
        }
    }
    let classes = Congruence::from_labels(&label);
    let k = classes.num_classes();
    let reps: Vec<(usize, usize)> = classes.classes().iter().map(|c| pairs[c[0]]).collect();
    let class_of = |p: (usize, usize)| classes.class_of(pairs.iter().position(|&q| q == p).unwrap());
    let mut add = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for &(x, s) in &reps {
        for &(y, t) in &reps {
            add.push(class_of((r.sum(r.product(x, t), r.product(y, s)), r.product(s, t))));
            mul.push(class_of((r.product(x, y), r.product(s, t))));
        }
    }
    let one = r.one_index();
    let names: Vec<String> =
        reps.iter()
            .map(|&(x, s)| {
                if s == one {
                    r.element_name(x).into()
                } else {
                    format!("{}/{}", r.element_name(x), r.element_name(s))
                }
            })
            .collect();
    let n = names.len();
    let rows = |t: &[usize]| t.chunks(n).map(<[usize]>::to_vec).collect::<Vec<_>>();
    let semiring = FiniteSemiring::new(
        format!("{}_(0)", r.name()),
        names,
        rows(&add),
        rows(&mul),
        class_of((zero, one)),
        class_of((one, one)),
    )?;
    let map = r.elements().map(|x| class_of((x, one))).collect();
    Ok(Localization { semiring, map })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        let b = FiniteSemiring::boolean();
        assert!(reduction(&b).unwrap().quotient.semiring.is_isomorphic(&b));
        let bz = FiniteSemiring::b_z2();
        let red = reduction(&bz).unwrap();
        assert!(red.quotient.semiring.is_isomorphic(&b));
        assert_eq!(red.congruence.render(&bz), "{0}{1,g,1+g}");
        let c3 = FiniteSemiring::chain(3);
        assert_eq!(is_reduced(&c3), Ok(true));
        assert!(!red.degenerate);
    }

    #[test]
    fn annihilator_and_bound_checks() {
        for r in [FiniteSemiring::boolean(), FiniteSemiring::b_z2()] {
            assert_eq!(check_annihilator_reduction(&r), Ok(None));
            assert_eq!(check_bounded_by_one(&r), Ok(None));
        }
        assert!(matches!(check_annihilator_reduction(&FiniteSemiring::chain(3)), Err(Error::NotSimple(_))));
    }

    #[test]
    fn localizations() {
        let b = FiniteSemiring::boolean();
        assert!(localize_at_nonzero(&b).unwrap().semiring.is_isomorphic(&b));
        let loc = localize_at_nonzero(&FiniteSemiring::b_z2()).unwrap();
        assert!(loc.semiring.is_isomorphic(&b));
        assert_eq!(loc.map, [0, 1, 1, 1]);
        assert!(localize_at_nonzero(&FiniteSemiring::chain(3)).is_err());
    }
}
