//! Contraction, integral and quasiintegral elements, and extensibility.
//!
//! `A` is a carrier and `R` is given by its image in `A` as a subset of the
//! carrier (the scalars). Products are computed in the ambient semiring, so
//! truncated windows of `Γ_max` evaluate exactly; only quantifiers are
//! restricted to the window.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::finite::{quotient, Congruence, FiniteSemiring, Quotient};
use crate::idem::{close, is_finite_module, is_saturated_submodule, is_simple, saturated_submodules};
use crate::order::{enumerate_valuation_orders, hom_from_order, MAX_ORDER_CARRIER};
use crate::semiring::{Carrier, Semiring, Subset};
use crate::valuation::ValuationHom;

/// Default degree bound for the integral-relation search.
pub const DEGREE_BOUND: usize = 8;

fn mul<S: Semiring>(c: &Carrier<S>, x: &S::Elem, y: &S::Elem) -> S::Elem {
    c.semiring().mul(x, y)
}

fn leq<S: Semiring>(c: &Carrier<S>, x: &S::Elem, y: &S::Elem) -> bool {
    c.semiring().leq(x, y)
}

/// `∃r ∈ R: x ≤ r·y`.
pub fn below_multiple<S: Semiring>(c: &Carrier<S>, scalars: &Subset, x: &S::Elem, y: &S::Elem) -> bool {
    scalars.iter().any(|r| leq(c, x, &mul(c, c.elem(r), y)))
}

/// The contraction `A_{R≤1}`: the quotient by `x ∼ y` iff `x ≤ ry` and
/// `y ≤ sx` for some `r, s ∈ R`, ordered by `x̄ ≤ ȳ` iff `x ≤ ry`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    classes: Congruence,
    /// `x̄ ≤ ȳ` on carrier positions.
    order: Vec<bool>,
}

impl Contraction {
    pub fn class_of(&self, x: usize) -> usize {
        self.classes.class_of(x)
    }

    pub fn congruence(&self) -> &Congruence {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.num_classes()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.classes.classes()
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.classes.related(x, y)
    }

    /// `x̄ ≤ ȳ`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        let n = self.classes.size();
        self.order[x * n + y]
    }
}

pub fn contract<S: Semiring>(c: &Carrier<S>, scalars: &Subset) -> Contraction {
    let n = c.len();
    let order: Vec<bool> = (0..n * n).map(|k| below_multiple(c, scalars, c.elem(k / n), c.elem(k % n))).collect();
    let labels: Vec<usize> =
        (0..n).map(|x| (0..n).position(|y| order[x * n + y] && order[y * n + x]).unwrap_or(x)).collect();
    Contraction { classes: Congruence::from_labels(&labels), order }
}

/// `b̄ ≤ ā` iff `b ≤ ra` for some `r ∈ R`.
pub fn contraction_leq<S: Semiring>(c: &Carrier<S>, scalars: &Subset, a: usize, b: usize) -> bool {
    below_multiple(c, scalars, c.elem(b), c.elem(a))
}

/// The contraction of a finite algebra as a finite semiring.
pub fn contracted_semiring(a: &FiniteSemiring, scalars: &Subset) -> Result<(Contraction, Quotient)> {
    let k = contract(&a.carrier(), scalars);
    let q = quotient(a, k.congruence())?;
    let q = Quotient { semiring: q.semiring.with_name(alloc::format!("{}_(R≤1)", a.name())), map: q.map };
    Ok((k, q))
}

/// `R⟨x⟩`: the smallest saturated subsemiring containing `x` and `R`.
pub fn r_angle_x<S: Semiring>(c: &Carrier<S>, scalars: &Subset, x: usize) -> Subset {
    let mut seed = scalars.clone();
    seed.insert(x);
    close(c, &seed, None, true)
}

/// `xⁿ ≤ c₀ + c₁x + … + c_{n-1}x^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralWitness<E> {
    pub degree: usize,
    pub coeffs: Vec<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegralResult<E> {
    Integral(IntegralWitness<E>),
    NotIntegral,
    /// No relation up to the degree bound on a truncated carrier.
    Unknown {
        bound: usize,
    },
}

impl<E> IntegralResult<E> {
    pub fn is_integral(&self) -> bool {
        matches!(self, IntegralResult::Integral(_))
    }
}

/// The first integral relation of degree `2..=bound`, with `c₀` varying
/// fastest over the scalars.
pub fn integral_relation<S: Semiring>(
    c: &Carrier<S>,
    scalars: &Subset,
    x: usize,
    bound: usize,
) -> Option<IntegralWitness<S::Elem>> {
    let sr = c.semiring();
    let xe = c.elem(x);
    let rs: Vec<usize> = scalars.iter().collect();
    let top = rs.iter().fold(sr.zero(), |acc, &r| sr.add(&acc, c.elem(r)));
    let mut powers = vec![sr.one(), xe.clone()];
    for n in 2..=bound {
        powers.push(mul(c, &powers[n - 1], xe));
        let xn = &powers[n];
        // Coefficients only help by growing, so test the largest first.
        let best = powers[..n].iter().fold(sr.zero(), |acc, p| sr.add(&acc, &mul(c, &top, p)));
        if !leq(c, xn, &best) {
            continue;
        }
        let mut digits = vec![0usize; n];
        loop {
            let rhs = (0..n).fold(sr.zero(), |acc, i| sr.add(&acc, &mul(c, c.elem(rs[digits[i]]), &powers[i])));
            if leq(c, xn, &rhs) {
                return Some(IntegralWitness {
                    degree: n,
                    coeffs: digits.iter().map(|&d| c.elem(rs[d]).clone()).collect(),
                });
            }
            let mut i = 0;
            while i < n {
                digits[i] += 1;
                if digits[i] < rs.len() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    None
}

/// Exact on closed carriers, where `R⟨x⟩` being a finite module and the
/// existence of an integral relation must agree. On truncated carriers a
/// bounded search.
pub fn is_integral<S: Semiring>(c: &Carrier<S>, scalars: &Subset, x: usize) -> Result<IntegralResult<S::Elem>> {
    if !c.is_closed() {
        return Ok(match integral_relation(c, scalars, x, DEGREE_BOUND) {
            Some(w) => IntegralResult::Integral(w),
            None => IntegralResult::Unknown { bound: DEGREE_BOUND },
        });
    }
    let finite = is_finite_module(c, scalars, &r_angle_x(c, scalars, x)).is_some();
    let relation = integral_relation(c, scalars, x, c.len() + 2);
    match (finite, relation) {
        (true, Some(w)) => Ok(IntegralResult::Integral(w)),
        (false, None) => Ok(IntegralResult::NotIntegral),
        (finite, _) => Err(Error::VerificationFailed(alloc::format!(
            "{}: module finiteness ({finite}) and integral relation disagree",
            c.name(x)
        ))),
    }
}

fn require_simple<S: Semiring>(c: &Carrier<S>, what: &'static str) -> Result<()> {
    if c.is_closed() && !is_simple(c) {
        return Err(Error::NotSimple(what));
    }
    Ok(())
}

/// A nonzero `s` with `s·x̄ ≤ s̄` in the contraction, i.e. `sx ≤ rs` for
/// some `r ∈ R`.
pub fn is_quasiintegral<S: Semiring>(c: &Carrier<S>, scalars: &Subset, x: usize) -> Result<Option<usize>> {
    require_simple(c, "quasiintegrality")?;
    Ok((0..c.len())
        .filter(|&s| s != c.zero())
        .find(|&s| below_multiple(c, scalars, &mul(c, c.elem(s), c.elem(x)), c.elem(s))))
}

/// The quasiintegral elements.
pub fn quasiintegral_closure<S: Semiring>(c: &Carrier<S>, scalars: &Subset) -> Result<Subset> {
    require_simple(c, "quasiintegral closure")?;
    let mut out = Subset::empty(c.len());
    for x in 0..c.len() {
        if is_quasiintegral(c, scalars, x)?.is_some() {
            out.insert(x);
        }
    }
    Ok(out)
}

/// The nondegenerate homomorphisms into `Γ_max` of a finite semiring.
pub fn all_homs(a: &FiniteSemiring) -> Result<Vec<ValuationHom>> {
    enumerate_valuation_orders(a, false)?.iter().map(|rel| hom_from_order(rel, a).map(|h| h.hom)).collect()
}

/// `⋂ {x : v(x) ≤ 1}` over homomorphisms with `v(R) ≤ 1`.
pub fn closure_via_valuations(a: &FiniteSemiring, scalars: &Subset) -> Result<Subset> {
    let mut out = Subset::full(a.size());
    for v in all_homs(a)? {
        let ball = v.ring_of_integers();
        if scalars.is_subset(&ball) {
            out = out.intersection(&ball);
        }
    }
    Ok(out)
}

/// Quasiintegral implies integral; returns the first element where it fails.
pub fn extensibility_counterexample<S: Semiring>(c: &Carrier<S>, scalars: &Subset) -> Result<Option<usize>> {
    for x in 0..c.len() {
        if is_quasiintegral(c, scalars, x)?.is_some() && !is_integral(c, scalars, x)?.is_integral() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

pub fn is_extensible<S: Semiring>(c: &Carrier<S>, scalars: &Subset) -> Result<bool> {
    Ok(extensibility_counterexample(c, scalars)?.is_none())
}

/// Quasiintegral iff every homomorphism from the contraction into a totally
/// ordered semifield sends `x̄` to at most `1`. Returns the first failure.
pub fn check_quasiintegral_homs(a: &FiniteSemiring, scalars: &Subset) -> Result<Option<usize>> {
    let c = a.carrier();
    require_simple(&c, "quasiintegral homomorphism check")?;
    let (_, q) = contracted_semiring(a, scalars)?;
    if q.semiring.size() > MAX_ORDER_CARRIER {
        return Err(Error::CarrierTooLarge { size: q.semiring.size(), bound: MAX_ORDER_CARRIER });
    }
    let homs = all_homs(&q.semiring)?;
    let one = q.semiring.one_index();
    for x in a.elements() {
        let lhs = is_quasiintegral(&c, scalars, x)?.is_some();
        let rhs = homs.iter().all(|v| v.value(q.map[x]) <= v.value(one));
        if lhs != rhs {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// The contraction classes are the fibres of `v` and the class order is the
/// order of values.
pub fn check_contraction_is_value_map<S: Semiring>(c: &Carrier<S>, scalars: &Subset, v: &ValuationHom) -> bool {
    let k = contract(c, scalars);
    (0..c.len()).all(|x| {
        (0..c.len()).all(|y| k.same(x, y) == (v.value(x) == v.value(y)) && k.leq(x, y) == (v.value(x) <= v.value(y)))
    })
}

/// `x ∼_A y` iff `x ∼_B y` for `A ⊆ B`: the induced map of contractions is
/// injective.
pub fn check_inclusion_contraction_injective<S: Semiring + Clone>(
    b: &Carrier<S>,
    a: &Subset,
    scalars: &Subset,
) -> Result<bool> {
    let members: Vec<usize> = a.iter().collect();
    let sub = Carrier::new(b.semiring().clone(), members.iter().map(|&i| b.elem(i).clone()).collect())?;
    let sub_scalars = Subset::from_fn(sub.len(), |i| scalars.contains(members[i]));
    let ka = contract(&sub, &sub_scalars);
    let kb = contract(b, scalars);
    Ok((0..sub.len()).all(|i| (0..sub.len()).all(|j| ka.same(i, j) == kb.same(members[i], members[j]))))
}

/// `A_{R≤1}` is extensible over the image of `R`.
pub fn check_contraction_extensible(a: &FiniteSemiring, scalars: &Subset) -> Result<bool> {
    let (_, q) = contracted_semiring(a, scalars)?;
    let qc = q.semiring.carrier();
    let image = Subset::from_fn(q.semiring.size(), |y| scalars.iter().any(|r| q.map[r] == y));
    is_extensible(&qc, &image)
}

/// `{x : x̄ ≤ 1̄}` is exactly `R`.
pub fn check_unit_ball_classes<S: Semiring>(c: &Carrier<S>, scalars: &Subset) -> bool {
    let k = contract(c, scalars);
    Subset::from_fn(c.len(), |x| k.leq(x, c.one())) == *scalars
}

/// Finite saturated submodules are exactly the sets `{b : b̄ ≤ ā}`.
pub fn check_finite_submodules_principal<S: Semiring>(c: &Carrier<S>, scalars: &Subset) -> Result<bool> {
    let k = contract(c, scalars);
    let mut finite: Vec<Subset> =
        saturated_submodules(c, scalars)?.into_iter().filter(|m| is_finite_module(c, scalars, m).is_some()).collect();
    let mut principal: Vec<Subset> = (0..c.len()).map(|a| Subset::from_fn(c.len(), |b| k.leq(b, a))).collect();
    if !principal.iter().all(|m| is_saturated_submodule(c, scalars, m)) {
        return Ok(false);
    }
    finite.sort();
    principal.sort();
    principal.dedup();
    Ok(finite == principal)
}

/// With `s` a quasiintegral witness for `x`, the elements `a` with
/// `(as)‾ ≤ s̄` contain `R⟨x⟩`.
pub fn check_witness_stabilizer<S: Semiring>(c: &Carrier<S>, scalars: &Subset, x: usize, s: usize) -> bool {
    let se = c.elem(s);
    let stab = Subset::from_fn(c.len(), |a| below_multiple(c, scalars, &mul(c, c.elem(a), se), se));
    r_angle_x(c, scalars, x).is_subset(&stab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{GammaMax, GammaMaxField};
    use crate::group::GroupKind;

    fn named(r: &FiniteSemiring, names: &[&str]) -> Subset {
        let idx: Vec<usize> = names.iter().map(|n| r.index_of(n).unwrap()).collect();
        r.carrier().subset_of(&idx)
    }

    fn zmax() -> (Carrier<GammaMaxField>, Subset) {
        let f = GammaMaxField::new(GroupKind::IntPower(1));
        let c = Carrier::new(f, f.window(8)).unwrap();
        let ball = c.subset_where(|x| *x <= GammaMax::one(GroupKind::IntPower(1)));
        (c, ball)
    }

    #[test]
    fn contractions() {
        let c3 = FiniteSemiring::chain(3);
        let k = contract(&c3.carrier(), &c3.carrier().all());
        assert_eq!(k.num_classes(), 3);
        let bz = FiniteSemiring::b_z2();
        let k = contract(&bz.carrier(), &bz.carrier().all());
        assert_eq!(k.classes(), vec![vec![0], vec![1, 2, 3]]);
        let (c, ball) = zmax();
        let k = contract(&c, &ball);
        assert_eq!(k.num_classes(), c.len());
        let g = |e: i64| c.index_of(&GammaMax::power(GroupKind::IntPower(1), e).unwrap()).unwrap();
        assert!(contraction_leq(&c, &ball, g(5), g(2)));
        assert!(!contraction_leq(&c, &ball, g(2), g(5)));
    }

    #[test]
    fn r_angle() {
        let bz = FiniteSemiring::b_z2();
        let b = named(&bz, &["0", "1"]);
        assert_eq!(r_angle_x(&bz.carrier(), &b, bz.index_of("g").unwrap()), bz.carrier().all());
        let c3 = FiniteSemiring::chain(3);
        let b3 = named(&c3, &["0", "1"]);
        assert_eq!(r_angle_x(&c3.carrier(), &b3, 1), c3.carrier().all());
    }

    #[test]
    fn integral_witnesses() {
        let bz = FiniteSemiring::b_z2();
        let c = bz.carrier();
        let b = named(&bz, &["0", "1"]);
        let g = bz.index_of("g").unwrap();
        assert_eq!(
            is_integral(&c, &b, g).unwrap(),
            IntegralResult::Integral(IntegralWitness { degree: 2, coeffs: vec![1, 0] })
        );
        assert_eq!(
            is_integral(&c, &b, 1).unwrap(),
            IntegralResult::Integral(IntegralWitness { degree: 2, coeffs: vec![1, 0] })
        );
        let (zc, ball) = zmax();
        let gamma = zc.index_of(&GammaMax::power(GroupKind::IntPower(1), 1).unwrap()).unwrap();
        assert_eq!(is_integral(&zc, &ball, gamma).unwrap(), IntegralResult::Unknown { bound: DEGREE_BOUND });
        assert!(is_integral(&zc, &ball, zc.one()).unwrap().is_integral());
    }

    #[test]
    fn quasiintegral() {
        let bz = FiniteSemiring::b_z2();
        let c = bz.carrier();
        let b = named(&bz, &["0", "1"]);
        let one_g = bz.index_of("1+g").unwrap();
        assert_eq!(is_quasiintegral(&c, &b, one_g), Ok(Some(one_g)));
        assert_eq!(is_quasiintegral(&c, &b, 0), Ok(Some(1)));
        assert_eq!(quasiintegral_closure(&c, &b).unwrap(), c.all());
        assert_eq!(closure_via_valuations(&bz, &b).unwrap(), c.all());
        let (zc, ball) = zmax();
        let gamma = zc.index_of(&GammaMax::power(GroupKind::IntPower(1), 1).unwrap()).unwrap();
        assert_eq!(is_quasiintegral(&zc, &ball, gamma), Ok(None));
        assert_eq!(quasiintegral_closure(&zc, &ball).unwrap(), ball);
        let c3 = FiniteSemiring::chain(3);
        assert!(is_quasiintegral(&c3.carrier(), &c3.carrier().all(), 1).is_err());
    }

    #[test]
    fn extensibility_and_homs() {
        let bz = FiniteSemiring::b_z2();
        let c = bz.carrier();
        let b = named(&bz, &["0", "1"]);
        assert_eq!(is_extensible(&c, &b), Ok(true));
        assert_eq!(is_extensible(&c, &c.all()), Ok(true));
        let (zc, ball) = zmax();
        assert_eq!(is_extensible(&zc, &ball), Ok(true));
        assert_eq!(check_quasiintegral_homs(&bz, &b), Ok(None));
        assert_eq!(check_contraction_extensible(&bz, &b), Ok(true));
    }

    #[test]
    fn contraction_checks() {
        let (zc, ball) = zmax();
        let v = ValuationHom::new(GroupKind::IntPower(1), zc.elems().to_vec());
        assert!(check_contraction_is_value_map(&zc, &ball, &v));
        assert!(check_unit_ball_classes(&zc, &ball));
        let bz = FiniteSemiring::b_z2();
        let b = named(&bz, &["0", "1"]);
        assert_eq!(check_inclusion_contraction_injective(&bz.carrier(), &b, &b), Ok(true));
        for r in [FiniteSemiring::boolean(), FiniteSemiring::chain(3), bz.clone(), FiniteSemiring::chain(4)] {
            let c = r.carrier();
            assert_eq!(check_finite_submodules_principal(&c, &c.all()), Ok(true), "{}", r.name());
        }
        let one_g = bz.index_of("1+g").unwrap();
        assert!(check_witness_stabilizer(&bz.carrier(), &b, one_g, one_g));
    }
}
