//! Valuations as homomorphisms into `Γ_max`, valuation subsemirings, the
//! induced valuation, and the correspondence between down-sets of `Γ_max`
//! and saturated submodules.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gamma::GammaMax;
use crate::group::{GroupElement, GroupKind};
use crate::idem::{is_saturated, is_unitgenerated, is_valuation, units};
use crate::semiring::{Carrier, Semiring, Subset};

/// A map from carrier positions to `Γ_max` over a fixed group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationHom {
    group: GroupKind,
    values: Vec<GammaMax>,
}

impl ValuationHom {
    pub fn new(group: GroupKind, values: Vec<GammaMax>) -> Self {
        ValuationHom { group, values }
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn values(&self) -> &[GammaMax] {
        &self.values
    }

    pub fn value(&self, x: usize) -> &GammaMax {
        &self.values[x]
    }

    pub fn is_valuation_on<S: Semiring>(&self, c: &Carrier<S>) -> Result<bool> {
        if self.values.len() != c.len() {
            return Err(Error::MapNotTotal);
        }
        is_valuation(c, |i| self.values.get(i).cloned())
    }

    /// `{x : v(x) ≤ 1}`.
    pub fn ring_of_integers(&self) -> Subset {
        let one = GammaMax::one(self.group);
        Subset::from_fn(self.values.len(), |x| self.values[x] <= one)
    }
}

/// `v(x) ≤ v(y)` iff `w(x) ≤ w(y)` and `v(x) = 0` iff `w(x) = 0`: the value
/// groups are identified by an order isomorphism compatible with both maps.
pub fn equivalent_up_to_iso(v: &ValuationHom, w: &ValuationHom) -> bool {
    let n = v.values.len();
    n == w.values.len()
        && (0..n).all(|x| {
            v.values[x].is_zero() == w.values[x].is_zero()
                && (0..n).all(|y| (v.values[x] <= v.values[y]) == (w.values[x] <= w.values[y]))
        })
}

/// The first reason `r` fails to be a valuation subsemiring of the carrier.
pub fn valuation_subsemiring_defect<S: Semiring>(c: &Carrier<S>, r: &Subset) -> Result<Option<String>> {
    if !is_unitgenerated(c) {
        return Err(Error::NotUnitgenerated);
    }
    if !r.contains(c.zero()) || !r.contains(c.one()) {
        return Ok(Some("does not contain 0 and 1".into()));
    }
    for x in r.iter() {
        for y in r.iter() {
            if c.mul(x, y).is_some_and(|p| !r.contains(p)) {
                return Ok(Some(format!("{}·{} leaves the subset", c.name(x), c.name(y))));
            }
        }
    }
    if !is_saturated(c, r) {
        return Ok(Some("not saturated".into()));
    }
    for u in units(c).iter() {
        if let Some(inv) = c.inverse(u) {
            if !r.contains(u) && !r.contains(inv) {
                return Ok(Some(format!("neither {} nor its inverse lies in the subset", c.name(u))));
            }
        }
    }
    Ok(None)
}

/// Saturated subsemiring containing each unit or its inverse.
pub fn is_valuation_subsemiring<S: Semiring>(c: &Carrier<S>, r: &Subset) -> Result<bool> {
    Ok(valuation_subsemiring_defect(c, r)?.is_none())
}

fn require_valuation_subsemiring<S: Semiring>(c: &Carrier<S>, r: &Subset) -> Result<()> {
    match valuation_subsemiring_defect(c, r)? {
        None => Ok(()),
        Some(why) => Err(Error::NotValuationSubsemiring(why)),
    }
}

/// `K^×/R^×` with `[x] ≤ [y]` iff `xy⁻¹ ∈ R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitClasses {
    pub group: GroupKind,
    /// The class of each unit of the carrier; `None` for non-units.
    pub class_of: Vec<Option<GroupElement>>,
}

/// Computes the value group of a valuation subsemiring.
///
/// A single class gives the trivial group. Otherwise the least class above
/// `[1]` is taken as `γ` and every class must be a power of it; the
/// identification with `Z` is checked against products and the order.
pub fn unit_classes<S: Semiring>(c: &Carrier<S>, r: &Subset) -> Result<UnitClasses> {
    require_valuation_subsemiring(c, r)?;
    let u = units(c);
    let unit_list: Vec<usize> = u.iter().collect();
    let r_units: Vec<usize> =
        unit_list.iter().copied().filter(|&x| r.contains(x) && c.inverse(x).is_some_and(|i| r.contains(i))).collect();
    let same = |x: usize, y: usize| r_units.iter().any(|&e| c.mul(e, y) == Some(x));
    let mut class_of: Vec<Option<GroupElement>> = alloc::vec![None; c.len()];
    if unit_list.iter().all(|&x| same(x, c.one())) {
        for &x in &unit_list {
            class_of[x] = Some(GroupKind::Trivial.identity());
        }
        return Ok(UnitClasses { group: GroupKind::Trivial, class_of });
    }
    let z = GroupKind::IntPower(1);
    // [g] ≤ [x] iff g·x⁻¹ ∈ R.
    let below = |x: usize, y: usize| c.inverse(y).and_then(|yi| c.mul(x, yi)).map(|p| r.contains(p));
    let above_one: Vec<usize> = unit_list.iter().copied().filter(|&x| !r.contains(x)).collect();
    let g = above_one
        .iter()
        .copied()
        .find(|&g| above_one.iter().all(|&x| below(g, x) == Some(true)))
        .ok_or_else(|| Error::UnsupportedValueGroup("no least class above [1]".into()))?;
    let gi = c.inverse(g).ok_or_else(|| Error::UnsupportedValueGroup("generator inverse leaves window".into()))?;
    for (step, sign) in [(g, 1i64), (gi, -1)] {
        let mut p = Some(c.one());
        let mut k = 0i64;
        while let Some(cur) = p {
            for &x in &unit_list {
                if class_of[x].is_none() && same(x, cur) {
                    class_of[x] = Some(z.power(k)?);
                }
            }
            k += sign;
            p = c.mul(cur, step);
        }
    }
    if let Some(&x) = unit_list.iter().find(|&&x| class_of[x].is_none()) {
        return Err(Error::UnsupportedValueGroup(format!("{} is not a power of {}", c.name(x), c.name(g))));
    }
    for &x in &unit_list {
        for &y in &unit_list {
            let (cx, cy) = (class_of[x].as_ref().unwrap(), class_of[y].as_ref().unwrap());
            if let Some(p) = c.mul(x, y) {
                if class_of[p].as_ref() != Some(&cx.mul(cy)?) {
                    return Err(Error::UnsupportedValueGroup("classes are not additive in Z".into()));
                }
            }
            if let Some(le) = below(x, y) {
                if le != (cx <= cy) {
                    return Err(Error::UnsupportedValueGroup("class order is not the order of Z".into()));
                }
            }
        }
    }
    Ok(UnitClasses { group: z, class_of })
}

/// `v(Σ xᵢ) = Σ [xᵢ]` over the units below each element, with checks that
/// `v` is a valuation, that `v(x) ≤ [y]` iff `xy⁻¹ ∈ R`, and that
/// `{x : v(x) ≤ 1} = R`.
pub fn induced_valuation<S: Semiring>(c: &Carrier<S>, r: &Subset) -> Result<ValuationHom> {
    let classes = unit_classes(c, r)?;
    let u = units(c);
    let values: Vec<GammaMax> = (0..c.len())
        .map(|x| {
            u.iter()
                .filter(|&e| c.leq(e, x))
                .map(|e| GammaMax::Unit(classes.class_of[e].clone().unwrap()))
                .max()
                .unwrap_or(GammaMax::Zero)
        })
        .collect();
    let v = ValuationHom::new(classes.group, values);
    if !v.is_valuation_on(c)? {
        return Err(Error::VerificationFailed("induced map is not a valuation".into()));
    }
    for x in 0..c.len() {
        for y in u.iter() {
            let Some(p) = c.inverse(y).and_then(|yi| c.mul(x, yi)) else { continue };
            let class_y = GammaMax::Unit(classes.class_of[y].clone().unwrap());
            if (v.values[x] <= class_y) != r.contains(p) {
                return Err(Error::VerificationFailed(format!(
                    "v({}) ≤ [{}] disagrees with membership",
                    c.name(x),
                    c.name(y)
                )));
            }
        }
    }
    if v.ring_of_integers() != *r {
        return Err(Error::VerificationFailed("{x : v(x) ≤ 1} differs from R".into()));
    }
    Ok(v)
}

/// Units related by `v(x) ≤ v(y)` form a translation-invariant total preorder.
pub fn check_unit_preorder<S: Semiring>(c: &Carrier<S>, v: &ValuationHom) -> bool {
    let u: Vec<usize> = units(c).iter().collect();
    let le = |x: usize, y: usize| v.values[x] <= v.values[y];
    u.iter().all(|&x| {
        u.iter().all(|&y| {
            (le(x, y) || le(y, x))
                && u.iter().all(|&z| {
                    (!(le(x, y) && le(y, z)) || le(x, z))
                        && match (c.mul(x, z), c.mul(y, z)) {
                            (Some(xz), Some(yz)) => !le(x, y) || le(xz, yz),
                            _ => true,
                        }
                })
        })
    })
}

/// A down-set of `Γ_max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DownSet {
    Empty,
    ZeroOnly,
    /// `{x : x ≤ g}`.
    Closed(GroupElement),
    /// `{x : x < g}`.
    Open(GroupElement),
    All,
}

impl DownSet {
    pub fn contains(&self, x: &GammaMax) -> bool {
        match (self, x) {
            (DownSet::Empty, _) => false,
            (DownSet::All, _) => true,
            (_, GammaMax::Zero) => true,
            (DownSet::ZeroOnly, _) => false,
            (DownSet::Closed(g), GammaMax::Unit(h)) => h <= g,
            (DownSet::Open(g), GammaMax::Unit(h)) => h < g,
        }
    }

    /// Open cuts in `Z^1` become closed; the closed cut at `1` in the trivial
    /// group is everything.
    pub fn canonical(self) -> DownSet {
        match self {
            DownSet::Open(GroupElement::Int(v)) if v.len() == 1 => {
                DownSet::Closed(GroupElement::Int(alloc::vec![v[0] - 1]))
            }
            DownSet::Closed(g) if g.kind() == GroupKind::Trivial => DownSet::All,
            DownSet::Open(g) if g.kind() == GroupKind::Trivial => DownSet::ZeroOnly,
            d => d,
        }
    }
}

impl core::fmt::Display for DownSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DownSet::Empty => f.write_str("∅"),
            DownSet::ZeroOnly => f.write_str("{0}"),
            DownSet::Closed(g) => write!(f, "{{x ≤ {g}}}"),
            DownSet::Open(g) => write!(f, "{{x < {g}}}"),
            DownSet::All => f.write_str("Γ_max"),
        }
    }
}

fn nonzero_image(v: &ValuationHom) -> Vec<GroupElement> {
    let mut img: Vec<GroupElement> = v.values.iter().filter_map(|x| x.unit().cloned()).collect();
    img.sort();
    img.dedup();
    img
}

/// The down-sets distinguishable through `v` on this carrier. On a window
/// the cut at the largest value coincides with `All`.
pub fn representable_down_sets<S: Semiring>(c: &Carrier<S>, v: &ValuationHom) -> Vec<DownSet> {
    let img = nonzero_image(v);
    let keep = if c.is_closed() { img.len() } else { img.len().saturating_sub(1) };
    let mut out = alloc::vec![DownSet::Empty, DownSet::ZeroOnly, DownSet::All];
    out.extend(img.into_iter().take(keep).map(|g| DownSet::Closed(g).canonical()));
    out.sort();
    out.dedup();
    out
}

/// `{x : v(x) ∈ U}`.
pub fn submodule_of_subsemigroup<S: Semiring>(c: &Carrier<S>, v: &ValuationHom, u: &DownSet) -> Result<Subset> {
    let u = u.clone().canonical();
    if !representable_down_sets(c, v).contains(&u) {
        return Err(Error::NotRepresentable(format!("{u}")));
    }
    Ok(Subset::from_fn(c.len(), |x| u.contains(&v.values[x])))
}

/// The down-set generated by `v(M)`; `M` must be a full preimage.
pub fn subsemigroup_of_submodule<S: Semiring>(c: &Carrier<S>, v: &ValuationHom, m: &Subset) -> Result<DownSet> {
    let u = if m.is_empty() {
        DownSet::Empty
    } else if m.len() == c.len() {
        DownSet::All
    } else {
        match m.iter().map(|x| v.values[x].clone()).max().unwrap() {
            GammaMax::Zero => DownSet::ZeroOnly,
            GammaMax::Unit(g) => DownSet::Closed(g).canonical(),
        }
    };
    if Subset::from_fn(c.len(), |x| u.contains(&v.values[x])) != *m {
        return Err(Error::NotRepresentable("not the preimage of a down-set".into()));
    }
    Ok(u)
}

/// Saturated ideals of `R = {x : v(x) ≤ 1}` as preimages of down-sets of
/// `{x ∈ Γ_max : x ≤ 1}`. Every ideal contains `0`.
pub fn saturated_ideals<S: Semiring>(c: &Carrier<S>, v: &ValuationHom) -> Vec<(DownSet, Subset)> {
    let one = GammaMax::one(v.group);
    let r = v.ring_of_integers();
    representable_down_sets(c, v)
        .into_iter()
        .filter(|u| *u != DownSet::Empty)
        .filter_map(|u| {
            let m = Subset::from_fn(c.len(), |x| u.contains(&v.values[x]));
            let inside = match &u {
                DownSet::Closed(g) => GammaMax::Unit(g.clone()) <= one,
                DownSet::Open(g) => GammaMax::Unit(g.clone()) <= one,
                DownSet::All => m == r,
                _ => true,
            };
            (inside && m.is_subset(&r)).then_some((u, m))
        })
        .collect()
}

/// Inclusion is a total order on the given sets.
pub fn check_ideals_totally_ordered(ideals: &[Subset]) -> bool {
    ideals.iter().all(|a| ideals.iter().all(|b| a.is_subset(b) || b.is_subset(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteSemiring;
    use crate::gamma::GammaMaxField;

    fn zmax(n: i64) -> Carrier<GammaMaxField> {
        let f = GammaMaxField::new(GroupKind::IntPower(1));
        Carrier::new(f, f.window(n)).unwrap()
    }

    fn below_one(c: &Carrier<GammaMaxField>) -> Subset {
        c.subset_where(|x| *x <= GammaMax::one(GroupKind::IntPower(1)))
    }

    #[test]
    fn valuation_subsemirings() {
        let c = zmax(8);
        assert_eq!(is_valuation_subsemiring(&c, &below_one(&c)), Ok(true));
        assert_eq!(is_valuation_subsemiring(&c, &c.subset_of(&[c.zero(), c.one()])), Ok(false));
        let b = FiniteSemiring::boolean().carrier();
        assert_eq!(is_valuation_subsemiring(&b, &b.all()), Ok(true));
        let c3 = FiniteSemiring::chain(3).carrier();
        assert_eq!(is_valuation_subsemiring(&c3, &c3.all()), Err(Error::NotUnitgenerated));
    }

    #[test]
    fn value_groups() {
        let c = zmax(8);
        let classes = unit_classes(&c, &below_one(&c)).unwrap();
        assert_eq!(classes.group, GroupKind::IntPower(1));
        for i in 1..c.len() {
            assert_eq!(classes.class_of[i].as_ref(), c.elem(i).unit());
        }
        let bz = FiniteSemiring::b_z2().carrier();
        assert_eq!(unit_classes(&bz, &bz.all()).unwrap().group, GroupKind::Trivial);
    }

    #[test]
    fn induced_valuations() {
        let c = zmax(8);
        let v = induced_valuation(&c, &below_one(&c)).unwrap();
        assert_eq!(v.values(), c.elems());
        let bz = FiniteSemiring::b_z2().carrier();
        let v = induced_valuation(&bz, &bz.all()).unwrap();
        let one = GammaMax::one(GroupKind::Trivial);
        assert_eq!(v.values(), &[GammaMax::Zero, one.clone(), one.clone(), one]);
        assert!(check_unit_preorder(&c, &induced_valuation(&c, &below_one(&c)).unwrap()));
    }

    #[test]
    fn down_set_correspondence() {
        let c = zmax(8);
        let v = ValuationHom::new(GroupKind::IntPower(1), c.elems().to_vec());
        let g = |k| GroupKind::IntPower(1).power(k).unwrap();
        let m = submodule_of_subsemigroup(&c, &v, &DownSet::Closed(g(3))).unwrap();
        assert_eq!(m, c.subset_where(|x| *x <= GammaMax::Unit(g(3))));
        assert_eq!(subsemigroup_of_submodule(&c, &v, &c.subset_of(&[c.zero()])), Ok(DownSet::ZeroOnly));
        let u = DownSet::Closed(g(-2));
        let m = submodule_of_subsemigroup(&c, &v, &u).unwrap();
        assert_eq!(subsemigroup_of_submodule(&c, &v, &m), Ok(u));
        assert_eq!(DownSet::Open(g(0)).canonical(), DownSet::Closed(g(-1)));
        assert!(submodule_of_subsemigroup(&c, &v, &DownSet::Closed(g(8))).is_err());
    }

    #[test]
    fn ideals_form_a_chain() {
        let c = zmax(8);
        let v = ValuationHom::new(GroupKind::IntPower(1), c.elems().to_vec());
        let ideals = saturated_ideals(&c, &v);
        assert_eq!(ideals.len(), 10);
        let sets: Vec<Subset> = ideals.into_iter().map(|(_, m)| m).collect();
        assert!(check_ideals_totally_ordered(&sets));
        let b = FiniteSemiring::boolean().carrier();
        let vb = induced_valuation(&b, &b.all()).unwrap();
        assert_eq!(saturated_ideals(&b, &vb).len(), 2);
    }
}
