use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::FiniteSemiring;
use crate::error::{Error, Result};

/// Largest carrier on which every congruence is enumerated.
pub const MAX_CONGRUENCE_CARRIER: usize = 6;

/// A partition of the carrier, stored as class ids in restricted-growth
/// form: element `0` is in class `0` and each new class gets the next id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class: Vec<usize>,
}

impl Congruence {
    /// Canonicalizes an arbitrary labelling of elements by classes.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let class = labels
            .iter()
            .map(|&l| match seen.iter().find(|(old, _)| *old == l) {
                Some(&(_, id)) => id,
                None => {
                    seen.push((l, seen.len()));
                    seen.len() - 1
                }
            })
            .collect();
        Congruence { class }
    }

    pub fn equality(n: usize) -> Self {
        Congruence { class: (0..n).collect() }
    }

    pub fn total(n: usize) -> Self {
        Congruence { class: alloc::vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.class.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class[x] == self.class[y]
    }

    pub fn num_classes(&self) -> usize {
        self.class.iter().max().map_or(0, |m| m + 1)
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = alloc::vec![Vec::new(); self.num_classes()];
        for (x, &c) in self.class.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn is_equality(&self) -> bool {
        self.num_classes() == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.num_classes() <= 1
    }

    /// `self ⊆ other` as relations.
    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        (0..self.size()).all(|x| other.related(x, x_first(self, x)))
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let pairs: Vec<(usize, usize)> = self.class.iter().zip(&other.class).map(|(&a, &b)| (a, b)).collect();
        let labels: Vec<usize> = pairs.iter().map(|p| pairs.iter().position(|q| q == p).unwrap()).collect();
        Congruence::from_labels(&labels)
    }

    pub fn is_compatible(&self, r: &FiniteSemiring) -> bool {
        let n = r.size();
        for x in 0..n {
            for y in 0..n {
                if !self.related(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !self.related(r.sum(x, z), r.sum(y, z)) || !self.related(r.product(x, z), r.product(y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Nontrivial classes, e.g. `{0,a}{1}`.
    pub fn render(&self, r: &FiniteSemiring) -> String {
        let mut s = String::new();
        for class in self.classes() {
            s.push('{');
            let names: Vec<&str> = class.iter().map(|&x| r.element_name(x)).collect();
            s.push_str(&names.join(","));
            s.push('}');
        }
        s
    }
}

fn x_first(c: &Congruence, x: usize) -> usize {
    c.class.iter().position(|&k| k == c.class[x]).unwrap()
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        self.0[a.max(b)] = a.min(b);
        true
    }
}

/// Least congruence relating every given pair.
pub fn congruence_generated_by(r: &FiniteSemiring, pairs: &[(usize, usize)]) -> Congruence {
    let n = r.size();
    let mut uf = UnionFind((0..n).collect());
    for &(x, y) in pairs {
        uf.union(x, y);
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in x + 1..n {
                if uf.find(x) != uf.find(y) {
                    continue;
                }
                for z in 0..n {
                    changed |= uf.union(r.sum(x, z), r.sum(y, z));
                    changed |= uf.union(r.product(x, z), r.product(y, z));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    Congruence::from_labels(&labels)
}

fn pairs_of(c: &Congruence) -> Vec<(usize, usize)> {
    let first = |x| x_first(c, x);
    (0..c.size()).filter(|&x| first(x) != x).map(|x| (first(x), x)).collect()
}

fn guard(r: &FiniteSemiring) -> Result<()> {
    if r.size() > MAX_CONGRUENCE_CARRIER {
        return Err(Error::CarrierTooLarge { size: r.size(), bound: MAX_CONGRUENCE_CARRIER });
    }
    Ok(())
}

/// Every congruence, found as joins of principal congruences. Sorted.
pub fn congruences(r: &FiniteSemiring) -> Result<Vec<Congruence>> {
    guard(r)?;
    let n = r.size();
    let principal: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let mut found: BTreeSet<Congruence> = BTreeSet::new();
    let mut frontier = alloc::vec![Congruence::equality(n)];
    found.insert(Congruence::equality(n));
    while let Some(c) = frontier.pop() {
        let base = pairs_of(&c);
        for &p in &principal {
            if c.related(p.0, p.1) {
                continue;
            }
            let mut gens = base.clone();
            gens.push(p);
            let j = congruence_generated_by(r, &gens);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// `0 ≁ 1`, and `xy + zw ∼ xw + zy` forces `x ∼ z` or `y ∼ w`.
pub fn is_prime(c: &Congruence, r: &FiniteSemiring) -> bool {
    if c.related(r.zero_index(), r.one_index()) {
        return false;
    }
    let n = r.size();
    for x in 0..n {
        for z in 0..n {
            if c.related(x, z) {
                continue;
            }
            for y in 0..n {
                for w in 0..n {
                    if c.related(y, w) {
                        continue;
                    }
                    let lhs = r.sum(r.product(x, y), r.product(z, w));
                    let rhs = r.sum(r.product(x, w), r.product(z, y));
                    if c.related(lhs, rhs) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A quotient semiring with its surjection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub semiring: FiniteSemiring,
    pub map: Vec<usize>,
}

/// `R/∼`. Classes are named after `0`, `1`, or their first member.
pub fn quotient(r: &FiniteSemiring, c: &Congruence) -> Result<Quotient> {
    if c.size() != r.size() || !c.is_compatible(r) {
        return Err(Error::Precondition("not a congruence".into()));
    }
    let classes = c.classes();
    let k = classes.len();
    let rep: Vec<usize> = classes
        .iter()
        .map(|cl| {
            if cl.contains(&r.zero_index()) {
                r.zero_index()
            } else if cl.contains(&r.one_index()) {
                r.one_index()
            } else {
                cl[0]
            }
        })
        .collect();
    let names = rep.iter().map(|&x| r.element_name(x).into()).collect();
    let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| c.class_of(op(rep[i], rep[j]))).collect()
    };
    let add = table(&|x, y| r.sum(x, y));
    let mul = table(&|x, y| r.product(x, y));
    let semiring = FiniteSemiring::from_flat_unchecked(
        alloc::format!("{}/~", r.name()),
        names,
        add,
        mul,
        c.class_of(r.zero_index()),
        c.class_of(r.one_index()),
    );
    Ok(Quotient { semiring, map: c.labels().to_vec() })
}

/// `xy = xz` with `x ≠ 0` forces `y = z`.
pub fn is_cancellative(r: &FiniteSemiring) -> bool {
    cancellation_counterexample(r).is_none()
}

pub fn cancellation_counterexample(r: &FiniteSemiring) -> Option<(usize, usize, usize)> {
    let n = r.size();
    for x in r.nonzero() {
        for y in 0..n {
            for z in y + 1..n {
                if r.product(x, y) == r.product(x, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn is_totally_ordered(r: &FiniteSemiring) -> bool {
    r.elements().all(|x| r.elements().all(|y| r.le(x, y) || r.le(y, x)))
}

pub fn is_domain(r: &FiniteSemiring) -> bool {
    is_prime(&Congruence::equality(r.size()), r)
}

/// The quotient is cancellative.
pub fn is_qc(c: &Congruence, r: &FiniteSemiring) -> bool {
    quotient(r, c).is_ok_and(|q| is_cancellative(&q.semiring))
}

pub fn prime_congruences(r: &FiniteSemiring) -> Result<Vec<Congruence>> {
    Ok(congruences(r)?.into_iter().filter(|c| is_prime(c, r)).collect())
}

/// Meet of a family, with the empty meet being the total relation.
pub fn meet_all<'a>(n: usize, cs: impl IntoIterator<Item = &'a Congruence>) -> Congruence {
    cs.into_iter().fold(Congruence::total(n), |acc, c| acc.meet(c))
}

/// `c` equals the intersection of the prime congruences containing it.
pub fn radical_test(c: &Congruence, r: &FiniteSemiring) -> Result<bool> {
    let primes = prime_congruences(r)?;
    let above = primes.iter().filter(|p| c.is_finer_than(p));
    Ok(meet_all(r.size(), above) == *c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// All set partitions of `0..n`, as restricted-growth strings.
    fn partitions(n: usize) -> Vec<Congruence> {
        fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Congruence>) {
            if prefix.len() == n {
                out.push(Congruence { class: prefix.clone() });
                return;
            }
            let next = prefix.iter().max().map_or(0, |m| m + 1);
            for c in 0..=next {
                prefix.push(c);
                go(prefix, n, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&mut vec![0], n.max(1), &mut out);
        out
    }

    fn labelled(r: &FiniteSemiring, classes: &[&[&str]]) -> Congruence {
        let mut labels = vec![0; r.size()];
        for (k, cl) in classes.iter().enumerate() {
            for name in *cl {
                labels[r.index_of(name).unwrap()] = k;
            }
        }
        Congruence::from_labels(&labels)
    }

    #[test]
    fn closure_enumeration_matches_brute_force() {
        for r in [
            FiniteSemiring::boolean(),
            FiniteSemiring::chain(3),
            FiniteSemiring::b_z2(),
            FiniteSemiring::chain(4),
            FiniteSemiring::chain(6),
        ] {
            let brute: Vec<Congruence> = partitions(r.size()).into_iter().filter(|c| c.is_compatible(&r)).collect();
            let mut brute = brute;
            brute.sort();
            assert_eq!(congruences(&r).unwrap(), brute, "{}", r.name());
        }
    }

    #[test]
    fn corpus_congruences() {
        let b = FiniteSemiring::boolean();
        assert_eq!(congruences(&b).unwrap(), vec![Congruence::total(2), Congruence::equality(2)]);
        let c3 = FiniteSemiring::chain(3);
        let cs = congruences(&c3).unwrap();
        assert!(cs.contains(&labelled(&c3, &[&["0", "a"], &["1"]])));
        assert!(cs.contains(&labelled(&c3, &[&["0"], &["a", "1"]])));
        let bz = FiniteSemiring::b_z2();
        assert!(congruences(&bz).unwrap().contains(&labelled(&bz, &[&["0"], &["1", "g", "1+g"]])));
        assert!(congruences(&FiniteSemiring::chain(7)).is_err());
    }

    #[test]
    fn primes_and_domains() {
        let b = FiniteSemiring::boolean();
        assert!(is_prime(&Congruence::equality(2), &b));
        assert!(is_domain(&b));
        let c3 = FiniteSemiring::chain(3);
        assert!(!is_prime(&Congruence::equality(3), &c3));
        assert!(!is_cancellative(&c3));
        let collapse = labelled(&c3, &[&["0", "a"], &["1"]]);
        assert!(is_prime(&collapse, &c3));
        let q = quotient(&c3, &collapse).unwrap();
        assert!(q.semiring.is_isomorphic(&b));
        assert!(!is_totally_ordered(&FiniteSemiring::b_z2()));
    }

    #[test]
    fn quotient_by_equality_is_isomorphic() {
        let bz = FiniteSemiring::b_z2();
        let q = quotient(&bz, &Congruence::equality(4)).unwrap();
        assert!(q.semiring.is_isomorphic(&bz));
        let top = labelled(&bz, &[&["0"], &["1", "g", "1+g"]]);
        let q = quotient(&bz, &top).unwrap();
        assert!(q.semiring.is_isomorphic(&FiniteSemiring::boolean()));
        assert_eq!(q.semiring.names(), &["0", "1"]);
    }

    #[test]
    fn meets_and_refinement() {
        let c3 = FiniteSemiring::chain(3);
        let lo = labelled(&c3, &[&["0", "a"], &["1"]]);
        let hi = labelled(&c3, &[&["0"], &["a", "1"]]);
        assert_eq!(lo.meet(&hi), Congruence::equality(3));
        assert!(Congruence::equality(3).is_finer_than(&lo));
        assert!(!hi.is_finer_than(&lo));
        assert!(lo.is_finer_than(&Congruence::total(3)));
        assert_eq!(radical_test(&Congruence::equality(3), &c3), Ok(true));
    }
}
