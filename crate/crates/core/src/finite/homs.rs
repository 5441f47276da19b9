use alloc::vec;
use alloc::vec::Vec;

use super::{Congruence, FiniteSemiring};

/// `f` preserves `0`, `1`, `+` and `·`.
pub fn is_homomorphism(r: &FiniteSemiring, s: &FiniteSemiring, f: &[usize]) -> bool {
    f.len() == r.size()
        && f[r.zero_index()] == s.zero_index()
        && f[r.one_index()] == s.one_index()
        && r.elements().all(|x| {
            r.elements().all(|y| f[r.sum(x, y)] == s.sum(f[x], f[y]) && f[r.product(x, y)] == s.product(f[x], f[y]))
        })
}

/// Every homomorphism `r → s`, by backtracking with pruning.
pub fn homomorphisms(r: &FiniteSemiring, s: &FiniteSemiring) -> Vec<Vec<usize>> {
    let n = r.size();
    let mut out = Vec::new();
    let mut f: Vec<Option<usize>> = vec![None; n];
    f[r.zero_index()] = Some(s.zero_index());
    if r.zero_index() != r.one_index() {
        f[r.one_index()] = Some(s.one_index());
    } else if s.zero_index() != s.one_index() {
        return out;
    }
    let free: Vec<usize> = (0..n).filter(|&x| f[x].is_none()).collect();
    search(r, s, &free, 0, &mut f, &mut out);
    out
}

fn consistent(r: &FiniteSemiring, s: &FiniteSemiring, f: &[Option<usize>]) -> bool {
    for x in r.elements() {
        let Some(fx) = f[x] else { continue };
        for y in r.elements() {
            let Some(fy) = f[y] else { continue };
            if f[r.sum(x, y)].is_some_and(|v| v != s.sum(fx, fy))
                || f[r.product(x, y)].is_some_and(|v| v != s.product(fx, fy))
            {
                return false;
            }
        }
    }
    true
}

fn search(
    r: &FiniteSemiring,
    s: &FiniteSemiring,
    free: &[usize],
    k: usize,
    f: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<usize>>,
) {
    if !consistent(r, s, f) {
        return;
    }
    if k == free.len() {
        out.push(f.iter().map(|v| v.unwrap()).collect());
        return;
    }
    for y in s.elements() {
        f[free[k]] = Some(y);
        search(r, s, free, k + 1, f, out);
    }
    f[free[k]] = None;
}

/// `x ∼ y` iff `f(x) ∼ f(y)` downstairs.
pub fn pullback(f: &[usize], c: &Congruence) -> Congruence {
    let labels: Vec<usize> = f.iter().map(|&y| c.class_of(y)).collect();
    Congruence::from_labels(&labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homs_into_boolean() {
        let b = FiniteSemiring::boolean();
        assert_eq!(homomorphisms(&b, &b), vec![vec![0, 1]]);
        let c3 = FiniteSemiring::chain(3);
        // 0 ↦ 0, 1 ↦ 1; a may go to either.
        assert_eq!(homomorphisms(&c3, &b), vec![vec![0, 0, 1], vec![0, 1, 1]]);
        let bz = FiniteSemiring::b_z2();
        assert_eq!(homomorphisms(&bz, &b), vec![vec![0, 1, 1, 1]]);
        assert!(homomorphisms(&b, &bz).len() == 1);
        assert!(FiniteSemiring::chain(4).is_isomorphic(&FiniteSemiring::chain(4)));
        assert!(!bz.is_isomorphic(&FiniteSemiring::chain(4)));
    }
}
