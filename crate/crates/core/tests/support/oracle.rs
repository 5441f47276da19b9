//! Generator-list lattices with no canonical forms. Membership uses the
//! fact that over `Z_(p)` some subset of at most two of the given generators
//! already generates the module, and solves for coefficients by Cramer's
//! rule.

#![allow(dead_code)]

use charone_core::frac_ideal::{vp, QuadElem, Q};

#[derive(Debug, Clone)]
pub struct GenLattice {
    pub p: u64,
    pub gens: Vec<QuadElem>,
}

fn integral(p: u64, q: Q) -> bool {
    vp(p, &q).is_none_or(|k| k >= 0)
}

fn in_span1(p: u64, g: &QuadElem, x: &QuadElem) -> bool {
    x.is_zero() || x.ratio(g).is_some_and(|t| integral(p, t))
}

fn in_span2(p: u64, g: &QuadElem, h: &QuadElem, x: &QuadElem) -> bool {
    let det = &g.a * &h.b - &g.b * &h.a;
    let s = (&x.a * &h.b - &x.b * &h.a) / &det;
    let t = (&g.a * &x.b - &g.b * &x.a) / &det;
    integral(p, s) && integral(p, t)
}

impl GenLattice {
    pub fn new(p: u64, gens: Vec<QuadElem>) -> Self {
        GenLattice { p, gens: gens.into_iter().filter(|g| !g.is_zero()).collect() }
    }

    pub fn contains(&self, x: &QuadElem) -> bool {
        let p = self.p;
        let g = &self.gens;
        if x.is_zero() {
            return true;
        }
        for a in g {
            if g.iter().all(|y| in_span1(p, a, y)) {
                return in_span1(p, a, x);
            }
        }
        for (i, a) in g.iter().enumerate() {
            for b in &g[i + 1..] {
                if &a.a * &b.b == &a.b * &b.a {
                    continue;
                }
                if g.iter().all(|y| in_span2(p, a, b, y)) {
                    return in_span2(p, a, b, x);
                }
            }
        }
        if g.is_empty() {
            return false;
        }
        panic!("no generating subset of size <= 2 among {g:?}");
    }

    pub fn leq(&self, other: &GenLattice) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same(&self, other: &GenLattice) -> bool {
        self.leq(other) && other.leq(self)
    }

    pub fn add(&self, other: &GenLattice) -> GenLattice {
        GenLattice::new(self.p, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn mul(&self, other: &GenLattice) -> GenLattice {
        let gens = self.gens.iter().flat_map(|x| other.gens.iter().map(move |y| x.mul(y))).collect();
        GenLattice::new(self.p, gens)
    }
}
