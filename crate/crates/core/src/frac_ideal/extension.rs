use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lattice::{hom_from_valuation, lat_add, lat_leq, lat_mul, LatticeSemiring, QuadLattice};
use super::local::{is_local_integer, is_prime, ppow, rational, vp};
use super::qfrac::{qf_subsemigroup_of_submodule, QSubmodule, QfracIdeal, QfracSemiring};
use super::quad::QuadElem;
use super::Q;
use crate::error::{Error, Result};
use crate::gamma::{gm_mul, GammaMax};
use crate::group::{embed, Embedding, Exponent, GroupKind};
use crate::idem::{is_unitgenerated, units};
use crate::integrality::{check_contraction_is_value_map, check_unit_ball_classes};
use crate::semiring::{Carrier, Semiring};
use crate::valuation::ValuationHom;

pub const SUPPORTED_D: [i64; 3] = [-1, 2, 3];
const MAX_PRIME: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Splitting::Split => "split",
            Splitting::Inert => "inert",
            Splitting::Ramified => "ramified",
        })
    }
}

/// One prime of `Z[√d]` above `p`, with the valuation
/// `w(x) = ι(γ^{-v_π(x)})`, `ι = embed(Z, Q, 1/e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionPrime {
    pub p: u64,
    pub pi: QuadElem,
    pub e: u32,
    pub f: u32,
    pub embedding: Embedding,
}

impl ExtensionPrime {
    pub fn scale(&self) -> Exponent {
        self.embedding.scale()
    }

    /// `v_π(x)` by repeated exact division in `Z[√d]`.
    pub fn v_pi(&self, x: &QuadElem) -> Option<i64> {
        if x.is_zero() {
            return None;
        }
        let m = x.a.denom().lcm(x.b.denom());
        let (mut ya, mut yb) = ((&x.a * &m).to_integer(), (&x.b * &m).to_integer());
        let conj = self.pi.conj();
        let (ca, cb, norm) = (conj.a.to_integer(), conj.b.to_integer(), self.pi.norm().to_integer());
        let d = BigInt::from(self.pi.d);
        let mut k = 0;
        loop {
            let (za, ra) = (&ya * &ca + &d * &yb * &cb).div_rem(&norm);
            let (zb, rb) = (&ya * &cb + &yb * &ca).div_rem(&norm);
            if !(ra.is_zero() && rb.is_zero()) {
                break;
            }
            (ya, yb) = (za, zb);
            k += 1;
        }
        Some(k - self.e as i64 * vp(self.p, &Q::from_integer(m)).unwrap())
    }

    pub fn value(&self, x: &QuadElem) -> GammaMax {
        match self.v_pi(x) {
            None => GammaMax::Zero,
            Some(k) => {
                let g = GroupKind::IntPower(1).power(-k).expect("Z");
                GammaMax::Unit(self.embedding.apply(&g).expect("Z into Q"))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionDatum {
    pub p: u64,
    pub d: i64,
    pub splitting: Splitting,
    pub primes: Vec<ExtensionPrime>,
}

/// `v(q) = γ^{-v_p(q)}` on `Q`.
pub fn padic_value(p: u64, q: &Q) -> GammaMax {
    match vp(p, q) {
        None => GammaMax::Zero,
        Some(k) => GammaMax::power(GroupKind::IntPower(1), -k).expect("Z"),
    }
}

/// The value-group embedding `j: Z → Q` used for restrictions.
pub fn restriction_embedding() -> Embedding {
    embed(GroupKind::IntPower(1), GroupKind::Rational, Exponent::one()).expect("Z into Q")
}

fn apply_gm(j: &Embedding, x: &GammaMax) -> GammaMax {
    match x {
        GammaMax::Zero => GammaMax::Zero,
        GammaMax::Unit(g) => GammaMax::Unit(j.apply(g).expect("embedding source")),
    }
}

fn norm_form_solution(p: u64, d: i64) -> Option<QuadElem> {
    let bound = 4 * p as i64 + 4;
    (1..=bound)
        .find_map(|b| (0..=bound).find(|&a| (a * a - d * b * b).abs() == p as i64).map(|a| QuadElem::int(d, a, b)))
}

pub fn extension_oracle(p: u64, d: i64) -> Result<ExtensionDatum> {
    let unsupported = |reason: &str| Error::Unsupported { p, d, reason: reason.into() };
    if !SUPPORTED_D.contains(&d) {
        return Err(unsupported("d must be one of -1, 2, 3"));
    }
    if !is_prime(p) {
        return Err(unsupported("p is not prime"));
    }
    if p > MAX_PRIME {
        return Err(unsupported("p exceeds the search bound 1000"));
    }
    let z_to_q = |e: u32| embed(GroupKind::IntPower(1), GroupKind::Rational, Exponent::new(1, e as i64));
    let prime = |pi: QuadElem, e: u32, f: u32| -> Result<ExtensionPrime> {
        Ok(ExtensionPrime { p, pi, e, f, embedding: z_to_q(e)? })
    };
    let ramified = p == 2 || d.unsigned_abs().is_multiple_of(p);
    let residue = (0..p).any(|t| (t * t) as i64 % p as i64 == d.rem_euclid(p as i64));
    let (splitting, primes) = if ramified {
        let pi = norm_form_solution(p, d).ok_or_else(|| unsupported("no prime element found"))?;
        (Splitting::Ramified, vec![prime(pi, 2, 1)?])
    } else if residue {
        let pi = norm_form_solution(p, d).ok_or_else(|| unsupported("no prime element found"))?;
        (Splitting::Split, vec![prime(pi.clone(), 1, 1)?, prime(pi.conj(), 1, 1)?])
    } else {
        (Splitting::Inert, vec![prime(QuadElem::int(d, p as i64, 0), 1, 2)?])
    };
    Ok(ExtensionDatum { p, d, splitting, primes })
}

/// The fixed sample battery for `(p, d)`, built around the first prime
/// element of the oracle.
pub fn sample_battery(datum: &ExtensionDatum) -> Vec<QuadElem> {
    let (p, d) = (datum.p as i64, datum.d);
    let q = |n: i64, m: i64| QuadElem::rational(d, rational(n, m));
    let z = |a: i64, b: i64| QuadElem::int(d, a, b);
    let pi = datum.primes[0].pi.clone();
    let pq = rational(p, 1);
    let mut out = vec![
        q(0, 1),
        q(1, 1),
        q(-1, 1),
        q(2, 1),
        q(3, 1),
        q(p, 1),
        q(p * p, 1),
        q(2 * p, 1),
        q(p + 1, 1),
        q(1, p),
        q(1, p * p),
        q(7, 3),
        q(-6, 25),
        q(10, 7),
        q(3, 2 * p),
        z(0, 1),
        z(1, 1),
        z(1, -1),
        z(2, 1),
        z(2, -1),
        z(3, 2),
        z(0, p),
        pi.clone(),
        pi.conj(),
        pi.mul(&pi),
        pi.scale(&pq.recip()),
        pi.inverse().unwrap(),
        pi.inverse().unwrap().scale(&pq),
        pi.add(&pi.conj()),
        pi.sub(&pi.conj()),
        pi.add(&q(p, 1)),
        pi.conj().add(&z(0, p)),
        pi.pow(3).scale(&pq.recip()),
        z(1, 1).scale(&rational(1, 2)),
        z(1, 1).inverse().unwrap(),
        z(1, 1).scale(&pq.recip()),
        z(p + 1, p - 1),
        z(2, 1).mul(&z(1, 1)).scale(&rational(1, 3)),
        z(5, -3).scale(&rational(1, 11)),
        z(p * p, 1),
        z(1, p * p).scale(&rational(1, p)),
        pi.mul(&z(1, 2)),
        pi.conj().scale(&rational(-2, 7)),
        z(4, -7).scale(&rational(1, 9)),
        z(-3, 5),
        q(-12, 35),
        z(6, 1).scale(&rational(1, p * p * p)),
        z(1, -3).scale(&rational(p * p, 1)),
        z(7, 4),
        z(-5, 2).scale(&rational(2, 3)),
        z(11, -1).mul(&pi),
        z(0, 3).scale(&rational(1, p)),
        q(p * p * p, 13),
    ];
    let mut seen = Vec::new();
    out.retain(|x| {
        let fresh = !seen.contains(x);
        seen.push(x.clone());
        fresh
    });
    out
}

/// The four valuation axioms on all pairs of `samples`; returns the first
/// counterexample.
pub fn check_valuation_axioms(w: impl Fn(&QuadElem) -> GammaMax, samples: &[QuadElem]) -> Option<String> {
    let d = samples.first()?.d;
    if !w(&QuadElem::zero(d)).is_zero() {
        return Some("w(0) != 0".into());
    }
    if !w(&QuadElem::one(d)).is_one() {
        return Some("w(1) != 1".into());
    }
    for x in samples {
        let wx = w(x);
        for y in samples {
            let (wy, ws) = (w(y), w(&x.add(y)));
            if gm_mul(&wx, &wy).ok() != Some(w(&x.mul(y))) {
                return Some(format!("w(xy) != w(x)w(y) at x = {x}, y = {y}"));
            }
            if ws > wx.clone().max(wy.clone()) {
                return Some(format!("w(x+y) > w(x)+w(y) at x = {x}, y = {y}"));
            }
            if wx > ws.clone().max(wy) {
                return Some(format!("w(x) > w(x+y)+w(y) at x = {x}, y = {y}"));
            }
        }
    }
    None
}

/// Lattices built from the battery: principal lattices, pairwise sums and
/// the maximal order.
pub fn lattice_samples(p: u64, battery: &[QuadElem]) -> Vec<QuadLattice> {
    let d = battery[0].d;
    let principal: Vec<QuadLattice> = battery.iter().map(|x| QuadLattice::principal(p, x)).collect();
    let mut out = principal.clone();
    for (i, m) in principal.iter().enumerate().step_by(3) {
        for n in principal.iter().skip(i + 1).step_by(4) {
            out.push(lat_add(m, n).expect("one (p, d)"));
        }
    }
    out.push(QuadLattice::maximal_order(p, d));
    out.sort();
    out.dedup();
    out
}

/// One verified family of checks and the number of cases it covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub cases: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedExtension {
    pub datum: ExtensionDatum,
    pub battery: Vec<QuadElem>,
    pub checks: Vec<CheckLine>,
}

fn fail(what: String) -> Error {
    Error::VerificationFailed(what)
}

/// Runs the oracle and verifies each extension: valuation axioms, the
/// restriction `w|_Q = j∘v`, and that the attached lattice hom is a semiring
/// hom extending the one on `S_f(Q, Z_(p))`.
pub fn extend_valuation(p: u64, d: i64) -> Result<VerifiedExtension> {
    let datum = extension_oracle(p, d)?;
    let battery = sample_battery(&datum);
    let lattices = lattice_samples(p, &battery);
    let mut pairs = Vec::with_capacity(lattices.len() * lattices.len());
    for (i, m) in lattices.iter().enumerate() {
        for (k, n) in lattices.iter().enumerate() {
            pairs.push((i, k, lat_add(m, n)?, lat_mul(m, n)?));
        }
    }
    let j = restriction_embedding();
    let mut checks = Vec::new();
    let mut line = |name: String, cases: usize| checks.push(CheckLine { name, cases });

    let ef: u32 = datum.primes.iter().map(|pr| pr.e * pr.f).sum();
    if ef != 2 {
        return Err(fail(format!("sum of e*f is {ef}, expected 2")));
    }
    line("sum of e*f = 2".into(), 1);

    let rationals: Vec<Q> =
        battery.iter().filter(|x| x.is_rational()).map(|x| x.a.clone()).chain((-8..=8).map(|k| ppow(p, k))).collect();
    let qfracs: Vec<QfracIdeal> =
        core::iter::once(QfracIdeal::zero(p)).chain((-8..=8).map(|n| QfracIdeal::power(p, n))).collect();

    for (idx, pr) in datum.primes.iter().enumerate() {
        let tag = format!("w_{} ({})", idx + 1, pr.pi);
        let w = |x: &QuadElem| pr.value(x);

        if let Some(ce) = check_valuation_axioms(w, &battery) {
            return Err(fail(format!("{tag}: {ce}")));
        }
        line(format!("{tag}: valuation axioms"), battery.len() * battery.len());

        for q in &rationals {
            let x = QuadElem::rational(d, q.clone());
            if w(&x) != apply_gm(&j, &padic_value(p, q)) {
                return Err(fail(format!("{tag}: w({x}) != j(v({x}))")));
            }
        }
        line(format!("{tag}: restriction to Q equals j after v"), rationals.len());

        if datum.splitting != Splitting::Split {
            for x in &battery {
                let by_norm = vp(p, &x.norm()).map(|k| k / pr.f as i64);
                if pr.v_pi(x) != by_norm {
                    return Err(fail(format!("{tag}: v_pi({x}) disagrees with the norm formula")));
                }
            }
            line(format!("{tag}: v_pi = v_p(norm)/f"), battery.len());
        }

        let f = hom_from_valuation(p, d, GroupKind::Rational, w)?;
        let values: Vec<GammaMax> = lattices.iter().map(|m| f.apply(m)).collect();
        for (i, k, sum, prod) in &pairs {
            let (fm, fn_) = (&values[*i], &values[*k]);
            if f.apply(sum) != *fm.max(fn_) || Some(f.apply(prod)) != gm_mul(fm, fn_).ok() {
                return Err(fail(format!("{tag}: lattice hom fails at M = {}, N = {}", lattices[*i], lattices[*k])));
            }
        }
        line(format!("{tag}: lattice map is a semiring hom"), pairs.len());

        for i in &qfracs {
            let image = QuadLattice::from_qfrac(d, i);
            let expected = apply_gm(&j, &i.exponent.map_or(GammaMax::Zero, |n| padic_value(p, &ppow(p, n))));
            if f.apply(&image) != expected {
                return Err(fail(format!("{tag}: hom does not extend the one on S_f(Q, Z_({p})) at {i}")));
            }
        }
        line(format!("{tag}: hom extends the one on S_f(Q, Z_({p}))"), qfracs.len());

        let round = f.valuation();
        if let Some(x) = battery.iter().find(|x| round(x) != w(x)) {
            return Err(fail(format!("{tag}: round trip fails at {x}")));
        }
        line(format!("{tag}: valuation from hom recovers w"), battery.len());
    }

    if let [a, b] = datum.primes.as_slice() {
        if !battery.iter().any(|x| a.value(x) != b.value(x)) {
            return Err(fail("extensions agree on every sample".into()));
        }
        for x in &battery {
            let total = a.v_pi(x).zip(b.v_pi(x)).map(|(s, t)| s + t);
            if total != vp(p, &x.norm()) {
                return Err(fail(format!("v_pi + v_pibar != v_p(norm) at {x}")));
            }
        }
        line("extensions are distinguished; v_pi + v_pibar = v_p(norm)".into(), battery.len());
    }
    Ok(VerifiedExtension { datum, battery, checks })
}

/// Outcome of the integral-relation search for one sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralRelationReport {
    pub x: QuadElem,
    /// A lattice `M ∋ 1` with `xM ⊆ M`, if one was found.
    pub witness: Option<QuadLattice>,
    /// `c_0, c_1` in `X² ≤ c_0 + c_1 X`, from `T² - tr(x)T + N(x)`.
    pub coefficients: [QuadLattice; 2],
    /// The witness search agrees with the coefficients, and when a witness
    /// exists the inequality holds.
    pub consistent: bool,
}

pub const WITNESS_STEPS: usize = 8;

/// `M_0 = Z_(p)`, `M_{k+1} = M_k + x M_k` until `x M_k ⊆ M_k`.
pub fn integral_witness(p: u64, x: &QuadElem) -> Option<QuadLattice> {
    let xl = QuadLattice::principal(p, x);
    let mut m = QuadLattice::identity(p, x.d);
    for _ in 0..=WITNESS_STEPS {
        let xm = lat_mul(&xl, &m).ok()?;
        if lat_leq(&xm, &m).ok()? {
            return Some(m);
        }
        m = lat_add(&m, &xm).ok()?;
    }
    None
}

pub fn check_integral_relations(p: u64, samples: &[QuadElem]) -> Vec<IntegralRelationReport> {
    samples
        .iter()
        .map(|x| {
            let s = LatticeSemiring { p, d: x.d };
            let witness = integral_witness(p, x);
            let (tr, n) = (x.trace(), x.norm());
            let coefficients = [
                QuadLattice::principal(p, &QuadElem::rational(x.d, -&n)),
                QuadLattice::principal(p, &QuadElem::rational(x.d, tr.clone())),
            ];
            let integral_coeffs = is_local_integer(p, &tr) && is_local_integer(p, &n);
            let xl = QuadLattice::principal(p, x);
            let rhs = s.add(&coefficients[0], &s.mul(&coefficients[1], &xl));
            let holds = s.leq(&s.mul(&xl, &xl), &rhs);
            let consistent = witness.is_some() == integral_coeffs && (witness.is_none() || holds);
            IntegralRelationReport { x: x.clone(), witness, coefficients, consistent }
        })
        .collect()
}

/// Principal lattices of nonzero samples are invertible, rank-2 lattices are
/// sums of the principal lattices of their basis rows, and a window of
/// `S_f(Q(√d), Z_(p))` closed under sums is unitgenerated.
pub fn check_principal_invertible(p: u64, samples: &[QuadElem]) -> Result<bool> {
    let Some(d) = samples.first().map(|x| x.d) else { return Ok(true) };
    let s = LatticeSemiring { p, d };
    let one = s.one();
    for x in samples.iter().filter(|x| !x.is_zero()) {
        let inv = QuadLattice::principal(p, &x.inverse().unwrap());
        if s.mul(&QuadLattice::principal(p, x), &inv) != one {
            return Ok(false);
        }
    }
    for m in lattice_samples(p, samples).iter().filter(|m| m.rank() == 2) {
        let rows: Vec<QuadLattice> = m.basis().iter().map(|b| QuadLattice::principal(p, b)).collect();
        if s.add(&rows[0], &rows[1]) != *m || rows.iter().any(|r| s.inverse(r).is_none()) {
            return Ok(false);
        }
    }
    let mut window: Vec<QuadLattice> = vec![s.zero(), one];
    for x in samples.iter().filter(|x| !x.is_zero()).take(5) {
        window.push(QuadLattice::principal(p, x));
        window.push(QuadLattice::principal(p, &x.inverse().unwrap()));
    }
    window.sort();
    window.dedup();
    loop {
        let mut next = window.clone();
        for a in &window {
            for b in &window {
                next.push(s.add(a, b));
            }
        }
        next.sort();
        next.dedup();
        if next.len() == window.len() {
            break;
        }
        window = next;
    }
    let c = Carrier::new(s, window)?;
    Ok(!units(&c).is_empty() && is_unitgenerated(&c))
}

/// On the window `|n| ≤ bound` of `S_f(Q, Z_(p))` contracted over the part
/// below `1`: the classes and their order are those of `n ↦ γ^{-n}`, and
/// the unit ball is exactly the scalars.
pub fn check_qfrac_contraction(p: u64, bound: i64) -> Result<bool> {
    let s = QfracSemiring { p };
    let c = Carrier::new(s, s.window(bound))?;
    let scalars = c.subset_where(qf_subsemigroup_of_submodule(QSubmodule::Ideal(QfracIdeal::power(p, 0))));
    let values = c.elems().iter().map(|i| i.exponent.map_or(GammaMax::Zero, |n| padic_value(p, &ppow(p, n)))).collect();
    let v = ValuationHom::new(GroupKind::IntPower(1), values);
    Ok(v.is_valuation_on(&c)?
        && check_contraction_is_value_map(&c, &scalars, &v)
        && check_unit_ball_classes(&c, &scalars))
}
