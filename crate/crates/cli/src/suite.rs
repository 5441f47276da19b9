//! A fixed, seeded run over the corpus and the extension instances.

use charone_core::frac_ideal::{lat_add, lat_mul, ppow, rational, QuadElem, QuadLattice, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::{self, CongruenceFilter, Outcome};
use crate::corpus::CORPUS;
use crate::report::Report;

pub const EXTENSION_CASES: [(u64, i64); 3] = [(5, -1), (2, -1), (3, -1)];

/// A coordinate `c/m · p^k` with `|c| ≤ 9`, `m` prime to `p` and `|k| ≤ 6`.
pub fn random_coord(rng: &mut impl Rng, p: u64) -> Q {
    let c = rng.gen_range(-9i64..=9);
    let m = [1i64, 1, 1, 2, 3, 7][rng.gen_range(0..6)];
    let m = if (m as u64).is_multiple_of(p) { 1 } else { m };
    rational(c, m) * ppow(p, rng.gen_range(-6..=6))
}

/// Up to three random generators.
pub fn random_generators(rng: &mut impl Rng, p: u64, d: i64) -> Vec<QuadElem> {
    let k = rng.gen_range(0..=3);
    (0..k).map(|_| QuadElem::new(d, random_coord(rng, p), random_coord(rng, p))).collect()
}

fn lattice_report(rng: &mut ChaCha8Rng, p: u64, d: i64, pairs: usize) -> Report {
    let mut report = Report::new("lattice-sample", format!("p={p} d={d}"), format!("{pairs} pairs"));
    for _ in 0..pairs {
        let m = QuadLattice::from_generators(p, d, &random_generators(rng, p, d));
        let n = QuadLattice::from_generators(p, d, &random_generators(rng, p, d));
        let (s, t) = (lat_add(&m, &n).expect("same (p, d)"), lat_mul(&m, &n).expect("same (p, d)"));
        report.witnesses.push(format!("M = {m}; N = {n}; M+N = {s}; MN = {t}"));
    }
    report
}

fn collect(out: &mut Vec<Report>, command: &str, input: &str, r: Result<Outcome, commands::InputError>) {
    out.push(match r {
        Ok(o) => o.report,
        Err(e) => {
            let mut rep = Report::new(command, input, "input error");
            rep.counterexample = Some(e.0);
            rep
        }
    });
}

pub fn run(seed: u64) -> Vec<Report> {
    let mut out = Vec::new();
    for (name, _) in CORPUS {
        collect(&mut out, "validate", name, commands::validate(name));
        collect(&mut out, "orders", name, commands::orders(name, true));
        collect(&mut out, "congruences", name, commands::list_congruences(name, CongruenceFilter::Prime));
        collect(&mut out, "reduce", name, commands::reduce(name));
    }
    collect(&mut out, "closure", "b_z2.sr", commands::closure("b_z2.sr", "0,1"));
    collect(&mut out, "contract", "c3.sr", commands::contract("c3.sr", "0,a,1"));
    collect(&mut out, "admissible", "c3.sr", commands::admissible("c3.sr", "1>a"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (p, d) in EXTENSION_CASES {
        collect(&mut out, "extend", &format!("p={p} d={d}"), commands::extend(p, d));
        out.push(lattice_report(&mut rng, p, d, 25));
    }
    out
}

pub fn to_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}
