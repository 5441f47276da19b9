use std::fmt::Write;
use std::path::Path;

use charone_core::finite::{congruences, is_prime, is_qc, radical_test, reduction};
use charone_core::frac_ideal::extend_valuation;
use charone_core::idem::{is_simple, is_unitgenerated, simplicity_counterexample, unitgeneration_counterexample};
use charone_core::integrality::{
    contracted_semiring, is_integral, is_quasiintegral, quasiintegral_closure, IntegralResult,
};
use charone_core::order::{enumerate_valuation_orders, hom_from_order, Admissibility};
use charone_core::{Error, FiniteSemiring, Subset};

use crate::corpus::{bundled, CORPUS};
use crate::format::{self, RawTable};
use crate::report::Report;

/// Malformed input or an unmet precondition; exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

/// A finished command. `failed` marks a verification failure (exit 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(report: Report, text: String) -> Self {
        Outcome { report, text, failed: false }
    }
}

type CmdResult = Result<Outcome, InputError>;

/// Reads `path`, falling back to the bundled corpus by file name.
pub fn load_raw(path: &str) -> Result<RawTable, InputError> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let name = Path::new(path).file_name().and_then(|n| n.to_str()).unwrap_or(path);
            bundled(name).map(String::from).ok_or_else(|| InputError(format!("{path}: {e}")))?
        }
    };
    format::parse(&text).map_err(|e| InputError(format!("{path}: {e}")))
}

pub fn load(path: &str) -> Result<FiniteSemiring, InputError> {
    load_raw(path)?.build().map_err(|v| InputError(format!("{path}: not an idempotent semiring: {}", v[0])))
}

fn elements(r: &FiniteSemiring, list: &str) -> Result<Vec<usize>, InputError> {
    list.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| r.index_of(s).ok_or_else(|| InputError(format!("unknown element `{s}` in {}", r.name()))))
        .collect()
}

fn names(r: &FiniteSemiring, s: &Subset) -> String {
    let v: Vec<&str> = s.iter().map(|i| r.element_name(i)).collect();
    format!("{{{}}}", v.join(", "))
}

pub fn validate(path: &str) -> CmdResult {
    let raw = load_raw(path)?;
    let violations = raw.violations();
    if !violations.is_empty() {
        let mut report = Report::new("validate", path, "violation");
        report.witnesses = violations.iter().map(ToString::to_string).collect();
        report.counterexample = Some(violations[0].to_string());
        let mut text = format!("error: {} violates {} axiom instance(s)\n", raw.name, violations.len());
        for v in &violations {
            let _ = writeln!(text, "  {v}");
        }
        return Ok(Outcome { report, text, failed: true });
    }
    let r = raw.build().expect("validated");
    let c = r.carrier();
    let simple = is_simple(&c);
    let ug = is_unitgenerated(&c);
    let line = format!(
        "ok: idempotent semiring, {} elements, {}, {}",
        r.size(),
        if simple { "simple" } else { "not simple" },
        if ug { "unitgenerated" } else { "not unitgenerated" }
    );
    let mut report = Report::new("validate", path, line.clone());
    if let Some(x) = simplicity_counterexample(&c) {
        report.witnesses.push(format!("no y with {}·y ≥ 1", r.element_name(x)));
    }
    if let Some(x) = unitgeneration_counterexample(&c) {
        report.witnesses.push(format!("{} is not a sum of units", r.element_name(x)));
    }
    let mut text = line;
    for w in &report.witnesses {
        let _ = write!(text, "\n  {w}");
    }
    text.push('\n');
    Ok(Outcome::ok(report, text))
}

pub fn orders(path: &str, degenerate: bool) -> CmdResult {
    let r = load(path)?;
    let all = enumerate_valuation_orders(&r, true)?;
    let nondegenerate = all.iter().filter(|rel| !rel.is_degenerate(&r)).count();
    let summary = format!("{} valuation orders ({} nondegenerate)", all.len(), nondegenerate);
    let mut report = Report::new("orders", path, summary.clone());
    let mut text = summary + "\n";
    for (i, rel) in all.iter().enumerate().filter(|(_, rel)| degenerate || !rel.is_degenerate(&r)) {
        let pairs: Vec<String> =
            rel.pairs().iter().map(|&(x, y)| format!("{}⪯{}", r.element_name(x), r.element_name(y))).collect();
        let _ = writeln!(text, "\norder {}:\n{}", i + 1, rel.render(&r));
        if rel.is_degenerate(&r) {
            let _ = writeln!(text, "degenerate (1 ⪯ 0)");
            report.witnesses.push(format!("degenerate: {}", pairs.join(" ")));
            continue;
        }
        let h = hom_from_order(rel, &r)?;
        let values: Vec<String> = r.elements().map(|x| format!("{} ↦ {}", r.element_name(x), h.hom.value(x))).collect();
        let _ = writeln!(
            text,
            "classes: {}\nquotient: {} ({} elements)\nvalues: {}",
            h.congruence.render(&r),
            h.quotient.name(),
            h.quotient.size(),
            values.join(", ")
        );
        report.witnesses.push(pairs.join(" "));
    }
    Ok(Outcome::ok(report, text))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceFilter {
    All,
    Prime,
    Qc,
    Radical,
}

pub fn list_congruences(path: &str, filter: CongruenceFilter) -> CmdResult {
    let r = load(path)?;
    let mut kept = Vec::new();
    for c in congruences(&r)? {
        let keep = match filter {
            CongruenceFilter::All => true,
            CongruenceFilter::Prime => is_prime(&c, &r),
            CongruenceFilter::Qc => is_qc(&c, &r),
            CongruenceFilter::Radical => radical_test(&c, &r)?,
        };
        if keep {
            kept.push(c.render(&r));
        }
    }
    let kind = match filter {
        CongruenceFilter::All => "congruences",
        CongruenceFilter::Prime => "prime congruences",
        CongruenceFilter::Qc => "QC congruences",
        CongruenceFilter::Radical => "radical congruences",
    };
    let summary = format!("{} {kind}", kept.len());
    let mut report = Report::new("congruences", path, summary.clone());
    let text = format!("{summary}\n{}", kept.iter().map(|c| format!("  {c}\n")).collect::<String>());
    report.witnesses = kept;
    Ok(Outcome::ok(report, text))
}

pub fn reduce(path: &str) -> CmdResult {
    let r = load(path)?;
    let red = reduction(&r)?;
    let summary = if red.congruence.is_equality() { "reduced" } else { "not reduced" };
    let mut report = Report::new("reduce", path, summary);
    let classes = red.congruence.render(&r);
    let mut text = format!("{summary}\nclasses: {classes}\n");
    if red.degenerate {
        text.push_str("warning: no prime congruence; the reduction is the one-point semiring\n");
        report.witnesses.push("degenerate".into());
    }
    text.push_str(&format::render(&red.quotient.semiring));
    report.witnesses.push(classes);
    Ok(Outcome::ok(report, text))
}

fn relation_text(r: &FiniteSemiring, x: usize, w: &IntegralResult<usize>) -> String {
    match w {
        IntegralResult::Integral(w) => {
            let name = r.element_name(x);
            let terms: Vec<String> = w
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| match i {
                    0 => r.element_name(c).to_string(),
                    1 => format!("{}·{name}", r.element_name(c)),
                    _ => format!("{}·{name}^{i}", r.element_name(c)),
                })
                .collect();
            format!("{name}^{} ≤ {}", w.degree, terms.join(" + "))
        }
        IntegralResult::NotIntegral => "not integral".into(),
        IntegralResult::Unknown { bound } => format!("no relation up to degree {bound}"),
    }
}

pub fn closure(path: &str, sub: &str) -> CmdResult {
    let r = load(path)?;
    let c = r.carrier();
    let scalars = c.subset_of(&elements(&r, sub)?);
    let closed = quasiintegral_closure(&c, &scalars)?;
    let summary = format!("quasiintegral closure {}", names(&r, &closed));
    let mut report = Report::new("closure", path, summary.clone());
    let mut text = summary + "\n";
    for x in closed.iter() {
        let s = is_quasiintegral(&c, &scalars, x)?.expect("in the closure");
        let rel = relation_text(&r, x, &is_integral(&c, &scalars, x)?);
        let line = format!("{}: s = {}; {rel}", r.element_name(x), r.element_name(s));
        let _ = writeln!(text, "  {line}");
        report.witnesses.push(line);
    }
    Ok(Outcome::ok(report, text))
}

pub fn contract(path: &str, sub: &str) -> CmdResult {
    let r = load(path)?;
    let scalars = r.carrier().subset_of(&elements(&r, sub)?);
    let (k, q) = contracted_semiring(&r, &scalars)?;
    let classes = k.congruence().render(&r);
    let summary = format!("{} classes {classes}", k.num_classes());
    let mut report = Report::new("contract", path, summary.clone());
    let mut text = summary + "\n";
    let reps: Vec<usize> = k.classes().iter().map(|c| c[0]).collect();
    for &a in &reps {
        for &b in &reps {
            if a != b && k.leq(a, b) {
                let line = format!("[{}] ≤ [{}]", r.element_name(a), r.element_name(b));
                let _ = writeln!(text, "  {line}");
                report.witnesses.push(line);
            }
        }
    }
    text.push_str(&format::render(&q.semiring));
    Ok(Outcome::ok(report, text))
}

fn parse_pairs(r: &FiniteSemiring, text: &str) -> Result<Vec<(usize, usize)>, InputError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (x, y) = t.split_once('>').ok_or_else(|| InputError(format!("expected `x>y`, found `{t}`")))?;
            let [x, y] = [x, y].map(|s| elements(r, s)).map(|v| {
                v.and_then(|v| match v.as_slice() {
                    [i] => Ok(*i),
                    _ => Err(InputError(format!("expected one element in `{t}`"))),
                })
            });
            Ok((x?, y?))
        })
        .collect()
}

pub fn admissible(path: &str, pairs: &str) -> CmdResult {
    let r = load(path)?;
    let s = parse_pairs(&r, pairs)?;
    let a = Admissibility::new(&r)?;
    let coherent = a.check_coherence(&s)?;
    let rendered: Vec<String> =
        s.iter().map(|&(x, y)| format!("{}>{}", r.element_name(x), r.element_name(y))).collect();
    let input = format!("{path} {}", rendered.join(","));
    let Some(rel) = a.witness(&s) else {
        let mut report = Report::new("admissible", input, "not admissible");
        let failed = !coherent;
        if failed {
            report.counterexample = Some("subset admissibility disagrees with the whole set".into());
        }
        return Ok(Outcome { report, text: "not admissible\n".into(), failed });
    };
    let h = hom_from_order(rel, &r)?;
    let mut report = Report::new("admissible", input, "admissible");
    let values: Vec<String> = r.elements().map(|x| format!("{} ↦ {}", r.element_name(x), h.hom.value(x))).collect();
    report.witnesses = values.clone();
    let mut text = format!("admissible\nwitness: {}\n", values.join(", "));
    if !coherent {
        report.counterexample = Some("a subset is not admissible".into());
        text.push_str("coherence check failed: a subset is not admissible\n");
    }
    Ok(Outcome { report, text, failed: !coherent })
}

pub fn extend(p: u64, d: i64) -> CmdResult {
    let input = format!("p={p} d={d}");
    let v = match extend_valuation(p, d) {
        Ok(v) => v,
        Err(Error::VerificationFailed(ce)) => {
            let mut report = Report::new("extend", input, "FAIL");
            report.counterexample = Some(ce.clone());
            return Ok(Outcome { report, text: format!("verification: FAIL\ncounterexample: {ce}\n"), failed: true });
        }
        Err(e) => return Err(e.into()),
    };
    let dat = &v.datum;
    let mut report = Report::new("extend", input, "PASS");
    let mut text = format!(
        "Q(sqrt({d})) over Z_({p}): {}, {} extension{}\n",
        dat.splitting,
        dat.primes.len(),
        if dat.primes.len() == 1 { "" } else { "s" }
    );
    for (i, pr) in dat.primes.iter().enumerate() {
        let line = format!("w_{}: e={} f={} pi={} scale={}", i + 1, pr.e, pr.f, pr.pi, pr.scale());
        let _ = writeln!(text, "{line}");
        report.witnesses.push(line);
    }
    let _ = writeln!(text, "checks on {} samples:", v.battery.len());
    for c in &v.checks {
        let line = format!("{}: {} cases", c.name, c.cases);
        let _ = writeln!(text, "  {line}");
        report.witnesses.push(line);
    }
    text.push_str("verification: PASS\n");
    Ok(Outcome::ok(report, text))
}

pub fn corpus() -> CmdResult {
    let mut report = Report::new("corpus", "", format!("{} bundled tables", CORPUS.len()));
    let mut text = String::new();
    for (name, body) in CORPUS {
        let r = format::parse(body).expect("bundled tables parse").build().expect("bundled tables validate");
        let line = format!("{name}: {} ({} elements)", r.name(), r.size());
        let _ = writeln!(text, "{line}");
        report.witnesses.push(line);
    }
    Ok(Outcome::ok(report, text))
}

/// Render for the chosen output mode.
pub fn render(o: &Outcome, json: bool) -> String {
    if json {
        o.report.to_json() + "\n"
    } else {
        o.text.clone()
    }
}
