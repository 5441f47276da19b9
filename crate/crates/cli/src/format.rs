//! The `.sr` table format.
//!
//! ```text
//! # comment
//! semiring B
//! elements: 0 1
//! zero: 0
//! one: 1
//! add:
//! 0 1
//! 1 1
//! mul:
//! 0 0
//! 0 1
//! ```

use std::fmt::Write;

use charone_core::finite::{validate, Violation};
use charone_core::FiniteSemiring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

/// A parsed table that has not been checked against the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTable {
    pub name: String,
    pub names: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl RawTable {
    pub fn violations(&self) -> Vec<Violation> {
        validate(&self.names, &self.add, &self.mul, self.zero, self.one)
    }

    pub fn build(self) -> Result<FiniteSemiring, Vec<Violation>> {
        FiniteSemiring::new(self.name, self.names, self.add, self.mul, self.zero, self.one).map_err(|e| match e {
            charone_core::Error::Axioms(v) => v,
            other => unreachable!("table construction only fails on axioms: {other}"),
        })
    }
}

fn err(line: usize, message: String) -> FormatError {
    FormatError { line, message }
}

fn next_key<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    last: usize,
) -> Result<(usize, String), FormatError> {
    let (no, line) = lines.next().ok_or_else(|| err(last, format!("expected `{key}`")))?;
    let rest = line.strip_prefix(key).ok_or_else(|| err(no, format!("expected `{key}`, found `{line}`")))?;
    Ok((no, rest.trim().to_string()))
}

pub fn parse(text: &str) -> Result<RawTable, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let last = text.lines().count();

    let (no, name) = next_key(&mut lines, "semiring", last)?;
    if name.is_empty() {
        return Err(err(no, "missing semiring name".into()));
    }
    let (no, elems) = next_key(&mut lines, "elements:", last)?;
    let names: Vec<String> = elems.split_whitespace().map(String::from).collect();
    if names.is_empty() {
        return Err(err(no, "no elements".into()));
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(err(no, format!("duplicate element `{a}`")));
        }
    }
    let lookup =
        |no: usize, s: &str| names.iter().position(|n| n == s).ok_or_else(|| err(no, format!("unknown element `{s}`")));
    let (no, z) = next_key(&mut lines, "zero:", last)?;
    let zero = lookup(no, &z)?;
    let (no, o) = next_key(&mut lines, "one:", last)?;
    let one = lookup(no, &o)?;
    let n = names.len();
    let mut tables = Vec::new();
    for key in ["add:", "mul:"] {
        let (no, rest) = next_key(&mut lines, key, last)?;
        if !rest.is_empty() {
            return Err(err(no, format!("rows of `{key}` start on the next line")));
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (no, line) = lines.next().ok_or_else(|| err(last, format!("`{key}` needs {n} rows")))?;
            let row = line.split_whitespace().map(|s| lookup(no, s)).collect::<Result<Vec<_>, _>>()?;
            if row.len() != n {
                return Err(err(no, format!("row has {} entries, expected {n}", row.len())));
            }
            rows.push(row);
        }
        tables.push(rows);
    }
    if let Some((no, line)) = lines.next() {
        return Err(err(no, format!("unexpected `{line}`")));
    }
    let mul = tables.pop().unwrap();
    let add = tables.pop().unwrap();
    Ok(RawTable { name, names, add, mul, zero, one })
}

pub fn render(r: &FiniteSemiring) -> String {
    let width = r.names().iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut s = String::new();
    let _ = writeln!(s, "semiring {}", r.name());
    let _ = writeln!(s, "elements: {}", r.names().join(" "));
    let _ = writeln!(s, "zero: {}", r.element_name(r.zero_index()));
    let _ = writeln!(s, "one: {}", r.element_name(r.one_index()));
    for (key, op) in
        [("add:", FiniteSemiring::sum as fn(&FiniteSemiring, usize, usize) -> usize), ("mul:", FiniteSemiring::product)]
    {
        let _ = writeln!(s, "{key}");
        for x in r.elements() {
            let row: Vec<String> = r.elements().map(|y| format!("{:width$}", r.element_name(op(r, x, y)))).collect();
            let _ = writeln!(s, "{}", row.join(" ").trim_end());
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for r in [FiniteSemiring::boolean(), FiniteSemiring::chain(3), FiniteSemiring::b_z2()] {
            let text = render(&r);
            assert_eq!(parse(&text).unwrap().build().unwrap(), r);
        }
    }

    #[test]
    fn errors_carry_lines() {
        let bad = "semiring X\nelements: 0 1\nzero: 0\none: 2\n";
        assert_eq!(parse(bad).unwrap_err().line, 4);
        let short = "semiring X\nelements: 0 1\nzero: 0\none: 1\nadd:\n0 1\n";
        assert!(parse(short).is_err());
        let dup = "semiring X\nelements: 0 0\n";
        assert!(parse(dup).unwrap_err().message.contains("duplicate"));
    }

    #[test]
    fn comments_and_spacing() {
        let text = "# B\nsemiring B\n\nelements: 0 1  # two\nzero: 0\none: 1\nadd:\n0 1\n1 1\nmul:\n0   0\n0 1\n";
        assert_eq!(parse(text).unwrap().build().unwrap(), FiniteSemiring::boolean());
    }
}
