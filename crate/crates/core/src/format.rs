//! Line-oriented text formats. `#` starts a comment; blank lines are ignored.
//!
//! Digroup:
//! ```text
//! digroup <n>
//! star
//! <n rows of n indices>
//! circ
//! <n rows of n indices>
//! ```
//!
//! Action of `Y` on `K`:
//! ```text
//! action <|Y|> <|K|>
//! phi_star: <|K| indices>     # three lines per y = 0..|Y|
//! phi_circ: <|K| indices>
//! lambda: <|K| indices>
//! ```
//!
//! Yang–Baxter solution: `ybe <n>` followed by `n²` lines `x y fx fy` in
//! row-major order of `(x, y)`.

use std::fmt::Write as _;

use crate::digroup::Digroup;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::map::ElementMap;
use crate::semidirect::DigroupAction;
use crate::ybe::SetSolution;

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self, expected: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l))
            }
            None => Err(Error::parse(
                self.last + 1,
                format!("unexpected end of input, expected {expected}"),
            )),
        }
    }

    fn is_done(&mut self) -> bool {
        self.inner.peek().is_none()
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let (n, l) = self.next(word)?;
        if l != word {
            return Err(Error::parse(n, format!("expected `{word}`, found `{l}`")));
        }
        Ok(())
    }

    /// `<word> <k integers>`.
    fn header(&mut self, word: &str, k: usize) -> Result<(usize, Vec<usize>)> {
        let (n, l) = self.next(word)?;
        let mut parts = l.split_whitespace();
        if parts.next() != Some(word) {
            return Err(Error::parse(
                n,
                format!("expected `{word}` header, found `{l}`"),
            ));
        }
        let values = indices(n, parts)?;
        if values.len() != k {
            return Err(Error::parse(
                n,
                format!("`{word}` header takes {k} integer(s)"),
            ));
        }
        Ok((n, values))
    }

    fn row(&mut self, what: &str, len: usize) -> Result<(usize, Vec<usize>)> {
        let (n, l) = self.next(what)?;
        let values = indices(n, l.split_whitespace())?;
        if values.len() != len {
            return Err(Error::parse(
                n,
                format!("{what} has {} entries, expected {len}", values.len()),
            ));
        }
        Ok((n, values))
    }

    fn labelled_row(&mut self, label: &str, len: usize) -> Result<(usize, Vec<usize>)> {
        let (n, l) = self.next(label)?;
        let rest = l
            .strip_prefix(label)
            .and_then(|r| r.strip_prefix(':'))
            .ok_or_else(|| Error::parse(n, format!("expected `{label}:`, found `{l}`")))?;
        let values = indices(n, rest.split_whitespace())?;
        if values.len() != len {
            return Err(Error::parse(
                n,
                format!("{label} has {} entries, expected {len}", values.len()),
            ));
        }
        Ok((n, values))
    }
}

fn indices<'a>(line: usize, parts: impl Iterator<Item = &'a str>) -> Result<Vec<usize>> {
    parts
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("`{p}` is not a non-negative integer")))
        })
        .collect()
}

fn check_range(line: usize, values: &[usize], order: usize) -> Result<()> {
    match values.iter().find(|&&v| v >= order) {
        Some(v) => Err(Error::parse(
            line,
            format!("index {v} out of range for order {order}"),
        )),
        None => Ok(()),
    }
}

fn table(lines: &mut Lines, name: &str, n: usize) -> Result<FiniteGroup> {
    lines.keyword(name)?;
    let mut flat = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (line, row) = lines.row(&format!("{name} row"), n)?;
        check_range(line, &row, n)?;
        flat.extend(row);
    }
    FiniteGroup::from_flat(n, flat).map_err(|e| Error::validation(format!("{name} table"), e))
}

fn dgt_block(lines: &mut Lines) -> Result<Digroup> {
    let (_, h) = lines.header("digroup", 1)?;
    let n = h[0];
    if n == 0 {
        return Err(Error::parse(lines.last, "order must be positive"));
    }
    let star = table(lines, "star", n)?;
    let circ = table(lines, "circ", n)?;
    Digroup::new(star, circ).map_err(|e| Error::validation("digroup", e))
}

fn expect_end(lines: &mut Lines) -> Result<()> {
    match lines.inner.next() {
        Some((n, l)) => Err(Error::parse(n, format!("trailing content `{l}`"))),
        None => Ok(()),
    }
}

pub fn parse_dgt(text: &str) -> Result<Digroup> {
    let mut lines = Lines::new(text);
    let d = dgt_block(&mut lines)?;
    expect_end(&mut lines)?;
    Ok(d)
}

/// Any number of concatenated digroup blocks.
pub fn parse_dgt_many(text: &str) -> Result<Vec<Digroup>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while !lines.is_done() {
        out.push(dgt_block(&mut lines)?);
    }
    Ok(out)
}

fn push_row(out: &mut String, row: &[usize]) {
    let strs: Vec<String> = row.iter().map(usize::to_string).collect();
    out.push_str(&strs.join(" "));
    out.push('\n');
}

/// `2n + 3` lines.
pub fn emit_dgt(d: &Digroup) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digroup {}", d.order());
    for (name, g) in [("star", d.star()), ("circ", d.circ())] {
        out.push_str(name);
        out.push('\n');
        for row in g.rows() {
            push_row(&mut out, row);
        }
    }
    out
}

pub fn parse_action(text: &str, y: &Digroup, k: &Digroup) -> Result<DigroupAction> {
    let mut lines = Lines::new(text);
    let (line, h) = lines.header("action", 2)?;
    if h[0] != y.order() || h[1] != k.order() {
        return Err(Error::parse(
            line,
            format!(
                "header declares {}×{}, digroups have orders {} and {}",
                h[0],
                h[1],
                y.order(),
                k.order()
            ),
        ));
    }
    let nk = k.order();
    let mut maps: [Vec<ElementMap>; 3] = Default::default();
    for _ in 0..y.order() {
        for (slot, label) in ["phi_star", "phi_circ", "lambda"].iter().enumerate() {
            let (line, row) = lines.labelled_row(label, nk)?;
            check_range(line, &row, nk)?;
            maps[slot]
                .push(ElementMap::new(nk, row).map_err(|e| Error::parse(line, e.to_string()))?);
        }
    }
    expect_end(&mut lines)?;
    let [phi_star, phi_circ, lambda] = maps;
    DigroupAction::new(y.clone(), k.clone(), phi_star, phi_circ, lambda)
        .map_err(|e| Error::validation("action", e))
}

pub fn emit_action(act: &DigroupAction) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "action {} {}",
        act.acting().order(),
        act.acted_on().order()
    );
    for y in 0..act.acting().order() {
        for (label, maps) in [
            ("phi_star", act.phi_star()),
            ("phi_circ", act.phi_circ()),
            ("lambda", act.lambda()),
        ] {
            let _ = writeln!(out, "{label}: {}", maps[y]);
        }
    }
    out
}

pub fn parse_solution(text: &str) -> Result<SetSolution> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("ybe", 1)?;
    let n = h[0];
    let mut first = Vec::with_capacity(n * n);
    let mut second = Vec::with_capacity(n * n);
    for p in 0..n * n {
        let (line, row) = lines.row("solution line", 4)?;
        check_range(line, &row, n)?;
        if (row[0], row[1]) != (p / n, p % n) {
            return Err(Error::parse(
                line,
                format!(
                    "expected pair ({}, {}), found ({}, {})",
                    p / n,
                    p % n,
                    row[0],
                    row[1]
                ),
            ));
        }
        first.push(row[2]);
        second.push(row[3]);
    }
    expect_end(&mut lines)?;
    SetSolution::new(n, first, second).map_err(|e| Error::validation("solution", e))
}

pub fn emit_solution(r: &SetSolution) -> String {
    let n = r.size();
    let mut out = String::new();
    let _ = writeln!(out, "ybe {n}");
    for x in 0..n {
        for y in 0..n {
            let (a, b) = r.apply(x, y);
            let _ = writeln!(out, "{x} {y} {a} {b}");
        }
    }
    out
}
