//! Text formats.
//!
//! Tournament files (`.trn`): line 1 is the vertex count `n`, line 2 is a
//! bitstring of length `n(n-1)/2` listing the pairs `(i, j)` with `i < j` in
//! row-major order, where '1' means the arc goes `i -> j`.
//!
//! Digraph files (`.dg`): line 1 is `n m`, followed by `m` lines `u v`, each
//! an arc `u -> v` with 0-based endpoints.

use crate::digraph::{Digraph, Tournament};
use crate::error::Error;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits into lines, rejecting anything after the expected content.
fn content_lines(input: &str, expected: usize) -> Result<Vec<&str>, Error> {
    let mut lines = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let trimmed = line.trim();
        if lines.len() == expected {
            if !trimmed.is_empty() {
                return Err(parse_err(i + 1, "trailing garbage after expected content"));
            }
            continue;
        }
        if trimmed.is_empty() {
            return Err(parse_err(i + 1, "unexpected blank line"));
        }
        lines.push(trimmed);
    }
    if lines.len() < expected {
        return Err(parse_err(
            input.lines().count() + 1,
            format!("expected {expected} content lines, found {}", lines.len()),
        ));
    }
    Ok(lines)
}

pub fn parse_trn(input: &str) -> Result<Tournament, Error> {
    let all: Vec<&str> = input.lines().collect();
    let first = all.first().map(|l| l.trim()).unwrap_or("");
    let n: usize = first
        .parse()
        .map_err(|_| parse_err(1, format!("bad vertex count {first:?}")))?;
    if n == 0 {
        return Err(parse_err(1, "tournament needs at least one vertex"));
    }
    // The bit line is legitimately empty for n = 1.
    let bits = all.get(1).map(|l| l.trim()).unwrap_or("");
    let want = n * (n - 1) / 2;
    if bits.len() != want {
        return Err(parse_err(
            2,
            format!("expected {want} bits for n={n}, found {}", bits.len()),
        ));
    }
    for (i, extra) in all.iter().enumerate().skip(2) {
        if !extra.trim().is_empty() {
            return Err(parse_err(i + 1, "trailing garbage after expected content"));
        }
    }
    let mut arcs = Vec::with_capacity(want);
    for (pos, c) in bits.chars().enumerate() {
        let (i, j) = pair_at(n, pos);
        match c {
            '1' => arcs.push((i, j)),
            '0' => arcs.push((j, i)),
            other => {
                return Err(parse_err(
                    2,
                    format!("bit {pos} is {other:?}, expected '0' or '1'"),
                ))
            }
        }
    }
    let d = Digraph::from_arcs(n, &arcs).map_err(|e| parse_err(2, e.to_string()))?;
    Tournament::try_new(d).map_err(|e| parse_err(2, e.to_string()))
}

/// Pair at row-major position `pos` among all (i, j) with i < j.
fn pair_at(n: usize, mut pos: usize) -> (usize, usize) {
    for i in 0..n {
        let row = n - 1 - i;
        if pos < row {
            return (i, i + 1 + pos);
        }
        pos -= row;
    }
    unreachable!("position out of range");
}

pub fn emit_trn(t: &Tournament) -> String {
    let n = t.n();
    let mut bits = String::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            bits.push(if t.beats(i, j) { '1' } else { '0' });
        }
    }
    format!("{n}\n{bits}\n")
}

pub fn parse_dg(input: &str) -> Result<Digraph, Error> {
    // Peek at the header first to learn how many arc lines to expect.
    let first = input
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| parse_err(1, "empty input"))?;
    let mut head = first.split_whitespace();
    let n: usize = head
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(1, "bad vertex count"))?;
    let m: usize = head
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(1, "bad arc count"))?;
    if head.next().is_some() {
        return Err(parse_err(1, "header has more than two fields"));
    }
    let lines = content_lines(input, 1 + m)?;
    let mut arcs = Vec::with_capacity(m);
    for (row, line) in lines[1..].iter().enumerate() {
        let lineno = row + 2;
        let mut fields = line.split_whitespace();
        let u: usize = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(lineno, "bad tail vertex"))?;
        let v: usize = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(lineno, "bad head vertex"))?;
        if fields.next().is_some() {
            return Err(parse_err(lineno, "arc line has more than two fields"));
        }
        arcs.push((u, v));
    }
    Digraph::from_arcs(n, &arcs).map_err(|e| parse_err(2, e.to_string()))
}

pub fn emit_dg(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Graphviz rendering; digons become a single double-headed edge.
pub fn to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph {\n  rankdir=LR;\n");
    for v in 0..d.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in d.arcs() {
        if d.has_arc(v, u) {
            if u < v {
                out.push_str(&format!("  {u} -> {v} [dir=both];\n"));
            }
        } else {
            out.push_str(&format!("  {u} -> {v};\n"));
        }
    }
    out.push_str("}\n");
    out
}
