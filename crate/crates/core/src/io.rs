//! Plain-text formats.
//!
//! * `.h3`: a header `n m`, then `m` lines of three ascending vertices.
//! * `.oh3`: the same header, then `m` cyclic readings, any rotation.
//! * `.iv`: one arc per line, `p/q r/s` or `FULL`.
//! * `.g`: a header `n m`, then `m` lines `u w` with `u < w`.
//!
//! Blank lines and lines starting with `#` are ignored. Errors carry the
//! 1-based line number.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::generators::{Arc, ArcFamily};
use crate::hypercore::{CyclicTriple, Hypergraph3, OrientedHypergraph3, SimpleGraph, Triple, Vertex};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<const K: usize>(line: usize, text: &str) -> Result<[usize; K]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != K {
        return Err(Error::parse(
            line,
            format!("expected {K} numbers, found {}", fields.len()),
        ));
    }
    let mut out = [0; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| Error::parse(line, format!("'{f}' is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Header plus body lines; checks the declared line count.
fn sections(text: &str) -> Result<(usize, Vec<(usize, &str)>)> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header 'n m'"))?;
    let [n, m] = numbers::<2>(hl, header)?;
    let body: Vec<(usize, &str)> = lines.collect();
    if body.len() != m {
        let at = body.get(m).map_or(hl, |&(l, _)| l);
        return Err(Error::parse(
            at,
            format!("header declares {m} lines, found {}", body.len()),
        ));
    }
    Ok((n, body))
}

fn check_vertices(line: usize, n: usize, vs: &[Vertex]) -> Result<()> {
    match vs.iter().find(|&&v| v == 0 || v > n) {
        Some(v) => Err(Error::parse(line, format!("vertex {v} outside 1..={n}"))),
        None => Ok(()),
    }
}

pub fn parse_h3(text: &str) -> Result<Hypergraph3> {
    let (n, body) = sections(text)?;
    let mut edges = BTreeSet::new();
    for (line, l) in body {
        let [a, b, c] = numbers::<3>(line, l)?;
        check_vertices(line, n, &[a, b, c])?;
        if !(a < b && b < c) {
            return Err(Error::parse(
                line,
                format!("triple {a} {b} {c} is not strictly ascending"),
            ));
        }
        let t = Triple::new(a, b, c).expect("ascending");
        if !edges.insert(t) {
            return Err(Error::parse(line, format!("duplicate edge {t}")));
        }
    }
    Hypergraph3::from_edges(n, edges)
}

pub fn emit_h3(h: &Hypergraph3) -> String {
    let mut out = format!("{} {}\n", h.order(), h.edge_count());
    for t in h.edges() {
        let [a, b, c] = t.vertices();
        writeln!(out, "{a} {b} {c}").expect("write to string");
    }
    out
}

pub fn parse_oh3(text: &str) -> Result<OrientedHypergraph3> {
    let (n, body) = sections(text)?;
    let mut edges = BTreeMap::new();
    for (line, l) in body {
        let [a, b, c] = numbers::<3>(line, l)?;
        check_vertices(line, n, &[a, b, c])?;
        let e = CyclicTriple::new(a, b, c).map_err(|_| Error::parse(line, format!("{a} {b} {c} repeats a vertex")))?;
        if edges.insert(e.triple(), e).is_some() {
            return Err(Error::parse(line, format!("duplicate edge {}", e.triple())));
        }
    }
    OrientedHypergraph3::from_cyclic(n, edges.into_values())
}

/// Each edge in the rotation starting at its smallest vertex.
pub fn emit_oh3(oh: &OrientedHypergraph3) -> String {
    let mut out = format!("{} {}\n", oh.order(), oh.edge_count());
    for e in oh.oriented_edges() {
        let [a, b, c] = e.reading();
        writeln!(out, "{a} {b} {c}").expect("write to string");
    }
    out
}

fn parse_point(line: usize, s: &str) -> Result<Rational64> {
    let bad = || Error::parse(line, format!("'{s}' is not a rational p/q"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (
            p.parse::<i64>().map_err(|_| bad())?,
            q.parse::<i64>().map_err(|_| bad())?,
        ),
        None => (s.parse::<i64>().map_err(|_| bad())?, 1),
    };
    if q <= 0 {
        return Err(bad());
    }
    let x = Rational64::new(p, q);
    if x < Rational64::from_integer(0) || x >= Rational64::from_integer(1) {
        return Err(Error::parse(line, format!("endpoint {s} outside [0, 1)")));
    }
    Ok(x)
}

pub fn parse_iv(text: &str) -> Result<ArcFamily> {
    let mut arcs = Vec::new();
    for (line, l) in content_lines(text) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let arc = match fields[..] {
            ["FULL"] => Arc::full(),
            [a, b] => Arc::new(parse_point(line, a)?, parse_point(line, b)?)?,
            _ => return Err(Error::parse(line, "expected 'p/q r/s' or FULL")),
        };
        arcs.push(arc);
    }
    Ok(ArcFamily::new(arcs))
}

pub fn emit_iv(family: &ArcFamily) -> String {
    family.arcs().iter().map(|a| format!("{a}\n")).collect()
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let (n, body) = sections(text)?;
    let mut edges = Vec::new();
    for (line, l) in body {
        let [u, w] = numbers::<2>(line, l)?;
        check_vertices(line, n, &[u, w])?;
        if u >= w {
            return Err(Error::parse(line, format!("edge {u} {w} is not ascending")));
        }
        edges.push((u, w));
    }
    SimpleGraph::from_edges(n, edges)
}

pub fn emit_graph(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, w) in g.edges() {
        writeln!(out, "{u} {w}").expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::Sense;

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("not a parse error: {other}"),
        }
    }

    #[test]
    fn h3_examples() {
        let h = parse_h3("5 3\n1 2 3\n1 3 4\n1 3 5\n").unwrap();
        assert_eq!(
            h,
            Hypergraph3::from_triples(5, &[[1, 2, 3], [1, 3, 4], [1, 3, 5]]).unwrap()
        );
        assert_eq!(emit_h3(&h), "5 3\n1 2 3\n1 3 4\n1 3 5\n");
        assert_eq!(parse_h3("3 1\n1 2 3\n").unwrap().edge_count(), 1);
        let with_comments = "# example\n4 3\n1 2 3\n\n# middle\n1 2 4\n1 3 4\n";
        assert_eq!(parse_h3(with_comments).unwrap().edge_count(), 3);
    }

    #[test]
    fn h3_errors() {
        assert_eq!(line_of(parse_h3("3 2\n1 2 3\n1 2 3\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_h3("3 1\n1 2 4\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_h3("3 1\n2 1 3\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_h3("3 1\n1 2\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_h3("3 2\n1 2 3\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_h3("").unwrap_err()), 1);
        assert_eq!(line_of(parse_h3("3 x\n").unwrap_err()), 1);
    }

    #[test]
    fn oh3_examples() {
        let o = parse_oh3("5 3\n1 3 2\n1 3 4\n1 3 5\n").unwrap();
        assert!(o.is_transitive(crate::TransitivityMode::Strict));
        let o = parse_oh3("5 3\n1 2 3\n1 4 3\n1 3 5\n").unwrap();
        assert!(!o.is_transitive(crate::TransitivityMode::Strict));
        let o = parse_oh3("3 1\n2 3 1\n").unwrap();
        assert_eq!(emit_oh3(&o), "3 1\n1 2 3\n");
        let o = parse_oh3("3 1\n3 2 1\n").unwrap();
        assert_eq!(o.sense_of(&Triple::new(1, 2, 3).unwrap()), Some(Sense::Counter));
        assert_eq!(emit_oh3(&o), "3 1\n1 3 2\n");
    }

    #[test]
    fn oh3_duplicate_with_other_sense() {
        assert_eq!(line_of(parse_oh3("3 2\n1 2 3\n1 3 2\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_oh3("3 1\n1 1 2\n").unwrap_err()), 2);
    }

    #[test]
    fn iv_examples() {
        let f = parse_iv("0/10 1/10\n2/10 3/10\n4/10 5/10\n6/10 7/10\n8/10 9/10\n").unwrap();
        assert_eq!(crate::generators::from_arcs(&f).0, crate::generators::complete(5));
        assert_eq!(emit_iv(&f), "0/1 1/10\n1/5 3/10\n2/5 1/2\n3/5 7/10\n4/5 9/10\n");
        assert_eq!(parse_iv(&emit_iv(&f)).unwrap(), f);
        let f = parse_iv("0/4 3/4\n1/2 1/4\n").unwrap();
        assert!(f.get(2).wraps() && f.get(1).intersects(f.get(2)));
        let f = parse_iv("FULL\n0/2 0/2\n").unwrap();
        assert!(f.get(1).intersects(f.get(2)));
        assert_eq!(emit_iv(&f), "FULL\n0/1 0/1\n");
    }

    #[test]
    fn iv_errors() {
        assert_eq!(line_of(parse_iv("0/1 1/1\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_iv("# c\n0/1 x\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_iv("1/2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_iv("1/0 1/2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_iv("-1/2 1/2\n").unwrap_err()), 1);
    }

    #[test]
    fn graph_round_trip() {
        let g = parse_graph("4 2\n1 2\n3 4\n").unwrap();
        assert_eq!(emit_graph(&g), "4 2\n1 2\n3 4\n");
        assert!(parse_graph("2 1\n2 1\n").is_err());
    }
}
