//! DOT and edge-list export, the edge-list parser, and connection-set files.
//!
//! Edge lists start with a header `n m`, followed by `m` lines `u v`
//! (0-based). Connection-set files start with `set order <n> size <k>`,
//! followed by `k` element indices, one per line. In both, blank lines and
//! `#` comments are ignored.

use std::fmt::Write as _;

use super::{ConnectionSet, Digraph};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

/// Largest vertex count accepted by [`parse_edge_list`].
pub const MAX_VERTICES: usize = 4096;

pub fn to_dot(g: &Digraph) -> String {
    let mut out = String::from("digraph {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").expect("writing to a String");
    }
    for (u, v) in g.arcs() {
        writeln!(out, "  {u} -> {v};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

pub fn to_edge_list(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.arc_count());
    for (u, v) in g.arcs() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "missing `n m` header"))?;
    let [n, m] = numbers::<2>(hline, header)?;
    if n > MAX_VERTICES {
        return Err(Error::parse(hline, 1, format!("more than {MAX_VERTICES} vertices")));
    }
    if m > n.saturating_mul(n) {
        return Err(Error::parse(hline, 1, format!("{m} arcs cannot fit on {n} vertices")));
    }
    let mut arcs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if arcs.len() == m {
            return Err(Error::parse(lineno, 1, "more arcs than declared in the header"));
        }
        let [u, v] = numbers::<2>(lineno, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                lineno,
                1,
                format!("arc ({u}, {v}) has an endpoint outside 0..{n}"),
            ));
        }
        arcs.push((u, v));
    }
    if arcs.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            format!("header declares {m} arcs, found {}", arcs.len()),
        ));
    }
    Ok(Digraph::from_arcs(n, arcs))
}

/// One element per line, each followed by its word as a comment.
pub fn write_connection_set(g: &FiniteGroup, s: &ConnectionSet) -> String {
    let mut out = format!("set order {} size {}\n", g.order(), s.len());
    for x in s.iter() {
        writeln!(out, "{x} # {}", g.word(x)).expect("writing to a String");
    }
    out
}

/// The group order declared in the header and the listed elements.
pub fn parse_connection_set(text: &str) -> Result<(usize, Vec<Elem>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "missing `set order <n> size <k>` header"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let (n, k) = match words[..] {
        ["set", "order", n, "size", k] => (n.parse::<usize>().ok(), k.parse::<usize>().ok()),
        _ => (None, None),
    };
    let (Some(n), Some(k)) = (n, k) else {
        return Err(Error::parse(hline, 1, "expected `set order <n> size <k>`"));
    };
    if n == 0 || n > MAX_VERTICES || k > n {
        return Err(Error::parse(hline, 1, format!("impossible order {n} or size {k}")));
    }
    let mut elems = Vec::with_capacity(k);
    for (lineno, line) in lines {
        let [x] = numbers::<1>(lineno, line)?;
        if x >= n {
            return Err(Error::parse(lineno, 1, format!("{x} is not below the order {n}")));
        }
        if elems.len() == k {
            return Err(Error::parse(lineno, 1, "more elements than declared"));
        }
        elems.push(x);
    }
    if elems.len() != k {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            format!("header declares {k} elements, found {}", elems.len()),
        ));
    }
    Ok((n, elems))
}

fn numbers<const K: usize>(lineno: usize, line: &str) -> Result<[usize; K]> {
    let mut out = [0usize; K];
    let mut count = 0;
    for tok in line.split_whitespace() {
        let col = (tok.as_ptr() as usize - line.as_ptr() as usize) + 1;
        if count == K {
            return Err(Error::parse(lineno, col, format!("expected {K} numbers")));
        }
        out[count] = tok
            .parse()
            .map_err(|_| Error::parse(lineno, col, format!("`{tok}` is not a non-negative integer")))?;
        count += 1;
    }
    if count != K {
        return Err(Error::parse(lineno, 1, format!("expected {K} numbers")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_edge_list() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (3, 0)]);
        let text = to_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n3 0\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn dot_lists_vertices_and_arcs() {
        let g = Digraph::from_arcs(2, [(0, 1)]);
        assert_eq!(to_dot(&g), "digraph {\n  0;\n  1;\n  0 -> 1;\n}\n");
    }

    #[test]
    fn connection_set_round_trip() {
        let g = FiniteGroup::cyclic(8).unwrap();
        let s = ConnectionSet::from_elems(&g, [1, 2]);
        let text = write_connection_set(&g, &s);
        assert!(text.starts_with("set order 8 size 2\n1 # "));
        assert_eq!(parse_connection_set(&text).unwrap(), (8, vec![1, 2]));
        for bad in ["", "set order 8\n", "set order 8 size 1\n8\n", "set order 8 size 2\n1\n", "set order 2 size 3\n"] {
            assert!(matches!(parse_connection_set(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
    }

    #[test]
    fn edge_list_errors() {
        for bad in ["", "3", "2 1\n0 2\n", "2 1\n", "2 0\n0 1\n", "2 1\n0 x\n", "2 1\n0 1 1\n"] {
            assert!(matches!(parse_edge_list(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
    }
}
