//! The `.grp` text format: a header line `group <name> order <n>` followed by
//! `n` rows of `n` space-separated 0-based indices (row `g` lists `g * h`).
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::FiniteGroup;
use crate::error::{Error, Result};

pub fn parse_grp(text: &str) -> Result<FiniteGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "missing `group <name> order <n>` header"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.len() != 4 || words[0] != "group" || words[2] != "order" {
        return Err(Error::parse(hline, 1, "expected `group <name> order <n>`"));
    }
    let name = words[1].to_string();
    let n: usize = words[3]
        .parse()
        .map_err(|_| Error::parse(hline, column_of(header, words[3]), "order is not an integer"))?;
    if n == 0 || n > super::MAX_ORDER {
        return Err(Error::parse(
            hline,
            column_of(header, words[3]),
            format!("order must be between 1 and {}", super::MAX_ORDER),
        ));
    }
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (lineno, line) in lines {
        if rows.len() == n {
            return Err(Error::parse(lineno, 1, "more rows than the declared order"));
        }
        let mut row = Vec::with_capacity(n);
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::parse(lineno, column_of(line, tok), format!("bad index `{tok}`")))?;
            if v >= n {
                return Err(Error::parse(
                    lineno,
                    column_of(line, tok),
                    format!("index {v} out of range for order {n}"),
                ));
            }
            row.push(v);
        }
        if row.len() != n {
            return Err(Error::parse(
                lineno,
                1,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    FiniteGroup::from_table(name, &rows)
}

pub fn write_grp(g: &FiniteGroup) -> String {
    let name: String = g
        .name()
        .chars()
        .map(|c| if c.is_whitespace() { '_' } else { c })
        .collect();
    let mut out = format!("group {} order {}\n", name, g.order());
    for x in g.elements() {
        let mut first = true;
        for y in g.row(x) {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{y}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn load_grp(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    parse_grp(&std::fs::read_to_string(path)?)
}

pub fn save_grp(g: &FiniteGroup, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_grp(g))?;
    Ok(())
}

/// 1-based column of `tok`, which must be a slice of `line`.
fn column_of(line: &str, tok: &str) -> usize {
    (tok.as_ptr() as usize).saturating_sub(line.as_ptr() as usize) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let q8 = FiniteGroup::quaternion8();
        let text = write_grp(&q8);
        assert!(text.starts_with("group Q8 order 8\n"));
        let back = parse_grp(&text).unwrap();
        assert_eq!(back.name(), "Q8");
        for x in q8.elements() {
            assert!(q8.row(x).eq(back.row(x)));
        }
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_grp("group C2 order 2\n0 1\n1 7\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (3, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_grp("").is_err());
        assert!(parse_grp("group C2 order x\n").is_err());
        assert!(parse_grp("group C2 order 2\n0 1\n").is_err());
        assert!(matches!(
            parse_grp("group bad order 2\n0 1\n1 1\n"),
            Err(Error::Validation(_))
        ));
    }
}
