//! Parser for `.pres` files.
//!
//! ```text
//! # comment
//! name: P16a                      (optional)
//! gens: a b
//! rels: a^4=b^4=(ab)^2=(ab^-1)^2=1
//! ```
//!
//! Generator names are a letter followed by digits or underscores, so `ab`
//! is the product `a b`. Relations are separated by commas and may continue
//! over several lines. A factor is a name, `1`, a parenthesised word or a
//! commutator `[u, v, ...]` (left-normed), optionally followed by exponents:
//! `^k`, `^-k`, `^{k}`, `^(k)`, or a conjugator `^x` / `^(word)`.
//! In a chain `u_1 = ... = u_k`, if some `u_i` is the identity then every
//! `u_i` is a relator; otherwise the relators are `u_i u_{i+1}^{-1}`.

use super::{Presentation, Word};
use crate::error::{Error, Result};

/// Longest word (in letters) the parser will build.
pub const MAX_WORD_LENGTH: u64 = 1 << 20;

#[derive(Clone, Copy, Debug)]
struct Ch {
    c: char,
    line: usize,
    col: usize,
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut name: Option<String> = None;
    let mut gens: Option<Vec<Ch>> = None;
    let mut rels: Option<Vec<Ch>> = None;
    // 0 = none, 1 = gens, 2 = rels.
    let mut section = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - trimmed.len();
        let header = ["name:", "gens:", "rels:"]
            .into_iter()
            .find(|h| trimmed.starts_with(h));
        let (content, offset) = match header {
            Some(h) => (&trimmed[h.len()..], indent + h.len()),
            None => (trimmed, indent),
        };
        let chars = || {
            content
                .char_indices()
                .map(|(k, c)| Ch {
                    c,
                    line,
                    col: body[..offset + k].chars().count() + 1,
                })
                .collect::<Vec<Ch>>()
        };
        match header {
            Some("name:") => {
                if name.is_some() {
                    return Err(Error::parse(line, indent + 1, "duplicate `name:` line"));
                }
                name = Some(content.trim().to_string());
                section = 0;
            }
            Some("gens:") => {
                if gens.is_some() {
                    return Err(Error::parse(line, indent + 1, "duplicate `gens:` line"));
                }
                gens = Some(chars());
                section = 1;
            }
            Some(_) => {
                if rels.is_some() {
                    return Err(Error::parse(line, indent + 1, "duplicate `rels:` line"));
                }
                rels = Some(chars());
                section = 2;
            }
            None => {
                let target = match section {
                    1 => gens.as_mut(),
                    2 => rels.as_mut(),
                    _ => None,
                };
                let Some(target) = target else {
                    return Err(Error::parse(
                        line,
                        indent + 1,
                        "expected a `name:`, `gens:` or `rels:` line",
                    ));
                };
                // A line break separates tokens like a space does.
                target.push(Ch { c: ' ', line, col: 1 });
                target.extend(chars());
            }
        }
    }
    let end = text.lines().count().max(1);
    let gens = gens.ok_or_else(|| Error::parse(end, 1, "missing `gens:` line"))?;
    let rels = rels.ok_or_else(|| Error::parse(end, 1, "missing `rels:` line"))?;
    let generators = parse_generators(&gens)?;
    let mut parser = RelParser {
        chars: rels,
        pos: 0,
        gens: &generators,
        end_line: end,
        depth: 0,
    };
    let relators = parser.relations()?;
    Ok(Presentation {
        name: name.filter(|n| !n.is_empty()),
        generators,
        relators,
    })
}

fn parse_generators(chars: &[Ch]) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.c.is_whitespace() || ch.c == ',' {
            i += 1;
            continue;
        }
        if !ch.c.is_ascii_alphabetic() {
            return Err(Error::parse(
                ch.line,
                ch.col,
                format!("generator names start with a letter, found `{}`", ch.c),
            ));
        }
        let mut name = String::from(ch.c);
        i += 1;
        while i < chars.len() && (chars[i].c.is_ascii_digit() || chars[i].c == '_') {
            name.push(chars[i].c);
            i += 1;
        }
        if i < chars.len() && !(chars[i].c.is_whitespace() || chars[i].c == ',') {
            return Err(Error::parse(
                chars[i].line,
                chars[i].col,
                "separate generator names with spaces or commas",
            ));
        }
        if out.contains(&name) {
            return Err(Error::parse(ch.line, ch.col, format!("duplicate generator `{name}`")));
        }
        out.push(name);
    }
    Ok(out)
}

struct RelParser<'a> {
    chars: Vec<Ch>,
    pos: usize,
    gens: &'a [String],
    end_line: usize,
    /// Open brackets; bounded so that hostile input cannot exhaust the stack.
    depth: usize,
}

const MAX_NESTING: usize = 64;

impl RelParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].c.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|ch| ch.c)
    }

    fn here(&self) -> (usize, usize) {
        match self.chars.get(self.pos) {
            Some(ch) => (ch.line, ch.col),
            None => match self.chars.last() {
                Some(ch) => (ch.line, ch.col + 1),
                None => (self.end_line, 1),
            },
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::parse(line, col, msg))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            match self.chars.get(self.pos) {
                Some(ch) => self.error(format!("expected `{c}`, found `{}`", ch.c)),
                None => self.error(format!("expected `{c}` before end of input")),
            }
        }
    }

    fn relations(&mut self) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        if self.peek().is_none() {
            return Ok(out);
        }
        loop {
            out.extend(self.relation()?);
            match self.peek() {
                None => break,
                Some(',') => self.pos += 1,
                Some(c) => return self.error(format!("unexpected `{c}`")),
            }
        }
        Ok(out)
    }

    fn relation(&mut self) -> Result<Vec<Word>> {
        let mut chain = vec![self.word()?];
        while self.peek() == Some('=') {
            self.pos += 1;
            chain.push(self.word()?);
        }
        let rels = if chain.len() == 1 || chain.iter().any(Word::is_identity) {
            chain.into_iter().filter(|w| !w.is_identity()).collect()
        } else {
            chain
                .windows(2)
                .map(|p| p[0].concat(&p[1].inverse()))
                .filter(|w| !w.is_identity())
                .collect()
        };
        Ok(rels)
    }

    fn starts_factor(c: char) -> bool {
        c.is_ascii_alphabetic() || c == '(' || c == '[' || c == '1'
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::identity();
        let mut any = false;
        loop {
            match self.peek() {
                Some('*') if any => {
                    self.pos += 1;
                    if !self.peek().is_some_and(Self::starts_factor) {
                        return self.error("expected a factor after `*`");
                    }
                }
                Some(c) if Self::starts_factor(c) => {
                    let f = self.factor()?;
                    w = self.checked(w.concat(&f))?;
                    any = true;
                }
                Some(c) if !any => {
                    return self.error(format!("expected a word, found `{c}`"));
                }
                None if !any => return self.error("expected a word before end of input"),
                _ => return Ok(w),
            }
        }
    }

    fn checked(&self, w: Word) -> Result<Word> {
        if w.len() > MAX_WORD_LENGTH {
            self.error(format!("word longer than {MAX_WORD_LENGTH} letters"))
        } else {
            Ok(w)
        }
    }

    fn factor(&mut self) -> Result<Word> {
        let mut w = self.atom()?;
        while self.peek() == Some('^') {
            self.pos += 1;
            w = self.exponent(w)?;
        }
        Ok(w)
    }

    /// A parenthesised word or a commutator, with the opening bracket next.
    fn bracketed(&mut self) -> Result<Word> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let w = self.word()?;
            self.expect(')')?;
            return Ok(w);
        }
        self.pos += 1;
        let mut w = self.word()?;
        self.expect(',')?;
        loop {
            let v = self.word()?;
            w = self.checked(w.commutator(&v))?;
            if self.peek() == Some(',') {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.expect(']')?;
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(' | '[') => {
                if self.depth == MAX_NESTING {
                    return self.error(format!("brackets nested more than {MAX_NESTING} deep"));
                }
                self.depth += 1;
                let w = self.bracketed();
                self.depth -= 1;
                w
            }
            Some('1') => {
                self.pos += 1;
                if self.chars.get(self.pos).is_some_and(|ch| ch.c.is_ascii_digit()) {
                    self.pos -= 1;
                    return self.error("integers may only appear as exponents");
                }
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() => self.generator(),
            Some(c) => self.error(format!("unexpected `{c}`")),
            None => self.error("unexpected end of input"),
        }
    }

    fn generator(&mut self) -> Result<Word> {
        let start = self.pos;
        let mut name = String::from(self.chars[self.pos].c);
        self.pos += 1;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].c.is_ascii_digit() || self.chars[self.pos].c == '_')
        {
            name.push(self.chars[self.pos].c);
            self.pos += 1;
        }
        match self.gens.iter().position(|g| *g == name) {
            Some(i) => Ok(Word::generator(i)),
            None => {
                self.pos = start;
                self.error(format!("unknown generator `{name}`"))
            }
        }
    }

    /// Applies the exponent or conjugator after a `^`.
    fn exponent(&mut self, base: Word) -> Result<Word> {
        match self.peek() {
            Some('-') | Some('0'..='9') => {
                let k = self.integer()?;
                self.power(base, k)
            }
            Some('{') => {
                self.pos += 1;
                let k = self.integer()?;
                self.expect('}')?;
                self.power(base, k)
            }
            Some('(') => {
                // `^(k)` is a power, `^(word)` a conjugation.
                let save = self.pos;
                self.pos += 1;
                if matches!(self.peek(), Some('-') | Some('0'..='9')) {
                    let digits_start = self.pos;
                    let k = self.integer()?;
                    if self.peek() == Some(')') {
                        self.pos += 1;
                        return self.power(base, k);
                    }
                    // Not a bare integer: `1` may start a word.
                    self.pos = digits_start;
                }
                self.pos = save;
                let by = self.atom()?;
                self.checked(base.conjugate(&by))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let by = self.generator()?;
                self.checked(base.conjugate(&by))
            }
            Some(c) => self.error(format!("expected an exponent after `^`, found `{c}`")),
            None => self.error("expected an exponent after `^`"),
        }
    }

    fn power(&self, base: Word, k: i64) -> Result<Word> {
        if base.len().saturating_mul(k.unsigned_abs()) > MAX_WORD_LENGTH {
            return self.error(format!("word longer than {MAX_WORD_LENGTH} letters"));
        }
        Ok(base.pow(k))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.chars.get(self.pos).is_some_and(|ch| ch.c == '-');
        if negative {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.chars.get(self.pos).is_some_and(|ch| ch.c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return self.error("expected an integer");
        }
        let text: String = self.chars[digits_start..self.pos].iter().map(|ch| ch.c).collect();
        let value: i64 = match text.parse::<i64>() {
            Ok(v) if v <= MAX_WORD_LENGTH as i64 => v,
            _ => {
                self.pos = start;
                return self.error(format!("exponent `{text}` is too large"));
            }
        };
        if value == 0 {
            self.pos = start;
            return self.error("zero exponent");
        }
        Ok(if negative { -value } else { value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_count(text: &str) -> usize {
        parse_presentation(text).unwrap().relators.len()
    }

    #[test]
    fn simple_cyclic() {
        let p = parse_presentation("gens: a\nrels: a^4\n").unwrap();
        assert_eq!(p.generators, vec!["a"]);
        assert_eq!(p.relators.len(), 1);
        assert_eq!(p.relators[0].len(), 4);
    }

    #[test]
    fn equality_chain_to_one() {
        assert_eq!(rel_count("gens: a b\nrels: a^4=b^4=(ab)^2=(ab^-1)^2=1"), 4);
    }

    #[test]
    fn equality_without_one() {
        let p = parse_presentation("gens: a b\nrels: a^2=b^2").unwrap();
        assert_eq!(p.relators[0].syllables(), &[(0, 2), (1, -2)]);
    }

    #[test]
    fn exponent_forms_agree() {
        let forms = ["a^-1", "a^{-1}", "a^(-1)", "(a)^-1"];
        let words: Vec<Word> = forms
            .iter()
            .map(|f| parse_presentation(&format!("gens: a\nrels: {f}")).unwrap().relators[0].clone())
            .collect();
        assert!(words.iter().all(|w| *w == words[0]));
    }

    #[test]
    fn conjugation_and_commutators() {
        let p = parse_presentation("gens: a c\nrels: a^c=a^-1, [a,c]").unwrap();
        // a^c a = c^-1 a c a
        assert_eq!(p.relators[0].syllables(), &[(1, -1), (0, 1), (1, 1), (0, 1)]);
        assert_eq!(p.relators[1].syllables(), &[(0, -1), (1, -1), (0, 1), (1, 1)]);
        let q = parse_presentation("gens: a b\nrels: a^(ab)").unwrap();
        assert_eq!(q.relators[0].syllables(), &[(1, -1), (0, 1), (1, 1)]);
    }

    #[test]
    fn multiline_relations_and_comments() {
        let text = "# order 16\nname: P\ngens: a, b, c\nrels: a^4=b^4=c^4=1,\n  a^2=c^2  # tail\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.name.as_deref(), Some("P"));
        assert_eq!(p.relators.len(), 4);
    }

    #[test]
    fn undeclared_generator_is_named() {
        let err = parse_presentation("gens: a b\nrels: (a b c)^2").unwrap_err();
        match err {
            Error::Parse { line, column, message } => {
                assert_eq!((line, column), (2, 12));
                assert!(message.contains("`c`"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn error_paths() {
        for bad in [
            "gens: a\nrels: (a^2",
            "gens: a\nrels: a^0",
            "gens: a\nrels: a^",
            "gens: a\nrels: a)",
            "gens: a a\nrels: a",
            "gens: a\n",
            "rels: a\n",
            "gens: a\nrels: 12",
            "gens: a\nrels: a^99999999999999999999",
            "gens: a b\nrels: (ab)^1048576",
            "stray line",
        ] {
            assert!(
                matches!(parse_presentation(bad), Err(Error::Parse { .. })),
                "{bad:?} should fail"
            );
        }
    }

    #[test]
    fn display_round_trips() {
        let p = parse_presentation("gens: a b\nrels: a^4=b^4=(ab)^2=(ab^-1)^2=1").unwrap();
        let again = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(p, again);
    }
}
