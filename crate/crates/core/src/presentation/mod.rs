//! Finite presentations `<gens | rels>` and their compilation to tables.

mod parse;
mod todd_coxeter;

use std::fmt;

pub use parse::{parse_presentation, MAX_WORD_LENGTH};
pub use todd_coxeter::{coset_enumerate, CosetTable, DEFAULT_MAX_COSETS};

use crate::error::Result;
use crate::group::{Elem, FiniteGroup};

/// A freely reduced word: syllables `(generator, exponent)` with non-zero
/// exponents and no two neighbouring syllables on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word {
            syllables: vec![(g, 1)],
        }
    }

    /// Builds and freely reduces a word from arbitrary syllables.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i64)>>(syllables: I) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in syllables {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.0 == g => {
                    last.1 += e;
                    if last.1 == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word { syllables: out }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_syllables(self.syllables.iter().chain(&other.syllables).copied())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        if let [(g, e)] = base.syllables[..] {
            return Word::from_syllables([(g, e * k.abs())]);
        }
        let n = k.unsigned_abs() as usize;
        Word::from_syllables(base.syllables.iter().copied().cycle().take(n * base.syllables.len()))
    }

    /// `self^by = by^{-1} self by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().concat(self).concat(by)
    }

    /// `[self, other] = self^{-1} other^{-1} self other`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.inverse()
            .concat(&other.inverse())
            .concat(self)
            .concat(other)
    }

    /// Letters as `(generator, +1 | -1)`, in order.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    /// Value of the word in `group` when generator `i` is sent to `images[i]`.
    pub fn evaluate(&self, group: &FiniteGroup, images: &[Elem]) -> Elem {
        self.syllables
            .iter()
            .fold(group.identity(), |acc, &(g, e)| group.mul(acc, group.pow(images[g], e)))
    }
}

/// Generator names plus relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: Option<String>,
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Self> {
        parse_presentation(text)
    }

    /// Compiles the presentation by coset enumeration over the trivial
    /// subgroup. The resulting group labels its generators by name.
    pub fn compile(&self, max_cosets: usize) -> Result<FiniteGroup> {
        coset_enumerate(self, max_cosets)
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".into();
        }
        let mut out = String::new();
        for &(g, e) in w.syllables() {
            out.push_str(&self.generators[g]);
            if e != 1 {
                out.push_str(&format!("^{e}"));
            }
        }
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name: {name}")?;
        }
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_to_string(r)).collect();
        writeln!(f, "rels: {}", rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_syllables([(0, 2), (1, 1), (1, -1), (0, -2), (2, 3)]);
        assert_eq!(w.syllables(), &[(2, 3)]);
        let ab = Word::from_syllables([(0, 1), (1, 1)]);
        assert!(ab.concat(&ab.inverse()).is_identity());
        assert_eq!(ab.pow(2).len(), 4);
        assert_eq!(ab.pow(-1), ab.inverse());
        assert_eq!(Word::generator(0).pow(4).syllables(), &[(0, 4)]);
    }

    #[test]
    fn commutator_of_generators() {
        let a = Word::generator(0);
        let b = Word::generator(1);
        assert_eq!(a.commutator(&b).syllables(), &[(0, -1), (1, -1), (0, 1), (1, 1)]);
        assert_eq!(a.conjugate(&b).syllables(), &[(1, -1), (0, 1), (1, 1)]);
    }
}
