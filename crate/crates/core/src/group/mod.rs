//! Finite groups stored as explicit multiplication tables.
//!
//! Element `0` is always the identity. Every constructor documents its
//! element encoding so that element indices are stable across runs.

mod abelian;
mod constructors;
mod extension;
pub mod io;
mod iso;
mod structure;
mod subset;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

pub use abelian::{InvariantFactor, InvolutionModule};
pub(crate) use abelian::extend_span;
pub use iso::{group_automorphisms, is_isomorphic, AutomorphismGroup, AUT_MAX_ORDER};
pub use structure::{half_inversion_set, GenDihedralWitness};
pub use subset::Subset;

use crate::error::{Error, Result};

/// Index of an element inside its group.
pub type Elem = usize;

/// Largest group order the table representation supports.
pub const MAX_ORDER: usize = 4096;

/// A finite group given by its Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    orders: Vec<u32>,
    labels: Vec<(String, Elem)>,
    gens: OnceLock<Vec<Elem>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.n)
            .finish()
    }
}

/// An ordered tuple of elements, used for generating sets whose order matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingTuple(pub Vec<Elem>);

impl GeneratingTuple {
    pub fn generates(&self, g: &FiniteGroup) -> bool {
        g.generates(&self.0)
    }

    /// No element can be dropped without losing generation.
    pub fn is_irredundant(&self, g: &FiniteGroup) -> bool {
        self.generates(g)
            && (0..self.0.len()).all(|i| {
                let rest: Vec<Elem> = self
                    .0
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &e)| e)
                    .collect();
                !g.generates(&rest)
            })
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major table, validating every group axiom.
    pub fn from_table(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for (g, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "row {g} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &h in row {
                if h >= n {
                    return Err(Error::Validation(format!("entry {h} out of range in row {g}")));
                }
                flat.push(h as u16);
            }
        }
        Self::from_flat(name.into(), n, flat)
    }

    /// Builds a group of order `n` from a multiplication function on indices.
    pub fn from_fn<F>(name: impl Into<String>, n: usize, mul: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize,
    {
        check_order(n)?;
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = mul(a, b);
                if c >= n {
                    return Err(Error::Validation(format!("{a}*{b} = {c} out of range")));
                }
                flat.push(c as u16);
            }
        }
        Self::from_flat(name.into(), n, flat)
    }

    /// Builds the group whose right-regular action on `0..n` is generated by
    /// the given permutations. Point `0` becomes the identity and point `i`
    /// the unique element carrying `0` to `i`.
    pub fn from_right_action(name: impl Into<String>, actions: &[Vec<u32>]) -> Result<Self> {
        let n = actions.first().map_or(1, |a| a.len());
        check_order(n)?;
        for (k, act) in actions.iter().enumerate() {
            if act.len() != n || act.iter().any(|&x| x as usize >= n) {
                return Err(Error::Validation(format!("generator {k} is not a map on 0..{n}")));
            }
        }
        // BFS spanning tree: parent[h] . gen[h] = h.
        let mut parent = vec![usize::MAX; n];
        let mut via = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        parent[0] = 0;
        order.push(0);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (k, act) in actions.iter().enumerate() {
                let y = act[x] as usize;
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    via[y] = k;
                    order.push(y);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Validation("action is not transitive".into()));
        }
        let mut flat = vec![0u16; n * n];
        for x in 0..n {
            let row = &mut flat[x * n..(x + 1) * n];
            row[0] = x as u16;
            for &h in &order[1..] {
                row[h] = actions[via[h]][row[parent[h]] as usize] as u16;
            }
        }
        Self::from_flat(name.into(), n, flat)
    }

    pub(crate) fn from_flat(name: String, n: usize, table: Vec<u16>) -> Result<Self> {
        check_order(n)?;
        debug_assert_eq!(table.len(), n * n);
        let mut g = FiniteGroup {
            name,
            n,
            table,
            inv: vec![0; n],
            orders: vec![0; n],
            labels: Vec::new(),
            gens: OnceLock::new(),
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.n;
        for h in 0..n {
            if self.table[h] as usize != h || self.table[h * n] as usize != h {
                return Err(Error::Validation(format!("element 0 is not an identity (at {h})")));
            }
        }
        let mut seen = vec![u32::MAX; n];
        for g in 0..n {
            for h in 0..n {
                let v = self.table[g * n + h] as usize;
                if seen[v] == g as u32 {
                    return Err(Error::Validation(format!("row {g} repeats {v}")));
                }
                seen[v] = g as u32;
            }
        }
        seen.fill(u32::MAX);
        for h in 0..n {
            for g in 0..n {
                let v = self.table[g * n + h] as usize;
                if seen[v] == h as u32 {
                    return Err(Error::Validation(format!("column {h} repeats {v}")));
                }
                seen[v] = h as u32;
            }
        }
        for g in 0..n {
            let row = &self.table[g * n..(g + 1) * n];
            let i = row.iter().position(|&v| v == 0).expect("latin row contains identity");
            if self.table[i * n + g] != 0 {
                return Err(Error::Validation(format!("{g} has no two-sided inverse")));
            }
            self.inv[g] = i as u16;
        }
        self.check_associative()?;
        for g in 0..n {
            let mut k = 1u32;
            let mut x = g;
            while x != 0 {
                x = self.mul(x, g);
                k += 1;
            }
            self.orders[g] = if g == 0 { 1 } else { k };
        }
        Ok(())
    }

    /// Light's test: the elements `a` with `(ay)z = a(yz)` for all `y, z`
    /// are closed under products, so it suffices to test a set whose
    /// left-normed products reach every element.
    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut count = 1;
        let mut gens = Vec::new();
        for cand in 0..n {
            if count == n {
                break;
            }
            if reached[cand] {
                continue;
            }
            gens.push(cand);
            // Re-close under right multiplication by every chosen generator.
            let mut stack: Vec<usize> = (0..n).filter(|&x| reached[x]).collect();
            while let Some(x) = stack.pop() {
                for &s in &gens {
                    let y = self.table[x * n + s] as usize;
                    if !reached[y] {
                        reached[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
        }
        for &a in &gens {
            let arow = &self.table[a * n..(a + 1) * n];
            for y in 0..n {
                let ay = arow[y] as usize;
                let ayrow = &self.table[ay * n..(ay + 1) * n];
                let yrow = &self.table[y * n..(y + 1) * n];
                for z in 0..n {
                    if ayrow[z] != arow[yrow[z] as usize] {
                        return Err(Error::Validation(format!(
                            "associativity fails at ({a}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(a < self.n && b < self.n);
        self.table[a * self.n + b] as usize
    }

    /// Checked multiplication.
    pub fn try_mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        if a >= self.n || b >= self.n {
            return Err(Error::Argument(format!(
                "element index out of range for group of order {}",
                self.n
            )));
        }
        Ok(self.mul(a, b))
    }

    /// Product of a sequence, left to right.
    pub fn product<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Elem {
        elems.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    #[inline]
    pub fn order_of(&self, a: Elem) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let o = self.order_of(a) as i64;
        let k = k.rem_euclid(o);
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    /// `x^g = g^{-1} x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x^{-1} y^{-1} x y`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.product([self.inv(x), self.inv(y), x, y])
    }

    pub fn commutes(&self, x: Elem, y: Elem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// The row of the table for `g` (products `g * h`).
    pub fn row(&self, g: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.table[g * self.n..(g + 1) * self.n].iter().map(|&v| v as usize)
    }

    /// Smallest subgroup containing `gens`, found by breadth-first search.
    pub fn closure(&self, gens: &[Elem]) -> Subset {
        let mut set = Subset::empty(self.n);
        set.insert(0);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn closure_of(&self, gens: &Subset) -> Subset {
        self.closure(&gens.to_vec())
    }

    pub fn generates(&self, gens: &[Elem]) -> bool {
        self.closure(gens).len() == self.n
    }

    /// Lowest-index greedy generating tuple with redundant members removed.
    pub fn irredundant_generating_tuple(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = self.closure(&[]);
        let mut candidates: Vec<Elem> = (1..self.n).collect();
        // Prefer high-order elements: fewer generators, smaller search trees.
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.order_of(x)), x));
        for x in candidates {
            if span.len() == self.n {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        let mut i = 0;
        while i < gens.len() {
            let mut rest = gens.clone();
            rest.remove(i);
            if self.generates(&rest) {
                gens = rest;
            } else {
                i += 1;
            }
        }
        gens
    }

    /// A cached irredundant generating tuple (see
    /// [`irredundant_generating_tuple`](Self::irredundant_generating_tuple)).
    pub fn generators(&self) -> &[Elem] {
        self.gens.get_or_init(|| self.irredundant_generating_tuple())
    }

    /// Named generators used when rendering elements as words.
    pub fn labels(&self) -> &[(String, Elem)] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<(String, Elem)>) -> Self {
        self.labels = labels;
        self
    }

    /// Shortest word for `x` in the labelled generators (and their inverses),
    /// or the plain index if the group carries no labels.
    pub fn word(&self, x: Elem) -> String {
        if x == 0 {
            return "1".into();
        }
        if self.labels.is_empty() {
            return format!("e{x}");
        }
        let mut prev = vec![usize::MAX; self.n];
        let mut step = vec![(0usize, false); self.n];
        prev[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(y) = queue.pop_front() {
            if y == x {
                break;
            }
            for (k, (_, s)) in self.labels.iter().enumerate() {
                for inverse in [false, true] {
                    let t = if inverse { self.inv(*s) } else { *s };
                    let z = self.mul(y, t);
                    if prev[z] == usize::MAX {
                        prev[z] = y;
                        step[z] = (k, inverse);
                        queue.push_back(z);
                    }
                }
            }
        }
        if prev[x] == usize::MAX {
            return format!("e{x}");
        }
        let mut letters = Vec::new();
        let mut y = x;
        while y != 0 {
            letters.push(step[y]);
            y = prev[y];
        }
        letters.reverse();
        // Collapse runs of the same letter into powers.
        let mut out = String::new();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let (k, inverse) = letters[i];
            let run = (j - i) as i64;
            let exp = if inverse { -run } else { run };
            out.push_str(&self.labels[k].0);
            if exp != 1 {
                out.push_str(&format!("^{exp}"));
            }
            i = j;
        }
        out
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Argument("a group needs at least one element".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Resource(format!(
            "group order {n} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_latin_table() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(FiniteGroup::from_table("bad", &rows), Err(Error::Validation(_))));
    }

    #[test]
    fn rejects_identity_not_at_zero() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_table("bad", &rows).is_err());
    }

    #[test]
    fn rejects_non_associative_loop() {
        // The smallest non-associative loop has order 5.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table("loop5", &rows).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn try_mul_checks_range() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.try_mul(1, 1).unwrap(), 2);
        assert!(matches!(c4.try_mul(4, 0), Err(Error::Argument(_))));
    }

    #[test]
    fn closure_examples() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.closure(&[2]).to_vec(), vec![0, 2, 4]);
        assert_eq!(c6.closure(&[]).to_vec(), vec![0]);
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.closure(&[2, 4]).len(), 8);
    }

    #[test]
    fn words_use_labels() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.word(0), "1");
        assert_eq!(c4.word(2), "a^2");
        assert_eq!(c4.word(3), "a^-1");
    }
}
