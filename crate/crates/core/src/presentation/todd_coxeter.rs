//! Todd–Coxeter coset enumeration over the trivial subgroup, HLT strategy:
//! every relator is scanned from every live coset in turn, defining new
//! cosets to complete the scan, then the coset's row is filled.
//! Coincidences are resolved with a union-find queue.

use super::Presentation;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const DEFAULT_MAX_COSETS: usize = 65536;

const UNDEF: u32 = u32::MAX;

/// A closed coset table. Column `2i` holds the action of generator `i`,
/// column `2i + 1` that of its inverse. Coset 0 is the trivial subgroup.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub ngens: usize,
    pub rows: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The permutation of the cosets induced by generator `g`.
    pub fn action(&self, g: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[2 * g]).collect()
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max_cosets: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(ngens: usize, max_cosets: usize) -> Self {
        let cols = 2 * ngens;
        Enumerator {
            cols,
            table: vec![UNDEF; cols],
            parent: vec![0],
            live: 1,
            max_cosets,
            queue: Vec::new(),
        }
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.cols + x] = v;
    }

    fn allocated(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32> {
        if self.allocated() >= self.max_cosets {
            return Err(Error::Resource(format!(
                "coset enumeration exceeded {} cosets",
                self.max_cosets
            )));
        }
        let d = self.allocated() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(d)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
            self.live -= 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                // Remove the back edge from d; it is re-added at the representative.
                if self.get(d, x ^ 1) == g {
                    self.set(d, x ^ 1, UNDEF);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let t = self.get(mu, x);
                if t != UNDEF {
                    self.merge(nu, t);
                } else {
                    let s = self.get(nu, x ^ 1);
                    if s != UNDEF {
                        self.merge(mu, s);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Scans `word` (as columns) from coset `a`, defining cosets as needed so
    /// that the scan closes, and processing any coincidence it yields.
    fn scan_and_fill(&mut self, a: u32, word: &[usize]) -> Result<()> {
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (a, a);
        let (mut i, mut j) = (0isize, word.len() as isize - 1);
        loop {
            while i <= j && self.get(f, word[i as usize]) != UNDEF {
                f = self.get(f, word[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, word[j as usize] ^ 1) != UNDEF {
                b = self.get(b, word[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i {
                // Deduction: the single gap closes the cycle.
                let x = word[i as usize];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup and returns the group they
/// carry. At most `max_cosets` cosets are ever defined; exceeding this is a
/// resource error.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<FiniteGroup> {
    let table = enumerate_table(p, max_cosets)?;
    let actions: Vec<Vec<u32>> = (0..p.generators.len()).map(|g| table.action(g)).collect();
    let name = p.name.clone().unwrap_or_else(|| "G".to_string());
    let group = if actions.is_empty() {
        FiniteGroup::cyclic(1)?.with_name(name)
    } else {
        FiniteGroup::from_right_action(name, &actions)?
    };
    let labels = p
        .generators
        .iter()
        .enumerate()
        .map(|(g, s)| (s.clone(), table.rows[0][2 * g] as usize))
        .filter(|&(_, e)| e != 0)
        .collect();
    Ok(group.with_labels(labels))
}

/// Runs the enumeration and returns the compacted coset table, cosets
/// renumbered in order of definition.
pub fn enumerate_table(p: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::Argument("max_cosets must be at least 1".into()));
    }
    let ngens = p.generators.len();
    let relators: Vec<Vec<usize>> = p
        .relators
        .iter()
        .map(|r| {
            r.letters()
                .map(|(g, s)| 2 * g + usize::from(s < 0))
                .collect()
        })
        .collect();
    let mut e = Enumerator::new(ngens, max_cosets);
    let mut current = 0u32;
    while (current as usize) < e.allocated() {
        for r in &relators {
            if !e.is_live(current) {
                break;
            }
            e.scan_and_fill(current, r)?;
        }
        for x in 0..e.cols {
            if !e.is_live(current) {
                break;
            }
            if e.get(current, x) == UNDEF {
                e.define(current, x)?;
            }
        }
        current += 1;
    }
    // Compact: live cosets keep their relative order.
    let mut new_index = vec![UNDEF; e.allocated()];
    let mut count = 0u32;
    for c in 0..e.allocated() as u32 {
        if e.is_live(c) {
            new_index[c as usize] = count;
            count += 1;
        }
    }
    debug_assert_eq!(count as usize, e.live);
    let mut rows = Vec::with_capacity(count as usize);
    for c in 0..e.allocated() as u32 {
        if !e.is_live(c) {
            continue;
        }
        let row: Vec<u32> = (0..e.cols)
            .map(|x| {
                let t = e.get(c, x);
                debug_assert!(t != UNDEF);
                let t = e.rep(t);
                new_index[t as usize]
            })
            .collect();
        rows.push(row);
    }
    Ok(CosetTable { ngens, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;
    use crate::presentation::parse_presentation;

    fn order_of(text: &str) -> usize {
        parse_presentation(text)
            .unwrap()
            .compile(DEFAULT_MAX_COSETS)
            .unwrap()
            .order()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order_of("gens: a\nrels: a^4"), 4);
        assert_eq!(order_of("gens: a b\nrels: a^3, b^2, (ab)^2"), 6);
        assert_eq!(order_of("gens: a b\nrels: a^2, b^2, (ab)^5"), 10);
        assert_eq!(order_of("gens: a b\nrels: a^2, b^3, (ab)^5"), 60);
        assert_eq!(order_of("gens: a b\nrels: a^4=b^4=(ab)^2=(ab^-1)^2=1"), 16);
        assert_eq!(order_of("gens: a\nrels: a^6, a^4"), 2);
        assert_eq!(order_of("gens:\nrels:"), 1);
    }

    #[test]
    fn quaternion_round_trip() {
        let p = parse_presentation("gens: a b\nrels: a^4, b^2a^-2, b^-1aba").unwrap();
        let g = p.compile(DEFAULT_MAX_COSETS).unwrap();
        assert!(is_isomorphic(&g, &FiniteGroup::quaternion8()).is_some());
    }

    #[test]
    fn relators_hold_in_compiled_group() {
        let p = parse_presentation("gens: a b c\nrels: a^4=b^4=c^4=(ab)^2=(ab^-1)^2=1, (ac)^2=(ac^-1)^2=(bc)^2=(bc^-1)^2=a^2b^2c^2=1").unwrap();
        let g = p.compile(DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(g.order(), 32);
        let images: Vec<usize> = p
            .generators
            .iter()
            .map(|name| g.labels().iter().find(|(s, _)| s == name).map_or(0, |l| l.1))
            .collect();
        for r in &p.relators {
            assert_eq!(r.evaluate(&g, &images), 0);
        }
    }

    #[test]
    fn infinite_presentation_hits_limit() {
        let p = parse_presentation("gens: a b\nrels: [a,b]").unwrap();
        assert!(matches!(p.compile(1000), Err(Error::Resource(_))));
    }
}
