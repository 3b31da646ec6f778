//! Antisymmetric connection sets, raw or up to `Aut(G)`.
//!
//! A candidate picks, for every inverse pair `{x, x^{-1}}` of
//! non-involutions, one of: neither, `x`, `x^{-1}`. It is stored as the
//! base-3 number whose digit `i` is that choice for pair `i`.

use fixedbitset::FixedBitSet;

use crate::digraph::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{group_automorphisms, Elem, FiniteGroup};

/// Largest number of inverse pairs for which orbits are computed; the
/// visited set then needs `3^17` bits (16 MiB).
pub const ORBIT_MAX_PAIRS: usize = 17;

/// The inverse pairs `(x, x^{-1})` with `x < x^{-1}`, in index order.
#[derive(Clone, Debug)]
pub struct CandidateSpace {
    pairs: Vec<(Elem, Elem)>,
    /// `pair_of[x] = (i, 1)` if `x` is the first member of pair `i`, `(i, 2)` if the second.
    pair_of: Vec<Option<(usize, u8)>>,
}

impl CandidateSpace {
    pub fn new(g: &FiniteGroup) -> Self {
        let mut pairs = Vec::new();
        let mut pair_of = vec![None; g.order()];
        for x in g.elements() {
            let y = g.inv(x);
            if x < y {
                pair_of[x] = Some((pairs.len(), 1));
                pair_of[y] = Some((pairs.len(), 2));
                pairs.push((x, y));
            }
        }
        CandidateSpace { pairs, pair_of }
    }

    pub fn pairs(&self) -> &[(Elem, Elem)] {
        &self.pairs
    }

    /// `3^p` for `p` pairs.
    pub fn raw_count(&self) -> u128 {
        3u128.pow(self.pairs.len() as u32)
    }

    pub fn decode(&self, mut code: u64) -> Vec<Elem> {
        let mut out = Vec::new();
        for &(x, y) in &self.pairs {
            match code % 3 {
                1 => out.push(x),
                2 => out.push(y),
                _ => {}
            }
            code /= 3;
        }
        out.sort_unstable();
        out
    }

    /// The code of an antisymmetric set without involutions or the identity.
    pub fn encode(&self, elems: &[Elem]) -> Result<u64> {
        let mut digits = vec![0u8; self.pairs.len()];
        for &x in elems {
            let (i, d) = self
                .pair_of
                .get(x)
                .copied()
                .flatten()
                .ok_or_else(|| Error::Argument(format!("{x} is not a non-involution")))?;
            if digits[i] != 0 && digits[i] != d {
                return Err(Error::Argument(format!("S contains {x} and its inverse")));
            }
            digits[i] = d;
        }
        Ok(digits.iter().rev().fold(0u64, |acc, &d| acc * 3 + d as u64))
    }

    /// The choice digits of a code, pair 0 first.
    fn digits(&self, mut code: u64) -> Vec<u8> {
        (0..self.pairs.len())
            .map(|_| {
                let d = (code % 3) as u8;
                code /= 3;
                d
            })
            .collect()
    }

    /// Sort key: cardinality, then the chosen pair indices, then which
    /// member of each pair was taken.
    pub fn order_key(&self, code: u64) -> (usize, Vec<usize>, Vec<u8>) {
        let d = self.digits(code);
        let chosen: Vec<usize> = (0..d.len()).filter(|&i| d[i] != 0).collect();
        let signs = chosen.iter().map(|&i| d[i]).collect();
        (chosen.len(), chosen, signs)
    }

    /// Every code in the enumeration order of [`CandidateSpace::order_key`].
    pub fn raw_codes(&self) -> RawCodes<'_> {
        RawCodes {
            space: self,
            size: 0,
            combo: Vec::new(),
            signs: 0,
            done: false,
        }
    }
}

/// Raw candidates by cardinality, then pair combination, then signs.
pub struct RawCodes<'a> {
    space: &'a CandidateSpace,
    size: usize,
    combo: Vec<usize>,
    signs: u64,
    done: bool,
}

impl RawCodes<'_> {
    fn advance_combo(&mut self) -> bool {
        let p = self.space.pairs.len();
        let m = self.combo.len();
        for i in (0..m).rev() {
            if self.combo[i] < p - m + i {
                self.combo[i] += 1;
                for j in i + 1..m {
                    self.combo[j] = self.combo[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for RawCodes<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let pow3: Vec<u64> = (0..self.combo.len())
            .map(|k| 3u64.pow(self.combo[k] as u32))
            .collect();
        let m = self.combo.len();
        let code = (0..m)
            .map(|k| {
                // The first chosen pair carries the most significant sign bit.
                let second = (self.signs >> (m - 1 - k)) & 1;
                (1 + second) * pow3[k]
            })
            .sum();
        self.signs += 1;
        if self.signs == 1 << m {
            self.signs = 0;
            if !self.advance_combo() {
                self.size += 1;
                if self.size > self.space.pairs.len() {
                    self.done = true;
                } else {
                    self.combo = (0..self.size).collect();
                }
            }
        }
        Some(code)
    }
}

/// Orbit representatives of antisymmetric sets under `Aut(G)`.
#[derive(Clone, Debug)]
pub struct OrbitReduction {
    /// Least code of each orbit, sorted by [`CandidateSpace::order_key`].
    pub representatives: Vec<u64>,
    pub orbit_sizes: Vec<u64>,
    pub aut_order: u128,
}

/// Image of a code under an automorphism, as a sum of per-chunk lookups.
struct CodeMap {
    chunks: Vec<Vec<u64>>,
}

const CHUNK: usize = 8;

impl CodeMap {
    fn new(space: &CandidateSpace, alpha: &[Elem]) -> Self {
        let p = space.pairs.len();
        // Where digit value 1 and 2 of pair i land.
        let target: Vec<[u64; 3]> = space
            .pairs
            .iter()
            .map(|&(x, y)| {
                let place = |e: Elem| {
                    let (j, d) = space.pair_of[alpha[e]].expect("automorphisms preserve orders");
                    d as u64 * 3u64.pow(j as u32)
                };
                [0, place(x), place(y)]
            })
            .collect();
        let chunks = (0..p)
            .step_by(CHUNK)
            .map(|start| {
                let len = CHUNK.min(p - start);
                (0..3usize.pow(len as u32))
                    .map(|mut local| {
                        let mut img = 0;
                        for t in &target[start..start + len] {
                            img += t[local % 3];
                            local /= 3;
                        }
                        img
                    })
                    .collect()
            })
            .collect();
        CodeMap { chunks }
    }

    fn apply(&self, mut code: u64) -> u64 {
        let base = 3u64.pow(CHUNK as u32);
        let mut img = 0;
        for c in &self.chunks {
            img += c[(code % base) as usize];
            code /= base;
        }
        img
    }
}

/// Computes the `Aut(G)`-orbits on candidate codes by breadth-first search
/// over a visited bitset.
pub fn orbit_representatives(g: &FiniteGroup, space: &CandidateSpace) -> Result<OrbitReduction> {
    let p = space.pairs.len();
    if p > ORBIT_MAX_PAIRS {
        return Err(Error::Resource(format!(
            "orbit reduction is limited to {ORBIT_MAX_PAIRS} inverse pairs, got {p}"
        )));
    }
    let aut = group_automorphisms(g)?;
    let maps: Vec<CodeMap> = aut.generators.iter().map(|a| CodeMap::new(space, a)).collect();
    let total = 3usize.pow(p as u32);
    let mut seen = FixedBitSet::with_capacity(total);
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..total {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start);
        stack.push(start as u64);
        let mut size = 0u64;
        while let Some(c) = stack.pop() {
            size += 1;
            for m in &maps {
                let d = m.apply(c) as usize;
                if !seen.contains(d) {
                    seen.insert(d);
                    stack.push(d as u64);
                }
            }
        }
        reps.push(start as u64);
        sizes.push(size);
    }
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by_cached_key(|&i| space.order_key(reps[i]));
    Ok(OrbitReduction {
        representatives: order.iter().map(|&i| reps[i]).collect(),
        orbit_sizes: order.iter().map(|&i| sizes[i]).collect(),
        aut_order: aut.order,
    })
}

/// All antisymmetric connection sets, by cardinality and then
/// lexicographically; with `up_to_aut`, one per `Aut(G)`-orbit (the member
/// with the least code).
pub fn enumerate_antisymmetric_sets(
    g: &FiniteGroup,
    up_to_aut: bool,
) -> Result<Box<dyn Iterator<Item = ConnectionSet> + '_>> {
    let space = CandidateSpace::new(g);
    if up_to_aut {
        let orbits = orbit_representatives(g, &space)?;
        Ok(Box::new(
            orbits
                .representatives
                .into_iter()
                .map(move |c| ConnectionSet::from_elems(g, space.decode(c))),
        ))
    } else {
        let codes: Box<dyn Iterator<Item = u64>> = Box::new(space.raw_codes().collect::<Vec<_>>().into_iter());
        Ok(Box::new(codes.map(move |c| ConnectionSet::from_elems(g, space.decode(c)))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raw_counts() {
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(CandidateSpace::new(&q8).raw_count(), 27);
        let c33 = FiniteGroup::abelian(&[3, 3]).unwrap();
        assert_eq!(enumerate_antisymmetric_sets(&c33, false).unwrap().count(), 81);
        let e = FiniteGroup::elementary_abelian(4).unwrap();
        let all: Vec<_> = enumerate_antisymmetric_sets(&e, false).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn raw_order_is_by_cardinality_and_complete() {
        let c5 = FiniteGroup::cyclic(5).unwrap();
        let space = CandidateSpace::new(&c5);
        let codes: Vec<u64> = space.raw_codes().collect();
        assert_eq!(codes.len(), 9);
        let mut sorted = codes.clone();
        sorted.sort_by_key(|&c| space.order_key(c));
        assert_eq!(codes, sorted);
        let mut uniq = codes.clone();
        uniq.sort_unstable();
        uniq.dedup();
        assert_eq!(uniq.len(), 9);
    }

    #[test]
    fn encode_round_trips() {
        let c9 = FiniteGroup::cyclic(9).unwrap();
        let space = CandidateSpace::new(&c9);
        let code = space.encode(&[1, 7, 3]).unwrap();
        assert_eq!(space.decode(code), vec![1, 3, 7]);
        assert!(space.encode(&[1, 8]).is_err());
    }

    #[test]
    fn orbit_sizes_sum_to_raw_count() {
        for g in [
            FiniteGroup::quaternion8(),
            FiniteGroup::abelian(&[3, 3]).unwrap(),
            FiniteGroup::abelian(&[4, 2]).unwrap(),
        ] {
            let space = CandidateSpace::new(&g);
            let r = orbit_representatives(&g, &space).unwrap();
            assert_eq!(r.orbit_sizes.iter().sum::<u64>() as u128, space.raw_count());
            for &s in &r.orbit_sizes {
                assert_eq!(r.aut_order % s as u128, 0);
            }
        }
    }
}
