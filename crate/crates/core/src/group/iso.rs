//! Isomorphisms and automorphisms by backtracking over generator images.

use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};
use crate::util::UnionFind;

/// Largest group for which [`group_automorphisms`] runs.
pub const AUT_MAX_ORDER: usize = 64;

/// A generating set for `Aut(G)` and its exact order. Each generator is the
/// image table `x -> x^alpha`.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub generators: Vec<Vec<Elem>>,
    pub order: u128,
}

/// Homomorphism search from `src` to `dst` fixing the images of a generating
/// tuple of `src` one at a time.
struct MorphismSearch<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    tuple: &'a [Elem],
    candidates: Vec<Vec<Elem>>,
}

impl<'a> MorphismSearch<'a> {
    fn new(src: &'a FiniteGroup, dst: &'a FiniteGroup) -> Self {
        let tuple = src.generators();
        let candidates = tuple
            .iter()
            .map(|&t| dst.elements().filter(|&y| dst.order_of(y) == src.order_of(t)).collect())
            .collect();
        MorphismSearch {
            src,
            dst,
            tuple,
            candidates,
        }
    }

    /// The injective homomorphism on `<tuple[..images.len()]>` sending
    /// `tuple[j]` to `images[j]`, if one exists. Unmapped entries hold
    /// `usize::MAX`.
    fn partial_map(&self, images: &[Elem]) -> Option<Vec<Elem>> {
        let mut map = vec![usize::MAX; self.src.order()];
        let mut used = vec![false; self.dst.order()];
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (j, &img) in images.iter().enumerate() {
                let y = self.src.mul(x, self.tuple[j]);
                let z = self.dst.mul(map[x], img);
                if map[y] == usize::MAX {
                    if used[z] {
                        return None;
                    }
                    map[y] = z;
                    used[z] = true;
                    queue.push(y);
                } else if map[y] != z {
                    return None;
                }
            }
        }
        Some(map)
    }

    /// Completes `images` (a prefix) to a full embedding, depth first.
    fn extend(&self, images: &mut Vec<Elem>) -> Option<Vec<Elem>> {
        let level = images.len();
        if level == self.tuple.len() {
            return self.partial_map(images);
        }
        for &c in &self.candidates[level] {
            images.push(c);
            if self.partial_map(images).is_some() {
                if let Some(m) = self.extend(images) {
                    images.pop();
                    return Some(m);
                }
            }
            images.pop();
        }
        None
    }
}

/// An isomorphism `g -> h` as an image table, if the groups are isomorphic.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<Elem>> {
    if g.order() != h.order() || g.order_statistics() != h.order_statistics() {
        return None;
    }
    let search = MorphismSearch::new(g, h);
    search.extend(&mut Vec::new())
}

/// Generators and order of `Aut(G)` for `|G| <= 64`.
///
/// Works down the stabiliser chain of a generating tuple `t`: at level `i`
/// it computes the orbit of `t_i` under the automorphisms fixing
/// `t_0..t_{i-1}`, testing one candidate image per unresolved orbit. The
/// group order is the product of the orbit lengths.
pub fn group_automorphisms(g: &FiniteGroup) -> Result<AutomorphismGroup> {
    if g.order() > AUT_MAX_ORDER {
        return Err(Error::Resource(format!(
            "automorphism search is limited to order {AUT_MAX_ORDER}, got {}",
            g.order()
        )));
    }
    let search = MorphismSearch::new(g, g);
    let tuple = search.tuple;
    let n = g.order();
    let mut generators: Vec<Vec<Elem>> = Vec::new();
    let mut order: u128 = 1;
    let mut uf = UnionFind::new(n);
    for level in (0..tuple.len()).rev() {
        let target = tuple[level];
        let mut failed: Vec<Elem> = Vec::new();
        for &c in &search.candidates[level] {
            if uf.find(c) == uf.find(target) || failed.iter().any(|&f| uf.find(f) == uf.find(c)) {
                continue;
            }
            let mut images: Vec<Elem> = tuple[..level].to_vec();
            images.push(c);
            let found = search
                .partial_map(&images)
                .and_then(|_| search.extend(&mut images));
            match found {
                Some(m) => {
                    for (x, &y) in m.iter().enumerate() {
                        uf.union(x, y);
                    }
                    generators.push(m);
                }
                None => failed.push(c),
            }
        }
        let root = uf.find(target);
        let orbit = (0..n).filter(|&x| uf.find(x) == root).count();
        order *= orbit as u128;
    }
    Ok(AutomorphismGroup { generators, order })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aut_order(g: &FiniteGroup) -> u128 {
        group_automorphisms(g).unwrap().order
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(aut_order(&FiniteGroup::elementary_abelian(3).unwrap()), 168);
        assert_eq!(aut_order(&FiniteGroup::quaternion8()), 24);
        assert_eq!(aut_order(&FiniteGroup::cyclic(5).unwrap()), 4);
        assert_eq!(aut_order(&FiniteGroup::dihedral(4).unwrap()), 8);
        assert_eq!(aut_order(&FiniteGroup::abelian(&[4, 2]).unwrap()), 8);
        assert_eq!(aut_order(&FiniteGroup::cyclic(1).unwrap()), 1);
    }

    #[test]
    fn automorphism_generators_are_automorphisms() {
        let g = FiniteGroup::abelian(&[4, 2, 2]).unwrap();
        let aut = group_automorphisms(&g).unwrap();
        assert_eq!(aut.order, 192);
        for m in &aut.generators {
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(m[g.mul(x, y)], g.mul(m[x], m[y]));
                }
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let v4 = FiniteGroup::elementary_abelian(2).unwrap();
        assert!(is_isomorphic(&c4, &v4).is_none());
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let q8 = FiniteGroup::quaternion8();
        assert!(is_isomorphic(&d4, &q8).is_none());
        let c6 = FiniteGroup::cyclic(6).unwrap();
        let c3c2 = FiniteGroup::abelian(&[3, 2]).unwrap();
        let map = is_isomorphic(&c6, &c3c2).unwrap();
        for x in c6.elements() {
            for y in c6.elements() {
                assert_eq!(map[c6.mul(x, y)], c3c2.mul(map[x], map[y]));
            }
        }
    }

    #[test]
    fn large_groups_are_refused() {
        let g = FiniteGroup::cyclic(65).unwrap();
        assert!(matches!(group_automorphisms(&g), Err(Error::Resource(_))));
    }
}
