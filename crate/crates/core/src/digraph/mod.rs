//! Digraphs with bitset adjacency, and Cayley digraphs over finite groups.

mod connection;
pub mod io;

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

pub use connection::ConnectionSet;

use crate::group::{Elem, FiniteGroup, Subset};

/// A simple digraph on `0..n`, stored as sorted adjacency lists and bitsets
/// in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<u32>>,
    inn: Vec<Vec<u32>>,
    out_bits: Vec<FixedBitSet>,
}

impl Digraph {
    /// Builds a digraph from arcs; duplicates are merged. Panics if an arc
    /// endpoint is `>= n`.
    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Self {
        let mut out_bits = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in arcs {
            assert!(u < n && v < n, "arc ({u}, {v}) outside 0..{n}");
            out_bits[u].insert(v);
        }
        let mut inn = vec![Vec::new(); n];
        let out: Vec<Vec<u32>> = out_bits
            .iter()
            .enumerate()
            .map(|(u, b)| {
                b.ones()
                    .map(|v| {
                        inn[v].push(u as u32);
                        v as u32
                    })
                    .collect()
            })
            .collect();
        Digraph { out, inn, out_bits }
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_bits[u].contains(v)
    }

    #[inline]
    pub fn out_neighbours(&self, u: usize) -> &[u32] {
        &self.out[u]
    }

    #[inline]
    pub fn in_neighbours(&self, u: usize) -> &[u32] {
        &self.inn[u]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].len()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.inn[u].len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v as usize)))
    }

    /// Whether some pair of vertices is joined in both directions.
    pub fn has_digon(&self) -> bool {
        self.arcs().any(|(u, v)| self.has_arc(v, u))
    }

    /// Whether `perm` (vertex `v` goes to `perm[v]`) is a bijection that
    /// maps arcs onto arcs.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.order();
        if perm.len() != n {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for &p in perm {
            if p >= n || seen.put(p) {
                return false;
            }
        }
        (0..n).all(|u| {
            self.out[u].len() == self.out[perm[u]].len()
                && self.out[u].iter().all(|&v| self.has_arc(perm[u], perm[v as usize]))
        })
    }

    /// The subdigraph induced on `xs`; vertex `i` of the result is the
    /// `i`-th member of `xs` in increasing order, returned alongside.
    pub fn induced(&self, xs: &Subset) -> (Digraph, Vec<usize>) {
        let verts = xs.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let arcs = verts.iter().enumerate().flat_map(|(i, &u)| {
            let index = &index;
            self.out[u]
                .iter()
                .filter(move |&&v| index[v as usize] != usize::MAX)
                .map(move |&v| (i, index[v as usize]))
        });
        (Digraph::from_arcs(verts.len(), arcs), verts)
    }

    /// Weak components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in self.out[u].iter().chain(&self.inn[u]) {
                    let v = v as usize;
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn weakly_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// `Cay(G, S)`: vertices are the elements of `G` and `(x, y)` is an arc iff
/// `y x^{-1}` lies in `S`, so the out-neighbours of `x` are `S x`.
#[derive(Clone, Debug)]
pub struct CayleyDigraph<'g> {
    group: &'g FiniteGroup,
    conn: ConnectionSet,
    graph: Digraph,
}

impl<'g> CayleyDigraph<'g> {
    pub fn new(group: &'g FiniteGroup, conn: ConnectionSet) -> Self {
        assert_eq!(conn.members().universe(), group.order(), "S must live in G");
        let arcs = group
            .elements()
            .flat_map(|x| conn.iter().map(move |s| (x, group.mul(s, x))));
        let graph = Digraph::from_arcs(group.order(), arcs);
        CayleyDigraph { group, conn, graph }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.conn
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    /// The subdigraph induced on the out-neighbourhood `S` of the identity.
    pub fn neighbourhood_digraph(&self) -> (Digraph, Vec<usize>) {
        self.graph.induced(self.conn.members())
    }

    /// All `w` with arcs `(w, u)` and `(w, v)` whose labels `u w^{-1}`,
    /// `v w^{-1}` lie in `via`.
    pub fn mutual_inneighbours(&self, u: Elem, v: Elem, via: &Subset) -> Subset {
        let g = self.group;
        let mut out = Subset::empty(g.order());
        for s in via.iter() {
            let w = g.mul(g.inv(s), u);
            if via.contains(g.mul(v, g.inv(w))) {
                out.insert(w);
            }
        }
        out
    }
}

/// Shorthand for [`CayleyDigraph::new`].
pub fn cayley(group: &FiniteGroup, conn: ConnectionSet) -> CayleyDigraph<'_> {
    CayleyDigraph::new(group, conn)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cay<'g>(g: &'g FiniteGroup, s: &[Elem]) -> CayleyDigraph<'g> {
        cayley(g, ConnectionSet::from_elems(g, s.iter().copied()))
    }

    #[test]
    fn directed_cycle() {
        let c5 = FiniteGroup::cyclic(5).unwrap();
        let g = cay(&c5, &[1]);
        assert_eq!(g.graph().arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(!g.graph().has_digon());
    }

    #[test]
    fn klein_four_square() {
        let v4 = FiniteGroup::elementary_abelian(2).unwrap();
        let g = cay(&v4, &[1, 2]);
        assert_eq!(g.graph().arc_count(), 8);
        assert!(g.graph().has_digon());
    }

    #[test]
    fn q8_has_no_digons() {
        let q8 = FiniteGroup::quaternion8();
        let g = cay(&q8, &[2, 4]);
        assert!(g.connection_set().is_antisymmetric());
        assert!(!g.graph().has_digon());
        assert!((0..8).all(|v| g.graph().out_degree(v) == 2 && g.graph().in_degree(v) == 2));
    }

    #[test]
    fn induced_and_components() {
        let c8 = FiniteGroup::cyclic(8).unwrap();
        let g = cay(&c8, &[1, 2]);
        let (delta, verts) = g.neighbourhood_digraph();
        assert_eq!(verts, vec![1, 2]);
        assert_eq!(delta.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(delta.weakly_connected());
        let two = Digraph::from_arcs(2, []);
        assert_eq!(two.components().len(), 2);
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]);
        assert!(path.weakly_connected());
    }

    #[test]
    fn mutual_inneighbours_of_cycle_are_empty() {
        let c5 = FiniteGroup::cyclic(5).unwrap();
        let g = cay(&c5, &[1]);
        let via = Subset::from_elems(5, [1]);
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert!(g.mutual_inneighbours(u, v, &via).is_empty());
                }
            }
        }
    }

    #[test]
    fn automorphism_check() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let g = cay(&c4, &[1]);
        assert!(g.graph().is_automorphism(&[1, 2, 3, 0]));
        assert!(!g.graph().is_automorphism(&[0, 3, 2, 1]));
        assert!(!g.graph().is_automorphism(&[0, 0, 2, 3]));
    }
}
