//! Subgroup-level queries: centralisers, normality, quotients and the
//! generalised dihedral test.

use num_rational::Ratio;

use super::{Elem, FiniteGroup, Subset};
use crate::error::{Error, Result};

/// An abelian subgroup `A` together with an involution `tau` inverting it,
/// with `G = <tau, A>`.
#[derive(Clone, Debug)]
pub struct GenDihedralWitness {
    pub a: Subset,
    pub tau: Elem,
}

impl FiniteGroup {
    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &x)| gens[i + 1..].iter().all(|&y| self.commutes(x, y)))
    }

    /// Whether the members of `s` commute pairwise.
    pub fn is_abelian_subset(&self, s: &Subset) -> bool {
        let v = s.to_vec();
        v.iter()
            .enumerate()
            .all(|(i, &x)| v[i + 1..].iter().all(|&y| self.commutes(x, y)))
    }

    pub fn center(&self) -> Subset {
        let gens = self.generators();
        Subset::from_elems(
            self.n,
            self.elements().filter(|&x| gens.iter().all(|&g| self.commutes(x, g))),
        )
    }

    /// `C_S(x)`: members of `s` commuting with `x`.
    pub fn centralizer_in(&self, s: &Subset, x: Elem) -> Subset {
        Subset::from_elems(self.n, s.iter().filter(|&y| self.commutes(x, y)))
    }

    /// `C_G(X)` for a set of elements `X`.
    pub fn centralizer_of_set(&self, xs: &[Elem]) -> Subset {
        Subset::from_elems(
            self.n,
            self.elements().filter(|&y| xs.iter().all(|&x| self.commutes(x, y))),
        )
    }

    pub fn is_subgroup(&self, h: &Subset) -> bool {
        h.contains(0) && h.iter().all(|x| h.iter().all(|y| h.contains(self.mul(x, y))))
    }

    /// Whether the subgroup `h` is normal. `h` is assumed to be a subgroup.
    pub fn is_normal(&self, h: &Subset) -> bool {
        self.generators()
            .iter()
            .all(|&g| h.iter().all(|x| h.contains(self.conj(x, g))))
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.order_of(x))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    /// Sorted `(element order, count)` pairs, an isomorphism invariant.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for x in self.elements() {
            *counts.entry(self.order_of(x)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    /// The subgroup `h` as a group in its own right. Its elements are the
    /// members of `h` in increasing order; the second value maps new indices
    /// back into `self`.
    pub fn subgroup(&self, h: &Subset) -> Result<(FiniteGroup, Vec<Elem>)> {
        if !self.is_subgroup(h) {
            return Err(Error::Argument("subset is not a subgroup".into()));
        }
        let embed = h.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in embed.iter().enumerate() {
            index[x] = i;
        }
        let sub = FiniteGroup::from_fn(
            format!("subgroup of {}", self.name),
            embed.len(),
            |a, b| index[self.mul(embed[a], embed[b])],
        )?;
        Ok((sub, embed))
    }

    /// `G/N` for a normal subgroup `N`. Cosets are numbered by their least
    /// member; the second value is the projection `G -> G/N`.
    pub fn quotient(&self, n: &Subset) -> Result<(FiniteGroup, Vec<Elem>)> {
        if !self.is_subgroup(n) || !self.is_normal(n) {
            return Err(Error::Argument("quotient needs a normal subgroup".into()));
        }
        let mut coset = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset[x] == usize::MAX {
                for y in n.iter() {
                    coset[self.mul(x, y)] = reps.len();
                }
                reps.push(x);
            }
        }
        let q = FiniteGroup::from_fn(
            format!("{}/N", self.name),
            reps.len(),
            |a, b| coset[self.mul(reps[a], reps[b])],
        )?;
        let mut labels: Vec<(String, Elem)> = Vec::new();
        for (s, e) in &self.labels {
            let c = coset[*e];
            if c != 0 && labels.iter().all(|(_, d)| *d != c) {
                labels.push((s.clone(), c));
            }
        }
        Ok((q.with_labels(labels), coset))
    }

    /// Finds an abelian `A` and involution `tau` with `G = <tau, A>` and
    /// `tau a tau = a^{-1}` on `A`, if they exist.
    ///
    /// Any such `A` of index 2 contains every square, so the candidates are
    /// the index-2 subgroups containing `Q = <g^2>`, i.e. the kernels of the
    /// non-zero functionals on the elementary abelian `G/Q`. For a kernel
    /// `A`, `tau a` being an involution for all `a` means `tau` acts on `A`
    /// as inversion, which forces `A` to be abelian.
    pub fn generalized_dihedral_witness(&self) -> Option<GenDihedralWitness> {
        let squares: Vec<Elem> = self.elements().map(|x| self.mul(x, x)).collect();
        let q = self.closure(&squares);
        // Coordinates of every element in G/Q with respect to a greedy basis.
        let mut coord = vec![u32::MAX; self.n];
        for x in q.iter() {
            coord[x] = 0;
        }
        let mut span: Vec<Elem> = q.to_vec();
        let mut rank = 0;
        for y in self.elements() {
            if coord[y] != u32::MAX {
                continue;
            }
            let bit = 1u32 << rank;
            rank += 1;
            let new: Vec<Elem> = span.iter().map(|&s| self.mul(s, y)).collect();
            for (&s, &t) in span.iter().zip(&new) {
                coord[t] = coord[s] | bit;
            }
            span.extend(new);
        }
        debug_assert_eq!(span.len(), self.n);
        for mask in 1u32..(1u32 << rank) {
            let outside = |x: Elem| (coord[x] & mask).count_ones() % 2 == 1;
            if self.elements().filter(|&x| outside(x)).all(|x| self.order_of(x) == 2) {
                let a = Subset::from_elems(self.n, self.elements().filter(|&x| !outside(x)));
                let tau = self.elements().find(|&x| outside(x)).expect("index 2");
                debug_assert!(self.is_abelian_subset(&a));
                return Some(GenDihedralWitness { a, tau });
            }
        }
        None
    }

    pub fn is_generalized_dihedral(&self) -> bool {
        self.generalized_dihedral_witness().is_some()
    }
}

/// The elements of the subgroup `n` inverted by the map `phi`, and their
/// proportion of `n`. `phi` must restrict to an automorphism of `n`.
pub fn half_inversion_set(
    g: &FiniteGroup,
    n: &Subset,
    phi: impl Fn(Elem) -> Elem,
) -> Result<(Subset, Ratio<usize>)> {
    if !g.is_subgroup(n) {
        return Err(Error::Validation("N is not a subgroup".into()));
    }
    let image: Vec<Elem> = (0..g.order())
        .map(|x| if n.contains(x) { phi(x) } else { usize::MAX })
        .collect();
    let mut hit = Subset::empty(g.order());
    for x in n.iter() {
        let y = image[x];
        if y >= g.order() || !n.contains(y) || !hit.insert(y) {
            return Err(Error::Validation(format!("map is not a permutation of N at {x}")));
        }
    }
    for x in n.iter() {
        for y in n.iter() {
            if image[g.mul(x, y)] != g.mul(image[x], image[y]) {
                return Err(Error::Validation(format!(
                    "map is not a homomorphism at ({x}, {y})"
                )));
            }
        }
    }
    let h = Subset::from_elems(g.order(), n.iter().filter(|&x| image[x] == g.inv(x)));
    let frac = Ratio::new(h.len(), n.len());
    Ok((h, frac))
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centre_of_q8() {
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.center().to_vec(), vec![0, 1]);
        assert!(q8.is_normal(&q8.center()));
    }

    #[test]
    fn centralizer_of_rotation_in_d4() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let rot = Subset::from_elems(8, 0..4);
        assert_eq!(d4.centralizer_in(&rot, 1), rot);
    }

    #[test]
    fn generalized_dihedral_examples() {
        assert!(FiniteGroup::dihedral(4).unwrap().is_generalized_dihedral());
        assert!(FiniteGroup::elementary_abelian(4).unwrap().is_generalized_dihedral());
        assert!(FiniteGroup::cyclic(2).unwrap().is_generalized_dihedral());
        assert!(!FiniteGroup::cyclic(1).unwrap().is_generalized_dihedral());
        assert!(!FiniteGroup::quaternion8().is_generalized_dihedral());
        assert!(!FiniteGroup::cyclic(4).unwrap().is_generalized_dihedral());
        let d6 = FiniteGroup::dihedral(6).unwrap();
        let w = d6.generalized_dihedral_witness().unwrap();
        assert_eq!(w.a.len(), 6);
        assert_eq!(d6.order_of(w.tau), 2);
    }

    #[test]
    fn half_inversion_in_q8() {
        let q8 = FiniteGroup::quaternion8();
        let full = Subset::full(8);
        let (h, f) = half_inversion_set(&q8, &full, |x| q8.conj(x, 2)).unwrap();
        assert_eq!(f, Ratio::new(3, 4));
        assert_eq!(h.to_vec(), vec![0, 1, 4, 5, 6, 7]);
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let (_, f) = half_inversion_set(&c4, &Subset::full(4), |x| c4.inv(x)).unwrap();
        assert_eq!(f, Ratio::from_integer(1));
        assert!(half_inversion_set(&c4, &Subset::full(4), |x| (x + 1) % 4).is_err());
    }

    #[test]
    fn quotient_by_centre() {
        let q8 = FiniteGroup::quaternion8();
        let (q, proj) = q8.quotient(&q8.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
        assert_eq!(proj[2], proj[3]);
    }
}
