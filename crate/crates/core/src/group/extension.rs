//! Extensions of a group by a cyclic group of order 2.

use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};

impl FiniteGroup {
    /// The group `K ∪ Kx` with `x k = phi(k) x` and `x^2 = c`.
    ///
    /// Requires `phi` to be an automorphism of `K` with `phi(c) = c` and
    /// `phi^2` equal to conjugation `k -> c k c^{-1}`; these are exactly the
    /// conditions for the multiplication below to be associative. Element
    /// `k` keeps its index and `k x` is `|K| + k`. The labels of `K` are
    /// kept and `x` is added under `label`.
    pub fn c2_extension(k: &FiniteGroup, phi: &[Elem], c: Elem, label: &str) -> Result<Self> {
        let m = k.order();
        if phi.len() != m || c >= m {
            return Err(Error::Argument("extension data does not match K".into()));
        }
        let mut hit = vec![false; m];
        for &y in phi {
            if y >= m || std::mem::replace(&mut hit[y], true) {
                return Err(Error::Validation("phi is not a permutation of K".into()));
            }
        }
        for a in k.elements() {
            for b in k.elements() {
                if phi[k.mul(a, b)] != k.mul(phi[a], phi[b]) {
                    return Err(Error::Validation(format!("phi is not a homomorphism at ({a}, {b})")));
                }
            }
        }
        if phi[c] != c {
            return Err(Error::Validation("phi does not fix x^2".into()));
        }
        let cinv = k.inv(c);
        if let Some(a) = k.elements().find(|&a| phi[phi[a]] != k.mul(k.mul(c, a), cinv)) {
            return Err(Error::Validation(format!(
                "phi^2 is not conjugation by x^2 at {a}"
            )));
        }
        let name = format!("{}.2", k.name());
        let g = FiniteGroup::from_fn(name, 2 * m, |a, b| {
            let (ka, ea) = (a % m, a / m);
            let (kb, eb) = (b % m, b / m);
            match (ea, eb) {
                (0, _) => k.mul(ka, kb) + eb * m,
                (_, 0) => k.mul(ka, phi[kb]) + m,
                _ => k.mul(k.mul(ka, phi[kb]), c),
            }
        })?;
        let mut labels = k.labels().to_vec();
        labels.push((label.to_string(), m));
        Ok(g.with_labels(labels))
    }

    /// Image table of the map on `self` determined by sending the
    /// generator tuple `gens` to `images`, or `None` if no homomorphism does
    /// that. The result is only checked to be well defined on the words the
    /// breadth-first search walks along, so callers that need an
    /// automorphism still verify it.
    pub fn extend_to_map(&self, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
        let mut map = vec![usize::MAX; self.order()];
        map[0] = 0;
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (&s, &t) in gens.iter().zip(images) {
                let y = self.mul(x, s);
                let z = self.mul(map[x], t);
                if map[y] == usize::MAX {
                    map[y] = z;
                    queue.push(y);
                } else if map[y] != z {
                    return None;
                }
            }
        }
        (queue.len() == self.order()).then_some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_extension_of_c4_by_inversion_is_d4() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let inv: Vec<Elem> = c4.elements().map(|x| c4.inv(x)).collect();
        let d4 = FiniteGroup::c2_extension(&c4, &inv, 0, "t").unwrap();
        assert!(crate::group::is_isomorphic(&d4, &FiniteGroup::dihedral(4).unwrap()).is_some());
    }

    #[test]
    fn nonsplit_extension_gives_q8() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let inv: Vec<Elem> = c4.elements().map(|x| c4.inv(x)).collect();
        let q8 = FiniteGroup::c2_extension(&c4, &inv, 2, "j").unwrap();
        assert!(crate::group::is_isomorphic(&q8, &FiniteGroup::quaternion8()).is_some());
    }

    #[test]
    fn bad_data_is_rejected() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let id: Vec<Elem> = c4.elements().collect();
        // Trivial action with x^2 = a gives C8; a non-homomorphism is refused.
        assert!(FiniteGroup::c2_extension(&c4, &id, 1, "x").is_ok());
        assert!(FiniteGroup::c2_extension(&c4, &[0, 2, 1, 3], 0, "x").is_err());
    }

    #[test]
    fn extend_to_map_on_cyclic() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        let m = c6.extend_to_map(&[1], &[5]).unwrap();
        assert_eq!(m, vec![0, 5, 4, 3, 2, 1]);
        assert!(c6.extend_to_map(&[1, 2], &[1, 1]).is_none());
    }
}
