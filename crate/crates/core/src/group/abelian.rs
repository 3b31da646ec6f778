//! Abelian groups: invariant factors and the structure of an elementary
//! abelian 2-group under an involutory automorphism.

use super::{Elem, FiniteGroup, Subset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantFactor {
    pub generator: Elem,
    pub order: usize,
}

/// A basis `v_1, w_1, ..., v_l, w_l, e_1, ..., e_k` of an elementary abelian
/// 2-group on which an involution swaps each `v_i` with `w_i` and fixes each
/// `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionModule {
    pub pairs: Vec<(Elem, Elem)>,
    pub fixed: Vec<Elem>,
}

impl InvolutionModule {
    pub fn ell(&self) -> usize {
        self.pairs.len()
    }

    pub fn kappa(&self) -> usize {
        self.fixed.len()
    }

    pub fn basis(&self) -> Vec<Elem> {
        let mut b: Vec<Elem> = self.pairs.iter().flat_map(|&(v, w)| [v, w]).collect();
        b.extend(&self.fixed);
        b
    }
}

impl FiniteGroup {
    /// Invariant factor decomposition of the whole group.
    pub fn invariant_factor_decomposition(&self) -> Result<Vec<InvariantFactor>> {
        self.invariant_factors_in(&Subset::full(self.order()))
    }

    /// Generators `a_1, ..., a_m` of the abelian subgroup `a` with
    /// `a = <a_1> x ... x <a_m>` and `o(a_{i+1}) | o(a_i)`.
    ///
    /// Greedy: `a_i` is the lowest-index element whose order equals the
    /// coset order, inside the lowest-index coset of maximal order in `a / <a_1, ..., a_{i-1}>`.
    /// Because `a_1` has maximal order, every coset of `<a_1>` contains an
    /// element whose order equals the coset's order, and inductively the
    /// same holds at each step, so the chosen elements span a direct product.
    pub fn invariant_factors_in(&self, a: &Subset) -> Result<Vec<InvariantFactor>> {
        if !self.is_subgroup(a) || !self.is_abelian_subset(a) {
            return Err(Error::Argument("invariant factors need an abelian subgroup".into()));
        }
        let mut factors = Vec::new();
        let mut span = self.closure(&[]);
        while span.len() < a.len() {
            let rel_order = |x: Elem| {
                let mut k = 1;
                let mut y = x;
                while !span.contains(y) {
                    y = self.mul(y, x);
                    k += 1;
                }
                k
            };
            let (best, m) = a
                .iter()
                .map(|x| (x, rel_order(x)))
                .fold((0, 0), |acc, (x, k)| if k > acc.1 { (x, k) } else { acc });
            let lift = span
                .iter()
                .map(|s| self.mul(best, s))
                .filter(|&y| self.order_of(y) == m)
                .min()
                .expect("every coset contains an element of its order");
            factors.push(InvariantFactor { generator: lift, order: m });
            let gens: Vec<Elem> = factors.iter().map(|f| f.generator).collect();
            span = self.closure(&gens);
        }
        debug_assert_eq!(factors.iter().map(|f| f.order).product::<usize>(), a.len());
        Ok(factors)
    }

    /// Decomposes the elementary abelian subgroup `v` under the involutory
    /// automorphism `act`.
    ///
    /// The pairs are chosen so that the products `v_i w_i` form a basis of the
    /// image of `x -> x act(x)`; the fixed vectors extend that image to a basis
    /// of the fixed space.
    pub fn decompose_involution_module(
        &self,
        v: &Subset,
        act: impl Fn(Elem) -> Elem,
    ) -> Result<InvolutionModule> {
        if !self.is_subgroup(v)
            || !self.is_abelian_subset(v)
            || v.iter().any(|x| self.order_of(x) > 2)
        {
            return Err(Error::Validation("V must be an elementary abelian subgroup".into()));
        }
        let basis = self.elementary_basis(v);
        for x in v.iter() {
            let y = act(x);
            if y >= self.order() || !v.contains(y) {
                return Err(Error::Validation(format!("action sends {x} outside V")));
            }
            if act(y) != x {
                return Err(Error::Validation(format!("action is not involutory at {x}")));
            }
            for &b in &basis {
                if act(self.mul(x, b)) != self.mul(y, act(b)) {
                    return Err(Error::Validation("action is not a homomorphism".into()));
                }
            }
        }
        let mut image_span = self.closure(&[]);
        let mut pairs = Vec::new();
        for x in v.iter() {
            let t = self.mul(x, act(x));
            if !image_span.contains(t) {
                pairs.push((x, act(x)));
                extend_span(self, &mut image_span, t);
            }
        }
        let mut fixed = Vec::new();
        let mut fixed_span = image_span;
        for x in v.iter() {
            if act(x) == x && !fixed_span.contains(x) {
                fixed.push(x);
                extend_span(self, &mut fixed_span, x);
            }
        }
        Ok(InvolutionModule { pairs, fixed })
    }

    /// A basis of an elementary abelian subgroup, lowest index first.
    pub fn elementary_basis(&self, v: &Subset) -> Vec<Elem> {
        let mut span = self.closure(&[]);
        let mut basis = Vec::new();
        for x in v.iter() {
            if !span.contains(x) {
                basis.push(x);
                extend_span(self, &mut span, x);
            }
        }
        basis
    }
}

/// Adds `x` to a subgroup `span` that `x` normalises and whose quotient by it
/// has exponent 2, i.e. `span <- span ∪ span * x`.
pub(crate) fn extend_span(g: &FiniteGroup, span: &mut Subset, x: Elem) {
    let new: Vec<Elem> = span.iter().map(|s| g.mul(s, x)).collect();
    for y in new {
        span.insert(y);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(g: &FiniteGroup) -> Vec<usize> {
        g.invariant_factor_decomposition()
            .unwrap()
            .iter()
            .map(|f| f.order)
            .collect()
    }

    #[test]
    fn invariant_factor_examples() {
        assert_eq!(orders(&FiniteGroup::abelian(&[8, 2]).unwrap()), vec![8, 2]);
        assert_eq!(orders(&FiniteGroup::abelian(&[4, 3]).unwrap()), vec![12]);
        assert_eq!(orders(&FiniteGroup::abelian(&[2, 4, 2]).unwrap()), vec![4, 2, 2]);
        assert_eq!(orders(&FiniteGroup::abelian(&[2, 6, 4]).unwrap()), vec![12, 2, 2]);
        assert!(FiniteGroup::quaternion8().invariant_factor_decomposition().is_err());
    }

    #[test]
    fn involution_module_examples() {
        let e3 = FiniteGroup::elementary_abelian(3).unwrap();
        let m = e3.decompose_involution_module(&Subset::full(8), |x| x).unwrap();
        assert_eq!((m.ell(), m.kappa()), (0, 3));

        let e2 = FiniteGroup::elementary_abelian(2).unwrap();
        let swap = |x: usize| ((x & 1) << 1) | ((x >> 1) & 1);
        let m = e2.decompose_involution_module(&Subset::full(4), swap).unwrap();
        assert_eq!(m.pairs, vec![(1, 2)]);
        assert!(m.fixed.is_empty());

        let e4 = FiniteGroup::elementary_abelian(4).unwrap();
        let swap_ab = |x: usize| (x & !3) | ((x & 1) << 1) | ((x >> 1) & 1);
        let m = e4.decompose_involution_module(&Subset::full(16), swap_ab).unwrap();
        assert_eq!((m.ell(), m.kappa()), (1, 2));
        assert_eq!(e4.closure(&m.basis()).len(), 16);
    }

    #[test]
    fn involution_module_rejects_non_involution() {
        let e2 = FiniteGroup::elementary_abelian(2).unwrap();
        // x1 -> x2 -> x1x2 -> x1 has order 3.
        let cyc = [0usize, 2, 3, 1];
        assert!(e2.decompose_involution_module(&Subset::full(4), |x| cyc[x]).is_err());
    }
}
