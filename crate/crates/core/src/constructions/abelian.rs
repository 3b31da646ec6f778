//! ORRs of abelian 2-groups and beautiful generating tuples.

use std::collections::BTreeSet;

use super::{log2_exact, oriented_set};
use crate::digraph::{cayley, ConnectionSet};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GeneratingTuple, Subset};

/// Irredundant generating tuple whose members and consecutive quotients
/// `g_{i+1} g_i^{-1}` all have order greater than 2.
pub fn beautiful_tuple_check(g: &FiniteGroup, t: &GeneratingTuple) -> bool {
    let x = &t.0;
    x.iter().all(|&e| e < g.order())
        && t.generates(g)
        && t.is_irredundant(g)
        && x.iter().all(|&e| g.order_of(e) > 2)
        && x.windows(2)
            .all(|w| g.order_of(g.mul(w[1], g.inv(w[0]))) > 2)
}

/// Which of the three displayed shapes the construction used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbelianShape {
    /// `A` cyclic: `S = {x_1, x_1^2}`.
    Cyclic,
    /// `o(a_1) > 4`.
    LargeFirstFactor,
    /// `o(a_1) = o(a_2) = 4`.
    TwoFactorsOfOrderFour,
}

/// The connection set `S = X ∪ Y` for an abelian 2-group, with the data
/// needed to check it.
#[derive(Clone, Debug)]
pub struct AbelianOrr {
    pub shape: AbelianShape,
    /// Invariant-factor generators `a_1, ..., a_m`.
    pub factors: Vec<Elem>,
    pub x: Vec<Elem>,
    pub y: Vec<Elem>,
    pub set: ConnectionSet,
}

impl AbelianOrr {
    /// The arcs of the induced subdigraph on `S` that the construction is
    /// built around, as pairs of group elements.
    pub fn expected_arcs(&self, g: &FiniteGroup) -> BTreeSet<(Elem, Elem)> {
        let x = &self.x;
        let m = x.len();
        let q = |i: usize| g.mul(x[i], g.inv(x[i - 1]));
        let mut arcs = BTreeSet::new();
        for i in 1..m {
            arcs.insert((x[i - 1], x[i]));
            arcs.insert((q(i), x[i]));
        }
        match self.shape {
            AbelianShape::Cyclic => {
                arcs.insert((x[0], g.mul(x[0], x[0])));
            }
            AbelianShape::LargeFirstFactor => {
                let x1i = g.inv(x[0]);
                arcs.insert((x[0], q(1)));
                arcs.insert((g.product([x[1], x1i, x1i]), q(1)));
            }
            AbelianShape::TwoFactorsOfOrderFour => {
                let p = g.mul(x[0], x[1]);
                arcs.insert((x[0], p));
                arcs.insert((x[1], p));
            }
        }
        arcs
    }

    /// The arcs actually present in the subdigraph induced on `S`.
    pub fn induced_arcs(&self, g: &FiniteGroup) -> BTreeSet<(Elem, Elem)> {
        let s = self.set.to_vec();
        let mut arcs = BTreeSet::new();
        for &u in &s {
            for &v in &s {
                if u != v && self.set.contains(g.mul(v, g.inv(u))) {
                    arcs.insert((u, v));
                }
            }
        }
        arcs
    }

    /// Whether the induced subdigraph has exactly the expected arcs.
    pub fn arcs_match(&self, g: &FiniteGroup) -> bool {
        self.induced_arcs(g) == self.expected_arcs(g)
    }
}

/// The construction for the abelian subgroup `a` of `g`.
pub fn abelian_2group_orr_in(g: &FiniteGroup, a: &Subset) -> Result<AbelianOrr> {
    if !g.is_subgroup(a) || !g.is_abelian_subset(a) {
        return Err(Error::precondition("A is abelian", "A is not an abelian subgroup"));
    }
    if log2_exact(a.len()).is_none() {
        return Err(Error::precondition(
            "A is a 2-group",
            format!("|A| = {} is not a power of 2", a.len()),
        ));
    }
    let factors = g.invariant_factors_in(a)?;
    let orders: Vec<usize> = factors.iter().map(|f| f.order).collect();
    if orders.iter().all(|&o| o <= 2) {
        return Err(Error::precondition(
            "A is not elementary abelian",
            format!("A has invariant factors {orders:?}"),
        ));
    }
    if orders[0] == 4 && orders[1..].iter().all(|&o| o == 2) {
        return Err(Error::precondition(
            "A is not C4 x C2^(k-2)",
            format!("A has invariant factors {orders:?}"),
        ));
    }
    let gens: Vec<Elem> = factors.iter().map(|f| f.generator).collect();
    let m = gens.len();
    let a1 = gens[0];
    let a1i = g.inv(a1);
    let shape = if m == 1 {
        AbelianShape::Cyclic
    } else if orders[0] > 4 {
        AbelianShape::LargeFirstFactor
    } else {
        AbelianShape::TwoFactorsOfOrderFour
    };
    let mut x = vec![a1];
    for i in 1..m {
        // 0-based `i` stands for the 1-based index `i + 1`.
        let xi = match shape {
            AbelianShape::TwoFactorsOfOrderFour if i == 1 => gens[1],
            AbelianShape::TwoFactorsOfOrderFour if i % 2 == 0 => g.mul(a1, gens[i]),
            AbelianShape::TwoFactorsOfOrderFour => g.mul(gens[1], gens[i]),
            _ if i % 2 == 1 => g.mul(a1i, gens[i]),
            _ => g.mul(a1, gens[i]),
        };
        x.push(xi);
    }
    let mut y = match shape {
        AbelianShape::Cyclic => vec![g.mul(a1, a1)],
        AbelianShape::LargeFirstFactor => vec![g.product([x[1], a1i, a1i])],
        AbelianShape::TwoFactorsOfOrderFour => vec![g.mul(x[0], x[1])],
    };
    y.extend((1..m).map(|i| g.mul(x[i], g.inv(x[i - 1]))));
    let elems: Vec<Elem> = x.iter().chain(&y).copied().collect();
    let set = oriented_set(g, &elems, "abelian construction")?;
    Ok(AbelianOrr {
        shape,
        factors: gens,
        x,
        y,
        set,
    })
}

/// The construction for a whole abelian 2-group.
pub fn abelian_2group_orr_set(a: &FiniteGroup) -> Result<ConnectionSet> {
    Ok(abelian_2group_orr_in(a, &Subset::full(a.order()))?.set)
}

/// Whether the subdigraph induced on `S` is weakly connected.
pub(crate) fn neighbourhood_is_connected(g: &FiniteGroup, s: &ConnectionSet) -> bool {
    cayley(g, s.clone()).neighbourhood_digraph().0.weakly_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;
    use crate::constructions::verify_orr;

    #[test]
    fn cyclic_of_order_eight() {
        let c8 = FiniteGroup::cyclic(8).unwrap();
        let s = abelian_2group_orr_set(&c8).unwrap();
        assert_eq!(s.to_vec(), vec![1, 2]);
    }

    #[test]
    fn c8_x_c2_matches_display() {
        // Mixed radix: a1 = 2, a2 = 1.
        let g = FiniteGroup::abelian(&[8, 2]).unwrap();
        let r = abelian_2group_orr_in(&g, &Subset::full(16)).unwrap();
        let (a1, a2) = (r.factors[0], r.factors[1]);
        let a1i = g.inv(a1);
        let want = [
            a1,
            g.mul(a1i, a2),
            g.product([a2, a1i, a1i, a1i]),
            g.product([a2, a1i, a1i]),
        ];
        assert_eq!(r.set.len(), 4);
        assert!(want.iter().all(|&e| r.set.contains(e)));
        assert!(r.arcs_match(&g));
        assert!(verify_orr(&g, &r.set, None).unwrap().is_orr());
    }

    #[test]
    fn c4_x_c4_matches_display() {
        let g = FiniteGroup::abelian(&[4, 4]).unwrap();
        let r = abelian_2group_orr_in(&g, &Subset::full(16)).unwrap();
        let (a1, a2) = (r.factors[0], r.factors[1]);
        let want = [a1, a2, g.mul(a1, a2), g.mul(a2, g.inv(a1))];
        assert!(want.iter().all(|&e| r.set.contains(e)));
        assert!(r.arcs_match(&g));
        assert!(neighbourhood_is_connected(&g, &r.set));
        let (delta, _) = cayley(&g, r.set.clone()).neighbourhood_digraph();
        assert_eq!(automorphism_group(&delta).unwrap().order, 1);
    }

    #[test]
    fn hypotheses_are_enforced() {
        let e = abelian_2group_orr_set(&FiniteGroup::elementary_abelian(3).unwrap()).unwrap_err();
        assert!(matches!(e, Error::Precondition { clause: "A is not elementary abelian", .. }));
        let e = abelian_2group_orr_set(&FiniteGroup::abelian(&[4, 2, 2]).unwrap()).unwrap_err();
        assert!(matches!(e, Error::Precondition { clause: "A is not C4 x C2^(k-2)", .. }));
        assert!(abelian_2group_orr_set(&FiniteGroup::cyclic(6).unwrap()).is_err());
    }

    #[test]
    fn beautiful_examples() {
        let c5 = FiniteGroup::cyclic(5).unwrap();
        assert!(beautiful_tuple_check(&c5, &GeneratingTuple(vec![1])));
        let e3 = FiniteGroup::elementary_abelian(3).unwrap();
        assert!(!beautiful_tuple_check(&e3, &GeneratingTuple(vec![1, 2, 4])));
        let g = FiniteGroup::abelian(&[4, 4]).unwrap();
        let a1 = 4;
        let a2 = 1;
        assert!(beautiful_tuple_check(&g, &GeneratingTuple(vec![a1, g.mul(g.inv(a1), a2)])));
    }
}
