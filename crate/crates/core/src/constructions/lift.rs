//! Lifting an ORR of a normal subgroup with elementary abelian quotient.

use super::abelian::neighbourhood_is_connected;
use super::{check_elem, log2_exact, quotient_is_elementary, require_orr};
use crate::digraph::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::extend_span;
use crate::group::{Elem, FiniteGroup, Subset};

fn check_normal_elementary(g: &FiniteGroup, n: &Subset) -> Result<()> {
    if n.universe() != g.order() || !g.is_subgroup(n) || !g.is_normal(n) {
        return Err(Error::precondition("N is a normal subgroup", "N is not normal in G"));
    }
    if !quotient_is_elementary(g, n) {
        return Err(Error::precondition(
            "G/N is elementary abelian",
            "some square or commutator lies outside N",
        ));
    }
    Ok(())
}

/// Elements `a_1, ..., a_k` of order greater than 2 whose cosets form a
/// basis of `G/N`.
///
/// Greedy over elements in index order: an element of order greater than 2
/// is taken whenever its coset is independent of those already chosen. The
/// cosets of such elements span `G/N` unless `G` is generalised dihedral.
pub fn find_nonsplit_generators(g: &FiniteGroup, n: &Subset) -> Result<Vec<Elem>> {
    if g.is_generalized_dihedral() {
        return Err(Error::precondition(
            "G is not generalised dihedral",
            format!("{} is generalised dihedral", g.name()),
        ));
    }
    check_normal_elementary(g, n)?;
    let mut span = n.clone();
    let mut out = Vec::new();
    for x in g.elements() {
        if span.len() == g.order() {
            break;
        }
        if g.order_of(x) > 2 && !span.contains(x) {
            out.push(x);
            extend_span(g, &mut span, x);
        }
    }
    if span.len() != g.order() {
        return Err(Error::Validation(
            "elements of order greater than 2 do not generate G modulo N".into(),
        ));
    }
    Ok(out)
}

/// `S = T ∪ {a_1, ..., a_k}` lifting the ORR `Cay(N, T)` to `G`.
///
/// All hypotheses are checked, including that `Cay(N, T)` is an ORR whose
/// neighbourhood digraph is weakly connected.
pub fn l1_extension(
    g: &FiniteGroup,
    n: &Subset,
    t: &Subset,
    a: &[Elem],
) -> Result<ConnectionSet> {
    check_normal_elementary(g, n)?;
    if t.len() < 2 {
        return Err(Error::precondition("|T| >= 2", format!("|T| = {}", t.len())));
    }
    if !t.is_subset(n) {
        return Err(Error::precondition("T is a subset of N", "T meets G \\ N"));
    }
    let (sub, embed) = g.subgroup(n)?;
    let local = ConnectionSet::from_elems(
        &sub,
        t.iter().map(|x| embed.binary_search(&x).expect("T lies in N")),
    );
    require_orr(&sub, &local, "Cay(N, T) is an ORR")?;
    if !neighbourhood_is_connected(&sub, &local) {
        return Err(Error::precondition(
            "the subdigraph induced on T is weakly connected",
            "it has several weak components",
        ));
    }
    for (i, &x) in a.iter().enumerate() {
        check_elem(g, x, &format!("a_{}", i + 1))?;
        if g.order_of(x) <= 2 {
            return Err(Error::precondition(
                "o(a_i) > 2",
                format!("a_{} has order {}", i + 1, g.order_of(x)),
            ));
        }
        let sq = g.mul(x, x);
        if let Some(y) = n.iter().find(|&y| !g.commutes(sq, y)) {
            return Err(Error::precondition(
                "a_i^2 centralises N",
                format!("a_{}^2 does not commute with {}", i + 1, g.word(y)),
            ));
        }
    }
    let mut span = n.clone();
    for (i, &x) in a.iter().enumerate() {
        if span.contains(x) {
            return Err(Error::precondition(
                "a_1 N, ..., a_k N are independent",
                format!("a_{} lies in <N, a_1, ..., a_{}>", i + 1, i),
            ));
        }
        extend_span(g, &mut span, x);
    }
    if span.len() != g.order() {
        let index = g.order() / n.len();
        return Err(Error::precondition(
            "G = <a, N>",
            format!(
                "{} extenders span a subgroup of index {} in G, but G/N has rank {}",
                a.len(),
                g.order() / span.len(),
                log2_exact(index).unwrap_or(0)
            ),
        ));
    }
    for i in 0..a.len() {
        for j in 0..a.len() {
            if i == j {
                continue;
            }
            let same_square = g.mul(a[i], a[i]) == g.mul(a[j], a[j]);
            let prod = g.mul(a[i], a[j]);
            if same_square && n.iter().all(|y| g.commutes(prod, y)) {
                return Err(Error::precondition(
                    "a_i^2 != a_j^2 or a_i a_j does not centralise N",
                    format!("fails for the pair ({}, {})", i + 1, j + 1),
                ));
            }
        }
    }
    let s = ConnectionSet::from_elems(g, t.iter().chain(a.iter().copied()));
    if !s.is_oriented() {
        return Err(Error::Validation("T ∪ {a_i} is not oriented".into()));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{abelian_2group_orr_in, verify_orr};

    #[test]
    fn nonsplit_examples() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let a = find_nonsplit_generators(&c4, &Subset::from_elems(4, [0, 2])).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(c4.order_of(a[0]), 4);
        let q8 = FiniteGroup::quaternion8();
        let a = find_nonsplit_generators(&q8, &q8.center()).unwrap();
        assert_eq!(a.len(), 2);
        assert!(a.iter().all(|&x| q8.order_of(x) == 4));
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let e = find_nonsplit_generators(&d4, &d4.center()).unwrap_err();
        assert!(matches!(e, Error::Precondition { clause: "G is not generalised dihedral", .. }));
    }

    #[test]
    fn lift_c8xc2_to_c8xc4() {
        // In C8 x C4 (mixed radix) the subgroup C8 x <2> is N.
        let g = FiniteGroup::abelian(&[8, 4]).unwrap();
        let n = Subset::from_elems(32, g.elements().filter(|x| x % 2 == 0));
        let t = abelian_2group_orr_in(&g, &n).unwrap().set;
        let a = find_nonsplit_generators(&g, &n).unwrap();
        assert_eq!(a.len(), 1);
        let s = l1_extension(&g, &n, t.members(), &a).unwrap();
        assert_eq!(s.len(), t.len() + 1);
        assert!(verify_orr(&g, &s, None).unwrap().is_orr());
        // k = 0 returns T itself.
        let full = Subset::full(32);
        let t0 = abelian_2group_orr_in(&g, &full).unwrap().set;
        let s0 = l1_extension(&g, &full, t0.members(), &[]).unwrap();
        assert_eq!(s0.len(), 4);
    }

    #[test]
    fn involution_extender_is_refused() {
        // C8 x C2 x C2 over N = C8 x C2 x 1; the last generator is an involution.
        let g = FiniteGroup::abelian(&[8, 2, 2]).unwrap();
        let n = Subset::from_elems(32, g.elements().filter(|x| x % 2 == 0));
        let t = abelian_2group_orr_in(&g, &n).unwrap().set;
        let e = l1_extension(&g, &n, t.members(), &[1]).unwrap_err();
        assert!(matches!(e, Error::Precondition { clause: "o(a_i) > 2", .. }));
    }
}
