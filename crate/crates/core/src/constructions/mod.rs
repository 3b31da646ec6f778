//! Connection sets for oriented regular representations.
//!
//! Every recipe takes explicit structural data (a basis, a witness, a
//! subgroup) together with the group it lives in, checks all hypotheses, and
//! returns the connection set. None of them trusts its input; the result is
//! still re-verified by callers through [`verify_orr`].

mod abelian;
mod family_b;
mod family_c;
mod family_iii;
mod imrich;
mod lift;
mod reduction;

use std::time::Duration;

pub use abelian::{
    abelian_2group_orr_in, abelian_2group_orr_set, beautiful_tuple_check, AbelianOrr, AbelianShape,
};
pub use family_b::{
    b_family_group, construct_bi_set, construct_bii_set, BiBranch, BiConstruction, BiKind,
    BiWitness,
};
pub use family_c::{
    c_family_from_action, c_family_group, construct_c_set, find_not_inverted, find_order4_not_centralised, CCase,
    CConstruction, CPreset, CWitness,
};
pub use family_iii::{
    caseiii_group, construct_iii_set, first_caseiii_params, CaseIIIBase, CaseIIIParams, CaseIIIWitness, IIIBranch,
    IIIConstruction,
};
pub use imrich::{
    b_distinct_check, bx2_counting_claim, imrich_connection_set, imrich_set,
    mutual_inneighbour_property, ImrichTuple,
};
pub use lift::{find_nonsplit_generators, l1_extension};
pub use reduction::{case_ii_group, prop_reduction_dispatch, CaseIIWitness, ReductionVerdict};

use crate::aut::{stabiliser_is_trivial, StabiliserReport, DEFAULT_TIMEOUT};
use crate::digraph::{cayley, ConnectionSet};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subset};

/// The three checks that make `Cay(G, S)` an ORR.
#[derive(Clone, Debug)]
pub struct OrrVerification {
    pub oriented: bool,
    pub generates: bool,
    pub stabiliser: StabiliserReport,
}

impl OrrVerification {
    /// Oriented with trivial identity stabiliser. A non-generating `S` only
    /// passes for `|G| <= 2`, since otherwise a translation of one component
    /// fixes the identity.
    pub fn is_orr(&self) -> bool {
        self.oriented && self.stabiliser.trivial
    }
}

/// Decides whether `Cay(G, S)` is an ORR.
pub fn verify_orr(
    g: &FiniteGroup,
    s: &ConnectionSet,
    timeout: Option<Duration>,
) -> Result<OrrVerification> {
    let oriented = s.is_oriented();
    let generates = s.generates();
    let graph = cayley(g, s.clone());
    let stabiliser = stabiliser_is_trivial(graph.graph(), 0, timeout)?;
    Ok(OrrVerification {
        oriented,
        generates,
        stabiliser,
    })
}

/// [`verify_orr`] that turns a negative answer into an error, for the places
/// where the set is a hypothesis of something else.
pub(crate) fn require_orr(g: &FiniteGroup, s: &ConnectionSet, what: &'static str) -> Result<()> {
    let v = verify_orr(g, s, Some(DEFAULT_TIMEOUT))?;
    if !v.oriented {
        return Err(Error::precondition(what, "connection set is not oriented"));
    }
    if !v.stabiliser.trivial {
        return Err(Error::precondition(what, "Cayley digraph has a non-trivial stabiliser"));
    }
    Ok(())
}

/// Pairwise commuting involutions generating a group of order `2^len`.
pub(crate) fn is_elementary_basis(g: &FiniteGroup, basis: &[Elem]) -> bool {
    basis.len() < usize::BITS as usize
        && basis.iter().all(|&x| x < g.order() && g.order_of(x) == 2)
        && basis
            .iter()
            .enumerate()
            .all(|(i, &x)| basis[i + 1..].iter().all(|&y| g.commutes(x, y)))
        && g.closure(basis).len() == 1usize << basis.len()
}

/// Whether every `x^2` and every commutator of `G` lies in the subgroup `n`,
/// i.e. `G/N` is elementary abelian (for `N` normal).
pub(crate) fn quotient_is_elementary(g: &FiniteGroup, n: &Subset) -> bool {
    let gens = g.generators();
    g.elements().all(|x| n.contains(g.mul(x, x)))
        && gens
            .iter()
            .all(|&x| gens.iter().all(|&y| n.contains(g.commutator(x, y))))
}

/// The coordinates of `x` in the basis of an elementary abelian 2-subgroup,
/// as a bitmask, or `None` if `x` is outside its span.
pub(crate) fn coordinates(g: &FiniteGroup, basis: &[Elem], x: Elem) -> Option<usize> {
    let mut span = vec![(0usize, 0usize)];
    for (i, &b) in basis.iter().enumerate() {
        let more: Vec<(Elem, usize)> = span.iter().map(|&(y, m)| (g.mul(y, b), m | 1 << i)).collect();
        span.extend(more);
    }
    span.into_iter().find(|&(y, _)| y == x).map(|(_, m)| m)
}

/// `log2 |n|` if `n` is a power of two.
pub(crate) fn log2_exact(n: usize) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}

/// `[(B y \ T y) \ {y}]` for the subgroup `b` and `t ⊆ b`.
pub(crate) fn coset_complement(g: &FiniteGroup, b: &Subset, t: &[Elem], y: Elem) -> Vec<Elem> {
    b.iter()
        .filter(|&z| z != 0 && !t.contains(&z))
        .map(|z| g.mul(z, y))
        .collect()
}

pub(crate) fn check_elem(g: &FiniteGroup, x: Elem, what: &str) -> Result<()> {
    if x >= g.order() {
        return Err(Error::Argument(format!(
            "{what} = {x} is not an element of a group of order {}",
            g.order()
        )));
    }
    Ok(())
}

/// Builds the connection set, insisting that the listed elements are
/// distinct and that `S` is oriented.
pub(crate) fn oriented_set(g: &FiniteGroup, elems: &[Elem], what: &str) -> Result<ConnectionSet> {
    let s = ConnectionSet::from_elems(g, elems.iter().copied());
    if s.len() != elems.len() {
        return Err(Error::Validation(format!("{what}: listed elements are not distinct")));
    }
    if !s.is_oriented() {
        let bad = s
            .iter()
            .find(|&x| s.contains(g.inv(x)))
            .expect("non-oriented set has an inverse pair");
        return Err(Error::Validation(format!(
            "{what}: S contains {} together with its inverse",
            g.word(bad)
        )));
    }
    Ok(s)
}
