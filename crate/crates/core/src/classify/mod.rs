//! Deciding whether a group admits an ORR: the structural obstructions, the
//! eleven exceptions, the explicit constructions and exhaustive search.

mod brute;
mod candidates;
mod catalog;

use std::time::Duration;

pub use brute::{
    brute_force_orr, brute_force_orr_with, Certificate, NoOrrCertificate, SearchOptions,
    CERTIFIED_MAX_ORDER,
};
pub use candidates::{
    enumerate_antisymmetric_sets, orbit_representatives, CandidateSpace, OrbitReduction,
    ORBIT_MAX_PAIRS,
};
pub use catalog::{small_groups, CatalogEntry, ExceptionCatalog, EXCEPTION_PRESENTATIONS, SMALL_GROUPS};

use crate::constructions::{
    abelian_2group_orr_set, beautiful_tuple_check, construct_bi_set, construct_bii_set,
    construct_c_set, construct_iii_set, first_caseiii_params, prop_reduction_dispatch, verify_orr,
    BiKind, BiWitness, CWitness, CaseIIIBase, CaseIIIWitness, CaseIIWitness, ReductionVerdict,
};
use crate::digraph::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GeneratingTuple};

#[derive(Clone, Debug)]
pub enum Verdict {
    /// `|G| > 2` and `G` is generalised dihedral.
    GeneralisedDihedral,
    /// `G` is isomorphic to the named exception.
    Exception(String),
    /// A connection set that has been checked to give an ORR.
    HasOrr(ConnectionSet),
    NoOrrCertified(NoOrrCertificate),
    Unresolved(String),
}

impl Verdict {
    /// Short label used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::GeneralisedDihedral => "GeneralisedDihedral",
            Verdict::Exception(_) => "Exception",
            Verdict::HasOrr(_) => "HasORR",
            Verdict::NoOrrCertified(_) => "NoORRCertified",
            Verdict::Unresolved(_) => "Unresolved",
        }
    }

    pub fn has_orr(&self) -> bool {
        matches!(self, Verdict::HasOrr(_))
    }
}

/// Structural data for one of the explicit constructions.
#[derive(Clone, Debug)]
pub enum Witness {
    CaseII(CaseIIWitness),
    B(BiWitness),
    C(CWitness),
    CaseIII(CaseIIIWitness),
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    /// Also certify non-existence for exceptions by exhaustive search.
    pub deep: bool,
    pub timeout: Option<Duration>,
}

/// [`classify_with`] with default options and no witnesses.
pub fn classify(g: &FiniteGroup) -> Result<Verdict> {
    classify_with(g, &ClassifyOptions::default(), &[])
}

/// Order 2, then generalised dihedral, then the exceptions, then the
/// constructions (from the given witnesses, or recognised directly for
/// abelian 2-groups), and finally exhaustive search.
pub fn classify_with(g: &FiniteGroup, opts: &ClassifyOptions, witnesses: &[Witness]) -> Result<Verdict> {
    if g.order() == 2 {
        return Ok(Verdict::HasOrr(ConnectionSet::from_elems(g, [])));
    }
    if g.is_generalized_dihedral() {
        return Ok(Verdict::GeneralisedDihedral);
    }
    let exceptions = ExceptionCatalog::new()?;
    if let Some(name) = exceptions.identify(g) {
        if opts.deep {
            match brute_force_orr(g, opts.timeout)? {
                Verdict::HasOrr(_) => {
                    return Err(Error::Validation(format!("{name} has an ORR after all")))
                }
                v @ Verdict::Unresolved(_) => return Ok(v),
                _ => {}
            }
        }
        return Ok(Verdict::Exception(name.to_string()));
    }
    for w in witnesses {
        if let Some(s) = construct_from(g, w)? {
            return checked(g, s, opts.timeout);
        }
    }
    if let Some(s) = recognised_construction(g)? {
        return checked(g, s, opts.timeout);
    }
    brute_force_orr(g, opts.timeout)
}

/// Builds `S` from a witness; `None` when the witness shows that `G` is
/// generalised dihedral (already excluded, so this means the witness is
/// inconsistent with `G`).
fn construct_from(g: &FiniteGroup, w: &Witness) -> Result<Option<ConnectionSet>> {
    Ok(match w {
        Witness::CaseII(w) => match prop_reduction_dispatch(g, w)? {
            ReductionVerdict::Orr(s) => Some(s),
            ReductionVerdict::Bi(b) | ReductionVerdict::Bii(b) => return construct_from(g, &Witness::B(b)),
            ReductionVerdict::C(c) => Some(construct_c_set(g, &c)?.set),
            ReductionVerdict::GeneralisedDihedral => None,
        },
        Witness::B(b) => Some(match b.validate(g)? {
            BiKind::Split => construct_bi_set(g, b)?.set,
            BiKind::SquareIsE1 => construct_bii_set(g, b)?.set,
        }),
        Witness::C(c) => Some(construct_c_set(g, c)?.set),
        Witness::CaseIII(w) => Some(construct_iii_set(g, w)?.set),
    })
}

/// Constructions that need no witness: abelian 2-groups other than
/// `C_2^k` and `C_4 x C_2^k`, and `C_4 x C_2^k` for `k >= 6` as the family
/// with `x^2 = e_1` and no swapped pairs.
fn recognised_construction(g: &FiniteGroup) -> Result<Option<ConnectionSet>> {
    if !g.is_abelian() || !g.order().is_power_of_two() || g.order() < 2 {
        return Ok(None);
    }
    let factors = g.invariant_factor_decomposition()?;
    let tail_elementary = factors[1..].iter().all(|f| f.order == 2);
    if factors[0].order == 2 {
        return Ok(None);
    }
    if !(factors[0].order == 4 && tail_elementary) {
        return abelian_2group_orr_set(g).map(Some);
    }
    let k = factors.len() - 1;
    if k < 6 {
        return Ok(None);
    }
    let x = factors[0].generator;
    let mut fixed = vec![g.mul(x, x)];
    fixed.extend(factors[1..].iter().map(|f| f.generator));
    let w = BiWitness { ell: 0, kappa: k + 1, x, pairs: Vec::new(), fixed };
    Ok(Some(construct_bii_set(g, &w)?.set))
}

/// Constructions are trusted only after verification; a failure is a bug.
fn checked(g: &FiniteGroup, s: ConnectionSet, timeout: Option<Duration>) -> Result<Verdict> {
    match verify_orr(g, &s, timeout) {
        Ok(v) if v.is_orr() => Ok(Verdict::HasOrr(s)),
        Ok(_) => Err(Error::Validation(format!(
            "construction for {} did not give an ORR",
            g.name()
        ))),
        Err(Error::Timeout { elapsed, .. }) => Ok(Verdict::Unresolved(format!(
            "verification of the constructed set timed out after {elapsed:.1?}"
        ))),
        Err(e) => Err(e),
    }
}

/// The first beautiful generating tuple in a depth-first search over
/// elements of order greater than 2, each new entry enlarging the span.
pub fn find_beautiful_tuple(g: &FiniteGroup) -> Option<GeneratingTuple> {
    let big: Vec<Elem> = g.elements().filter(|&x| g.order_of(x) > 2).collect();
    let mut tuple = Vec::new();
    extend_tuple(g, &big, &mut tuple)
}

fn extend_tuple(g: &FiniteGroup, big: &[Elem], tuple: &mut Vec<Elem>) -> Option<GeneratingTuple> {
    let span = g.closure(tuple);
    if span.len() == g.order() {
        let t = GeneratingTuple(tuple.clone());
        return beautiful_tuple_check(g, &t).then_some(t);
    }
    for &y in big {
        if span.contains(y) {
            continue;
        }
        if let Some(&last) = tuple.last() {
            if g.order_of(g.mul(y, g.inv(last))) <= 2 {
                continue;
            }
        }
        tuple.push(y);
        if let Some(t) = extend_tuple(g, big, tuple) {
            return Some(t);
        }
        tuple.pop();
    }
    None
}

/// A group of order `2^11` or `2^12` from the third family of the
/// reduction, with its validated witness. Elementary abelian `A` is tried
/// before `C_4 x C_2^l`.
pub fn discover_caseiii_instance(target_order: usize) -> Result<(FiniteGroup, CaseIIIWitness)> {
    let log = match target_order {
        2048 => 11,
        4096 => 12,
        _ => {
            return Err(Error::Argument(format!(
                "target order must be 2048 or 4096, got {target_order}"
            )))
        }
    };
    let mut last = None;
    for base in [CaseIIIBase::Elementary(log - 3), CaseIIIBase::C4(log - 5)] {
        match first_caseiii_params(base) {
            Ok((g, w)) => {
                w.validate(&g)?;
                if h_meets_every_a_coset(&g, &w) {
                    return Err(Error::Validation("H meets every coset of A in N".into()));
                }
                return Ok((g, w));
            }
            Err(e) => last = Some(e),
        }
    }
    Err(Error::NotFound(format!(
        "no case III instance of order {target_order}: {}",
        last.map(|e| e.to_string()).unwrap_or_default()
    )))
}

/// Whether `H` meets every coset of `A` in `N`, the first case of the
/// half-inversion analysis. Since `A ⊆ H` and so `n_0 A ⊆ n_0 H`, this
/// would force `H ∩ n_0 H ≠ ∅`; a valid witness never has it.
pub fn h_meets_every_a_coset(g: &FiniteGroup, w: &CaseIIIWitness) -> bool {
    w.n_sub.iter().all(|y| w.a.iter().any(|a| w.h.contains(g.mul(y, a))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pipeline_examples() {
        let d6 = FiniteGroup::dihedral(6).unwrap();
        assert!(matches!(classify(&d6).unwrap(), Verdict::GeneralisedDihedral));
        let c4c2 = FiniteGroup::abelian(&[4, 2]).unwrap();
        assert!(matches!(classify(&c4c2).unwrap(), Verdict::Exception(n) if n == "C4xC2"));
        let c8 = FiniteGroup::cyclic(8).unwrap();
        assert!(classify(&c8).unwrap().has_orr());
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert!(classify(&c2).unwrap().has_orr());
    }

    #[test]
    fn c4_x_c2_to_the_six_uses_the_square_family() {
        let g = FiniteGroup::abelian(&[4, 2, 2, 2, 2, 2, 2]).unwrap();
        assert!(recognised_construction(&g).unwrap().is_some());
        assert!(classify(&g).unwrap().has_orr());
    }

    #[test]
    fn beautiful_tuples() {
        assert!(find_beautiful_tuple(&FiniteGroup::cyclic(5).unwrap()).is_some());
        assert!(find_beautiful_tuple(&FiniteGroup::abelian(&[3, 3]).unwrap()).is_some());
        assert!(find_beautiful_tuple(&FiniteGroup::elementary_abelian(3).unwrap()).is_none());
        assert!(find_beautiful_tuple(&FiniteGroup::cyclic(2).unwrap()).is_none());
    }

    #[test]
    fn caseiii_target_is_checked() {
        assert!(matches!(discover_caseiii_instance(1024), Err(Error::Argument(_))));
    }
}
