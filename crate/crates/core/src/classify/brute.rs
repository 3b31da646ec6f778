//! Exhaustive search for ORRs over antisymmetric connection sets.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::candidates::{orbit_representatives, CandidateSpace, ORBIT_MAX_PAIRS};
use super::Verdict;
use crate::aut::stabiliser_is_trivial;
use crate::constructions::verify_orr;
use crate::digraph::{cayley, ConnectionSet};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, AUT_MAX_ORDER};

/// Largest order for which exhaustion certifies that no ORR exists.
pub const CERTIFIED_MAX_ORDER: usize = AUT_MAX_ORDER;

/// Candidates handed to the worker pool at a time. Results are reduced in
/// enumeration order, so the verdict does not depend on the thread count.
const BATCH: usize = 512;

/// Random candidates tried for groups too large to exhaust.
const RANDOM_SAMPLES: usize = 2000;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Examine one set per `Aut(G)`-orbit. Needs `|G| <= 64` and at most
    /// [`ORBIT_MAX_PAIRS`] inverse pairs; otherwise the raw space is used.
    pub up_to_aut: bool,
    pub timeout: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            up_to_aut: true,
            timeout: None,
        }
    }
}

/// A candidate `S` together with a non-identity automorphism of
/// `Cay(G, S)` fixing the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub set: Vec<Elem>,
    pub automorphism: Vec<usize>,
}

impl Certificate {
    pub fn revalidate(&self, g: &FiniteGroup) -> Result<()> {
        let s = ConnectionSet::from_elems(g, self.set.iter().copied());
        if !s.is_oriented() || s.len() != self.set.len() {
            return Err(Error::Validation(format!("{:?} is not an oriented set", self.set)));
        }
        let p = &self.automorphism;
        if p.len() != g.order() || p[0] != 0 || p.iter().enumerate().all(|(i, &x)| i == x) {
            return Err(Error::Validation(format!(
                "certificate for {:?} is not a non-identity map fixing 1",
                self.set
            )));
        }
        if !cayley(g, s).graph().is_automorphism(p) {
            return Err(Error::Validation(format!(
                "certificate for {:?} is not an automorphism",
                self.set
            )));
        }
        Ok(())
    }
}

/// Evidence that no antisymmetric set gives an ORR.
#[derive(Clone, Debug)]
pub struct NoOrrCertificate {
    /// One entry per examined candidate, in enumeration order.
    pub certificates: Vec<Certificate>,
    pub raw_candidates: u128,
    /// Whether the candidates are `Aut(G)`-orbit representatives.
    pub orbit_reduced: bool,
    pub aut_order: Option<u128>,
    /// Candidates whose certificate comes from a disconnected digraph.
    pub non_generating: usize,
}

impl NoOrrCertificate {
    /// Re-checks every automorphism and that the candidates are exactly the
    /// ones the enumeration produces.
    pub fn revalidate(&self, g: &FiniteGroup) -> Result<()> {
        let space = CandidateSpace::new(g);
        let expected = candidate_codes(g, &space, self.orbit_reduced)?.0;
        let listed = self
            .certificates
            .iter()
            .map(|c| space.encode(&c.set))
            .collect::<Result<Vec<u64>>>()?;
        if listed != expected {
            return Err(Error::Validation("certificates do not cover the candidate list".into()));
        }
        self.certificates.par_iter().try_for_each(|c| c.revalidate(g))
    }
}

enum Outcome {
    Orr,
    Fails { automorphism: Vec<usize>, connected: bool },
}

/// An automorphism of a disconnected `Cay(G, S)` fixing the identity: a
/// right translation on one component not containing it.
fn disconnected_witness(g: &FiniteGroup, s: &ConnectionSet) -> Vec<usize> {
    let h = g.closure_of(s.members());
    let mut perm: Vec<usize> = (0..g.order()).collect();
    if h.len() == 1 {
        // No arcs at all: any permutation fixing 1 will do.
        perm.swap(1, 2);
        return perm;
    }
    let x = g.elements().find(|&x| !h.contains(x)).expect("S does not generate");
    let t = h.iter().find(|&t| t != 0).expect("H is non-trivial");
    // Right multiplication by y = x^{-1} t x maps the component H x to itself.
    let y = g.conj(t, x);
    for v in h.iter().map(|k| g.mul(k, x)) {
        perm[v] = g.mul(v, y);
    }
    perm
}

fn examine(g: &FiniteGroup, s: &ConnectionSet, deadline: Option<Instant>) -> Result<Outcome> {
    if !s.generates() && g.order() > 2 {
        return Ok(Outcome::Fails {
            automorphism: disconnected_witness(g, s),
            connected: false,
        });
    }
    let timeout = match deadline {
        Some(d) => Some(
            d.checked_duration_since(Instant::now())
                .ok_or(Error::Timeout { elapsed: Duration::ZERO, nodes: 0 })?,
        ),
        None => None,
    };
    let report = stabiliser_is_trivial(cayley(g, s.clone()).graph(), 0, timeout)?;
    Ok(match report.witness {
        None => Outcome::Orr,
        Some(automorphism) => Outcome::Fails { automorphism, connected: true },
    })
}

/// The candidate codes in enumeration order, plus `|Aut(G)|` when reduced.
fn candidate_codes(
    g: &FiniteGroup,
    space: &CandidateSpace,
    up_to_aut: bool,
) -> Result<(Vec<u64>, Option<u128>)> {
    if up_to_aut {
        let r = orbit_representatives(g, space)?;
        Ok((r.representatives, Some(r.aut_order)))
    } else {
        Ok((space.raw_codes().collect(), None))
    }
}

/// [`brute_force_orr_with`] using orbit reduction where it applies.
pub fn brute_force_orr(g: &FiniteGroup, timeout: Option<Duration>) -> Result<Verdict> {
    brute_force_orr_with(g, &SearchOptions { up_to_aut: true, timeout })
}

/// Examines the antisymmetric sets by increasing size. Returns the first
/// ORR found, a certificate if every candidate fails (only for
/// `|G| <= 64`), or `Unresolved` on timeout. Larger groups get a seeded
/// random search, which can only succeed or give up.
pub fn brute_force_orr_with(g: &FiniteGroup, opts: &SearchOptions) -> Result<Verdict> {
    let start = Instant::now();
    let deadline = opts.timeout.map(|t| start + t);
    if g.order() == 2 {
        return Ok(Verdict::HasOrr(ConnectionSet::from_elems(g, [])));
    }
    if g.order() > CERTIFIED_MAX_ORDER {
        return random_search(g, deadline);
    }
    let space = CandidateSpace::new(g);
    let reduce = opts.up_to_aut && space.pairs().len() <= ORBIT_MAX_PAIRS;
    let (codes, aut_order) = candidate_codes(g, &space, reduce)?;
    log::info!(
        "{}: {} candidates ({} raw); sets that do not generate are skipped, as a disconnected Cayley digraph is never an ORR",
        g.name(),
        codes.len(),
        space.raw_count()
    );
    let mut certificates = Vec::with_capacity(codes.len());
    let mut non_generating = 0;
    for batch in codes.chunks(BATCH) {
        let outcomes: Vec<Result<Outcome>> = batch
            .par_iter()
            .map(|&c| examine(g, &ConnectionSet::from_elems(g, space.decode(c)), deadline))
            .collect();
        for (&code, outcome) in batch.iter().zip(outcomes) {
            match outcome {
                Ok(Outcome::Orr) => {
                    let s = ConnectionSet::from_elems(g, space.decode(code));
                    return revalidated(g, s);
                }
                Ok(Outcome::Fails { automorphism, connected }) => {
                    non_generating += usize::from(!connected);
                    certificates.push(Certificate { set: space.decode(code), automorphism });
                }
                Err(Error::Timeout { .. }) => {
                    return Ok(Verdict::Unresolved(format!(
                        "timed out after {:.1?} with {} of {} candidates examined",
                        start.elapsed(),
                        certificates.len(),
                        codes.len()
                    )))
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Verdict::NoOrrCertified(NoOrrCertificate {
        certificates,
        raw_candidates: space.raw_count(),
        orbit_reduced: reduce,
        aut_order,
        non_generating,
    }))
}

fn revalidated(g: &FiniteGroup, s: ConnectionSet) -> Result<Verdict> {
    if !verify_orr(g, &s, None)?.is_orr() {
        return Err(Error::Validation("search result failed re-verification".into()));
    }
    Ok(Verdict::HasOrr(s))
}

/// Random antisymmetric sets of random size, fixed seed.
fn random_search(g: &FiniteGroup, deadline: Option<Instant>) -> Result<Verdict> {
    let space = CandidateSpace::new(g);
    let pairs = space.pairs();
    if pairs.is_empty() {
        return Ok(Verdict::Unresolved("G has no elements of order greater than 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..RANDOM_SAMPLES {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Ok(Verdict::Unresolved("random search timed out".into()));
        }
        let k = rng.gen_range(1..=pairs.len());
        let s = ConnectionSet::from_elems(
            g,
            pairs
                .choose_multiple(&mut rng, k)
                .map(|&(x, y)| if rng.gen() { x } else { y })
                .collect::<Vec<_>>(),
        );
        match examine(g, &s, deadline) {
            Ok(Outcome::Orr) => return revalidated(g, s),
            Ok(Outcome::Fails { .. }) => {}
            Err(Error::Timeout { .. }) => {
                return Ok(Verdict::Unresolved("random search timed out".into()))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Verdict::Unresolved(format!(
        "|G| = {} exceeds {CERTIFIED_MAX_ORDER} and {RANDOM_SAMPLES} random sets failed",
        g.order()
    )))
}
