//! Imrich generating sets for elementary abelian 2-groups and the
//! predicates about cosets built from them.

use std::time::Duration;

use super::{coset_complement, is_elementary_basis};
use crate::aut::{fixed_points_of_stabiliser, stabiliser_is_trivial, ORACLE_MAX_VERTICES};
use crate::digraph::{cayley, ConnectionSet};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subset};

/// A basis `(x_1, ..., x_k)`, `k >= 6`, of an elementary abelian 2-subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImrichTuple {
    basis: Vec<Elem>,
}

impl ImrichTuple {
    pub fn new(g: &FiniteGroup, basis: Vec<Elem>) -> Result<Self> {
        if basis.len() < 6 {
            return Err(Error::precondition(
                "rank k >= 6",
                format!("tuple has rank {}", basis.len()),
            ));
        }
        if !is_elementary_basis(g, &basis) {
            return Err(Error::precondition(
                "tuple is a basis of an elementary abelian 2-group",
                "elements are not independent commuting involutions",
            ));
        }
        Ok(ImrichTuple { basis })
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The subgroup spanned by the tuple.
    pub fn span(&self, g: &FiniteGroup) -> Subset {
        g.closure(&self.basis)
    }
}

/// The `2k + 1` elements `x_1, ..., x_k, x_1x_2, ..., x_{k-1}x_k,
/// x_1x_2x_{k-2}x_{k-1}, x_1x_2x_{k-1}x_k`, in that order.
pub fn imrich_set(g: &FiniteGroup, t: &ImrichTuple) -> Vec<Elem> {
    let x = &t.basis;
    let k = x.len();
    let mut out = x.clone();
    out.extend(x.windows(2).map(|w| g.mul(w[0], w[1])));
    out.push(g.product([x[0], x[1], x[k - 3], x[k - 2]]));
    out.push(g.product([x[0], x[1], x[k - 2], x[k - 1]]));
    debug_assert_eq!(Subset::from_elems(g.order(), out.iter().copied()).len(), 2 * k + 1);
    out
}

pub fn imrich_connection_set(g: &FiniteGroup, t: &ImrichTuple) -> ConnectionSet {
    ConnectionSet::from_elems(g, imrich_set(g, t))
}

fn check_coset_hypotheses(
    g: &FiniteGroup,
    s: &ConnectionSet,
    b: &ImrichTuple,
    x: Elem,
) -> Result<(Subset, Vec<Elem>)> {
    let span = b.span(g);
    if let Some(z) = b.basis.iter().find(|&&z| !g.commutes(z, x)) {
        return Err(Error::precondition(
            "x centralises B",
            format!("x does not commute with {}", g.word(*z)),
        ));
    }
    let t = imrich_set(g, b);
    let core = coset_complement(g, &span, &t, x);
    if let Some(&y) = core.iter().find(|&&y| !s.contains(y)) {
        return Err(Error::precondition(
            "S contains (Bx \\ Tx) \\ {x}",
            format!("{} is missing", g.word(y)),
        ));
    }
    let extra: Vec<Elem> = s.iter().filter(|y| !core.contains(y)).collect();
    Ok((span, extra))
}

/// The counting claim behind the B-distinctness argument: the vertices that
/// are out-neighbours of at least `2^k - 4k - 4` members of `S` are exactly
/// `B x^2`.
pub fn bx2_counting_claim(
    g: &FiniteGroup,
    s: &ConnectionSet,
    b: &ImrichTuple,
    x: Elem,
) -> Result<bool> {
    let (span, _) = check_coset_hypotheses(g, s, b, x)?;
    let k = b.rank() as i64;
    let threshold = (1i64 << k) - 4 * k - 4;
    let x2 = g.mul(x, x);
    let members = s.to_vec();
    let mut count = vec![0i64; g.order()];
    for &u in &members {
        for &t in &members {
            count[g.mul(t, u)] += 1;
        }
    }
    Ok(g.elements().all(|v| {
        let in_bx2 = span.contains(g.mul(v, g.inv(x2)));
        (count[v] >= threshold) == in_bx2
    }))
}

/// The mutual in-neighbour property used to pin down `x` inside `S ∩ Bx`.
///
/// With `W := S ∩ Bx` (taken in the complement of `S` when `complement` is
/// set, which is the form needed for `S ∩ Bx = (Bx \ Tx) \ {x}`), `x` must
/// be the only member of `W` sharing at least three in-neighbours via `W`
/// with every other member of `W`.
pub fn mutual_inneighbour_property(
    g: &FiniteGroup,
    s: &ConnectionSet,
    b: &ImrichTuple,
    x: Elem,
    complement: bool,
) -> bool {
    let span = b.span(g);
    let w: Vec<Elem> = span
        .iter()
        .map(|z| g.mul(z, x))
        .filter(|&y| s.contains(y) != complement)
        .collect();
    let via = Subset::from_elems(g.order(), w.iter().copied());
    let mutual = |u: Elem, v: Elem| {
        w.iter()
            .filter(|&&t| via.contains(g.mul(v, g.inv(g.mul(g.inv(t), u)))))
            .count()
    };
    let good = |u: Elem| w.iter().all(|&v| v == u || mutual(u, v) >= 3);
    via.contains(x) && w.iter().all(|&u| good(u) == (u == x))
}

/// Checks the B-distinctness statement on `Cay(G, S)`: the counting claim,
/// and that the stabiliser of the identity fixes `B` and `x` pointwise.
/// `S` must be `[(Bx \ Tx) \ {x}] ∪ X` with `X` outside `<B, x>` and
/// `|X| <= 17`, generating `G`.
///
/// When the stabiliser is trivial every vertex is fixed; otherwise the fixed
/// points come from the full oracle, which is limited to 512 vertices.
pub fn b_distinct_check(
    g: &FiniteGroup,
    s: &ConnectionSet,
    b: &ImrichTuple,
    x: Elem,
    timeout: Option<Duration>,
) -> Result<bool> {
    let (span, extra) = check_coset_hypotheses(g, s, b, x)?;
    if extra.len() > 17 {
        return Err(Error::precondition(
            "|X| <= 17",
            format!("S has {} elements outside (Bx \\ Tx) \\ {{x}}", extra.len()),
        ));
    }
    let mut gens = b.basis.clone();
    gens.push(x);
    let bx = g.closure(&gens);
    if let Some(&y) = extra.iter().find(|&&y| bx.contains(y)) {
        return Err(Error::precondition(
            "X lies outside <B, x>",
            format!("{} is in <B, x>", g.word(y)),
        ));
    }
    if !s.generates() {
        return Err(Error::precondition("S generates G", "S does not generate G"));
    }
    if !bx2_counting_claim(g, s, b, x)? {
        return Ok(false);
    }
    let graph = cayley(g, s.clone());
    let report = stabiliser_is_trivial(graph.graph(), 0, timeout)?;
    if report.trivial {
        return Ok(true);
    }
    if g.order() > ORACLE_MAX_VERTICES {
        // A witness exists; check it directly instead of computing the
        // whole stabiliser.
        let w = report.witness.expect("non-trivial report has a witness");
        return Ok(span.iter().all(|z| w[z] == z) && w[x] == x);
    }
    let fixed = fixed_points_of_stabiliser(graph.graph(), 0)?;
    Ok(span.is_subset(&fixed) && fixed.contains(x))
}
