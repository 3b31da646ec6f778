//! Groups in which an outer involution `g` inverts exactly half of an
//! index-2 subgroup `N`, with `N = H ∪ n_0 H`.

use num_rational::Ratio;

use super::imrich::{imrich_set, ImrichTuple};
use super::{
    abelian_2group_orr_in, check_elem, coset_complement, find_nonsplit_generators, l1_extension,
    oriented_set, quotient_is_elementary,
};
use crate::digraph::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::extend_span;
use crate::group::half_inversion_set;
use crate::group::{Elem, FiniteGroup, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseIIIWitness {
    pub n_sub: Subset,
    pub g: Elem,
    pub n0: Elem,
    /// `{n ∈ N : n^g = n^{-1}}`.
    pub h: Subset,
    pub a: Subset,
    pub x2: Elem,
    pub x3: Elem,
    pub x4: Elem,
    /// `[x_4, x_3] = x_4^{-1} x_3^{-1} x_4 x_3`.
    pub d: Elem,
}

impl CaseIIIWitness {
    /// Checks every invariant and returns `Z(N)`.
    pub fn validate(&self, grp: &FiniteGroup) -> Result<Subset> {
        let bad = |m: &str| Err(Error::Validation(m.to_string()));
        let n = grp.order();
        if [&self.n_sub, &self.h, &self.a].iter().any(|s| s.universe() != n) {
            return bad("subsets do not live in G");
        }
        for (x, what) in [
            (self.g, "g"),
            (self.n0, "n0"),
            (self.x2, "x2"),
            (self.x3, "x3"),
            (self.x4, "x4"),
            (self.d, "d"),
        ] {
            check_elem(grp, x, what)?;
        }
        if !n.is_power_of_two() {
            return bad("G is not a 2-group");
        }
        let nn = &self.n_sub;
        if !grp.is_subgroup(nn) || 2 * nn.len() != n {
            return bad("N is not a subgroup of index 2");
        }
        if nn.contains(self.g) || grp.order_of(self.g) != 2 {
            return bad("g must be an involution outside N");
        }
        let (h, frac) = half_inversion_set(grp, nn, |x| grp.conj(x, self.g))?;
        if h != self.h {
            return bad("H is not the set of elements of N inverted by g");
        }
        if frac != Ratio::new(1, 2) {
            return Err(Error::Validation(format!("g inverts {frac} of N, not 1/2")));
        }
        if !nn.contains(self.n0) || h.iter().any(|y| h.contains(grp.mul(self.n0, y))) {
            return bad("N is not the disjoint union H ∪ n0 H");
        }
        let a = &self.a;
        if !grp.is_subgroup(a) || !grp.is_abelian_subset(a) || !a.is_subset(nn) {
            return bad("A is not an abelian subgroup of N");
        }
        if 4 * a.len() != nn.len() || !grp.is_normal(a) {
            return bad("A must be normal in G of index 4 in N");
        }
        let reps = [self.x2, self.x3, self.x4];
        if reps.iter().any(|&x| !nn.contains(x) || a.contains(x)) {
            return bad("x2, x3, x4 must lie in N \\ A");
        }
        if a.contains(grp.mul(self.x3, grp.inv(self.x4)))
            || !a.contains(grp.product([self.x2, self.x3, self.x4]))
        {
            return bad("x2 A, x3 A, x4 A must be the three non-trivial cosets of A in N");
        }
        if !quotient_is_elementary(grp, a) || 8 * a.len() != n {
            return bad("G/A is not elementary abelian of order 8");
        }
        for (x, what) in [(self.x3, "x3"), (self.x4, "x4")] {
            if grp.conj(x, self.g) != grp.inv(x) {
                return Err(Error::Validation(format!("g does not invert {what}")));
            }
        }
        let c3 = grp.centralizer_in(a, self.x3);
        let c4 = grp.centralizer_in(a, self.x4);
        let z = centre_of(grp, nn);
        if c3 != z || c4 != z || 2 * z.len() != a.len() {
            return bad("C_A(x3) = C_A(x4) = Z(N) of index 2 in A fails");
        }
        if self.d != grp.commutator(self.x4, self.x3) || self.d == 0 {
            return bad("d must be the non-trivial commutator [x4, x3]");
        }
        if let Some(y) = a.iter().map(|y| grp.mul(self.x2, y)).find(|&y| h.contains(y)) {
            return Err(Error::Validation(format!(
                "g inverts {} in the coset x2 A",
                grp.word(y)
            )));
        }
        if !a.contains(grp.mul(grp.inv(self.x2), self.n0)) {
            return bad("n0 is not in x2 A");
        }
        Ok(z)
    }
}

fn centre_of(grp: &FiniteGroup, n: &Subset) -> Subset {
    let mut span = grp.closure(&[]);
    let mut basis = Vec::new();
    for x in n.iter() {
        if !span.contains(x) {
            basis.push(x);
            span = grp.closure(&basis);
        }
    }
    Subset::from_elems(
        grp.order(),
        n.iter().filter(|&z| basis.iter().all(|&b| grp.commutes(z, b))),
    )
}

/// The shape of `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseIIIBase {
    /// `A = C_2^l` in the bitmask encoding.
    Elementary(usize),
    /// `A = C_4 x C_2^l` in mixed radix.
    C4(usize),
}

impl CaseIIIBase {
    pub fn group(self) -> Result<FiniteGroup> {
        match self {
            CaseIIIBase::Elementary(l) => FiniteGroup::elementary_abelian(l as u32),
            CaseIIIBase::C4(l) => {
                let mut m = vec![4];
                m.extend(std::iter::repeat_n(2, l));
                FiniteGroup::abelian(&m)
            }
        }
    }

    /// The functional `A -> C_2` whose kernel is `Z(N)`: the first basis
    /// coordinate, read modulo 2.
    fn functional(self, e: Elem) -> bool {
        match self {
            CaseIIIBase::Elementary(_) => e & 1 == 1,
            CaseIIIBase::C4(l) => (e >> l) & 1 == 1,
        }
    }

    /// The elements of `A` in the kernel of the functional.
    pub fn kernel(self) -> Result<Vec<Elem>> {
        let a = self.group()?;
        Ok(a.elements().filter(|&e| !self.functional(e)).collect())
    }
}

/// The data of the extension: `x_3` and `x_4` act on `A` as
/// `a -> a u^{phi(a)}`, `x_4 x_3 x_4^{-1} = delta x_3`, and `x_3^2 = s3`,
/// `x_4^2 = s4`. All five must lie in the kernel of `phi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseIIIParams {
    pub u3: Elem,
    pub u4: Elem,
    pub delta: Elem,
    pub s3: Elem,
    pub s4: Elem,
}

/// Builds `G = <A, x_3, x_4, g>` from the parameters, with `g` inverting `A`,
/// `x_3` and `x_4`, and locates `n_0` as the first element of `x_3 x_4 A`
/// with `H ∩ n_0 H` empty.
///
/// `a x_3^i x_4^j` has index `a + i|A| + 2j|A|` and `y g` is `|N| + y`.
pub fn caseiii_group(
    base: CaseIIIBase,
    p: CaseIIIParams,
) -> Result<(FiniteGroup, CaseIIIWitness)> {
    let a = base.group()?;
    let m = a.order();
    for (x, what) in [
        (p.u3, "u3"),
        (p.u4, "u4"),
        (p.delta, "delta"),
        (p.s3, "s3"),
        (p.s4, "s4"),
    ] {
        check_elem(&a, x, what)?;
        if base.functional(x) {
            return Err(Error::Argument(format!("{what} is outside the kernel of phi")));
        }
    }
    let act = |u: Elem| -> Vec<Elem> {
        a.elements()
            .map(|e| if base.functional(e) { a.mul(e, u) } else { e })
            .collect()
    };
    let (m3, m4) = (act(p.u3), act(p.u4));
    let n1 = FiniteGroup::c2_extension(&a, &m3, p.s3, "x3")?;
    let phi4: Vec<Elem> = n1
        .elements()
        .map(|e| if e < m { m4[e] } else { m + a.mul(m4[e - m], p.delta) })
        .collect();
    let n = FiniteGroup::c2_extension(&n1, &phi4, p.s4, "x4")?;
    let (x3, x4) = (m, 2 * m);
    let (x3i, x4i) = (n.inv(x3), n.inv(x4));
    let tau: Vec<Elem> = n
        .elements()
        .map(|e| {
            let (y, i, j) = (e % m, (e / m) % 2, e / (2 * m));
            let mut r = a.inv(y);
            if i == 1 {
                r = n.mul(r, x3i);
            }
            if j == 1 {
                r = n.mul(r, x4i);
            }
            r
        })
        .collect();
    let g = FiniteGroup::c2_extension(&n, &tau, 0, "g")?;
    let tag = match base {
        CaseIIIBase::Elementary(l) => format!("III(C2^{l})"),
        CaseIIIBase::C4(l) => format!("III(C4xC2^{l})"),
    };
    let g = g.with_name(tag);
    let order = g.order();
    let n_sub = Subset::from_elems(order, 0..4 * m);
    let a_sub = Subset::from_elems(order, 0..m);
    let gi = 4 * m;
    let (h, _) = half_inversion_set(&g, &n_sub, |x| g.conj(x, gi))?;
    let x34 = g.mul(x3, x4);
    let n0 = a_sub
        .iter()
        .map(|y| g.mul(x34, y))
        .find(|&c| h.iter().all(|y| !h.contains(g.mul(c, y))))
        .ok_or_else(|| Error::Validation("no n0 in x3 x4 A makes N = H ∪ n0 H".into()))?;
    let w = CaseIIIWitness {
        n_sub,
        g: gi,
        n0,
        h,
        a: a_sub,
        x2: n0,
        x3,
        x4,
        d: g.commutator(x4, x3),
    };
    w.validate(&g)?;
    Ok((g, w))
}

/// Which construction produced the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IIIBranch {
    /// `A = C_4 x C_2^l`, `l >= 6`.
    C4,
    /// `A` elementary abelian of rank at least 8.
    Elementary,
    /// `A` is neither; the ORR of `A` is lifted through `G/A`.
    Lifted,
}

#[derive(Clone, Debug)]
pub struct IIIConstruction {
    pub set: ConnectionSet,
    pub branch: IIIBranch,
    pub a0: Option<Elem>,
    /// `b, b', b''`.
    pub b: Option<[Elem; 3]>,
    /// `c, c'`.
    pub c: Option<[Elem; 2]>,
    pub v: Option<Elem>,
    /// Imrich tuple for `B` and the element `x` with `S ⊇ (Bx \ Tx) \ {x}`.
    pub tuple: Option<ImrichTuple>,
    pub coset_rep: Option<Elem>,
    /// The elements of `S` outside the coset `B x`.
    pub extra: Vec<Elem>,
}

impl IIIConstruction {
    /// Out-neighbours of `u` via `S` that lie in `B`.
    pub fn outneighbours_in_b(&self, grp: &FiniteGroup, u: Elem) -> usize {
        let Some(t) = &self.tuple else { return 0 };
        let b = t.span(grp);
        self.set.iter().filter(|&s| b.contains(grp.mul(s, u))).count()
    }
}

/// Lowest-index independent triple (or pair) from `B \ {1}` such that the
/// products `(y z)(y z')` over `z, z'` in `{1} ∪ tuple` are never 1.
fn pick_tuple<const K: usize>(grp: &FiniteGroup, b: &Subset, y: Elem) -> Option<[Elem; K]> {
    let cand: Vec<Elem> = b.iter().filter(|&z| z != 0).collect();
    let ok = |zs: &[Elem]| {
        let mut all = vec![0];
        all.extend_from_slice(zs);
        grp.closure(zs).len() == 1 << zs.len()
            && all.iter().all(|&z| {
                all.iter()
                    .all(|&z2| grp.mul(grp.mul(y, z), grp.mul(y, z2)) != 0)
            })
    };
    let mut idx = [0usize; K];
    fn rec<const K: usize>(
        depth: usize,
        start: usize,
        cand: &[Elem],
        idx: &mut [usize; K],
        ok: &dyn Fn(&[Elem]) -> bool,
    ) -> bool {
        if depth == K {
            let zs: Vec<Elem> = idx.iter().map(|&i| cand[i]).collect();
            return ok(&zs);
        }
        for i in start..cand.len() {
            idx[depth] = i;
            if rec(depth + 1, i + 1, cand, idx, ok) {
                return true;
            }
        }
        false
    }
    rec(0, 0, &cand, &mut idx, &ok).then(|| idx.map(|i| cand[i]))
}

/// Greedy basis of a complement to `avoid` inside the elementary abelian
/// subgroup `within`, lowest index first.
fn complement_basis(grp: &FiniteGroup, within: &Subset, avoid: &[Elem]) -> Vec<Elem> {
    let mut span = grp.closure(avoid);
    let mut out = Vec::new();
    for x in within.iter() {
        if !span.contains(x) {
            out.push(x);
            extend_span(grp, &mut span, x);
        }
    }
    out
}

/// The connection set for a case-III witness.
pub fn construct_iii_set(grp: &FiniteGroup, w: &CaseIIIWitness) -> Result<IIIConstruction> {
    let z = w.validate(grp)?;
    let a = &w.a;
    let exponent2 = a.iter().all(|x| grp.order_of(x) <= 2);
    let factors = grp.invariant_factors_in(a)?;
    let c4_shape = factors[0].order == 4 && factors[1..].iter().all(|f| f.order == 2);
    if !exponent2 && !c4_shape {
        if grp.is_generalized_dihedral() {
            return Err(Error::precondition(
                "G is not generalised dihedral",
                format!("{} is generalised dihedral", grp.name()),
            ));
        }
        let t = abelian_2group_orr_in(grp, a)?.set;
        let ext = find_nonsplit_generators(grp, a)?;
        let set = l1_extension(grp, a, t.members(), &ext)?;
        return Ok(IIIConstruction {
            set,
            branch: IIIBranch::Lifted,
            a0: None,
            b: None,
            c: None,
            v: None,
            tuple: None,
            coset_rep: None,
            extra: ext,
        });
    }
    let ell = factors.len() - usize::from(c4_shape);
    if exponent2 && ell < 8 {
        return Err(Error::precondition(
            "A has rank l >= 8",
            format!("A is elementary abelian of rank {ell}"),
        ));
    }
    if c4_shape && ell < 6 {
        return Err(Error::precondition(
            "A = C4 x C2^l with l >= 6",
            format!("A = C4 x C2^{ell}"),
        ));
    }
    let outside_z = |x: Elem| a.contains(x) && !z.contains(x);
    let a0 = a
        .iter()
        .find(|&x| outside_z(x) && (exponent2 || grp.order_of(x) == 4))
        .ok_or_else(|| Error::Validation("A \\ Z(N) has no element of the right order".into()))?;
    let (g, x3, x4) = (w.g, w.x3, w.x4);
    let y = grp.product([g, x3, x4]);
    let basis = if exponent2 {
        complement_basis(grp, &z, &[w.d])
    } else {
        let involutions = Subset::from_elems(grp.order(), a.iter().filter(|&x| grp.order_of(x) <= 2));
        complement_basis(grp, &involutions, &[grp.mul(a0, a0)])
    };
    let tuple = ImrichTuple::new(grp, basis)?;
    let b = tuple.span(grp);
    let t = imrich_set(grp, &tuple);
    let gx3a0 = grp.product([g, x3, a0]);
    let gx4a0 = grp.product([g, x4, a0]);
    let bs: [Elem; 3] = pick_tuple(grp, &b, gx3a0)
        .ok_or_else(|| Error::Validation("no admissible b, b', b'' in B".into()))?;
    let cs: [Elem; 2] = pick_tuple(grp, &b, gx4a0)
        .ok_or_else(|| Error::Validation("no admissible c, c' in B".into()))?;
    let mut extra = vec![gx3a0];
    extra.extend(bs.iter().map(|&z| grp.mul(gx3a0, z)));
    extra.push(gx4a0);
    extra.extend(cs.iter().map(|&z| grp.mul(gx4a0, z)));
    let (branch, rep, v) = if exponent2 {
        let k = grp.closure(
            &[z.to_vec(), vec![g, grp.mul(x3, a0), grp.mul(x4, a0)]].concat(),
        );
        let v = grp
            .elements()
            .find(|&x| !k.contains(x) && grp.order_of(x) > 2)
            .ok_or_else(|| {
                Error::Validation("every element outside <Z(N), g, x3 a0, x4 a0> is an involution".into())
            })?;
        extra.push(v);
        extra.push(grp.mul(y, w.d));
        (IIIBranch::Elementary, y, Some(v))
    } else {
        extra.push(y);
        (IIIBranch::C4, a0, None)
    };
    let mut elems = coset_complement(grp, &b, &t, rep);
    elems.extend(&extra);
    let set = oriented_set(grp, &elems, "case III construction")?;
    Ok(IIIConstruction {
        set,
        branch,
        a0: Some(a0),
        b: Some(bs),
        c: Some(cs),
        v,
        tuple: Some(tuple),
        coset_rep: Some(rep),
        extra,
    })
}

/// The first parameters, in a fixed scan order, for which `caseiii_group`
/// yields a valid witness whose group is not generalised dihedral and
/// admits the construction. `delta` runs over the kernel, then `s3`, `s4`
/// over the kernel, with `u3`, `u4` the second and third basis vectors.
pub fn first_caseiii_params(base: CaseIIIBase) -> Result<(FiniteGroup, CaseIIIWitness)> {
    let a = base.group()?;
    let basis: Vec<Elem> = a.labels().iter().map(|l| l.1).collect();
    if basis.len() < 3 {
        return Err(Error::Argument("A needs rank at least 3".into()));
    }
    let kernel = base.kernel()?;
    let (u3, u4) = (basis[1], basis[2]);
    let smalls: Vec<Elem> = kernel.iter().copied().filter(|&e| e != 0).take(4).collect();
    for &delta in kernel.iter().filter(|&&e| e != 0 && e != a.mul(u3, u4)).take(4) {
        for &s3 in std::iter::once(&0).chain(&smalls) {
            for &s4 in std::iter::once(&0).chain(&smalls) {
                let p = CaseIIIParams { u3, u4, delta, s3, s4 };
                let Ok((g, w)) = caseiii_group(base, p) else { continue };
                if !g.is_generalized_dihedral() {
                    return Ok((g, w));
                }
            }
        }
    }
    Err(Error::NotFound(format!("no case III parameters for {base:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instance_validates() {
        let (g, w) = first_caseiii_params(CaseIIIBase::Elementary(4)).unwrap();
        assert_eq!(g.order(), 128);
        assert_eq!(w.h.len(), 32);
        let z = w.validate(&g).unwrap();
        assert_eq!(w.n_sub.len() / z.len(), 8);
        let (g, w) = first_caseiii_params(CaseIIIBase::C4(2)).unwrap();
        assert_eq!(g.order(), 16 * 8);
        assert!(w.validate(&g).is_ok());
    }

    #[test]
    fn tampered_witness_fails() {
        let (g, mut w) = first_caseiii_params(CaseIIIBase::Elementary(4)).unwrap();
        w.h.remove(0);
        assert!(w.validate(&g).is_err());
        let (g, mut w) = first_caseiii_params(CaseIIIBase::Elementary(4)).unwrap();
        w.n0 = 0;
        assert!(w.validate(&g).is_err());
    }

    #[test]
    fn rank_bound_is_enforced() {
        let (g, w) = first_caseiii_params(CaseIIIBase::Elementary(4)).unwrap();
        assert!(matches!(
            construct_iii_set(&g, &w),
            Err(Error::Precondition { clause: "A has rank l >= 8", .. })
        ));
    }
}
