//! The groups `G = <A, g, n>` with `A = C_4 x C_2^k` inverted by the
//! involution `g`, and `n` normalising `A` with `n^2 ∈ A` and `n^g = n^{-1}`.

use super::imrich::{imrich_set, ImrichTuple};
use super::reduction::case_ii_group;
use super::{check_elem, oriented_set};
use crate::digraph::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Subset};

/// `a[0]` has order 4 and `a[1..]` are involutions, together a basis of
/// `A = C_4 x C_2^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CWitness {
    pub a: Vec<Elem>,
    pub g: Elem,
    pub n: Elem,
}

impl CWitness {
    pub fn k(&self) -> usize {
        self.a.len().saturating_sub(1)
    }

    /// Checks every invariant and returns `A`.
    pub fn validate(&self, grp: &FiniteGroup) -> Result<Subset> {
        let bad = |m: &str| Err(Error::Validation(m.to_string()));
        if self.a.is_empty() {
            return bad("A needs a generator of order 4");
        }
        for (i, &x) in self.a.iter().enumerate() {
            check_elem(grp, x, &format!("a_{}", i + 1))?;
        }
        check_elem(grp, self.g, "g")?;
        check_elem(grp, self.n, "n")?;
        if grp.order_of(self.a[0]) != 4 || self.a[1..].iter().any(|&x| grp.order_of(x) != 2) {
            return bad("a_1 must have order 4 and a_2, ..., a_{k+1} order 2");
        }
        let a = grp.closure(&self.a);
        if a.len() != 2usize << self.a.len() || !grp.is_abelian_subset(&a) {
            return bad("a_1, ..., a_{k+1} do not form a basis of C4 x C2^k");
        }
        if grp.order_of(self.g) != 2 {
            return bad("g^2 != 1");
        }
        if let Some(i) = self.a.iter().position(|&x| grp.conj(x, self.g) != grp.inv(x)) {
            return Err(Error::Validation(format!("g does not invert a_{}", i + 1)));
        }
        if self.a.iter().any(|&x| !a.contains(grp.conj(x, self.n))) {
            return bad("n does not normalise A");
        }
        if !a.contains(grp.mul(self.n, self.n)) {
            return bad("n^2 is not in A");
        }
        if grp.conj(self.n, self.g) != grp.inv(self.n) {
            return bad("n^g != n^{-1}");
        }
        if self.a.iter().all(|&x| grp.conj(x, self.n) == x) {
            return bad("n centralises A");
        }
        if !grp.generates(&[self.a.clone(), vec![self.g, self.n]].concat()) {
            return bad("G != <A, g, n>");
        }
        Ok(a)
    }
}

/// Ready-made members of the family, one for each branch of the
/// construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CPreset {
    /// `n` swaps `a_2` and `a_3` and `n^2 = a_1^2`.
    SwapWithSquare,
    /// `n` swaps `a_2` and `a_3` and `n^2 = 1`.
    SwapInvolutions,
    /// `a_1^n = a_1 a_2`, `n` fixes the involutions, `n^2 = a_1^2 a_2`.
    ShiftGenerator,
    /// `a_2^n = a_1^2 a_2`, `n` fixes the rest, `n^2 = 1`.
    TwistInvolution,
}

/// The family member built from the action of `n` on the basis of `A`
/// (`images[i]` is `a_{i+1}^n`, as an element of `C_4 x C_2^k` in mixed
/// radix) and `n^2`; see [`case_ii_group`].
pub fn c_family_from_action(
    k: usize,
    images: &[Elem],
    n_square: Elem,
) -> Result<(FiniteGroup, CWitness)> {
    let mut moduli = vec![4];
    moduli.extend(std::iter::repeat_n(2, k));
    let (g, w) = case_ii_group(&moduli, images, n_square)?;
    let a = g.labels()[..=k].iter().map(|l| l.1).collect();
    Ok((g, CWitness { a, g: w.g, n: w.n }))
}

pub fn c_family_group(k: usize, preset: CPreset) -> Result<(FiniteGroup, CWitness)> {
    if k < 2 {
        return Err(Error::Argument("the presets need k >= 2".into()));
    }
    let mut moduli = vec![4];
    moduli.extend(std::iter::repeat_n(2, k));
    let a = FiniteGroup::abelian(&moduli)?;
    let basis: Vec<Elem> = a.labels().iter().map(|l| l.1).collect();
    let sq = a.mul(basis[0], basis[0]);
    let mut images = basis.clone();
    let n_square = match preset {
        CPreset::SwapWithSquare | CPreset::SwapInvolutions => {
            images.swap(1, 2);
            if preset == CPreset::SwapWithSquare {
                sq
            } else {
                0
            }
        }
        CPreset::ShiftGenerator => {
            images[0] = a.mul(basis[0], basis[1]);
            a.mul(sq, basis[1])
        }
        CPreset::TwistInvolution => {
            images[1] = a.mul(sq, basis[1]);
            0
        }
    };
    let (g, w) = c_family_from_action(k, &images, n_square)?;
    let name = format!("C({k},{preset:?})");
    Ok((g.with_name(name), w))
}

fn require_not_gen_dihedral(grp: &FiniteGroup) -> Result<()> {
    if grp.is_generalized_dihedral() {
        return Err(Error::precondition(
            "G is not generalised dihedral",
            format!("{} is generalised dihedral", grp.name()),
        ));
    }
    Ok(())
}

/// Involutions of `A` to combine with `a_1`: the basis involutions first,
/// then the rest in index order.
fn involution_candidates(grp: &FiniteGroup, w: &CWitness, a: &Subset) -> Vec<Elem> {
    let mut out: Vec<Elem> = w.a[1..].to_vec();
    out.extend(a.iter().filter(|&x| grp.order_of(x) == 2 && !w.a.contains(&x)));
    out
}

/// An element of `A` of order greater than 2 not centralised by `n`: `a_1`
/// if possible, otherwise `a_1 b` for an involution `b` moved by `n`.
pub fn find_order4_not_centralised(grp: &FiniteGroup, w: &CWitness) -> Result<Elem> {
    let a = w.validate(grp)?;
    require_not_gen_dihedral(grp)?;
    let moved = |x: Elem| grp.conj(x, w.n) != x;
    if moved(w.a[0]) {
        return Ok(w.a[0]);
    }
    involution_candidates(grp, w, &a)
        .into_iter()
        .map(|b| grp.mul(w.a[0], b))
        .find(|&x| moved(x))
        .ok_or_else(|| Error::Validation("every element of A of order 4 is centralised by n".into()))
}

/// For `o(n) = 2`, an element of `A` of order greater than 2 not inverted by
/// `n`: `a_1` if possible, otherwise `a_1 b` for an involution `b`.
pub fn find_not_inverted(grp: &FiniteGroup, w: &CWitness) -> Result<Elem> {
    let a = w.validate(grp)?;
    require_not_gen_dihedral(grp)?;
    if grp.order_of(w.n) != 2 {
        return Err(Error::precondition("o(n) = 2", format!("o(n) = {}", grp.order_of(w.n))));
    }
    let kept = |x: Elem| grp.conj(x, w.n) != grp.inv(x);
    if kept(w.a[0]) {
        return Ok(w.a[0]);
    }
    involution_candidates(grp, w, &a)
        .into_iter()
        .map(|b| grp.mul(w.a[0], b))
        .find(|&x| kept(x))
        .ok_or_else(|| Error::Validation("n inverts every element of A of order 4".into()))
}

/// Which of the four displayed connection sets was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CCase {
    /// `a^n != n^{-2} a^{-1}`, `o(n) != 2`: extra elements `n^{-1}, a n^{-1} g, a n`.
    One,
    /// `a^n != a^{-1}`, `o(n) = 2`: extra elements `a n^{-1} g, a n`.
    Two,
    /// Every `a'` of order 4 has `a'^n = n^{-2} a'^{-1}`: extra `a n^{-1} g, n`.
    Three,
    /// The rest: extra `a n^{-1} g, a b_1 n, a b_1 b_2 n, a b_1 b_3 n`.
    Four,
}

#[derive(Clone, Debug)]
pub struct CConstruction {
    pub set: ConnectionSet,
    pub case: CCase,
    pub a: Elem,
    pub b: Option<[Elem; 3]>,
    /// The Imrich tuple for `B = <a_2, ..., a_{k+1}>`.
    pub tuple: ImrichTuple,
    /// The elements of `S` outside the coset `B a`.
    pub extra: Vec<Elem>,
}

/// The connection set for `k >= 6`.
pub fn construct_c_set(grp: &FiniteGroup, w: &CWitness) -> Result<CConstruction> {
    let a_sub = w.validate(grp)?;
    if w.k() < 6 {
        return Err(Error::precondition("k >= 6", format!("k = {}", w.k())));
    }
    let preferred = find_order4_not_centralised(grp, w)?;
    let n = w.n;
    let xn = |x: Elem| grp.conj(x, n);
    let nm2 = grp.inv(grp.mul(n, n));
    let order4: Vec<Elem> = a_sub.iter().filter(|&x| grp.order_of(x) == 4).collect();
    let moved = |x: Elem| xn(x) != x;
    let pick = |cond: &dyn Fn(Elem) -> bool| {
        if cond(preferred) {
            Some(preferred)
        } else {
            order4.iter().copied().find(|&x| cond(x))
        }
    };
    let cond1 = |x: Elem| moved(x) && xn(x) != grp.mul(nm2, grp.inv(x));
    let cond2 = |x: Elem| moved(x) && xn(x) != grp.inv(x);
    let two = grp.order_of(n) == 2;
    let (case, a) = if let Some(a) = pick(&cond1).filter(|_| !two) {
        (CCase::One, a)
    } else if let Some(a) = pick(&cond2).filter(|_| two) {
        (CCase::Two, a)
    } else if order4.iter().all(|&x| xn(x) == grp.mul(nm2, grp.inv(x))) {
        (CCase::Three, preferred)
    } else {
        (CCase::Four, preferred)
    };
    let tuple = ImrichTuple::new(grp, w.a[1..].to_vec())?;
    let b_sub = tuple.span(grp);
    let t = imrich_set(grp, &tuple);
    let ninv = grp.inv(n);
    let ang = grp.product([a, ninv, w.g]);
    let mut b_found = None;
    let extra = match case {
        CCase::One => vec![ninv, ang, grp.mul(a, n)],
        CCase::Two => vec![ang, grp.mul(a, n)],
        CCase::Three => vec![ang, n],
        CCase::Four => {
            let central = |x: Elem| xn(x) == x;
            let b1 = b_sub
                .iter()
                .find(|&b| b != 0 && central(grp.mul(a, b)))
                .ok_or_else(|| Error::Validation("no b_1 with a b_1 centralised by n".into()))?;
            let ab1 = grp.mul(a, b1);
            let rest: Vec<Elem> = b_sub
                .iter()
                .filter(|&b| b != 0 && central(grp.mul(ab1, b)))
                .take(2)
                .collect();
            if rest.len() < 2 {
                return Err(Error::Validation("no b_2, b_3 with a b_1 b_i centralised by n".into()));
            }
            let (b2, b3) = (rest[0], rest[1]);
            b_found = Some([b1, b2, b3]);
            vec![
                ang,
                grp.mul(ab1, n),
                grp.product([ab1, b2, n]),
                grp.product([ab1, b3, n]),
            ]
        }
    };
    let mut elems: Vec<Elem> = b_sub
        .iter()
        .filter(|&z| z != 0 && !t.contains(&z))
        .map(|z| grp.mul(z, a))
        .collect();
    elems.extend(&extra);
    let set = oriented_set(grp, &elems, "c-family construction")?;
    Ok(CConstruction {
        set,
        case,
        a,
        b: b_found,
        tuple,
        extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        for p in [
            CPreset::SwapWithSquare,
            CPreset::SwapInvolutions,
            CPreset::ShiftGenerator,
            CPreset::TwistInvolution,
        ] {
            let (g, w) = c_family_group(3, p).unwrap();
            assert_eq!(g.order(), 128);
            w.validate(&g).unwrap();
        }
    }

    #[test]
    fn order4_search() {
        let (g, w) = c_family_group(3, CPreset::SwapInvolutions).unwrap();
        assert_eq!(find_order4_not_centralised(&g, &w).unwrap(), g.mul(w.a[0], w.a[1]));
        // n inverting a_1 and swapping a_2, a_3 (inverting a_1 alone gives a
        // generalised dihedral group).
        let a = FiniteGroup::abelian(&[4, 2, 2]).unwrap();
        let mut images: Vec<Elem> = a.labels().iter().map(|l| l.1).collect();
        images[0] = a.inv(images[0]);
        images.swap(1, 2);
        let (g, w) = c_family_from_action(2, &images, 0).unwrap();
        assert_eq!(find_order4_not_centralised(&g, &w).unwrap(), w.a[0]);
        // Trivial action: n centralises A.
        let id: Vec<Elem> = a.labels().iter().map(|l| l.1).collect();
        let (g, w) = c_family_from_action(2, &id, 0).unwrap();
        assert!(matches!(find_order4_not_centralised(&g, &w), Err(Error::Validation(_))));
    }

    #[test]
    fn small_k_is_refused() {
        let (g, w) = c_family_group(3, CPreset::SwapInvolutions).unwrap();
        assert!(matches!(
            construct_c_set(&g, &w),
            Err(Error::Precondition { clause: "k >= 6", .. })
        ));
    }
}
