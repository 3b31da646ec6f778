//! The groups `<V, x>` where `x` swaps `v_i` with `w_i` and fixes each
//! `e_j`, with `x^2 = 1` or `x^2 = e_1`.

use super::imrich::{imrich_set, ImrichTuple};
use super::{check_elem, is_elementary_basis, oriented_set};
use crate::digraph::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};

/// `G = <V, x>` with `V` elementary abelian on the basis
/// `v_1, w_1, ..., v_l, w_l, e_1, ..., e_k`, `v_i^x = w_i`, `w_i^x = v_i`,
/// `e_j^x = e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiWitness {
    pub ell: usize,
    pub kappa: usize,
    pub x: Elem,
    pub pairs: Vec<(Elem, Elem)>,
    pub fixed: Vec<Elem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiKind {
    /// `x^2 = 1`.
    Split,
    /// `x^2 = e_1`.
    SquareIsE1,
}

impl BiWitness {
    pub fn basis(&self) -> Vec<Elem> {
        let mut b: Vec<Elem> = self.pairs.iter().flat_map(|&(v, w)| [v, w]).collect();
        b.extend(&self.fixed);
        b
    }

    pub fn validate(&self, g: &FiniteGroup) -> Result<BiKind> {
        if self.pairs.len() != self.ell || self.fixed.len() != self.kappa {
            return Err(Error::Validation("basis sizes do not match (l, kappa)".into()));
        }
        check_elem(g, self.x, "x")?;
        let basis = self.basis();
        if !is_elementary_basis(g, &basis) {
            return Err(Error::Validation(
                "v_i, w_i, e_j are not a basis of an elementary abelian subgroup".into(),
            ));
        }
        let v = g.closure(&basis);
        if v.contains(self.x) || 2 * v.len() != g.order() {
            return Err(Error::Validation("G is not <V, x> with |G : V| = 2".into()));
        }
        for (i, &(vi, wi)) in self.pairs.iter().enumerate() {
            if g.conj(vi, self.x) != wi || g.conj(wi, self.x) != vi {
                return Err(Error::Validation(format!("x does not swap v_{0} and w_{0}", i + 1)));
            }
        }
        if let Some(j) = self.fixed.iter().position(|&e| g.conj(e, self.x) != e) {
            return Err(Error::Validation(format!("x does not fix e_{}", j + 1)));
        }
        let sq = g.mul(self.x, self.x);
        if sq == 0 {
            Ok(BiKind::Split)
        } else if self.fixed.first() == Some(&sq) {
            Ok(BiKind::SquareIsE1)
        } else {
            Err(Error::Validation("x^2 is neither 1 nor e_1".into()))
        }
    }
}

/// The group of the family with parameters `(l, kappa)`, with `x^2 = e_1`
/// when `square_is_e1` is set, together with its natural witness.
///
/// `V` is `C_2^{2l + kappa}` in the bitmask encoding with `v_i`, `w_i` the
/// bits `2i - 2`, `2i - 1` and `e_j` the bit `2l + j - 1`; `v x` has index
/// `|V| + v`.
pub fn b_family_group(
    ell: usize,
    kappa: usize,
    square_is_e1: bool,
) -> Result<(FiniteGroup, BiWitness)> {
    if square_is_e1 && kappa == 0 {
        return Err(Error::precondition("kappa >= 1", "x^2 = e_1 needs some e_j"));
    }
    let rank = 2 * ell + kappa;
    let v = FiniteGroup::elementary_abelian(rank as u32)?;
    let pair_bits: usize = (0..ell).map(|i| 1usize << (2 * i)).sum();
    let swap = |m: Elem| {
        let lo = m & pair_bits;
        let hi = (m >> 1) & pair_bits;
        (m & !(pair_bits | pair_bits << 1)) | lo << 1 | hi
    };
    let phi: Vec<Elem> = v.elements().map(swap).collect();
    let e1 = 1usize << (2 * ell);
    let c = if square_is_e1 { e1 } else { 0 };
    let g = FiniteGroup::c2_extension(&v, &phi, c, "x")?;
    let mut labels = Vec::new();
    for i in 0..ell {
        labels.push((format!("v{}", i + 1), 1usize << (2 * i)));
        labels.push((format!("w{}", i + 1), 1usize << (2 * i + 1)));
    }
    for j in 0..kappa {
        labels.push((format!("e{}", j + 1), 1usize << (2 * ell + j)));
    }
    let x = v.order();
    labels.push(("x".into(), x));
    let name = format!("B{}({ell},{kappa})", if square_is_e1 { "ii" } else { "i" });
    let g = g.with_labels(labels).with_name(name);
    let w = BiWitness {
        ell,
        kappa,
        x,
        pairs: (0..ell).map(|i| (1 << (2 * i), 1 << (2 * i + 1))).collect(),
        fixed: (0..kappa).map(|j| 1 << (2 * ell + j)).collect(),
    };
    Ok((g, w))
}

/// Which generating tuple fed the Imrich set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BiBranch {
    /// `kappa >= 2`: `(v_2, ..., v_l, w_2, ..., w_l, e_1, ..., e_k)`.
    KappaAtLeastTwo,
    /// `kappa <= 1`: `(v_2, v_4w_4, v_3, v_2w_2, v_4, v_2w_3, v_5, ..., v_l, e_1, ...)`.
    KappaAtMostOne,
}

#[derive(Clone, Debug)]
pub struct BiConstruction {
    pub set: ConnectionSet,
    pub branch: BiBranch,
    pub tuple: ImrichTuple,
}

/// `S = [(V_i \ T_i) \ {1}] v_1 x ∪ {v_2 x}` for the split case.
pub fn construct_bi_set(g: &FiniteGroup, w: &BiWitness) -> Result<BiConstruction> {
    if w.validate(g)? != BiKind::Split {
        return Err(Error::precondition("x^2 = 1", "the witness has x^2 = e_1"));
    }
    if w.ell < 2 {
        return Err(Error::precondition(
            "l >= 2",
            format!("l = {}; such groups are generalised dihedral", w.ell),
        ));
    }
    if 2 * w.ell + w.kappa < 8 {
        return Err(Error::precondition(
            "2l + kappa >= 8",
            format!("2l + kappa = {}", 2 * w.ell + w.kappa),
        ));
    }
    let v = |i: usize| w.pairs[i - 1].0;
    let wv = |i: usize| w.pairs[i - 1].1;
    let (branch, tuple) = if w.kappa >= 2 {
        let mut t: Vec<Elem> = (2..=w.ell).map(v).collect();
        t.extend((2..=w.ell).map(wv));
        t.extend(&w.fixed);
        (BiBranch::KappaAtLeastTwo, t)
    } else {
        let mut t = vec![
            v(2),
            g.mul(v(4), wv(4)),
            v(3),
            g.mul(v(2), wv(2)),
            v(4),
            g.mul(v(2), wv(3)),
        ];
        t.extend((5..=w.ell).map(v));
        t.extend(&w.fixed);
        (BiBranch::KappaAtMostOne, t)
    };
    let tuple = ImrichTuple::new(g, tuple)?;
    let span = tuple.span(g);
    let t = imrich_set(g, &tuple);
    let v1x = g.mul(v(1), w.x);
    let mut elems: Vec<Elem> = span
        .iter()
        .filter(|&z| z != 0 && !t.contains(&z))
        .map(|z| g.mul(z, v1x))
        .collect();
    elems.push(g.mul(v(2), w.x));
    let set = oriented_set(g, &elems, "split b-family construction")?;
    Ok(BiConstruction { set, branch, tuple })
}

/// `S = T x ∪ {x}` for the case `x^2 = e_1`, with `T` the Imrich set on
/// `(v_1, ..., v_l, w_1, ..., w_l, e_2, ..., e_k)`.
pub fn construct_bii_set(g: &FiniteGroup, w: &BiWitness) -> Result<BiConstruction> {
    if w.kappa == 0 {
        return Err(Error::precondition("kappa >= 1", "x^2 = e_1 needs some e_j"));
    }
    if w.validate(g)? != BiKind::SquareIsE1 {
        return Err(Error::precondition("x^2 = e_1", "the witness has x^2 = 1"));
    }
    if 2 * w.ell + w.kappa < 7 {
        return Err(Error::precondition(
            "2l + kappa >= 7",
            format!("2l + kappa = {}", 2 * w.ell + w.kappa),
        ));
    }
    let mut basis: Vec<Elem> = w.pairs.iter().map(|p| p.0).collect();
    basis.extend(w.pairs.iter().map(|p| p.1));
    basis.extend(&w.fixed[1..]);
    let tuple = ImrichTuple::new(g, basis)?;
    let mut elems: Vec<Elem> = imrich_set(g, &tuple).iter().map(|&t| g.mul(t, w.x)).collect();
    elems.push(w.x);
    let set = oriented_set(g, &elems, "b-family construction with x^2 = e_1")?;
    Ok(BiConstruction {
        set,
        branch: BiBranch::KappaAtLeastTwo,
        tuple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_groups_validate() {
        let (g, w) = b_family_group(2, 1, false).unwrap();
        assert_eq!(g.order(), 64);
        assert_eq!(w.validate(&g).unwrap(), BiKind::Split);
        let (g, w) = b_family_group(1, 2, true).unwrap();
        assert_eq!(w.validate(&g).unwrap(), BiKind::SquareIsE1);
        assert!(b_family_group(2, 0, true).is_err());
    }

    #[test]
    fn bi_sizes_and_branches() {
        let (g, w) = b_family_group(2, 4, false).unwrap();
        let c = construct_bi_set(&g, &w).unwrap();
        assert_eq!(c.set.len(), 51);
        assert_eq!(c.branch, BiBranch::KappaAtLeastTwo);
        assert!(c.set.generates());
        let (g, w) = b_family_group(4, 0, false).unwrap();
        let c = construct_bi_set(&g, &w).unwrap();
        assert_eq!(c.branch, BiBranch::KappaAtMostOne);
        let (g, w) = b_family_group(1, 6, false).unwrap();
        assert!(matches!(
            construct_bi_set(&g, &w),
            Err(Error::Precondition { clause: "l >= 2", .. })
        ));
    }

    #[test]
    fn bii_sizes() {
        let (g, w) = b_family_group(0, 7, true).unwrap();
        let c = construct_bii_set(&g, &w).unwrap();
        assert_eq!(c.set.len(), 14);
        let (g, w) = b_family_group(3, 1, true).unwrap();
        let c = construct_bii_set(&g, &w).unwrap();
        assert_eq!(c.tuple.rank(), 6);
        let (g, w) = b_family_group(3, 1, false).unwrap();
        assert!(construct_bii_set(&g, &w).is_err());
    }
}
