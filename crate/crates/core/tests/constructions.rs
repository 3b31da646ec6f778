mod common;

use std::time::Duration;

use common::naive_automorphism_count;
use orrforge::aut::stabiliser_is_trivial;
use orrforge::constructions::{
    abelian_2group_orr_set, b_family_group, c_family_group, case_ii_group, construct_bi_set,
    construct_bii_set, construct_c_set, imrich_connection_set, prop_reduction_dispatch, verify_orr,
    CPreset, ImrichTuple, ReductionVerdict,
};
use orrforge::digraph::{cayley, ConnectionSet};
use orrforge::{Error, FiniteGroup};

const BUDGET: Option<Duration> = Some(Duration::from_secs(120));

fn assert_orr(g: &FiniteGroup, s: &ConnectionSet) {
    assert!(s.iter().all(|x| !s.contains(g.inv(x))), "S meets its inverse");
    assert!(s.generates(), "S does not generate");
    let v = verify_orr(g, s, BUDGET).unwrap();
    assert!(v.is_orr(), "stabiliser is not trivial");
}

#[test]
fn abelian_sets_match_naive_count_up_to_order_sixteen() {
    for moduli in [&[8][..], &[16], &[4, 4], &[8, 2]] {
        let g = FiniteGroup::abelian(moduli).unwrap();
        let s = abelian_2group_orr_set(&g).unwrap();
        assert!(s.is_oriented());
        assert_eq!(naive_automorphism_count(cayley(&g, s).graph(), None), g.order() as u64, "{moduli:?}");
    }
}

#[test]
fn abelian_sets_up_to_order_128() {
    let shapes: &[&[usize]] = &[
        &[32], &[8, 4], &[4, 4, 2], &[16, 2, 2], &[8, 2, 2, 2], &[4, 4, 2, 2], &[64, 2], &[4, 4, 4, 2],
    ];
    for m in shapes {
        let g = FiniteGroup::abelian(m).unwrap();
        assert_orr(&g, &abelian_2group_orr_set(&g).unwrap());
    }
}

#[test]
fn abelian_construction_rejects_the_excluded_shapes() {
    for m in [&[2, 2, 2][..], &[4, 2, 2], &[3]] {
        let g = FiniteGroup::abelian(m).unwrap();
        assert!(abelian_2group_orr_set(&g).is_err(), "{m:?}");
    }
}

#[test]
fn imrich_sets_are_grrs() {
    for k in [6u32, 7] {
        let g = FiniteGroup::elementary_abelian(k).unwrap();
        let basis: Vec<usize> = (0..k).map(|i| 1 << i).collect();
        let t = ImrichTuple::new(&g, basis).unwrap();
        let s = imrich_connection_set(&g, &t);
        assert_eq!(s.len(), 2 * k as usize + 1);
        assert!(s.is_inverse_closed());
        assert!(stabiliser_is_trivial(cayley(&g, s).graph(), 0, BUDGET).unwrap().trivial);
    }
    let g = FiniteGroup::elementary_abelian(5).unwrap();
    assert!(matches!(ImrichTuple::new(&g, vec![1, 2, 4, 8, 16]), Err(Error::Precondition { .. })));
}

#[test]
fn split_and_square_families() {
    let (g, w) = b_family_group(2, 4, false).unwrap();
    let s = construct_bi_set(&g, &w).unwrap().set;
    for x in s.iter() {
        for y in s.iter() {
            assert_ne!(g.mul(x, y), g.identity());
        }
    }
    assert_orr(&g, &s);
    for (ell, kappa) in [(0, 7), (1, 5), (3, 1)] {
        let (g, w) = b_family_group(ell, kappa, true).unwrap();
        assert_orr(&g, &construct_bii_set(&g, &w).unwrap().set);
    }
}

#[test]
fn c_family_presets() {
    for p in [CPreset::SwapWithSquare, CPreset::SwapInvolutions, CPreset::ShiftGenerator, CPreset::TwistInvolution] {
        let (g, w) = c_family_group(6, p).unwrap();
        assert_orr(&g, &construct_c_set(&g, &w).unwrap().set);
    }
}

#[test]
fn reduction_lifts_c8_x_c2() {
    let (g, w) = case_ii_group(&[8, 2], &[3, 1], 0).unwrap();
    match prop_reduction_dispatch(&g, &w).unwrap() {
        ReductionVerdict::Orr(s) => {
            assert_orr(&g, &s);
            // In the neighbourhood digraph the extenders outside A are isolated
            // and S ∩ A is the unique largest weak component.
            let (delta, labels) = cayley(&g, s.clone()).neighbourhood_digraph();
            let mut comps: Vec<Vec<usize>> = delta
                .components()
                .into_iter()
                .map(|c| c.into_iter().map(|i| labels[i]).collect())
                .collect();
            comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
            let mut t: Vec<usize> = s.iter().filter(|&x| w.a.contains(x)).collect();
            let mut largest = comps[0].clone();
            t.sort();
            largest.sort();
            assert_eq!(largest, t);
            assert!(comps[1..].iter().all(|c| c.len() == 1 && !w.a.contains(c[0])));
            assert_eq!(comps.len() - 1, s.len() - t.len());
        }
        v => panic!("{v:?}"),
    }
}
