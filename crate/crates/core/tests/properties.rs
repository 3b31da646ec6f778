mod common;

use common::naive_automorphism_count;
use orrforge::aut::{automorphism_group, fixed_points_of_stabiliser, stabiliser_is_trivial};
use orrforge::constructions::verify_orr;
use orrforge::digraph::io::{parse_edge_list, to_edge_list};
use orrforge::digraph::{cayley, ConnectionSet, Digraph};
use orrforge::group::io::{parse_grp, write_grp};
use orrforge::{FiniteGroup, Presentation};
use proptest::prelude::*;

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=12).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        (3usize..=6).prop_map(|n| FiniteGroup::dihedral(n).unwrap()),
        Just(FiniteGroup::quaternion8()),
        Just(FiniteGroup::abelian(&[4, 2]).unwrap()),
        Just(FiniteGroup::abelian(&[3, 3]).unwrap()),
        Just(FiniteGroup::elementary_abelian(3).unwrap()),
    ]
}

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n).filter(|&i| bits[i] && i / n != i % n).map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms_hold(g in small_group(), a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), a), a);
        prop_assert_eq!(g.conj(a, b), g.mul(g.mul(g.inv(b), a), b));
    }

    #[test]
    fn grp_round_trip(g in small_group()) {
        let h = parse_grp(&write_grp(&g)).unwrap();
        prop_assert_eq!(h.order(), g.order());
        for a in g.elements() {
            for b in g.elements() {
                prop_assert_eq!(h.mul(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn cyclic_presentation_compiles(n in 1usize..40) {
        let p = Presentation::parse(&format!("gens: a\nrels: a^{n}=1\n")).unwrap();
        let g = p.compile(1000).unwrap();
        prop_assert_eq!(g.order(), n);
        prop_assert!(g.is_abelian());
    }

    #[test]
    fn dihedral_presentation_compiles(n in 3usize..30) {
        let p = Presentation::parse(&format!("gens: r s\nrels: r^{n}=s^2=(rs)^2=1\n")).unwrap();
        prop_assert_eq!(p.compile(1000).unwrap().order(), 2 * n);
    }

    #[test]
    fn edge_list_round_trip(d in digraph(9)) {
        let e = parse_edge_list(&to_edge_list(&d)).unwrap();
        prop_assert_eq!(e.order(), d.order());
        prop_assert_eq!(e.arcs().collect::<Vec<_>>(), d.arcs().collect::<Vec<_>>());
    }

    #[test]
    fn automorphism_order_matches_naive(d in digraph(7)) {
        let aut = automorphism_group(&d).unwrap();
        prop_assert_eq!(aut.order, naive_automorphism_count(&d, None) as u128);
        for a in &aut.generators {
            prop_assert!(d.is_automorphism(a));
        }
    }

    #[test]
    fn stabiliser_matches_naive(d in digraph(7)) {
        let r = stabiliser_is_trivial(&d, 0, None).unwrap();
        prop_assert_eq!(r.trivial, naive_automorphism_count(&d, Some(0)) == 1);
    }

    #[test]
    fn orr_verdict_matches_naive(g in small_group(), mask in any::<u64>()) {
        prop_assume!(g.order() <= 9);
        let s = ConnectionSet::from_elems(&g, g.elements().filter(|&x| x != 0 && mask >> x & 1 == 1));
        let v = verify_orr(&g, &s, None).unwrap();
        let cay = cayley(&g, s.clone());
        let naive = naive_automorphism_count(cay.graph(), None);
        prop_assert_eq!(v.is_orr(), s.is_oriented() && naive == g.order() as u64);
    }

    #[test]
    fn cayley_digraphs_are_regular(g in small_group(), mask in any::<u64>()) {
        let s = ConnectionSet::from_elems(&g, g.elements().filter(|&x| x != 0 && mask >> x & 1 == 1));
        let cay = cayley(&g, s.clone());
        for v in g.elements() {
            prop_assert_eq!(cay.graph().out_degree(v), s.len());
            prop_assert_eq!(cay.graph().in_degree(v), s.len());
        }
        // Right translations are automorphisms.
        for t in g.elements() {
            let perm: Vec<usize> = g.elements().map(|x| g.mul(x, t)).collect();
            prop_assert!(cay.graph().is_automorphism(&perm));
        }
    }

    #[test]
    fn stabiliser_fixed_points_form_a_subgroup(g in small_group(), mask in any::<u64>()) {
        let s = ConnectionSet::from_elems(&g, g.elements().filter(|&x| x != 0 && mask >> x & 1 == 1));
        let cay = cayley(&g, s);
        let fixed = fixed_points_of_stabiliser(cay.graph(), 0).unwrap();
        prop_assert!(g.is_subgroup(&fixed));
    }
}
