mod common;

use common::naive_automorphism_count;
use orrforge::classify::{
    brute_force_orr, classify, find_beautiful_tuple, small_groups, ExceptionCatalog, Verdict,
};
use orrforge::digraph::{cayley, ConnectionSet};
use orrforge::FiniteGroup;

/// Whether some oriented `S` gives an ORR, by trying every subset of the
/// non-involutions and counting automorphisms naively.
fn naive_has_orr(g: &FiniteGroup) -> bool {
    let pool: Vec<usize> = g.elements().filter(|&x| g.order_of(x) > 2).collect();
    (0u64..1 << pool.len()).any(|mask| {
        let s = ConnectionSet::from_elems(
            g,
            pool.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x),
        );
        s.is_oriented()
            && naive_automorphism_count(cayley(g, s).graph(), None) == g.order() as u64
    })
}

#[test]
fn classification_agrees_with_naive_search_up_to_order_ten() {
    for g in small_groups().unwrap().into_iter().filter(|g| g.order() <= 10) {
        let v = classify(&g).unwrap();
        let expected = naive_has_orr(&g);
        assert_eq!(v.has_orr(), expected, "{} gave {}", g.name(), v.kind());
    }
}

#[test]
fn small_exceptions_have_no_orr() {
    let cat = ExceptionCatalog::new().unwrap();
    for name in ["Q8", "C4xC2", "C3^2"] {
        assert!(!naive_has_orr(cat.get(name).unwrap()), "{name}");
    }
}

#[test]
fn every_exception_is_certified() {
    let cat = ExceptionCatalog::new().unwrap();
    for (name, g) in cat.groups() {
        if g.order() > 32 {
            continue;
        }
        match brute_force_orr(g, None).unwrap() {
            Verdict::NoOrrCertified(c) => assert!(c.revalidate(g).is_ok(), "{name}"),
            v => panic!("{name} gave {}", v.kind()),
        }
    }
}

#[test]
fn exceptions_are_recognised_up_to_isomorphism() {
    // Q8 given by a different table than the catalog's.
    let p = orrforge::Presentation::parse("gens: i j\nrels: j^4=1, i^2=j^2, j^i=j^-1\n");
    let q8 = p.and_then(|p| p.compile(100)).unwrap();
    assert!(matches!(classify(&q8).unwrap(), Verdict::Exception(n) if n == "Q8"));
    let c6c2c2 = FiniteGroup::direct_product(
        &FiniteGroup::cyclic(3).unwrap(),
        &FiniteGroup::elementary_abelian(3).unwrap(),
    )
    .unwrap();
    assert!(matches!(classify(&c6c2c2).unwrap(), Verdict::Exception(n) if n == "C3xC2^3"));
}

#[test]
fn generalised_dihedral_groups_are_excluded() {
    for n in [3, 4, 5, 8, 12] {
        let d = FiniteGroup::dihedral(n).unwrap();
        assert!(matches!(classify(&d).unwrap(), Verdict::GeneralisedDihedral));
    }
    let dih_c3c3 = FiniteGroup::generalized_dihedral(&FiniteGroup::abelian(&[3, 3]).unwrap()).unwrap();
    assert!(matches!(classify(&dih_c3c3).unwrap(), Verdict::GeneralisedDihedral));
}

#[test]
fn beautiful_tuple_groups_have_orrs() {
    // These three have beautiful tuples and still no ORR.
    let cat = ExceptionCatalog::new().unwrap();
    let excluded = ["Q8", "C3^2", "C3xC2^3"];
    for g in small_groups().unwrap() {
        let name = cat.identify(&g);
        if find_beautiful_tuple(&g).is_some() && !name.is_some_and(|n| excluded.contains(&n)) {
            assert!(classify(&g).unwrap().has_orr(), "{}", g.name());
        }
    }
    for n in excluded {
        let g = cat.get(n).unwrap();
        assert!(find_beautiful_tuple(g).is_some() && !brute_force_orr(g, None).unwrap().has_orr());
    }
}
