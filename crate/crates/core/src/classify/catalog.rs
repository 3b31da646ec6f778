//! The shipped groups: all 42 isomorphism classes of order at most 16, and
//! the eleven groups without an ORR that are not generalised dihedral.

use crate::error::Result;
use crate::group::{is_isomorphic, FiniteGroup};
use crate::presentation::{Presentation, DEFAULT_MAX_COSETS};

/// A presentation shipped with the library.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    /// File stem, e.g. `c4xc2`.
    pub key: &'static str,
    pub text: &'static str,
}

impl CatalogEntry {
    pub fn presentation(&self) -> Result<Presentation> {
        Presentation::parse(self.text)
    }

    pub fn compile(&self) -> Result<FiniteGroup> {
        self.presentation()?.compile(DEFAULT_MAX_COSETS)
    }
}

macro_rules! entry {
    ($key:literal) => {
        CatalogEntry {
            key: $key,
            text: include_str!(concat!("../../catalog/", $key, ".pres")),
        }
    };
}

/// One presentation per isomorphism class of order at most 16, by order.
pub const SMALL_GROUPS: [CatalogEntry; 42] = [
    entry!("c1"),
    entry!("c2"),
    entry!("c3"),
    entry!("c4"),
    entry!("c2_2"),
    entry!("c5"),
    entry!("c6"),
    entry!("s3"),
    entry!("c7"),
    entry!("c8"),
    entry!("c4xc2"),
    entry!("c2_3"),
    entry!("d4"),
    entry!("q8"),
    entry!("c9"),
    entry!("c3_2"),
    entry!("c10"),
    entry!("d5"),
    entry!("c11"),
    entry!("c12"),
    entry!("c6xc2"),
    entry!("d6"),
    entry!("a4"),
    entry!("dic3"),
    entry!("c13"),
    entry!("c14"),
    entry!("d7"),
    entry!("c15"),
    entry!("c16"),
    entry!("c4_2"),
    entry!("c4xc2_sd_c2"),
    entry!("c4_sd_c4"),
    entry!("c8xc2"),
    entry!("m16"),
    entry!("d8"),
    entry!("sd16"),
    entry!("q16"),
    entry!("c4xc2_2"),
    entry!("d4xc2"),
    entry!("q8xc2"),
    entry!("c4od4"),
    entry!("c2_4"),
];

/// Compiles the whole small-group catalog.
pub fn small_groups() -> Result<Vec<FiniteGroup>> {
    SMALL_GROUPS.iter().map(CatalogEntry::compile).collect()
}

/// The presentations of the three exceptions that have no standard name.
pub const EXCEPTION_PRESENTATIONS: [CatalogEntry; 3] = [
    entry!("exceptions/p16a"),
    entry!("exceptions/p16b"),
    entry!("exceptions/p32"),
];

/// The eleven exceptional groups, in the order they are usually listed.
#[derive(Clone, Debug)]
pub struct ExceptionCatalog {
    groups: Vec<(&'static str, FiniteGroup)>,
}

impl ExceptionCatalog {
    pub const NAMES: [&'static str; 11] = [
        "Q8", "C4xC2", "C4xC2^2", "C4xC2^3", "C4xC2^4", "C3^2", "C3xC2^3", "P16a", "P16b", "P32",
        "D4oD4",
    ];

    pub fn new() -> Result<Self> {
        let [p16a, p16b, p32] = EXCEPTION_PRESENTATIONS;
        let groups = vec![
            FiniteGroup::quaternion8(),
            FiniteGroup::abelian(&[4, 2])?,
            FiniteGroup::abelian(&[4, 2, 2])?,
            FiniteGroup::abelian(&[4, 2, 2, 2])?,
            FiniteGroup::abelian(&[4, 2, 2, 2, 2])?,
            FiniteGroup::abelian(&[3, 3])?,
            FiniteGroup::abelian(&[6, 2, 2])?,
            p16a.compile()?,
            p16b.compile()?,
            p32.compile()?,
            FiniteGroup::central_product_d4d4(),
        ];
        Ok(ExceptionCatalog {
            groups: Self::NAMES
                .iter()
                .zip(groups)
                .map(|(&n, g)| (n, g.with_name(n)))
                .collect(),
        })
    }

    pub fn groups(&self) -> &[(&'static str, FiniteGroup)] {
        &self.groups
    }

    pub fn get(&self, name: &str) -> Option<&FiniteGroup> {
        self.groups.iter().find(|(n, _)| *n == name).map(|(_, g)| g)
    }

    /// The name of the exception isomorphic to `g`, if any.
    pub fn identify(&self, g: &FiniteGroup) -> Option<&'static str> {
        self.groups
            .iter()
            .find(|(_, h)| is_isomorphic(g, h).is_some())
            .map(|(n, _)| *n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exception_orders() {
        let cat = ExceptionCatalog::new().unwrap();
        let orders: Vec<usize> = cat.groups().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, [8, 8, 16, 32, 64, 9, 24, 16, 16, 32, 32]);
        for (i, (_, g)) in cat.groups().iter().enumerate() {
            for (_, h) in &cat.groups()[i + 1..] {
                assert!(is_isomorphic(g, h).is_none());
            }
            assert!(!g.is_generalized_dihedral());
        }
    }

    #[test]
    fn catalog_compiles_with_expected_orders() {
        let groups = small_groups().unwrap();
        let mut per_order = [0usize; 17];
        for g in &groups {
            per_order[g.order()] += 1;
        }
        assert_eq!(per_order, [0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]);
    }
}
