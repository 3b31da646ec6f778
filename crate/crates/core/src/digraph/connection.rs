use crate::group::{Elem, FiniteGroup, Subset};

/// A connection set `S` together with its basic properties, computed once
/// at construction (the set is immutable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    members: Subset,
    contains_identity: bool,
    antisymmetric: bool,
    inverse_closed: bool,
    generates: bool,
}

impl ConnectionSet {
    pub fn new(group: &FiniteGroup, members: Subset) -> Self {
        assert_eq!(members.universe(), group.order(), "S must live in G");
        let contains_identity = members.contains(0);
        let antisymmetric = members.iter().all(|s| !members.contains(group.inv(s)));
        let inverse_closed = members.iter().all(|s| members.contains(group.inv(s)));
        let generates = group.closure_of(&members).len() == group.order();
        ConnectionSet {
            members,
            contains_identity,
            antisymmetric,
            inverse_closed,
            generates,
        }
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(group: &FiniteGroup, elems: I) -> Self {
        Self::new(group, Subset::from_elems(group.order(), elems))
    }

    pub fn members(&self) -> &Subset {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }

    pub fn contains_identity(&self) -> bool {
        self.contains_identity
    }

    /// `S ∩ S^{-1} = ∅`; this excludes the identity and every involution.
    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetric
    }

    /// Same as [`is_antisymmetric`](Self::is_antisymmetric): `Cay(G, S)` is
    /// an oriented digraph.
    pub fn is_oriented(&self) -> bool {
        self.antisymmetric
    }

    pub fn is_inverse_closed(&self) -> bool {
        self.inverse_closed
    }

    /// `<S> = G`, equivalently `Cay(G, S)` is connected.
    pub fn generates(&self) -> bool {
        self.generates
    }

    pub fn is_connected_as_cayley(&self) -> bool {
        self.generates
    }
}
