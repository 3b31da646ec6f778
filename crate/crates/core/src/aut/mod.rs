//! Digraph automorphisms by individualisation and refinement.
//!
//! The main question is whether the stabiliser of a vertex is trivial; for a
//! Cayley digraph this is exactly whether the digraph is a regular
//! representation. Full automorphism groups are computed for small inputs as
//! a test oracle.

mod partition;
mod search;

use std::fmt::Write as _;
use std::time::Duration;

pub use partition::{refine, OrderedPartition, Refiner};
pub use search::{
    automorphism_group, fixed_points_of_stabiliser, stabiliser_generators, stabiliser_is_trivial,
    DigraphAutomorphisms, ORACLE_MAX_VERTICES,
};

/// Outcome of a stabiliser search.
#[derive(Clone, Debug)]
pub struct StabiliserReport {
    pub trivial: bool,
    /// A non-identity automorphism fixing the base vertex, when one exists.
    pub witness: Option<Vec<usize>>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Default search timeout.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(3600);

/// A permutation in cycle notation, fixed points omitted; `()` for the
/// identity.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{x}").expect("writing to a String");
            x = perm[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_examples() {
        assert_eq!(cycle_notation(&[0, 1, 2]), "()");
        assert_eq!(cycle_notation(&[0, 2, 1, 4, 5, 3]), "(1 2)(3 4 5)");
    }
}
