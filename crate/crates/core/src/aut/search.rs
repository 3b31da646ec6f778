//! Individualisation-refinement search.
//!
//! The first path always individualises the least vertex of the smallest
//! non-singleton cell. Other branches are compared against it level by
//! level (trace and cell count); a leaf that survives gives the candidate map
//! first leaf -> leaf, which is checked directly.

use std::time::{Duration, Instant};

use super::partition::{OrderedPartition, Refiner};
use super::StabiliserReport;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::group::Subset;
use crate::util::UnionFind;

/// Largest digraph accepted by the full automorphism oracle.
pub const ORACLE_MAX_VERTICES: usize = 512;

/// Generators and order of an automorphism group (or vertex stabiliser).
#[derive(Clone, Debug)]
pub struct DigraphAutomorphisms {
    pub generators: Vec<Vec<usize>>,
    pub order: u128,
}

struct Level {
    before: OrderedPartition,
    cell: Vec<u32>,
    chosen: u32,
    trace: u64,
    ncells: usize,
}

struct Searcher<'a> {
    g: &'a Digraph,
    refiner: Refiner,
    levels: Vec<Level>,
    leaf: Vec<u32>,
    nodes: u64,
    start: Instant,
    deadline: Option<Instant>,
}

impl<'a> Searcher<'a> {
    /// Refines the unit partition (individualising `base` if given) and
    /// walks the first path down to a discrete partition.
    fn new(g: &'a Digraph, base: Option<usize>, timeout: Option<Duration>) -> Self {
        let n = g.order();
        let start = Instant::now();
        let mut s = Searcher {
            g,
            refiner: Refiner::new(n),
            levels: Vec::new(),
            leaf: Vec::new(),
            nodes: 1,
            start,
            deadline: timeout.and_then(|t| start.checked_add(t)),
        };
        let mut p = OrderedPartition::unit(n);
        s.refiner.refine(g, &mut p, &[0]);
        if let Some(b) = base {
            let c = p.individualize(b);
            s.refiner.refine(g, &mut p, &[c]);
            s.nodes += 1;
        }
        while let Some(t) = p.target_cell() {
            let mut cell = p.cell_members(t).to_vec();
            cell.sort_unstable();
            let chosen = cell[0];
            let before = p.clone();
            let c = p.individualize(chosen as usize);
            let trace = s.refiner.refine(g, &mut p, &[c]);
            s.nodes += 1;
            s.levels.push(Level {
                before,
                cell,
                chosen,
                trace,
                ncells: p.cell_count(),
            });
        }
        s.leaf = p.lab().to_vec();
        s
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(64) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::Timeout {
                        elapsed: self.start.elapsed(),
                        nodes: self.nodes,
                    });
                }
            }
        }
        Ok(())
    }

    /// Searches the subtree obtained by individualising `w` in `part` at
    /// `depth` for a leaf giving an automorphism.
    fn explore(
        &mut self,
        part: &OrderedPartition,
        depth: usize,
        w: u32,
    ) -> Result<Option<Vec<usize>>> {
        let mut p = part.clone();
        let c = p.individualize(w as usize);
        let trace = self.refiner.refine(self.g, &mut p, &[c]);
        self.tick()?;
        let level = &self.levels[depth];
        if trace != level.trace || p.cell_count() != level.ncells {
            return Ok(None);
        }
        if p.is_discrete() {
            let mut perm = vec![0usize; p.len()];
            for (q, &v) in self.leaf.iter().enumerate() {
                perm[v as usize] = p.lab()[q] as usize;
            }
            return Ok(self.g.is_automorphism(&perm).then_some(perm));
        }
        let t = p.target_cell().expect("non-discrete partition has a target cell");
        let mut cell = p.cell_members(t).to_vec();
        cell.sort_unstable();
        for u in cell {
            if let Some(a) = self.explore(&p, depth + 1, u)? {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    /// Any non-identity automorphism fixing the root's individualised
    /// vertices, searching the deepest level first.
    fn first_witness(&mut self) -> Result<Option<Vec<usize>>> {
        for i in (0..self.levels.len()).rev() {
            let before = self.levels[i].before.clone();
            let cell = self.levels[i].cell.clone();
            let chosen = self.levels[i].chosen;
            for w in cell {
                if w == chosen {
                    continue;
                }
                if let Some(a) = self.explore(&before, i, w)? {
                    return Ok(Some(a));
                }
            }
        }
        Ok(None)
    }

    /// Generators and order of the group fixing the root's individualised
    /// vertices, via orbits along the first path.
    fn generators(&mut self) -> Result<DigraphAutomorphisms> {
        let n = self.g.order();
        let mut uf = UnionFind::new(n);
        let mut generators: Vec<Vec<usize>> = Vec::new();
        let mut order: u128 = 1;
        for i in (0..self.levels.len()).rev() {
            let before = self.levels[i].before.clone();
            let cell = self.levels[i].cell.clone();
            let chosen = self.levels[i].chosen as usize;
            let mut failed: Vec<usize> = Vec::new();
            for &w in &cell {
                let w = w as usize;
                if uf.find(w) == uf.find(chosen) || failed.iter().any(|&f| uf.find(f) == uf.find(w)) {
                    continue;
                }
                match self.explore(&before, i, w as u32)? {
                    Some(a) => {
                        for (x, &y) in a.iter().enumerate() {
                            uf.union(x, y);
                        }
                        generators.push(a);
                    }
                    None => failed.push(w),
                }
            }
            let root = uf.find(chosen);
            let orbit = cell.iter().filter(|&&w| uf.find(w as usize) == root).count();
            order = order
                .checked_mul(orbit as u128)
                .ok_or_else(|| Error::Resource("automorphism group order overflows u128".into()))?;
        }
        Ok(DigraphAutomorphisms { generators, order })
    }
}

/// Decides whether the stabiliser of `base` in `Aut(g)` is trivial. A
/// non-trivial answer carries a witness that has been re-checked.
pub fn stabiliser_is_trivial(
    g: &Digraph,
    base: usize,
    timeout: Option<Duration>,
) -> Result<StabiliserReport> {
    if g.order() == 0 || base >= g.order() {
        return Err(Error::Argument(format!(
            "base vertex {base} is not a vertex of a digraph on {} vertices",
            g.order()
        )));
    }
    let mut s = Searcher::new(g, Some(base), timeout);
    let witness = s.first_witness()?;
    if let Some(w) = &witness {
        let identity = w.iter().enumerate().all(|(i, &x)| i == x);
        if identity || w[base] != base || !g.is_automorphism(w) {
            return Err(Error::Validation("stabiliser witness failed re-validation".into()));
        }
    }
    Ok(StabiliserReport {
        trivial: witness.is_none(),
        witness,
        nodes_explored: s.nodes,
        elapsed: s.start.elapsed(),
    })
}

fn check_oracle_size(g: &Digraph) -> Result<()> {
    if g.order() > ORACLE_MAX_VERTICES {
        return Err(Error::Resource(format!(
            "full automorphism computation is limited to {ORACLE_MAX_VERTICES} vertices"
        )));
    }
    Ok(())
}

/// Generators and order of `Aut(g)` (at most 512 vertices).
pub fn automorphism_group(g: &Digraph) -> Result<DigraphAutomorphisms> {
    check_oracle_size(g)?;
    Searcher::new(g, None, None).generators()
}

/// Generators and order of the stabiliser of `base` (at most 512 vertices).
pub fn stabiliser_generators(g: &Digraph, base: usize) -> Result<DigraphAutomorphisms> {
    check_oracle_size(g)?;
    if base >= g.order() {
        return Err(Error::Argument(format!("base vertex {base} out of range")));
    }
    Searcher::new(g, Some(base), None).generators()
}

/// Vertices fixed by every automorphism fixing `base`.
pub fn fixed_points_of_stabiliser(g: &Digraph, base: usize) -> Result<Subset> {
    let stab = stabiliser_generators(g, base)?;
    Ok(Subset::from_elems(
        g.order(),
        (0..g.order()).filter(|&v| stab.generators.iter().all(|a| a[v] == v)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn directed_cycle_is_rigid_at_a_vertex() {
        let r = stabiliser_is_trivial(&cycle(5), 0, None).unwrap();
        assert!(r.trivial);
        assert!(r.witness.is_none());
    }

    #[test]
    fn square_has_reflection() {
        // Cay(C2^2, {a, b}) in the bitmask encoding: a = 1, b = 2.
        let g = Digraph::from_arcs(4, (0..4).flat_map(|x| [(x, x ^ 1), (x, x ^ 2)]));
        let r = stabiliser_is_trivial(&g, 0, None).unwrap();
        assert!(!r.trivial);
        let w = r.witness.unwrap();
        assert_eq!((w[1], w[2]), (2, 1));
        let fixed = fixed_points_of_stabiliser(&g, 0).unwrap();
        assert_eq!(fixed.to_vec(), vec![0, 3]);
    }

    #[test]
    fn oracle_orders() {
        let k4 = Digraph::from_arcs(4, (0..4).flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v))));
        assert_eq!(automorphism_group(&k4).unwrap().order, 24);
        assert_eq!(automorphism_group(&cycle(6)).unwrap().order, 6);
        let empty = Digraph::from_arcs(5, []);
        assert_eq!(automorphism_group(&empty).unwrap().order, 120);
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = Digraph::from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order, 18);
        assert!(aut.generators.iter().all(|a| g.is_automorphism(a)));
    }

    #[test]
    fn timeout_is_reported() {
        // The empty graph on many vertices has a huge stabiliser, but the
        // first witness is found immediately; a zero timeout still has to
        // get past the tick interval to trigger, so use a large search.
        let g = Digraph::from_arcs(300, []);
        let r = stabiliser_is_trivial(&g, 0, Some(Duration::ZERO));
        assert!(r.is_ok() || matches!(r, Err(Error::Timeout { .. })));
    }
}
