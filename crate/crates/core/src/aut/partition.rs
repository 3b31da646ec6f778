//! Ordered partitions and directed equitable refinement.

use std::collections::VecDeque;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// An ordered partition of `0..n`. Cells are contiguous runs of `lab` and
/// are identified by their start position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    /// Start of the cell holding each vertex.
    cell: Vec<u32>,
    /// For a cell start, the end (exclusive) of that cell.
    end: Vec<u32>,
    ncells: usize,
}

impl OrderedPartition {
    pub fn unit(n: usize) -> Self {
        let mut end = vec![0; n];
        if n > 0 {
            end[0] = n as u32;
        }
        OrderedPartition {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            cell: vec![0; n],
            end,
            ncells: usize::from(n > 0),
        }
    }

    /// Builds a partition from explicit cells, in order.
    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut p = OrderedPartition::unit(n);
        let mut at = 0usize;
        for c in cells {
            if c.is_empty() {
                return Err(Error::Argument("partition cells must be non-empty".into()));
            }
            let start = at;
            for &v in c {
                if v >= n || seen[v] {
                    return Err(Error::Argument(format!("vertex {v} repeated or out of range")));
                }
                seen[v] = true;
                p.lab[at] = v as u32;
                p.pos[v] = at as u32;
                p.cell[v] = start as u32;
                at += 1;
            }
            p.end[start] = at as u32;
        }
        if at != n {
            return Err(Error::Argument("cells do not cover every vertex".into()));
        }
        p.ncells = cells.len();
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.lab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lab.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.ncells
    }

    pub fn is_discrete(&self) -> bool {
        self.ncells == self.lab.len()
    }

    /// Vertices in position order.
    pub fn lab(&self) -> &[u32] {
        &self.lab
    }

    pub fn cell_start_of(&self, v: usize) -> usize {
        self.cell[v] as usize
    }

    /// Members of the cell starting at `start`.
    pub fn cell_members(&self, start: usize) -> &[u32] {
        &self.lab[start..self.end[start] as usize]
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.ncells);
        let mut s = 0;
        while s < self.lab.len() {
            let e = self.end[s] as usize;
            let mut c: Vec<usize> = self.lab[s..e].iter().map(|&v| v as usize).collect();
            c.sort_unstable();
            out.push(c);
            s = e;
        }
        out
    }

    /// Start of the smallest non-singleton cell, lowest start on ties.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.lab.len() {
            let e = self.end[s] as usize;
            let size = e - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
                if size == 2 {
                    break;
                }
            }
            s = e;
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off its cell as a singleton placed at the cell's start.
    /// Returns the start of the singleton.
    pub fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell[v] as usize;
        let e = self.end[s] as usize;
        if e - s == 1 {
            return s;
        }
        let p = self.pos[v] as usize;
        self.lab.swap(s, p);
        self.pos[self.lab[p] as usize] = p as u32;
        self.pos[v] = s as u32;
        self.end[s] = (s + 1) as u32;
        self.end[s + 1] = e as u32;
        for q in s + 1..e {
            self.cell[self.lab[q] as usize] = (s + 1) as u32;
        }
        self.ncells += 1;
        s
    }

    fn all_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ncells);
        let mut s = 0;
        while s < self.lab.len() {
            out.push(s);
            s = self.end[s] as usize;
        }
        out
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(5) ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Reusable scratch space for refinement.
pub struct Refiner {
    key: Vec<u64>,
    touched: Vec<u32>,
    touched_cells: Vec<u32>,
    cell_seen: Vec<bool>,
    in_queue: Vec<bool>,
    queue: VecDeque<u32>,
}

impl Refiner {
    pub fn new(n: usize) -> Self {
        Refiner {
            key: vec![0; n],
            touched: Vec::new(),
            touched_cells: Vec::new(),
            cell_seen: vec![false; n],
            in_queue: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Refines `p` to the coarsest equitable partition finer than it, using
    /// the cells starting at `splitters` as the initial splitting queue.
    /// Returns a trace that depends only on positions and counts, so that
    /// isomorphic inputs give equal traces.
    ///
    /// A vertex's signature with respect to a splitter cell `W` is the pair
    /// (arcs into `W`, arcs out of `W`). Untouched vertices keep the cell's
    /// start; touched ones follow, sorted by signature.
    pub fn refine(&mut self, g: &Digraph, p: &mut OrderedPartition, splitters: &[usize]) -> u64 {
        let mut trace = 0x5151_u64;
        for &s in splitters {
            if !self.in_queue[s] {
                self.in_queue[s] = true;
                self.queue.push_back(s as u32);
            }
        }
        while let Some(w) = self.queue.pop_front() {
            let w = w as usize;
            self.in_queue[w] = false;
            if p.is_discrete() {
                continue;
            }
            let we = p.end[w] as usize;
            trace = mix(trace, w as u64);
            for i in w..we {
                let x = p.lab[i] as usize;
                for &y in g.out_neighbours(x) {
                    let y = y as usize;
                    if self.key[y] == 0 {
                        self.touched.push(y as u32);
                    }
                    self.key[y] += 1;
                }
                for &y in g.in_neighbours(x) {
                    let y = y as usize;
                    if self.key[y] == 0 {
                        self.touched.push(y as u32);
                    }
                    self.key[y] += 1 << 32;
                }
            }
            for &y in &self.touched {
                let c = p.cell[y as usize];
                if !self.cell_seen[c as usize] {
                    self.cell_seen[c as usize] = true;
                    self.touched_cells.push(c);
                }
            }
            self.touched_cells.sort_unstable();
            let mut tcells = std::mem::take(&mut self.touched_cells);
            for &c in &tcells {
                self.cell_seen[c as usize] = false;
                trace = self.split_cell(p, c as usize, trace);
            }
            tcells.clear();
            self.touched_cells = tcells;
            for &y in &self.touched {
                self.key[y as usize] = 0;
            }
            self.touched.clear();
        }
        mix(trace, p.ncells as u64)
    }

    fn split_cell(&mut self, p: &mut OrderedPartition, s: usize, mut trace: u64) -> u64 {
        let e = p.end[s] as usize;
        // Move the touched members of the cell to its tail.
        let mut tail = e;
        for i in (s..e).rev() {
            let v = p.lab[i] as usize;
            if self.key[v] != 0 {
                tail -= 1;
                let u = p.lab[tail];
                p.lab.swap(i, tail);
                p.pos[u as usize] = i as u32;
                p.pos[v] = tail as u32;
            }
        }
        let key = &self.key;
        p.lab[tail..e].sort_unstable_by_key(|&v| (key[v as usize], v));
        for q in tail..e {
            p.pos[p.lab[q] as usize] = q as u32;
        }
        // Fragment starts.
        let mut starts: Vec<usize> = Vec::new();
        if tail > s {
            starts.push(s);
        }
        for q in tail..e {
            if q == tail || key[p.lab[q] as usize] != key[p.lab[q - 1] as usize] {
                starts.push(q);
                trace = mix(trace, key[p.lab[q] as usize]);
            }
        }
        trace = mix(trace, ((s as u64) << 32) | (tail - s) as u64);
        if starts.len() == 1 {
            return trace;
        }
        let was_queued = self.in_queue[s];
        let mut largest = 0;
        for (k, &fs) in starts.iter().enumerate() {
            let fe = starts.get(k + 1).copied().unwrap_or(e);
            p.end[fs] = fe as u32;
            if fs != s {
                for q in fs..fe {
                    p.cell[p.lab[q] as usize] = fs as u32;
                }
            }
            if fe - fs > (p.end[starts[largest]] as usize) - starts[largest] {
                largest = k;
            }
            trace = mix(trace, (fe - fs) as u64);
        }
        p.ncells += starts.len() - 1;
        for (k, &fs) in starts.iter().enumerate() {
            let push = if was_queued { fs != s } else { k != largest };
            if push && !self.in_queue[fs] {
                self.in_queue[fs] = true;
                self.queue.push_back(fs as u32);
            }
        }
        trace
    }
}

/// Coarsest equitable refinement of `p`.
pub fn refine(g: &Digraph, p: &OrderedPartition) -> OrderedPartition {
    let mut q = p.clone();
    let starts = q.all_starts();
    Refiner::new(g.order()).refine(g, &mut q, &starts);
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn cycle_unit_is_equitable() {
        let g = cycle(6);
        let p = refine(&g, &OrderedPartition::unit(6));
        assert_eq!(p.cell_count(), 1);
    }

    #[test]
    fn path_becomes_discrete() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 2)]);
        let p = refine(&g, &OrderedPartition::unit(3));
        assert!(p.is_discrete());
    }

    #[test]
    fn refine_is_idempotent_and_never_merges() {
        let g = Digraph::from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 3), (5, 0)]);
        let unit = OrderedPartition::unit(6);
        let p = refine(&g, &unit);
        let q = refine(&g, &p);
        assert_eq!(p.cells(), q.cells());
        assert!(p.cell_count() >= unit.cell_count());
    }

    #[test]
    fn individualize_then_refine() {
        let g = cycle(5);
        let mut p = refine(&g, &OrderedPartition::unit(5));
        let s = p.individualize(2);
        Refiner::new(5).refine(&g, &mut p, &[s]);
        assert!(p.is_discrete());
        assert_eq!(p.lab()[0], 2);
    }

    #[test]
    fn from_cells_validates() {
        assert!(OrderedPartition::from_cells(3, &[vec![0, 1], vec![2]]).is_ok());
        assert!(OrderedPartition::from_cells(3, &[vec![0, 1], vec![1]]).is_err());
        assert!(OrderedPartition::from_cells(3, &[vec![0, 1]]).is_err());
    }
}
