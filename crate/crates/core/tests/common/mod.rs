//! Slow reference implementations used as oracles by the integration tests.

#![allow(dead_code)]

use orrforge::digraph::Digraph;

/// Counts automorphisms by plain backtracking over vertex images, checking
/// arcs only between already-mapped vertices. No refinement, no pruning by
/// orbits: exponential, but obviously correct for small digraphs.
pub fn naive_automorphism_count(d: &Digraph, fix: Option<usize>) -> u64 {
    let n = d.order();
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| d.has_arc(u, v)).collect()).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        adj: &[Vec<bool>],
        image: &mut [usize],
        used: &mut [bool],
        fix: Option<usize>,
    ) -> u64 {
        let n = adj.len();
        if i == n {
            return 1;
        }
        let mut total = 0;
        for t in 0..n {
            if used[t] || (fix == Some(i) && t != i) || (fix == Some(t) && i != t) {
                continue;
            }
            if (0..i).all(|j| adj[i][j] == adj[t][image[j]] && adj[j][i] == adj[image[j]][t])
                && adj[i][i] == adj[t][t]
            {
                image[i] = t;
                used[t] = true;
                total += go(i + 1, adj, image, used, fix);
                used[t] = false;
            }
        }
        total
    }
    go(0, &adj, &mut image, &mut used, fix)
}
