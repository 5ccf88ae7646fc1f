use crate::graph::{indices_by_key_desc, Graph, VertexSet};

/// A split partition whose clique side is a maximal clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    /// Checks the partition invariants directly against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.clique.universe() != n || self.independent.universe() != n {
            return false;
        }
        let covers = (0..n).all(|v| self.clique.contains(v) != self.independent.contains(v));
        let clique: Vec<usize> = self.clique.to_vec();
        let independent_ok = self.independent.iter().all(|v| {
            g.neighbors(v)
                .iter()
                .all(|&w| !self.independent.contains(w))
        });
        let maximal = self
            .independent
            .iter()
            .all(|v| g.neighbors(v).len() < clique.len());
        covers && g.is_clique(&clique) && independent_ok && maximal
    }
}

/// Recognizes split graphs in O(n + m) from the degree sequence.
///
/// With degrees sorted decreasingly and `m` the largest index having
/// `d_m ≥ m − 1`, the graph is split iff the top `m` degrees sum to
/// `m(m − 1)` plus the remaining degrees. The top `m` vertices then form a
/// maximal clique. Any other maximal clique usable as the clique side
/// differs from it by one swap, so the lexicographically smallest one is
/// picked among those swaps.
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(SplitPartition {
            clique: VertexSet::new(0),
            independent: VertexSet::new(0),
        });
    }
    let sorted = indices_by_key_desc(n, |v| g.degree(v));
    let m = sorted
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let top: usize = sorted[..m].iter().map(|&v| g.degree(v)).sum();
    let rest: usize = sorted[m..].iter().map(|&v| g.degree(v)).sum();
    if top != m * (m - 1) + rest {
        return None;
    }

    let mut in_clique = vec![false; n];
    for &v in &sorted[..m] {
        in_clique[v] = true;
    }
    // swap x out for y when N(y) = C − x and x has no neighbor outside C
    let mut best: Option<(usize, usize)> = None;
    let mut mark = vec![false; n];
    for y in (0..n).filter(|&y| !in_clique[y] && g.degree(y) + 1 == m) {
        for &w in g.neighbors(y) {
            mark[w] = true;
        }
        let x = sorted[..m].iter().copied().find(|&x| !mark[x]);
        for &w in g.neighbors(y) {
            mark[w] = false;
        }
        let Some(x) = x else { continue };
        if g.degree(x) + 1 != m {
            continue;
        }
        let better = match best {
            None => y < x,
            Some((bx, by)) => {
                // smallest element of the symmetric difference decides
                let in_new = |v: usize| (in_clique[v] && v != x) || v == y;
                let in_old = |v: usize| (in_clique[v] && v != bx) || v == by;
                let first = [x, y, bx, by]
                    .into_iter()
                    .filter(|&v| in_new(v) != in_old(v))
                    .min();
                first.is_some_and(in_new)
            }
        };
        if better {
            best = Some((x, y));
        }
    }
    if let Some((x, y)) = best {
        in_clique[x] = false;
        in_clique[y] = true;
    }
    Some(SplitPartition {
        clique: VertexSet::from_vertices(n, (0..n).filter(|&v| in_clique[v])),
        independent: VertexSet::from_vertices(n, (0..n).filter(|&v| !in_clique[v])),
    })
}
