use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::search::mcs::mcs_order;
use crate::search::peo::peo_violation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering (the reverse of an MCS order).
    Chordal(VertexOrdering),
    /// A chordless cycle of length at least four, in cycle order.
    Hole(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Chordality test by MCS plus a linear PEO check, certified either way.
pub fn recognize_chordal(g: &Graph) -> Result<Chordality> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Chordality::Chordal(VertexOrdering::identity(0)));
    }
    let (order, _) = mcs_order(g, 0);
    let peo = VertexOrdering::new(n, order)?.reversed();
    match peo_violation(g, &peo) {
        None => Ok(Chordality::Chordal(peo)),
        Some(v) => {
            let hole = hole_through(g, v.vertex, v.follower, v.other)
                .or_else(|| find_hole(g))
                .expect("a graph without a PEO has a hole");
            Ok(Chordality::Hole(hole))
        }
    }
}

/// A hole `v, u, …, w` when `u` and `w` are nonadjacent neighbors of `v`
/// joined by a path avoiding the rest of `N[v]`.
fn hole_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        blocked[x] = x != u && x != w;
    }
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut cycle = vec![v];
            let mut back = vec![w];
            let mut y = w;
            while y != u {
                y = parent[y];
                back.push(y);
            }
            back.reverse();
            cycle.extend(back);
            return Some(cycle);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Any hole of `g`, by trying every vertex and pair of nonadjacent neighbors.
pub(crate) fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    if let Some(h) = hole_through(g, v, u, w) {
                        return Some(h);
                    }
                }
            }
        }
    }
    None
}

/// True iff `cycle` is an induced cycle of `g` of length at least four.
pub fn is_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle
        .iter()
        .all(|&v| v < g.vertex_count() && seen.insert(v))
    {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}
