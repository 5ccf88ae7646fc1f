use std::collections::HashSet;

use super::{Graph, VertexOrdering, VertexSet};
use crate::error::{Error, Result};
use crate::search::mcs::mcs_order;
use crate::search::peo::peo_violation;

/// A clique tree of a connected chordal graph.
///
/// Built from one maximum cardinality search: a new maximal clique starts
/// whenever the visited-neighbor count fails to grow, its separator is the set
/// of visited neighbors of the vertex that opens it, and its parent is the
/// clique holding the latest visited vertex of that separator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTree {
    /// Maximal cliques, each sorted.
    pub cliques: Vec<Vec<usize>>,
    /// Parent clique; `None` for the root (clique 0).
    pub parent: Vec<Option<usize>>,
    /// Intersection with the parent clique, sorted; empty for the root.
    pub separator: Vec<Vec<usize>>,
    /// The MCS visiting order the tree was read from.
    pub visit_order: Vec<usize>,
}

impl CliqueTree {
    /// The distinct separators over all tree edges, i.e. the minimal separators.
    pub fn distinct_separators(&self) -> Vec<Vec<usize>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for s in self.separator.iter().skip(1) {
            if seen.insert(s.as_slice()) {
                out.push(s.clone());
            }
        }
        out
    }
}

/// Builds the clique tree of `g` in O(n + m), or fails with
/// [`Error::NotChordal`] when the reversed MCS order is not a perfect
/// elimination ordering.
pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(CliqueTree {
            cliques: Vec::new(),
            parent: Vec::new(),
            separator: Vec::new(),
            visit_order: Vec::new(),
        });
    }
    let (order, cardinality) = mcs_order(g, 0);
    let visit = VertexOrdering::new(n, order).expect("MCS visits every vertex once");
    if peo_violation(g, &visit.reversed()).is_some() {
        return Err(Error::NotChordal);
    }

    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut parent = Vec::new();
    let mut separator = Vec::new();
    let mut clique_of = vec![usize::MAX; n];
    let mut previous = 0;
    for (i, &v) in visit.as_slice().iter().enumerate() {
        let card = cardinality[i];
        if i == 0 || card <= previous {
            let earlier: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| visit.position(w) < i)
                .collect();
            let latest = earlier.iter().copied().max_by_key(|&w| visit.position(w));
            parent.push(latest.map(|w| clique_of[w]));
            let mut clique = earlier.clone();
            clique.push(v);
            cliques.push(clique);
            separator.push(earlier);
        } else {
            cliques.last_mut().expect("a clique is open").push(v);
        }
        clique_of[v] = cliques.len() - 1;
        previous = card;
    }
    for c in &mut cliques {
        c.sort_unstable();
    }
    Ok(CliqueTree {
        cliques,
        parent,
        separator,
        visit_order: visit.into_vec(),
    })
}

/// All minimal separators of a connected chordal graph, deduplicated and
/// sorted by size, then lexicographically.
pub fn minimal_separators_chordal(g: &Graph) -> Result<Vec<VertexSet>> {
    let tree = clique_tree(g)?;
    let mut seps = tree.distinct_separators();
    seps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(seps
        .into_iter()
        .map(|s| VertexSet::from_vertices(g.vertex_count(), s))
        .collect())
}
