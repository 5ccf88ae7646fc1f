//! Simple undirected graphs over dense vertex ids and the structural
//! primitives the searches and deciders are built on.

mod chain;
mod ordering;
mod separators;
mod vertex_set;

pub(crate) use chain::indices_by_key_desc;
pub use chain::{inclusion_chain_violation, is_inclusion_chain};
pub use ordering::VertexOrdering;
pub use separators::{clique_tree, minimal_separators_chordal, CliqueTree};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..vertex_count`.
///
/// Adjacency lists are sorted and free of duplicates and loops. Connectivity
/// is not an invariant of the type; searches check it at their entry points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    // N(v) is targets[offsets[v]..offsets[v + 1]]
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// The graph on `vertex_count` vertices with no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            offsets: vec![0; vertex_count + 1],
            targets: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        let mut degree = vec![0usize; vertex_count + 1];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            degree[u] += 1;
            degree[v] += 1;
            pairs.push((u, v));
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        let mut total = 0;
        for d in &degree[..vertex_count] {
            offsets.push(total);
            total += d;
        }
        offsets.push(total);
        let mut fill = offsets.clone();
        let mut targets = vec![0; total];
        for (u, v) in pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        Ok(Self::compact(offsets, targets))
    }

    /// Sorts and deduplicates each segment of a raw symmetric CSR layout.
    fn compact(mut offsets: Vec<usize>, mut targets: Vec<usize>) -> Self {
        let n = offsets.len() - 1;
        let mut write = 0;
        for v in 0..n {
            let (lo, hi) = (offsets[v], offsets[v + 1]);
            targets[lo..hi].sort_unstable();
            offsets[v] = write;
            for i in lo..hi {
                if i == lo || targets[i] != targets[i - 1] {
                    targets[write] = targets[i];
                    write += 1;
                }
            }
        }
        offsets[n] = write;
        targets.truncate(write);
        Graph { offsets, targets }
    }

    /// Sorts and deduplicates raw symmetric adjacency lists.
    fn from_raw_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(adjacency.len() + 1);
        let mut targets = Vec::new();
        for list in &adjacency {
            offsets.push(targets.len());
            targets.extend_from_slice(list);
        }
        offsets.push(targets.len());
        Self::compact(offsets, targets)
    }

    pub fn complete(vertex_count: usize) -> Self {
        let adjacency = (0..vertex_count)
            .map(|v| (0..vertex_count).filter(|&u| u != v).collect())
            .collect();
        Self::from_raw_adjacency(adjacency)
    }

    pub fn path(vertex_count: usize) -> Self {
        Self::from_edges(vertex_count, (1..vertex_count).map(|i| (i - 1, i)))
            .expect("path edges are valid")
    }

    pub fn cycle(vertex_count: usize) -> Self {
        assert!(vertex_count >= 3, "a cycle needs at least three vertices");
        Self::from_edges(
            vertex_count,
            (0..vertex_count).map(|i| (i, (i + 1) % vertex_count)),
        )
        .expect("cycle edges are valid")
    }

    /// K1,r with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// Sorted open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.vertex_count(), self.neighbors(v).iter().copied())
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.neighborhood(v);
        set.insert(v);
        set
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True iff N(t) is a clique. Linear time; see [`Graph::simplicial_obstruction`].
    pub fn is_simplicial(&self, t: usize) -> Result<bool> {
        Ok(self.simplicial_obstruction(t)?.is_none())
    }

    /// A pair of nonadjacent neighbors of `t`, or `None` when `t` is simplicial.
    ///
    /// For every neighbor `v`, merges the sorted lists N(t) and N(v) and
    /// looks for a member of N(t) − N[v]. A merge that finds nothing had
    /// `deg(v) >= deg(t) - 1`, so the whole check costs `O(sum of deg(v)
    /// over N(t))` with no per-call allocation.
    pub fn simplicial_obstruction(&self, t: usize) -> Result<Option<(usize, usize)>> {
        self.check_vertex(t)?;
        let nt = self.neighbors(t);
        for &v in nt {
            if let Some(w) = first_missing(nt, self.neighbors(v), v) {
                return Ok(Some((v.min(w), v.max(w))));
            }
        }
        Ok(None)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count_without(&[]) <= 1
    }

    /// Number of connected components after deleting `removed` (a per-vertex flag
    /// slice, or empty for "nothing removed").
    pub fn component_count_without(&self, removed: &[bool]) -> usize {
        let n = self.vertex_count();
        let gone = |v: usize| removed.get(v).copied().unwrap_or(false);
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut components = 0;
        for root in 0..n {
            if seen[root] || gone(root) {
                continue;
            }
            components += 1;
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] && !gone(w) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Component label per vertex (`usize::MAX` for removed vertices) and the
    /// number of components of `G - removed`.
    pub fn components_without(&self, removed: &[bool]) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let gone = |v: usize| removed.get(v).copied().unwrap_or(false);
        let mut label = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let mut count = 0;
        for root in 0..n {
            if label[root] != usize::MAX || gone(root) {
                continue;
            }
            label[root] = count;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if label[w] == usize::MAX && !gone(w) {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Whether G - N[t] is connected; the empty graph counts as connected.
    pub fn remainder_connected(&self, t: usize) -> Result<bool> {
        self.check_vertex(t)?;
        let mut removed = vec![false; self.vertex_count()];
        removed[t] = true;
        for &v in self.neighbors(t) {
            removed[v] = true;
        }
        Ok(self.component_count_without(&removed) <= 1)
    }

    /// Articulation vertices, by an iterative low-point DFS.
    pub fn cut_vertices(&self) -> Result<VertexSet> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.vertex_count();
        let mut cut = VertexSet::new(n);
        if n == 0 {
            return Ok(cut);
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = 0;
        low[0] = 0;
        let mut root_children = 0;
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(&w) = self.neighbors(v).get(top.2) {
                top.2 += 1;
                if disc[w] == usize::MAX {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != 0 && low[v] >= disc[parent] {
                        cut.insert(parent);
                    }
                }
            }
        }
        if root_children > 1 {
            cut.insert(0);
        }
        Ok(cut)
    }

    /// G[S], relabeled to `0..|S|` in increasing order of original id.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> InducedSubgraph {
        let original: Vec<usize> = subset.iter().filter(|&v| v < self.vertex_count()).collect();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let adjacency = original
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect()
            })
            .collect();
        InducedSubgraph {
            graph: Self::from_raw_adjacency(adjacency),
            original,
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adjacency = (0..n)
            .map(|v| {
                let mut list = Vec::with_capacity(n - 1 - self.degree(v));
                let mut it = self.neighbors(v).iter().peekable();
                for u in 0..n {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u != v {
                        list.push(u);
                    }
                }
                list
            })
            .collect();
        Self::from_raw_adjacency(adjacency)
    }
}

/// An induced subgraph plus the map from its vertex ids back to the parent's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the parent id of local vertex `i`.
    pub original: Vec<usize>,
}

/// First element of sorted `a`, other than `skip`, that is absent from sorted `b`.
fn first_missing(a: &[usize], b: &[usize], skip: usize) -> Option<usize> {
    let mut j = 0;
    for &x in a {
        if x == skip {
            continue;
        }
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return Some(x);
        }
    }
    None
}
