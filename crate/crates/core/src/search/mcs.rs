//! Bucket-queue maximum cardinality search in O(n + m).

use crate::graph::Graph;

/// Unvisited vertices bucketed by their number of visited neighbors.
pub(crate) struct McsBuckets {
    buckets: Vec<Vec<usize>>,
    slot: Vec<usize>,
    count: Vec<usize>,
    visited: Vec<bool>,
    top: usize,
}

impl McsBuckets {
    pub(crate) fn new(vertex_count: usize) -> Self {
        let mut buckets = vec![Vec::new(); vertex_count.max(1)];
        buckets[0] = (0..vertex_count).collect();
        McsBuckets {
            buckets,
            slot: (0..vertex_count).collect(),
            count: vec![0; vertex_count],
            visited: vec![false; vertex_count],
            top: 0,
        }
    }

    /// The unvisited vertices of maximum count, in internal order.
    pub(crate) fn top_bucket(&self) -> &[usize] {
        &self.buckets[self.top]
    }

    pub(crate) fn count(&self, v: usize) -> usize {
        self.count[v]
    }

    fn detach(&mut self, v: usize) {
        let bucket = &mut self.buckets[self.count[v]];
        let at = self.slot[v];
        bucket.swap_remove(at);
        if let Some(&moved) = bucket.get(at) {
            self.slot[moved] = at;
        }
    }

    /// Marks `v` visited and bumps its unvisited neighbors.
    pub(crate) fn visit(&mut self, g: &Graph, v: usize) {
        debug_assert!(!self.visited[v]);
        self.detach(v);
        self.visited[v] = true;
        for &w in g.neighbors(v) {
            if self.visited[w] {
                continue;
            }
            self.detach(w);
            self.count[w] += 1;
            let c = self.count[w];
            self.slot[w] = self.buckets[c].len();
            self.buckets[c].push(w);
            self.top = self.top.max(c);
        }
        while self.top > 0 && self.buckets[self.top].is_empty() {
            self.top -= 1;
        }
    }
}

/// An MCS visiting order starting at `start`, with the number of visited
/// neighbors each vertex had when it was picked.
pub(crate) fn mcs_order(g: &Graph, start: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut buckets = McsBuckets::new(n);
    let mut order = Vec::with_capacity(n);
    let mut cardinality = Vec::with_capacity(n);
    if n == 0 {
        return (order, cardinality);
    }
    let mut next = start;
    loop {
        cardinality.push(buckets.count(next));
        order.push(next);
        buckets.visit(g, next);
        if order.len() == n {
            break;
        }
        next = *buckets
            .top_bucket()
            .last()
            .expect("unvisited vertices remain");
    }
    (order, cardinality)
}
