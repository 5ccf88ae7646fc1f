//! Partition-refinement LBFS in O(n + m), with the `+` tie-break rule used by
//! multi-sweep recognition.

use crate::graph::{Graph, VertexOrdering};

const NIL: usize = usize::MAX;

/// Doubly linked list of classes, each a doubly linked list of vertices.
struct Partition {
    class_of: Vec<usize>,
    vprev: Vec<usize>,
    vnext: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
    cprev: Vec<usize>,
    cnext: Vec<usize>,
    split_stamp: Vec<usize>,
    split_into: Vec<usize>,
    first: usize,
}

impl Partition {
    fn new(initial: &[usize], n: usize) -> Self {
        let mut p = Partition {
            class_of: vec![0; n],
            vprev: vec![NIL; n],
            vnext: vec![NIL; n],
            head: vec![NIL],
            tail: vec![NIL],
            cprev: vec![NIL],
            cnext: vec![NIL],
            split_stamp: vec![NIL],
            split_into: vec![NIL],
            first: 0,
        };
        for &v in initial {
            p.append(0, v);
        }
        p
    }

    fn new_class_before(&mut self, c: usize) -> usize {
        let id = self.head.len();
        self.head.push(NIL);
        self.tail.push(NIL);
        self.split_stamp.push(NIL);
        self.split_into.push(NIL);
        let before = self.cprev[c];
        self.cprev.push(before);
        self.cnext.push(c);
        self.cprev[c] = id;
        if before == NIL {
            self.first = id;
        } else {
            self.cnext[before] = id;
        }
        id
    }

    fn append(&mut self, c: usize, v: usize) {
        self.class_of[v] = c;
        self.vnext[v] = NIL;
        self.vprev[v] = self.tail[c];
        if self.tail[c] == NIL {
            self.head[c] = v;
        } else {
            self.vnext[self.tail[c]] = v;
        }
        self.tail[c] = v;
    }

    /// Unlinks `v` from its class, dropping the class if it empties.
    fn remove(&mut self, v: usize) {
        let c = self.class_of[v];
        let (p, q) = (self.vprev[v], self.vnext[v]);
        if p == NIL {
            self.head[c] = q;
        } else {
            self.vnext[p] = q;
        }
        if q == NIL {
            self.tail[c] = p;
        } else {
            self.vprev[q] = p;
        }
        if self.head[c] == NIL {
            let (a, b) = (self.cprev[c], self.cnext[c]);
            if a == NIL {
                self.first = b;
            } else {
                self.cnext[a] = b;
            }
            if b != NIL {
                self.cprev[b] = a;
            }
        }
    }
}

/// LBFS that, among vertices with equal labels, takes the one earliest in
/// `preference` (which must list every vertex once). The first vertex of
/// `preference` is therefore the start.
pub fn lbfs_with_preference(g: &Graph, preference: &VertexOrdering) -> VertexOrdering {
    let n = g.vertex_count();
    assert_eq!(preference.len(), n, "preference must cover the graph");
    // neighbors listed in preference order
    let mut sorted_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &u in preference.as_slice() {
        for &w in g.neighbors(u) {
            sorted_adj[w].push(u);
        }
    }
    let mut part = Partition::new(preference.as_slice(), n);
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = part.head[part.first];
        part.remove(v);
        visited[v] = true;
        order.push(v);
        for &w in &sorted_adj[v] {
            if visited[w] {
                continue;
            }
            let c = part.class_of[w];
            if part.split_stamp[c] != step {
                part.split_stamp[c] = step;
                part.split_into[c] = part.new_class_before(c);
            }
            let target = part.split_into[c];
            part.remove(w);
            part.append(target, w);
        }
    }
    VertexOrdering::new(n, order).expect("LBFS visits every vertex once")
}

/// LBFS from `start`, ties otherwise broken by lowest id.
pub fn lbfs(g: &Graph, start: usize) -> VertexOrdering {
    let n = g.vertex_count();
    let mut pref = Vec::with_capacity(n);
    pref.push(start);
    pref.extend((0..n).filter(|&v| v != start));
    lbfs_with_preference(g, &VertexOrdering::new(n, pref).expect("permutation"))
}

/// LBFS+ of `previous`: ties go to the vertex appearing latest in `previous`.
pub fn lbfs_plus(g: &Graph, previous: &VertexOrdering) -> VertexOrdering {
    lbfs_with_preference(g, &previous.reversed())
}
