use crate::graph::{Graph, VertexOrdering};

/// A witness that an ordering is not a perfect elimination ordering: `v` has
/// later neighbors `follower` (its earliest one) and `other`, which are not
/// adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeoViolation {
    pub vertex: usize,
    pub follower: usize,
    pub other: usize,
}

/// True iff for every vertex its later neighbors in `order` form a clique.
pub fn peo_check(g: &Graph, order: &VertexOrdering) -> bool {
    peo_violation(g, order).is_none()
}

/// Zero fill-in check in O(n + m): each vertex forwards its later neighbors
/// (other than its follower) to the follower, and each vertex then confirms
/// it is adjacent to everything forwarded to it.
pub fn peo_violation(g: &Graph, order: &VertexOrdering) -> Option<PeoViolation> {
    let n = g.vertex_count();
    assert_eq!(order.len(), n, "ordering length must match the graph");
    let pos = order.positions();
    // requirements[u] = (origin v, w): u must be adjacent to w
    let mut requirements: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for v in 0..n {
        let follower = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .min_by_key(|&w| pos[w]);
        let Some(f) = follower else { continue };
        for &w in g.neighbors(v) {
            if pos[w] > pos[v] && w != f {
                requirements[f].push((v, w));
            }
        }
    }
    let mut mark = vec![usize::MAX; n];
    for (u, reqs) in requirements.iter().enumerate() {
        if reqs.is_empty() {
            continue;
        }
        for &w in g.neighbors(u) {
            mark[w] = u;
        }
        if let Some(&(v, w)) = reqs.iter().find(|&&(_, w)| mark[w] != u) {
            return Some(PeoViolation {
                vertex: v,
                follower: u,
                other: w,
            });
        }
    }
    None
}
