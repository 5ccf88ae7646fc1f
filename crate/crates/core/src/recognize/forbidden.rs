use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_WEAK_CHORDAL_GUARD: usize = 64;

/// An induced claw: `center` plus three pairwise nonadjacent neighbors.
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    for c in g.vertices() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some((c, [a, b, d]));
                    }
                }
            }
        }
    }
    None
}

/// An induced net: a triangle and, for each corner, a pendant adjacent to
/// that corner only, the pendants pairwise nonadjacent.
pub fn find_net(g: &Graph) -> Option<([usize; 3], [usize; 3])> {
    for x in g.vertices() {
        for &y in g.neighbors(x).iter().filter(|&&y| y > x) {
            for &z in g.neighbors(y).iter().filter(|&&z| z > y) {
                if !g.has_edge(x, z) {
                    continue;
                }
                let private = |own: usize, a: usize, b: usize| -> Vec<usize> {
                    g.neighbors(own)
                        .iter()
                        .copied()
                        .filter(|&p| p != a && p != b && !g.has_edge(p, a) && !g.has_edge(p, b))
                        .collect()
                };
                let (px, py, pz) = (private(x, y, z), private(y, x, z), private(z, x, y));
                for &p in &px {
                    for &q in py.iter().filter(|&&q| !g.has_edge(p, q)) {
                        if let Some(&r) =
                            pz.iter().find(|&&r| !g.has_edge(p, r) && !g.has_edge(q, r))
                        {
                            return Some(([x, y, z], [p, q, r]));
                        }
                    }
                }
            }
        }
    }
    None
}

/// No induced claw and no induced net. Polynomial but not linear; meant for
/// desk-scale graphs.
pub fn is_claw_net_free(g: &Graph) -> bool {
    find_claw(g).is_none() && find_net(g).is_none()
}

/// Whether `g` has an induced cycle on five or more vertices.
///
/// Such a hole contains an edge `bc` with further cycle neighbors `a` of `b`
/// and `d` of `c`; the rest of the hole then lies in one component of
/// `G − (N[b] ∪ N[c])` touched by both `a` and `d`. Conversely a shortest
/// `a`–`d` path through such a component closes a hole of length ≥ 5.
pub fn has_long_hole(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    for (b, c) in g.edges() {
        for &(b, c) in &[(b, c), (c, b)] {
            for &v in g.neighbors(b).iter().chain(g.neighbors(c)) {
                blocked[v] = true;
            }
            blocked[b] = true;
            blocked[c] = true;
            let (comp, _) = g.components_without(&blocked);
            let touching = |v: usize| -> Vec<usize> {
                let mut ids: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| !blocked[w])
                    .map(|&w| comp[w])
                    .collect();
                ids.sort_unstable();
                ids.dedup();
                ids
            };
            let left: Vec<usize> = g
                .neighbors(b)
                .iter()
                .copied()
                .filter(|&a| a != c && !g.has_edge(a, c))
                .collect();
            let right: Vec<(usize, Vec<usize>)> = g
                .neighbors(c)
                .iter()
                .copied()
                .filter(|&d| d != b && !g.has_edge(d, b))
                .map(|d| (d, touching(d)))
                .collect();
            let found = left.iter().any(|&a| {
                let ta = touching(a);
                right.iter().any(|(d, td)| {
                    !g.has_edge(a, *d) && ta.iter().any(|k| td.binary_search(k).is_ok())
                })
            });
            for v in blocked.iter_mut() {
                *v = false;
            }
            if found {
                return true;
            }
        }
    }
    false
}

/// Neither `g` nor its complement has an induced cycle of length ≥ 5.
pub fn is_weakly_chordal_desk(g: &Graph, size_guard: usize) -> Result<bool> {
    if g.vertex_count() > size_guard {
        return Err(Error::GuardExceeded {
            what: "weak chordality check",
            size: g.vertex_count(),
            guard: size_guard,
        });
    }
    Ok(!has_long_hole(g) && !has_long_hole(&g.complement()))
}
