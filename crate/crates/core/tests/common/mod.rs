//! Random instance generators and brute-force oracles shared by the
//! integration tests. Oracles here are deliberately naive and independent of
//! the library's algorithms.
#![allow(dead_code)]

use endvertex::reduction::{CnfFormula, Literal};
use endvertex::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

// ---------- generators ----------

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((perm[i], perm[rng.gen_range(0..i)]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Adds vertices one at a time, each joined to a random clique around an
/// earlier vertex, so the reverse insertion order is a PEO.
pub fn random_chordal<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(v.saturating_sub(32)..v);
        let mut clique = vec![u];
        let mut cand = adj[u].clone();
        cand.shuffle(rng);
        let keep = rng.gen_range(0.0..1.0);
        for w in cand {
            if rng.gen_bool(keep) && clique.iter().all(|&c| adj[c].contains(&w)) {
                clique.push(w);
            }
        }
        for c in clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A clique of random size with every other vertex joined to a random
/// nonempty subset of it.
pub fn random_split<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let c = rng.gen_range(1..=n);
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for v in c..n {
        let p = rng.gen_range(0.1..1.0);
        let mut any = false;
        for u in 0..c {
            if rng.gen_bool(p) {
                edges.push((u, v));
                any = true;
            }
        }
        if !any {
            edges.push((rng.gen_range(0..c), v));
        }
    }
    let mut g = Graph::from_edges(n, edges).unwrap();
    // shuffle ids so the clique is not always a prefix
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g = relabel(&g, &perm);
    g
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.vertex_count(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Graph of closed integer intervals, `(left, right)` per vertex.
pub fn interval_graph(intervals: &[(i64, i64)]) -> Graph {
    let n = intervals.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = intervals[u];
            let (c, d) = intervals[v];
            if a <= d && c <= b {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected interval graph with its interval model.
pub fn random_interval<R: Rng>(rng: &mut R, n: usize) -> (Graph, Vec<(i64, i64)>) {
    let span = 2 * n as i64;
    loop {
        let max_len = rng.gen_range(1..=span);
        let intervals: Vec<(i64, i64)> = (0..n)
            .map(|_| {
                let l = rng.gen_range(0..span);
                (l, l + rng.gen_range(0..=max_len))
            })
            .collect();
        let g = interval_graph(&intervals);
        if g.is_connected() {
            return (g, intervals);
        }
    }
}

/// Random connected unit interval graph: points on a line joined when at
/// most `width` apart.
pub fn random_unit_interval<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let width = rng.gen_range(1..=4);
        let range = rng.gen_range(1..=(n as i64 * 2).max(2));
        let intervals: Vec<(i64, i64)> = (0..n)
            .map(|_| {
                let l = rng.gen_range(0..range);
                (l, l + width)
            })
            .collect();
        let g = interval_graph(&intervals);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected (claw, net)-free graph by rejection from a mix of
/// dense random graphs, cycles with chords and unit interval graphs.
pub fn random_claw_net_free<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let g = match rng.gen_range(0..3) {
            0 => {
                let p = rng.gen_range(0.4..0.95);
                random_connected(rng, n, p)
            }
            1 if n >= 3 => {
                let mut edges: Vec<(usize, usize)> = Graph::cycle(n).edges().collect();
                for _ in 0..rng.gen_range(0..n) {
                    let u = rng.gen_range(0..n);
                    let v = (u + 2) % n;
                    if u != v {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            }
            _ => random_unit_interval(rng, n),
        };
        if g.is_connected() && !brute_has_claw(&g) && !brute_has_net(&g) {
            return g;
        }
    }
}

/// Random 3-CNF over `k ≥ 3` variables with `l` clauses.
pub fn random_cnf<R: Rng>(rng: &mut R, k: usize, l: usize) -> CnfFormula {
    let vars: Vec<usize> = (1..=k).collect();
    let clauses = (0..l)
        .map(|_| {
            let picked: Vec<usize> = vars.choose_multiple(rng, 3).copied().collect();
            [0, 1, 2].map(|i| Literal::new(picked[i], rng.gen_bool(0.5)))
        })
        .collect();
    CnfFormula::new(k, clauses).unwrap()
}

/// All eight sign patterns over `vars`: unsatisfiable.
pub fn sign_cube(vars: [usize; 3]) -> Vec<[Literal; 3]> {
    (0..8)
        .map(|b| [0, 1, 2].map(|i| Literal::new(vars[i], b >> i & 1 == 1)))
        .collect()
}

// ---------- large instances for scaling ----------

/// Split graph with a clique of about `sqrt(n)` vertices and the rest each
/// adjacent to two clique vertices; `O(n)` edges.
pub fn large_split<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let c = (n as f64).sqrt() as usize;
    let mut edges = Vec::with_capacity(c * c / 2 + 2 * n);
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    // each independent vertex picks clique partners near its own position,
    // so neighborhoods stay local in memory
    for v in c..n {
        let centre = (v - c) * c / (n - c).max(1);
        let lo = centre.saturating_sub(4);
        let hi = (centre + 4).min(c - 1);
        let a = rng.gen_range(lo..=hi);
        let b = rng.gen_range(lo..=hi);
        edges.push((a, v));
        if a != b {
            edges.push((b, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Chordal graph where each new vertex joins one of the 32 preceding
/// vertices and up to two of that vertex's earlier clique partners; `O(n)`
/// edges with neighborhoods close in id.
pub fn large_chordal<R: Rng>(rng: &mut R, n: usize) -> Graph {
    // parents[v] = the clique v was attached to (at most 3 vertices)
    let mut parents: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::with_capacity(3 * n);
    for v in 1..n {
        let u = rng.gen_range(v.saturating_sub(32)..v);
        let mut clique = vec![u];
        for &p in &parents[u] {
            if clique.len() < 3 && rng.gen_bool(0.5) {
                clique.push(p);
            }
        }
        for &c in &clique {
            edges.push((c, v));
        }
        parents[v] = clique;
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Unit interval graph on a line of points with small, constant degree.
pub fn large_unit_interval<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut pos: Vec<i64> = Vec::with_capacity(n);
    let mut x = 0i64;
    for _ in 0..n {
        pos.push(x);
        x += rng.gen_range(0..=2);
    }
    let width = 3;
    let mut edges = Vec::with_capacity(4 * n);
    for u in 0..n {
        for v in u + 1..n {
            if pos[v] - pos[u] > width {
                break;
            }
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

// ---------- brute-force oracles ----------

pub fn bfs_connected_without(g: &Graph, removed: &[bool]) -> usize {
    let n = g.vertex_count();
    let mut seen = removed.to_vec();
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    components
}

pub fn brute_simplicial(g: &Graph, t: usize) -> bool {
    let nb = g.neighbors(t);
    nb.iter()
        .all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
}

/// Whether `G − N[t]` is connected (an empty remainder counts as connected).
pub fn brute_remainder_connected(g: &Graph, t: usize) -> bool {
    let mut removed = vec![false; g.vertex_count()];
    removed[t] = true;
    for &w in g.neighbors(t) {
        removed[w] = true;
    }
    bfs_connected_without(g, &removed) <= 1
}

pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    (0..n)
        .filter(|&v| {
            let mut removed = vec![false; n];
            removed[v] = true;
            bfs_connected_without(g, &removed) > 1
        })
        .collect()
}

/// Hamiltonian path by subset dynamic programming.
pub fn ham_path_dp(g: &Graph, vertices: &[usize]) -> bool {
    let k = vertices.len();
    if k <= 1 {
        return true;
    }
    let full = (1u32 << k) - 1;
    // reach[mask] = bitmask of end positions of paths covering mask
    let mut reach = vec![0u32; 1 << k];
    for i in 0..k {
        reach[1 << i] = 1 << i;
    }
    for mask in 1..=full {
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        for i in 0..k {
            if ends >> i & 1 == 0 {
                continue;
            }
            for j in 0..k {
                if mask >> j & 1 == 0 && g.has_edge(vertices[i], vertices[j]) {
                    reach[(mask | 1 << j) as usize] |= 1 << j;
                }
            }
        }
    }
    reach[full as usize] != 0
}

fn mask_vertices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn is_clique_mask(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

fn is_independent(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

/// Split by trying every partition.
pub fn brute_is_split(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..1u32 << n).any(|mask| {
        let k = mask_vertices(mask, n);
        let i = mask_vertices(!mask & ((1 << n) - 1), n);
        is_clique_mask(g, &k) && is_independent(g, &i)
    })
}

/// Maximal cliques by subset enumeration.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let cliques: Vec<u32> = (1..1u32 << n)
        .filter(|&m| is_clique_mask(g, &mask_vertices(m, n)))
        .collect();
    cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
        .map(|&m| mask_vertices(m, n))
        .collect()
}

/// Minimal separators: sets `S` with at least two full components in `G − S`.
pub fn brute_minimal_separators(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for mask in 0..(1u32 << n) - 1 {
        let s = mask_vertices(mask, n);
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        // label components of G − S
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            if removed[v] || comp[v] != usize::MAX {
                continue;
            }
            comp[v] = count;
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                for &w in g.neighbors(u) {
                    if !removed[w] && comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let full = (0..count)
            .filter(|&c| {
                s.iter()
                    .all(|&x| g.neighbors(x).iter().any(|&w| !removed[w] && comp[w] == c))
            })
            .count();
        if full >= 2 {
            out.push(s);
        }
    }
    out
}

/// Induced cycles of length at least `min_len`, by subset enumeration.
pub fn brute_has_hole(g: &Graph, min_len: usize) -> bool {
    let n = g.vertex_count();
    (0..1u32 << n).any(|mask| {
        let vs = mask_vertices(mask, n);
        if vs.len() < min_len {
            return false;
        }
        let all_deg_two = vs.iter().all(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| mask >> w & 1 == 1)
                .count()
                == 2
        });
        if !all_deg_two {
            return false;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        bfs_connected_without(g, &removed) == 1
    })
}

pub fn brute_weakly_chordal(g: &Graph) -> bool {
    !brute_has_hole(g, 5) && !brute_has_hole(&g.complement(), 5)
}

pub fn brute_has_claw(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|c| {
        let nb = g.neighbors(c);
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                !g.has_edge(a, b)
                    && nb[i + 1 + j + 1..]
                        .iter()
                        .any(|&d| !g.has_edge(a, d) && !g.has_edge(b, d))
            })
        })
    })
}

pub fn brute_has_net(g: &Graph) -> bool {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
                    continue;
                }
                let tri = [a, b, c];
                // pendant p_i adjacent to tri[i] only, pendants pairwise nonadjacent
                let pend = |i: usize| -> Vec<usize> {
                    (0..n)
                        .filter(|&p| {
                            !tri.contains(&p)
                                && tri
                                    .iter()
                                    .enumerate()
                                    .all(|(j, &x)| g.has_edge(p, x) == (i == j))
                        })
                        .collect()
                };
                let (p0, p1, p2) = (pend(0), pend(1), pend(2));
                for &x in &p0 {
                    for &y in &p1 {
                        if g.has_edge(x, y) {
                            continue;
                        }
                        for &z in &p2 {
                            if !g.has_edge(x, z) && !g.has_edge(y, z) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// The 3-point condition: for `u < v < w` in `order`, `uw ∈ E` forces
/// `uv, vw ∈ E`.
pub fn brute_is_unit_interval_order(g: &Graph, order: &[usize]) -> bool {
    let k = order.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let (u, v, w) = (order[i], order[j], order[l]);
                if g.has_edge(u, w) && !(g.has_edge(u, v) && g.has_edge(v, w)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether some unit interval order starts with `t` (equivalently, by
/// reversal, ends with it). Backtracking with true twins kept in id order.
pub fn unit_interval_order_from(g: &Graph, t: usize) -> bool {
    let n = g.vertex_count();
    let closed: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut c = g.neighbors(v).to_vec();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    // smaller twin that must come first (t exempt)
    let blocker: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..v)
                .filter(|&u| u != t && v != t && closed[u] == closed[v])
                .collect()
        })
        .collect();
    let mut order = vec![t];
    let mut used = vec![false; n];
    used[t] = true;
    fn extend(
        g: &Graph,
        order: &mut Vec<usize>,
        used: &mut [bool],
        blocker: &[Vec<usize>],
    ) -> bool {
        let n = g.vertex_count();
        if order.len() == n {
            return true;
        }
        for w in 0..n {
            if used[w] || blocker[w].iter().any(|&b| !used[b]) {
                continue;
            }
            let ok = (0..order.len()).all(|i| {
                let u = order[i];
                !g.has_edge(u, w)
                    || order[i + 1..]
                        .iter()
                        .all(|&v| g.has_edge(u, v) && g.has_edge(v, w))
            });
            if !ok {
                continue;
            }
            used[w] = true;
            order.push(w);
            if extend(g, order, used, blocker) {
                return true;
            }
            order.pop();
            used[w] = false;
        }
        false
    }
    extend(g, &mut order, &mut used, &blocker)
}
