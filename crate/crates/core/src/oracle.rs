//! Exhaustive end-vertex ground truth for small graphs.
//!
//! MCS and MNS choose their next vertex from the visited set alone, so their
//! searches are explored as paths through visited-set states, each state
//! handled once. The other searches depend on the order of the prefix and
//! are enumerated prefix by prefix.

use std::collections::{HashMap, HashSet};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering, VertexSet};
use crate::search::{eligible_vertices, run_search, SearchKind, SearchPrefix, TieBreakPolicy};

/// Default vertex limit for MCS and MNS.
pub const DEFAULT_SET_GUARD: usize = 18;
/// Default vertex limit for the order-dependent searches.
pub const DEFAULT_ORDER_GUARD: usize = 12;
/// Visited sets are 64-bit masks, whatever the guard.
const MASK_LIMIT: usize = 64;

pub fn default_guard(kind: SearchKind) -> usize {
    if kind.depends_on_visited_set_only() {
        DEFAULT_SET_GUARD
    } else {
        DEFAULT_ORDER_GUARD
    }
}

fn check_input(g: &Graph, start: Option<usize>, guard: usize) -> Result<()> {
    let n = g.vertex_count();
    let limit = guard.min(MASK_LIMIT);
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "exhaustive oracle",
            size: n,
            guard: limit,
        });
    }
    if let Some(s) = start {
        g.check_vertex(s)?;
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

struct MaskSearch {
    kind: SearchKind,
    adj: Vec<u64>,
    full: u64,
    start: Option<usize>,
}

impl MaskSearch {
    fn new(g: &Graph, kind: SearchKind, start: Option<usize>) -> Self {
        debug_assert!(kind.depends_on_visited_set_only());
        let n = g.vertex_count();
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        MaskSearch {
            kind,
            adj,
            full,
            start,
        }
    }

    fn eligible(&self, visited: u64) -> u64 {
        if visited == 0 {
            return self.start.map_or(self.full, |s| 1 << s);
        }
        let mut labels: Vec<(usize, u64)> = Vec::new();
        let mut rest = self.full & !visited;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let label = self.adj[v] & visited;
            if label != 0 {
                labels.push((v, label));
            }
        }
        let mut out = 0u64;
        match self.kind {
            SearchKind::Mcs => {
                let best = labels
                    .iter()
                    .map(|&(_, l)| l.count_ones())
                    .max()
                    .unwrap_or(0);
                for &(v, l) in &labels {
                    if l.count_ones() == best {
                        out |= 1 << v;
                    }
                }
            }
            _ => {
                for &(v, l) in &labels {
                    let dominated = labels.iter().any(|&(_, m)| l & !m == 0 && l != m);
                    if !dominated {
                        out |= 1 << v;
                    }
                }
            }
        }
        out
    }

    /// Whether some completion of `visited` ends at `t`; successful choices
    /// are recorded in `next` for witness reconstruction.
    fn can_end(
        &self,
        visited: u64,
        t: usize,
        memo: &mut HashMap<u64, bool>,
        next: &mut HashMap<u64, usize>,
    ) -> bool {
        let remaining = self.full & !visited;
        if remaining == 1 << t {
            return self.eligible(visited) & (1 << t) != 0;
        }
        if let Some(&known) = memo.get(&visited) {
            return known;
        }
        let mut options = self.eligible(visited) & !(1 << t);
        let mut ok = false;
        while options != 0 {
            let v = options.trailing_zeros() as usize;
            options &= options - 1;
            if self.can_end(visited | 1 << v, t, memo, next) {
                next.insert(visited, v);
                ok = true;
                break;
            }
        }
        memo.insert(visited, ok);
        ok
    }

    /// Every visited set some valid search passes through.
    fn reachable(&self) -> HashSet<u64> {
        let mut seen = HashSet::from([0u64]);
        let mut stack = vec![0u64];
        while let Some(m) = stack.pop() {
            let mut options = self.eligible(m);
            while options != 0 {
                let v = options.trailing_zeros();
                options &= options - 1;
                let child = m | 1 << v;
                if seen.insert(child) {
                    stack.push(child);
                }
            }
        }
        seen
    }
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask & (1 << v) != 0))
}

/// `{t : some valid kind-order, optionally from a fixed start, ends at t}`.
pub fn endvertex_set_exhaustive(
    g: &Graph,
    kind: SearchKind,
    start: Option<usize>,
    guard: usize,
) -> Result<VertexSet> {
    check_input(g, start, guard)?;
    let n = g.vertex_count();
    if kind.depends_on_visited_set_only() {
        let search = MaskSearch::new(g, kind, start);
        let reachable = search.reachable();
        return Ok(VertexSet::from_vertices(
            n,
            (0..n).filter(|&t| reachable.contains(&(search.full & !(1 << t)))),
        ));
    }
    let mut found = VertexSet::new(n);
    for t in 0..n {
        if order_witness(g, kind, t, start).is_some() {
            found.insert(t);
        }
    }
    Ok(found)
}

/// Whether `t` ends some valid kind-order; on success, one such order.
pub fn is_endvertex_exhaustive(
    g: &Graph,
    kind: SearchKind,
    t: usize,
    start: Option<usize>,
    guard: usize,
) -> Result<Option<VertexOrdering>> {
    check_input(g, start, guard)?;
    g.check_vertex(t)?;
    let n = g.vertex_count();
    let order = if kind.depends_on_visited_set_only() {
        let search = MaskSearch::new(g, kind, start);
        let mut memo = HashMap::new();
        let mut next = HashMap::new();
        if !search.can_end(0, t, &mut memo, &mut next) {
            return Ok(None);
        }
        let mut order = Vec::with_capacity(n);
        let mut visited = 0u64;
        while let Some(&v) = next.get(&visited) {
            order.push(v);
            visited |= 1 << v;
        }
        order.push(t);
        order
    } else {
        match order_witness(g, kind, t, start) {
            Some(o) => o,
            None => return Ok(None),
        }
    };
    Ok(Some(VertexOrdering::new(n, order)?))
}

/// Depth-first prefix enumeration that holds `t` back until it is the only
/// vertex left.
fn order_witness(
    g: &Graph,
    kind: SearchKind,
    t: usize,
    start: Option<usize>,
) -> Option<Vec<usize>> {
    fn walk(g: &Graph, kind: SearchKind, t: usize, prefix: &mut SearchPrefix) -> bool {
        let left = prefix.vertex_count() - prefix.len();
        let eligible = eligible_vertices(kind, g, prefix);
        if left == 1 {
            return eligible.contains(&t);
        }
        for v in eligible {
            if v == t {
                continue;
            }
            prefix.push(g, v);
            if walk(g, kind, t, prefix) {
                return true;
            }
            prefix.pop(g);
        }
        false
    }
    let mut prefix = SearchPrefix::new(g, start).ok()?;
    if walk(g, kind, t, &mut prefix) {
        let mut order = prefix.order().to_vec();
        order.push(t);
        Some(order)
    } else {
        None
    }
}

/// Calls `visit` with every complete valid kind-order, by plain prefix
/// enumeration without memoization or pruning.
pub fn for_each_order(
    g: &Graph,
    kind: SearchKind,
    start: Option<usize>,
    guard: usize,
    mut visit: impl FnMut(&[usize]),
) -> Result<()> {
    fn walk(
        g: &Graph,
        kind: SearchKind,
        prefix: &mut SearchPrefix,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if prefix.is_complete() {
            visit(prefix.order());
            return;
        }
        for v in eligible_vertices(kind, g, prefix) {
            prefix.push(g, v);
            walk(g, kind, prefix, visit);
            prefix.pop(g);
        }
    }
    check_input(g, start, guard)?;
    let mut prefix = SearchPrefix::new(g, start)?;
    walk(g, kind, &mut prefix, &mut visit);
    Ok(())
}

/// The end-vertex set by listing every order; a slow cross-check of
/// [`endvertex_set_exhaustive`].
pub fn endvertex_set_by_enumeration(
    g: &Graph,
    kind: SearchKind,
    start: Option<usize>,
    guard: usize,
) -> Result<VertexSet> {
    let mut found = VertexSet::new(g.vertex_count());
    for_each_order(g, kind, start, guard, |order| {
        if let Some(&last) = order.last() {
            found.insert(last);
        }
    })?;
    Ok(found)
}

/// For MCS or MNS: every visited set that occurs as a prefix of some valid
/// order ending at `t`. Properties of all `t`-terminal orders that speak
/// about prefixes can be checked on these sets instead of on the (far more
/// numerous) orders themselves.
pub fn terminal_prefix_sets(
    g: &Graph,
    kind: SearchKind,
    t: usize,
    start: Option<usize>,
    guard: usize,
) -> Result<Vec<VertexSet>> {
    check_input(g, start, guard)?;
    g.check_vertex(t)?;
    if !kind.depends_on_visited_set_only() {
        return Err(Error::UnsupportedKind("visited-set enumeration"));
    }
    let n = g.vertex_count();
    let search = MaskSearch::new(g, kind, start);
    let mut memo = HashMap::new();
    let mut unused = HashMap::new();
    let reachable = search.reachable();
    let mut viable: Vec<u64> = reachable
        .into_iter()
        .filter(|&m| {
            if m & (1 << t) != 0 {
                return m == search.full;
            }
            search.can_end(m, t, &mut memo, &mut unused)
        })
        .collect();
    // the full set only counts when t really can end
    if !viable.iter().any(|&m| m == search.full & !(1 << t)) {
        viable.clear();
    }
    viable.sort_by_key(|m| (m.count_ones(), *m));
    Ok(viable.into_iter().map(|m| mask_to_set(n, m)).collect())
}

/// Number of seeded random `kind` searches (free start) that end at `t`.
/// Trial `i` uses the `i`-th output of a ChaCha stream seeded with `seed`.
pub fn randomized_endvertex_probe(
    g: &Graph,
    kind: SearchKind,
    t: usize,
    trials: usize,
    seed: u64,
) -> Result<usize> {
    g.check_vertex(t)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut seeds = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0;
    for _ in 0..trials {
        let policy = TieBreakPolicy::SeededRandom(seeds.next_u64());
        let order = run_search(kind, g, None, &policy)?;
        if order.last() == Some(t) {
            hits += 1;
        }
    }
    Ok(hits)
}
