//! The graph searches as eligibility rules over search prefixes.
//!
//! Every search is described by one function, [`eligible_set`], which returns
//! the vertices the search may visit next given what it has visited so far.
//! [`run_search`] drives that rule with a tie-breaking policy and
//! [`validate_order`] replays an ordering against it.
//!
//! The per-vertex label kept by [`SearchPrefix`] is the ascending list of
//! positions of already visited neighbors. That one representation carries
//! every search's label: its length is the MCS count, its first entry decides
//! BFS, its element set is the MNS label, and the lexicographic labels of
//! LBFS and LDFS are first-difference scans over it from the front and from
//! the back respectively.

pub mod lbfs;
pub(crate) mod mcs;
pub mod peo;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering, VertexSet};

pub use peo::{peo_check, peo_violation, PeoViolation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SearchKind {
    Generic,
    Bfs,
    Dfs,
    Lbfs,
    Ldfs,
    Mcs,
    Mns,
}

impl SearchKind {
    pub const ALL: [SearchKind; 7] = [
        SearchKind::Generic,
        SearchKind::Bfs,
        SearchKind::Dfs,
        SearchKind::Lbfs,
        SearchKind::Ldfs,
        SearchKind::Mcs,
        SearchKind::Mns,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Generic => "generic",
            SearchKind::Bfs => "bfs",
            SearchKind::Dfs => "dfs",
            SearchKind::Lbfs => "lbfs",
            SearchKind::Ldfs => "ldfs",
            SearchKind::Mcs => "mcs",
            SearchKind::Mns => "mns",
        }
    }

    /// Whether the eligible set depends only on the set of visited vertices
    /// and not on the order they were visited in.
    pub fn depends_on_visited_set_only(self) -> bool {
        matches!(self, SearchKind::Mcs | SearchKind::Mns)
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SearchKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown search kind `{s}`"))
    }
}

/// How [`run_search`] picks among several eligible vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TieBreakPolicy {
    LowestId,
    HighestId,
    SeededRandom(u64),
    /// Prefer the eligible vertex that comes first in this sequence; vertices
    /// missing from it rank after all listed ones, by id.
    Fixed(Vec<usize>),
}

struct Chooser {
    policy: TieBreakPolicy,
    rng: Option<ChaCha8Rng>,
    rank: Vec<usize>,
}

impl Chooser {
    fn new(policy: &TieBreakPolicy, vertex_count: usize) -> Self {
        let rng = match policy {
            TieBreakPolicy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
            _ => None,
        };
        let rank = match policy {
            TieBreakPolicy::Fixed(pref) => {
                let mut rank: Vec<usize> = (0..vertex_count).map(|v| vertex_count + v).collect();
                for (i, &v) in pref.iter().enumerate() {
                    if v < vertex_count && rank[v] >= vertex_count {
                        rank[v] = i;
                    }
                }
                rank
            }
            _ => Vec::new(),
        };
        Chooser {
            policy: policy.clone(),
            rng,
            rank,
        }
    }

    fn pick(&mut self, candidates: &[usize]) -> usize {
        debug_assert!(!candidates.is_empty());
        match self.policy {
            TieBreakPolicy::LowestId => *candidates.iter().min().expect("nonempty"),
            TieBreakPolicy::HighestId => *candidates.iter().max().expect("nonempty"),
            TieBreakPolicy::SeededRandom(_) => {
                let rng = self.rng.as_mut().expect("seeded");
                candidates[rng.gen_range(0..candidates.len())]
            }
            TieBreakPolicy::Fixed(_) => *candidates
                .iter()
                .min_by_key(|&&v| self.rank[v])
                .expect("nonempty"),
        }
    }
}

/// A partial search: the vertices visited so far and their labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchPrefix {
    start: Option<usize>,
    order: Vec<usize>,
    position: Vec<usize>,
    labels: Vec<Vec<usize>>,
}

const UNVISITED: usize = usize::MAX;

impl SearchPrefix {
    /// An empty prefix. With `start`, the first step may only visit `start`.
    pub fn new(g: &Graph, start: Option<usize>) -> Result<Self> {
        if let Some(s) = start {
            g.check_vertex(s)?;
        }
        let n = g.vertex_count();
        Ok(SearchPrefix {
            start,
            order: Vec::with_capacity(n),
            position: vec![UNVISITED; n],
            labels: vec![Vec::new(); n],
        })
    }

    /// Replays `order` as a prefix without checking that any step was eligible.
    pub fn from_order(g: &Graph, start: Option<usize>, order: &[usize]) -> Result<Self> {
        let mut prefix = Self::new(g, start)?;
        for &v in order {
            g.check_vertex(v)?;
            if prefix.is_visited(v) {
                return Err(Error::NotPermutation {
                    expected: g.vertex_count(),
                    reason: format!("vertex {v} repeated"),
                });
            }
            prefix.push(g, v);
        }
        Ok(prefix)
    }

    pub fn start(&self) -> Option<usize> {
        self.start
    }

    pub fn vertex_count(&self) -> usize {
        self.position.len()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.order.len() == self.position.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_visited(&self, v: usize) -> bool {
        self.position[v] != UNVISITED
    }

    /// Ascending 0-based positions of the visited neighbors of `v`.
    pub fn label(&self, v: usize) -> &[usize] {
        &self.labels[v]
    }

    pub fn visited_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.vertex_count(), self.order.iter().copied())
    }

    /// Visits `v`. Panics if `v` is already visited.
    pub fn push(&mut self, g: &Graph, v: usize) {
        assert!(!self.is_visited(v), "vertex {v} already visited");
        let i = self.order.len();
        self.position[v] = i;
        self.order.push(v);
        for &w in g.neighbors(v) {
            if !self.is_visited(w) {
                self.labels[w].push(i);
            }
        }
    }

    /// Undoes the last [`SearchPrefix::push`].
    pub fn pop(&mut self, g: &Graph) -> Option<usize> {
        let v = self.order.pop()?;
        let i = self.order.len();
        self.position[v] = UNVISITED;
        for &w in g.neighbors(v) {
            if !self.is_visited(w) {
                let popped = self.labels[w].pop();
                debug_assert_eq!(popped, Some(i));
            }
        }
        Some(v)
    }
}

/// `Greater` when label `a` beats label `b` under LBFS: at the earliest
/// position where exactly one of them has a visited neighbor, that one wins.
fn lbfs_cmp(a: &[usize], b: &[usize]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    a.len().cmp(&b.len())
}

/// As [`lbfs_cmp`] but deciding at the latest differing position.
fn ldfs_cmp(a: &[usize], b: &[usize]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// `a ⊊ b` for ascending slices.
fn proper_subset(a: &[usize], b: &[usize]) -> bool {
    if a.len() >= b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn maxima_by(
    candidates: impl Iterator<Item = usize>,
    prefix: &SearchPrefix,
    cmp: fn(&[usize], &[usize]) -> Ordering,
) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for v in candidates {
        match best.first() {
            None => best.push(v),
            Some(&b) => match cmp(prefix.label(v), prefix.label(b)) {
                Ordering::Greater => {
                    best.clear();
                    best.push(v);
                }
                Ordering::Equal => best.push(v),
                Ordering::Less => {}
            },
        }
    }
    best
}

/// Vertices a search of kind `kind` may visit next; ascending by id.
pub(crate) fn eligible_vertices(kind: SearchKind, g: &Graph, prefix: &SearchPrefix) -> Vec<usize> {
    let n = g.vertex_count();
    if prefix.is_complete() {
        return Vec::new();
    }
    if prefix.is_empty() {
        return match prefix.start {
            Some(s) => vec![s],
            None => (0..n).collect(),
        };
    }
    let unvisited = || (0..n).filter(|&v| !prefix.is_visited(v));
    let reached = || unvisited().filter(|&v| !prefix.label(v).is_empty());
    match kind {
        SearchKind::Generic => reached().collect(),
        SearchKind::Bfs => {
            let earliest = reached().map(|v| prefix.label(v)[0]).min();
            match earliest {
                Some(p) => reached().filter(|&v| prefix.label(v)[0] == p).collect(),
                None => Vec::new(),
            }
        }
        SearchKind::Dfs => {
            for &u in prefix.order().iter().rev() {
                let open: Vec<usize> = g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&w| !prefix.is_visited(w))
                    .collect();
                if !open.is_empty() {
                    return open;
                }
            }
            Vec::new()
        }
        SearchKind::Lbfs => maxima_by(reached(), prefix, lbfs_cmp),
        SearchKind::Ldfs => maxima_by(reached(), prefix, ldfs_cmp),
        SearchKind::Mcs => {
            let best = reached().map(|v| prefix.label(v).len()).max();
            match best {
                Some(c) => reached().filter(|&v| prefix.label(v).len() == c).collect(),
                None => Vec::new(),
            }
        }
        SearchKind::Mns => {
            let pool: Vec<usize> = reached().collect();
            pool.iter()
                .copied()
                .filter(|&v| {
                    !pool
                        .iter()
                        .any(|&w| proper_subset(prefix.label(v), prefix.label(w)))
                })
                .collect()
        }
    }
}

/// Exactly the vertices a valid `kind` search may visit after `prefix`.
///
/// An empty prefix admits only its designated start, or every vertex when it
/// has none. On a disconnected graph the set can become empty once a
/// component is exhausted.
pub fn eligible_set(kind: SearchKind, g: &Graph, prefix: &SearchPrefix) -> Result<VertexSet> {
    if prefix.vertex_count() != g.vertex_count() {
        return Err(Error::InconsistentPrefix);
    }
    Ok(VertexSet::from_vertices(
        g.vertex_count(),
        eligible_vertices(kind, g, prefix),
    ))
}

/// Runs a full `kind` search, resolving every choice with `policy`.
pub fn run_search(
    kind: SearchKind,
    g: &Graph,
    start: Option<usize>,
    policy: &TieBreakPolicy,
) -> Result<VertexOrdering> {
    if let Some(s) = start {
        g.check_vertex(s)?;
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut chooser = Chooser::new(policy, n);
    if n == 0 {
        return Ok(VertexOrdering::identity(0));
    }
    let order = if kind == SearchKind::Mcs {
        let mut buckets = mcs::McsBuckets::new(n);
        let mut order = Vec::with_capacity(n);
        let first = match start {
            Some(s) => s,
            None => chooser.pick(buckets.top_bucket()),
        };
        order.push(first);
        buckets.visit(g, first);
        while order.len() < n {
            let v = chooser.pick(buckets.top_bucket());
            order.push(v);
            buckets.visit(g, v);
        }
        order
    } else {
        let mut prefix = SearchPrefix::new(g, start)?;
        while !prefix.is_complete() {
            let eligible = eligible_vertices(kind, g, &prefix);
            let v = chooser.pick(&eligible);
            prefix.push(g, v);
        }
        prefix.order
    };
    VertexOrdering::new(n, order)
}

/// The first step at which an ordering leaves the eligible set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderViolation {
    /// 1-based position of the offending step.
    pub position: usize,
    pub vertex: usize,
    /// What the search could have visited instead.
    pub eligible: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Valid,
    Invalid(OrderViolation),
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }

    pub fn violation(&self) -> Option<&OrderViolation> {
        match self {
            Validation::Valid => None,
            Validation::Invalid(v) => Some(v),
        }
    }
}

/// Replays `order` step by step against the eligibility rule of `kind`.
pub fn validate_order(kind: SearchKind, g: &Graph, order: &VertexOrdering) -> Result<Validation> {
    if order.len() != g.vertex_count() {
        return Err(Error::NotPermutation {
            expected: g.vertex_count(),
            reason: format!("length {} differs", order.len()),
        });
    }
    let mut prefix = SearchPrefix::new(g, None)?;
    for (i, &v) in order.as_slice().iter().enumerate() {
        let eligible = eligible_vertices(kind, g, &prefix);
        if eligible.binary_search(&v).is_err() {
            return Ok(Validation::Invalid(OrderViolation {
                position: i + 1,
                vertex: v,
                eligible,
            }));
        }
        prefix.push(g, v);
    }
    Ok(Validation::Valid)
}
