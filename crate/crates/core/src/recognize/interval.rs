use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{clique_tree, Graph, VertexSet};

/// A linear arrangement of the maximal cliques in which the cliques
/// containing any one vertex are consecutive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOrder {
    /// Each clique sorted ascending.
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueOrder {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn reversed(&self) -> CliqueOrder {
        CliqueOrder {
            cliques: self.cliques.iter().rev().cloned().collect(),
        }
    }

    /// First and last clique index of each vertex, or `None` for vertices in
    /// no clique.
    pub fn spans(&self, vertex_count: usize) -> Vec<Option<(usize, usize)>> {
        let mut spans: Vec<Option<(usize, usize)>> = vec![None; vertex_count];
        for (i, c) in self.cliques.iter().enumerate() {
            for &v in c {
                let s = spans[v].get_or_insert((i, i));
                s.1 = i;
            }
        }
        spans
    }

    /// True iff every vertex's cliques form one consecutive run.
    pub fn is_consecutive(&self, vertex_count: usize) -> bool {
        let mut count = vec![0usize; vertex_count];
        for c in &self.cliques {
            for &v in c {
                if v >= vertex_count {
                    return false;
                }
                count[v] += 1;
            }
        }
        self.spans(vertex_count)
            .iter()
            .zip(&count)
            .all(|(span, &k)| span.map_or(k == 0, |(a, b)| b - a + 1 == k))
    }

    /// Checks the certificate: the cliques are exactly the maximal cliques
    /// of `g`, each once, and the arrangement is consecutive.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let Ok(tree) = clique_tree(g) else {
            return false;
        };
        let mut ours: Vec<Vec<usize>> = self.cliques.clone();
        let mut theirs = tree.cliques;
        for c in &mut ours {
            c.sort_unstable();
        }
        ours.sort();
        theirs.sort();
        ours == theirs && self.is_consecutive(g.vertex_count())
    }
}

struct ArrangementSearch<'a> {
    cliques: &'a [Vec<usize>],
    used: VertexSet,
    placed: Vec<usize>,
    remaining: Vec<usize>,
    seen: Vec<bool>,
    in_next: Vec<usize>,
    in_last: Vec<usize>,
    epoch: usize,
    dead: HashSet<(VertexSet, usize)>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

impl ArrangementSearch<'_> {
    fn fits(&mut self, next: usize) -> bool {
        let Some(&last) = self.placed.last() else {
            return true;
        };
        self.epoch += 1;
        let epoch = self.epoch;
        for &v in &self.cliques[next] {
            self.in_next[v] = epoch;
        }
        for &v in &self.cliques[last] {
            self.in_last[v] = epoch;
        }
        let keeps_open = self.cliques[last]
            .iter()
            .all(|&x| self.remaining[x] == 0 || self.in_next[x] == epoch);
        let reopens = self.cliques[next]
            .iter()
            .any(|&x| self.seen[x] && self.in_last[x] != epoch);
        keeps_open && !reopens
    }

    /// Returns whether any completion was found below this state.
    fn extend(&mut self) -> bool {
        if self.found.len() >= self.limit {
            return true;
        }
        if self.placed.len() == self.cliques.len() {
            self.found.push(self.placed.clone());
            return true;
        }
        let key = (
            self.used.clone(),
            self.placed.last().copied().unwrap_or(usize::MAX),
        );
        if self.dead.contains(&key) {
            return false;
        }
        let mut any = false;
        for next in 0..self.cliques.len() {
            if self.used.contains(next) || !self.fits(next) {
                continue;
            }
            let mut newly_seen = Vec::new();
            for &v in &self.cliques[next] {
                self.remaining[v] -= 1;
                if !self.seen[v] {
                    self.seen[v] = true;
                    newly_seen.push(v);
                }
            }
            self.used.insert(next);
            self.placed.push(next);
            any |= self.extend();
            self.placed.pop();
            self.used.remove(next);
            for &v in &self.cliques[next] {
                self.remaining[v] += 1;
            }
            for v in newly_seen {
                self.seen[v] = false;
            }
            if self.found.len() >= self.limit {
                return true;
            }
        }
        if !any {
            self.dead.insert(key);
        }
        any
    }
}

fn arrangements(g: &Graph, limit: usize) -> Result<Option<Vec<CliqueOrder>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tree = match clique_tree(g) {
        Ok(t) => t,
        Err(Error::NotChordal) => return Ok(None),
        Err(e) => return Err(e),
    };
    let n = g.vertex_count();
    let cliques = tree.cliques;
    let mut remaining = vec![0usize; n];
    for c in &cliques {
        for &v in c {
            remaining[v] += 1;
        }
    }
    let mut search = ArrangementSearch {
        cliques: &cliques,
        used: VertexSet::new(cliques.len()),
        placed: Vec::new(),
        remaining,
        seen: vec![false; n],
        in_next: vec![0; n],
        in_last: vec![0; n],
        epoch: 0,
        dead: HashSet::new(),
        found: Vec::new(),
        limit,
    };
    search.extend();
    Ok(Some(
        search
            .found
            .into_iter()
            .map(|idx| CliqueOrder {
                cliques: idx.into_iter().map(|i| cliques[i].clone()).collect(),
            })
            .collect(),
    ))
}

/// A consecutive arrangement of the maximal cliques, or `None` when `g` is
/// not an interval graph.
///
/// The cliques come from the clique tree; the arrangement is found by
/// backtracking that only appends a clique containing every still-open
/// vertex of the previous one and no already-closed vertex, memoizing dead
/// states by (placed cliques, last clique).
pub fn recognize_interval(g: &Graph) -> Result<Option<CliqueOrder>> {
    Ok(arrangements(g, 1)?.and_then(|mut v| v.pop()))
}

/// Up to `limit` distinct consecutive clique arrangements (reversals count
/// separately). Empty when `g` is chordal but not interval; `None` when it
/// is not chordal.
pub fn all_clique_orders(g: &Graph, limit: usize) -> Result<Option<Vec<CliqueOrder>>> {
    arrangements(g, limit)
}
