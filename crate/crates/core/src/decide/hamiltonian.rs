use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::recognize_interval;

/// True iff `path` visits every vertex of `g` once, consecutive vertices
/// adjacent.
pub fn is_hamiltonian_path(g: &Graph, path: &[usize]) -> bool {
    let n = g.vertex_count();
    if path.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Greedy hamiltonian path on an interval graph given each vertex's span
/// `(first, last)` of clique indices in a consecutive clique order.
///
/// Starts at the interval ending first and always moves to the unvisited
/// neighbor ending first; among equal ends the one starting later (the
/// shorter interval, whose neighbors are a subset) goes first. Any failure
/// to cover all vertices means no hamiltonian path exists.
pub(crate) fn hamiltonian_path_from_spans(
    g: &Graph,
    spans: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    let key = |v: usize| (spans[v].1, std::cmp::Reverse(spans[v].0), v);
    let mut visited = vec![false; n];
    let mut current = (0..n).min_by_key(|&v| key(v))?;
    let mut path = Vec::with_capacity(n);
    loop {
        visited[current] = true;
        path.push(current);
        if path.len() == n {
            return Some(path);
        }
        current = g
            .neighbors(current)
            .iter()
            .copied()
            .filter(|&w| !visited[w])
            .min_by_key(|&w| key(w))?;
    }
}

/// A hamiltonian path of an interval graph, or `None` when it has none.
pub fn hamiltonian_path_interval(g: &Graph) -> Result<Option<Vec<usize>>> {
    if !g.is_connected() {
        return Ok(None);
    }
    let order = recognize_interval(g)?.ok_or(Error::NotInterval)?;
    let spans: Vec<(usize, usize)> = order
        .spans(g.vertex_count())
        .into_iter()
        .map(|s| s.expect("every vertex lies in a maximal clique"))
        .collect();
    let path = hamiltonian_path_from_spans(g, &spans);
    debug_assert!(path.as_ref().is_none_or(|p| is_hamiltonian_path(g, p)));
    Ok(path)
}
