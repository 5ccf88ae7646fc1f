use super::hamiltonian::hamiltonian_path_from_spans;
use super::{Obstruction, Verdict};
use crate::error::{Error, Result};
use crate::graph::{clique_tree, inclusion_chain_violation, Graph, VertexSet};
use crate::recognize::{
    is_claw_net_free, recognize_interval, recognize_split, recognize_unit_interval,
};

fn simplicial_verdict(g: &Graph, t: usize) -> Result<Option<Verdict>> {
    Ok(g.simplicial_obstruction(t)?
        .map(|(u, w)| Verdict::No(Obstruction::NotSimplicial { u, w })))
}

fn require_connected(g: &Graph, t: usize) -> Result<()> {
    g.check_vertex(t)?;
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// MNS end-vertex test on chordal graphs in O(n + m): `t` must be
/// simplicial and the minimal separators inside `N(t)` must form a chain.
pub fn decide_mns_chordal(g: &Graph, t: usize) -> Result<Verdict> {
    require_connected(g, t)?;
    let tree = clique_tree(g)?;
    if let Some(no) = simplicial_verdict(g, t)? {
        return Ok(no);
    }
    let mut in_nbhd = vec![false; g.vertex_count()];
    for &v in g.neighbors(t) {
        in_nbhd[v] = true;
    }
    let inside: Vec<&Vec<usize>> = tree
        .separator
        .iter()
        .skip(1)
        .filter(|s| s.iter().all(|&v| in_nbhd[v]))
        .collect();
    Ok(match inclusion_chain_violation(&inside, g.vertex_count()) {
        None => Verdict::Yes,
        Some((a, b)) => Verdict::No(Obstruction::SeparatorsNotChained {
            first: inside[a].clone(),
            second: inside[b].clone(),
        }),
    })
}

/// MCS end-vertex test on split graphs in O(n + m): `t` must be simplicial
/// and the neighborhoods of all vertices of smaller degree must form a
/// chain, checked by counting sort on degree and one marking array.
pub fn decide_mcs_split(g: &Graph, t: usize) -> Result<Verdict> {
    require_connected(g, t)?;
    if recognize_split(g).is_none() {
        return Err(Error::NotSplit);
    }
    if let Some(no) = simplicial_verdict(g, t)? {
        return Ok(no);
    }
    let dt = g.degree(t);
    let lower: Vec<usize> = g.vertices().filter(|&v| g.degree(v) < dt).collect();
    let nbhds: Vec<&[usize]> = lower.iter().map(|&v| g.neighbors(v)).collect();
    Ok(match inclusion_chain_violation(&nbhds, g.vertex_count()) {
        None => Verdict::Yes,
        Some((a, b)) => Verdict::No(Obstruction::IncomparableNeighborhoods {
            v: lower[a],
            w: lower[b],
        }),
    })
}

/// MNS, MCS and LDFS end-vertex test on unit interval graphs (the three
/// coincide there): `t` simplicial and `G − N[t]` connected or empty.
pub fn decide_unit_interval(g: &Graph, t: usize) -> Result<Verdict> {
    require_connected(g, t)?;
    if recognize_unit_interval(g)?.is_none() {
        return Err(Error::NotUnitInterval);
    }
    decide_simplicial_remainder(g, t)
}

pub(crate) fn decide_simplicial_remainder(g: &Graph, t: usize) -> Result<Verdict> {
    if let Some(no) = simplicial_verdict(g, t)? {
        return Ok(no);
    }
    let mut removed = vec![false; g.vertex_count()];
    removed[t] = true;
    for &v in g.neighbors(t) {
        removed[v] = true;
    }
    let components = g.component_count_without(&removed);
    Ok(if components <= 1 {
        Verdict::Yes
    } else {
        Verdict::No(Obstruction::RemainderDisconnected { components })
    })
}

/// Generic-search end-vertex test, valid on every connected graph: a vertex
/// can be visited last iff removing it leaves the graph connected.
pub fn decide_generic(g: &Graph, t: usize) -> Result<Verdict> {
    require_connected(g, t)?;
    Ok(if g.cut_vertices()?.contains(t) {
        Verdict::No(Obstruction::CutVertex)
    } else {
        Verdict::Yes
    })
}

/// DFS end-vertex test on (claw, net)-free graphs: `t` is not a cut vertex.
/// With `verify`, the class membership is checked first (desk-scale cost).
pub fn decide_dfs_claw_net_free(g: &Graph, t: usize, verify: bool) -> Result<Verdict> {
    require_connected(g, t)?;
    if verify && !is_claw_net_free(g) {
        return Err(Error::NotClawNetFree);
    }
    decide_generic(g, t)
}

/// DFS end-vertex test on interval graphs: `G[N(t)]` has a hamiltonian path.
///
/// The interval model of `G[N(t)]` is read off the clique order of `g`.
pub fn decide_dfs_interval(g: &Graph, t: usize) -> Result<Verdict> {
    require_connected(g, t)?;
    let order = recognize_interval(g)?.ok_or(Error::NotInterval)?;
    let spans = order.spans(g.vertex_count());
    let sub = g.induced_subgraph(&VertexSet::from_vertices(
        g.vertex_count(),
        g.neighbors(t).iter().copied(),
    ));
    let sub_spans: Vec<(usize, usize)> = sub
        .original
        .iter()
        .map(|&v| spans[v].expect("every vertex lies in a maximal clique"))
        .collect();
    Ok(match hamiltonian_path_from_spans(&sub.graph, &sub_spans) {
        Some(_) => Verdict::Yes,
        None => Verdict::No(Obstruction::NoHamiltonianPath),
    })
}
