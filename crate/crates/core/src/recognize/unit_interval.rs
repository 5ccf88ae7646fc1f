use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::search::lbfs::{lbfs, lbfs_plus};

/// True iff every closed neighborhood occupies a contiguous block of `order`,
/// which is equivalent to: `u ≺ v ≺ w` and `uw ∈ E` imply `uv, vw ∈ E`.
pub fn is_unit_interval_order(g: &Graph, order: &VertexOrdering) -> bool {
    if order.len() != g.vertex_count() {
        return false;
    }
    g.vertices().all(|v| {
        let p = order.position(v);
        let (lo, hi) = g
            .neighbors(v)
            .iter()
            .map(|&w| order.position(w))
            .fold((p, p), |(lo, hi), q| (lo.min(q), hi.max(q)));
        hi - lo == g.degree(v)
    })
}

/// A unit interval order, or `None` when `g` is not a unit interval graph.
///
/// Three LBFS sweeps, the second and third breaking ties toward the vertex
/// latest in the previous sweep; on unit interval graphs the third sweep is
/// a unit interval order, and the certificate is checked either way.
pub fn recognize_unit_interval(g: &Graph) -> Result<Option<VertexOrdering>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() == 0 {
        return Ok(Some(VertexOrdering::identity(0)));
    }
    let first = lbfs(g, 0);
    let second = lbfs_plus(g, &first);
    let third = lbfs_plus(g, &second);
    Ok(is_unit_interval_order(g, &third).then_some(third))
}
