use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::CliqueOrder;

/// Outcome of the one-sided interval MCS test; `Unknown` is not a no.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sufficiency {
    Yes,
    Unknown,
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                k += 1;
                i += 1;
                j += 1;
            }
        }
    }
    k
}

/// The condition for clique `i` read left to right.
fn holds_forward(cliques: &[Vec<usize>], i: usize) -> bool {
    let k = cliques.len();
    if i == 0 || i + 1 == k {
        return true;
    }
    let (prev, cur, next) = (&cliques[i - 1], &cliques[i], &cliques[i + 1]);
    let left_in_right = prev
        .iter()
        .filter(|v| cur.binary_search(v).is_ok())
        .all(|v| next.binary_search(v).is_ok());
    let here = intersection_size(cur, next);
    left_in_right && (i + 1..k - 1).all(|j| here <= intersection_size(&cliques[j], &cliques[j + 1]))
}

/// Sufficient condition for `t` being an MCS end-vertex of an interval graph,
/// relative to the clique order `order`: `t` is simplicial, and for the
/// unique clique `C_i` holding it, `i` is an end of the order or
/// `C_{i−1} ∩ C_i ⊆ C_i ∩ C_{i+1}` with `|C_i ∩ C_{i+1}|` no larger than any
/// later consecutive intersection. The order and its reverse are both tried.
pub fn mcs_interval_sufficient(g: &Graph, order: &CliqueOrder, t: usize) -> Result<Sufficiency> {
    g.check_vertex(t)?;
    if !order.is_valid_for(g) {
        return Err(Error::InvalidCliqueOrder(
            "not a consecutive arrangement of the maximal cliques".into(),
        ));
    }
    if !g.is_simplicial(t)? {
        return Ok(Sufficiency::Unknown);
    }
    let mut cliques = order.cliques.clone();
    for c in &mut cliques {
        c.sort_unstable();
    }
    let i = cliques
        .iter()
        .position(|c| c.binary_search(&t).is_ok())
        .expect("a simplicial vertex lies in one maximal clique");
    let k = cliques.len();
    let forward = holds_forward(&cliques, i);
    cliques.reverse();
    let backward = holds_forward(&cliques, k - 1 - i);
    Ok(if forward || backward {
        Sufficiency::Yes
    } else {
        Sufficiency::Unknown
    })
}
