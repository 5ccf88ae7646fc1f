use super::{Assignment, CnfFormula, GadgetArtifact, Literal, Role};
use crate::error::Result;
use crate::graph::{Graph, VertexOrdering};

fn literal_vertex(l: Literal) -> usize {
    2 * (l.var - 1) + usize::from(!l.positive)
}

/// Builds the MNS instance: literal vertices `x_i = 2(i−1)`, `x̄_i = 2i−1`,
/// then the clause vertices, then `s`, `b`, `t`.
pub fn build_mns_gadget(cnf: &CnfFormula) -> Result<GadgetArtifact> {
    let k = cnf.variable_count();
    let l = cnf.clause_count();
    let clause = |j: usize| 2 * k + j;
    let (s, b, t) = (2 * k + l, 2 * k + l + 1, 2 * k + l + 2);
    let n = 2 * k + l + 3;

    let mut edges = Vec::new();
    for u in 0..2 * k {
        for v in u + 1..2 * k {
            if u / 2 != v / 2 {
                edges.push((u, v));
            }
        }
        edges.extend([(b, u), (s, u), (t, u)]);
    }
    for (j, lits) in cnf.clauses().iter().enumerate() {
        let mine = lits.map(literal_vertex);
        for x in (0..2 * k).filter(|x| !mine.contains(x)) {
            edges.push((clause(j), x));
        }
        edges.extend([(s, clause(j)), (t, clause(j))]);
    }
    edges.push((b, t));

    let mut roles = Vec::with_capacity(n);
    for i in 1..=k {
        roles.push(Role::Literal(Literal::new(i, true)));
        roles.push(Role::Literal(Literal::new(i, false)));
    }
    roles.extend((1..=l).map(Role::Clause));
    roles.extend([Role::S, Role::B, Role::T]);

    Ok(GadgetArtifact {
        graph: Graph::from_edges(n, edges)?,
        target: t,
        roles,
    })
}

/// The MNS order ending at `t` for a satisfying assignment: `s`, the true
/// literals, `b`, the false literals, the clauses, `t`.
pub fn witness_order_mns(cnf: &CnfFormula, assignment: &Assignment) -> Result<VertexOrdering> {
    cnf.check_satisfying(assignment)?;
    let k = cnf.variable_count();
    let l = cnf.clause_count();
    let (s, b, t) = (2 * k + l, 2 * k + l + 1, 2 * k + l + 2);
    let mut order = vec![s];
    order.extend((1..=k).map(|i| literal_vertex(assignment.chosen_literal(i))));
    order.push(b);
    order.extend((1..=k).map(|i| literal_vertex(assignment.chosen_literal(i).negated())));
    order.extend(2 * k..2 * k + l);
    order.push(t);
    VertexOrdering::new(2 * k + l + 3, order)
}
