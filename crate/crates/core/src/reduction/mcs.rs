use super::{Assignment, CnfFormula, GadgetArtifact, Literal, Role};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::search::{run_search, SearchKind, TieBreakPolicy};

const S_PRIME: usize = 0;
const S: usize = 1;

/// Vertex ids of the MCS gadget, in layout order: `s′`, `s`, literal
/// endpoints, aux vertices, clause triangles, `t`, then the clique `K`
/// (exclusive members followed by the four connectors).
struct Layout {
    k: usize,
    l: usize,
}

impl Layout {
    fn literal_slot(lit: Literal) -> usize {
        2 * (lit.var - 1) + usize::from(!lit.positive)
    }

    fn endpoint(&self, lit: Literal, index: usize) -> usize {
        2 + 2 * Self::literal_slot(lit) + index
    }

    fn aux_base(&self) -> usize {
        2 + 4 * self.k
    }

    /// Aux vertex `index` joining `a` (variable `i`) and `b` (variable `i+1`).
    fn aux(&self, a: Literal, b: Literal, index: usize) -> usize {
        let gadget = 4 * (a.var - 1) + 2 * usize::from(!a.positive) + usize::from(!b.positive);
        self.aux_base() + 2 * gadget + index
    }

    fn clause_base(&self) -> usize {
        self.aux_base() + 8 * (self.k - 1)
    }

    fn triangle(&self, clause: usize, slot: usize) -> usize {
        self.clause_base() + 3 * (clause - 1) + slot
    }

    fn t(&self) -> usize {
        self.clause_base() + 3 * self.l
    }

    /// Endpoints and aux vertices, which each own three members of `K`.
    fn owners(&self) -> std::ops::Range<usize> {
        2..self.clause_base()
    }

    fn k_member(&self, owner: usize, index: usize) -> usize {
        self.t() + 1 + 3 * (owner - 2) + index
    }

    fn connector(&self, side: Literal, index: usize) -> usize {
        let base = self.t() + 1 + 3 * self.owners().len();
        base + 2 * usize::from(!side.positive) + index
    }

    fn vertex_count(&self) -> usize {
        self.t() + 1 + 3 * self.owners().len() + 4
    }
}

fn both(var: usize) -> [Literal; 2] {
    [Literal::new(var, true), Literal::new(var, false)]
}

/// Builds the MCS instance. Needs at least two variables and one clause.
pub fn build_mcs_gadget(cnf: &CnfFormula) -> Result<GadgetArtifact> {
    let k = cnf.variable_count();
    let l = cnf.clause_count();
    if k < 2 {
        return Err(Error::InvalidFormula(
            "the MCS construction needs at least two variables".into(),
        ));
    }
    if l == 0 {
        return Err(Error::InvalidFormula(
            "the MCS construction needs at least one clause".into(),
        ));
    }
    let lay = Layout { k, l };
    let n = lay.vertex_count();
    let mut roles = vec![Role::T; n];
    let mut edges = Vec::new();

    roles[S_PRIME] = Role::SPrime;
    roles[S] = Role::S;
    edges.push((S_PRIME, S));

    for var in 1..=k {
        for lit in both(var) {
            let (e0, e1) = (lay.endpoint(lit, 0), lay.endpoint(lit, 1));
            edges.push((e0, e1));
            for (index, e) in [e0, e1].into_iter().enumerate() {
                roles[e] = Role::LiteralEndpoint {
                    literal: lit,
                    index,
                    designated: index == 0,
                };
                if var == 1 {
                    edges.push((S, e));
                }
            }
        }
    }

    for var in 1..k {
        for a in both(var) {
            for b in both(var + 1) {
                let (a0, a1) = (lay.aux(a, b, 0), lay.aux(a, b, 1));
                edges.push((a0, a1));
                for (index, x) in [a0, a1].into_iter().enumerate() {
                    roles[x] = Role::Aux {
                        pair: (a, b),
                        index,
                    };
                    for lit in [a, b] {
                        edges.push((x, lay.endpoint(lit, 0)));
                        edges.push((x, lay.endpoint(lit, 1)));
                    }
                }
            }
        }
    }

    let clause_vertices: Vec<usize> = (lay.clause_base()..lay.t()).collect();
    for (i, &u) in clause_vertices.iter().enumerate() {
        for &v in &clause_vertices[i + 1..] {
            edges.push((u, v));
        }
        edges.push((u, lay.t()));
    }
    for (j, lits) in cnf.clauses().iter().enumerate() {
        for slot in 0..3 {
            let c = lay.triangle(j + 1, slot);
            roles[c] = Role::ClauseTriangle {
                clause: j + 1,
                slot,
            };
            for lit in lits {
                edges.push((c, lay.endpoint(lit.negated(), 0)));
            }
        }
    }

    let clique: Vec<usize> = (lay.t() + 1..n).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            edges.push((u, v));
        }
    }
    for owner in lay.owners() {
        for index in 0..3 {
            let m = lay.k_member(owner, index);
            roles[m] = Role::KMember { owner };
            edges.push((owner, m));
        }
    }
    for side in both(k) {
        for index in 0..2 {
            let c = lay.connector(side, index);
            roles[c] = Role::Connector { side, index };
            edges.push((c, lay.endpoint(side, 0)));
            edges.push((c, lay.endpoint(side, 1)));
        }
    }

    Ok(GadgetArtifact {
        graph: Graph::from_edges(n, edges)?,
        target: lay.t(),
        roles,
    })
}

/// The MCS order ending at `t` for a satisfying assignment: `s′`, `s`, the
/// chosen literal edges chained through their aux pairs, the connectors of
/// the last chosen literal, all of `K`, everything else except the clause
/// vertices, the clause vertices, then `t`.
///
/// The order is generated by MCS itself with ties broken by that
/// preference, so it is valid by construction; reaching `t` last is checked.
pub fn witness_order_mcs(cnf: &CnfFormula, assignment: &Assignment) -> Result<VertexOrdering> {
    cnf.check_satisfying(assignment)?;
    let k = cnf.variable_count();
    let artifact = build_mcs_gadget(cnf)?;
    let lay = Layout {
        k,
        l: cnf.clause_count(),
    };
    let chosen: Vec<Literal> = (1..=k).map(|i| assignment.chosen_literal(i)).collect();

    let mut preference = vec![S_PRIME, S];
    for (i, &lit) in chosen.iter().enumerate() {
        if i > 0 {
            preference.push(lay.aux(chosen[i - 1], lit, 0));
            preference.push(lay.aux(chosen[i - 1], lit, 1));
        }
        preference.push(lay.endpoint(lit, 0));
        preference.push(lay.endpoint(lit, 1));
    }
    let last = chosen[k - 1];
    preference.extend([lay.connector(last, 0), lay.connector(last, 1)]);
    preference.extend(lay.t() + 1..lay.vertex_count());
    preference.extend(lay.owners());
    preference.extend(lay.clause_base()..=lay.t());

    let order = run_search(
        SearchKind::Mcs,
        &artifact.graph,
        Some(S_PRIME),
        &TieBreakPolicy::Fixed(preference),
    )?;
    if order.last() != Some(artifact.target) {
        return Err(Error::Witness(format!(
            "MCS run ended at {:?} instead of t",
            order.last()
        )));
    }
    Ok(order)
}
