mod common;

use common::{random_cnf, sign_cube};
use endvertex::reduction::{
    build_mcs_gadget, build_mns_gadget, sat_bruteforce, witness_order_mcs, witness_order_mns,
    Assignment, CnfFormula, GadgetArtifact, Literal, Role,
};
use endvertex::{validate_order, SearchKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn clause_has(cnf: &CnfFormula, j: usize, lit: Literal) -> bool {
    cnf.clauses()[j - 1].contains(&lit)
}

/// Adjacency of the MNS construction, read off the role tags.
fn mns_rule(cnf: &CnfFormula, a: Role, b: Role) -> bool {
    use Role::*;
    match (a, b) {
        (Literal(x), Literal(y)) => x.var != y.var,
        (Literal(x), Clause(j)) | (Clause(j), Literal(x)) => !clause_has(cnf, j, x),
        (Literal(_), B | S | T) | (B | S | T, Literal(_)) => true,
        (Clause(_), S | T) | (S | T, Clause(_)) => true,
        (B, T) | (T, B) => true,
        _ => false,
    }
}

fn is_k(r: Role) -> bool {
    matches!(r, Role::KMember { .. } | Role::Connector { .. })
}

fn literal_of(r: Role) -> Option<Literal> {
    match r {
        Role::LiteralEndpoint { literal, .. } => Some(literal),
        _ => None,
    }
}

/// Adjacency of the MCS construction, read off the role tags; `ids` maps a
/// vertex back to its role for the exclusive-owner rule.
fn mcs_rule(cnf: &CnfFormula, ids: &[Role], u: usize, v: usize) -> bool {
    use Role::*;
    let (a, b) = (ids[u], ids[v]);
    let k = cnf.variable_count();
    let sym = |f: &dyn Fn(Role, Role, usize, usize) -> bool| f(a, b, u, v) || f(b, a, v, u);
    sym(&|a, b, _, y| match (a, b) {
        (SPrime, S) => true,
        (S, LiteralEndpoint { literal, .. }) => literal.var == 1,
        (LiteralEndpoint { literal: x, .. }, LiteralEndpoint { literal: z, .. }) => x == z,
        (Aux { pair, index: i }, Aux { pair: q, index: j }) => pair == q && i != j,
        (Aux { pair, .. }, LiteralEndpoint { literal, .. }) => {
            pair.0 == literal || pair.1 == literal
        }
        (ClauseTriangle { .. }, ClauseTriangle { .. }) => true,
        (ClauseTriangle { .. }, T) => true,
        (
            ClauseTriangle { clause, .. },
            LiteralEndpoint {
                literal,
                designated,
                ..
            },
        ) => designated && clause_has(cnf, clause, literal.negated()),
        (KMember { owner }, _) if !is_k(b) => owner == y,
        (Connector { side, .. }, _) if !is_k(b) => literal_of(b) == Some(side) && side.var == k,
        (x, z) if is_k(x) && is_k(z) => true,
        _ => false,
    })
}

fn check_rules(a: &GadgetArtifact, rule: impl Fn(usize, usize) -> bool) {
    let n = a.graph.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            assert_eq!(
                a.graph.has_edge(u, v),
                rule(u, v),
                "{} – {}",
                a.roles[u],
                a.roles[v]
            );
        }
    }
}

#[test]
fn mns_gadgets_follow_role_rules_and_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let k = rand::Rng::gen_range(&mut rng, 3..7);
        let l = rand::Rng::gen_range(&mut rng, 0..8);
        let cnf = random_cnf(&mut rng, k, l);
        let a = build_mns_gadget(&cnf).unwrap();
        assert_eq!(a.graph.vertex_count(), 2 * k + l + 3);
        let expected_edges = (2 * k) * (2 * k - 1) / 2 - k + l * (2 * k - 3) + 6 * k + 2 * l + 1;
        assert_eq!(a.graph.edge_count(), expected_edges);
        assert_eq!(a.roles[a.target], Role::T);
        check_rules(&a, |u, v| mns_rule(&cnf, a.roles[u], a.roles[v]));
    }
}

#[test]
fn mcs_gadgets_follow_role_rules_and_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..12 {
        let k = rand::Rng::gen_range(&mut rng, 3..6);
        let l = rand::Rng::gen_range(&mut rng, 1..5);
        let cnf = random_cnf(&mut rng, k, l);
        let a = build_mcs_gadget(&cnf).unwrap();
        let n = a.graph.vertex_count();
        assert_eq!(n, 48 * k + 3 * l - 25);
        let owners = 4 * k + 8 * (k - 1);
        let clique = 3 * owners + 4;
        let expected_edges = 1
            + 4
            + 2 * k
            + 4 * (k - 1) * 9
            + (3 * l) * (3 * l - 1) / 2
            + 9 * l
            + 3 * l
            + clique * (clique - 1) / 2
            + 3 * owners
            + 8;
        assert_eq!(a.graph.edge_count(), expected_edges);
        assert_eq!(a.graph.degree(a.target), 3 * l);
        check_rules(&a, |u, v| mcs_rule(&cnf, &a.roles, u, v));
    }
}

#[test]
fn mcs_small_instance_recount_by_role() {
    let cnf = CnfFormula::parse_dimacs("p cnf 3 1\n1 2 3 0\n").unwrap();
    let a = build_mcs_gadget(&cnf).unwrap();
    let count = |p: &dyn Fn(&Role) -> bool| a.filter(p).len();
    assert_eq!(count(&|r| matches!(r, Role::S | Role::SPrime)), 2);
    assert_eq!(count(&|r| matches!(r, Role::LiteralEndpoint { .. })), 12);
    assert_eq!(count(&|r| matches!(r, Role::Aux { .. })), 16);
    assert_eq!(count(&|r| matches!(r, Role::ClauseTriangle { .. })), 3);
    assert_eq!(count(&|r| is_k(*r)), 88);
    assert_eq!(count(&|r| *r == Role::T), 1);
    assert_eq!(a.graph.vertex_count(), 122);
}

#[test]
fn witnesses_validate_for_satisfiable_formulas() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut checked = 0;
    while checked < 15 {
        let k = rand::Rng::gen_range(&mut rng, 3..5);
        let l = rand::Rng::gen_range(&mut rng, 1..6);
        let cnf = random_cnf(&mut rng, k, l);
        let Some(asg) = sat_bruteforce(&cnf, 24).unwrap() else {
            continue;
        };
        checked += 1;

        let mns = build_mns_gadget(&cnf).unwrap();
        let w = witness_order_mns(&cnf, &asg).unwrap();
        assert_eq!(w.last(), Some(mns.target));
        assert!(validate_order(SearchKind::Mns, &mns.graph, &w)
            .unwrap()
            .is_valid());

        let mcs = build_mcs_gadget(&cnf).unwrap();
        let w = witness_order_mcs(&cnf, &asg).unwrap();
        assert_eq!(w.last(), Some(mcs.target));
        assert_eq!(mcs.roles[w.as_slice()[0]], Role::SPrime);
        assert_eq!(mcs.roles[w.as_slice()[1]], Role::S);
        assert!(validate_order(SearchKind::Mcs, &mcs.graph, &w)
            .unwrap()
            .is_valid());
    }
}

#[test]
fn mcs_witness_walks_the_aux_pair_of_the_chosen_literals() {
    let cnf = CnfFormula::parse_dimacs("p cnf 3 1\n-1 2 3 0\n").unwrap();
    let asg = Assignment::new(vec![false, true, false]);
    let a = build_mcs_gadget(&cnf).unwrap();
    let w = witness_order_mcs(&cnf, &asg).unwrap();
    let roles: Vec<Role> = w.as_slice().iter().map(|&v| a.roles[v]).collect();
    let chosen: Vec<Literal> = (1..=3).map(|i| asg.chosen_literal(i)).collect();
    for i in 0..2 {
        let base = 2 + 4 * i;
        for j in 0..2 {
            assert!(
                matches!(roles[base + j], Role::LiteralEndpoint { literal, .. } if literal == chosen[i])
            );
            assert!(
                matches!(roles[base + 2 + j], Role::Aux { pair, .. } if pair == (chosen[i], chosen[i + 1]))
            );
        }
    }
}

#[test]
fn witness_emitters_refuse_falsifying_assignments() {
    let cnf = CnfFormula::new(3, sign_cube([1, 2, 3])[..1].to_vec()).unwrap();
    // the single clause is (~x1 ∨ ~x2 ∨ ~x3), false when everything is true
    let all_true = Assignment::new(vec![true; 3]);
    assert!(witness_order_mns(&cnf, &all_true).is_err());
    assert!(witness_order_mcs(&cnf, &all_true).is_err());
}
