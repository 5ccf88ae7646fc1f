//! 3-SAT to end-vertex compilers for MNS and MCS, their witness orders, and
//! a brute-force SAT oracle.

mod cnf;
mod mcs;
mod mns;

use std::fmt;

pub use cnf::{sat_bruteforce, Assignment, CnfFormula, Literal, DEFAULT_SAT_GUARD};
pub use mcs::{build_mcs_gadget, witness_order_mcs};
pub use mns::{build_mns_gadget, witness_order_mns};

use crate::graph::Graph;

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// A literal vertex of the MNS gadget.
    Literal(Literal),
    /// One end of a literal edge in the MCS gadget; `designated` marks the
    /// end wired to clause triangles.
    LiteralEndpoint {
        literal: Literal,
        index: usize,
        designated: bool,
    },
    /// 1-based clause vertex of the MNS gadget.
    Clause(usize),
    /// Vertex `slot` of the triangle of 1-based clause `clause`.
    ClauseTriangle {
        clause: usize,
        slot: usize,
    },
    /// Aux vertex joining a literal of variable `i` to one of variable `i+1`.
    Aux {
        pair: (Literal, Literal),
        index: usize,
    },
    /// Clique member attached to exactly one endpoint or aux vertex.
    KMember {
        owner: usize,
    },
    /// Clique member joined to both ends of `side`, a literal of the last variable.
    Connector {
        side: Literal,
        index: usize,
    },
    S,
    SPrime,
    B,
    T,
}

impl Role {
    /// Short identifier without whitespace, unique within a gadget.
    pub fn vertex_name(&self, id: usize) -> String {
        match *self {
            Role::Literal(l) => l.to_string(),
            Role::LiteralEndpoint { literal, index, .. } => format!("{literal}.{index}"),
            Role::Clause(j) => format!("c{j}"),
            Role::ClauseTriangle { clause, slot } => format!("c{clause}.{slot}"),
            Role::Aux {
                pair: (a, b),
                index,
            } => format!("a.{a}.{b}.{index}"),
            Role::KMember { .. } => format!("k{id}"),
            Role::Connector { side, index } => format!("k.{side}.{index}"),
            Role::S => "s".into(),
            Role::SPrime => "s'".into(),
            Role::B => "b".into(),
            Role::T => "t".into(),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Literal(l) => write!(f, "Literal({l})"),
            Role::LiteralEndpoint {
                literal,
                index,
                designated,
            } => {
                let d = if designated { ",designated" } else { "" };
                write!(f, "LiteralEndpoint({literal},{index}{d})")
            }
            Role::Clause(j) => write!(f, "Clause({j})"),
            Role::ClauseTriangle { clause, slot } => write!(f, "ClauseTriangle({clause},{slot})"),
            Role::Aux {
                pair: (a, b),
                index,
            } => write!(f, "Aux({a}|{b},{index})"),
            Role::KMember { owner } => write!(f, "KMember({owner})"),
            Role::Connector { side, index } => write!(f, "Connector({side},{index})"),
            Role::S => f.write_str("S"),
            Role::SPrime => f.write_str("SPrime"),
            Role::B => f.write_str("B"),
            Role::T => f.write_str("T"),
        }
    }
}

/// A compiled reduction instance.
#[derive(Debug, Clone)]
pub struct GadgetArtifact {
    pub graph: Graph,
    pub target: usize,
    /// `roles[v]` for every vertex `v`.
    pub roles: Vec<Role>,
}

impl GadgetArtifact {
    pub fn vertex_names(&self) -> Vec<String> {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| r.vertex_name(v))
            .collect()
    }

    /// The first vertex whose role satisfies `pred`.
    pub fn find(&self, pred: impl Fn(&Role) -> bool) -> Option<usize> {
        self.roles.iter().position(pred)
    }

    /// All vertices whose role satisfies `pred`, ascending.
    pub fn filter(&self, pred: impl Fn(&Role) -> bool) -> Vec<usize> {
        (0..self.roles.len())
            .filter(|&v| pred(&self.roles[v]))
            .collect()
    }

    /// One `id role` line per vertex.
    pub fn role_sidecar(&self) -> String {
        let mut out = String::new();
        for (v, r) in self.roles.iter().enumerate() {
            out.push_str(&format!("{v} {r}\n"));
        }
        out
    }
}
