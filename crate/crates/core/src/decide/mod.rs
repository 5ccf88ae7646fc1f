//! End-vertex deciders for the graph classes where the problem is easy, and
//! the dispatch layer choosing among them.

mod characterizations;
mod dispatch;
mod hamiltonian;
mod interval_mcs;

pub use characterizations::{
    decide_dfs_claw_net_free, decide_dfs_interval, decide_generic, decide_mcs_split,
    decide_mns_chordal, decide_unit_interval,
};
pub use dispatch::{
    dispatch_endvertex, Answer, ClassHint, ClassReport, DispatchOptions, DispatchOutcome, Route,
    NO_CHARACTERIZATION,
};
pub use hamiltonian::{hamiltonian_path_interval, is_hamiltonian_path};
pub use interval_mcs::{mcs_interval_sufficient, Sufficiency};

/// Why a decider answered no.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Two nonadjacent neighbors of the target.
    NotSimplicial {
        u: usize,
        w: usize,
    },
    /// Two minimal separators inside `N(t)` neither containing the other.
    SeparatorsNotChained {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// Two lower-degree vertices with incomparable neighborhoods.
    IncomparableNeighborhoods {
        v: usize,
        w: usize,
    },
    /// `G − N[t]` has this many components (at least two).
    RemainderDisconnected {
        components: usize,
    },
    CutVertex,
    /// `G[N(t)]` has no hamiltonian path.
    NoHamiltonianPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No(Obstruction),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            Verdict::Yes => None,
            Verdict::No(o) => Some(o),
        }
    }
}
