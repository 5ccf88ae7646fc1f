//! Graph searches and their end-vertex problem.
//!
//! The crate models the seven classic searches (Generic, BFS, DFS, LBFS,
//! LDFS, MCS, MNS) as eligibility rules over prefixes, recognizes the chordal
//! graph classes on which end-vertices can be decided quickly, implements
//! those deciders, and supplies an exhaustive oracle plus the two 3-SAT
//! reductions showing the general MNS and MCS problems are NP-complete.

pub mod decide;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod recognize;
pub mod reduction;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, VertexOrdering, VertexSet};
pub use search::{
    eligible_set, run_search, validate_order, SearchKind, SearchPrefix, TieBreakPolicy, Validation,
};
