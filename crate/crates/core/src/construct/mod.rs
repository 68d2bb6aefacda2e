//! Elections implementing prescribed multi-crossing graphs.
//!
//! Every builder recomputes the multi-crossing graph of what it built and
//! refuses to return anything that does not match the target.

mod families;
mod general;
mod permutation;
mod ramsey;
mod tree;

use thiserror::Error;

use crate::election::{Election, ElectionError};
use crate::graph::{GraphError, UndirectedGraph};

pub use families::{implement_clique, implement_empty, implement_even_cycle, implement_path};
pub use general::{fully_single_crossing, implement_general};
pub use permutation::{implement_permutation_graph, intersect_implementations};
pub use ramsey::{ramsey_bound, ramsey_extract, RamseyKind, RamseySet};
pub use tree::{implement_tree, implement_tree_rooted};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("need at least {min} vertices, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("cycle length must be even, got {0}")]
    OddCycle(usize),
    #[error("input graph is not a tree")]
    NotATree,
    #[error("unknown root vertex {0:?}")]
    UnknownRoot(String),
    #[error("diagrams are over different vertex sets")]
    VertexMismatch,
    #[error("no order is shared by diagrams of both graphs, so no common middle voter was found")]
    NoCommonOrder,
    #[error("constructed election does not implement the target graph")]
    VerificationFailed,
    #[error(transparent)]
    Election(#[from] ElectionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An election together with the graph it was built to implement.
#[derive(Debug, Clone)]
pub struct ImplementationResult {
    pub election: Election,
    pub target: UndirectedGraph,
    /// Multi-crossing graph of `election` recomputed and equal to `target`.
    pub verified: bool,
    pub voters_used: usize,
}

impl ImplementationResult {
    /// Recomputes the multi-crossing graph and only releases a match.
    pub(crate) fn verify(
        election: Election,
        target: UndirectedGraph,
    ) -> Result<Self, ConstructionError> {
        if election.multicrossing_graph() != target {
            return Err(ConstructionError::VerificationFailed);
        }
        let voters_used = election.num_voters();
        Ok(ImplementationResult {
            election,
            target,
            verified: true,
            voters_used,
        })
    }
}
