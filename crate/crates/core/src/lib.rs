//! Multi-crossing graphs of elections: computing them, building elections
//! with a prescribed multi-crossing graph, and measuring how far an election
//! is from being single-crossing.

pub mod analyze;
pub mod construct;
pub mod election;
pub mod generate;
pub mod graph;
pub mod oracle;

pub use analyze::{
    candidate_deletion, candidate_partition, AnalysisOptions, AnalysisResult, Method,
};
pub use election::{Election, ElectionError, ParseError, SingleCrossing};
pub use graph::{GraphError, UndirectedGraph};
