//! Paired approximation algorithms on graphs and set systems.
//!
//! One input defines two optimization problems; every algorithm here returns
//! a certificate for one (or both) of them, together with the exact threshold
//! that drove the choice. Exact exponential-time oracles and a standalone
//! certificate verifier back every claimed value.

pub mod amplify;
pub mod cert;
pub mod color_path;
pub mod corpus;
pub mod dfs;
pub mod directed;
pub mod gadgets;
pub mod graph;
pub mod hadwiger;
pub mod oracle;
pub mod ramsey;
pub mod ratio;
pub mod set_system;
pub mod solution;
pub mod tsp_mis;

pub use graph::{Digraph, Graph, ParseError};
pub use ratio::Ratio;
pub use set_system::SetSystem;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex counts differ: {left} vs {right}")]
    MismatchedSizes { left: usize, right: usize },
    #[error("epsilon {eps} out of range, expected {expected}")]
    EpsOutOfRange { eps: String, expected: &'static str },
    #[error("{what}: size {n} exceeds oracle limit {max}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("subgraph has minimum degree {found}, required {required}")]
    MinDegreeTooLow { required: usize, found: usize },
    #[error("amplification parameter k must be at least 1")]
    BadAmplification,
    #[error("pullback requires k > number of base sets ({num_sets}), got k = {k}")]
    PullbackParameter { k: usize, num_sets: usize },
    #[error("no bipartite piece with bound {f} found for half size {half} after {tries} attempts")]
    PieceVerification { half: usize, f: usize, tries: usize },
    #[error("{0}")]
    BadInput(String),
    #[error("empty forest")]
    EmptyForest,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
