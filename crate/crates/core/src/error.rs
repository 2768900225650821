// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no edges")]
    NoEdges,

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("degenerate graph: n = {n}, at least {required} vertices required")]
    DegenerateGraph { n: usize, required: usize },

    #[error("empty graph")]
    EmptyGraph,

    #[error("cluster {index} contains no high-centrality vertex")]
    EmptyCluster { index: usize },

    #[error("high-centrality set is empty")]
    EmptyHighCentralitySet,

    #[error("{0} must not be empty")]
    EmptySet(&'static str),

    #[error("every vertex is excluded")]
    AllExcluded,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
