// SPDX-License-Identifier: Apache-2.0

//! Scattered rich-club analysis of undirected networks.
//!
//! The crate computes exact closeness and betweenness centrality, k-core
//! decompositions, the clusters formed around the top-k central vertices and
//! their degree of scatteredness. It also predicts high-centrality vertices
//! from snowball samples and simulates edge-removal attacks that target the
//! high cores of a sample.
//!
//! Score-valued results are generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix them to `f64`.

pub mod attack;
pub mod centrality;
pub mod cores;
pub mod error;
pub mod generators;
pub mod graph;
pub mod clubs;
pub mod sampler;
pub mod scalar;

pub use attack::{candidate_edges, jaccard, run_attack, AttackConfig, Criterion};
pub use centrality::{
    betweenness_all, closeness_all, ground_truth, top_k, BetweennessVariant, CentralityKind,
    HighCentralitySet, RankedSet,
};
pub use cores::{core_decompose, high_core_vertices, CoreDecomposition};
pub use error::{Error, Result};
pub use graph::{bfs_distances, clustering_coefficient, parse_edge_list, Edge, Graph, Vertex};
pub use clubs::{build_clusters, scatteredness, ClusterSet};
pub use sampler::{
    expansion_ratio, pick_seed, predict_high_centrality, score_prediction, snowball_sample,
    SamplerConfig, SeedStrategy,
};
pub use scalar::Scalar;

pub type CentralityScores = centrality::CentralityScores<f64>;
pub type GroundTruth = centrality::GroundTruth<f64>;
pub type ScatterednessReport = clubs::ScatterednessReport<f64>;
pub type PredictionResult = sampler::PredictionResult<f64>;
pub type AttackReport = attack::AttackReport<f64>;
pub type JaccardRecord = attack::JaccardRecord<f64>;
