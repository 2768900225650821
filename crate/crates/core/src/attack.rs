// SPDX-License-Identifier: Apache-2.0

//! Sampling-based edge-removal attacks on top-k centrality rankings.
//!
//! Each trial draws one snowball sample, selects candidate edges from the
//! high cores of the sampled subgraph and removes a growing prefix of them
//! (a fixed shuffle) at each percentage level of the original edge count.
//! After each level the top-k betweenness and closeness sets are recomputed
//! and compared with the unperturbed ones by Jaccard index.

use std::collections::HashSet;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::centrality::{
    betweenness_all_par, closeness_all_par, ground_truth_detailed, top_k, BetweennessVariant,
    CentralityKind, RankedSet,
};
use crate::cores::{core_decompose, high_core_vertices};
use crate::error::{Error, Result};
use crate::graph::{ordered, Edge, Graph, Vertex};
use crate::sampler::{pick_seed, snowball_sample, target_size, SeedStrategy};
use crate::scalar::Scalar;

/// Minimum edge count for which percentage schedules are meaningful.
pub const MIN_ATTACK_EDGES: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// At least one endpoint is a high-core vertex of the sample.
    #[default]
    One,
    /// Both endpoints are high-core vertices of the sample.
    Two,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::One => "1",
            Criterion::Two => "2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttackConfig {
    pub criterion: Criterion,
    /// Fractions of the original edge count, strictly increasing.
    pub percentages: Vec<f64>,
    pub trials: usize,
    pub seed_strategy: SeedStrategy,
    pub sample_fraction: f64,
    pub rng_seed: u64,
    pub k: usize,
    pub betweenness_variant: BetweennessVariant,
    pub threads: usize,
}

impl Default for AttackConfig {
    fn default() -> Self {
        AttackConfig {
            criterion: Criterion::One,
            percentages: vec![0.02, 0.04, 0.06, 0.08],
            trials: 5,
            seed_strategy: SeedStrategy::Random,
            sample_fraction: 0.10,
            rng_seed: 0,
            k: 20,
            betweenness_variant: BetweennessVariant::PerPair,
            threads: 1,
        }
    }
}

impl AttackConfig {
    pub fn validate(&self) -> Result<()> {
        if self.percentages.is_empty() {
            return Err(Error::InvalidConfig("percentages must not be empty".into()));
        }
        if self.percentages.iter().any(|&p| !(0.0..1.0).contains(&p)) {
            return Err(Error::InvalidConfig("percentages must lie in [0, 1)".into()));
        }
        if self.percentages.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig("percentages must be strictly increasing".into()));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if self.k == 0 {
            return Err(Error::InvalidConfig("k must be at least 1".into()));
        }
        if !(self.sample_fraction > 0.0 && self.sample_fraction <= 1.0) {
            return Err(Error::InvalidConfig("sample_fraction must be in (0, 1]".into()));
        }
        Ok(())
    }
}

/// `|a ∩ b| / |a ∪ b|`.
pub fn jaccard<T: Scalar>(a: &[Vertex], b: &[Vertex]) -> Result<T> {
    let a: HashSet<Vertex> = a.iter().copied().collect();
    let b: HashSet<Vertex> = b.iter().copied().collect();
    let union = a.union(&b).count();
    if union == 0 {
        return Err(Error::EmptySet("jaccard operands"));
    }
    let common = a.intersection(&b).count();
    Ok(T::from_count(common) / T::from_count(union))
}

/// High-core vertices (parent indices) of the subgraph induced by `sample`.
pub fn sample_high_cores(g: &Graph, sample: &[Vertex]) -> Result<Vec<Vertex>> {
    let sub = g.induced_subgraph(sample)?;
    if sub.graph.m() == 0 {
        return Ok(Vec::new());
    }
    let cores = core_decompose(&sub.graph);
    Ok(high_core_vertices(&cores)?
        .into_iter()
        .map(|v| sub.to_parent[v])
        .collect())
}

/// Edges of the subgraph induced by `sample` that qualify under `criterion`,
/// ascending by `(min, max)`.
pub fn candidate_edges(g: &Graph, sample: &[Vertex], criterion: Criterion) -> Result<Vec<Edge>> {
    if sample.is_empty() {
        return Err(Error::EmptySet("sample"));
    }
    let mut high = vec![false; g.n()];
    for v in sample_high_cores(g, sample)? {
        high[v] = true;
    }
    let mut inside = vec![false; g.n()];
    for &v in sample {
        inside[v] = true;
    }
    let mut edges: Vec<Edge> = Vec::new();
    for v in (0..g.n()).filter(|&v| inside[v]) {
        for &w in g.adj(v) {
            if w > v && inside[w] {
                let qualifies = match criterion {
                    Criterion::One => high[v] || high[w],
                    Criterion::Two => high[v] && high[w],
                };
                if qualifies {
                    edges.push((v, w));
                }
            }
        }
    }
    Ok(edges)
}

/// Edge count removed at a percentage level of `m`.
pub fn removal_target(percentage: f64, m: usize) -> usize {
    // guards against 0.29 * 100 = 28.999...
    (percentage * m as f64 + 1e-9).floor() as usize
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JaccardRecord<T> {
    pub trial: usize,
    pub percentage: f64,
    pub centrality: CentralityKind,
    pub jaccard: T,
    pub edges_removed: usize,
    pub fallback_used: bool,
    pub exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Aggregate<T> {
    pub percentage: f64,
    pub centrality: CentralityKind,
    pub mean: T,
    /// Sample standard deviation over trials; zero for a single trial.
    pub std: T,
    pub trials: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialSummary {
    pub trial: usize,
    pub seed: Vertex,
    pub sample_size: usize,
    pub primary_candidates: usize,
    pub fallback_candidates: usize,
    pub fallback_used: bool,
    /// Removed edges in removal order, as parent indices.
    pub removed: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttackReport<T> {
    pub config: AttackConfig,
    pub m: usize,
    pub original_top_betweenness: Vec<Vertex>,
    pub original_top_closeness: Vec<Vertex>,
    pub trials: Vec<TrialSummary>,
    pub records: Vec<JaccardRecord<T>>,
    pub aggregates: Vec<Aggregate<T>>,
}

impl<T: Scalar> AttackReport<T> {
    pub fn aggregate(&self, percentage: f64, centrality: CentralityKind) -> Option<&Aggregate<T>> {
        self.aggregates
            .iter()
            .find(|a| a.percentage == percentage && a.centrality == centrality)
    }

    pub fn long_csv(&self, dataset: &str) -> String {
        let mut out = String::from(
            "dataset,criterion,seed_strategy,trial,percentage,centrality,jaccard,edges_removed,fallback,exhausted\n",
        );
        for r in &self.records {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                dataset,
                self.config.criterion.as_str(),
                self.config.seed_strategy.as_str(),
                r.trial,
                r.percentage,
                r.centrality.as_str(),
                r.jaccard,
                r.edges_removed,
                r.fallback_used,
                r.exhausted
            );
        }
        out
    }

    /// Mean and standard deviation per (percentage, centrality).
    pub fn summary_csv(&self) -> String {
        let mut out = String::from("percentage,centrality,mean,std,trials\n");
        for a in &self.aggregates {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                a.percentage,
                a.centrality.as_str(),
                a.mean,
                a.std,
                a.trials
            );
        }
        out
    }
}

fn mean_std<T: Scalar>(values: &[T]) -> (T, T) {
    let n = T::from_count(values.len());
    let mean = values.iter().copied().sum::<T>() / n;
    if values.len() < 2 {
        return (mean, T::zero());
    }
    let ss: T = values.iter().map(|&x| (x - mean) * (x - mean)).sum();
    (mean, (ss / T::from_count(values.len() - 1)).sqrt())
}

struct Rankings {
    betweenness: RankedSet,
    closeness: RankedSet,
}

fn rankings<T: Scalar>(g: &Graph, cfg: &AttackConfig) -> Result<Rankings> {
    let bc = betweenness_all_par::<T>(g, cfg.betweenness_variant, cfg.threads);
    let cc = closeness_all_par::<T>(g, cfg.threads)?;
    Ok(Rankings {
        betweenness: top_k(&bc, cfg.k)?,
        closeness: top_k(&cc, cfg.k)?,
    })
}

/// Runs every trial of the attack described by `cfg`.
pub fn run_attack<T: Scalar>(g: &Graph, cfg: &AttackConfig) -> Result<AttackReport<T>> {
    cfg.validate()?;
    if g.m() < MIN_ATTACK_EDGES {
        return Err(Error::InvalidConfig(format!(
            "attack needs at least {MIN_ATTACK_EDGES} edges, graph has {}",
            g.m()
        )));
    }
    let truth = ground_truth_detailed::<T>(g, cfg.k, cfg.betweenness_variant, cfg.threads)?;
    let original = Rankings {
        betweenness: truth.top_betweenness,
        closeness: truth.top_closeness,
    };
    let target = target_size(g.n(), cfg.sample_fraction);

    let mut trials = Vec::with_capacity(cfg.trials);
    let mut records = Vec::new();
    for trial in 0..cfg.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
        rng.set_stream(trial as u64);

        let seed = pick_seed(g, cfg.seed_strategy, &mut rng, &HashSet::new())?;
        let sample = snowball_sample(g, seed, target, &mut rng)?;
        let loose = candidate_edges(g, &sample.order, Criterion::One)?;
        let (mut primary, mut fallback) = match cfg.criterion {
            Criterion::One => (loose, Vec::new()),
            Criterion::Two => {
                let strict = candidate_edges(g, &sample.order, Criterion::Two)?;
                let strict_set: HashSet<Edge> = strict.iter().copied().collect();
                let rest = loose.into_iter().filter(|e| !strict_set.contains(e)).collect();
                (strict, rest)
            }
        };
        primary.shuffle(&mut rng);
        fallback.shuffle(&mut rng);
        let queue: Vec<Edge> = primary.iter().chain(&fallback).copied().collect();

        let mut removed: HashSet<Edge> = HashSet::new();
        let mut next = 0;
        let mut fallback_used = false;
        for &pct in &cfg.percentages {
            let wanted = removal_target(pct, g.m());
            while removed.len() < wanted && next < queue.len() {
                removed.insert(ordered(queue[next].0, queue[next].1));
                fallback_used |= next >= primary.len();
                next += 1;
            }
            let exhausted = removed.len() < wanted;
            let (jb, jc) = if removed.is_empty() {
                (T::one(), T::one())
            } else {
                let perturbed = g.without_edges(&removed);
                let now = rankings::<T>(&perturbed, cfg)?;
                (
                    jaccard(&original.betweenness.members, &now.betweenness.members)?,
                    jaccard(&original.closeness.members, &now.closeness.members)?,
                )
            };
            for (centrality, value) in [
                (CentralityKind::Betweenness, jb),
                (CentralityKind::Closeness, jc),
            ] {
                records.push(JaccardRecord {
                    trial,
                    percentage: pct,
                    centrality,
                    jaccard: value,
                    edges_removed: removed.len(),
                    fallback_used,
                    exhausted,
                });
            }
        }
        trials.push(TrialSummary {
            trial,
            seed,
            sample_size: sample.order.len(),
            primary_candidates: primary.len(),
            fallback_candidates: fallback.len(),
            fallback_used,
            removed: queue[..next].to_vec(),
        });
    }

    let mut aggregates = Vec::new();
    for &pct in &cfg.percentages {
        for centrality in [CentralityKind::Betweenness, CentralityKind::Closeness] {
            let values: Vec<T> = records
                .iter()
                .filter(|r| r.percentage == pct && r.centrality == centrality)
                .map(|r| r.jaccard)
                .collect();
            let (mean, std) = mean_std(&values);
            aggregates.push(Aggregate {
                percentage: pct,
                centrality,
                mean,
                std,
                trials: values.len(),
            });
        }
    }

    Ok(AttackReport {
        config: cfg.clone(),
        m: g.m(),
        original_top_betweenness: original.betweenness.members,
        original_top_closeness: original.closeness.members,
        trials,
        records,
        aggregates,
    })
}
